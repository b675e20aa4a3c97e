//! Canonical ideals, duality, symmetry, stability and self-duality, and the
//! classification of local good semigroups all of whose intermediate good
//! semigroups are symmetric.

use thiserror::Error;

use crate::ideal::IdealError;
use crate::lattice::{Box, IdealRep, LatticeError, LatticePoint};
use crate::semigroup::GoodSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("the semigroup is not local")]
    NotLocal,
    #[error("the given ideal is not a canonical ideal of the semigroup")]
    KNotCanonical,
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: usize },
    #[error("classification conditions disagree for {semigroup}: symmetry test {symmetric}, shape test {shape}")]
    EquivalenceViolated {
        semigroup: String,
        symmetric: bool,
        shape: bool,
    },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `K_S^0 = {α | Δ^S(τ_S − α) = ∅}`.
pub fn canonical_ideal(s: &GoodSemigroup) -> IdealRep {
    let gamma = s.gamma();
    let bx = Box::new(-gamma, gamma.clone()).expect("γ ≥ 0");
    canonical_ideal_on(s, &bx)
}

/// `K_S^0` scanned on an explicit window (which must contain `[0, γ_S]`).
///
/// Every member of `K_S^0` is non-negative: for `α_i < 0` the member
/// `γ_S + (γ_S − α)_i e_i`-type points of the conductor lie in
/// `Δ^S_i(τ_S − α)`.
pub fn canonical_ideal_on(s: &GoodSemigroup, window: &Box) -> IdealRep {
    let tau = s.tau();
    IdealRep::from_window(window, |a| {
        let diff: Vec<i64> = tau.coords().iter().zip(a).map(|(t, x)| t - x).collect();
        !s.meets_delta_union(&LatticePoint::from(diff), false)
    })
    .expect("canonical ideal contains its conductor")
}

/// `K_S^0 − E = {α | Δ^E(τ_S − α) = ∅}` for a good ideal `E`.
pub fn normalized_dual(s: &GoodSemigroup, e: &IdealRep) -> Result<IdealRep, DualityError> {
    crate::lattice::check_len(s.branches(), e.branches())?;
    let tau = s.tau();
    let bx = Box::new(-e.gamma(), s.gamma() - e.mu())?;
    Ok(IdealRep::from_window(&bx, |a| {
        let diff: Vec<i64> = tau.coords().iter().zip(a).map(|(t, x)| t - x).collect();
        !e.meets_delta_union(&LatticePoint::from(diff), false)
    })?)
}

/// `K − E` for a canonical ideal `K = α + K_S^0`.
pub fn dual(s: &GoodSemigroup, k: &IdealRep, e: &IdealRep) -> Result<IdealRep, DualityError> {
    if !is_canonical_ideal(s, k) {
        return Err(DualityError::KNotCanonical);
    }
    Ok(normalized_dual(s, e)?.shift(&(k.gamma() - s.gamma())))
}

/// `K` is canonical iff `(γ_S − γ_K) + K = K_S^0`.
pub fn is_canonical_ideal(s: &GoodSemigroup, k: &IdealRep) -> bool {
    if k.branches() != s.branches() {
        return false;
    }
    k.shift(&(s.gamma() - k.gamma())) == canonical_ideal(s)
}

/// `S = K_S^0`.
pub fn is_symmetric(s: &GoodSemigroup) -> bool {
    *s.rep() == canonical_ideal(s)
}

/// `E = μ_E + (E − E)`.
pub fn is_stable(e: &IdealRep) -> Result<bool, DualityError> {
    Ok(e.difference(e)?.shift(e.mu()) == *e)
}

/// `γ_K − γ_E − μ_E + E = K − E`.
pub fn is_self_dual(s: &GoodSemigroup, e: &IdealRep, k: &IdealRep) -> Result<bool, DualityError> {
    if !is_canonical_ideal(s, k) {
        return Err(DualityError::KNotCanonical);
    }
    let offset = &(k.gamma() - e.gamma()) - e.mu();
    Ok(e.shift(&offset) == k.difference(e)?)
}

/// The three equivalent conditions on a good ideal `E`:
/// (a) `E − E` is a symmetric good semigroup, (b) `E` is stable and a
/// canonical ideal of `E − E`, (c) `E` is stable and self-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDualityConditions {
    pub symmetric_endomorphisms: bool,
    pub canonical_for_endomorphisms: bool,
    pub stable_self_dual: bool,
}

impl SelfDualityConditions {
    pub fn agree(&self) -> bool {
        self.symmetric_endomorphisms == self.canonical_for_endomorphisms
            && self.canonical_for_endomorphisms == self.stable_self_dual
    }
}

pub fn self_duality_conditions(
    s: &GoodSemigroup,
    e: &IdealRep,
) -> Result<SelfDualityConditions, DualityError> {
    let ee = GoodSemigroup::new(e.difference(e)?).ok();
    let stable = is_stable(e)?;
    let k = canonical_ideal(s);
    Ok(SelfDualityConditions {
        symmetric_endomorphisms: ee.as_ref().is_some_and(is_symmetric),
        canonical_for_endomorphisms: stable
            && ee.as_ref().is_some_and(|g| is_canonical_ideal(g, e)),
        stable_self_dual: stable && is_self_dual(s, e, &k)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerKind {
    /// `⟨2, n+1⟩` with `n` even.
    NumericalTwoGen(i64),
    /// `⟨1⟩ ∪ (((n+1)/2, (n+1)/2) + N^2)` with `n` odd.
    TwoBranchDiagonal(i64),
    NotClassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedCondition {
    NotSymmetric,
    DifferenceNotGood,
    DifferenceNotSymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub kind: TowerKind,
    /// The semigroup rebuilt from `kind`, equal to the input.
    pub reconstructed: Option<GoodSemigroup>,
    pub failed: Option<FailedCondition>,
    /// `n = 0`, i.e. `S = N`.
    pub degenerate: bool,
}

/// Decides whether `S` and `M_S − M_S` are symmetric good semigroups and,
/// independently, whether `S` has one of the two normal forms; the two
/// answers must coincide.
pub fn classify_tower(s: &GoodSemigroup) -> Result<ClassificationResult, DualityError> {
    if !s.is_local() {
        return Err(DualityError::NotLocal);
    }
    let failed = symmetry_failure(s)?;
    let shape = match_shape(s);
    if failed.is_none() != shape.is_some() {
        return Err(DualityError::EquivalenceViolated {
            semigroup: s.to_string(),
            symmetric: failed.is_none(),
            shape: shape.is_some(),
        });
    }
    Ok(match shape {
        Some((kind, rebuilt)) => ClassificationResult {
            kind,
            reconstructed: Some(rebuilt),
            failed: None,
            degenerate: kind == TowerKind::NumericalTwoGen(0),
        },
        None => ClassificationResult {
            kind: TowerKind::NotClassified,
            reconstructed: None,
            failed,
            degenerate: false,
        },
    })
}

fn symmetry_failure(s: &GoodSemigroup) -> Result<Option<FailedCondition>, DualityError> {
    if !is_symmetric(s) {
        return Ok(Some(FailedCondition::NotSymmetric));
    }
    let m = s.maximal_ideal()?;
    let Ok(mm) = GoodSemigroup::new(m.difference(&m)?) else {
        return Ok(Some(FailedCondition::DifferenceNotGood));
    };
    if !is_symmetric(&mm) {
        return Ok(Some(FailedCondition::DifferenceNotSymmetric));
    }
    Ok(None)
}

fn match_shape(s: &GoodSemigroup) -> Option<(TowerKind, GoodSemigroup)> {
    let g = s.gamma();
    match s.branches() {
        1 => {
            let n = g[0];
            let candidate = GoodSemigroup::two_generated(n).ok()?;
            (candidate == *s).then_some((TowerKind::NumericalTwoGen(n), candidate))
        }
        2 if g[0] == g[1] => {
            let candidate = GoodSemigroup::diagonal(g[0]).ok()?;
            (candidate == *s).then_some((TowerKind::TwoBranchDiagonal(2 * g[0] - 1), candidate))
        }
        _ => None,
    }
}

/// `S` and `M_S − M_S` are symmetric (equivalently, `S` has a normal form).
pub fn theorem26_semigroup_condition(s: &GoodSemigroup) -> Result<bool, DualityError> {
    Ok(classify_tower(s)?.kind != TowerKind::NotClassified)
}

pub const DEFAULT_TOWER_BUDGET: usize = 1_000_000;

/// All good semigroups `S′` with `S ⊆ S′ ⊆ N^I`.
///
/// Every such `S′` is determined by its members in `[0, γ_S]` under the
/// cone rule. The search decides the gaps of `S` in row-major order and
/// closes every inclusion under clamped addition and infima; (E2) is tested
/// on the leaves. `budget` bounds the number of search nodes.
pub fn enumerate_intermediate_good(
    s: &GoodSemigroup,
    budget: usize,
) -> Result<Vec<GoodSemigroup>, DualityError> {
    let bx = s.bounding_box();
    let n = bx.len();
    let gaps: Vec<usize> = (0..n).filter(|&k| !s.table()[k]).collect();
    let mut search = TowerSearch {
        bx: &bx,
        gamma: s.gamma().clone(),
        budget,
        nodes: 0,
        out: Vec::new(),
    };
    let state = s.table().to_vec();
    let excluded = vec![false; n];
    search.visit(&gaps, 0, state, excluded)?;
    Ok(search.out)
}

struct TowerSearch<'a> {
    bx: &'a Box,
    gamma: LatticePoint,
    budget: usize,
    nodes: usize,
    out: Vec<GoodSemigroup>,
}

impl TowerSearch<'_> {
    fn visit(
        &mut self,
        gaps: &[usize],
        next: usize,
        state: Vec<bool>,
        excluded: Vec<bool>,
    ) -> Result<(), DualityError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(DualityError::BudgetExceeded {
                budget: self.budget,
            });
        }
        let Some(pos) = gaps[next..].iter().position(|&g| !state[g] && !excluded[g]) else {
            let rep = IdealRep::from_table(self.bx.clone(), state)?;
            if let Ok(sg) = GoodSemigroup::new(rep) {
                self.out.push(sg);
            }
            return Ok(());
        };
        let g = gaps[next + pos];
        if let Some(included) = self.close(&state, &excluded, g) {
            self.visit(gaps, next + pos + 1, included, excluded.clone())?;
        }
        let mut excluded = excluded;
        excluded[g] = true;
        self.visit(gaps, next + pos + 1, state, excluded)
    }

    /// Adds `g` and closes under `inf(a + b, γ)` and `inf(a, b)`; `None` if
    /// the closure hits an excluded point.
    fn close(&self, state: &[bool], excluded: &[bool], g: usize) -> Option<Vec<bool>> {
        let mut state = state.to_vec();
        let mut queue = vec![g];
        state[g] = true;
        while let Some(k) = queue.pop() {
            let a = self.bx.point_at(k);
            let members: Vec<usize> = (0..state.len()).filter(|&m| state[m]).collect();
            for m in members {
                let b = self.bx.point_at(m);
                for c in [(&a + &b).inf(&self.gamma), a.inf(&b)] {
                    let idx = self.bx.index_of(c.coords());
                    if !state[idx] {
                        if excluded[idx] {
                            return None;
                        }
                        state[idx] = true;
                        queue.push(idx);
                    }
                }
            }
        }
        Some(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(g: &[i64]) -> GoodSemigroup {
        GoodSemigroup::numerical(g).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let s = ns(&[2, 7]);
        assert_eq!(canonical_ideal(&s), *s.rep());
        let g = ns(&[4, 6, 11, 13]);
        let k = canonical_ideal(&g);
        let members: Vec<i64> = (0..=14).filter(|&v| k.contains_coords(&[v])).collect();
        assert_eq!(members, vec![0, 2, 4, 6, 7, 8, 10, 11, 12, 13, 14]);
        assert_eq!(k.gamma(), g.gamma());
        let full = GoodSemigroup::full(2);
        assert_eq!(canonical_ideal(&full), *full.rep());
    }

    #[test]
    fn dual_examples() {
        let g = ns(&[4, 6, 11, 13]);
        let k = canonical_ideal(&g);
        assert_eq!(dual(&g, &k, g.rep()).unwrap(), k);
        let m = g.maximal_ideal().unwrap();
        let km = dual(&g, &k, &m).unwrap();
        assert_eq!(dual(&g, &k, &km).unwrap(), m);
        assert_eq!(km, k.difference(&m).unwrap());
        let s = ns(&[2, 7]);
        let ms = s.maximal_ideal().unwrap();
        assert_eq!(dual(&s, s.rep(), &ms).unwrap(), *ns(&[2, 5]).rep());
        assert_eq!(dual(&g, g.rep(), &m), Err(DualityError::KNotCanonical));
    }

    #[test]
    fn canonical_and_symmetric_predicates() {
        let g = ns(&[4, 6, 11, 13]);
        let k = canonical_ideal(&g);
        assert!(is_canonical_ideal(&g, &k));
        assert!(is_canonical_ideal(&g, &k.shift(&LatticePoint::from([-7]))));
        assert!(!is_canonical_ideal(&g, g.rep()));
        assert!(is_symmetric(&ns(&[2, 7])));
        assert!(!is_symmetric(&g));
        assert!(is_symmetric(&GoodSemigroup::diagonal(5).unwrap()));
    }

    #[test]
    fn stability_and_self_duality() {
        let s = ns(&[2, 3]);
        assert!(is_stable(s.rep()).unwrap());
        assert!(is_stable(&s.maximal_ideal().unwrap()).unwrap());
        let g = ns(&[4, 6, 11, 13]);
        let mg = g.maximal_ideal().unwrap();
        // M = 4 + <2,7> is stable even though the ring ideal is not.
        assert!(is_stable(&mg).unwrap());
        let k = canonical_ideal(&g);
        // K − K = S, so K is self-dual only for symmetric S.
        assert!(!is_self_dual(&g, &k, &k).unwrap());
        let s27 = ns(&[2, 7]);
        let k27 = canonical_ideal(&s27);
        assert!(is_self_dual(&s27, &k27, &k27).unwrap());
        assert!(is_self_dual(&g, &mg, &k).unwrap());
        let m3 = ns(&[3, 4]).maximal_ideal().unwrap();
        assert!(!is_self_dual(&ns(&[3, 4]), &m3, &canonical_ideal(&ns(&[3, 4]))).unwrap());
        let m5 = ns(&[3, 5, 7]).maximal_ideal().unwrap();
        assert!(is_stable(&m5).unwrap());
        let m6 = ns(&[4, 5, 11]).maximal_ideal().unwrap();
        assert!(!is_stable(&m6).unwrap());
        assert!(is_self_dual(&s27, &s27.maximal_ideal().unwrap(), s27.rep()).unwrap());
    }

    #[test]
    fn classification_examples() {
        let r = classify_tower(&ns(&[2, 7])).unwrap();
        assert_eq!(r.kind, TowerKind::NumericalTwoGen(6));
        let r = classify_tower(&GoodSemigroup::diagonal(5).unwrap()).unwrap();
        assert_eq!(r.kind, TowerKind::TwoBranchDiagonal(9));
        let r = classify_tower(&ns(&[3, 4])).unwrap();
        assert_eq!(r.kind, TowerKind::NotClassified);
        assert_eq!(r.failed, Some(FailedCondition::DifferenceNotSymmetric));
        let r = classify_tower(&GoodSemigroup::full(1)).unwrap();
        assert_eq!(r.kind, TowerKind::NumericalTwoGen(0));
        assert!(r.degenerate);
        assert_eq!(
            classify_tower(&GoodSemigroup::full(2)),
            Err(DualityError::NotLocal)
        );
    }

    #[test]
    fn intermediate_semigroups() {
        let found = enumerate_intermediate_good(&ns(&[2, 7]), DEFAULT_TOWER_BUDGET).unwrap();
        let mut labels: Vec<String> = found.iter().map(|s| s.to_string()).collect();
        labels.sort();
        assert_eq!(labels, vec!["<1>", "<2,3>", "<2,5>", "<2,7>"]);
        let full = GoodSemigroup::full(2);
        assert_eq!(enumerate_intermediate_good(&full, 10).unwrap(), vec![full]);
        assert_eq!(
            enumerate_intermediate_good(&ns(&[5, 7, 9]), 3),
            Err(DualityError::BudgetExceeded { budget: 3 })
        );
    }
}
