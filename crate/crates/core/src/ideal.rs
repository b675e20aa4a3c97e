//! Arithmetic of semigroup ideals: shifts, sums, differences, truncations,
//! projections, products, maximal ideals, localization and the semilocal
//! decomposition.
//!
//! Sums and differences return plain representations; they need not be good
//! and callers run [`IdealRep::check_axioms`] when it matters.

use thiserror::Error;

use crate::lattice::{for_each_in_ranges, Box, IdealRep, LatticeError, LatticePoint};
use crate::semigroup::GoodSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("projection onto an empty index set")]
    EmptyProjection,
    #[error("the given ideal is not a maximal ideal of the semigroup")]
    NotMaximal,
    #[error("the components do not recombine to the input")]
    RecombinationMismatch,
}

impl IdealRep {
    /// `α + E`.
    pub fn shift(&self, alpha: &LatticePoint) -> IdealRep {
        assert_eq!(alpha.branches(), self.branches(), "shift length mismatch");
        let bx = self.bounding_box().translate(alpha);
        IdealRep::from_table(bx, self.table().to_vec())
            .expect("translation keeps a valid representation")
    }

    /// `E + F = {α + β | α ∈ E, β ∈ F}`.
    ///
    /// Membership of the sum is decided by `inf(·, γ_E + γ_F)`. Summands of
    /// points in that box are bounded by `γ_E + γ_F − μ_F` resp.
    /// `γ_E + γ_F − μ_E`.
    pub fn sum(&self, other: &IdealRep) -> Result<IdealRep, IdealError> {
        crate::lattice::check_len(self.branches(), other.branches())?;
        let top = self.gamma() + other.gamma();
        let bx = Box::new(self.mu() + other.mu(), top.clone())?;
        let mut flags = vec![false; bx.len()];
        let left = self.members_in(&Box::new(self.mu().clone(), &top - other.mu())?);
        let right = other.members_in(&Box::new(other.mu().clone(), &top - self.mu())?);
        for a in &left {
            for b in &right {
                let c = a + b;
                if c.leq(&top) {
                    flags[bx.index_of(c.coords())] = true;
                }
            }
        }
        Ok(IdealRep::from_table(bx, flags)?)
    }

    /// `E − F = {α | α + F ⊂ E}`.
    ///
    /// Candidates range over `[μ_E − γ_F, γ_E − μ_F]`. For a candidate `α`
    /// only members `f ≤ δ(α)` with `δ(α) = sup(γ_F, γ_E − α)` need testing:
    /// larger coordinates of `f` do not change membership of `α + f`.
    pub fn difference(&self, other: &IdealRep) -> Result<IdealRep, IdealError> {
        crate::lattice::check_len(self.branches(), other.branches())?;
        let lo = self.mu() - other.gamma();
        let hi = self.gamma() - other.mu();
        let bx = Box::new(lo, hi)?;
        let s = self.branches();
        let flags: Vec<bool> = bx
            .points()
            .map(|alpha| {
                let delta: Vec<i64> = (0..s)
                    .map(|i| other.gamma()[i].max(self.gamma()[i] - alpha[i]))
                    .collect();
                let mut shifted = vec![0; s];
                for_each_in_ranges(other.mu().coords(), &delta, |f| {
                    if !other.contains_coords(f) {
                        return true;
                    }
                    for i in 0..s {
                        shifted[i] = alpha[i] + f[i];
                    }
                    self.contains_coords(&shifted)
                })
            })
            .collect();
        Ok(IdealRep::from_table(bx, flags)?)
    }

    /// `C_E = γ_E + N^I`.
    pub fn conductor_ideal(&self) -> IdealRep {
        IdealRep::cone(self.gamma().clone())
    }

    /// `E^α = {β ∈ E | β ≥ α}`.
    pub fn upper_truncation(&self, alpha: &LatticePoint) -> Result<IdealRep, LatticeError> {
        crate::lattice::check_len(self.branches(), alpha.branches())?;
        let bx = Box::new(self.mu().sup(alpha), self.gamma().sup(alpha))?;
        IdealRep::from_window(&bx, |p| self.contains_coords(p))
    }

    /// Image under the coordinate projection onto `indices` (kept in the
    /// given order).
    pub fn projection(&self, indices: &[usize]) -> Result<IdealRep, IdealError> {
        if indices.is_empty() {
            return Err(IdealError::EmptyProjection);
        }
        let s = self.branches();
        if let Some(&bad) = indices.iter().find(|&&i| i >= s) {
            return Err(LatticeError::BranchOutOfRange {
                index: bad,
                branches: s,
            }
            .into());
        }
        let bx = Box::new(self.mu().restrict(indices), self.gamma().restrict(indices))?;
        let mut flags = vec![false; bx.len()];
        for m in self.box_members() {
            flags[bx.index_of(m.restrict(indices).coords())] = true;
        }
        Ok(IdealRep::from_table(bx, flags)?)
    }

    /// Cartesian product `E × F ⊂ Z^{I ⊔ J}` (coordinates of `E` first).
    pub fn product(&self, other: &IdealRep) -> IdealRep {
        let join = |a: &LatticePoint, b: &LatticePoint| {
            let mut v = a.coords().to_vec();
            v.extend_from_slice(b.coords());
            LatticePoint::from(v)
        };
        let bx = Box::new(
            join(self.mu(), other.mu()),
            join(self.gamma(), other.gamma()),
        )
        .unwrap();
        let s = self.branches();
        IdealRep::from_window(&bx, |p| {
            self.contains_coords(&p[..s]) && other.contains_coords(&p[s..])
        })
        .expect("product of representations")
    }

    /// `E ∪ F`.
    pub fn union(&self, other: &IdealRep) -> Result<IdealRep, LatticeError> {
        crate::lattice::check_len(self.branches(), other.branches())?;
        let bx = Box::new(self.mu().inf(other.mu()), self.gamma().sup(other.gamma()))?;
        IdealRep::from_window(&bx, |p| self.contains_coords(p) || other.contains_coords(p))
    }
}

impl GoodSemigroup {
    /// `S1 × S2`.
    pub fn product(&self, other: &GoodSemigroup) -> GoodSemigroup {
        GoodSemigroup::new_unchecked(self.rep().product(other.rep()))
    }
}

/// A maximal ideal `S^{e_i}` together with the set `I_M = {i | 0 ∈ M_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalIdeal {
    pub ideal: IdealRep,
    /// Branches on which `M` still contains a zero coordinate.
    pub zero_branches: Vec<usize>,
}

impl MaximalIdeal {
    /// `I \ I_M`, the branches kept by localization.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ideal.branches())
            .filter(|i| !self.zero_branches.contains(i))
            .collect()
    }
}

/// `Max(S) = {S^{e_i} | i ∈ I}`, without repetitions, in branch order.
pub fn maximal_ideals(s: &GoodSemigroup) -> Vec<MaximalIdeal> {
    let n = s.branches();
    let mut out: Vec<MaximalIdeal> = Vec::new();
    for i in 0..n {
        let m = s
            .upper_truncation(&LatticePoint::unit(n, i))
            .expect("truncation of a good semigroup is good");
        if out.iter().any(|o| o.ideal == m) {
            continue;
        }
        let zero_branches = (0..n)
            .filter(|&j| {
                m.projection(&[j])
                    .map(|p| p.contains_coords(&[0]))
                    .unwrap_or(false)
            })
            .collect();
        out.push(MaximalIdeal {
            ideal: m,
            zero_branches,
        });
    }
    out
}

/// `E_M`: projection onto `I \ I_M`.
pub fn localize(s: &GoodSemigroup, e: &IdealRep, m: &IdealRep) -> Result<IdealRep, IdealError> {
    let max = maximal_ideals(s)
        .into_iter()
        .find(|cand| &cand.ideal == m)
        .ok_or(IdealError::NotMaximal)?;
    e.projection(&max.support())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionComponent {
    pub maximal: MaximalIdeal,
    /// Branches of the component, ascending.
    pub branches: Vec<usize>,
    pub local: IdealRep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub components: Vec<DecompositionComponent>,
}

impl DecompositionResult {
    /// Cartesian recombination over the index partition.
    pub fn recombine(&self) -> Result<IdealRep, IdealError> {
        let total: usize = self.components.iter().map(|c| c.branches.len()).sum();
        let mut lo = vec![0; total];
        let mut hi = vec![0; total];
        for c in &self.components {
            for (k, &b) in c.branches.iter().enumerate() {
                if b >= total {
                    return Err(IdealError::RecombinationMismatch);
                }
                lo[b] = c.local.mu()[k];
                hi[b] = c.local.gamma()[k];
            }
        }
        let bx = Box::new(LatticePoint::from(lo), LatticePoint::from(hi))?;
        Ok(IdealRep::from_window(&bx, |p| {
            self.components.iter().all(|c| {
                let q: Vec<i64> = c.branches.iter().map(|&b| p[b]).collect();
                c.local.contains_coords(&q)
            })
        })?)
    }
}

/// `E = ∏_{M ∈ Max(S)} E_M`, verified by recombination.
pub fn decompose(s: &GoodSemigroup, e: &IdealRep) -> Result<DecompositionResult, IdealError> {
    let components = maximal_ideals(s)
        .into_iter()
        .map(|m| {
            let branches = m.support();
            let local = e.projection(&branches)?;
            Ok(DecompositionComponent {
                maximal: m,
                branches,
                local,
            })
        })
        .collect::<Result<Vec<_>, IdealError>>()?;
    let result = DecompositionResult { components };
    let mut seen: Vec<usize> = result
        .components
        .iter()
        .flat_map(|c| c.branches.clone())
        .collect();
    seen.sort_unstable();
    if seen != (0..e.branches()).collect::<Vec<_>>() || &result.recombine()? != e {
        return Err(IdealError::RecombinationMismatch);
    }
    Ok(result)
}
