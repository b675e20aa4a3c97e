//! Algebroid curves given by explicit parametrizations over the rationals and
//! the value semigroups of their rings and fractional ideals.
//!
//! A curve is presented by ring generators `x_k ∈ ∏_i Q[t_i]`. Its ring and
//! ideals are represented by their images modulo a truncation, as exact
//! rational subspaces ([`TruncatedModule`]); values are read off by the
//! dimension-drop rule.

mod colon;
mod module;
mod poly;

use thiserror::Error;

pub use colon::{
    blowup_chain, colon_module, colon_values, gorenstein_report, ideal_power, ideal_product,
    theorem26_report, BlowupReport, GorensteinReport, Theorem26Report, DEFAULT_BLOWUP_BUDGET,
};
pub use module::{Layout, TruncatedModule};
pub use poly::{rational, BranchVector, Poly, Rational};

use crate::duality::DualityError;
use crate::ideal::IdealError;
use crate::lattice::{AxiomReport, Box, IdealRep, LatticeError, LatticePoint};
use crate::semigroup::{GoodSemigroup, SemigroupError};

pub const DEFAULT_MARGIN: i64 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("ring generator {index} has a non-zero component of order {order} < 1")]
    NonLocalPresentation { index: usize, order: i64 },
    #[error("expected {expected} branch components, found {found}")]
    BranchMismatch { expected: usize, found: usize },
    #[error("the ideal has no regular generator")]
    NotRegular,
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("window {window} exceeds the truncation limit {limit}")]
    WindowExceedsTruncation { window: Box, limit: LatticePoint },
    #[error("term of exponent {exponent} on branch {branch} lies below the module layout")]
    BelowLayout { branch: usize, exponent: i64 },
    #[error("computed values violate the axioms:\n{0}")]
    NotGood(std::boxed::Box<AxiomReport>),
    #[error("no stabilization within {budget} powers")]
    NoStabilization { budget: usize },
    #[error("the truncation must be positive")]
    ZeroTruncation,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Duality(#[from] DualityError),
}

/// `Q[[x_1, …, x_m]] ⊂ ∏_i Q[[t_i]]` for explicit generators `x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebroidCurve {
    uniformizers: Vec<String>,
    generators: Vec<BranchVector>,
    truncation: usize,
    margin: i64,
}

impl AlgebroidCurve {
    /// Checks that every generator lies in the maximal ideal, i.e. every
    /// non-zero component has order at least 1.
    pub fn new(
        uniformizers: Vec<String>,
        generators: Vec<BranchVector>,
        truncation: Option<usize>,
    ) -> Result<Self, CurveError> {
        let s = uniformizers.len();
        if s == 0 {
            return Err(LatticeError::NoBranches.into());
        }
        for (index, g) in generators.iter().enumerate() {
            if g.branches() != s {
                return Err(CurveError::BranchMismatch {
                    expected: s,
                    found: g.branches(),
                });
            }
            if let Some(order) = g
                .components()
                .iter()
                .filter_map(|p| p.order())
                .find(|&o| o < 1)
            {
                return Err(CurveError::NonLocalPresentation { index, order });
            }
        }
        let truncation = match truncation {
            Some(0) => return Err(CurveError::ZeroTruncation),
            Some(d) => d,
            None => default_truncation(&generators),
        };
        Ok(AlgebroidCurve {
            uniformizers,
            generators,
            truncation,
            margin: DEFAULT_MARGIN,
        })
    }

    /// One-branch curve `Q[[t^{a_1}, …]]` from monomial generators.
    pub fn monomial(exponents: &[i64], truncation: Option<usize>) -> Result<Self, CurveError> {
        let gens = exponents
            .iter()
            .map(|&e| BranchVector(vec![Poly::monomial(e, rational(1))]))
            .collect();
        AlgebroidCurve::new(vec!["t".to_string()], gens, truncation)
    }

    pub fn with_margin(mut self, margin: i64) -> Self {
        self.margin = margin;
        self
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        self.truncation = truncation.max(1);
        self
    }

    pub fn branches(&self) -> usize {
        self.uniformizers.len()
    }

    pub fn uniformizers(&self) -> &[String] {
        &self.uniformizers
    }

    pub fn generators(&self) -> &[BranchVector] {
        &self.generators
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn margin(&self) -> i64 {
        self.margin
    }

    /// The ideal `R` itself.
    pub fn unit_ideal(&self) -> FractionalIdealPresentation {
        FractionalIdealPresentation {
            generators: vec![BranchVector::one(self.branches())],
        }
    }

    /// `m_R`, generated by the ring generators.
    pub fn maximal_ideal(&self) -> FractionalIdealPresentation {
        FractionalIdealPresentation {
            generators: self.generators.clone(),
        }
    }
}

/// Four times the largest finite generator order, plus room for twice the
/// default margin.
pub fn default_truncation(generators: &[BranchVector]) -> usize {
    let max = generators
        .iter()
        .flat_map(|g| g.components().iter().filter_map(|p| p.order()))
        .max()
        .unwrap_or(1);
    (4 * max.max(1) + 2 * DEFAULT_MARGIN) as usize
}

/// A fractional ideal `Σ R g_k` given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalIdealPresentation {
    generators: Vec<BranchVector>,
}

impl FractionalIdealPresentation {
    pub fn new(generators: Vec<BranchVector>) -> Result<Self, CurveError> {
        let s = generators
            .first()
            .map(|g| g.branches())
            .ok_or(CurveError::NotRegular)?;
        if let Some(g) = generators.iter().find(|g| g.branches() != s) {
            return Err(CurveError::BranchMismatch {
                expected: s,
                found: g.branches(),
            });
        }
        if !generators.iter().any(|g| g.is_regular()) {
            return Err(CurveError::NotRegular);
        }
        Ok(FractionalIdealPresentation { generators })
    }

    pub fn generators(&self) -> &[BranchVector] {
        &self.generators
    }

    pub fn branches(&self) -> usize {
        self.generators[0].branches()
    }

    /// Smallest exponent per branch over all generators.
    pub fn lower_orders(&self) -> Vec<i64> {
        (0..self.branches())
            .map(|i| {
                self.generators
                    .iter()
                    .filter_map(|g| g.components()[i].order())
                    .min()
                    .expect("a regular generator exists")
            })
            .collect()
    }
}

/// The image of `R` in `∏ Q[t_i]/t_i^D`: the closure of `1` under
/// multiplication by the generators.
pub fn span_ring(curve: &AlgebroidCurve) -> TruncatedModule {
    let s = curve.branches();
    let layout = Layout::new(vec![0; s], vec![curve.truncation; s]);
    let mut module = TruncatedModule::empty(layout.clone());
    let one = layout
        .encode(&BranchVector::one(s))
        .expect("1 fits the layout");
    let mut queue: Vec<Vec<Rational>> =
        module.insert(one).map(|r| r.to_vec()).into_iter().collect();
    while let Some(v) = queue.pop() {
        for g in curve.generators() {
            let w = layout.mul_row(&v, g);
            if let Some(row) = module.insert(w) {
                queue.push(row.to_vec());
            }
        }
    }
    module
}

/// The image of `Σ R g_k` on exponents `[σ_i, σ_i + D)`, `σ` the lowest
/// generator orders. This is exact because `R` is known modulo `t^D`.
pub fn span_ideal(
    curve: &AlgebroidCurve,
    ideal: &FractionalIdealPresentation,
) -> Result<TruncatedModule, CurveError> {
    let ring = span_ring(curve);
    span_ideal_with(curve, &ring, ideal)
}

pub(crate) fn span_ideal_with(
    curve: &AlgebroidCurve,
    ring: &TruncatedModule,
    ideal: &FractionalIdealPresentation,
) -> Result<TruncatedModule, CurveError> {
    check_branches(curve, ideal)?;
    let s = curve.branches();
    let layout = Layout::new(ideal.lower_orders(), vec![curve.truncation; s]);
    let mut module = TruncatedModule::empty(layout.clone());
    let top = layout.top();
    for b in ring.elements() {
        for g in ideal.generators() {
            let prod = b.mul(g).truncate(&top);
            module.insert(layout.encode(&prod)?);
        }
    }
    Ok(module)
}

fn check_branches(
    curve: &AlgebroidCurve,
    ideal: &FractionalIdealPresentation,
) -> Result<(), CurveError> {
    if ideal.branches() != curve.branches() {
        return Err(CurveError::BranchMismatch {
            expected: curve.branches(),
            found: ideal.branches(),
        });
    }
    Ok(())
}

/// Values of `module` on the whole computable window, with conductor
/// detection: the detected conductor plus `margin` must lie in the window,
/// and the window must agree with the cone rule everywhere.
pub fn detect_values(module: &TruncatedModule, margin: i64) -> Result<IdealRep, CurveError> {
    let layout = module.layout();
    let s = layout.branches();
    let top: Vec<i64> = layout.top().iter().map(|t| t - 1).collect();
    let window = Box::new(
        LatticePoint::from(layout.lo().to_vec()),
        LatticePoint::from(top),
    )?;
    let flags = module.value_flags(&window)?;
    let mut filled = vec![false; flags.len()];
    for k in (0..flags.len()).rev() {
        if !flags[k] {
            continue;
        }
        let p = window.point_at(k);
        filled[k] = (0..s).all(|j| {
            p[j] == window.hi()[j] || filled[window.index_of(p.with(j, p[j] + 1).coords())]
        });
    }
    let mut gamma: Option<LatticePoint> = None;
    for (k, &f) in filled.iter().enumerate() {
        if f {
            let p = window.point_at(k);
            gamma = Some(gamma.map_or(p.clone(), |g| g.inf(&p)));
        }
    }
    let too_small = |what: String| CurveError::TruncationTooSmall(what);
    let gamma = gamma.ok_or_else(|| too_small(format!("no filled cone inside {window}")))?;
    if !filled[window.index_of(gamma.coords())] {
        return Err(too_small(format!(
            "values above {gamma} are not a cone inside {window}"
        )));
    }
    if (0..s).any(|i| gamma[i] + margin > window.hi()[i]) {
        return Err(too_small(format!(
            "conductor {gamma} plus margin {margin} exceeds window {window}"
        )));
    }
    let bx = Box::new(window.lo().clone(), gamma.clone())?;
    let rep = IdealRep::from_window(&bx, |p| flags[window.index_of(p)])?;
    if let Some(k) = (0..flags.len()).find(|&k| flags[k] != rep.contains(&window.point_at(k))) {
        return Err(too_small(format!(
            "membership at {} contradicts the conductor {gamma}",
            window.point_at(k)
        )));
    }
    Ok(rep)
}

/// `Γ_R`, verified to be a good semigroup.
pub fn value_semigroup(curve: &AlgebroidCurve) -> Result<GoodSemigroup, CurveError> {
    let rep = detect_values(&span_ring(curve), curve.margin)?;
    GoodSemigroup::new(rep).map_err(|e| match e {
        SemigroupError::NotGood(r) => CurveError::NotGood(r),
        other => other.into(),
    })
}

/// `Γ_I`, verified to satisfy the ideal axioms.
pub fn value_semigroup_ideal(
    curve: &AlgebroidCurve,
    ideal: &FractionalIdealPresentation,
) -> Result<IdealRep, CurveError> {
    checked_ideal(detect_values(&span_ideal(curve, ideal)?, curve.margin)?)
}

pub(crate) fn checked_ideal(rep: IdealRep) -> Result<IdealRep, CurveError> {
    let report = rep.check_axioms(false);
    if !report.is_good_ideal() {
        return Err(CurveError::NotGood(std::boxed::Box::new(report)));
    }
    Ok(rep)
}
