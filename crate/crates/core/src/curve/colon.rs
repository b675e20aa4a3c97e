//! Products, colon ideals, endomorphism rings of ideal powers and the
//! ring-level reports built on them.

use num_traits::Zero;

use super::module::{Layout, TruncatedModule};
use super::poly::{BranchVector, Rational};
use super::{
    checked_ideal, detect_values, span_ideal_with, span_ring, value_semigroup, AlgebroidCurve,
    CurveError, FractionalIdealPresentation,
};
use crate::duality::{
    enumerate_intermediate_good, is_stable, is_symmetric, theorem26_semigroup_condition,
};
use crate::lattice::IdealRep;
use crate::semigroup::{GoodSemigroup, SemigroupError};

pub const DEFAULT_BLOWUP_BUDGET: usize = 10;

/// `I·J`, generated by the pairwise products.
pub fn ideal_product(
    i: &FractionalIdealPresentation,
    j: &FractionalIdealPresentation,
) -> FractionalIdealPresentation {
    let gens = i
        .generators()
        .iter()
        .flat_map(|a| j.generators().iter().map(move |b| a.mul(b)))
        .collect();
    FractionalIdealPresentation::new(gens).expect("products of regular generators are regular")
}

/// `I^n` (`n ≥ 1`), generated by the products over generator multisets.
pub fn ideal_power(i: &FractionalIdealPresentation, n: usize) -> FractionalIdealPresentation {
    let gens = i.generators();
    let mut current: Vec<(usize, BranchVector)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for (last, v) in &current {
            for (k, g) in gens.iter().enumerate().skip(*last) {
                next.push((k, v.mul(g)));
            }
        }
        current = next;
    }
    FractionalIdealPresentation::new(current.into_iter().map(|(_, v)| v).collect())
        .expect("powers of a regular ideal are regular")
}

/// The image of `num : den = {q | q·den ⊂ num}`.
///
/// With `L = μ_num − μ_den` and `U = γ_num − μ_den` every quotient lies in
/// `t^L Q̄` and contains `t^U Q̄`. The coefficients on exponents `[L, U)`
/// are solved for exactly: `q·g` must lie in `num` modulo `t^{γ_num}` for
/// every generator `g` of `den`. The result is laid out on `[L, U + margin]`
/// with the conductor part filled in by monomials.
pub fn colon_module(
    curve: &AlgebroidCurve,
    num: &FractionalIdealPresentation,
    den: &FractionalIdealPresentation,
) -> Result<TruncatedModule, CurveError> {
    let ring = span_ring(curve);
    colon_module_with(curve, &ring, num, den)
}

fn colon_module_with(
    curve: &AlgebroidCurve,
    ring: &TruncatedModule,
    num: &FractionalIdealPresentation,
    den: &FractionalIdealPresentation,
) -> Result<TruncatedModule, CurveError> {
    let s = curve.branches();
    let margin = curve.margin().max(0);
    let num_module = span_ideal_with(curve, ring, num)?;
    let num_values = detect_values(&num_module, margin)?;
    let den_values = detect_values(&span_ideal_with(curve, ring, den)?, margin)?;
    let lower: Vec<i64> = (0..s)
        .map(|i| num_values.mu()[i] - den_values.mu()[i])
        .collect();
    let upper: Vec<i64> = (0..s)
        .map(|i| num_values.gamma()[i] - den_values.mu()[i])
        .collect();

    // num modulo t^{γ_num}, on a layout wide enough for every product q·g.
    let num_lo = num_module.layout().lo().to_vec();
    let den_lo = den.lower_orders();
    let wide_lo: Vec<i64> = (0..s)
        .map(|i| num_lo[i].min(lower[i] + den_lo[i]))
        .collect();
    let gamma_num = num_values.gamma().coords().to_vec();
    let mod_layout = Layout::new(
        wide_lo.clone(),
        (0..s)
            .map(|i| (gamma_num[i] - wide_lo[i]).max(0) as usize)
            .collect(),
    );
    let target = TruncatedModule::from_rows(
        mod_layout.clone(),
        num_module
            .elements()
            .iter()
            .map(|e| mod_layout.encode(&e.truncate(&gamma_num)))
            .collect::<Result<Vec<_>, _>>()?,
    );

    let unknowns: Vec<(usize, i64)> = (0..s)
        .flat_map(|i| (lower[i]..upper[i]).map(move |e| (i, e)))
        .collect();
    // Residual of each unknown monomial times each generator, concatenated.
    let residuals: Vec<Vec<Rational>> = unknowns
        .iter()
        .map(|&(i, e)| {
            let q = BranchVector::unit_monomial(s, i, e);
            let mut res = Vec::new();
            for g in den.generators() {
                let mut r = mod_layout.encode(&q.mul(g).truncate(&gamma_num))?;
                target.reduce(&mut r);
                res.extend(r);
            }
            Ok(res)
        })
        .collect::<Result<_, CurveError>>()?;
    let kernel = kernel_of(&residuals);

    let out_layout = Layout::new(
        lower.clone(),
        (0..s)
            .map(|i| (upper[i] - lower[i] + margin + 1) as usize)
            .collect(),
    );
    let mut rows = Vec::new();
    for vec in kernel {
        let mut row = vec![Rational::zero(); out_layout.width()];
        for (c, &(i, e)) in vec.into_iter().zip(&unknowns) {
            if !c.is_zero() {
                row[out_layout.column(i, e).expect("unknown inside layout")] = c;
            }
        }
        rows.push(row);
    }
    for (i, &u) in upper.iter().enumerate() {
        for e in u..=u + margin {
            rows.push(out_layout.encode(&BranchVector::unit_monomial(s, i, e))?);
        }
    }
    Ok(TruncatedModule::from_rows(out_layout, rows))
}

/// Basis of `{x | Σ_k x_k v_k = 0}`.
fn kernel_of(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = vectors.len();
    // Rows [v_k | e_k]; eliminate on the v part.
    let mut rows: Vec<(Vec<Rational>, Vec<Rational>)> = vectors
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let mut e = vec![Rational::zero(); n];
            e[k] = Rational::from_integer(1.into());
            (v.clone(), e)
        })
        .collect();
    let width = vectors.first().map_or(0, |v| v.len());
    let mut start = 0;
    for c in 0..width {
        let Some(off) = rows[start..].iter().position(|r| !r.0[c].is_zero()) else {
            continue;
        };
        rows.swap(start, start + off);
        let (head, tail) = rows.split_at_mut(start + 1);
        let pivot = &head[start];
        let inv = pivot.0[c].recip();
        for row in tail.iter_mut() {
            if row.0[c].is_zero() {
                continue;
            }
            let f = &row.0[c] * &inv;
            for (x, p) in row.0.iter_mut().zip(&pivot.0).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            for (x, p) in row.1.iter_mut().zip(&pivot.1) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        start += 1;
    }
    rows.into_iter().skip(start).map(|r| r.1).collect()
}

/// `Γ_{num : den}`, verified to satisfy the ideal axioms.
pub fn colon_values(
    curve: &AlgebroidCurve,
    num: &FractionalIdealPresentation,
    den: &FractionalIdealPresentation,
) -> Result<IdealRep, CurveError> {
    checked_ideal(detect_values(
        &colon_module(curve, num, den)?,
        curve.margin(),
    )?)
}

fn endomorphism_values(
    curve: &AlgebroidCurve,
    ring: &TruncatedModule,
    i: &FractionalIdealPresentation,
) -> Result<GoodSemigroup, CurveError> {
    let rep = detect_values(&colon_module_with(curve, ring, i, i)?, curve.margin())?;
    GoodSemigroup::new(rep).map_err(|e| match e {
        SemigroupError::NotGood(r) => CurveError::NotGood(r),
        other => other.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupReport {
    /// `Γ_{I^n : I^n}` for `n = 1, 2, …` up to stabilization.
    pub chain: Vec<GoodSemigroup>,
    /// `Γ_{I:I} = Γ_I − Γ_I` and `Γ_I` is stable.
    pub stable: bool,
}

/// Value semigroups of `I^n : I^n` until two consecutive ones agree.
pub fn blowup_chain(
    curve: &AlgebroidCurve,
    i: &FractionalIdealPresentation,
    budget: usize,
) -> Result<BlowupReport, CurveError> {
    let ring = span_ring(curve);
    let gamma_i = checked_ideal(detect_values(
        &span_ideal_with(curve, &ring, i)?,
        curve.margin(),
    )?)?;
    let mut chain: Vec<GoodSemigroup> = Vec::new();
    for n in 1..=budget + 1 {
        let step = endomorphism_values(curve, &ring, &ideal_power(i, n))?;
        if chain.last() == Some(&step) {
            let stable = *chain[0].rep() == gamma_i.difference(&gamma_i)? && is_stable(&gamma_i)?;
            return Ok(BlowupReport { chain, stable });
        }
        if n > budget {
            break;
        }
        chain.push(step);
    }
    Err(CurveError::NoStabilization { budget })
}

/// The value-level forms of the Gorenstein criterion for `I : I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinReport {
    pub values: IdealRep,
    pub endomorphisms: GoodSemigroup,
    pub difference: IdealRep,
    /// `Γ_{I:I}` is symmetric.
    pub endomorphisms_symmetric: bool,
    /// `Γ_{I:I} = Γ_I − Γ_I` and `Γ_I − Γ_I` is symmetric.
    pub equal_and_symmetric: bool,
    /// `I` is stable (`Γ_{I:I} = Γ_I − Γ_I`, `Γ_I` stable) and
    /// `Γ_I − Γ_I` is symmetric.
    pub stable_and_symmetric: bool,
}

impl GorensteinReport {
    pub fn agree(&self) -> bool {
        self.endomorphisms_symmetric == self.equal_and_symmetric
            && self.equal_and_symmetric == self.stable_and_symmetric
    }
}

pub fn gorenstein_report(
    curve: &AlgebroidCurve,
    i: &FractionalIdealPresentation,
) -> Result<GorensteinReport, CurveError> {
    let ring = span_ring(curve);
    let values = checked_ideal(detect_values(
        &span_ideal_with(curve, &ring, i)?,
        curve.margin(),
    )?)?;
    let endomorphisms = endomorphism_values(curve, &ring, i)?;
    let difference = values.difference(&values)?;
    let diff_symmetric = GoodSemigroup::new(difference.clone()).is_ok_and(|d| is_symmetric(&d));
    let equal = *endomorphisms.rep() == difference;
    let stable = equal && is_stable(&values)?;
    Ok(GorensteinReport {
        endomorphisms_symmetric: is_symmetric(&endomorphisms),
        equal_and_symmetric: equal && diff_symmetric,
        stable_and_symmetric: stable && diff_symmetric,
        values,
        endomorphisms,
        difference,
    })
}

/// The conditions characterizing curves all of whose integral extensions
/// are Gorenstein, evaluated on values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem26Report {
    pub semigroup: GoodSemigroup,
    pub endomorphisms: GoodSemigroup,
    /// `Γ_R` and `Γ_R \ {0} − Γ_R \ {0}` are symmetric.
    pub semigroup_condition: bool,
    /// `Γ_R` and `Γ_{m:m}` are symmetric.
    pub ring_condition: bool,
    /// Every good semigroup between `Γ_R` and `N^I` is symmetric.
    pub tower_condition: bool,
    pub tower_size: usize,
}

impl Theorem26Report {
    pub fn agree(&self) -> bool {
        self.semigroup_condition == self.ring_condition
            && self.ring_condition == self.tower_condition
    }

    pub fn all_hold(&self) -> bool {
        self.semigroup_condition && self.ring_condition && self.tower_condition
    }

    pub fn none_hold(&self) -> bool {
        !self.semigroup_condition && !self.ring_condition && !self.tower_condition
    }
}

pub fn theorem26_report(
    curve: &AlgebroidCurve,
    budget: usize,
) -> Result<Theorem26Report, CurveError> {
    let semigroup = value_semigroup(curve)?;
    let ring = span_ring(curve);
    let endomorphisms = endomorphism_values(curve, &ring, &curve.maximal_ideal())?;
    let semigroup_condition = theorem26_semigroup_condition(&semigroup)?;
    let ring_condition = is_symmetric(&semigroup) && is_symmetric(&endomorphisms);
    let tower = enumerate_intermediate_good(&semigroup, budget)?;
    Ok(Theorem26Report {
        tower_condition: tower.iter().all(is_symmetric),
        tower_size: tower.len(),
        semigroup_condition,
        ring_condition,
        semigroup,
        endomorphisms,
    })
}
