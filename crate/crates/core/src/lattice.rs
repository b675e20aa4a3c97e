//! Lattice points of `Z^I`, the componentwise partial order, Δ-sets and the
//! boxed representation of semigroup ideals.
//!
//! A set `E ⊂ Z^I` is stored by its minimum `μ`, a truncation point `γ` and a
//! dense membership table on the box `[μ, γ]`. Membership of an arbitrary
//! point `α` is decided by looking up `inf(α, γ)`; points not dominating `μ`
//! are never members. For good semigroup ideals `γ` is exactly the conductor.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("length mismatch: {left} vs {right} branches")]
    LengthMismatch { left: usize, right: usize },
    #[error("a lattice point needs at least one branch")]
    NoBranches,
    #[error("empty set of members")]
    Empty,
    #[error("minimum {minimum} of the members is not a member")]
    NonUniqueMinimum { minimum: LatticePoint },
    #[error("membership at {point} contradicts the cone above the truncation point")]
    InconsistentTruncation { point: LatticePoint },
    #[error("invalid box: {lo} is not below {hi}")]
    InvalidBox { lo: LatticePoint, hi: LatticePoint },
    #[error("branch index {index} out of range for {branches} branches")]
    BranchOutOfRange { index: usize, branches: usize },
}

/// An element of `Z ∪ {∞}` with `∞` the absorbing maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Finite(i64),
    Infinity,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtInt::Infinity)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
            (ExtInt::Finite(_), ExtInt::Infinity) => Ordering::Less,
            (ExtInt::Infinity, ExtInt::Finite(_)) => Ordering::Greater,
            (ExtInt::Infinity, ExtInt::Infinity) => Ordering::Equal,
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::Infinity,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinity => f.write_str("inf"),
        }
    }
}

/// A finite point of `Z^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self, LatticeError> {
        if coords.is_empty() {
            return Err(LatticeError::NoBranches);
        }
        Ok(LatticePoint(coords))
    }

    pub fn zero(branches: usize) -> Self {
        LatticePoint(vec![0; branches])
    }

    /// The all-ones vector.
    pub fn one(branches: usize) -> Self {
        LatticePoint(vec![1; branches])
    }

    pub fn constant(branches: usize, value: i64) -> Self {
        LatticePoint(vec![value; branches])
    }

    /// The unit vector `e_i`.
    pub fn unit(branches: usize, i: usize) -> Self {
        let mut v = vec![0; branches];
        v[i] = 1;
        LatticePoint(v)
    }

    pub fn branches(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise strict `self < other` in every coordinate.
    pub fn lt_all(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    pub fn inf(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn sup(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Returns the point with coordinate `i` replaced by `value`.
    pub fn with(&self, i: usize, value: i64) -> LatticePoint {
        let mut v = self.0.clone();
        v[i] = value;
        LatticePoint(v)
    }

    /// Restriction to the coordinates in `indices` (in the given order).
    pub fn restrict(&self, indices: &[usize]) -> LatticePoint {
        LatticePoint(indices.iter().map(|&i| self.0[i]).collect())
    }

    pub fn to_ext(&self) -> ExtPoint {
        ExtPoint(self.0.iter().map(|&v| ExtInt::Finite(v)).collect())
    }
}

impl std::ops::Index<usize> for LatticePoint {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for LatticePoint {
    /// Panics on an empty vector.
    fn from(v: Vec<i64>) -> Self {
        LatticePoint::new(v).expect("lattice point without branches")
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint::from(v.to_vec())
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.branches(), rhs.branches());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.branches(), rhs.branches());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;

    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A point of `(Z ∪ {∞})^I`, as produced by valuations of zero divisors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtPoint(pub Vec<ExtInt>);

impl ExtPoint {
    pub fn branches(&self) -> usize {
        self.0.len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| !v.is_infinite())
    }

    pub fn to_finite(&self) -> Option<LatticePoint> {
        self.0
            .iter()
            .map(|v| v.finite())
            .collect::<Option<Vec<_>>>()
            .map(LatticePoint)
    }

    pub fn leq(&self, other: &ExtPoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Add for &ExtPoint {
    type Output = ExtPoint;

    fn add(self, rhs: &ExtPoint) -> ExtPoint {
        ExtPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl fmt::Display for ExtPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Componentwise minimum of two finite points.
pub fn inf(a: &LatticePoint, b: &LatticePoint) -> Result<LatticePoint, LatticeError> {
    check_len(a.branches(), b.branches())?;
    Ok(a.inf(b))
}

/// Componentwise minimum with `∞` as absorbing maximum.
pub fn inf_ext(a: &ExtPoint, b: &ExtPoint) -> Result<ExtPoint, LatticeError> {
    check_len(a.branches(), b.branches())?;
    Ok(ExtPoint(
        a.0.iter().zip(&b.0).map(|(x, y)| *x.min(y)).collect(),
    ))
}

pub(crate) fn check_len(left: usize, right: usize) -> Result<(), LatticeError> {
    if left != right {
        return Err(LatticeError::LengthMismatch { left, right });
    }
    Ok(())
}

/// The closed box `[lo, hi]` of lattice points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Box {
    lo: LatticePoint,
    hi: LatticePoint,
}

impl Box {
    pub fn new(lo: LatticePoint, hi: LatticePoint) -> Result<Self, LatticeError> {
        check_len(lo.branches(), hi.branches())?;
        if !lo.leq(&hi) {
            return Err(LatticeError::InvalidBox { lo, hi });
        }
        Ok(Box { lo, hi })
    }

    pub fn lo(&self) -> &LatticePoint {
        &self.lo
    }

    pub fn hi(&self) -> &LatticePoint {
        &self.hi
    }

    pub fn branches(&self) -> usize {
        self.lo.branches()
    }

    pub fn extent(&self, i: usize) -> usize {
        (self.hi[i] - self.lo[i] + 1) as usize
    }

    pub fn len(&self) -> usize {
        (0..self.branches()).map(|i| self.extent(i)).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.iter()
            .zip(self.lo.coords().iter().zip(self.hi.coords()))
            .all(|(v, (l, h))| l <= v && v <= h)
    }

    /// Row-major index of `p` (last branch varies fastest).
    pub fn index_of(&self, p: &[i64]) -> usize {
        let mut idx = 0usize;
        for (i, v) in p.iter().enumerate() {
            idx = idx * self.extent(i) + (v - self.lo[i]) as usize;
        }
        idx
    }

    pub fn point_at(&self, mut idx: usize) -> LatticePoint {
        let s = self.branches();
        let mut coords = vec![0; s];
        for i in (0..s).rev() {
            let e = self.extent(i);
            coords[i] = self.lo[i] + (idx % e) as i64;
            idx /= e;
        }
        LatticePoint(coords)
    }

    /// All points in row-major order.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.len()).map(move |k| self.point_at(k))
    }

    pub fn translate(&self, by: &LatticePoint) -> Box {
        Box {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }
}

impl fmt::Display for Box {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Iterates over the integer points of `[lo, hi]` given coordinatewise,
/// skipping everything if some range is empty.
pub(crate) fn for_each_in_ranges(
    lo: &[i64],
    hi: &[i64],
    mut f: impl FnMut(&[i64]) -> bool,
) -> bool {
    let s = lo.len();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return true;
    }
    let mut cur = lo.to_vec();
    loop {
        if !f(&cur) {
            return false;
        }
        let mut i = s;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// `Δ_J(α)` (or `Δ̄_J(α)` when `closed`) intersected with `window`.
///
/// Points agree with `α` on the coordinates in `J` and are strictly larger
/// (resp. larger or equal) on the remaining coordinates.
pub fn delta_set(
    subset: &[usize],
    alpha: &LatticePoint,
    window: &Box,
    closed: bool,
) -> Result<Vec<LatticePoint>, LatticeError> {
    check_len(alpha.branches(), window.branches())?;
    let s = alpha.branches();
    if let Some(&bad) = subset.iter().find(|&&j| j >= s) {
        return Err(LatticeError::BranchOutOfRange {
            index: bad,
            branches: s,
        });
    }
    let mut lo = Vec::with_capacity(s);
    let mut hi = Vec::with_capacity(s);
    for i in 0..s {
        if subset.contains(&i) {
            lo.push(alpha[i].max(window.lo()[i]));
            hi.push(alpha[i].min(window.hi()[i]));
        } else {
            lo.push((alpha[i] + if closed { 0 } else { 1 }).max(window.lo()[i]));
            hi.push(window.hi()[i]);
        }
    }
    let mut out = Vec::new();
    for_each_in_ranges(&lo, &hi, |p| {
        out.push(LatticePoint(p.to_vec()));
        true
    });
    Ok(out)
}

/// `Δ(α) = ⋃_i Δ_i(α)` (or the closed variant) intersected with `window`,
/// sorted and without duplicates.
pub fn delta_union(
    alpha: &LatticePoint,
    window: &Box,
    closed: bool,
) -> Result<Vec<LatticePoint>, LatticeError> {
    let mut out = Vec::new();
    for i in 0..alpha.branches() {
        out.extend(delta_set(&[i], alpha, window, closed)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A set `E ⊂ Z^I` represented on the box `[μ, γ]`.
///
/// Invariants: `μ` and `γ` are members, `μ` is the componentwise minimum of
/// all members and `γ` is the least point for which membership of any `α`
/// equals membership of `inf(α, γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealRep {
    mu: LatticePoint,
    gamma: LatticePoint,
    table: Vec<bool>,
}

impl IdealRep {
    /// Builds a representation from a predicate on `window`.
    ///
    /// Membership outside the window is taken to be: no members below
    /// `window.lo` and membership of `inf(α, window.hi)` above. The result
    /// is normalized (true minimum, least truncation point).
    pub fn from_window(
        window: &Box,
        mut member: impl FnMut(&[i64]) -> bool,
    ) -> Result<Self, LatticeError> {
        let flags: Vec<bool> = window.points().map(|p| member(p.coords())).collect();
        Self::from_table(window.clone(), flags)
    }

    /// Normalizes a dense table on `window` (same conventions as
    /// [`IdealRep::from_window`]).
    pub fn from_table(window: Box, flags: Vec<bool>) -> Result<Self, LatticeError> {
        assert_eq!(flags.len(), window.len(), "table does not match its box");
        let s = window.branches();
        let mut mu: Option<Vec<i64>> = None;
        for (k, &f) in flags.iter().enumerate() {
            if f {
                let p = window.point_at(k);
                mu = Some(match mu {
                    None => p.into_coords(),
                    Some(m) => m.iter().zip(p.coords()).map(|(a, b)| *a.min(b)).collect(),
                });
            }
        }
        let mu = LatticePoint(mu.ok_or(LatticeError::Empty)?);
        if !flags[window.index_of(mu.coords())] {
            return Err(LatticeError::NonUniqueMinimum { minimum: mu });
        }
        if !flags[window.index_of(window.hi().coords())] {
            return Err(LatticeError::InconsistentTruncation {
                point: window.hi().clone(),
            });
        }
        let mut gamma = window.hi().coords().to_vec();
        let lookup = |p: &[i64]| flags[window.index_of(p)];
        // Shrink γ one coordinate at a time while the top slab repeats the
        // slab just below it.
        loop {
            let mut changed = false;
            for i in 0..s {
                if gamma[i] <= mu[i] {
                    continue;
                }
                let mut lo = mu.coords().to_vec();
                lo[i] = gamma[i];
                let same = for_each_in_ranges(&lo, &gamma, |p| {
                    let mut below = p.to_vec();
                    below[i] -= 1;
                    lookup(p) == lookup(&below)
                });
                if same {
                    gamma[i] -= 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let gamma = LatticePoint(gamma);
        let bx = Box::new(mu.clone(), gamma.clone()).expect("minimum below truncation point");
        let table = bx.points().map(|p| lookup(p.coords())).collect();
        Ok(IdealRep { mu, gamma, table })
    }

    /// Builds a representation from raw members and a claimed truncation
    /// point `γ` (every point above `γ` is assumed to be a member).
    ///
    /// Members not below `γ` must be explained by the cone rule, otherwise
    /// [`LatticeError::InconsistentTruncation`] is returned.
    pub fn normalize<I>(raw_members: I, claimed_gamma: &LatticePoint) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        let members: Vec<LatticePoint> = raw_members.into_iter().collect();
        let first = members.first().ok_or(LatticeError::Empty)?;
        let s = claimed_gamma.branches();
        for m in &members {
            check_len(m.branches(), s)?;
        }
        let mut lo = first.inf(claimed_gamma);
        for m in &members {
            lo = lo.inf(m);
        }
        let window = Box::new(lo, claimed_gamma.clone())?;
        let mut flags = vec![false; window.len()];
        for m in members.iter().filter(|m| m.leq(claimed_gamma)) {
            flags[window.index_of(m.coords())] = true;
        }
        flags[window.index_of(claimed_gamma.coords())] = true;
        for m in members.iter().filter(|m| !m.leq(claimed_gamma)) {
            let clamped = m.inf(claimed_gamma);
            if !flags[window.index_of(clamped.coords())] {
                return Err(LatticeError::InconsistentTruncation { point: m.clone() });
            }
        }
        Self::from_table(window, flags)
    }

    /// `γ + N^I`.
    pub fn cone(gamma: LatticePoint) -> Self {
        IdealRep {
            mu: gamma.clone(),
            gamma,
            table: vec![true],
        }
    }

    pub fn branches(&self) -> usize {
        self.mu.branches()
    }

    pub fn mu(&self) -> &LatticePoint {
        &self.mu
    }

    pub fn gamma(&self) -> &LatticePoint {
        &self.gamma
    }

    /// `τ = γ − 1`.
    pub fn tau(&self) -> LatticePoint {
        &self.gamma - &LatticePoint::one(self.branches())
    }

    pub fn bounding_box(&self) -> Box {
        Box {
            lo: self.mu.clone(),
            hi: self.gamma.clone(),
        }
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Membership by the cone rule: `α ∈ E ⟺ inf(α, γ) ∈ E`.
    pub fn contains_coords(&self, alpha: &[i64]) -> bool {
        debug_assert_eq!(alpha.len(), self.branches());
        let mut idx = 0usize;
        for (i, &a) in alpha.iter().enumerate() {
            let v = a.min(self.gamma[i]);
            if v < self.mu[i] {
                return false;
            }
            idx = idx * ((self.gamma[i] - self.mu[i] + 1) as usize) + (v - self.mu[i]) as usize;
        }
        self.table[idx]
    }

    pub fn contains(&self, alpha: &LatticePoint) -> bool {
        self.contains_coords(alpha.coords())
    }

    /// Members inside the representation box, in row-major order.
    pub fn box_members(&self) -> Vec<LatticePoint> {
        let bx = self.bounding_box();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(k, _)| bx.point_at(k))
            .collect()
    }

    /// Members inside an arbitrary window.
    pub fn members_in(&self, window: &Box) -> Vec<LatticePoint> {
        window.points().filter(|p| self.contains(p)).collect()
    }

    /// Inclusion `self ⊆ other`, decided on the joint box.
    pub fn is_subset(&self, other: &IdealRep) -> bool {
        if self.branches() != other.branches() {
            return false;
        }
        let lo = self.mu.inf(&other.mu);
        let hi = self.gamma.sup(&other.gamma);
        for_each_in_ranges(lo.coords(), hi.coords(), |p| {
            !self.contains_coords(p) || other.contains_coords(p)
        })
    }

    /// `Δ^E_J(α) ≠ ∅`, decided exactly by the cone rule.
    pub fn meets_delta(&self, subset: &[usize], alpha: &LatticePoint, closed: bool) -> bool {
        self.delta_witness(subset, alpha, closed).is_some()
    }

    /// Some member of `Δ_J(α)` (or `Δ̄_J(α)`), if any.
    pub fn delta_witness(
        &self,
        subset: &[usize],
        alpha: &LatticePoint,
        closed: bool,
    ) -> Option<LatticePoint> {
        let s = self.branches();
        let mut lo = Vec::with_capacity(s);
        let mut hi = Vec::with_capacity(s);
        for i in 0..s {
            if subset.contains(&i) {
                lo.push(alpha[i]);
                hi.push(alpha[i]);
            } else {
                let start = alpha[i] + if closed { 0 } else { 1 };
                // Values above γ_i behave like γ_i.
                let start = start.max(self.mu[i]);
                lo.push(start);
                hi.push(start.max(self.gamma[i]));
            }
        }
        let mut found = None;
        for_each_in_ranges(&lo, &hi, |p| {
            if self.contains_coords(p) {
                found = Some(LatticePoint(p.to_vec()));
                false
            } else {
                true
            }
        });
        found
    }

    /// `Δ^E(α) ≠ ∅` for the union over singletons.
    pub fn meets_delta_union(&self, alpha: &LatticePoint, closed: bool) -> bool {
        (0..self.branches()).any(|i| self.meets_delta(&[i], alpha, closed))
    }

    /// `Δ^E_J(α) ∩ window`.
    pub fn delta_members(
        &self,
        subset: &[usize],
        alpha: &LatticePoint,
        window: &Box,
        closed: bool,
    ) -> Vec<LatticePoint> {
        delta_set(subset, alpha, window, closed)
            .map(|v| v.into_iter().filter(|p| self.contains(p)).collect())
            .unwrap_or_default()
    }

    /// Checks (E0), (E1), (E2) and, for semigroup candidates, that `0` is the
    /// minimum and that the set is closed under addition.
    pub fn check_axioms(&self, as_semigroup: bool) -> AxiomReport {
        let members = self.box_members();
        let e1 = find_e1_violation(self, &members);
        let e2 = find_e2_violation(self, &members);
        let (zero_minimal, additive) = if as_semigroup {
            let zero = LatticePoint::zero(self.branches());
            (
                Some(self.mu == zero),
                Some(find_addition_violation(self, &members)),
            )
        } else {
            (None, None)
        };
        AxiomReport {
            e0: self.contains(&self.gamma),
            e1,
            e2,
            zero_minimal,
            additive,
        }
    }
}

/// A failed instance of (E2): no `ε` exists for `alpha`, `beta` at `branch`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Witness {
    pub alpha: LatticePoint,
    pub beta: LatticePoint,
    /// Zero-based branch index `j` with `α_j = β_j`.
    pub branch: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub e0: bool,
    /// A pair whose infimum is not a member.
    pub e1: Option<(LatticePoint, LatticePoint)>,
    pub e2: Option<E2Witness>,
    /// `Some` only for semigroup candidates.
    pub zero_minimal: Option<bool>,
    /// `Some(None)` when closed under addition, `Some(Some(pair))` with a
    /// pair whose sum is missing; `None` for ideal candidates.
    pub additive: Option<Option<(LatticePoint, LatticePoint)>>,
}

impl AxiomReport {
    /// (E0), (E1) and (E2) hold.
    pub fn is_good_ideal(&self) -> bool {
        self.e0 && self.e1.is_none() && self.e2.is_none()
    }

    /// All checks, including the semigroup ones when evaluated.
    pub fn all_pass(&self) -> bool {
        self.is_good_ideal()
            && self.zero_minimal.unwrap_or(true)
            && matches!(self.additive, None | Some(None))
    }

    pub fn is_good_semigroup(&self) -> bool {
        self.is_good_ideal() && self.zero_minimal == Some(true) && self.additive == Some(None)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "E0: {}", if self.e0 { "pass" } else { "fail" })?;
        match &self.e1 {
            None => writeln!(f, "E1: pass")?,
            Some((a, b)) => writeln!(f, "E1: fail alpha={a} beta={b}")?,
        }
        match &self.e2 {
            None => writeln!(f, "E2: pass")?,
            Some(w) => writeln!(
                f,
                "E2: fail alpha={} beta={} j={}",
                w.alpha,
                w.beta,
                w.branch + 1
            )?,
        }
        if let Some(z) = self.zero_minimal {
            writeln!(f, "zero-minimal: {}", if z { "pass" } else { "fail" })?;
        }
        match &self.additive {
            None => {}
            Some(None) => writeln!(f, "additive: pass")?,
            Some(Some((a, b))) => writeln!(f, "additive: fail alpha={a} beta={b}")?,
        }
        Ok(())
    }
}

/// Replays (E1) on a single pair.
pub fn e1_holds_for(e: &IdealRep, alpha: &LatticePoint, beta: &LatticePoint) -> bool {
    !(e.contains(alpha) && e.contains(beta)) || e.contains(&alpha.inf(beta))
}

/// Replays (E2) on a single pair and branch: returns true when the premise
/// fails or a compensating `ε` exists.
pub fn e2_holds_for(e: &IdealRep, alpha: &LatticePoint, beta: &LatticePoint, j: usize) -> bool {
    if !(e.contains(alpha) && e.contains(beta)) || alpha[j] != beta[j] {
        return true;
    }
    e2_epsilon(e, alpha, beta, j).is_some()
}

/// Searches `ε` for (E2). Coordinates above `γ` behave like `γ`, so the
/// search window is bounded by `sup(γ, α, β) + 1`.
pub fn e2_epsilon(
    e: &IdealRep,
    alpha: &LatticePoint,
    beta: &LatticePoint,
    j: usize,
) -> Option<LatticePoint> {
    let s = e.branches();
    let gamma = e.gamma();
    let mut lo = Vec::with_capacity(s);
    let mut hi = Vec::with_capacity(s);
    for i in 0..s {
        let m = alpha[i].min(beta[i]);
        if i == j {
            lo.push(alpha[j] + 1);
            hi.push((alpha[j] + 1).max(gamma[j]));
        } else if alpha[i] != beta[i] {
            lo.push(m);
            hi.push(m);
        } else {
            lo.push(m);
            hi.push(m.max(gamma[i]));
        }
    }
    let mut found = None;
    for_each_in_ranges(&lo, &hi, |p| {
        if e.contains_coords(p) {
            found = Some(LatticePoint(p.to_vec()));
            false
        } else {
            true
        }
    });
    found
}

fn find_e1_violation(
    e: &IdealRep,
    members: &[LatticePoint],
) -> Option<(LatticePoint, LatticePoint)> {
    for (k, a) in members.iter().enumerate() {
        for b in &members[k + 1..] {
            if !e.contains(&a.inf(b)) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

fn find_e2_violation(e: &IdealRep, members: &[LatticePoint]) -> Option<E2Witness> {
    for (k, a) in members.iter().enumerate() {
        for b in &members[k + 1..] {
            for j in 0..e.branches() {
                if a[j] == b[j] && e2_epsilon(e, a, b, j).is_none() {
                    return Some(E2Witness {
                        alpha: a.clone(),
                        beta: b.clone(),
                        branch: j,
                    });
                }
            }
        }
    }
    None
}

fn find_addition_violation(
    e: &IdealRep,
    members: &[LatticePoint],
) -> Option<(LatticePoint, LatticePoint)> {
    for (k, a) in members.iter().enumerate() {
        for b in &members[k..] {
            if !e.contains(&(a + b)) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}
