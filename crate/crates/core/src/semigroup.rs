//! Good semigroups: representations with minimum `0` that are verified
//! monoids satisfying (E1) and (E2).

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::lattice::{AxiomReport, Box, IdealRep, LatticeError, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("not a good semigroup:\n{0}")]
    NotGood(std::boxed::Box<AxiomReport>),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("invalid numerical generators {gens:?}: {reason}")]
    InvalidGenerators {
        gens: Vec<i64>,
        reason: &'static str,
    },
}

/// A verified good semigroup `S ⊂ N^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoodSemigroup(IdealRep);

impl GoodSemigroup {
    pub fn new(rep: IdealRep) -> Result<Self, SemigroupError> {
        let report = rep.check_axioms(true);
        if !report.is_good_semigroup() {
            return Err(SemigroupError::NotGood(std::boxed::Box::new(report)));
        }
        Ok(GoodSemigroup(rep))
    }

    /// Wraps a representation known to be a good semigroup.
    pub(crate) fn new_unchecked(rep: IdealRep) -> Self {
        debug_assert!(rep.check_axioms(true).is_good_semigroup());
        GoodSemigroup(rep)
    }

    /// `S̄ = N^I`.
    pub fn full(branches: usize) -> Self {
        GoodSemigroup(IdealRep::cone(LatticePoint::zero(branches)))
    }

    /// The numerical semigroup generated by `gens` (gcd must be 1).
    pub fn numerical(gens: &[i64]) -> Result<Self, SemigroupError> {
        let bad = |reason| SemigroupError::InvalidGenerators {
            gens: gens.to_vec(),
            reason,
        };
        if gens.is_empty() {
            return Err(bad("no generators"));
        }
        if gens.iter().any(|&g| g <= 0) {
            return Err(bad("generators must be positive"));
        }
        if gens.iter().fold(0, |g, &a| gcd(g, a)) != 1 {
            return Err(bad("generators must be coprime"));
        }
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        let limit = (lo * hi + hi) as usize;
        let mut reach = vec![false; limit + 1];
        reach[0] = true;
        for v in 1..=limit {
            reach[v] = gens
                .iter()
                .any(|&g| g as usize <= v && reach[v - g as usize]);
        }
        let conductor = reach
            .iter()
            .rposition(|&r| !r)
            .map_or(0, |last_gap| last_gap + 1);
        Ok(Self::numerical_from_fn(conductor as i64, |v| {
            reach[v as usize]
        }))
    }

    /// The numerical semigroup with members `{v ≤ conductor : member(v)}`
    /// plus everything above `conductor`. The predicate must describe a
    /// semigroup; this is checked.
    pub fn numerical_from_members(
        conductor: i64,
        member: impl Fn(i64) -> bool,
    ) -> Result<Self, SemigroupError> {
        let bx = Box::new(LatticePoint::zero(1), LatticePoint::from(vec![conductor]))?;
        let rep = IdealRep::from_window(&bx, |p| p[0] == conductor || member(p[0]))?;
        Self::new(rep)
    }

    fn numerical_from_fn(conductor: i64, member: impl Fn(i64) -> bool) -> Self {
        let bx = Box::new(LatticePoint::zero(1), LatticePoint::from(vec![conductor])).unwrap();
        let rep = IdealRep::from_window(&bx, |p| p[0] == conductor || member(p[0])).unwrap();
        GoodSemigroup::new_unchecked(rep)
    }

    /// `⟨2, n+1⟩` for even `n ≥ 0`.
    pub fn two_generated(n: i64) -> Result<Self, SemigroupError> {
        if n < 0 || n % 2 != 0 {
            return Err(SemigroupError::InvalidGenerators {
                gens: vec![2, n + 1],
                reason: "n must be even and non-negative",
            });
        }
        Self::numerical(&[2, n + 1])
    }

    /// `⟨(1,1)⟩ ∪ ((k,k) + N^2)` for `k ≥ 1`.
    pub fn diagonal(k: i64) -> Result<Self, SemigroupError> {
        if k < 1 {
            return Err(SemigroupError::InvalidGenerators {
                gens: vec![k],
                reason: "diagonal conductor must be at least 1",
            });
        }
        let bx = Box::new(LatticePoint::zero(2), LatticePoint::from(vec![k, k]))?;
        let rep = IdealRep::from_window(&bx, |p| p[0] == p[1] || (p[0] >= k && p[1] >= k))?;
        Ok(GoodSemigroup::new_unchecked(rep))
    }

    pub fn rep(&self) -> &IdealRep {
        &self.0
    }

    pub fn into_rep(self) -> IdealRep {
        self.0
    }

    /// `0` is the only member with a zero coordinate.
    pub fn is_local(&self) -> bool {
        let s = self.branches();
        (0..s).all(|i| {
            // Members with coordinate i equal to 0 must be 0 itself.
            let mut lo = vec![0; s];
            let hi: Vec<i64> = self.gamma().coords().iter().map(|&g| g.max(1)).collect();
            lo[i] = 0;
            let mut hi_i = hi.clone();
            hi_i[i] = 0;
            let mut only_zero = true;
            crate::lattice::for_each_in_ranges(&lo, &hi_i, |p| {
                if p.iter().any(|&v| v != 0) && self.contains_coords(p) {
                    only_zero = false;
                    return false;
                }
                true
            });
            only_zero
        })
    }

    /// `M_S = S \ {0} = S^1` (a good ideal when `S` is local).
    pub fn maximal_ideal(&self) -> Result<IdealRep, LatticeError> {
        self.0.upper_truncation(&LatticePoint::one(self.branches()))
    }

    /// Number of gaps `|S̄ \ S|` (numerical semigroups only).
    pub fn genus(&self) -> Option<usize> {
        (self.branches() == 1).then(|| {
            (0..self.gamma()[0])
                .filter(|&v| !self.contains_coords(&[v]))
                .count()
        })
    }

    /// Minimal generators (numerical semigroups only).
    pub fn minimal_generators(&self) -> Option<Vec<i64>> {
        if self.branches() != 1 {
            return None;
        }
        if self.gamma()[0] == 0 {
            return Some(vec![1]);
        }
        let bound = self.gamma()[0] + self.multiplicity();
        let mem = |v: i64| self.contains_coords(&[v]);
        Some(
            (1..bound)
                .filter(|&v| mem(v) && !(1..v).any(|a| mem(a) && mem(v - a)))
                .collect(),
        )
    }

    /// Smallest non-zero element (numerical semigroups only, else 0).
    fn multiplicity(&self) -> i64 {
        (1..=self.gamma()[0].max(1))
            .find(|&v| self.contains_coords(&[v]))
            .unwrap_or(1)
    }

    /// `⟨4,6,11,13⟩`-style label for numerical semigroups.
    pub fn label(&self) -> Option<String> {
        self.minimal_generators().map(|g| {
            let parts: Vec<String> = g.iter().map(|v| v.to_string()).collect();
            format!("<{}>", parts.join(","))
        })
    }
}

impl Deref for GoodSemigroup {
    type Target = IdealRep;

    fn deref(&self) -> &IdealRep {
        &self.0
    }
}

impl fmt::Display for GoodSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Some(l) => f.write_str(&l),
            None => write!(f, "good semigroup with conductor {}", self.gamma()),
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All numerical semigroups whose conductor is at most `max_conductor`,
/// ordered by their membership bitmask on `[1, max_conductor − 1]`.
pub fn numerical_semigroups_up_to(max_conductor: i64) -> Vec<GoodSemigroup> {
    assert!(
        (0..=24).contains(&max_conductor),
        "enumeration bound too large"
    );
    let width = (max_conductor - 1).max(0) as u32;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << width) {
        let member = |v: i64| v <= 0 || v > width as i64 || mask & (1 << (v - 1)) != 0;
        let closed = (1..=width as i64)
            .filter(|&a| member(a))
            .all(|a| (a..=width as i64 - a).all(|b| !member(b) || member(a + b)));
        if closed {
            out.push(GoodSemigroup::numerical_from_fn(
                max_conductor.max(0),
                member,
            ));
        }
    }
    out
}
