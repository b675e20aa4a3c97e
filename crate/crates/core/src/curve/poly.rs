//! Laurent polynomials in one uniformizer and vectors of them, one per branch.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::{ExtInt, ExtPoint};

pub type Rational = BigRational;

/// A Laurent polynomial `Σ c_e t^e` with exact rational coefficients.
///
/// Terms are kept sorted by exponent with zero coefficients removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(i64, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, Rational::one())
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        Poly::from_terms(vec![(exp, coeff)])
    }

    /// Collects terms, adding coefficients of equal exponents.
    pub fn from_terms(mut terms: Vec<(i64, Rational)>) -> Self {
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Order of vanishing; `None` for the zero polynomial.
    pub fn order(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push((a + b, x * y));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly::from_terms(self.terms.iter().chain(&other.terms).cloned().collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)).collect())
    }

    /// Drops all terms of exponent `≥ bound`.
    pub fn truncate(&self, bound: i64) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| *e < bound)
                .cloned()
                .collect(),
        }
    }

    /// Canonical text form in the uniformizer `var`, terms by ascending degree.
    pub fn display_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match *e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if power.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{abs}*{power}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

/// One Laurent polynomial per branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchVector(pub Vec<Poly>);

impl BranchVector {
    pub fn one(branches: usize) -> Self {
        BranchVector(vec![Poly::one(); branches])
    }

    /// `t_i^e` on branch `i`, zero elsewhere.
    pub fn unit_monomial(branches: usize, i: usize, exp: i64) -> Self {
        let mut v = vec![Poly::zero(); branches];
        v[i] = Poly::monomial(exp, Rational::one());
        BranchVector(v)
    }

    pub fn branches(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.0
    }

    /// Componentwise order, `∞` for a zero component.
    pub fn value(&self) -> ExtPoint {
        ExtPoint(
            self.0
                .iter()
                .map(|p| p.order().map_or(ExtInt::Infinity, ExtInt::Finite))
                .collect(),
        )
    }

    /// Regular: no zero component.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|p| !p.is_zero())
    }

    pub fn mul(&self, other: &BranchVector) -> BranchVector {
        BranchVector(self.0.iter().zip(&other.0).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn add(&self, other: &BranchVector) -> BranchVector {
        BranchVector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, c: &Rational) -> BranchVector {
        BranchVector(self.0.iter().map(|p| p.scale(c)).collect())
    }

    /// Truncates branch `i` below `bounds[i]`.
    pub fn truncate(&self, bounds: &[i64]) -> BranchVector {
        BranchVector(
            self.0
                .iter()
                .zip(bounds)
                .map(|(p, &b)| p.truncate(b))
                .collect(),
        )
    }

    pub fn display_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .map(|(p, v)| p.display_with(v))
            .collect();
        parts.join(", ")
    }
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        rational(n)
    }

    #[test]
    fn arithmetic_and_orders() {
        let a = Poly::from_terms(vec![(6, q(1)), (7, q(1))]);
        let b = Poly::from_terms(vec![(2, q(1)), (3, q(1))]);
        let c = a.mul(&b);
        assert_eq!(c, Poly::from_terms(vec![(8, q(1)), (9, q(2)), (10, q(1))]));
        assert_eq!(c.order(), Some(8));
        assert_eq!(a.add(&a.scale(&q(-1))), Poly::zero());
        assert_eq!(Poly::zero().order(), None);
    }

    #[test]
    fn display() {
        let p = Poly::from_terms(vec![(7, q(-2)), (6, q(1))]);
        assert_eq!(p.display_with("t"), "t^6 - 2*t^7");
        let p = Poly::monomial(4, q(-1));
        assert_eq!(p.display_with("t1"), "-t1^4");
        let p = Poly::from_terms(vec![
            (0, Rational::new(3.into(), 2.into())),
            (1, q(1)),
            (-2, q(5)),
        ]);
        assert_eq!(p.display_with("t"), "5*t^-2 + 3/2 + t");
    }

    #[test]
    fn values_with_infinity() {
        let v = BranchVector(vec![Poly::zero(), Poly::monomial(1, q(1))]);
        assert_eq!(
            v.value(),
            ExtPoint(vec![ExtInt::Infinity, ExtInt::Finite(1)])
        );
        assert!(!v.is_regular());
    }
}
