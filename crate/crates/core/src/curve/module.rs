//! Finite-dimensional images of fractional ideals in `∏ Q((t_i)) / t_i^{top_i}`
//! and the dimension-drop computation of their value sets.

use num_traits::{One, Zero};

use super::poly::{BranchVector, Poly, Rational};
use super::CurveError;
use crate::lattice::{for_each_in_ranges, Box, LatticePoint};

/// Coefficient positions: branch `i` covers exponents `lo[i] .. lo[i] + len[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    lo: Vec<i64>,
    len: Vec<usize>,
    offsets: Vec<usize>,
    /// Columns sorted by (exponent, branch).
    order: Vec<usize>,
}

impl Layout {
    pub fn new(lo: Vec<i64>, len: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(lo.len());
        let mut acc = 0;
        for &l in &len {
            offsets.push(acc);
            acc += l;
        }
        let mut cols: Vec<(i64, usize, usize)> = Vec::with_capacity(acc);
        for (i, (&l, &n)) in lo.iter().zip(&len).enumerate() {
            for k in 0..n {
                cols.push((l + k as i64, i, offsets[i] + k));
            }
        }
        cols.sort();
        Layout {
            lo,
            len,
            offsets,
            order: cols.into_iter().map(|(_, _, c)| c).collect(),
        }
    }

    pub fn branches(&self) -> usize {
        self.lo.len()
    }

    pub fn width(&self) -> usize {
        self.len.iter().sum()
    }

    /// Lowest exponent per branch.
    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    /// One past the highest exponent per branch.
    pub fn top(&self) -> Vec<i64> {
        self.lo
            .iter()
            .zip(&self.len)
            .map(|(&l, &n)| l + n as i64)
            .collect()
    }

    pub fn column(&self, branch: usize, exp: i64) -> Option<usize> {
        let k = exp - self.lo[branch];
        (k >= 0 && (k as usize) < self.len[branch]).then(|| self.offsets[branch] + k as usize)
    }

    /// (branch, exponent) of a column.
    pub fn position(&self, col: usize) -> (usize, i64) {
        let i = self.offsets.iter().rposition(|&o| o <= col).unwrap();
        (i, self.lo[i] + (col - self.offsets[i]) as i64)
    }

    /// Dense row of `v`, dropping terms outside the layout. Terms below the
    /// layout are an error.
    pub fn encode(&self, v: &BranchVector) -> Result<Vec<Rational>, CurveError> {
        let mut row = vec![Rational::zero(); self.width()];
        for (i, p) in v.components().iter().enumerate() {
            for (e, c) in p.terms() {
                if *e < self.lo[i] {
                    return Err(CurveError::BelowLayout {
                        branch: i,
                        exponent: *e,
                    });
                }
                if let Some(col) = self.column(i, *e) {
                    row[col] = c.clone();
                }
            }
        }
        Ok(row)
    }

    pub fn decode(&self, row: &[Rational]) -> BranchVector {
        BranchVector(
            (0..self.branches())
                .map(|i| {
                    let base = self.offsets[i];
                    Poly::from_terms(
                        (0..self.len[i])
                            .filter(|&k| !row[base + k].is_zero())
                            .map(|k| (self.lo[i] + k as i64, row[base + k].clone()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    /// Product of a dense row with a polynomial vector, truncated to the layout.
    pub fn mul_row(&self, row: &[Rational], g: &BranchVector) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.width()];
        for i in 0..self.branches() {
            let base = self.offsets[i];
            for k in 0..self.len[i] {
                let c = &row[base + k];
                if c.is_zero() {
                    continue;
                }
                let e = self.lo[i] + k as i64;
                for (ge, gc) in g.components()[i].terms() {
                    if let Some(col) = self.column(i, e + ge) {
                        out[col] += c * gc;
                    }
                }
            }
        }
        out
    }
}

/// A subspace of the coefficient space of a [`Layout`], kept as a reduced
/// row echelon basis (pivots chosen by the (exponent, branch) order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedModule {
    layout: Layout,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl TruncatedModule {
    pub fn empty(layout: Layout) -> Self {
        TruncatedModule {
            layout,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn elements(&self) -> Vec<BranchVector> {
        self.rows.iter().map(|r| self.layout.decode(r)).collect()
    }

    /// (branch, exponent) of each pivot, in basis order.
    pub fn pivot_positions(&self) -> Vec<(usize, i64)> {
        self.pivots
            .iter()
            .map(|&c| self.layout.position(c))
            .collect()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains_row(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns the new basis row if `v` was independent.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> Option<&[Rational]> {
        self.reduce(&mut v);
        let p = *self.layout.order.iter().find(|&&c| !v[c].is_zero())?;
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.rows.last().map(|r| r.as_slice())
    }

    pub fn from_rows(layout: Layout, rows: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        let mut m = TruncatedModule::empty(layout);
        for r in rows {
            m.insert(r);
        }
        m
    }

    /// `dim V_β` for every `β` of `window`, row-major, where
    /// `V_β = {v | ord_i(v) ≥ β_i for all i}`.
    ///
    /// The last branches are handled by successive elimination of the
    /// constrained columns, the first branch by an order profile.
    pub fn dimension_table(&self, window: &Box) -> Result<Vec<usize>, CurveError> {
        let top = self.layout.top();
        for i in 0..window.branches() {
            if window.hi()[i] > top[i] {
                return Err(CurveError::WindowExceedsTruncation {
                    window: window.clone(),
                    limit: LatticePoint::from(top.clone()),
                });
            }
        }
        let s = self.layout.branches();
        let lo = window.lo().coords();
        let hi = window.hi().coords();
        let mut table = vec![0usize; window.len()];
        if s == 1 {
            let profile = self.order_profile(self.rows.clone(), lo[0], hi[0]);
            table.copy_from_slice(&profile);
            return Ok(table);
        }
        let last = s - 1;
        let mut prefix = |mid: &[i64]| {
            let mut rows = self.rows.clone();
            for (k, &b) in mid.iter().enumerate() {
                let i = k + 1;
                for e in self.layout.lo[i]..b {
                    self.impose(&mut rows, i, e);
                }
            }
            for e in self.layout.lo[last]..lo[last] {
                self.impose(&mut rows, last, e);
            }
            for b in lo[last]..=hi[last] {
                if b > lo[last] {
                    self.impose(&mut rows, last, b - 1);
                }
                let profile = self.order_profile(rows.clone(), lo[0], hi[0]);
                for (a, d) in (lo[0]..=hi[0]).zip(profile) {
                    let mut point = vec![a];
                    point.extend_from_slice(mid);
                    point.push(b);
                    table[window.index_of(&point)] = d;
                }
            }
            true
        };
        for_each_in_ranges(&lo[1..last], &hi[1..last], &mut prefix);
        Ok(table)
    }

    /// Restricts `rows` to those vanishing at (branch, exp).
    fn impose(&self, rows: &mut Vec<Vec<Rational>>, branch: usize, exp: i64) {
        let Some(c) = self.layout.column(branch, exp) else {
            return;
        };
        let Some(k) = rows.iter().position(|r| !r[c].is_zero()) else {
            return;
        };
        let pivot = rows.swap_remove(k);
        let inv = pivot[c].recip();
        for row in rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }

    /// `dim {v ∈ span(rows) | ord_0(v) ≥ a}` for `a` in `lo ..= hi`.
    fn order_profile(&self, rows: Vec<Vec<Rational>>, lo: i64, hi: i64) -> Vec<usize> {
        let base = self.layout.offsets[0];
        let n0 = self.layout.len[0];
        let mut part: Vec<Vec<Rational>> = rows
            .into_iter()
            .map(|r| r[base..base + n0].to_vec())
            .collect();
        let total = part.len();
        let mut orders: Vec<i64> = Vec::new();
        let mut start = 0;
        for k in 0..n0 {
            let Some(off) = part[start..].iter().position(|r| !r[k].is_zero()) else {
                continue;
            };
            part.swap(start, start + off);
            let inv = part[start][k].recip();
            let (head, tail) = part.split_at_mut(start + 1);
            let pivot = &head[start];
            for row in tail.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let f = &row[k] * &inv;
                for j in k..n0 {
                    if !pivot[j].is_zero() {
                        row[j] -= &f * &pivot[j];
                    }
                }
            }
            orders.push(self.layout.lo[0] + k as i64);
            start += 1;
        }
        let infinite = total - orders.len();
        (lo..=hi)
            .map(|a| infinite + orders.iter().filter(|&&o| o >= a).count())
            .collect()
    }

    /// Value set on `window` by the dimension-drop rule:
    /// `α` is a value iff `dim V_α > dim V_{α+e_j}` for every branch `j`.
    pub fn value_set(&self, window: &Box) -> Result<Vec<LatticePoint>, CurveError> {
        let s = window.branches();
        let ext = Box::new(window.lo().clone(), window.hi() + &LatticePoint::one(s))?;
        let dims = self.dimension_table(&ext)?;
        let mut out = Vec::new();
        for p in window.points() {
            let d = dims[ext.index_of(p.coords())];
            let drops = (0..s).all(|j| {
                let q = p.with(j, p[j] + 1);
                dims[ext.index_of(q.coords())] < d
            });
            if drops {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Membership flags of the value set on `window`, row-major.
    pub fn value_flags(&self, window: &Box) -> Result<Vec<bool>, CurveError> {
        let values = self.value_set(window)?;
        let mut flags = vec![false; window.len()];
        for v in values {
            flags[window.index_of(v.coords())] = true;
        }
        Ok(flags)
    }

    /// Basis of `V_α`.
    pub fn section(&self, alpha: &LatticePoint) -> Vec<Vec<Rational>> {
        let mut rows = self.rows.clone();
        for i in 0..self.layout.branches() {
            for e in self.layout.lo[i]..alpha[i] {
                self.impose(&mut rows, i, e);
            }
        }
        rows
    }

    /// An explicit element of value exactly `α`, searched among the
    /// combinations `Σ x^k b_k` of a basis of `V_α` for `x = 1, 2, …`.
    pub fn realize(&self, alpha: &LatticePoint) -> Option<BranchVector> {
        let top = self.layout.top();
        if (0..alpha.branches()).any(|i| alpha[i] >= top[i]) {
            return None;
        }
        let basis = self.section(alpha);
        if basis.is_empty() {
            return None;
        }
        let cols: Vec<usize> = (0..alpha.branches())
            .map(|i| self.layout.column(i, alpha[i].max(self.layout.lo[i])))
            .collect::<Option<Vec<_>>>()?;
        let tries = alpha.branches() * basis.len() + 1;
        for x in 1..=tries as i64 {
            let xq = Rational::from_integer(x.into());
            let mut weight = Rational::one();
            let mut v = vec![Rational::zero(); self.layout.width()];
            for b in &basis {
                for (acc, c) in v.iter_mut().zip(b) {
                    if !c.is_zero() {
                        *acc += &weight * c;
                    }
                }
                weight *= &xq;
            }
            if cols.iter().all(|&c| !v[c].is_zero()) {
                let elem = self.layout.decode(&v);
                return (elem.value().to_finite().as_ref() == Some(alpha)).then_some(elem);
            }
        }
        None
    }
}
