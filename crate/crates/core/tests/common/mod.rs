//! Curve fixtures shared by the integration tests.
#![allow(dead_code)]

use goodsemi::curve::{rational, AlgebroidCurve, BranchVector, FractionalIdealPresentation, Poly};
use goodsemi::{Box as LatticeBox, GoodSemigroup, IdealRep, LatticePoint};

pub fn t(e: i64) -> Poly {
    Poly::monomial(e, rational(1))
}

pub fn mt(e: i64) -> Poly {
    Poly::monomial(e, rational(-1))
}

pub fn zero() -> Poly {
    Poly::zero()
}

pub fn v1(p: Poly) -> BranchVector {
    BranchVector(vec![p])
}

pub fn v2(a: Poly, b: Poly) -> BranchVector {
    BranchVector(vec![a, b])
}

pub fn two_vars() -> Vec<String> {
    vec!["t1".to_string(), "t2".to_string()]
}

pub fn ideal(gens: Vec<BranchVector>) -> FractionalIdealPresentation {
    FractionalIdealPresentation::new(gens).unwrap()
}

/// `Q[[t^4, t^6 + t^7, t^11]]`.
pub fn cusp4() -> AlgebroidCurve {
    let gens = vec![v1(t(4)), v1(t(6).add(&t(7))), v1(t(11))];
    AlgebroidCurve::new(vec!["t".to_string()], gens, None).unwrap()
}

/// `Q[[(−t1^4, t2), (−t1^3, 0), (0, t2), (t1^5, 0)]]`.
pub fn pair_ideals() -> AlgebroidCurve {
    let gens = vec![
        v2(mt(4), t(1)),
        v2(mt(3), zero()),
        v2(zero(), t(1)),
        v2(t(5), zero()),
    ];
    AlgebroidCurve::new(two_vars(), gens, Some(20)).unwrap()
}

pub fn pair_ideals_i() -> FractionalIdealPresentation {
    ideal(vec![v2(t(3), t(1)), v2(t(2), zero())])
}

pub fn pair_ideals_j() -> FractionalIdealPresentation {
    ideal(vec![v2(t(3), t(1)), v2(t(4), zero()), v2(t(5), zero())])
}

pub fn eleven_gen(truncation: usize) -> AlgebroidCurve {
    let pairs = [
        (7, 6),
        (6, 7),
        (9, 11),
        (10, 10),
        (11, 9),
        (11, 10),
        (12, 12),
        (13, 13),
        (20, 12),
        (16, 20),
        (12, 20),
    ];
    let gens = pairs
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| v2(t(a), if k == 7 { mt(b) } else { t(b) }))
        .collect();
    AlgebroidCurve::new(two_vars(), gens, Some(truncation)).unwrap()
}

/// `Q[[t^2, t^{n+1}]]`.
pub fn two_generated_curve(n: i64) -> AlgebroidCurve {
    AlgebroidCurve::monomial(&[2, n + 1], None).unwrap()
}

/// `Q[[(t1, t2), (t1^g, −t2^g)]]`, `g = (n+1)/2`.
pub fn diagonal_curve(n: i64) -> AlgebroidCurve {
    let g = (n + 1) / 2;
    let gens = vec![v2(t(1), t(1)), v2(t(g), mt(g))];
    AlgebroidCurve::new(two_vars(), gens, None).unwrap()
}

pub fn p<const N: usize>(v: [i64; N]) -> LatticePoint {
    LatticePoint::from(v)
}

pub fn numerical(gens: &[i64]) -> GoodSemigroup {
    GoodSemigroup::numerical(gens).unwrap()
}

/// Builds a two-branch set from a predicate on `[0, hi]`, cone rule above.
pub fn grid_set(hi: [i64; 2], member: impl Fn(i64, i64) -> bool) -> IdealRep {
    let bx = LatticeBox::new(p([0, 0]), p(hi)).unwrap();
    IdealRep::from_window(&bx, |q| member(q[0], q[1])).unwrap()
}

/// Two-branch (and non-local) semigroups from the curve fixtures and the
/// diagonal family.
pub fn two_branch_semigroups() -> Vec<GoodSemigroup> {
    use goodsemi::curve::{colon_values, value_semigroup};
    let mut out = vec![value_semigroup(&pair_ideals()).unwrap()];
    let c88 = eleven_gen(40);
    out.push(value_semigroup(&c88).unwrap());
    let m = c88.maximal_ideal();
    out.push(GoodSemigroup::new(colon_values(&c88, &m, &m).unwrap()).unwrap());
    out.extend((1..=4).map(|k| GoodSemigroup::diagonal(k).unwrap()));
    out.push(GoodSemigroup::full(2));
    out.push(numerical(&[2, 3]).product(&numerical(&[3, 4])));
    out
}

/// Numerical semigroups with conductor at most 14 followed by
/// [`two_branch_semigroups`].
pub fn semigroup_corpus() -> Vec<GoodSemigroup> {
    let mut out = goodsemi::numerical_semigroups_up_to(14);
    out.extend(two_branch_semigroups());
    out
}

/// `S`, its maximal ideals, every `S^α` with `0 ≤ α ≤ γ_S`, `K_S^0`, and 20
/// seeded shifts of those.
pub fn corpus_ideals(s: &GoodSemigroup, seed: u64) -> Vec<IdealRep> {
    use rand::{Rng, SeedableRng};
    let n = s.branches();
    let mut out = vec![s.rep().clone()];
    out.extend(goodsemi::maximal_ideals(s).into_iter().map(|m| m.ideal));
    let bx = LatticeBox::new(LatticePoint::zero(n), s.gamma().clone()).unwrap();
    for a in bx.points() {
        let t = s.upper_truncation(&a).unwrap();
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out.push(goodsemi::canonical_ideal(s));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let base = out.len();
    for _ in 0..20 {
        let e = &out[rng.random_range(0..base)];
        let a = LatticePoint::from(
            (0..n)
                .map(|_| rng.random_range(-4..=4))
                .collect::<Vec<i64>>(),
        );
        out.push(e.shift(&a));
    }
    out
}

pub type IdealFixtures = Vec<(&'static str, FractionalIdealPresentation)>;

/// Curves with their named fractional ideals (always including `R` and `m`).
pub fn curve_fixtures() -> Vec<(String, AlgebroidCurve, IdealFixtures)> {
    use goodsemi::curve::ideal_product;
    let with_basics = |c: &AlgebroidCurve, extra: IdealFixtures| {
        let mut v: IdealFixtures = vec![("R", c.unit_ideal()), ("m", c.maximal_ideal())];
        v.extend(extra);
        v
    };
    let mut out = Vec::new();
    let c = cusp4();
    out.push(("cusp4".to_string(), c.clone(), with_basics(&c, vec![])));
    let c = pair_ideals();
    let ij = ideal_product(&pair_ideals_i(), &pair_ideals_j());
    out.push((
        "pair_ideals".to_string(),
        c.clone(),
        with_basics(
            &c,
            vec![("I", pair_ideals_i()), ("J", pair_ideals_j()), ("IJ", ij)],
        ),
    ));
    let c = eleven_gen(40);
    out.push(("eleven_gen".to_string(), c.clone(), with_basics(&c, vec![])));
    for n in [0, 2, 4, 6] {
        let c = two_generated_curve(n);
        out.push((
            format!("two-generated n={n}"),
            c.clone(),
            with_basics(&c, vec![]),
        ));
    }
    for n in [1, 3, 5, 9] {
        let c = diagonal_curve(n);
        out.push((
            format!("diagonal n={n}"),
            c.clone(),
            with_basics(&c, vec![]),
        ));
    }
    out
}
