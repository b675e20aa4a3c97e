//! Inputs shared by the benchmarks.

use goodsemi::curve::{rational, Poly};
use goodsemi::{AlgebroidCurve, BranchVector, GoodSemigroup};

/// `Q[[t^4, t^6 + t^7, t^11]]`.
pub fn one_branch_curve() -> AlgebroidCurve {
    let t = |e| Poly::monomial(e, rational(1));
    let gens = vec![
        BranchVector(vec![t(4)]),
        BranchVector(vec![t(6).add(&t(7))]),
        BranchVector(vec![t(11)]),
    ];
    AlgebroidCurve::new(vec!["t".into()], gens, None).expect("valid curve")
}

/// The eleven-generator two-branch curve truncated at degree 40.
pub fn two_branch_curve() -> AlgebroidCurve {
    let pairs = [
        (7, 6, 1),
        (6, 7, 1),
        (9, 11, 1),
        (10, 10, 1),
        (11, 9, 1),
        (11, 10, 1),
        (12, 12, 1),
        (13, 13, -1),
        (20, 12, 1),
        (16, 20, 1),
        (12, 20, 1),
    ];
    let gens = pairs
        .iter()
        .map(|&(a, b, sign)| {
            BranchVector(vec![
                Poly::monomial(a, rational(1)),
                Poly::monomial(b, rational(sign)),
            ])
        })
        .collect();
    AlgebroidCurve::new(vec!["t1".into(), "t2".into()], gens, Some(40)).expect("valid curve")
}

/// A spread of numerical semigroups of increasing conductor.
pub fn numerical_inputs() -> Vec<GoodSemigroup> {
    [
        &[4, 6, 11, 13][..],
        &[5, 7, 9],
        &[7, 8, 9, 10],
        &[6, 11, 13, 14],
    ]
    .iter()
    .map(|g| GoodSemigroup::numerical(g).expect("valid generators"))
    .collect()
}
