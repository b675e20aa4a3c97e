//! Acceptance criteria. Each test prints one PASS/FAIL line and asserts
//! exact equality of the computed objects.

mod common;

use std::time::{Duration, Instant};

use common::*;
use goodsemi::curve::{
    colon_values, detect_values, ideal_product, span_ideal, span_ring, theorem26_report,
    value_semigroup, value_semigroup_ideal, TruncatedModule,
};
use goodsemi::lattice::delta_union;
use goodsemi::{
    canonical_ideal, canonical_ideal_on, classify_tower, dual, enumerate_intermediate_good,
    is_symmetric, self_duality_conditions, Box as LatticeBox, E2Witness, ExtInt, GoodSemigroup,
    IdealRep, LatticePoint, TowerKind, DEFAULT_TOWER_BUDGET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    number: u32,
    title: &'static str,
    start: Instant,
    limit: Duration,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new(number: u32, title: &'static str, limit_secs: u64) -> Self {
        Criterion {
            number,
            title,
            start: Instant::now(),
            limit: Duration::from_secs(limit_secs),
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, expected: T) {
        let ok = got == expected;
        self.check(ok, || format!("{what}: got {got:?}, expected {expected:?}"));
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if elapsed > self.limit {
            self.failures
                .push(format!("runtime {elapsed:?} exceeds {:?}", self.limit));
        }
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {} [{}]: {verdict} ({} checks, {} failures, {:.2?})",
            self.number,
            self.title,
            self.checks,
            self.failures.len(),
            elapsed
        );
        for f in self.failures.iter().take(20) {
            println!("  - {f}");
        }
        assert!(self.failures.is_empty(), "criterion {} failed", self.number);
    }
}

fn members(e: &IdealRep, lo: [i64; 2], hi: [i64; 2]) -> Vec<LatticePoint> {
    e.members_in(&LatticeBox::new(p(lo), p(hi)).unwrap())
}

fn grid(lo: [i64; 2], hi: [i64; 2], f: impl Fn(i64, i64) -> bool) -> Vec<LatticePoint> {
    LatticeBox::new(p(lo), p(hi))
        .unwrap()
        .points()
        .filter(|q| f(q[0], q[1]))
        .collect()
}

#[test]
fn criterion_1_cusp4() {
    let mut c = Criterion::new(1, "one-branch endomorphism values", 5);
    let curve = cusp4();
    let gamma_r = value_semigroup(&curve).unwrap();
    c.eq("Γ_R", gamma_r.clone(), numerical(&[4, 6, 11, 13]));
    let m = curve.maximal_ideal();
    let gamma_m = value_semigroup_ideal(&curve, &m).unwrap();
    let diff = gamma_m.difference(&gamma_m).unwrap();
    c.eq("Γ_m − Γ_m", diff.clone(), numerical(&[2, 7]).into_rep());
    let colon = colon_values(&curve, &m, &m).unwrap();
    c.eq(
        "Γ_{m:m}",
        colon.clone(),
        numerical(&[4, 6, 7, 9]).into_rep(),
    );
    c.check(colon.is_subset(&diff) && colon != diff, || {
        "Γ_{m:m} ⊊ Γ_m − Γ_m".into()
    });
    let separating: Vec<i64> = (0..20)
        .filter(|&a| diff.contains_coords(&[a]) && !colon.contains_coords(&[a]))
        .collect();
    c.eq("separating elements", separating, vec![2]);
    c.finish();
}

#[test]
fn criterion_2_pair_ideals() {
    let mut c = Criterion::new(2, "two-branch sum of value ideals", 30);
    let curve = pair_ideals();
    let r = value_semigroup(&curve).unwrap();
    let (lo, hi) = ([0, 0], [9, 5]);
    c.eq(
        "Γ_R",
        members(&r, lo, hi),
        grid(lo, hi, |x, y| (x, y) == (0, 0) || (x >= 3 && y >= 1)),
    );
    let gi = value_semigroup_ideal(&curve, &pair_ideals_i()).unwrap();
    c.eq(
        "Γ_I",
        members(&gi, lo, hi),
        grid(lo, hi, |x, y| {
            (x == 2 && y >= 1) || (x, y) == (3, 1) || (x >= 5 && y >= 2)
        }),
    );
    let gj = value_semigroup_ideal(&curve, &pair_ideals_j()).unwrap();
    c.eq(
        "Γ_J",
        members(&gj, lo, hi),
        grid(lo, hi, |x, y| (x, y) == (3, 1) || (x >= 4 && y >= 2)),
    );
    let sum = gi.sum(&gj).unwrap();
    c.eq(
        "Γ_I + Γ_J",
        members(&sum, lo, hi),
        grid(lo, hi, |x, y| {
            (x, y) == (5, 2) || (x, y) == (6, 2) || (x >= 5 && y >= 3)
        }),
    );
    let report = sum.check_axioms(false);
    c.eq("E1 of the sum", report.e1.clone(), None);
    c.eq(
        "E2 witness of the sum",
        report.e2.clone(),
        Some(E2Witness {
            alpha: p([6, 2]),
            beta: p([6, 3]),
            branch: 0,
        }),
    );
    let prod =
        value_semigroup_ideal(&curve, &ideal_product(&pair_ideals_i(), &pair_ideals_j())).unwrap();
    c.check(sum.is_subset(&prod) && sum != prod, || {
        "Γ_I + Γ_J ⊊ Γ_{IJ}".into()
    });
    c.finish();
}

#[test]
fn criterion_3_eleven_gen() {
    let mut c = Criterion::new(3, "two-branch difference of the maximal ideal", 600);
    let curve = eleven_gen(40);
    let r = value_semigroup(&curve).unwrap();
    let (lo, hi) = ([0, 0], [16, 16]);
    let left = grid(lo, hi, |x, y| {
        matches!((x, y), (0, 0) | (6, 6) | (6, 7) | (7, 6) | (9, 11))
            || (y == 9 && x >= 9)
            || (y == 10 && (9..=11).contains(&x))
            || (x == 10 && y >= 12)
            || (x >= 12 && y >= 12)
    });
    c.eq("Γ_R", members(&r, lo, hi), left);
    let gm = value_semigroup_ideal(&curve, &curve.maximal_ideal()).unwrap();
    c.eq("Γ_m = M", gm.clone(), r.maximal_ideal().unwrap());
    let diff = gm.difference(&gm).unwrap();
    let right = grid(lo, hi, |x, y| {
        matches!((x, y), (0, 0) | (3, 3) | (3, 4) | (4, 3) | (5, 3)) || (x >= 6 && y >= 6)
    });
    c.eq("Γ_m − Γ_m", members(&diff, lo, hi), right);
    c.eq(
        "E2 witness of Γ_m − Γ_m",
        diff.check_axioms(true).e2,
        Some(E2Witness {
            alpha: p([4, 3]),
            beta: p([5, 3]),
            branch: 1,
        }),
    );
    let m = curve.maximal_ideal();
    let colon = colon_values(&curve, &m, &m).unwrap();
    c.check(colon.is_subset(&diff) && colon != diff, || {
        "Γ_{m:m} ⊊ Γ_m − Γ_m".into()
    });
    c.finish();
}

/// `S = ⟨2, n+1⟩` for some even `n`, directly from the gap structure.
fn two_generated_shape(s: &GoodSemigroup) -> Option<i64> {
    let n = s.gamma()[0];
    (n % 2 == 0 && (0..n).all(|a| s.contains_coords(&[a]) == (a % 2 == 0))).then_some(n)
}

#[test]
fn criterion_4_numerical_towers() {
    let mut c = Criterion::new(4, "numerical symmetric towers", 60);
    let all = goodsemi::numerical_semigroups_up_to(14);
    c.eq(
        "number of numerical semigroups with conductor ≤ 14",
        all.len(),
        277,
    );
    for s in &all {
        let m = s.maximal_ideal().unwrap();
        let d = m.difference(&m).unwrap();
        let b = is_symmetric(s) && GoodSemigroup::new(d).is_ok_and(|g| is_symmetric(&g));
        let shape = two_generated_shape(s);
        c.check(b == shape.is_some(), || {
            format!("{s}: (b) = {b}, (c) = {shape:?}")
        });
        match classify_tower(s) {
            Ok(r) => {
                let expected = shape.map_or(TowerKind::NotClassified, TowerKind::NumericalTwoGen);
                c.check(r.kind == expected, || {
                    format!("{s}: classified as {:?}", r.kind)
                });
            }
            Err(e) => c.check(false, || format!("{s}: {e}")),
        }
        if let Some(n) = shape.filter(|&n| n <= 10) {
            let tower = enumerate_intermediate_good(s, DEFAULT_TOWER_BUDGET).unwrap();
            let expected: Vec<GoodSemigroup> = (0..=n / 2)
                .map(|k| GoodSemigroup::two_generated(2 * k).unwrap())
                .collect();
            c.check(tower.iter().all(is_symmetric), || {
                format!("{s}: non-symmetric member")
            });
            let mut got = tower.clone();
            got.sort_by_key(|g| g.gamma()[0]);
            c.eq(&format!("tower of {s}"), got, expected);
        }
    }
    c.finish();
}

#[test]
fn criterion_5_diagonal_towers() {
    let mut c = Criterion::new(5, "two-branch diagonal towers", 60);
    for k in 1..=4 {
        let s = GoodSemigroup::diagonal(k).unwrap();
        let r = classify_tower(&s).unwrap();
        c.eq(
            &format!("kind for k={k}"),
            r.kind,
            TowerKind::TwoBranchDiagonal(2 * k - 1),
        );
        c.eq(
            &format!("reconstruction for k={k}"),
            r.reconstructed,
            Some(s.clone()),
        );
        let mut tower = enumerate_intermediate_good(&s, DEFAULT_TOWER_BUDGET).unwrap();
        tower.sort_by_key(|g| g.gamma()[0]);
        let mut expected = vec![GoodSemigroup::full(2)];
        expected.extend((1..=k).map(|j| GoodSemigroup::diagonal(j).unwrap()));
        c.eq(&format!("tower for k={k}"), tower, expected);
    }
    c.finish();
}

#[test]
fn criterion_6_normal_forms() {
    let mut c = Criterion::new(6, "curve normal forms", 60);
    for n in [0, 2, 4, 6] {
        let r = theorem26_report(&two_generated_curve(n), DEFAULT_TOWER_BUDGET).unwrap();
        c.check(r.all_hold(), || format!("Q[[t^2, t^{}]]: {r:?}", n + 1));
        c.eq(
            &format!("values for n={n}"),
            r.semigroup,
            GoodSemigroup::two_generated(n).unwrap(),
        );
    }
    for n in [1, 3, 5, 9] {
        let r = theorem26_report(&diagonal_curve(n), DEFAULT_TOWER_BUDGET).unwrap();
        c.check(r.all_hold(), || format!("diagonal curve n={n}: {r:?}"));
        c.eq(
            &format!("values for n={n}"),
            r.semigroup,
            GoodSemigroup::diagonal((n + 1) / 2).unwrap(),
        );
    }
    let r = theorem26_report(&cusp4(), DEFAULT_TOWER_BUDGET).unwrap();
    c.check(r.none_hold(), || {
        format!("Q[[t^4, t^6 + t^7, t^11]]: {r:?}")
    });
    c.finish();
}

#[test]
fn criterion_7_duality_involution() {
    let mut c = Criterion::new(7, "duality involution and difference conductor", 600);
    for (idx, s) in semigroup_corpus().iter().enumerate() {
        let k = canonical_ideal(s);
        let ideals = corpus_ideals(s, idx as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + idx as u64);
        for e in &ideals {
            let once = dual(s, &k, e).unwrap();
            let twice = dual(s, &k, &once).unwrap();
            c.check(twice == *e, || {
                format!(
                    "{s}: K − (K − E) ≠ E for E with μ={} γ={}",
                    e.mu(),
                    e.gamma()
                )
            });
            let partner = &ideals[rng.random_range(0..ideals.len())];
            for f in [s.rep(), &k, e, partner] {
                let d = e.difference(f).unwrap();
                let expected = e.gamma() - f.mu();
                c.check(*d.gamma() == expected, || {
                    format!("{s}: γ_(E−F) = {} ≠ {expected}", d.gamma())
                });
            }
        }
    }
    c.finish();
}

fn window_around(s: &GoodSemigroup, extra: i64) -> LatticeBox {
    let n = s.branches();
    LatticeBox::new(
        LatticePoint::constant(n, -extra),
        s.gamma() + &LatticePoint::constant(n, extra),
    )
    .unwrap()
}

fn same_on(a: &IdealRep, b: &IdealRep, window: &LatticeBox) -> bool {
    window.points().all(|q| a.contains(&q) == b.contains(&q))
}

#[test]
fn criterion_8_self_duality_and_lemmas() {
    let mut c = Criterion::new(8, "self-duality triple and structural lemmas", 600);
    for (idx, s) in semigroup_corpus().iter().enumerate() {
        let k = canonical_ideal(s);
        let sym = is_symmetric(s);
        let local = s.is_local();
        let ideals = corpus_ideals(s, idx as u64);
        for e in &ideals {
            let t = self_duality_conditions(s, e).unwrap();
            c.check(t.agree(), || {
                format!("{s}: {t:?} for E with μ={} γ={}", e.mu(), e.gamma())
            });
            // Equal conductors with K force E ⊆ K.
            if e.gamma() == k.gamma() {
                c.check(e.is_subset(&k), || format!("{s}: γ_E = γ_K but E ⊄ K"));
            }
            // A symmetric E − E is K − E.
            if e.gamma() == s.gamma() {
                let d = e.difference(e).unwrap();
                if GoodSemigroup::new(d.clone()).is_ok_and(|g| is_symmetric(&g)) {
                    c.check(d == k.difference(e).unwrap(), || {
                        format!("{s}: E − E ≠ K − E")
                    });
                }
            }
        }
        // Upper truncations: S^α − S^α = S − S^α, and it lies between S and its saturation when S is symmetric.
        let zero_box =
            LatticeBox::new(LatticePoint::zero(s.branches()), s.gamma().clone()).unwrap();
        for a in zero_box.points() {
            let t = s.upper_truncation(&a).unwrap();
            let d = t.difference(&t).unwrap();
            c.check(d == s.difference(&t).unwrap(), || {
                format!("{s}: S^α − S^α ≠ S − S^α at α={a}")
            });
            if sym {
                let good = GoodSemigroup::new(d.clone()).is_ok();
                let between = s.is_subset(&d) && d.mu().coords().iter().all(|&v| v >= 0);
                c.check(good && between, || {
                    format!("{s}: S^α − S^α at α={a} is not a good semigroup between S and its saturation")
                });
            }
        }
        if local {
            let window = window_around(s, 3);
            // The boundary of Δ(τ_K) lies in K.
            let tau_k = k.tau();
            let closed = delta_union(&tau_k, &window, true).unwrap();
            let open = delta_union(&tau_k, &window, false).unwrap();
            for q in closed.iter().filter(|q| !open.contains(q)) {
                c.check(k.contains(q), || {
                    format!("{s}: boundary point {q} of τ_K not in K")
                });
            }
            // M − M = S ∪ Δ(τ) for symmetric S.
            if sym && *s.gamma() != LatticePoint::zero(s.branches()) {
                let m = s.maximal_ideal().unwrap();
                let d = m.difference(&m).unwrap();
                let delta_tau = delta_union(&s.tau(), &window, false).unwrap();
                let ok = window
                    .points()
                    .all(|q| d.contains(&q) == (s.contains(&q) || delta_tau.contains(&q)));
                c.check(ok, || format!("{s}: M − M ≠ S ∪ Δ(τ)"));
            }
        }
        // Numerical symmetric semigroups have γ = 2g.
        if sym && s.branches() == 1 {
            c.eq(
                &format!("γ = 2·genus for {s}"),
                s.gamma()[0],
                2 * s.genus().unwrap() as i64,
            );
        }
    }
    // Colon values against semigroup differences on the curve fixtures.
    for (name, curve, ideals) in curve_fixtures() {
        for (iname, i) in &ideals {
            let gi = value_semigroup_ideal(&curve, i).unwrap();
            let colon = colon_values(&curve, i, i).unwrap();
            let d = gi.difference(&gi).unwrap();
            c.check(colon.is_subset(&d), || {
                format!("{name}: Γ_({iname}:{iname}) ⊄ Γ − Γ")
            });
            let endo = GoodSemigroup::new(colon.clone()).unwrap();
            c.check(d.is_subset(&canonical_ideal(&endo)), || {
                format!("{name}: Γ_{iname} − Γ_{iname} ⊄ K⁰ of Γ_({iname}:{iname})")
            });
            let strict = colon != d;
            let expected_strict = matches!((name.as_str(), *iname), ("cusp4" | "eleven_gen", "m"));
            if expected_strict {
                c.check(strict, || format!("{name}: Γ_(m:m) = Γ_m − Γ_m"));
            }
            for (jname, j) in &ideals {
                let gj = value_semigroup_ideal(&curve, j).unwrap();
                let sum = gi.sum(&gj).unwrap();
                let prod = value_semigroup_ideal(&curve, &ideal_product(i, j)).unwrap();
                c.check(sum.is_subset(&prod), || {
                    format!("{name}: Γ_{iname} + Γ_{jname} ⊄ Γ_({iname}{jname})")
                });
                if name == "pair_ideals" && *iname == "I" && *jname == "J" {
                    c.check(sum != prod, || "pair_ideals: Γ_I + Γ_J = Γ_IJ".into());
                }
                let cj = colon_values(&curve, i, j).unwrap();
                c.check(cj.is_subset(&gi.difference(&gj).unwrap()), || {
                    format!("{name}: Γ_({iname}:{jname}) ⊄ Γ_{iname} − Γ_{jname}")
                });
            }
        }
    }
    c.finish();
}

/// `α ∈ E − F` iff `α + f ∈ E` for every member `f` of `F` in a box twice
/// as large as needed.
fn brute_difference_agrees(e: &IdealRep, f: &IdealRep) -> Result<(), String> {
    let n = e.branches();
    let pad = LatticePoint::constant(n, 2);
    let lo = &(e.mu() - f.gamma()) - &pad;
    let hi = &(e.gamma() - f.mu()) + &pad;
    let window = LatticeBox::new(lo.clone(), hi.clone()).unwrap();
    let reach: LatticePoint = (0..n)
        .map(|i| f.mu()[i] + 2 * ((e.gamma()[i] - lo[i]).max(f.gamma()[i] - f.mu()[i])) + 2)
        .collect::<Vec<_>>()
        .into();
    let fs = f.members_in(&LatticeBox::new(f.mu().clone(), reach).unwrap());
    let d = e.difference(f).map_err(|err| err.to_string())?;
    for a in window.points() {
        let brute = fs.iter().all(|x| e.contains(&(&a + x)));
        if brute != d.contains(&a) {
            return Err(format!("disagreement at {a}: brute force {brute}"));
        }
    }
    Ok(())
}

fn sample_values(
    module: &TruncatedModule,
    rep: &IdealRep,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<(), String> {
    use goodsemi::curve::rational;
    let rows = module.rows();
    let top = module.layout().top();
    for _ in 0..samples {
        let mut v = vec![rational(0); module.layout().width()];
        for r in rows {
            let c = rational(rng.random_range(-3..=3));
            for (acc, x) in v.iter_mut().zip(r) {
                *acc += &c * x;
            }
        }
        let value = module.layout().decode(&v).value();
        let finite: Vec<i64> = value
            .0
            .iter()
            .zip(&top)
            .map(|(x, &t)| match x {
                ExtInt::Finite(a) => *a,
                ExtInt::Infinity => t,
            })
            .collect();
        if finite.iter().zip(&top).all(|(a, t)| a == t) {
            continue;
        }
        let q = LatticePoint::from(finite);
        if !rep.contains(&q) {
            return Err(format!("sampled value {q} is not in the value set"));
        }
    }
    Ok(())
}

#[test]
fn criterion_9_oracles() {
    let mut c = Criterion::new(9, "oracle equivalence", 600);
    let corpus = semigroup_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in 0..200 {
        let s = &corpus[rng.random_range(0..corpus.len())];
        let ideals = corpus_ideals(s, k);
        let e = &ideals[rng.random_range(0..ideals.len())];
        let f = &ideals[rng.random_range(0..ideals.len())];
        let r = brute_difference_agrees(e, f);
        c.check(r.is_ok(), || format!("pair {k} in {s}: {}", r.unwrap_err()));
    }
    for s in &corpus {
        let k = canonical_ideal(s);
        let wide = window_around(s, s.gamma().coords().iter().copied().max().unwrap() + 3);
        let widened = canonical_ideal_on(s, &wide);
        c.check(widened == k, || {
            format!("{s}: canonical ideal changes on a wider window")
        });
        let n = s.branches();
        let check =
            LatticeBox::new(wide.lo().clone(), wide.hi() + &LatticePoint::constant(n, 2)).unwrap();
        c.check(same_on(&widened, &k, &check), || {
            format!("{s}: widened membership differs")
        });
    }
    for (name, curve, ideals) in curve_fixtures() {
        let ring = span_ring(&curve);
        let mut modules = vec![("R".to_string(), ring)];
        for (iname, i) in &ideals {
            modules.push((iname.to_string(), span_ideal(&curve, i).unwrap()));
        }
        for (mname, module) in modules {
            let rep = detect_values(&module, curve.margin()).unwrap();
            c.check(rep.check_axioms(false).is_good_ideal(), || {
                format!("{name}/{mname}: not a good ideal")
            });
            let n = rep.branches();
            let hi = rep.gamma() + &LatticePoint::constant(n, curve.margin());
            let window = LatticeBox::new(rep.mu().clone(), hi).unwrap();
            for a in rep.members_in(&window) {
                let realized = module.realize(&a);
                c.check(realized.is_some_and(|x| x.value() == a.to_ext()), || {
                    format!("{name}/{mname}: value {a} not realized")
                });
            }
            let r = sample_values(&module, &rep, &mut rng, 1000);
            c.check(r.is_ok(), || format!("{name}/{mname}: {}", r.unwrap_err()));
        }
    }
    c.finish();
}
