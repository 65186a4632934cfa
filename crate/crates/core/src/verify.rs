//! Verification suites behind `hhwreath verify`.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::BettiTable;
use crate::cherednik::{self, classical, CherednikElement, NormalMonomial};
use crate::error::Result;
use crate::hochschild::{afls_check, homotopy_identity_check, verify_homolog_i, FiniteDimAlgebra, Group, GroupAction, LinearMap};
use crate::koszul::{self, Kind, Twist};
use crate::partitions::enumerate;
use crate::poly::Poly;
use crate::presets::{load_preset, Report};
use crate::wreath::{
    closed_form, deformation_count_formula, deformation_parameter_count, generating_series_product,
    generating_series_sum, hh_cohomology_wreath, hilb_poincare, ClosedForm,
};

fn ms(t: Instant) -> String {
    format!("{:.0} ms", t.elapsed().as_secs_f64() * 1e3)
}

fn ok_or_fail<T>(r: &mut Report, name: &str, res: Result<T>, f: impl FnOnce(&mut Report, T)) {
    match res {
        Ok(v) => f(r, v),
        Err(e) => r.push(name, false, e.to_string()),
    }
}

/// Closed forms, both generating-series routes, partition statistics and
/// deformation counts.
pub fn wreath_suite(seed: u64) -> Report {
    let mut r = Report::new("wreath");
    let t = Instant::now();
    for label in ClosedForm::ALL {
        let p = load_preset(label.preset_name()).expect("builtin preset");
        let cf = closed_form(label, 8, 40);
        let res = generating_series_product(&p.betti, p.d, 8, 40)
            .and_then(|prod| Ok((prod, generating_series_sum(&p.betti, p.d, 8, 40)?)));
        ok_or_fail(&mut r, label.label(), res, |r, (prod, sum)| {
            r.push(format!("closed form {label} = product = partition sum"), cf == prod && prod == sum, ms(t));
        });
    }

    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..50 {
        let d = if rng.random_bool(0.5) { 2 } else { 4 };
        let table = BettiTable::from_pairs((0..=d).map(|i| (i, rng.random_range(0..=3u64))));
        let prod = generating_series_product(&table, d, 6, 6 * d as usize);
        let sum = generating_series_sum(&table, d, 6, 6 * d as usize);
        if prod.is_err() || prod != sum {
            bad += 1;
        }
    }
    r.push("product = partition sum on 50 random tables", bad == 0, format!("{bad} mismatches, {}", ms(t)));

    let pa = closed_form(ClosedForm::PA, 12, 24);
    let stat = (0..=12).all(|n| {
        let parts = enumerate(n);
        (0..=n).all(|l| {
            let count = parts.iter().filter(|p| p.len() == l).count();
            pa.coeff(n, 2 * (n - l)) == BigInt::from(count)
        })
    });
    r.push("q^n t^{2(n-l)} of PA counts partitions with l parts, n <= 12", stat, "");
    let point = BettiTable::from_pairs([(0, 1)]);
    let hilb = (0..=10).all(|n| {
        let mut expected = vec![0u64; 2 * n + 1];
        for p in enumerate(n) {
            expected[2 * (n - p.len())] += 1;
        }
        while expected.last() == Some(&0) {
            expected.pop();
        }
        hilb_poincare(&point, n).is_ok_and(|h| h == expected)
    });
    r.push("hilb_poincare({0:1}, n) = Σ_λ t^{2(n-l(λ))}, n <= 10", hilb, "");

    for name in ["weyl", "trig", "qweyl", "z2_weyl", "z2_trig", "z2_qweyl"] {
        let p = load_preset(name).expect("builtin preset");
        let series = generating_series_product(&p.betti, p.d, 5, 12).expect("valid preset");
        let agree = (2..=5).all(|n| {
            deformation_parameter_count(&p.betti, p.d, n)
                .is_ok_and(|c| BigInt::from(c) == series.coeff(n, 2) && c == deformation_count_formula(&p.betti))
        });
        let c = deformation_parameter_count(&p.betti, p.d, 2).unwrap_or(0);
        r.push(format!("deformation count {name} = {c}: HH² = series = b₂ + b₁(b₁-1)/2 + 1"), agree, "");
    }
    let weyl = load_preset("weyl").expect("builtin preset");
    r.push(
        "weyl has exactly one deformation parameter",
        deformation_parameter_count(&weyl.betti, 2, 3) == Ok(1),
        "",
    );
    let d4 = BettiTable::from_pairs([(0, 1), (4, 2)]);
    let point4 = BettiTable::from_pairs([(0, 1)]);
    r.push(
        "d = 4: deformation count equals b₂",
        deformation_parameter_count(&point4, 4, 3) == Ok(0)
            && deformation_parameter_count(&d4, 4, 3) == Ok(0)
            && hh_cohomology_wreath(&BettiTable::from_pairs([(0, 1), (2, 3)]), 4, 3).map(|t| t.get(2)) == Ok(3),
        "",
    );
    r
}

/// Bar-complex checks on finite-dimensional algebras.
pub fn bruteforce_suite(seed: u64) -> Report {
    let mut r = Report::new("bruteforce");
    let algs = [
        ("Q[x]/(x^2)", FiniteDimAlgebra::dual_numbers()),
        ("Q[Z2]", FiniteDimAlgebra::group_algebra(&Group::cyclic(2))),
    ];
    for (name, a) in &algs {
        for (n, levels) in [(2, 3), (3, 2)] {
            let t = Instant::now();
            ok_or_fail(&mut r, name, verify_homolog_i(a, n, levels), |r, c| {
                r.push(
                    format!("twisted HH_* of {name}^{n} = HH_*({name}), levels 0..{levels}"),
                    c.passed(),
                    format!("{:?} vs {:?}, {}", c.lhs, c.rhs, ms(t)),
                );
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z2 = &algs[1].1;
    for n in [2, 3] {
        for m in 1..=4 {
            ok_or_fail(&mut r, "homotopy", homotopy_identity_check(z2, n, m, 50, &mut rng), |r, h| {
                r.push(
                    format!("homotopy identity, Q[Z2], n = {n}, m = {m}"),
                    h.passed(),
                    format!("{} of {} failed", h.failures, h.trials),
                );
            });
        }
    }

    let x3 = FiniteDimAlgebra::truncated_poly(3);
    let neg = GroupAction::involution(&x3, LinearMap::signed_permutation(&[(0, 1), (1, -1), (2, 1)]))
        .expect("x ↦ -x is an automorphism");
    let zz = z2.tensor(z2);
    let swap = GroupAction::involution(&zz, LinearMap::cyclic_shift(2, 2)).expect("swap is an automorphism");
    for (name, b, act) in [("Q[x]/(x^3), x ↦ -x", &x3, &neg), ("Q[Z2]⊗Q[Z2], swap", &zz, &swap)] {
        let t = Instant::now();
        ok_or_fail(&mut r, name, afls_check(b, act, 2), |r, c| {
            r.push(
                format!("crossed product decomposition, {name}"),
                c.passed(),
                format!("{:?} vs {:?}, {}", c.lhs, c.rhs, ms(t)),
            );
        });
    }
    r
}

/// Windowed Koszul cochain complexes.
pub fn koszul_suite() -> Report {
    let mut r = Report::new("koszul");
    for kind in Kind::ALL {
        let zero = [Twist::Id, Twist::Epsilon].into_iter().all(|tw| {
            let c = koszul::build_cochain_complex(kind, tw, 8).expect("window >= 4");
            c.matrix(0, 8).iter().all(|col| c.differential(1, col).is_zero())
        });
        r.push(format!("{kind}: δ₁∘δ₀ = 0 on the full window"), zero, "");
        let d = koszul::duality_check(kind, 8).expect("window >= 4");
        r.push(format!("{kind}: Koszul self-duality"), d.passed(), format!("{} checks", d.checks.len()));
    }
    let expected = [
        (Kind::Weyl, [1, 0, 0], [1, 0, 1]),
        (Kind::Trig, [1, 1, 0], [1, 0, 2]),
        (Kind::QWeyl, [1, 2, 1], [1, 0, 5]),
    ];
    for (kind, hh, crossed) in expected {
        for n in [8, 10, 12] {
            let t = Instant::now();
            let got = koszul::hh_cohomology_rank_one(kind, Twist::Id, n);
            r.push(format!("{kind}: HH^* at N = {n}"), got == Ok(hh), format!("{got:?}, {}", ms(t)));
        }
        let t = Instant::now();
        let got = koszul::crossed_z2_cohomology(kind, 8);
        r.push(format!("{kind}: HH^*(Q[Z2] ⋉ A)"), got == Ok(crossed), format!("{got:?}, {}", ms(t)));
    }
    r
}

fn random_element<R: Rng>(n: usize, rng: &mut R) -> CherednikElement {
    let monos = NormalMonomial::enumerate(n, 2);
    let mut e = CherednikElement::zero(n);
    for _ in 0..rng.random_range(1..=3) {
        let m = monos[rng.random_range(0..monos.len())].clone();
        let c = Poly::from_coeffs(vec![
            crate::linalg::rat(rng.random_range(-2..=2), 1),
            crate::linalg::rat(rng.random_range(-2..=2), 1),
        ]);
        e.add_term(m, c);
    }
    e
}

/// PBW rewriting for the rational Cherednik algebra.
pub fn cherednik_suite(seed: u64) -> Report {
    let mut r = Report::new("cherednik");
    for (n, len) in [(2, 4), (3, 3)] {
        let t = Instant::now();
        let c = cherednik::confluence_check(n, len);
        let detail = c.checks.iter().map(|c| c.detail.clone()).collect::<Vec<_>>().join("; ");
        r.push(format!("confluence, n = {n}, words of length <= {len}"), c.passed(), format!("{detail}, {}", ms(t)));
    }
    for n in [2, 3] {
        for d in 0..=3 {
            let t = Instant::now();
            let p = cherednik::pbw_dimension_check(n, d);
            r.push(format!("PBW basis, n = {n}, D = {d}"), p.passed(), ms(t));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for i in 0..100 {
        let n = 2 + i % 2;
        let (a, b, c) = (random_element(n, &mut rng), random_element(n, &mut rng), random_element(n, &mut rng));
        let left = cherednik::multiply(&cherednik::multiply(&a, &b).unwrap(), &c).unwrap();
        let right = cherednik::multiply(&a, &cherednik::multiply(&b, &c).unwrap()).unwrap();
        if left != right {
            bad += 1;
        }
    }
    r.push("associativity on 100 random triples", bad == 0, format!("{bad} failures"));
    let idem = [2, 3].into_iter().all(|n| {
        let e = cherednik::symmetrizer(n);
        cherednik::multiply(&e, &e).is_ok_and(|ee| ee == e)
    });
    r.push("symmetrizer is idempotent", idem, "");
    let mut bad = 0;
    let mut total = 0;
    for (n, len) in [(2, 4), (3, 3)] {
        for w in cherednik::rewrite::all_words(n, len) {
            total += 1;
            let nf = cherednik::normal_order(&w, n).unwrap();
            if classical::specialize_zero(&nf) != classical::word_normal_form(&w, n).unwrap() {
                bad += 1;
            }
        }
    }
    r.push("k = 0 agrees with the crossed-product engine", bad == 0, format!("{bad} of {total} words differ"));
    r
}

/// All suites, in order.
pub fn all_suites(seed: u64) -> Vec<Report> {
    vec![wreath_suite(seed), bruteforce_suite(seed), koszul_suite(), cherednik_suite(seed)]
}
