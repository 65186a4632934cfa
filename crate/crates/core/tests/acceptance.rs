//! Acceptance suite: one PASS/FAIL line per criterion. Arithmetic is exact
//! everywhere, so there are no numeric tolerances; wall-clock limits are
//! pinned per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hhwreath_core::betti::BettiTable;
use hhwreath_core::cherednik::{self, classical, dunkl, CherednikElement, NormalMonomial};
use hhwreath_core::hochschild::{
    afls_check, homotopy_identity_check, verify_homolog_i, FiniteDimAlgebra, Group, GroupAction, LinearMap,
};
use hhwreath_core::koszul::{self, Kind, Twist};
use hhwreath_core::linalg::rat;
use hhwreath_core::poly::Poly;
use hhwreath_core::presets::load_preset;
use hhwreath_core::wreath::{
    closed_form, deformation_parameter_count, generating_series_product, generating_series_sum,
    hh_cohomology_wreath, hilb_poincare, ClosedForm,
};

const LIMIT_C1: Duration = Duration::from_secs(10);
const LIMIT_C2: Duration = Duration::from_secs(30);
const LIMIT_C4: Duration = Duration::from_secs(120);
const LIMIT_C5: Duration = Duration::from_secs(120);
const LIMIT_C6: Duration = Duration::from_secs(120);
const LIMIT_C7: Duration = Duration::from_secs(120);
const LIMIT_C8: Duration = Duration::from_secs(120);
const LIMIT_OTHER: Duration = Duration::from_secs(60);
const SEED: u64 = 0;

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- oracles

/// Number of partitions of `n` into exactly `l` parts.
fn partitions_with_parts(n: usize, l: usize) -> u64 {
    let mut p = vec![vec![0u64; n + 1]; n + 1];
    p[0][0] = 1;
    for m in 1..=n {
        for k in 1..=m {
            p[m][k] = p[m - 1][k - 1] + if m >= k { p[m - k][k] } else { 0 };
        }
    }
    p[n][l]
}

/// All partitions of `n`, as multiplicity maps part ↦ count.
fn partitions(n: usize) -> Vec<BTreeMap<usize, usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeMap<usize, usize>>) {
        if n == 0 {
            let mut m = BTreeMap::new();
            for &p in cur.iter() {
                *m.entry(p).or_insert(0) += 1;
            }
            out.push(m);
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dense polynomial in t, index = degree.
type TPoly = Vec<i128>;

fn tmul(a: &TPoly, b: &TPoly, tmax: usize) -> TPoly {
    let mut out = vec![0; tmax + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= tmax {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Graded dimension of `S^p V` for a super vector space whose degree-`i`
/// part has dimension `dims[i]` and parity `i mod 2`, read off from
/// `Π_even 1/(1 - s t^i) · Π_odd (1 + s t^i)`.
fn super_sym(dims: &BTreeMap<usize, u64>, p: usize, tmax: usize) -> TPoly {
    // table[j] = coefficient of s^j
    let mut table: Vec<TPoly> = vec![vec![0; tmax + 1]; p + 1];
    table[0][0] = 1;
    for (&deg, &dim) in dims {
        for _ in 0..dim {
            let mut next = table.clone();
            if deg % 2 == 0 {
                // multiply by 1/(1 - s t^deg): next[j] = Σ_r table[j-r] t^{r deg}
                for j in 0..=p {
                    let mut acc = vec![0; tmax + 1];
                    for r in 0..=j {
                        let shift = r * deg;
                        if shift > tmax {
                            break;
                        }
                        for (i, c) in table[j - r].iter().enumerate() {
                            if i + shift <= tmax {
                                acc[i + shift] += c;
                            }
                        }
                    }
                    next[j] = acc;
                }
            } else {
                for j in 1..=p {
                    for (i, c) in table[j - 1].iter().enumerate() {
                        if i + deg <= tmax {
                            next[j][i + deg] += c;
                        }
                    }
                }
            }
            table = next;
        }
    }
    table[p].clone()
}

/// `Σ_{λ⊢n} Π_i S^{p_i(λ)}(V[d(i-1)])`, computed from scratch.
fn oracle_row(betti: &[u64], d: usize, n: usize, tmax: usize) -> TPoly {
    let mut total = vec![0; tmax + 1];
    for lam in partitions(n) {
        let mut term = vec![0; tmax + 1];
        term[0] = 1;
        for (&part, &mult) in &lam {
            let shifted: BTreeMap<usize, u64> =
                betti.iter().enumerate().map(|(i, &b)| (i + d * (part - 1), b)).collect();
            term = tmul(&term, &super_sym(&shifted, mult, tmax), tmax);
        }
        for (a, b) in total.iter_mut().zip(term) {
            *a += b;
        }
    }
    total
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---------------------------------------------------------------- criteria

fn c1() -> Outcome {
    for label in ClosedForm::ALL {
        let p = load_preset(label.preset_name()).map_err(|e| e.to_string())?;
        let cf = closed_form(label, 8, 40);
        let prod = generating_series_product(&p.betti, p.d, 8, 40).map_err(|e| e.to_string())?;
        let sum = generating_series_sum(&p.betti, p.d, 8, 40).map_err(|e| e.to_string())?;
        ensure(cf == prod && prod == sum, || format!("{label}: routes disagree"))?;
        let dense: Vec<u64> = p.betti.to_dense();
        for n in 0..=8 {
            let row = oracle_row(&dense, p.d as usize, n, 40);
            for (i, c) in row.iter().enumerate() {
                ensure(cf.coeff(n, i) == BigInt::from(*c), || format!("{label}: q^{n} t^{i} differs from oracle"))?;
            }
        }
    }
    Ok(())
}

fn c2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for trial in 0..50 {
        let d: u32 = if rng.random_bool(0.5) { 2 } else { 4 };
        let dense: Vec<u64> = (0..=d).map(|_| rng.random_range(0..=3)).collect();
        let table = BettiTable::from_dense(&dense);
        let tmax = 6 * d as usize;
        let prod = generating_series_product(&table, d, 6, tmax).map_err(|e| e.to_string())?;
        let sum = generating_series_sum(&table, d, 6, tmax).map_err(|e| e.to_string())?;
        ensure(prod == sum, || format!("trial {trial}: {dense:?}, d = {d}"))?;
        for n in 0..=6 {
            let row = oracle_row(&dense, d as usize, n, tmax);
            for (i, c) in row.iter().enumerate() {
                ensure(prod.coeff(n, i) == BigInt::from(*c), || {
                    format!("trial {trial}: {dense:?}, q^{n} t^{i} differs from oracle")
                })?;
            }
        }
    }
    Ok(())
}

fn c3() -> Outcome {
    let pa = closed_form(ClosedForm::PA, 12, 24);
    for n in 0..=12 {
        for l in 0..=n {
            let expected = partitions_with_parts(n, l);
            ensure(pa.coeff(n, 2 * (n - l)) == BigInt::from(expected), || format!("n = {n}, l = {l}"))?;
        }
    }
    let point = BettiTable::from_pairs([(0, 1)]);
    for n in 0..=10 {
        let mut expected = vec![0u64; 2 * n + 1];
        for l in 0..=n {
            expected[2 * (n - l)] += partitions_with_parts(n, l);
        }
        while expected.last() == Some(&0) {
            expected.pop();
        }
        let got = hilb_poincare(&point, n).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("hilb n = {n}: {got:?} vs {expected:?}"))?;
    }
    Ok(())
}

fn c4() -> Outcome {
    // HH_* of the dual numbers over ℚ is 2, 1, 1, …; of ℚ[ℤ₂] it is 2, 0, 0, …
    let cases = [
        ("Q[x]/(x^2)", FiniteDimAlgebra::dual_numbers(), [2usize, 1, 1, 1]),
        ("Q[Z2]", FiniteDimAlgebra::group_algebra(&Group::cyclic(2)), [2, 0, 0, 0]),
    ];
    for (name, a, known) in &cases {
        for (n, levels) in [(2, 3), (3, 2)] {
            let c = verify_homolog_i(a, n, levels).map_err(|e| e.to_string())?;
            ensure(c.passed() && c.rhs == known[..=levels], || {
                format!("{name}, n = {n}: {:?} vs {:?}", c.lhs, c.rhs)
            })?;
        }
    }
    Ok(())
}

fn c5() -> Outcome {
    let a = FiniteDimAlgebra::group_algebra(&Group::cyclic(2));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in [2, 3] {
        for m in 1..=4 {
            let h = homotopy_identity_check(&a, n, m, 50, &mut rng).map_err(|e| e.to_string())?;
            ensure(h.passed() && h.trials == 50, || format!("n = {n}, m = {m}: {} failures", h.failures))?;
        }
    }
    Ok(())
}

fn c6() -> Outcome {
    let x3 = FiniteDimAlgebra::truncated_poly(3);
    let neg = GroupAction::involution(&x3, LinearMap::signed_permutation(&[(0, 1), (1, -1), (2, 1)]))
        .map_err(|e| e.to_string())?;
    let z2 = FiniteDimAlgebra::group_algebra(&Group::cyclic(2));
    let zz = z2.tensor(&z2);
    let swap = GroupAction::involution(&zz, LinearMap::cyclic_shift(2, 2)).map_err(|e| e.to_string())?;
    for (name, b, act) in [("x -> -x", &x3, &neg), ("swap", &zz, &swap)] {
        let c = afls_check(b, act, 2).map_err(|e| e.to_string())?;
        ensure(c.passed(), || format!("{name}: {:?} vs {:?}", c.lhs, c.rhs))?;
    }
    Ok(())
}

fn c7() -> Outcome {
    for kind in Kind::ALL {
        for tw in [Twist::Id, Twist::Epsilon] {
            let c = koszul::build_cochain_complex(kind, tw, 10).map_err(|e| e.to_string())?;
            let zero = c.matrix(0, 10).iter().all(|col| c.differential(1, col).is_zero());
            ensure(zero, || format!("{kind} {tw:?}: composite is nonzero"))?;
        }
        let d = koszul::duality_check(kind, 8).map_err(|e| e.to_string())?;
        ensure(d.passed(), || format!("{kind}: duality\n{d}"))?;
    }
    let expected = [
        (Kind::Weyl, [1, 0, 0], [1, 0, 1]),
        (Kind::Trig, [1, 1, 0], [1, 0, 2]),
        (Kind::QWeyl, [1, 2, 1], [1, 0, 5]),
    ];
    for (kind, hh, crossed) in expected {
        for n in [8, 10, 12] {
            let got = koszul::hh_cohomology_rank_one(kind, Twist::Id, n).map_err(|e| e.to_string())?;
            ensure(got == hh, || format!("{kind}, N = {n}: {got:?}"))?;
        }
        let got = koszul::crossed_z2_cohomology(kind, 8).map_err(|e| e.to_string())?;
        ensure(got == crossed, || format!("{kind}: crossed {got:?}"))?;
    }
    Ok(())
}

fn random_element(n: usize, rng: &mut ChaCha8Rng) -> CherednikElement {
    let monos = NormalMonomial::enumerate(n, 2);
    let mut e = CherednikElement::zero(n);
    for _ in 0..rng.random_range(1..=3) {
        let m = monos[rng.random_range(0..monos.len())].clone();
        e.add_term(m, Poly::from_coeffs(vec![rat(rng.random_range(-3..=3), 1), rat(rng.random_range(-3..=3), 1)]));
    }
    e
}

fn c8() -> Outcome {
    for (n, len) in [(2, 4), (3, 3)] {
        let r = cherednik::confluence_check(n, len);
        ensure(r.passed(), || format!("confluence n = {n}\n{r}"))?;
    }
    for n in [2usize, 3] {
        let fact: u64 = (1..=n as u64).product();
        for d in 0..=3u32 {
            let expected = fact * binom(2 * n as u64 + d as u64, d as u64);
            ensure(NormalMonomial::enumerate(n, d).len() as u64 == expected, || format!("count n = {n}, D = {d}"))?;
            let r = cherednik::pbw_dimension_check(n, d);
            ensure(r.passed(), || format!("PBW n = {n}, D = {d}\n{r}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let k = rat(5, 11);
    for i in 0..100 {
        let n = 2 + i % 2;
        let (a, b, c) = (random_element(n, &mut rng), random_element(n, &mut rng), random_element(n, &mut rng));
        let ab = cherednik::multiply(&a, &b).map_err(|e| e.to_string())?;
        let left = cherednik::multiply(&ab, &c).map_err(|e| e.to_string())?;
        let right = cherednik::multiply(&a, &cherednik::multiply(&b, &c).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(left == right, || format!("associativity triple {i}"))?;
        // the product acts as the composite in the Dunkl representation
        for f in [vec![1, 0, 2], vec![0, 2, 1], vec![3, 1, 0]] {
            let f = dunkl::monomial(f[..n].to_vec());
            let lhs = dunkl::apply_element(&ab, &f, &k);
            let rhs = dunkl::apply_element(&a, &dunkl::apply_element(&b, &f, &k), &k);
            ensure(lhs == rhs, || format!("Dunkl action of product, triple {i}"))?;
        }
    }
    for n in [2, 3] {
        let e = cherednik::symmetrizer(n);
        ensure(cherednik::multiply(&e, &e).map_err(|e| e.to_string())? == e, || format!("e² ≠ e for n = {n}"))?;
    }
    for (n, len) in [(2, 4), (3, 3)] {
        for w in cherednik::rewrite::all_words(n, len) {
            let nf = cherednik::normal_order(&w, n).map_err(|e| e.to_string())?;
            let classical = classical::word_normal_form(&w, n).map_err(|e| e.to_string())?;
            ensure(classical::specialize_zero(&nf) == classical, || format!("k = 0 differs on {w:?}"))?;
        }
    }
    Ok(())
}

fn c9() -> Outcome {
    let count = |b: &BettiTable, d: u32, n: usize| deformation_parameter_count(b, d, n).map_err(|e| e.to_string());
    for (name, anchored) in [("weyl", Some(1)), ("trig", None), ("qweyl", Some(3)), ("z2_qweyl", Some(6))] {
        let p = load_preset(name).map_err(|e| e.to_string())?;
        let (b1, b2) = (p.betti.get(1), p.betti.get(2));
        let identity = b2 + b1 * b1.saturating_sub(1) / 2 + 1;
        for n in 2..=5 {
            let c = count(&p.betti, p.d, n)?;
            let table = hh_cohomology_wreath(&p.betti, p.d, n).map_err(|e| e.to_string())?;
            let oracle = oracle_row(&p.betti.to_dense(), 2, n, 4)[2] as u64;
            ensure(c == table.get(2) && c == oracle && c == identity, || {
                format!("{name}, n = {n}: count {c}, table {}, oracle {oracle}, identity {identity}", table.get(2))
            })?;
            if let Some(v) = anchored {
                ensure(c == v, || format!("{name}: {c} ≠ {v}"))?;
            }
        }
    }
    let point = BettiTable::from_pairs([(0, 1)]);
    for n in 2..=4 {
        let c = count(&point, 4, n)?;
        ensure(c == 0 && c == point.get(2), || format!("d = 4, n = {n}: {c}"))?;
        let with_b2 = BettiTable::from_pairs([(0, 1), (2, 2), (4, 1)]);
        ensure(count(&with_b2, 4, n)? == 2, || format!("d = 4 with b₂ = 2, n = {n}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("C1 six closed forms = product = partition sum", c1, LIMIT_C1),
        ("C2 product = partition sum on random tables", c2, LIMIT_C2),
        ("C3 partition statistics of PA and hilb_poincare", c3, LIMIT_OTHER),
        ("C4 twisted coefficients give HH_*(A)", c4, LIMIT_C4),
        ("C5 cyclic homotopy identity", c5, LIMIT_C5),
        ("C6 crossed product splits over conjugacy classes", c6, LIMIT_C6),
        ("C7 Koszul complexes, duality and HH^* dims", c7, LIMIT_C7),
        ("C8 Cherednik PBW engine", c8, LIMIT_C8),
        ("C9 deformation parameter counts", c9, LIMIT_OTHER),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let t = Instant::now();
        let outcome = f();
        let elapsed = t.elapsed();
        let outcome = outcome.and_then(|_| {
            ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
