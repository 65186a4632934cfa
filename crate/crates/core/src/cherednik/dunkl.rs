//! The Dunkl representation of `A(n, k)` on `ℚ[x_1, …, x_n]` at a numeric
//! value of `k`:
//!
//! ```text
//! x_i ↦ multiplication,   σ ↦ (x_i ↦ x_{σ(i)}),
//! p_i ↦ -∂_i + k Σ_{j≠i} (1 - s_ij) / (x_i - x_j).
//! ```
//!
//! It is faithful, so it certifies both the relations and linear
//! independence of normal monomials without going through the rewriting
//! engine.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::linalg::{rank, Rational, SparseVec};

use super::element::{exponent_vectors, CherednikElement, Letter, NormalMonomial};
use super::perm::Perm;

pub type MPoly = BTreeMap<Vec<u32>, Rational>;

fn add_term(f: &mut MPoly, m: Vec<u32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = f.entry(m.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        f.remove(&m);
    }
}

pub fn monomial(e: Vec<u32>) -> MPoly {
    MPoly::from([(e, Rational::from_integer(1.into()))])
}

pub fn mul_x(f: &MPoly, i: usize) -> MPoly {
    f.iter()
        .map(|(m, c)| {
            let mut m = m.clone();
            m[i] += 1;
            (m, c.clone())
        })
        .collect()
}

pub fn permute(f: &MPoly, s: &Perm) -> MPoly {
    f.iter().map(|(m, c)| (s.act(m), c.clone())).collect()
}

fn partial(f: &MPoly, i: usize) -> MPoly {
    let mut out = MPoly::new();
    for (m, c) in f {
        if m[i] > 0 {
            let mut m2 = m.clone();
            m2[i] -= 1;
            add_term(&mut out, m2, c * Rational::from_integer(m[i].into()));
        }
    }
    out
}

/// `(f - s_ij f) / (x_i - x_j)`, using
/// `(x_i^a x_j^b - x_i^b x_j^a)/(x_i - x_j) = x_i^b x_j^b Σ_{t<a-b} x_i^t x_j^{a-b-1-t}` for `a > b`.
fn divided_difference(f: &MPoly, i: usize, j: usize) -> MPoly {
    let mut out = MPoly::new();
    for (m, c) in f {
        let (a, b) = (m[i], m[j]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
        for t in 0..hi - lo {
            let mut m2 = m.clone();
            m2[i] = lo + t;
            m2[j] = hi - 1 - t;
            add_term(&mut out, m2, sign.clone());
        }
    }
    out
}

pub fn apply_p(f: &MPoly, i: usize, k: &Rational) -> MPoly {
    let mut out = MPoly::new();
    for (m, c) in partial(f, i) {
        add_term(&mut out, m, -c);
    }
    for j in (0..f.keys().next().map_or(0, Vec::len)).filter(|&j| j != i) {
        for (m, c) in divided_difference(f, i, j) {
            add_term(&mut out, m, c * k);
        }
    }
    out
}

pub fn apply_letter(l: &Letter, f: &MPoly, k: &Rational) -> MPoly {
    match l {
        Letter::X(i) => mul_x(f, *i),
        Letter::P(i) => apply_p(f, *i, k),
        Letter::S(s) => permute(f, s),
    }
}

/// Action of a word (rightmost letter first).
pub fn apply_word(w: &[Letter], f: &MPoly, k: &Rational) -> MPoly {
    w.iter().rev().fold(f.clone(), |acc, l| apply_letter(l, &acc, k))
}

pub fn apply_element(a: &CherednikElement, f: &MPoly, k: &Rational) -> MPoly {
    let mut out = MPoly::new();
    for (m, c) in a.terms() {
        let c = c.eval(k);
        for (mono, d) in apply_word(&m.to_word(), f, k) {
            add_term(&mut out, mono, d * &c);
        }
    }
    out
}

/// Rank of the normal monomials of degree `≤ max_deg` as operators,
/// tested on all polynomials of degree `≤ max_deg + test_extra`.
pub fn operator_rank(n: usize, max_deg: u32, test_extra: u32, k: &Rational) -> (usize, usize) {
    let monos = NormalMonomial::enumerate(n, max_deg);
    let tests: Vec<MPoly> = exponent_vectors(n, max_deg + test_extra).into_iter().map(monomial).collect();
    // p^b f, shared by every monomial with the same p-part
    let mut p_cache: HashMap<(Vec<u32>, usize), MPoly> = HashMap::new();
    let mut coords: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
    let mut vecs = Vec::with_capacity(monos.len());
    for m in &monos {
        let mut pairs = Vec::new();
        for (t, f) in tests.iter().enumerate() {
            let pf = p_cache
                .entry((m.p.clone(), t))
                .or_insert_with(|| {
                    let mut g = f.clone();
                    for (i, &e) in m.p.iter().enumerate() {
                        for _ in 0..e {
                            g = apply_p(&g, i, k);
                        }
                    }
                    g
                })
                .clone();
            for (mono, c) in permute(&pf, &m.perm) {
                let shifted: Vec<u32> = mono.iter().zip(&m.x).map(|(a, b)| a + b).collect();
                let next = coords.len();
                let idx = *coords.entry((t, shifted)).or_insert(next);
                pairs.push((idx, c));
            }
        }
        vecs.push(SparseVec::from_pairs(pairs));
    }
    (rank(&vecs), monos.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::element::parse_word;
    use crate::cherednik::rewrite::{all_words, normal_order};
    use crate::linalg::rat;

    #[test]
    fn divided_difference_examples() {
        // (x1 - x2)/(x1 - x2) = 1, (x1² - x2²)/(x1 - x2) = x1 + x2
        let f = monomial(vec![1, 0]);
        assert_eq!(divided_difference(&f, 0, 1), monomial(vec![0, 0]));
        let g = monomial(vec![2, 0]);
        let mut expected = monomial(vec![1, 0]);
        add_term(&mut expected, vec![0, 1], rat(1, 1));
        assert_eq!(divided_difference(&g, 0, 1), expected);
    }

    #[test]
    fn dunkl_operators_commute() {
        let k = rat(3, 7);
        for f in exponent_vectors(3, 4).into_iter().map(monomial) {
            let a = apply_p(&apply_p(&f, 1, &k), 0, &k);
            let b = apply_p(&apply_p(&f, 0, &k), 1, &k);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn normal_forms_act_like_their_words() {
        let k = rat(3, 7);
        for n in [2, 3] {
            let tests: Vec<MPoly> = exponent_vectors(n, 3).into_iter().map(monomial).collect();
            for w in all_words(n, 3).iter().step_by(7) {
                let nf = normal_order(w, n).unwrap();
                for f in &tests {
                    assert_eq!(apply_element(&nf, f, &k), apply_word(w, f, &k), "{w:?}");
                }
            }
        }
    }

    #[test]
    fn relation_p1x1() {
        let k = rat(2, 5);
        let nf = normal_order(&parse_word("p1 x1", 2).unwrap(), 2).unwrap();
        let f = monomial(vec![1, 2]);
        assert_eq!(apply_element(&nf, &f, &k), apply_word(&parse_word("p1 x1", 2).unwrap(), &f, &k));
    }

    #[test]
    fn normal_monomials_are_independent() {
        let k = rat(3, 7);
        assert_eq!(operator_rank(2, 2, 1, &k), (30, 30));
    }
}
