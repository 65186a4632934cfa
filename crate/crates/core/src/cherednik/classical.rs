//! The `k = 0` algebra `ℚ[S_n] ⋉ W_n` (`W_n` the Weyl algebra with
//! `[x_i, p_j] = δ_ij`), multiplied by closed formulas rather than rewriting:
//!
//! ```text
//! p^b x^c = Σ_e (-1)^{|e|} Π_i e_i! C(b_i, e_i) C(c_i, e_i) · x^{c-e} p^{b-e}
//! ```
//!
//! together with `σ x^a = x^{σ·a} σ` and `p^b τ = τ p^{τ⁻¹·b}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::element::{exponent_vectors, CherednikElement, Letter, NormalMonomial};

pub type ClassicalElement = BTreeMap<NormalMonomial, Rational>;

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn add_to(out: &mut ClassicalElement, m: NormalMonomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    let slot = out.entry(m.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        out.remove(&m);
    }
}

/// Product of two normal monomials.
pub fn monomial_product(a: &NormalMonomial, b: &NormalMonomial) -> ClassicalElement {
    let n = a.n();
    let mut out = ClassicalElement::new();
    let bound = a.p.iter().zip(&b.x).map(|(&p, &x)| p.min(x)).sum::<u32>();
    for e in exponent_vectors(n, bound) {
        if (0..n).any(|i| e[i] > a.p[i].min(b.x[i])) {
            continue;
        }
        let mut c = BigInt::one();
        for i in 0..n {
            c *= factorial(e[i]) * binom(a.p[i], e[i]) * binom(b.x[i], e[i]);
        }
        if e.iter().sum::<u32>() % 2 == 1 {
            c = -c;
        }
        let mid_x: Vec<u32> = (0..n).map(|i| b.x[i] - e[i]).collect();
        let mid_p: Vec<u32> = (0..n).map(|i| a.p[i] - e[i]).collect();
        let moved_x = a.perm.act(&mid_x);
        let moved_p = b.perm.inverse().act(&mid_p);
        let m = NormalMonomial {
            x: (0..n).map(|i| a.x[i] + moved_x[i]).collect(),
            perm: a.perm.compose(&b.perm),
            p: (0..n).map(|i| moved_p[i] + b.p[i]).collect(),
        };
        add_to(&mut out, m, Rational::from_integer(c));
    }
    out
}

pub fn multiply(a: &ClassicalElement, b: &ClassicalElement) -> ClassicalElement {
    let mut out = ClassicalElement::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            for (m, c) in monomial_product(ma, mb) {
                add_to(&mut out, m, c * ca * cb);
            }
        }
    }
    out
}

fn letter(n: usize, l: &Letter) -> NormalMonomial {
    let mut m = NormalMonomial::identity(n);
    match l {
        Letter::X(i) => m.x[*i] += 1,
        Letter::P(i) => m.p[*i] += 1,
        Letter::S(s) => m.perm = s.clone(),
    }
    m
}

/// Normal form of a word at `k = 0`.
pub fn word_normal_form(word: &[Letter], n: usize) -> Result<ClassicalElement> {
    let mut acc = ClassicalElement::from([(NormalMonomial::identity(n), Rational::one())]);
    for l in word {
        let bad = match l {
            Letter::X(i) | Letter::P(i) => (*i >= n).then_some(*i + 1),
            Letter::S(s) => (s.n() != n).then_some(s.n()),
        };
        if let Some(index) = bad {
            return Err(Error::GeneratorIndex { index, n });
        }
        acc = multiply(&acc, &ClassicalElement::from([(letter(n, l), Rational::one())]));
    }
    Ok(acc)
}

/// `k ↦ 0` in an element of `A(n, k)`.
pub fn specialize_zero(a: &CherednikElement) -> ClassicalElement {
    a.specialize(&Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::element::parse_word;
    use crate::cherednik::perm::Perm;
    use crate::linalg::rat;

    #[test]
    fn one_variable_formula() {
        let n = 2;
        let w = parse_word("p1 p1 x1 x1", n).unwrap();
        let r = word_normal_form(&w, n).unwrap();
        // p²x² = x²p² - 4xp + 2
        let mut expected = ClassicalElement::new();
        expected.insert(NormalMonomial { x: vec![2, 0], perm: Perm::identity(2), p: vec![2, 0] }, rat(1, 1));
        expected.insert(NormalMonomial { x: vec![1, 0], perm: Perm::identity(2), p: vec![1, 0] }, rat(-4, 1));
        expected.insert(NormalMonomial::identity(2), rat(2, 1));
        assert_eq!(r, expected);
    }

    #[test]
    fn group_moves_generators() {
        let r = word_normal_form(&parse_word("s12 x1 p2 s12", 2).unwrap(), 2).unwrap();
        let m = NormalMonomial { x: vec![0, 1], perm: Perm::identity(2), p: vec![1, 0] };
        assert_eq!(r, ClassicalElement::from([(m, rat(1, 1))]));
    }

    #[test]
    fn associative_on_monomials() {
        let ms = NormalMonomial::enumerate(2, 2);
        for a in ms.iter().step_by(5) {
            for b in ms.iter().step_by(7) {
                for c in ms.iter().step_by(11) {
                    let (a, b, c) = (
                        ClassicalElement::from([(a.clone(), rat(1, 1))]),
                        ClassicalElement::from([(b.clone(), rat(1, 1))]),
                        ClassicalElement::from([(c.clone(), rat(1, 1))]),
                    );
                    assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
                }
            }
        }
    }
}
