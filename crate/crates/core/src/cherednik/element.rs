use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::Poly;

use super::perm::Perm;

/// A generator of `A(n, k)` (indices are 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    P(usize),
    S(Perm),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "x{}", i + 1),
            Letter::P(i) => write!(f, "p{}", i + 1),
            Letter::S(s) => write!(f, "{s}"),
        }
    }
}

/// `x^x · perm · p^p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalMonomial {
    pub x: Vec<u32>,
    pub perm: Perm,
    pub p: Vec<u32>,
}

impl NormalMonomial {
    pub fn identity(n: usize) -> Self {
        NormalMonomial { x: vec![0; n], perm: Perm::identity(n), p: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Total `(x, p)`-degree.
    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.p.iter().sum::<u32>()
    }

    pub fn to_word(&self) -> Vec<Letter> {
        let mut w = Vec::new();
        for (i, &e) in self.x.iter().enumerate() {
            w.extend(std::iter::repeat_n(Letter::X(i), e as usize));
        }
        if !self.perm.is_identity() {
            w.push(Letter::S(self.perm.clone()));
        }
        for (i, &e) in self.p.iter().enumerate() {
            w.extend(std::iter::repeat_n(Letter::P(i), e as usize));
        }
        w
    }

    /// Every normal monomial with `(x, p)`-degree at most `max_deg`.
    pub fn enumerate(n: usize, max_deg: u32) -> Vec<NormalMonomial> {
        let exps = exponent_vectors(2 * n, max_deg);
        let mut out = Vec::new();
        for perm in Perm::all(n) {
            for e in &exps {
                out.push(NormalMonomial { x: e[..n].to_vec(), perm: perm.clone(), p: e[n..].to_vec() });
            }
        }
        out.sort();
        out
    }
}

/// All vectors in `ℕ^len` with entry sum at most `max`.
pub fn exponent_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max {
        for mut rest in exponent_vectors(len - 1, max - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Degree descending, then `x` exponents descending, group element, `p`
/// exponents descending; this is also the printing order.
impl Ord for NormalMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        o.degree()
            .cmp(&self.degree())
            .then_with(|| o.x.cmp(&self.x))
            .then_with(|| self.perm.cmp(&o.perm))
            .then_with(|| o.p.cmp(&self.p))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |var: &str, i: usize, e: u32| match e {
            0 => None,
            1 => Some(format!("{var}{}", i + 1)),
            _ => Some(format!("{var}{}^{e}", i + 1)),
        };
        let mut parts: Vec<String> =
            self.x.iter().enumerate().filter_map(|(i, &e)| factor("x", i, e)).collect();
        if !self.perm.is_identity() {
            parts.push(self.perm.to_string());
        }
        parts.extend(self.p.iter().enumerate().filter_map(|(i, &e)| factor("p", i, e)));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Element of `A(n, k)`: normal monomials with coefficients in `ℚ[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CherednikElement {
    n: usize,
    terms: BTreeMap<NormalMonomial, Poly>,
}

impl CherednikElement {
    pub fn zero(n: usize) -> Self {
        CherednikElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(NormalMonomial::identity(n), Poly::one())
    }

    pub fn monomial(m: NormalMonomial, c: Poly) -> Self {
        let mut e = Self::zero(m.n());
        e.add_term(m, c);
        e
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut m = NormalMonomial::identity(n);
        m.x[i] = 1;
        Self::monomial(m, Poly::one())
    }

    pub fn p(n: usize, i: usize) -> Self {
        let mut m = NormalMonomial::identity(n);
        m.p[i] = 1;
        Self::monomial(m, Poly::one())
    }

    pub fn group(perm: Perm) -> Self {
        let n = perm.n();
        Self::monomial(NormalMonomial { x: vec![0; n], perm, p: vec![0; n] }, Poly::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &Poly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> Poly {
        self.terms.get(m).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Poly::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Poly::from_i64(-1)))
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.n);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.mul(c));
        }
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(NormalMonomial::degree).max()
    }

    /// Terms of the given `(x, p)`-degree.
    pub fn degree_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone()));
        CherednikElement { n: self.n, terms: terms.collect() }
    }

    /// Coefficients evaluated at a numeric value of `k`.
    pub fn specialize(&self, k: &Rational) -> BTreeMap<NormalMonomial, Rational> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), c.eval(k)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

fn render_term(c: &Poly, m: &NormalMonomial) -> (bool, String) {
    let mono = if m.degree() == 0 && m.perm.is_identity() { String::new() } else { m.to_string() };
    let nonzero = c.coeffs().iter().filter(|a| !a.is_zero()).count();
    if nonzero == 1 {
        let neg = c.leading().is_negative();
        let mag = if neg { c.neg() } else { c.clone() }.render("k");
        let s = match (mag.as_str(), mono.is_empty()) {
            (_, true) => mag,
            ("1", false) => mono,
            (_, false) => format!("{mag} {mono}"),
        };
        (neg, s)
    } else if mono.is_empty() {
        (false, format!("({})", c.render("k")))
    } else {
        (false, format!("({}) {mono}", c.render("k")))
    }
}

impl fmt::Display for CherednikElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, s) = render_term(c, m);
            match (idx, neg) {
                (0, false) => write!(f, "{s}")?,
                (0, true) => write!(f, "-{s}")?,
                (_, false) => write!(f, " + {s}")?,
                (_, true) => write!(f, " - {s}")?,
            }
        }
        Ok(())
    }
}

fn index(digits: &str, n: usize, tok: &str) -> Result<usize> {
    let i: usize = digits.parse().map_err(|_| Error::BadToken(tok.to_string()))?;
    if i == 0 || i > n {
        return Err(Error::GeneratorIndex { index: i, n });
    }
    Ok(i - 1)
}

/// Parses a whitespace-separated word such as `"p1 x1 s12 [2,3,1]"`.
/// Tokens: `x<i>`, `p<i>`, `s<i><j>` (single digits), `s<i>_<j>`,
/// a one-line permutation `[..]`, or `1` for the empty word.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let bad = || Error::BadToken(tok.to_string());
        if tok == "1" {
            continue;
        }
        if let Some(body) = tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let img: Vec<usize> = body
                .split(',')
                .map(|s| index(s.trim(), n, tok))
                .collect::<Result<_>>()?;
            if img.len() != n {
                return Err(bad());
            }
            out.push(Letter::S(Perm::from_images(img).ok_or_else(bad)?));
            continue;
        }
        let (head, rest) = tok.split_at(1.min(tok.len()));
        match head {
            "x" => out.push(Letter::X(index(rest, n, tok)?)),
            "p" => out.push(Letter::P(index(rest, n, tok)?)),
            "s" => {
                let (a, b) = match rest.split_once('_') {
                    Some(pair) => pair,
                    None if rest.len() == 2 => rest.split_at(1),
                    None => return Err(bad()),
                };
                let (i, j) = (index(a, n, tok)?, index(b, n, tok)?);
                if i == j {
                    return Err(bad());
                }
                out.push(Letter::S(Perm::transposition(n, i, j)));
            }
            _ => return Err(bad()),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_monomial_count() {
        // n! times the number of monomials in 2n variables of degree ≤ D
        assert_eq!(NormalMonomial::enumerate(2, 2).len(), 30);
        assert_eq!(NormalMonomial::enumerate(2, 0).len(), 2);
        assert_eq!(NormalMonomial::enumerate(3, 1).len(), 42);
    }

    #[test]
    fn word_round_trip() {
        let m = NormalMonomial { x: vec![2, 0], perm: Perm::transposition(2, 0, 1), p: vec![0, 1] };
        assert_eq!(m.to_string(), "x1^2 s12 p2");
        let w = parse_word("x1 x1 s12 p2", 2).unwrap();
        assert_eq!(w, m.to_word());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_word("x3", 2), Err(Error::GeneratorIndex { index: 3, n: 2 }));
        assert!(matches!(parse_word("y1", 2), Err(Error::BadToken(_))));
        assert!(matches!(parse_word("[1,1]", 2), Err(Error::BadToken(_))));
        assert_eq!(parse_word("s1_3 [3,1,2]", 3).unwrap().len(), 2);
    }

    #[test]
    fn display_signs() {
        let mut e = CherednikElement::zero(2);
        let id = NormalMonomial::identity(2);
        let s = NormalMonomial { perm: Perm::transposition(2, 0, 1), ..id.clone() };
        e.add_term(s.clone(), Poly::var().neg());
        e.add_term(id, Poly::from_i64(-1));
        assert_eq!(e.to_string(), "-1 - k s12");
        let e = CherednikElement::monomial(s, Poly::from_coeffs(vec![Rational::from_integer(1.into()), Rational::from_integer((-1).into())]));
        assert_eq!(e.to_string(), "(-k + 1) s12");
    }
}
