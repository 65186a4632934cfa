//! Word rewriting for `A(n, k)`.
//!
//! With `[a, b] = ab - ba`, the defining relations
//! `[x_i, p_j] = k s_ij` (`i ≠ j`) and `[x_i, p_i] = 1 - k Σ_{l≠i} s_il`
//! are oriented as
//!
//! ```text
//! p_i x_j → x_j p_i - k s_ij                (i ≠ j)
//! p_i x_i → x_i p_i - 1 + k Σ_{l≠i} s_il
//! σ x_i   → x_{σ(i)} σ
//! p_i σ   → σ p_{σ⁻¹(i)}                    (from σ p_i = p_{σ(i)} σ)
//! σ τ     → (σ∘τ),   x_j x_i → x_i x_j,   p_j p_i → p_i p_j   (i < j)
//! ```
//!
//! and an identity group letter is deleted. Irreducible words are exactly
//! the normal monomials `x^a σ p^b`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presets::Report;

use super::element::{CherednikElement, Letter, NormalMonomial};
use super::perm::Perm;

/// Which reducible pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Signs of the `k`-terms in the two commutator relations. The algebra is
/// `Relations::STANDARD`; other values exist only to test that a broken
/// presentation is detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relations {
    pub off_diagonal: i64,
    pub diagonal: i64,
}

impl Relations {
    pub const STANDARD: Relations = Relations { off_diagonal: 1, diagonal: 1 };
}

pub struct Rewriter {
    n: usize,
    rel: Relations,
    strategy: Strategy,
}

type Replacement = Vec<(Poly, Vec<Letter>)>;

impl Rewriter {
    pub fn new(n: usize, rel: Relations, strategy: Strategy) -> Self {
        Rewriter { n, rel, strategy }
    }

    pub fn standard(n: usize) -> Self {
        Self::new(n, Relations::STANDARD, Strategy::Leftmost)
    }

    fn rule(&self, a: &Letter, b: &Letter) -> Option<Replacement> {
        use Letter::*;
        let one = Poly::one;
        let k = |c: i64| Poly::var().scale(&crate::linalg::rat(c, 1));
        Some(match (a, b) {
            (X(j), X(i)) if j > i => vec![(one(), vec![X(*i), X(*j)])],
            (P(j), P(i)) if j > i => vec![(one(), vec![P(*i), P(*j)])],
            (S(s), X(i)) => vec![(one(), vec![X(s.apply(*i)), S(s.clone())])],
            (P(i), S(s)) => vec![(one(), vec![S(s.clone()), P(s.inverse().apply(*i))])],
            (S(s), S(t)) => vec![(one(), vec![S(s.compose(t))])],
            (P(i), X(j)) if i != j => vec![
                (one(), vec![X(*j), P(*i)]),
                (k(-self.rel.off_diagonal), vec![S(Perm::transposition(self.n, *i, *j))]),
            ],
            (P(i), X(_)) => {
                let mut r = vec![(one(), vec![X(*i), P(*i)]), (Poly::from_i64(-1), vec![])];
                for l in (0..self.n).filter(|&l| l != *i) {
                    r.push((k(self.rel.diagonal), vec![S(Perm::transposition(self.n, *i, l))]));
                }
                r
            }
            _ => return None,
        })
    }

    /// Position and replacement of the next rewrite, or `None` if normal.
    fn step(&self, w: &[Letter]) -> Option<(usize, usize, Replacement)> {
        let single = |i: usize| match &w[i] {
            Letter::S(s) if s.is_identity() => Some((i, 1, vec![(Poly::one(), vec![])])),
            _ => None,
        };
        let pair = |i: usize| {
            if let Some(r) = single(i) {
                return Some(r);
            }
            if i + 1 < w.len() {
                return self.rule(&w[i], &w[i + 1]).map(|r| (i, 2, r));
            }
            None
        };
        match self.strategy {
            Strategy::Leftmost => (0..w.len()).find_map(pair),
            Strategy::Rightmost => (0..w.len()).rev().find_map(pair),
        }
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        for l in w {
            let bad = match l {
                Letter::X(i) | Letter::P(i) => (*i >= self.n).then_some(*i + 1),
                Letter::S(s) => (s.n() != self.n).then_some(s.n()),
            };
            if let Some(index) = bad {
                return Err(Error::GeneratorIndex { index, n: self.n });
            }
        }
        Ok(())
    }

    /// Reduces a linear combination of words to normal form.
    pub fn reduce_all(&self, words: BTreeMap<Vec<Letter>, Poly>) -> Result<CherednikElement> {
        let mut pending = words;
        for w in pending.keys() {
            self.check(w)?;
        }
        let mut out = CherednikElement::zero(self.n);
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.step(&w) {
                None => out.add_term(to_normal(self.n, &w), c),
                Some((pos, len, rep)) => {
                    for (d, mid) in rep {
                        let mut nw = Vec::with_capacity(w.len() + 1);
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend(mid);
                        nw.extend_from_slice(&w[pos + len..]);
                        let slot = pending.entry(nw).or_insert_with(Poly::zero);
                        *slot = slot.add(&c.mul(&d));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn reduce(&self, w: &[Letter]) -> Result<CherednikElement> {
        self.reduce_all(BTreeMap::from([(w.to_vec(), Poly::one())]))
    }

    pub fn multiply(&self, a: &CherednikElement, b: &CherednikElement) -> Result<CherednikElement> {
        if a.n() != self.n || b.n() != self.n {
            return Err(Error::RankMismatch(a.n(), b.n()));
        }
        let mut words: BTreeMap<Vec<Letter>, Poly> = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut w = ma.to_word();
                w.extend(mb.to_word());
                let slot = words.entry(w).or_insert_with(Poly::zero);
                *slot = slot.add(&ca.mul(cb));
            }
        }
        self.reduce_all(words)
    }
}

fn to_normal(n: usize, w: &[Letter]) -> NormalMonomial {
    let mut m = NormalMonomial::identity(n);
    for l in w {
        match l {
            Letter::X(i) => m.x[*i] += 1,
            Letter::P(i) => m.p[*i] += 1,
            Letter::S(s) => m.perm = s.clone(),
        }
    }
    m
}

/// Normal form of a word in `A(n, k)`.
pub fn normal_order(word: &[Letter], n: usize) -> Result<CherednikElement> {
    if n < 2 {
        return Err(Error::RankTooSmall(n, 2));
    }
    Rewriter::standard(n).reduce(word)
}

/// Product in `A(n, k)`.
pub fn multiply(a: &CherednikElement, b: &CherednikElement) -> Result<CherednikElement> {
    if a.n() != b.n() {
        return Err(Error::RankMismatch(a.n(), b.n()));
    }
    Rewriter::standard(a.n()).multiply(a, b)
}

/// The generators `x_i`, `p_i` and the transpositions `s_ij`.
pub fn alphabet(n: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (0..n).map(Letter::X).chain((0..n).map(Letter::P)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Letter::S(Perm::transposition(n, i, j)));
        }
    }
    out
}

/// All words of length at most `max_len` over [`alphabet`].
pub fn all_words(n: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let alpha = alphabet(n);
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &alpha {
                let mut v: Vec<Letter> = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn render_word(w: &[Letter]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Reduces every word of length `≤ max_len` with the leftmost and the
/// rightmost strategy and compares the normal forms.
pub fn confluence_check_with(n: usize, max_len: usize, rel: Relations) -> Report {
    let left = Rewriter::new(n, rel, Strategy::Leftmost);
    let right = Rewriter::new(n, rel, Strategy::Rightmost);
    let words = all_words(n, max_len);
    let mut divergent = None;
    let mut bad = 0usize;
    for w in &words {
        let a = left.reduce(w).expect("alphabet letters are in range");
        let b = right.reduce(w).expect("alphabet letters are in range");
        if a != b {
            bad += 1;
            divergent.get_or_insert_with(|| format!("{}: {a} vs {b}", render_word(w)));
        }
    }
    let mut r = Report::new(format!("confluence, n = {n}, words of length <= {max_len}"));
    let detail = match divergent {
        None => format!("{} words agree", words.len()),
        Some(d) => format!("{bad} of {} words diverge, e.g. {d}", words.len()),
    };
    r.push("leftmost and rightmost reduction agree", bad == 0, detail);
    r
}

pub fn confluence_check(n: usize, max_len: usize) -> Report {
    confluence_check_with(n, max_len, Relations::STANDARD)
}

/// `e = (1/n!) Σ_σ σ`.
pub fn symmetrizer(n: usize) -> CherednikElement {
    let perms = Perm::all(n);
    let c = Poly::constant(crate::linalg::rat(1, perms.len() as i64));
    let mut e = CherednikElement::zero(n);
    for s in perms {
        e = e.add(&CherednikElement::group(s).scale(&c));
    }
    e
}

/// `e · a · e`.
pub fn spherical_product(a: &CherednikElement) -> Result<CherednikElement> {
    let e = symmetrizer(a.n());
    multiply(&multiply(&e, a)?, &e)
}
