//! Elements of the Weyl algebra `[x, p] = 1`, the trigonometric Weyl algebra
//! `[X, p] = X` (with `X` invertible) and the q-Weyl algebra `XP = qPX`
//! (both invertible), stored in normal order `X^a p^b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{Field, Rational};
use crate::poly::{Poly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Weyl,
    Trig,
    QWeyl,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Weyl, Kind::Trig, Kind::QWeyl];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Weyl => "weyl",
            Kind::Trig => "trig",
            Kind::QWeyl => "qweyl",
        }
    }

    /// Whether `X^a p^b` is a monomial of this algebra.
    pub fn in_domain(self, a: i64, b: i64) -> bool {
        match self {
            Kind::Weyl => a >= 0 && b >= 0,
            Kind::Trig => b >= 0,
            Kind::QWeyl => true,
        }
    }

    /// Monomials of total degree `|a| + |b| ≤ n`, sorted.
    pub fn window(self, n: usize) -> Vec<(i64, i64)> {
        let n = n as i64;
        let mut out = Vec::new();
        for a in -n..=n {
            for b in -n..=n {
                if a.abs() + b.abs() <= n && self.in_domain(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

pub fn degree(m: (i64, i64)) -> usize {
    (m.0.abs() + m.1.abs()) as usize
}

fn binom(n: i64, k: i64) -> Rational {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

/// Finite linear combination of normal-ordered monomials with coefficients
/// in `ℚ(q)` (constants for the Weyl and trigonometric kinds).
#[derive(Clone, PartialEq, Eq)]
pub struct RankOneElement {
    kind: Kind,
    terms: BTreeMap<(i64, i64), RatFunc>,
}

impl RankOneElement {
    pub fn zero(kind: Kind) -> Self {
        RankOneElement { kind, terms: BTreeMap::new() }
    }

    pub fn one(kind: Kind) -> Self {
        Self::term(kind, 0, 0, RatFunc::one())
    }

    pub fn monomial(kind: Kind, a: i64, b: i64) -> Result<Self> {
        if !kind.in_domain(a, b) {
            return Err(Error::ExponentDomain(a, b, kind.name()));
        }
        Ok(Self::term(kind, a, b, RatFunc::one()))
    }

    fn term(kind: Kind, a: i64, b: i64, c: RatFunc) -> Self {
        let mut e = Self::zero(kind);
        e.add_term((a, b), c);
        e
    }

    /// `x` (Weyl) or `X`.
    pub fn gen_x(kind: Kind) -> Self {
        Self::term(kind, 1, 0, RatFunc::one())
    }

    /// `p` or `P`.
    pub fn gen_p(kind: Kind) -> Self {
        Self::term(kind, 0, 1, RatFunc::one())
    }

    pub fn scalar(kind: Kind, c: RatFunc) -> Self {
        Self::term(kind, 0, 0, c)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> RatFunc {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Largest `|a| + |b|` among the terms.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|&m| degree(m)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: (i64, i64), c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(acc) => {
                *acc = acc.plus(&c);
                if acc.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_kind(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(self.kind.name(), other.kind.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&RatFunc::from_i64(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.kind);
        }
        RankOneElement {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, x)| (*m, x.times(c))).collect(),
        }
    }

    /// Normal-ordered product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_kind(other)?;
        let mut out = Self::zero(self.kind);
        for (&l, x) in &self.terms {
            for (&r, y) in &other.terms {
                let xy = x.times(y);
                for (m, c) in monomial_product(self.kind, l, r) {
                    out.add_term(m, c.times(&xy));
                }
            }
        }
        Ok(out)
    }

    /// The involution `ε`: `x, p ↦ -x, -p` (Weyl), `X ↦ X⁻¹, p ↦ -p`
    /// (trigonometric), `X, P ↦ X⁻¹, P⁻¹` (q-Weyl).
    pub fn epsilon(&self) -> Self {
        let mut out = Self::zero(self.kind);
        for (&m, c) in &self.terms {
            let (m2, s) = epsilon_monomial(self.kind, m);
            out.add_term(m2, c.times(&RatFunc::from_i64(s)));
        }
        out
    }
}

/// `ε(X^a p^b) = s · X^{a'} p^{b'}`, always a signed monomial.
pub fn epsilon_monomial(kind: Kind, (a, b): (i64, i64)) -> ((i64, i64), i64) {
    let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
    match kind {
        Kind::Weyl => ((a, b), sign(a + b)),
        Kind::Trig => ((-a, b), sign(b)),
        Kind::QWeyl => ((-a, -b), 1),
    }
}

/// `(X^a p^b)(X^c p^d)` in normal order.
pub fn monomial_product(kind: Kind, (a, b): (i64, i64), (c, d): (i64, i64)) -> Vec<((i64, i64), RatFunc)> {
    match kind {
        // p^b x^c = Σ_k C(b,k) (-1)^k c!/(c-k)! x^{c-k} p^{b-k}
        Kind::Weyl => (0..=b.min(c))
            .map(|k| {
                let mut falling = Rational::from_i64(1);
                for i in 0..k {
                    falling = falling.times(&Rational::from_i64(c - i));
                }
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let coeff = binom(b, k).times(&falling).times(&Rational::from_i64(sign));
                ((a + c - k, b - k + d), RatFunc::constant(coeff))
            })
            .collect(),
        // p X^c = X^c (p - c), so p^b X^c = X^c (p - c)^b
        Kind::Trig => (0..=b)
            .map(|k| {
                let mut pow = Rational::from_i64(1);
                for _ in 0..b - k {
                    pow = pow.times(&Rational::from_i64(-c));
                }
                ((a + c, k + d), RatFunc::constant(binom(b, k).times(&pow)))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect(),
        // P^b X^c = q^{-bc} X^c P^b
        Kind::QWeyl => vec![((a + c, b + d), RatFunc::q_pow(-b * c))],
    }
}

impl fmt::Display for RankOneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (xs, ps) = match self.kind {
            Kind::Weyl => ("x", "p"),
            Kind::Trig => ("X", "p"),
            Kind::QWeyl => ("X", "P"),
        };
        let pow = |v: &str, e: i64| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        // highest degree first
        let mut terms: Vec<(&(i64, i64), &RatFunc)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (std::cmp::Reverse(degree(**m)), std::cmp::Reverse(m.0)));
        for (k, ((a, b), c)) in terms.into_iter().enumerate() {
            let mono = [pow(xs, *a), pow(ps, *b)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let (neg, body) = render_coeff(c, mono.is_empty());
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (body.is_empty(), mono.is_empty()) {
                (true, _) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{body} {mono}")?,
            }
        }
        Ok(())
    }
}

/// `(negative?, text)`; text is empty for a unit coefficient in front of a monomial.
fn render_coeff(c: &RatFunc, bare: bool) -> (bool, String) {
    if let Some(r) = c.as_constant() {
        let neg = r < Rational::from_i64(0);
        let mag = if neg { -r } else { r };
        if mag == Rational::from_i64(1) && !bare {
            return (neg, String::new());
        }
        return (neg, mag.to_string());
    }
    if c.den().is_one() && c.num().coeffs().iter().filter(|x| !x.is_zero()).count() == 1 {
        let neg = c.num().leading() < Rational::from_i64(0);
        let mag = if neg { RatFunc::from_poly(c.num().neg()) } else { c.clone() };
        return (neg, mag.to_string());
    }
    if !c.den().is_one() && c.num().is_constant() && c.den().coeffs().iter().filter(|x| !x.is_zero()).count() == 1 {
        // q^{-e} and friends
        let e = c.den().degree().unwrap_or(0);
        let r = c.num().coeff(0);
        let neg = r < Rational::from_i64(0);
        let mag = if neg { -r } else { r };
        let q = format!("q^-{e}");
        let body = if mag == Rational::from_i64(1) { q } else { format!("{mag} {q}") };
        return (neg, body);
    }
    (false, format!("({c})"))
}

impl fmt::Debug for RankOneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind, self)
    }
}

/// Polynomial `q^e - 1` as an element of `ℚ(q)`.
pub fn q_pow_minus_one(e: i64) -> RatFunc {
    RatFunc::q_pow(e).minus(&RatFunc::one())
}

/// Element of `A^e = A ⊗ A^op`: `(a ⊗ b)(c ⊗ d) = ac ⊗ db`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimonomial {
    kind: Kind,
    terms: BTreeMap<((i64, i64), (i64, i64)), RatFunc>,
}

impl Bimonomial {
    pub fn zero(kind: Kind) -> Self {
        Bimonomial { kind, terms: BTreeMap::new() }
    }

    /// `a ⊗ b` for monomials.
    pub fn pure(kind: Kind, a: (i64, i64), b: (i64, i64)) -> Self {
        let mut t = Self::zero(kind);
        t.add_term((a, b), RatFunc::one());
        t
    }

    pub fn one(kind: Kind) -> Self {
        Self::pure(kind, (0, 0), (0, 0))
    }

    pub fn from_tensor(left: &RankOneElement, right: &RankOneElement) -> Self {
        let mut t = Self::zero(left.kind);
        for (&a, x) in left.terms() {
            for (&b, y) in right.terms() {
                t.add_term((a, b), x.times(y));
            }
        }
        t
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&((i64, i64), (i64, i64)), &RatFunc)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: ((i64, i64), (i64, i64)), c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(acc) => {
                *acc = acc.plus(&c);
                if acc.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.kind);
        for (m, x) in &self.terms {
            out.add_term(*m, x.times(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFunc::from_i64(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.kind);
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let xy = x.times(y);
                for (ac, s) in monomial_product(self.kind, a, c) {
                    for (db, t) in monomial_product(self.kind, d, b) {
                        out.add_term((ac, db), xy.times(&s).times(&t));
                    }
                }
            }
        }
        out
    }

    /// The anti-automorphism `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> Self {
        Bimonomial {
            kind: self.kind,
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// `(a ⊗ b) · f = a f τ(b)` on the twisted bimodule `A_τ`.
    pub fn act(&self, f: &RankOneElement, twist: bool) -> RankOneElement {
        let mut out = RankOneElement::zero(self.kind);
        for (&(a, b), x) in &self.terms {
            let left = RankOneElement::term(self.kind, a.0, a.1, x.clone());
            let right = RankOneElement::term(self.kind, b.0, b.1, RatFunc::one());
            let right = if twist { right.epsilon() } else { right };
            let prod = left.multiply(f).and_then(|lf| lf.multiply(&right)).expect("same kind");
            out = out.add(&prod).expect("same kind");
        }
        out
    }
}

/// The Koszul elements `u` and `w` of `A^e`.
pub fn koszul_elements(kind: Kind) -> (Bimonomial, Bimonomial) {
    let one = Bimonomial::one(kind);
    match kind {
        Kind::Weyl => (
            Bimonomial::pure(kind, (1, 0), (0, 0)).sub(&Bimonomial::pure(kind, (0, 0), (1, 0))),
            Bimonomial::pure(kind, (0, 1), (0, 0)).sub(&Bimonomial::pure(kind, (0, 0), (0, 1))),
        ),
        Kind::Trig => (
            Bimonomial::pure(kind, (1, 0), (-1, 0)).sub(&one),
            Bimonomial::pure(kind, (0, 1), (0, 0)).sub(&Bimonomial::pure(kind, (0, 0), (0, 1))),
        ),
        Kind::QWeyl => (
            Bimonomial::pure(kind, (1, 0), (-1, 0)).sub(&one),
            Bimonomial::pure(kind, (0, 1), (0, -1)).sub(&one),
        ),
    }
}

/// Units `v_u, v_w` with `flip(u) = -v_u u` and `flip(w) = -v_w w`.
pub fn flip_units(kind: Kind) -> (Bimonomial, Bimonomial) {
    let one = Bimonomial::one(kind);
    match kind {
        Kind::Weyl => (one.clone(), one),
        Kind::Trig => (Bimonomial::pure(kind, (-1, 0), (1, 0)), one),
        Kind::QWeyl => (
            Bimonomial::pure(kind, (-1, 0), (1, 0)),
            Bimonomial::pure(kind, (0, -1), (0, 1)),
        ),
    }
}

/// `γ_u, γ_w` with `ε(u) = γ_u u`, `ε(w) = γ_w w` (ε applied to both factors).
pub fn epsilon_cocycles(kind: Kind) -> (Bimonomial, Bimonomial) {
    let one = Bimonomial::one(kind);
    let minus = |b: Bimonomial| b.scale(&RatFunc::from_i64(-1));
    match kind {
        Kind::Weyl => (minus(one.clone()), minus(one)),
        Kind::Trig => (minus(Bimonomial::pure(kind, (-1, 0), (1, 0))), minus(one)),
        Kind::QWeyl => (
            minus(Bimonomial::pure(kind, (-1, 0), (1, 0))),
            minus(Bimonomial::pure(kind, (0, -1), (0, 1))),
        ),
    }
}

impl Bimonomial {
    /// `ε ⊗ ε`.
    pub fn epsilon(&self) -> Self {
        let mut out = Self::zero(self.kind);
        for (&(a, b), c) in &self.terms {
            let (a2, s) = epsilon_monomial(self.kind, a);
            let (b2, t) = epsilon_monomial(self.kind, b);
            out.add_term((a2, b2), c.times(&RatFunc::from_i64(s * t)));
        }
        out
    }
}

/// `ℚ(q)` constant helper for tests and callers.
pub fn constant(c: i64) -> RatFunc {
    RatFunc::from_poly(Poly::from_i64(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(kind: Kind, a: i64, b: i64) -> RankOneElement {
        RankOneElement::monomial(kind, a, b).unwrap()
    }

    #[test]
    fn defining_relations() {
        let k = Kind::Weyl;
        let px = RankOneElement::gen_p(k).multiply(&RankOneElement::gen_x(k)).unwrap();
        assert_eq!(px, mono(k, 1, 1).sub(&RankOneElement::one(k)).unwrap());
        assert_eq!(px.to_string(), "x p - 1");

        let k = Kind::QWeyl;
        let px = RankOneElement::gen_p(k).multiply(&RankOneElement::gen_x(k)).unwrap();
        assert_eq!(px, mono(k, 1, 1).scale(&RatFunc::q_pow(-1)));
        assert_eq!(px.to_string(), "q^-1 X P");

        let k = Kind::Trig;
        let px = RankOneElement::gen_p(k).multiply(&RankOneElement::gen_x(k)).unwrap();
        assert_eq!(px, mono(k, 1, 1).sub(&mono(k, 1, 0)).unwrap());
        assert_eq!(px.to_string(), "X p - X");
    }

    #[test]
    fn kind_and_domain_errors() {
        assert!(matches!(RankOneElement::monomial(Kind::Weyl, -1, 0), Err(Error::ExponentDomain(..))));
        assert!(RankOneElement::monomial(Kind::Trig, -1, 0).is_ok());
        assert!(RankOneElement::monomial(Kind::Trig, 0, -1).is_err());
        let a = RankOneElement::one(Kind::Weyl);
        let b = RankOneElement::one(Kind::Trig);
        assert!(matches!(a.multiply(&b), Err(Error::KindMismatch(..))));
    }

    #[test]
    fn inverses_in_trig_and_qweyl() {
        for k in [Kind::Trig, Kind::QWeyl] {
            let x = mono(k, 1, 0);
            let xi = mono(k, -1, 0);
            assert_eq!(x.multiply(&xi).unwrap(), RankOneElement::one(k));
            assert_eq!(xi.multiply(&x).unwrap(), RankOneElement::one(k));
        }
        let k = Kind::QWeyl;
        assert_eq!(mono(k, 0, -1).multiply(&mono(k, 0, 1)).unwrap(), RankOneElement::one(k));
    }

    #[test]
    fn epsilon_is_an_involutive_automorphism() {
        for k in Kind::ALL {
            let w = k.window(3);
            for &l in &w {
                for &r in &w {
                    let (a, b) = (mono(k, l.0, l.1), mono(k, r.0, r.1));
                    let lhs = a.multiply(&b).unwrap().epsilon();
                    let rhs = a.epsilon().multiply(&b.epsilon()).unwrap();
                    assert_eq!(lhs, rhs, "{k}: {l:?} {r:?}");
                    assert_eq!(a.epsilon().epsilon(), a);
                }
            }
        }
    }

    #[test]
    fn koszul_elements_commute_and_flip() {
        for k in Kind::ALL {
            let (u, w) = koszul_elements(k);
            assert_eq!(u.mul(&w), w.mul(&u), "{k}");
            let (vu, vw) = flip_units(k);
            let minus = RatFunc::from_i64(-1);
            assert_eq!(u.flip(), vu.mul(&u).scale(&minus), "{k}");
            assert_eq!(w.flip(), vw.mul(&w).scale(&minus), "{k}");
            let (gu, gw) = epsilon_cocycles(k);
            assert_eq!(u.epsilon(), gu.mul(&u), "{k}");
            assert_eq!(w.epsilon(), gw.mul(&w), "{k}");
        }
    }

    #[test]
    fn qweyl_u_is_diagonal() {
        let k = Kind::QWeyl;
        let (u, _) = koszul_elements(k);
        for (a, b) in k.window(3) {
            let f = mono(k, a, b);
            assert_eq!(u.act(&f, false), f.scale(&q_pow_minus_one(b)));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn element(kind: Kind) -> impl Strategy<Value = RankOneElement> {
            proptest::collection::vec((-2i64..3, -2i64..3, -3i64..4), 1..4).prop_map(move |ts| {
                let mut e = RankOneElement::zero(kind);
                for (a, b, c) in ts {
                    let (a, b) = if kind.in_domain(a, b) { (a, b) } else { (a.abs(), b.abs()) };
                    let t = RankOneElement::monomial(kind, a, b).unwrap();
                    let c = if kind == Kind::QWeyl {
                        RatFunc::q_pow(c).plus(&constant(c))
                    } else {
                        constant(c)
                    };
                    e = e.add(&t.scale(&c)).unwrap();
                }
                e
            })
        }

        fn any_kind() -> impl Strategy<Value = Kind> {
            prop_oneof![Just(Kind::Weyl), Just(Kind::Trig), Just(Kind::QWeyl)]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]
            #[test]
            fn multiplication_is_associative(
                (a, b, c) in any_kind().prop_flat_map(|k| (element(k), element(k), element(k)))
            ) {
                let l = a.multiply(&b).unwrap().multiply(&c).unwrap();
                let r = a.multiply(&b.multiply(&c).unwrap()).unwrap();
                prop_assert_eq!(l, r);
            }
        }
    }
}
