//! Truncated bivariate power series in `q` (symmetric-power rank) and `t`
//! (cohomological degree) with arbitrary-precision integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Σ c[n][i] qⁿ tⁱ for 0 ≤ n ≤ q_bound, 0 ≤ i ≤ t_bound.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    q_bound: usize,
    t_bound: usize,
    coeff: Vec<BigInt>,
}

impl BiSeries {
    pub fn zero(q_bound: usize, t_bound: usize) -> Self {
        BiSeries { q_bound, t_bound, coeff: vec![BigInt::zero(); (q_bound + 1) * (t_bound + 1)] }
    }

    pub fn one(q_bound: usize, t_bound: usize) -> Self {
        let mut s = Self::zero(q_bound, t_bound);
        s.coeff[0] = BigInt::one();
        s
    }

    /// Build from `(n, i, c)` triples; entries beyond the bounds are dropped.
    pub fn from_terms<I>(q_bound: usize, t_bound: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut s = Self::zero(q_bound, t_bound);
        for (n, i, c) in terms {
            if n <= q_bound && i <= t_bound {
                let k = s.idx(n, i);
                s.coeff[k] += c;
            }
        }
        s
    }

    pub fn q_bound(&self) -> usize {
        self.q_bound
    }

    pub fn t_bound(&self) -> usize {
        self.t_bound
    }

    fn idx(&self, n: usize, i: usize) -> usize {
        n * (self.t_bound + 1) + i
    }

    /// Coefficient of qⁿ tⁱ; zero outside the bounds.
    pub fn coeff(&self, n: usize, i: usize) -> BigInt {
        if n > self.q_bound || i > self.t_bound {
            return BigInt::zero();
        }
        self.coeff[self.idx(n, i)].clone()
    }

    pub fn set(&mut self, n: usize, i: usize, c: BigInt) {
        assert!(n <= self.q_bound && i <= self.t_bound, "index out of bounds");
        let k = self.idx(n, i);
        self.coeff[k] = c;
    }

    /// The polynomial in t multiplying qⁿ, as a coefficient list.
    pub fn q_coefficient(&self, n: usize) -> Vec<BigInt> {
        let row = &self.coeff[self.idx(n, 0)..=self.idx(n, self.t_bound)];
        let mut v = row.to_vec();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    /// Nonzero `(n, i, c)` triples in (n, i) order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        (0..=self.q_bound).flat_map(move |n| {
            (0..=self.t_bound).filter_map(move |i| {
                let c = &self.coeff[self.idx(n, i)];
                (!c.is_zero()).then_some((n, i, c))
            })
        })
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.q_bound != other.q_bound || self.t_bound != other.t_bound {
            return Err(Error::BoundsMismatch(
                self.q_bound,
                self.t_bound,
                other.q_bound,
                other.t_bound,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let coeff = self.coeff.iter().zip(&other.coeff).map(|(a, b)| a + b).collect();
        Ok(BiSeries { coeff, ..*self })
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = Self::zero(self.q_bound, self.t_bound);
        for (n1, i1, a) in self.terms() {
            for n2 in 0..=(self.q_bound - n1) {
                for i2 in 0..=(self.t_bound - i1) {
                    let b = &other.coeff[other.idx(n2, i2)];
                    if !b.is_zero() {
                        let k = out.idx(n1 + n2, i1 + i2);
                        out.coeff[k] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiply by `(1 + sign·q^qexp·t^texp)^power`; negative powers expand
    /// geometrically, which is exact under truncation when `qexp ≥ 1`.
    pub fn apply_factor(&self, sign: i8, qexp: i64, texp: i64, power: i64) -> Result<Self> {
        if qexp < 0 || texp < 0 {
            return Err(Error::NegativeExponent { qexp, texp });
        }
        if qexp == 0 && power < 0 {
            return Err(Error::NonInvertibleFactor { qexp, power });
        }
        let c = if sign >= 0 { BigInt::one() } else { -BigInt::one() };
        let (qe, te) = (qexp as usize, texp as usize);
        let mut out = self.clone();
        if qe > self.q_bound || te > self.t_bound {
            return Ok(out);
        }
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                // f ← f + c·m·f, walking down so sources are still old values
                for n in (qe..=self.q_bound).rev() {
                    for i in (te..=self.t_bound).rev() {
                        let src = out.coeff[out.idx(n - qe, i - te)].clone();
                        if !src.is_zero() {
                            let k = out.idx(n, i);
                            out.coeff[k] += &c * src;
                        }
                    }
                }
            } else {
                // f ← f / (1 + c·m): g = f - c·m·g, walking up
                for n in qe..=self.q_bound {
                    for i in te..=self.t_bound {
                        let src = out.coeff[out.idx(n - qe, i - te)].clone();
                        if !src.is_zero() {
                            let k = out.idx(n, i);
                            out.coeff[k] -= &c * src;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Restrict to smaller bounds.
    pub fn restrict(&self, q_bound: usize, t_bound: usize) -> Self {
        assert!(q_bound <= self.q_bound && t_bound <= self.t_bound, "restriction must shrink");
        let mut out = Self::zero(q_bound, t_bound);
        for n in 0..=q_bound {
            for i in 0..=t_bound {
                let k = out.idx(n, i);
                out.coeff[k] = self.coeff(n, i);
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeff.iter().all(|c| !c.is_negative())
    }
}

fn mono(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// `c·m` with the sign folded out; `m` may be empty.
fn signed_term(c: &BigInt, m: &str) -> (bool, String) {
    let mag = c.abs();
    let body = if m.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        m.to_string()
    } else {
        format!("{mag}{m}")
    };
    (c.is_negative(), body)
}

fn join_signed(parts: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in parts.iter().enumerate() {
        if k == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

impl fmt::Display for BiSeries {
    /// `1 + q + q^2(1 + t^2) + …`: one summand per power of q, with its
    /// t-polynomial in parentheses when it has several terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for n in 0..=self.q_bound {
            let row: Vec<(usize, &BigInt)> = (0..=self.t_bound)
                .map(|i| (i, &self.coeff[self.idx(n, i)]))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            match row.as_slice() {
                [] => {}
                [(i, c)] => parts.push(signed_term(c, &(mono('q', n) + &mono('t', *i)))),
                _ => {
                    let inner: Vec<(bool, String)> =
                        row.iter().map(|(i, c)| signed_term(c, &mono('t', *i))).collect();
                    let poly = join_signed(&inner);
                    let body = if n == 0 { poly } else { format!("{}({poly})", mono('q', n)) };
                    parts.push((false, body));
                }
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", join_signed(&parts))
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiSeries[q<={}, t<={}]({})", self.q_bound, self.t_bound, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_one_plus_q() {
        let a = BiSeries::from_terms(3, 0, [(0, 0, 1), (1, 0, 1)]);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, BiSeries::from_terms(3, 0, [(0, 0, 1), (1, 0, 2), (2, 0, 1)]));
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = BiSeries::from_terms(4, 4, [(0, 0, 3), (2, 1, -5), (4, 4, 7)]);
        assert_eq!(a.mul(&BiSeries::one(4, 4)).unwrap(), a);
    }

    #[test]
    fn difference_of_squares() {
        let a = BiSeries::from_terms(4, 4, [(0, 0, 1), (1, 1, 1)]);
        let b = BiSeries::from_terms(4, 4, [(0, 0, 1), (1, 1, -1)]);
        assert_eq!(a.mul(&b).unwrap(), BiSeries::from_terms(4, 4, [(0, 0, 1), (2, 2, -1)]));
    }

    #[test]
    fn mismatched_bounds_rejected() {
        let a = BiSeries::one(2, 2);
        let b = BiSeries::one(3, 2);
        assert!(matches!(a.mul(&b), Err(Error::BoundsMismatch(..))));
    }

    #[test]
    fn geometric_series_factor() {
        let s = BiSeries::one(5, 0).apply_factor(-1, 1, 0, -1).unwrap();
        for n in 0..=5 {
            assert_eq!(s.coeff(n, 0), BigInt::one());
        }
    }

    #[test]
    fn squared_binomial_factor() {
        let s = BiSeries::one(3, 3).apply_factor(1, 1, 1, 2).unwrap();
        assert_eq!(s, BiSeries::from_terms(3, 3, [(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    }

    #[test]
    fn geometric_in_q2_t2() {
        let s = BiSeries::one(6, 6).apply_factor(-1, 2, 2, -1).unwrap();
        assert_eq!(s, BiSeries::from_terms(6, 6, [(0, 0, 1), (2, 2, 1), (4, 4, 1), (6, 6, 1)]));
    }

    #[test]
    fn zero_qexp_negative_power_rejected() {
        let r = BiSeries::one(3, 3).apply_factor(1, 0, 1, -1);
        assert!(matches!(r, Err(Error::NonInvertibleFactor { .. })));
        // positive powers are fine
        assert!(BiSeries::one(3, 3).apply_factor(1, 0, 1, 2).is_ok());
    }

    #[test]
    fn factor_beyond_bound_is_noop() {
        let a = BiSeries::from_terms(2, 2, [(0, 0, 1), (1, 2, 4)]);
        assert_eq!(a.apply_factor(-1, 3, 0, -4).unwrap(), a);
    }

    #[test]
    fn display_matches_expected_shape() {
        let s = BiSeries::from_terms(3, 6, [(0, 0, 1), (1, 0, 1), (2, 0, 1), (2, 2, 1)]);
        assert_eq!(s.to_string(), "1 + q + q^2(1 + t^2)");
        let s = BiSeries::from_terms(2, 2, [(1, 2, -3), (2, 0, 1), (2, 1, -1)]);
        assert_eq!(s.to_string(), "-3qt^2 + q^2(1 - t)");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const QB: usize = 4;
        const TB: usize = 5;

        fn series() -> impl Strategy<Value = BiSeries> {
            proptest::collection::vec(-3i64..4, (QB + 1) * (TB + 1)).prop_map(|v| {
                BiSeries::from_terms(
                    QB,
                    TB,
                    v.into_iter().enumerate().map(|(k, c)| (k / (TB + 1), k % (TB + 1), c)),
                )
            })
        }

        proptest! {
            #[test]
            fn mul_commutative_associative(a in series(), b in series(), c in series()) {
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                prop_assert_eq!(
                    a.mul(&b).unwrap().mul(&c).unwrap(),
                    a.mul(&b.mul(&c).unwrap()).unwrap()
                );
            }

            #[test]
            fn inverse_factors_cancel(
                a in series(),
                neg in any::<bool>(),
                m in 1i64..4,
                j in 0i64..4,
                e in -3i64..4,
            ) {
                let sign = if neg { -1 } else { 1 };
                let b = a.apply_factor(sign, m, j, e).unwrap();
                prop_assert_eq!(b.apply_factor(sign, m, j, -e).unwrap(), a);
            }

            #[test]
            fn truncation_consistent(
                factors in proptest::collection::vec((any::<bool>(), 1i64..4, 0i64..5, -2i64..3), 0..5),
                qb in 0usize..=QB,
                tb in 0usize..=TB,
            ) {
                let build = |q, t| {
                    factors.iter().fold(BiSeries::one(q, t), |s, &(neg, m, j, e)| {
                        s.apply_factor(if neg { -1 } else { 1 }, m, j, e).unwrap()
                    })
                };
                prop_assert_eq!(build(QB, TB).restrict(qb, tb), build(qb, tb));
            }
        }
    }
}
