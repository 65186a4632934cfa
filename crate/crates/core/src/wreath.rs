//! Hochschild (co)homology dimensions of `A(n) = ℚ[S_n] ⋉ A^{⊗n}` from the
//! Betti table of `A`.
//!
//! Two independent routes are provided: a sum over partitions of `n`
//! (each cycle type contributes a tensor product of super symmetric powers)
//! and an infinite product generating function. They must agree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::betti::{super_sym_powers, validate, BettiTable};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::series::BiSeries;

fn partition_term(lambda: &Partition, part_table: impl Fn(usize) -> BettiTable) -> BettiTable {
    let mut acc = BettiTable::unit();
    for (i, m) in lambda.multiplicities() {
        let base = part_table(i);
        let tb = base.max_degree().unwrap_or(0) as usize * m;
        let s = super_sym_powers(&base, m, tb);
        acc = acc.tensor(&s[m]);
    }
    acc
}

/// Homological table of `A(n)`: `⊕_λ ⊗_i S^{p_i(λ)} HH_*(A)`, no shifts.
pub fn hh_homology_wreath(hom: &BettiTable, n: usize) -> BettiTable {
    enumerate(n)
        .iter()
        .fold(BettiTable::new(), |acc, l| acc.direct_sum(&partition_term(l, |_| hom.clone())))
}

/// Cohomological table of `A(n)` for `A` of dimension `d`: a part of size
/// `i` contributes `HH^*(A)` shifted up by `d(i-1)`.
pub fn hh_cohomology_wreath(coh: &BettiTable, d: u32, n: usize) -> Result<BettiTable> {
    validate(d, coh)?;
    let mut out = BettiTable::new();
    for l in enumerate(n) {
        let term = partition_term(&l, |i| {
            coh.shift(d as i64 * (i as i64 - 1)).expect("d is even")
        });
        out = out.direct_sum(&term);
    }
    Ok(out)
}

/// `∏_{m≥1} ∏_k (1 + (-1)^{k-1} q^m t^{k+d(m-1)})^{(-1)^{k-1} b_k}` truncated.
pub fn generating_series_product(
    coh: &BettiTable,
    d: u32,
    q_bound: usize,
    t_bound: usize,
) -> Result<BiSeries> {
    validate(d, coh)?;
    let mut s = BiSeries::one(q_bound, t_bound);
    for m in 1..=q_bound as i64 {
        for (k, b) in coh.iter() {
            let texp = k as i64 + d as i64 * (m - 1);
            let b = b as i64;
            s = if k % 2 == 0 {
                s.apply_factor(-1, m, texp, -b)?
            } else {
                s.apply_factor(1, m, texp, b)?
            };
        }
    }
    Ok(s)
}

/// `Σ_n qⁿ · P(HH^*(A(n)))` assembled from the partition sums.
pub fn generating_series_sum(
    coh: &BettiTable,
    d: u32,
    q_bound: usize,
    t_bound: usize,
) -> Result<BiSeries> {
    validate(d, coh)?;
    let mut s = BiSeries::zero(q_bound, t_bound);
    for n in 0..=q_bound {
        for (i, dim) in hh_cohomology_wreath(coh, d, n)?.iter() {
            if (i as usize) <= t_bound {
                s.set(n, i as usize, BigInt::from(dim));
            }
        }
    }
    Ok(s)
}

/// The six closed-form products for types A and B over the Weyl,
/// trigonometric and q-Weyl algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    PA,
    PATrig,
    PAQ,
    PB,
    PBTrig,
    PBQ,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::PA,
        ClosedForm::PATrig,
        ClosedForm::PAQ,
        ClosedForm::PB,
        ClosedForm::PBTrig,
        ClosedForm::PBQ,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClosedForm::PA => "PA",
            ClosedForm::PATrig => "PA_trig",
            ClosedForm::PAQ => "PA_q",
            ClosedForm::PB => "PB",
            ClosedForm::PBTrig => "PB_trig",
            ClosedForm::PBQ => "PB_q",
        }
    }

    /// The preset whose generating function this is.
    pub fn preset_name(self) -> &'static str {
        match self {
            ClosedForm::PA => "weyl",
            ClosedForm::PATrig => "trig",
            ClosedForm::PAQ => "qweyl",
            ClosedForm::PB => "z2_weyl",
            ClosedForm::PBTrig => "z2_trig",
            ClosedForm::PBQ => "z2_qweyl",
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// Expand a closed form, factor by factor as written.
pub fn closed_form(label: ClosedForm, q_bound: usize, t_bound: usize) -> BiSeries {
    let mut s = BiSeries::one(q_bound, t_bound);
    for m in 1..=q_bound as i64 {
        let mut f = |sign: i8, texp: i64, power: i64| {
            s = s.apply_factor(sign, m, texp, power).expect("m >= 1");
        };
        f(-1, 2 * (m - 1), -1);
        match label {
            ClosedForm::PA => {}
            ClosedForm::PATrig => f(1, 2 * m - 1, 1),
            ClosedForm::PAQ => {
                f(-1, 2 * m, -1);
                f(1, 2 * m - 1, 2);
            }
            ClosedForm::PB => f(-1, 2 * m, -1),
            ClosedForm::PBTrig => f(-1, 2 * m, -2),
            ClosedForm::PBQ => f(-1, 2 * m, -5),
        }
    }
    s
}

/// `∏ (1 - q^m t^{2(m-1)})^{-1} (1 - q^m t^{2m})^{1-ν}` for a finite
/// subgroup of `SL_2` with `ν` conjugacy classes.
pub fn gamma_series(nu: i64, q_bound: usize, t_bound: usize) -> Result<BiSeries> {
    if nu < 1 {
        return Err(Error::InvalidClassCount(nu));
    }
    let mut s = BiSeries::one(q_bound, t_bound);
    for m in 1..=q_bound as i64 {
        s = s.apply_factor(-1, m, 2 * (m - 1), -1)?;
        s = s.apply_factor(-1, m, 2 * m, 1 - nu)?;
    }
    Ok(s)
}

/// Poincaré polynomial (coefficient list) of `HH^*(S^n A)` for a surface-like
/// table supported in `[0, 2]`.
pub fn hilb_poincare(surface_coh: &BettiTable, n: usize) -> Result<Vec<u64>> {
    Ok(hh_cohomology_wreath(surface_coh, 2, n)?.to_dense())
}

/// `dim HH²(A(n))`, the number of formal deformation parameters of `A(n)`.
/// Requires `HH⁰(A)` one-dimensional and `n ≥ 2`.
pub fn deformation_parameter_count(coh: &BettiTable, d: u32, n: usize) -> Result<u64> {
    if coh.get(0) != 1 {
        return Err(Error::NonUnitalCenter(coh.get(0)));
    }
    if n < 2 {
        return Err(Error::RankTooSmall(n, 2));
    }
    Ok(hh_cohomology_wreath(coh, d, n)?.get(2))
}

/// `b₂ + b₁(b₁-1)/2 + 1`, the expected count for `d = 2`.
pub fn deformation_count_formula(coh: &BettiTable) -> u64 {
    let b1 = coh.get(1);
    coh.get(2) + b1 * b1.saturating_sub(1) / 2 + 1
}

/// Coefficients of `qⁿ` in a series as a `u64` list (for small tables).
pub fn q_row(s: &BiSeries, n: usize) -> Vec<u64> {
    s.q_coefficient(n).iter().map(|c| c.to_u64().unwrap_or(0)).collect()
}
