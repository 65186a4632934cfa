//! Betti tables of graded super vector spaces.
//!
//! A table maps a degree `i` to a dimension; classes in degree `i` have
//! parity `(-1)^i`. The same type holds homological and cohomological data.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::series::BiSeries;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    dims: BTreeMap<u32, u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{0: 1}`, the ground field.
    pub fn unit() -> Self {
        Self::from_pairs([(0, 1)])
    }

    /// Build from `(degree, dim)` pairs; repeated degrees are summed, zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u64)>>(pairs: I) -> Self {
        let mut t = Self::new();
        for (deg, dim) in pairs {
            t.add_dim(deg, dim);
        }
        t
    }

    /// Dense list, index = degree.
    pub fn from_dense(dims: &[u64]) -> Self {
        Self::from_pairs(dims.iter().enumerate().map(|(i, &d)| (i as u32, d)))
    }

    pub fn add_dim(&mut self, degree: u32, dim: u64) {
        if dim > 0 {
            *self.dims.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.dims.iter().map(|(&i, &d)| (i, d))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.dims.keys().next_back().copied()
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Dense list up to the top degree (empty for the zero table).
    pub fn to_dense(&self) -> Vec<u64> {
        match self.max_degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|i| self.get(i)).collect(),
        }
    }

    /// Move every class up by `s`; `s` must be even so parities survive.
    pub fn shift(&self, s: i64) -> Result<Self> {
        if s % 2 != 0 || s < 0 {
            return Err(Error::OddShift(s));
        }
        Ok(Self::from_pairs(self.iter().map(|(i, d)| (i + s as u32, d))))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add_dim(i + j, a * b);
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }

    /// Dual table about degree `top`: degree `i` goes to `top - i`.
    pub fn reflect(&self, top: u32) -> Self {
        Self::from_pairs(self.iter().map(|(i, d)| (top - i, d)))
    }
}

/// `S^p V` for `p = 0..=pmax`, truncated to degrees `≤ t_bound`.
///
/// Even classes contribute `(1 - z t^j)^{-m}`, odd classes `(1 + z t^j)^m`;
/// entry `p` is the `z^p` coefficient.
pub fn super_sym_powers(v: &BettiTable, pmax: usize, t_bound: usize) -> Vec<BettiTable> {
    let mut s = BiSeries::one(pmax, t_bound);
    for (j, m) in v.iter() {
        let m = m as i64;
        s = if j % 2 == 0 {
            s.apply_factor(-1, 1, j as i64, -m)
        } else {
            s.apply_factor(1, 1, j as i64, m)
        }
        .expect("z-exponent 1 is always invertible");
    }
    (0..=pmax)
        .map(|p| {
            BettiTable::from_pairs((0..=t_bound).map(|i| {
                let c = s.coeff(p, i).to_u64().expect("symmetric power dims are nonnegative");
                (i as u32, c)
            }))
        })
        .collect()
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, d)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {d}")?;
        }
        write!(f, "}}")
    }
}

/// A named algebra with dimension `d` (even) and its cohomological Betti table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPreset {
    pub name: String,
    pub d: u32,
    pub betti: BettiTable,
}

impl AlgebraPreset {
    pub fn new(name: impl Into<String>, d: u32, betti: BettiTable) -> Result<Self> {
        validate(d, &betti)?;
        Ok(AlgebraPreset { name: name.into(), d, betti })
    }
}

/// `d` even and positive, classes only in `[0, d]`.
pub fn validate(d: u32, betti: &BettiTable) -> Result<()> {
    if d == 0 || d % 2 != 0 {
        return Err(Error::OddDimension(d));
    }
    if let Some(top) = betti.max_degree() {
        if top > d {
            return Err(Error::SupportOutOfRange { degree: top, bound: d });
        }
    }
    Ok(())
}
