//! The Hochschild (bar) complex `C_k(A, M) = A^{⊗k} ⊗ M`.
//!
//! Chains are written coefficient last: a basis chain is `(b₁, …, b_k, m)`
//! with index `((b₁·d + b₂)·d + … + b_k)·dim M + m`. The differential is
//!
//! ```text
//! d(b₁,…,b_k,m) = (b₁,…,b_{k-1}, b_k·m)
//!               + Σ_{j=1}^{k-1} (-1)^j (…, b_{k-j} b_{k-j+1}, …, m)
//!               + (-1)^k (b₂,…,b_k, m·b₁)
//! ```
//!
//! which is `(-1)^k` times the usual `b` on `M ⊗ A^{⊗k}` after reversing
//! the roles of first and last slot, so the homology is `HH_*(A, M)`.

use crate::error::{Error, Result};
use crate::linalg::{rank, Field, Rational};

use super::algebra::{Bimodule, FiniteDimAlgebra, Vector};

pub const DEFAULT_SIZE_CAP: u128 = 10_000_000;

/// Maximum number of dense matrix entries (rows × columns) a single
/// differential may have; `HH_SIZE_CAP` overrides the default.
pub fn size_cap() -> u128 {
    std::env::var("HH_SIZE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

pub struct HochschildComplex<'a> {
    alg: &'a FiniteDimAlgebra,
    module: &'a Bimodule,
}

impl<'a> HochschildComplex<'a> {
    pub fn new(alg: &'a FiniteDimAlgebra, module: &'a Bimodule) -> Result<Self> {
        if module.alg_dim() != alg.dim() {
            return Err(Error::InvalidAlgebra("bimodule is over a different algebra".into()));
        }
        Ok(HochschildComplex { alg, module })
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        self.alg
    }

    pub fn module(&self) -> &Bimodule {
        self.module
    }

    pub fn chain_dim(&self, k: usize) -> u128 {
        (self.alg.dim() as u128).pow(k as u32) * self.module.dim() as u128
    }

    /// `(b₁, …, b_k)` and `m` of a basis chain.
    pub fn decode(&self, k: usize, mut idx: usize) -> (Vec<usize>, usize) {
        let dm = self.module.dim();
        let da = self.alg.dim();
        let m = idx % dm;
        idx /= dm;
        let mut b = vec![0; k];
        for slot in (0..k).rev() {
            b[slot] = idx % da;
            idx /= da;
        }
        (b, m)
    }

    pub fn encode(&self, b: &[usize], m: usize) -> usize {
        let da = self.alg.dim();
        b.iter().fold(0, |acc, &x| acc * da + x) * self.module.dim() + m
    }

    /// `d_k` of a basis chain at level `k ≥ 1`.
    pub fn differential_basis(&self, k: usize, idx: usize) -> Vector {
        assert!(k >= 1, "d_0 is zero");
        let (b, m) = self.decode(k, idx);
        let mut pairs: Vec<(usize, Rational)> = Vec::new();
        // face 0: act on the coefficient from the left
        for (m2, c) in self.module.left(b[k - 1], m).iter() {
            pairs.push((self.encode(&b[..k - 1], *m2), c.clone()));
        }
        // inner faces: merge slots k-j-1 and k-j (0-based)
        let mut merged = Vec::with_capacity(k - 1);
        for j in 1..k {
            let q = k - j - 1;
            let sign = if j % 2 == 0 { Rational::one() } else { Rational::from_i64(-1) };
            for (r, c) in self.alg.basis_product(b[q], b[q + 1]).iter() {
                merged.clear();
                merged.extend_from_slice(&b[..q]);
                merged.push(*r);
                merged.extend_from_slice(&b[q + 2..]);
                pairs.push((self.encode(&merged, m), c.times(&sign)));
            }
        }
        // face k: act on the coefficient from the right with b₁
        let sign = if k % 2 == 0 { Rational::one() } else { Rational::from_i64(-1) };
        for (m2, c) in self.module.right(m, b[0]).iter() {
            pairs.push((self.encode(&b[1..], *m2), c.times(&sign)));
        }
        Vector::from_pairs(pairs)
    }

    /// `d_k` of an arbitrary chain; zero at level 0.
    pub fn differential(&self, k: usize, chain: &Vector) -> Vector {
        if k == 0 {
            return Vector::new();
        }
        let mut pairs = Vec::new();
        for (i, x) in chain.iter() {
            for (j, y) in self.differential_basis(k, *i).iter() {
                pairs.push((*j, x.times(y)));
            }
        }
        Vector::from_pairs(pairs)
    }

    /// Fails when `d_k` would exceed the size cap.
    pub fn check_size(&self, k: usize) -> Result<()> {
        let needed = self.chain_dim(k) * self.chain_dim(k.saturating_sub(1));
        let cap = size_cap();
        if needed > cap {
            return Err(Error::SizeCap { needed, cap });
        }
        Ok(())
    }

    /// Columns of `d_k` (images of the basis chains of level `k`).
    pub fn matrix(&self, k: usize) -> Result<Vec<Vector>> {
        self.check_size(k)?;
        let n = self.chain_dim(k) as usize;
        if k == 0 {
            return Ok(vec![Vector::new(); n]);
        }
        Ok((0..n).map(|i| self.differential_basis(k, i)).collect())
    }

    /// `rank d_k`.
    pub fn differential_rank(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Ok(0);
        }
        Ok(rank(&self.matrix(k)?))
    }

    /// `dim HH_k` for `k = 0..=max_level`.
    pub fn homology_dims(&self, max_level: usize) -> Result<Vec<usize>> {
        self.check_size(max_level + 1)?;
        let ranks: Vec<usize> =
            (0..=max_level + 1).map(|k| self.differential_rank(k)).collect::<Result<_>>()?;
        Ok((0..=max_level)
            .map(|k| self.chain_dim(k) as usize - ranks[k] - ranks[k + 1])
            .collect())
    }
}

/// `dim HH_k(A, M)` for `k = 0..=max_level`.
pub fn hh_dims(alg: &FiniteDimAlgebra, module: &Bimodule, max_level: usize) -> Result<Vec<usize>> {
    HochschildComplex::new(alg, module)?.homology_dims(max_level)
}
