//! Brute-force verification of the wreath-product building blocks:
//! twisted-coefficient isomorphism, the cyclic homotopy, and the
//! decomposition of crossed-product homology over conjugacy classes.

use std::collections::HashMap;

use rand::Rng;

use crate::error::Result;
use crate::linalg::{rank, Echelon, Field, Rational, Rref};
use crate::presets::Report;

use super::algebra::{kron, Bimodule, FiniteDimAlgebra, GroupAction, LinearMap, Vector};
use super::complex::{size_cap, HochschildComplex};
use crate::error::Error;

/// Per-level dimensions from two independent computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelComparison {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl LevelComparison {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_report(&self, title: &str) -> Report {
        let mut r = Report::new(title);
        for (k, (a, b)) in self.lhs.iter().zip(&self.rhs).enumerate() {
            r.push(format!("level {k}"), a == b, format!("{a} vs {b}"));
        }
        r
    }
}

/// Compare `HH_*(A^{⊗n}, (A^{⊗(n-1)} ⊗ A)σ)` for the cyclic permutation σ
/// with `HH_*(A, A)`.
pub fn verify_homolog_i(a: &FiniteDimAlgebra, n: usize, max_level: usize) -> Result<LevelComparison> {
    let an = a.tensor_power(n);
    let twisted = Bimodule::twisted(&an, &LinearMap::cyclic_shift(a.dim(), n));
    let lhs = HochschildComplex::new(&an, &twisted)?.homology_dims(max_level)?;
    let rhs = HochschildComplex::new(a, &Bimodule::regular(a))?.homology_dims(max_level)?;
    Ok(LevelComparison { lhs, rhs })
}

/// Chains of `A^{⊗n}` with coefficients in the cyclically twisted module,
/// viewed as `n × m` matrices: column `j` is the `j`-th tensor slot, the
/// last column is the coefficient.
pub struct CyclicChains {
    an: FiniteDimAlgebra,
    module: Bimodule,
    phi: LinearMap,
}

impl CyclicChains {
    pub fn new(a: &FiniteDimAlgebra, n: usize) -> Self {
        let an = a.tensor_power(n);
        let phi = LinearMap::cyclic_shift(a.dim(), n);
        let module = Bimodule::twisted(&an, &phi);
        CyclicChains { an, module, phi }
    }

    pub fn complex(&self) -> HochschildComplex<'_> {
        HochschildComplex::new(&self.an, &self.module).expect("module matches algebra")
    }

    fn width(&self) -> usize {
        self.an.dim()
    }

    fn columns(&self, m: usize, mut idx: usize) -> Vec<usize> {
        let d = self.width();
        let mut cols = vec![0; m];
        for c in (0..m).rev() {
            cols[c] = idx % d;
            idx /= d;
        }
        cols
    }

    /// Apply a linear map to each of the chosen columns of every basis chain.
    fn map_columns(&self, chain: &Vector, m: usize, perm: impl Fn(&[usize]) -> Vec<usize>, which: impl Fn(usize) -> bool) -> Vector {
        let d = self.width();
        let mut pairs = Vec::new();
        for (idx, x) in chain.iter() {
            let cols = perm(&self.columns(m, *idx));
            let mut acc = Vector::from_pairs([(0, x.clone())]);
            for (c, &col) in cols.iter().enumerate() {
                let factor = if which(c) { self.phi.image(col).clone() } else { Vector::unit(col) };
                acc = kron(&acc, &factor, d);
            }
            pairs.extend(acc.iter().cloned());
        }
        Vector::from_pairs(pairs)
    }

    /// σ applied to every column.
    pub fn sigma(&self, chain: &Vector, m: usize) -> Vector {
        self.map_columns(chain, m, |c| c.to_vec(), |_| true)
    }

    /// First column moved to the end, with σ applied to it.
    pub fn s(&self, chain: &Vector, m: usize) -> Vector {
        self.map_columns(
            chain,
            m,
            |c| {
                let mut v = c[1..].to_vec();
                v.push(c[0]);
                v
            },
            |c| c == m - 1,
        )
    }

    /// Append a column of units (the new coefficient).
    pub fn append_unit(&self, chain: &Vector) -> Vector {
        kron(chain, self.an.unit(), self.width())
    }

    /// `d(Σ_{j<m} (-1)^{j(m-1)} s^j(C) ⊗ 1^{⊗n})` for an `n × m` matrix `C`.
    pub fn homotopy(&self, chain: &Vector, m: usize) -> Vector {
        let mut sum = Vector::new();
        let mut cur = chain.clone();
        for j in 0..m {
            let sign = if (j * (m - 1)) % 2 == 0 { Rational::one() } else { Rational::from_i64(-1) };
            sum = sum.axpy(&sign, &cur);
            cur = self.s(&cur, m);
        }
        self.complex().differential(m, &self.append_unit(&sum))
    }

    /// A random cycle of level `m - 1` with small integer coordinates in a
    /// kernel basis.
    pub fn random_cycle<R: Rng>(&self, m: usize, rng: &mut R, kernel: Option<&Rref<Rational>>) -> Vector {
        let dim = self.complex().chain_dim(m - 1) as usize;
        let free: Vec<usize> = match kernel {
            Some(rref) => rref.free_columns(),
            None => (0..dim).collect(),
        };
        let mut values: HashMap<usize, Rational> = HashMap::new();
        let picks = rng.random_range(1..=4usize);
        for _ in 0..picks {
            let c = free[rng.random_range(0..free.len())];
            let mut v = rng.random_range(-3i64..=3);
            if v == 0 {
                v = 1;
            }
            values.insert(c, Rational::from_i64(v));
        }
        match kernel {
            Some(rref) => rref.kernel_vector(&values),
            None => Vector::from_pairs(values),
        }
    }

    /// Kernel of `d_{m-1}` in row-reduced form (`None` at level 0).
    pub fn cycle_space(&self, m: usize) -> Result<Option<Rref<Rational>>> {
        if m == 1 {
            return Ok(None);
        }
        let cols = self.complex().matrix(m - 1)?;
        Ok(Some(Rref::from_columns(&cols)))
    }
}

/// Outcome of the homotopy check for one `(A, n, m)` configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyReport {
    pub n: usize,
    pub m: usize,
    pub trials: usize,
    pub failures: usize,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Verify `C - σ(C) = d(Σ_j (-1)^{j(m-1)} s^j(C) ⊗ 1^{⊗n})` on random
/// `(m-1)`-cycles `C`.
pub fn homotopy_identity_check<R: Rng>(
    a: &FiniteDimAlgebra,
    n: usize,
    m: usize,
    trials: usize,
    rng: &mut R,
) -> Result<HomotopyReport> {
    assert!(m >= 1, "chains have at least one column");
    let chains = CyclicChains::new(a, n);
    // applying d_m to a single chain is cheap; only the kernel needs a matrix
    let complex = chains.complex();
    if m >= 2 {
        complex.check_size(m - 1)?;
    } else if complex.chain_dim(0) > size_cap() {
        return Err(Error::SizeCap { needed: complex.chain_dim(0), cap: size_cap() });
    }
    let kernel = chains.cycle_space(m)?;
    let mut failures = 0;
    for _ in 0..trials {
        let c = chains.random_cycle(m, rng, kernel.as_ref());
        debug_assert!(complex.differential(m - 1, &c).is_zero());
        let lhs = c.sub(&chains.sigma(&c, m));
        if lhs != chains.homotopy(&c, m) {
            failures += 1;
        }
    }
    Ok(HomotopyReport { n, m, trials, failures })
}

/// The complex `⊕_{g ∈ C} C_*(B, B_g)` for a conjugacy class `C`, with the
/// action of `G` permuting the sectors.
pub struct ClassComplex<'a> {
    b: &'a FiniteDimAlgebra,
    action: &'a GroupAction,
    class: Vec<usize>,
    modules: Vec<Bimodule>,
}

impl<'a> ClassComplex<'a> {
    pub fn new(b: &'a FiniteDimAlgebra, action: &'a GroupAction, class: Vec<usize>) -> Self {
        let modules = class.iter().map(|&g| Bimodule::twisted(b, &action.maps[g])).collect();
        ClassComplex { b, action, class, modules }
    }

    fn sector_dim(&self, k: usize) -> usize {
        self.b.dim().pow(k as u32 + 1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.class.len() * self.sector_dim(k)
    }

    pub fn check_size(&self, k: usize) -> Result<()> {
        let needed = self.dim(k) as u128 * self.dim(k.saturating_sub(1)) as u128;
        if needed > size_cap() {
            return Err(Error::SizeCap { needed, cap: size_cap() });
        }
        Ok(())
    }

    pub fn differential(&self, k: usize, v: &Vector) -> Vector {
        if k == 0 {
            return Vector::new();
        }
        let (sd, sd1) = (self.sector_dim(k), self.sector_dim(k - 1));
        let mut pairs = Vec::new();
        for (idx, x) in v.iter() {
            let (sector, local) = (idx / sd, idx % sd);
            let c = HochschildComplex::new(self.b, &self.modules[sector]).expect("same algebra");
            for (j, y) in c.differential_basis(k, local).iter() {
                pairs.push((sector * sd1 + j, x.times(y)));
            }
        }
        Vector::from_pairs(pairs)
    }

    /// `ρ_h`: apply `h` to every tensor factor, moving sector `g` to `hgh⁻¹`.
    pub fn rho(&self, h: usize, k: usize, v: &Vector) -> Vector {
        let d = self.b.dim();
        let sd = self.sector_dim(k);
        let map = &self.action.maps[h];
        let mut pairs = Vec::new();
        for (idx, x) in v.iter() {
            let (sector, mut local) = (idx / sd, idx % sd);
            let g2 = self.action.group.conjugate(h, self.class[sector]);
            let target = self.class.iter().position(|&c| c == g2).expect("class is conjugation-closed");
            let mut digits = vec![0; k + 1];
            for slot in (0..=k).rev() {
                digits[slot] = local % d;
                local /= d;
            }
            let mut acc = Vector::from_pairs([(target, x.clone())]);
            for &dg in &digits {
                acc = kron(&acc, map.image(dg), d);
            }
            pairs.extend(acc.iter().cloned());
        }
        Vector::from_pairs(pairs)
    }

    /// `p = (1/|G|) Σ_h ρ_h`.
    pub fn project(&self, k: usize, v: &Vector) -> Vector {
        let order = self.action.group.order();
        let mut acc = Vector::new();
        for h in 0..order {
            acc = acc.add(&self.rho(h, k, v));
        }
        acc.scale(&Rational::from_i64(order as i64).inverse())
    }

    /// `dim H_k(C^G) = rank p_k - rank(d_k p_k) - rank(d_{k+1} p_{k+1})`.
    pub fn invariant_homology(&self, max_level: usize) -> Result<Vec<usize>> {
        self.check_size(max_level + 1)?;
        let mut rank_p = Vec::new();
        let mut rank_dp = Vec::new();
        for k in 0..=max_level + 1 {
            let p: Vec<Vector> = (0..self.dim(k)).map(|i| self.project(k, &Vector::unit(i))).collect();
            let dp: Vec<Vector> = p.iter().map(|v| self.differential(k, v)).collect();
            rank_p.push(rank(&p));
            rank_dp.push(rank(&dp));
        }
        Ok((0..=max_level).map(|k| rank_p[k] - rank_dp[k] - rank_dp[k + 1]).collect())
    }

    /// Same numbers computed as `dim (p(Z_k) + B_k) / B_k` on the full
    /// complex.
    pub fn invariant_homology_via_cycles(&self, max_level: usize) -> Result<Vec<usize>> {
        self.check_size(max_level + 1)?;
        let mut out = Vec::new();
        for k in 0..=max_level {
            let cols: Vec<Vector> =
                (0..self.dim(k)).map(|i| self.differential(k, &Vector::unit(i))).collect();
            let cycles = Rref::from_columns(&cols).nullspace();
            let boundaries: Vec<Vector> =
                (0..self.dim(k + 1)).map(|i| self.differential(k + 1, &Vector::unit(i))).collect();
            let mut ech = Echelon::new();
            for b in &boundaries {
                ech.insert(b);
            }
            let base = ech.rank();
            for z in &cycles {
                ech.insert(&self.project(k, z));
            }
            out.push(ech.rank() - base);
        }
        Ok(out)
    }
}

/// Compare `HH_*(ℚ[G] ⋉ B)` with `⊕_C (⊕_{g∈C} HH_*(B, B_g))^G`.
pub fn afls_check(b: &FiniteDimAlgebra, action: &GroupAction, max_level: usize) -> Result<LevelComparison> {
    let cp = b.crossed_product(action);
    let lhs = HochschildComplex::new(&cp, &Bimodule::regular(&cp))?.homology_dims(max_level)?;
    let mut rhs = vec![0; max_level + 1];
    for class in action.group.conjugacy_classes() {
        let dims = ClassComplex::new(b, action, class).invariant_homology(max_level)?;
        for (acc, d) in rhs.iter_mut().zip(dims) {
            *acc += d;
        }
    }
    Ok(LevelComparison { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochschild::algebra::Group;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z2() -> FiniteDimAlgebra {
        FiniteDimAlgebra::group_algebra(&Group::cyclic(2))
    }

    #[test]
    fn n_equal_one_is_trivial() {
        let a = FiniteDimAlgebra::dual_numbers();
        let r = verify_homolog_i(&a, 1, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, vec![2, 1, 1, 1]);
    }

    #[test]
    fn twisted_dual_numbers_square() {
        let r = verify_homolog_i(&FiniteDimAlgebra::dual_numbers(), 2, 2).unwrap();
        assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn homotopy_identity_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 1..=3 {
            let r = homotopy_identity_check(&z2(), 2, m, 10, &mut rng).unwrap();
            assert!(r.passed(), "m = {m}: {r:?}");
        }
        let r = homotopy_identity_check(&FiniteDimAlgebra::dual_numbers(), 2, 3, 10, &mut rng).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn homotopy_identity_on_unit_matrix() {
        let chains = CyclicChains::new(&z2(), 2);
        let c = Vector::unit(0);
        assert!(c.sub(&chains.sigma(&c, 1)).is_zero());
        assert!(chains.homotopy(&c, 1).is_zero());
    }

    #[test]
    fn trivial_group_is_tautological() {
        let b = FiniteDimAlgebra::dual_numbers();
        let act = GroupAction::trivial(&b);
        let r = afls_check(&b, &act, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, vec![2, 1, 1]);
    }

    #[test]
    fn sign_action_on_truncated_cubic() {
        let b = FiniteDimAlgebra::truncated_poly(3);
        let eps = LinearMap::signed_permutation(&[(0, 1), (1, -1), (2, 1)]);
        let act = GroupAction::involution(&b, eps).unwrap();
        let r = afls_check(&b, &act, 1).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn projector_routes_agree() {
        let b = FiniteDimAlgebra::truncated_poly(3);
        let eps = LinearMap::signed_permutation(&[(0, 1), (1, -1), (2, 1)]);
        let act = GroupAction::involution(&b, eps).unwrap();
        for class in act.group.conjugacy_classes() {
            let cc = ClassComplex::new(&b, &act, class);
            assert_eq!(cc.invariant_homology(1).unwrap(), cc.invariant_homology_via_cycles(1).unwrap());
            // p is idempotent and commutes with d
            for i in 0..cc.dim(2) {
                let v = Vector::unit(i);
                let p = cc.project(2, &v);
                assert_eq!(cc.project(2, &p), p);
                assert_eq!(cc.differential(2, &p), cc.project(1, &cc.differential(2, &v)));
            }
        }
    }
}
