//! Hochschild cochains `Hom_{A^e}(K, A_τ)` of the Koszul resolution
//!
//! ```text
//! 0 → A_τ ──δ₀──> A_τ ⊕ A_τ ──δ₁──> A_τ → 0,
//! δ₀ f = (u·f, w·f),   δ₁(f₁, f₂) = w·f₁ - u·f₂,
//! ```
//!
//! where `(a ⊗ b)·f = a f τ(b)` and `τ ∈ {id, ε}`. The spaces are infinite
//! dimensional; cohomology is computed on a filtration window (monomials of
//! total degree `|a| + |b| ≤ N`). Cocycles are taken from the window `N - 2`
//! and compared against coboundaries of the full window `N`, and every
//! result is required to agree with the one at `N - 2`.

use crate::error::{Error, Result};
use crate::linalg::{rank, Field, Rref, SparseVec};
use crate::poly::RatFunc;
use crate::presets::Report;

use super::element::{
    degree, epsilon_cocycles, flip_units, koszul_elements, Bimonomial, Kind, RankOneElement,
};

pub type Vector = SparseVec<RatFunc>;

/// Which bimodule the cochains take values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Id,
    Epsilon,
}

impl Twist {
    fn is_eps(self) -> bool {
        self == Twist::Epsilon
    }
}

fn zigzag(a: i64) -> usize {
    if a >= 0 {
        2 * a as usize
    } else {
        2 * (-a) as usize - 1
    }
}

fn unzigzag(z: usize) -> i64 {
    if z % 2 == 0 {
        (z / 2) as i64
    } else {
        -(z.div_ceil(2) as i64)
    }
}

/// Bijection `ℤ² → ℕ` used as the global coordinate of a monomial.
pub fn mono_index((a, b): (i64, i64)) -> usize {
    let (x, y) = (zigzag(a), zigzag(b));
    (x + y) * (x + y + 1) / 2 + y
}

pub fn mono_from_index(i: usize) -> (i64, i64) {
    let s = (((8 * i + 1) as f64).sqrt() as usize - 1) / 2;
    // correct any floating error
    let s = (s.saturating_sub(1)..=s + 1).rev().find(|&s| s * (s + 1) / 2 <= i).unwrap();
    let y = i - s * (s + 1) / 2;
    (unzigzag(s - y), unzigzag(y))
}

/// Cochain level `k ∈ {0, 1, 2}`; level 1 has two slots.
fn cochain_index(k: usize, slot: usize, m: (i64, i64)) -> usize {
    if k == 1 {
        2 * mono_index(m) + slot
    } else {
        mono_index(m)
    }
}

fn decode(k: usize, i: usize) -> (usize, (i64, i64)) {
    if k == 1 {
        (i % 2, mono_from_index(i / 2))
    } else {
        (0, mono_from_index(i))
    }
}

fn to_vector(k: usize, slot: usize, e: &RankOneElement) -> Vec<(usize, RatFunc)> {
    e.terms().map(|(&m, c)| (cochain_index(k, slot, m), c.clone())).collect()
}

/// The twisted cochain complex with the induced `ℤ₂` action.
pub struct CochainComplex {
    pub kind: Kind,
    pub twist: Twist,
    pub window: usize,
    u: Bimonomial,
    w: Bimonomial,
    gamma: [Bimonomial; 4],
}

impl CochainComplex {
    pub fn new(kind: Kind, twist: Twist, window: usize) -> Result<Self> {
        if window < 4 {
            return Err(Error::WindowTooSmall(window));
        }
        let (u, w) = koszul_elements(kind);
        let (gu, gw) = epsilon_cocycles(kind);
        let g12 = gu.mul(&gw);
        Ok(CochainComplex { kind, twist, window, u, w, gamma: [Bimonomial::one(kind), gu, gw, g12] })
    }

    /// Window basis of level `k`, as global coordinates.
    pub fn basis(&self, k: usize, n: usize) -> Vec<usize> {
        let w = self.kind.window(n);
        match k {
            1 => w.iter().flat_map(|&m| [cochain_index(1, 0, m), cochain_index(1, 1, m)]).collect(),
            _ => w.iter().map(|&m| cochain_index(k, 0, m)).collect(),
        }
    }

    fn element(&self, m: (i64, i64)) -> RankOneElement {
        RankOneElement::monomial(self.kind, m.0, m.1).expect("window monomials are in the domain")
    }

    /// `δ_k` of a basis cochain given by its global coordinate.
    pub fn differential_basis(&self, k: usize, i: usize) -> Vector {
        let (slot, m) = decode(k, i);
        let f = self.element(m);
        let tw = self.twist.is_eps();
        match k {
            0 => Vector::from_pairs(
                to_vector(1, 0, &self.u.act(&f, tw))
                    .into_iter()
                    .chain(to_vector(1, 1, &self.w.act(&f, tw))),
            ),
            1 => {
                let img = if slot == 0 {
                    self.w.act(&f, tw)
                } else {
                    self.u.act(&f, tw).scale(&RatFunc::from_i64(-1))
                };
                Vector::from_pairs(to_vector(2, 0, &img))
            }
            _ => Vector::new(),
        }
    }

    pub fn differential(&self, k: usize, v: &Vector) -> Vector {
        let mut pairs = Vec::new();
        for (i, x) in v.iter() {
            for (j, y) in self.differential_basis(k, *i).iter() {
                pairs.push((*j, x.times(y)));
            }
        }
        Vector::from_pairs(pairs)
    }

    /// Columns of `δ_k` on the window of size `n`.
    pub fn matrix(&self, k: usize, n: usize) -> Vec<Vector> {
        self.basis(k, n).into_iter().map(|i| self.differential_basis(k, i)).collect()
    }

    /// The involution induced by `ε`: `f ↦ ε(f)` in degree 0,
    /// `(f₁, f₂) ↦ (ε(γ_u·f₁), ε(γ_w·f₂))` in degree 1 and
    /// `f ↦ ε(γ_u γ_w·f)` in degree 2.
    pub fn rho_basis(&self, k: usize, i: usize) -> Vector {
        let (slot, m) = decode(k, i);
        let f = self.element(m);
        let g = match k {
            0 => &self.gamma[0],
            1 => &self.gamma[1 + slot],
            _ => &self.gamma[3],
        };
        let img = g.act(&f, self.twist.is_eps()).epsilon();
        Vector::from_pairs(to_vector(k, slot, &img))
    }

    pub fn rho(&self, k: usize, v: &Vector) -> Vector {
        let mut pairs = Vec::new();
        for (i, x) in v.iter() {
            for (j, y) in self.rho_basis(k, *i).iter() {
                pairs.push((*j, x.times(y)));
            }
        }
        Vector::from_pairs(pairs)
    }

    /// `(1 + ρ)/2`.
    pub fn project(&self, k: usize, v: &Vector) -> Vector {
        v.add(&self.rho(k, v)).scale(&RatFunc::from_i64(2).inverse())
    }

    /// Dimensions at window `n` (no stability check); `invariant` restricts
    /// to the `ℤ₂`-invariant part.
    pub fn dims_at(&self, n: usize, invariant: bool) -> [usize; 3] {
        let mut out = [0; 3];
        for (k, slot) in out.iter_mut().enumerate() {
            let inner = self.basis(k, n - 2);
            let cols: Vec<Vector> = if k == 2 {
                vec![Vector::new(); inner.len()]
            } else {
                inner.iter().map(|&i| self.differential_basis(k, i)).collect()
            };
            let mut cycles: Vec<Vector> = Rref::from_columns(&cols)
                .nullspace()
                .into_iter()
                .map(|z| z.map_indices(|j| inner[j]))
                .collect();
            if invariant {
                cycles = cycles.iter().map(|z| self.project(k, z)).collect();
            }
            let boundaries: Vec<Vector> = if k == 0 { Vec::new() } else { self.matrix(k - 1, n) };
            let rb = rank(&boundaries);
            let mut all = boundaries;
            all.extend(cycles);
            *slot = rank(&all) - rb;
        }
        out
    }

    /// Dimensions at the configured window, checked against window `N - 2`.
    pub fn cohomology(&self, invariant: bool) -> Result<[usize; 3]> {
        let hi = self.dims_at(self.window, invariant);
        if self.window >= 6 {
            let lo = self.dims_at(self.window - 2, invariant);
            if lo != hi {
                return Err(Error::Unstable(lo, hi));
            }
        }
        Ok(hi)
    }
}

/// The complex for `kind` and `twist` on the given window.
pub fn build_cochain_complex(kind: Kind, twist: Twist, window: usize) -> Result<CochainComplex> {
    CochainComplex::new(kind, twist, window)
}

/// `dim HH^i(A, A_τ)` for `i = 0, 1, 2`.
pub fn hh_cohomology_rank_one(kind: Kind, twist: Twist, window: usize) -> Result<[usize; 3]> {
    CochainComplex::new(kind, twist, window)?.cohomology(false)
}

/// `HH^*(ℚ[ℤ₂] ⋉ A) = HH^*(A)^{ℤ₂} ⊕ HH^*(A, A_ε)^{ℤ₂}`.
pub fn crossed_z2_cohomology(kind: Kind, window: usize) -> Result<[usize; 3]> {
    let mut out = [0; 3];
    for twist in [Twist::Id, Twist::Epsilon] {
        let h = CochainComplex::new(kind, twist, window)?.cohomology(true)?;
        for (o, x) in out.iter_mut().zip(h) {
            *o += x;
        }
    }
    Ok(out)
}

/// Self-duality of the Koszul resolution `K`.
///
/// `K₂ = A^e → K₁ = (A^e)² → K₀ = A^e` with `α ↦ (αw, -αu)` and
/// `(α, β) ↦ αu + βw`; the dual complex `Hom_{A^e}(K, A^e)` has
/// `g ↦ (ug, wg)` and `(g₁, g₂) ↦ wg₁ - ug₂`. With the flip `θ(a ⊗ b) = b ⊗ a`
/// and units `θ(u) = -v_u u`, `θ(w) = -v_w w`, the maps
/// `g ↦ -θ(g) v_u v_w`, `(g₁, g₂) ↦ (θ(g₂) v_u, -θ(g₁) v_w)`, `g ↦ θ(g)`
/// form an isomorphism from the dual complex to `K` reversed. The check
/// verifies both squares and `d∘d = 0` on every basis element `a ⊗ b` with
/// `deg a + deg b ≤ N - 2`.
pub fn duality_check(kind: Kind, window: usize) -> Result<Report> {
    if window < 4 {
        return Err(Error::WindowTooSmall(window));
    }
    let (u, w) = koszul_elements(kind);
    let (vu, vw) = flip_units(kind);
    let minus = RatFunc::from_i64(-1);
    let vuvw = vu.mul(&vw);
    let phi0 = |g: &Bimonomial| g.flip().mul(&vuvw).scale(&minus);
    let phi1 = |g1: &Bimonomial, g2: &Bimonomial| (g2.flip().mul(&vu), g1.flip().mul(&vw).scale(&minus));
    let phi2 = |g: &Bimonomial| g.flip();
    let dk2 = |a: &Bimonomial| (a.mul(&w), a.mul(&u).scale(&minus));
    let dk1 = |a: &Bimonomial, b: &Bimonomial| a.mul(&u).add(&b.mul(&w));
    let dd0 = |g: &Bimonomial| (u.mul(g), w.mul(g));
    let dd1 = |g1: &Bimonomial, g2: &Bimonomial| w.mul(g1).sub(&u.mul(g2));

    let mono = kind.window(window - 2);
    let zero = Bimonomial::zero(kind);
    let (mut sq1, mut sq2, mut dd, mut count) = (true, true, true, 0usize);
    for &a in &mono {
        for &b in &mono {
            if degree(a) + degree(b) > window - 2 {
                continue;
            }
            count += 1;
            let g = Bimonomial::pure(kind, a, b);
            let (h1, h2) = dd0(&g);
            sq1 &= phi1(&h1, &h2) == dk2(&phi0(&g));
            for (g1, g2) in [(&g, &zero), (&zero, &g)] {
                let (k1, k2) = phi1(g1, g2);
                sq2 &= phi2(&dd1(g1, g2)) == dk1(&k1, &k2);
            }
            dd &= dd1(&h1, &h2).is_zero();
            let (k1, k2) = dk2(&g);
            dd &= dk1(&k1, &k2).is_zero();
        }
    }
    let mut r = Report::new(format!("{kind} Koszul self-duality, window {window}"));
    r.push("d∘d = 0 on K and its dual", dd, format!("{count} basis elements"));
    r.push("degree 0 → 1 square commutes", sq1, format!("{count} basis elements"));
    r.push("degree 1 → 2 square commutes", sq2, format!("{} basis elements", 2 * count));
    Ok(r)
}
