//! Finite-dimensional algebras, finite groups acting on them, and bimodules.

use crate::error::{Error, Result};
use crate::linalg::{invert, Field, Rational, SparseVec};

pub type Vector = SparseVec<Rational>;

/// Associative unital algebra given by structure constants in a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteDimAlgebra {
    dim: usize,
    /// `e_i e_j` stored at `i * dim + j`
    mult: Vec<Vector>,
    unit: Vector,
}

impl FiniteDimAlgebra {
    /// Validates sizes, the unit and associativity on all basis triples.
    pub fn new(dim: usize, mult: Vec<Vector>, unit: Vector) -> Result<Self> {
        if mult.len() != dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} structure vectors, got {}",
                dim * dim,
                mult.len()
            )));
        }
        let out_of_range = |v: &Vector| v.iter().any(|(i, _)| *i >= dim);
        if mult.iter().any(out_of_range) || out_of_range(&unit) {
            return Err(Error::InvalidAlgebra("basis index out of range".into()));
        }
        let a = FiniteDimAlgebra { dim, mult, unit };
        for i in 0..dim {
            let e = Vector::unit(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit fails on e_{i}")));
            }
        }
        if !a.is_associative() {
            return Err(Error::InvalidAlgebra("multiplication is not associative".into()));
        }
        Ok(a)
    }

    pub fn from_fn(dim: usize, unit: Vector, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let mult = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::new(dim, mult, unit)
    }

    pub fn ground_field() -> Self {
        Self::truncated_poly(1)
    }

    /// `ℚ[x]/(x^k)` in the basis `1, x, …, x^{k-1}`.
    pub fn truncated_poly(k: usize) -> Self {
        assert!(k >= 1);
        Self::from_fn(k, Vector::unit(0), |i, j| {
            if i + j < k {
                Vector::unit(i + j)
            } else {
                Vector::new()
            }
        })
        .expect("truncated polynomial ring is associative")
    }

    /// `ℚ[x]/(x²)`.
    pub fn dual_numbers() -> Self {
        Self::truncated_poly(2)
    }

    /// Group algebra in the basis of group elements.
    pub fn group_algebra(g: &Group) -> Self {
        Self::from_fn(g.order(), Vector::unit(g.identity()), |a, b| Vector::unit(g.mul(a, b)))
            .expect("group algebras are associative")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x.times(y);
                for (k, z) in self.basis_product(*i, *j).iter() {
                    pairs.push((*k, xy.times(z)));
                }
            }
        }
        Vector::from_pairs(pairs)
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d * d * d).all(|t| {
            let (i, j, k) = (t / (d * d), (t / d) % d, t % d);
            let ei = Vector::unit(i);
            let ek = Vector::unit(k);
            self.mul(self.basis_product(i, j), &ek) == self.mul(&ei, self.basis_product(j, k))
        })
    }

    /// `A ⊗ B` with basis index `i * dim(B) + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let db = other.dim;
        let unit = kron(&self.unit, &other.unit, db);
        Self::from_fn(self.dim * db, unit, |x, y| {
            kron(
                self.basis_product(x / db, y / db),
                other.basis_product(x % db, y % db),
                db,
            )
        })
        .expect("tensor products of algebras are algebras")
    }

    /// `A^{⊗n}`; the first factor is the most significant digit.
    pub fn tensor_power(&self, n: usize) -> Self {
        (0..n).fold(Self::ground_field(), |acc, _| acc.tensor(self))
    }

    /// The same algebra written in the basis `e'_j = Σ_i p[j]_i e_i`.
    pub fn change_basis(&self, p: &[Vector]) -> Result<Self> {
        let pinv = invert(p).ok_or_else(|| Error::InvalidAlgebra("singular basis change".into()))?;
        let to_new = LinearMap::new(pinv);
        let mult = (0..self.dim * self.dim)
            .map(|k| to_new.apply(&self.mul(&p[k / self.dim], &p[k % self.dim])))
            .collect();
        Self::new(self.dim, mult, to_new.apply(&self.unit))
    }

    /// `ℚ[G] ⋉ A` with basis `a_j g` at index `g * dim(A) + j` and product
    /// `(a g)(b h) = a g(b) gh`.
    pub fn crossed_product(&self, action: &GroupAction) -> Self {
        let d = self.dim;
        let g = &action.group;
        let unit = self.unit.map_indices(|j| g.identity() * d + j);
        Self::from_fn(g.order() * d, unit, |x, y| {
            let (ga, a) = (x / d, x % d);
            let (gb, b) = (y / d, y % d);
            let gb_image = action.maps[ga].apply(&Vector::unit(b));
            let prod = self.mul(&Vector::unit(a), &gb_image);
            let gh = g.mul(ga, gb);
            prod.map_indices(|j| gh * d + j)
        })
        .expect("crossed products of algebras are algebras")
    }
}

/// Kronecker product of coordinate vectors, second index of size `db`.
pub fn kron(a: &Vector, b: &Vector, db: usize) -> Vector {
    let mut pairs = Vec::with_capacity(a.nnz() * b.nnz());
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            pairs.push((i * db + j, x.times(y)));
        }
    }
    Vector::from_pairs(pairs)
}

/// Linear endomorphism given by the images of basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    cols: Vec<Vector>,
}

impl LinearMap {
    pub fn new(cols: Vec<Vector>) -> Self {
        LinearMap { cols }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap { cols: (0..dim).map(Vector::unit).collect() }
    }

    /// Basis permutation `e_i ↦ ε_i e_{π(i)}`.
    pub fn signed_permutation(images: &[(usize, i64)]) -> Self {
        LinearMap {
            cols: images
                .iter()
                .map(|&(j, s)| Vector::from_pairs([(j, Rational::from_i64(s))]))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn image(&self, i: usize) -> &Vector {
        &self.cols[i]
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut pairs = Vec::new();
        for (i, x) in v.iter() {
            for (j, y) in self.cols[*i].iter() {
                pairs.push((*j, x.times(y)));
            }
        }
        Vector::from_pairs(pairs)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        LinearMap { cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn is_automorphism_of(&self, a: &FiniteDimAlgebra) -> bool {
        if self.dim() != a.dim() || self.apply(a.unit()) != *a.unit() {
            return false;
        }
        if invert(&self.cols).is_none() {
            return false;
        }
        (0..a.dim() * a.dim()).all(|k| {
            let (i, j) = (k / a.dim(), k % a.dim());
            self.apply(a.basis_product(i, j)) == a.mul(&self.cols[i], &self.cols[j])
        })
    }

    /// `φ(c₁ ⊗ … ⊗ c_n) = c₂ ⊗ … ⊗ c_n ⊗ c₁` on `A^{⊗n}` for `dim A = d`.
    pub fn cyclic_shift(d: usize, n: usize) -> Self {
        let total = d.pow(n as u32);
        let top = d.pow(n.saturating_sub(1) as u32);
        LinearMap {
            cols: (0..total).map(|x| Vector::unit((x % top) * d + x / top)).collect(),
        }
    }
}

/// Finite group as a multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl Group {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidAlgebra("malformed group table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidAlgebra("group has no identity".into()))?;
        let g = Group { table, identity };
        for a in 0..n {
            if !(0..n).any(|b| g.mul(a, b) == identity) {
                return Err(Error::InvalidAlgebra(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::InvalidAlgebra("group law not associative".into()));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        Group { table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity).expect("validated group")
    }

    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order()).map(|h| self.conjugate(h, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }
}

/// A finite group acting on an algebra by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub group: Group,
    pub maps: Vec<LinearMap>,
}

impl GroupAction {
    /// Checks that every map is an automorphism and that `g ↦ map` is a
    /// homomorphism.
    pub fn new(alg: &FiniteDimAlgebra, group: Group, maps: Vec<LinearMap>) -> Result<Self> {
        if maps.len() != group.order() {
            return Err(Error::InvalidAlgebra("one map per group element required".into()));
        }
        if let Some(g) = maps.iter().position(|m| !m.is_automorphism_of(alg)) {
            return Err(Error::InvalidAlgebra(format!("element {g} does not act by an automorphism")));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if maps[a].compose(&maps[b]) != maps[group.mul(a, b)] {
                    return Err(Error::InvalidAlgebra("action is not a homomorphism".into()));
                }
            }
        }
        Ok(GroupAction { group, maps })
    }

    pub fn trivial(alg: &FiniteDimAlgebra) -> Self {
        GroupAction { group: Group::trivial(), maps: vec![LinearMap::identity(alg.dim())] }
    }

    /// `ℤ₂` acting by an involutive automorphism.
    pub fn involution(alg: &FiniteDimAlgebra, map: LinearMap) -> Result<Self> {
        Self::new(alg, Group::cyclic(2), vec![LinearMap::identity(alg.dim()), map])
    }
}

/// Bimodule over a finite-dimensional algebra.
#[derive(Clone, Debug)]
pub struct Bimodule {
    dim: usize,
    alg_dim: usize,
    /// `e_a · m_j` at `a * dim + j`
    left: Vec<Vector>,
    /// `m_j · e_a` at `j * alg_dim + a`
    right: Vec<Vector>,
}

impl Bimodule {
    /// `A` as a bimodule over itself.
    pub fn regular(a: &FiniteDimAlgebra) -> Self {
        Self::twisted(a, &LinearMap::identity(a.dim()))
    }

    /// `A_φ`: left multiplication as usual, right action `m · c = m φ(c)`.
    pub fn twisted(a: &FiniteDimAlgebra, phi: &LinearMap) -> Self {
        let d = a.dim();
        let left = (0..d * d).map(|k| a.basis_product(k / d, k % d).clone()).collect();
        let right = (0..d * d)
            .map(|k| a.mul(&Vector::unit(k / d), phi.image(k % d)))
            .collect();
        Bimodule { dim: d, alg_dim: d, left, right }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn left(&self, a: usize, m: usize) -> &Vector {
        &self.left[a * self.dim + m]
    }

    pub fn right(&self, m: usize, a: usize) -> &Vector {
        &self.right[m * self.alg_dim + a]
    }
}
