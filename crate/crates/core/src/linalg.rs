//! Exact sparse linear algebra over a generic field.
//!
//! Matrices are handled as lists of sparse vectors (`SparseVec`), each a
//! sorted list of `(index, value)` pairs with no explicit zeros. Ranks are
//! computed by incremental leading-term elimination; before eliminating, the
//! vectors are split into connected components of their support graph, which
//! turns the block-diagonal structure of graded complexes into independent
//! small problems without needing to know the grading.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field arithmetic by reference.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Sorted sparse vector without explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Build from arbitrary `(index, value)` pairs; duplicates are summed.
    pub fn from_pairs<I: IntoIterator<Item = (usize, F)>>(pairs: I) -> Self {
        let mut map: Vec<(usize, F)> = pairs.into_iter().collect();
        map.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(map.len());
        for (i, v) in map {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.plus(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, F::one())] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, F)> {
        self.entries.iter()
    }

    pub fn lead(&self) -> Option<&(usize, F)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.times(c))).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y.times(c)));
                        b.next();
                    } else {
                        let s = x.plus(&y.times(c));
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y.times(c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&F::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&F::one().negated(), other)
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }

    pub fn map_values<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseVec<G> {
        SparseVec::from_pairs(self.entries.iter().map(|(i, v)| (*i, f(v))))
    }
}

/// Row echelon form built one vector at a time. Each stored row has a
/// distinct leading index and leading coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    by_lead: HashMap<usize, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), by_lead: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce until the leading index is not a pivot (or the vector vanishes).
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut v = v.clone();
        while let Some((lead, c)) = v.lead().cloned() {
            match self.by_lead.get(&lead) {
                Some(&r) => v = v.axpy(&c.negated(), &self.rows[r]),
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        match r.lead().cloned() {
            None => false,
            Some((lead, c)) => {
                let r = r.scale(&c.inverse());
                self.by_lead.insert(lead, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }
}

/// Group vector indices into connected components of the support graph:
/// two vectors are linked when they share a coordinate.
pub fn components<F: Field>(vecs: &[SparseVec<F>]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..vecs.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (k, v) in vecs.iter().enumerate() {
        for (i, _) in v.iter() {
            match owner.get(i) {
                Some(&o) => {
                    let (a, b) = (find(&mut parent, o), find(&mut parent, k));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                None => {
                    owner.insert(*i, k);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for k in 0..vecs.len() {
        if vecs[k].is_zero() {
            continue;
        }
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(k);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|g| g[0]);
    out
}

/// Rank of the span of `vecs`.
pub fn rank<F: Field>(vecs: &[SparseVec<F>]) -> usize {
    components(vecs)
        .iter()
        .map(|group| {
            let mut ech = Echelon::new();
            for &k in group {
                ech.insert(&vecs[k]);
            }
            ech.rank()
        })
        .sum()
}

/// Fully reduced row echelon form of a matrix given by its rows, used for
/// nullspace computations.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    ncols: usize,
    /// (pivot column, row with 1 at the pivot and zeros at all other pivots)
    pivots: Vec<(usize, SparseVec<F>)>,
    is_pivot: Vec<bool>,
}

impl<F: Field> Rref<F> {
    pub fn from_rows(rows: &[SparseVec<F>], ncols: usize) -> Self {
        let mut pivots: Vec<(usize, SparseVec<F>)> = Vec::new();
        for group in components(rows) {
            let mut ech = Echelon::new();
            for &k in &group {
                ech.insert(&rows[k]);
            }
            let mut block = ech.rows;
            block.sort_by_key(|r| r.lead().map(|(i, _)| *i));
            // back substitution, bottom-up
            for a in (0..block.len()).rev() {
                let (lead_a, _) = block[a].lead().cloned().expect("nonzero row");
                for b in 0..a {
                    let c = block[b].get(lead_a);
                    if !c.is_zero() {
                        block[b] = block[b].axpy(&c.negated(), &block[a]);
                    }
                }
            }
            for r in block {
                let lead = r.lead().map(|(i, _)| *i).expect("nonzero row");
                pivots.push((lead, r));
            }
        }
        pivots.sort_by_key(|(c, _)| *c);
        let mut is_pivot = vec![false; ncols];
        for (c, _) in &pivots {
            is_pivot[*c] = true;
        }
        Rref { ncols, pivots, is_pivot }
    }

    /// Build from a matrix given by columns (each column a vector over the
    /// row coordinates).
    pub fn from_columns(cols: &[SparseVec<F>]) -> Self {
        let mut rows: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter() {
                rows.entry(*i).or_default().push((j, v.clone()));
            }
        }
        let mut keys: Vec<usize> = rows.keys().copied().collect();
        keys.sort_unstable();
        let rows: Vec<SparseVec<F>> =
            keys.into_iter().map(|k| SparseVec::from_pairs(rows.remove(&k).unwrap())).collect();
        Self::from_rows(&rows, cols.len())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot[c]).collect()
    }

    /// Kernel vector obtained by assigning values to the free variables.
    pub fn kernel_vector(&self, free_values: &HashMap<usize, F>) -> SparseVec<F> {
        let mut pairs: Vec<(usize, F)> = free_values
            .iter()
            .filter(|(c, v)| !self.is_pivot[**c] && !v.is_zero())
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (p, row) in &self.pivots {
            let mut acc = F::zero();
            for (c, v) in row.iter() {
                if *c != *p {
                    if let Some(x) = free_values.get(c) {
                        acc = acc.minus(&v.times(x));
                    }
                }
            }
            if !acc.is_zero() {
                pairs.push((*p, acc));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Basis of the nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<SparseVec<F>> {
        // column -> list of (pivot col, coefficient) for free columns
        let mut by_free: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (p, row) in &self.pivots {
            for (c, v) in row.iter() {
                if *c != *p {
                    by_free.entry(*c).or_default().push((*p, v.negated()));
                }
            }
        }
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut pairs = by_free.remove(&f).unwrap_or_default();
                pairs.push((f, F::one()));
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }
}

/// Inverse of a square matrix given by its columns, or `None` if singular.
pub fn invert<F: Field>(cols: &[SparseVec<F>]) -> Option<Vec<SparseVec<F>>> {
    let n = cols.len();
    let mut m = to_dense(cols, n);
    let mut inv: Vec<Vec<F>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let s = m[c][c].inverse();
        for j in 0..n {
            m[c][j] = m[c][j].times(&s);
            inv[c][j] = inv[c][j].times(&s);
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..n {
                    m[r][j] = m[r][j].minus(&f.times(&m[c][j]));
                    inv[r][j] = inv[r][j].minus(&f.times(&inv[c][j]));
                }
            }
        }
    }
    Some(
        (0..n)
            .map(|j| SparseVec::from_pairs((0..n).map(|i| (i, inv[i][j].clone()))))
            .collect(),
    )
}

/// Dense rendering of a sparse column matrix, mostly for tests and reports.
pub fn to_dense<F: Field>(cols: &[SparseVec<F>], nrows: usize) -> Vec<Vec<F>> {
    let mut m = vec![vec![F::zero(); cols.len()]; nrows];
    for (j, c) in cols.iter().enumerate() {
        for (i, v) in c.iter() {
            m[*i][j] = v.clone();
        }
    }
    m
}
