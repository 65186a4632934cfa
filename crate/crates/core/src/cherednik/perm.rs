use std::fmt;

/// Permutation of `{0, …, n-1}` in one-line notation: `σ(i) = img[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    /// `None` unless `img` is a bijection of `0..img.len()`.
    pub fn from_images(img: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; img.len()];
        for &i in &img {
            if i >= img.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm { img })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i, j);
        Perm { img }
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            img[j] = i;
        }
        Perm { img }
    }

    /// The pair `(i, j)`, `i < j`, if this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.n()).filter(|&i| self.img[i] != i).collect();
        match moved[..] {
            [i, j] if self.img[i] == j => Some((i, j)),
            _ => None,
        }
    }

    /// Acts on exponent vectors: `σ x^a σ⁻¹ = x^{σ·a}` where `(σ·a)_{σ(i)} = a_i`.
    pub fn act(&self, a: &[u32]) -> Vec<u32> {
        let mut out = vec![0; a.len()];
        for (i, &e) in a.iter().enumerate() {
            out[self.img[i]] = e;
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm { img: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

/// `s12` for transpositions, one-line notation `[2,3,1]` otherwise.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((i, j)) = self.as_transposition() {
            if j < 9 {
                return write!(f, "s{}{}", i + 1, j + 1);
            }
        }
        let parts: Vec<String> = self.img.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_laws() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        for a in &all {
            assert!(a.compose(&a.inverse()).is_identity());
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(&b.compose(c)), a.compose(b).compose(c));
                }
            }
        }
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let a = [3, 1, 4];
        for s in Perm::all(3) {
            for t in Perm::all(3) {
                assert_eq!(s.compose(&t).act(&a), s.act(&t.act(&a)));
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(Perm::transposition(3, 0, 2).to_string(), "s13");
        assert_eq!(Perm::from_images(vec![1, 2, 0]).unwrap().to_string(), "[2,3,1]");
        assert!(Perm::from_images(vec![0, 0]).is_none());
    }
}
