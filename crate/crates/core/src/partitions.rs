//! Integer partitions.

use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` for each distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1, …, 1)` last.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn pentagonal_counts(nmax: usize) -> Vec<i64> {
        let mut p = vec![0i64; nmax + 1];
        p[0] = 1;
        for n in 1..=nmax {
            let mut acc = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
            }
            p[n] = acc;
        }
        p
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate(0), vec![Partition::new(vec![])]);
        assert_eq!(enumerate(4).len(), 5);
        assert_eq!(enumerate(10).len(), 42);
        assert_eq!(enumerate(3)[0].parts(), &[3]);
        assert_eq!(enumerate(3)[2].parts(), &[1, 1, 1]);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let p = pentagonal_counts(40);
        for n in 0..=40 {
            assert_eq!(enumerate(n).len() as i64, p[n], "n = {n}");
        }
    }

    #[test]
    fn multiplicities() {
        let l = Partition::new(vec![1, 2, 1]);
        assert_eq!(l.multiplicity(1), 2);
        assert_eq!(l.multiplicity(2), 1);
        assert_eq!(Partition::new(vec![3]).multiplicity(2), 0);
        assert_eq!(l.multiplicities(), vec![(2, 1), (1, 2)]);
    }

    #[test]
    fn parts_sum_and_uniqueness() {
        for n in 0..=15 {
            let all = enumerate(n);
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            for l in &all {
                let s: usize = (1..=n).map(|i| i * l.multiplicity(i)).sum();
                assert_eq!(s, n);
                assert!(l.parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}
