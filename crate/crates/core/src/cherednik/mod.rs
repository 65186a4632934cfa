//! The rational Cherednik algebra `A(n, k)` of type `A_{n-1}`: generators
//! `x_1..x_n`, `p_1..p_n` and `S_n`, with coefficients in `ℚ[k]`.

pub mod classical;
pub mod dunkl;
pub mod element;
pub mod perm;
pub mod rewrite;

pub use element::{parse_word, CherednikElement, Letter, NormalMonomial};
pub use perm::Perm;
pub use rewrite::{
    confluence_check, multiply, normal_order, spherical_product, symmetrizer, Relations, Rewriter, Strategy,
};

use crate::linalg::rat;
use crate::presets::Report;

/// `n! · C(2n + D, D)`.
pub fn pbw_count(n: usize, max_deg: u32) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    let d = max_deg as u64;
    let m = 2 * n as u64;
    fact * (1..=d).fold(1u64, |acc, i| acc * (m + i) / i)
}

/// Flatness at degree `≤ max_deg`: the normal monomials have the expected
/// count, every word of that length reduces into their span without
/// raising degree, and they act independently in the Dunkl representation
/// at `k = 3/7`.
pub fn pbw_dimension_check(n: usize, max_deg: u32) -> Report {
    let monos = NormalMonomial::enumerate(n, max_deg);
    let expected = pbw_count(n, max_deg);
    let mut r = Report::new(format!("PBW basis, n = {n}, degree <= {max_deg}"));
    r.push(
        "normal monomial count",
        monos.len() as u64 == expected,
        format!("{} found, n!·C(2n+D, D) = {expected}", monos.len()),
    );

    let words = rewrite::all_words(n, max_deg as usize);
    let rw = Rewriter::standard(n);
    let spanning = words.iter().all(|w| {
        let len = w.iter().filter(|l| !matches!(l, Letter::S(_))).count() as u32;
        rw.reduce(w).expect("alphabet letters are in range").max_degree().is_none_or(|d| d <= len)
    });
    r.push("words reduce into the span without raising degree", spanning, format!("{} words", words.len()));

    let (rank, count) = dunkl::operator_rank(n, max_deg, n as u32, &rat(3, 7));
    r.push(
        "normal monomials independent in the Dunkl representation",
        rank == count,
        format!("rank {rank} of {count}"),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(pbw_count(2, 2), 30);
        assert_eq!(pbw_count(2, 0), 2);
        assert_eq!(pbw_count(3, 1), 42);
    }

    #[test]
    fn small_pbw_checks() {
        let r = pbw_dimension_check(2, 2);
        assert!(r.passed(), "{r}");
        let r = pbw_dimension_check(3, 1);
        assert!(r.passed(), "{r}");
    }
}
