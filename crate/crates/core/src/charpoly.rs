//! Tropical determinants and the two characteristic polynomials of a
//! min-plus matrix.
//!
//! * `charpoly_tropdet` is `g_A(x) = tropdet(A ⊕ x⊗I)`.
//! * `charpoly_flv` is the min-plus transplant of the Faddeev-LeVerrier
//!   recursion, `c_k = Tr(A^k ⊕ c_1⊗A^{k-1} ⊕ ⋯ ⊕ c_{k-1}⊗A)`.
//!
//! Both are monic of degree `n` and share their minimum root, the eigenvalue.

use crate::assignment::min_cost_assignment;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::matrix::MinPlusMatrix;
use crate::polynomial::MinPlusPolynomial;
use crate::semiring::{rational_from_usize, MinPlus};

/// `tropdet(A) = ⨁_σ a_{1σ(1)} ⊗ ⋯ ⊗ a_{nσ(n)}` by walking every
/// permutation. Only accepted up to `cap` rows.
pub fn tropdet_bruteforce(a: &MinPlusMatrix, cap: usize) -> Result<MinPlus> {
    let n = a.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "permutation enumeration",
            n,
            cap,
            hint: "; use the assignment-based determinant",
        });
    }
    fn walk(a: &MinPlusMatrix, row: usize, used: &mut [bool], acc: MinPlus, best: &mut MinPlus) {
        if row == a.order() {
            if acc < *best {
                *best = acc;
            }
            return;
        }
        for col in 0..a.order() {
            if used[col] {
                continue;
            }
            let w = a.get(row, col);
            if w.is_epsilon() {
                continue;
            }
            used[col] = true;
            walk(a, row + 1, used, acc.otimes(w), best);
            used[col] = false;
        }
    }
    let mut best = MinPlus::Epsilon;
    walk(a, 0, &mut vec![false; n], MinPlus::unit(), &mut best);
    Ok(best)
}

/// The tropical determinant as a minimum-cost perfect assignment.
pub fn tropdet_assignment(a: &MinPlusMatrix) -> MinPlus {
    match min_cost_assignment(a) {
        Some(cols) => cols
            .iter()
            .enumerate()
            .fold(MinPlus::unit(), |acc, (i, &j)| acc.otimes(a.get(i, j))),
        None => MinPlus::Epsilon,
    }
}

/// `g_A(x) = tropdet(A ⊕ x⊗I)`.
///
/// Choosing `x` on `n - j` diagonal positions leaves a permutation of the
/// other `j` indices, so the coefficient of `x^{n-j}` is the smallest
/// tropical determinant among the `j × j` principal submatrices.
pub fn charpoly_tropdet(a: &MinPlusMatrix, cap: usize) -> Result<MinPlusPolynomial> {
    let n = a.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "principal-minor enumeration",
            n,
            cap,
            hint: "",
        });
    }
    let mut coeffs = vec![MinPlus::Epsilon; n + 1];
    coeffs[0] = MinPlus::unit();
    let mut indices = Vec::with_capacity(n);
    for mask in 1u64..(1u64 << n) {
        indices.clear();
        indices.extend((0..n).filter(|i| mask >> i & 1 == 1));
        let minor = tropdet_assignment(&a.principal_submatrix(&indices));
        let slot = &mut coeffs[indices.len()];
        if minor < *slot {
            *slot = minor;
        }
    }
    MinPlusPolynomial::new(coeffs)
}

/// `g_A` with the default subset cap.
pub fn charpoly_tropdet_default(a: &MinPlusMatrix) -> Result<MinPlusPolynomial> {
    charpoly_tropdet(a, Caps::default().subsets)
}

/// `ĝ_A` from the min-plus Faddeev-LeVerrier recursion.
pub fn charpoly_flv(a: &MinPlusMatrix) -> MinPlusPolynomial {
    let n = a.order();
    let powers = a.powers(n);
    let mut lower: Vec<MinPlus> = Vec::with_capacity(n);
    for k in 1..=n {
        // A^k ⊕ c_1⊗A^{k-1} ⊕ ⋯ ⊕ c_{k-1}⊗A
        let mut sum = powers[k - 1].clone();
        for (i, c) in lower.iter().enumerate() {
            let term = powers[k - 2 - i].scalar_otimes(c);
            sum = sum.oplus(&term).expect("same order");
        }
        lower.push(sum.trace());
    }
    MinPlusPolynomial::monic(lower)
}

/// Minimum root of a monic polynomial, read straight from the coefficients
/// as `min_j c_j / j`; `ε` when every `c_j` is `ε`.
pub fn eigenvalue_from_charpoly(p: &MinPlusPolynomial) -> Result<MinPlus> {
    if !p.is_monic() {
        return Err(Error::NotMonic(p.coeffs()[0].to_string()));
    }
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter_map(|(j, c)| c.finite().map(|c| MinPlus::Finite(c / rational_from_usize(j))))
        .min()
        .unwrap_or(MinPlus::Epsilon))
}
