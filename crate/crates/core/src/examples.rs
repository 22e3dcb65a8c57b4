//! Fixed inputs with known answers.

use crate::matrix::MinPlusMatrix;
use crate::polynomial::MinPlusPolynomial;
use crate::semiring::MinPlus;

/// The 7×7 matrix whose two characteristic polynomials are
/// `x^7 ⊕ 3⊗x^6 ⊕ 8⊗x^5 ⊕ 6⊗x^4 ⊕ 20⊗x^3` and
/// `x^7 ⊕ 3⊗x^6 ⊕ 6⊗x^5 ⊕ 6⊗x^4 ⊕ 9⊗x^3 ⊕ 12⊗x^2 ⊕ 12⊗x ⊕ 15`.
pub fn worked_example_matrix() -> MinPlusMatrix {
    const E: Option<i64> = None;
    MinPlusMatrix::from_ints(&[
        &[E, E, Some(2), E, E, E, E],
        &[Some(3), E, E, Some(2), E, E, E],
        &[E, Some(1), Some(3), Some(9), Some(1), E, E],
        &[E, Some(6), E, E, E, Some(2), E],
        &[E, E, E, E, E, Some(2), Some(1)],
        &[E, E, E, E, E, E, Some(1)],
        &[E, E, E, E, E, E, E],
    ])
    .expect("square")
}

/// `x^2 ⊕ 2⊗x ⊕ 6 = (x ⊕ 2) ⊗ (x ⊕ 4)`.
pub fn two_root_polynomial() -> MinPlusPolynomial {
    MinPlusPolynomial::monic([MinPlus::from_int(2), MinPlus::from_int(6)])
}
