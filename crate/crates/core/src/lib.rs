//! Min-plus linear algebra: the two characteristic polynomials of a min-plus
//! matrix, linear factorization of min-plus polynomials, and the circuit
//! structure of the associated weighted digraph that explains their roots.
//!
//! All finite values are exact rationals, so every comparison (tie-breaking
//! of slopes, equality of circuit averages) is exact.
//!
//! ```
//! use minplus::{charpoly_flv, charpoly_tropdet, examples, min_cycle_mean, Network};
//!
//! let a = examples::worked_example_matrix();
//! let g = charpoly_tropdet(&a, 16).unwrap();
//! let h = charpoly_flv(&a);
//! assert_eq!(g.factorize().unwrap().to_string(), "(x ⊕ 2)^3 ⊗ (x ⊕ 14) ⊗ x^3");
//! assert_eq!(h.factorize().unwrap().to_string(), "(x ⊕ 2)^6 ⊗ (x ⊕ 3)");
//! assert_eq!(min_cycle_mean(&Network::from_matrix(&a)).to_string(), "2");
//! ```

mod assignment;
mod caps;
pub mod charpoly;
mod error;
pub mod examples;
pub mod io;
pub mod matrix;
pub mod network;
pub mod polynomial;
pub mod semiring;

pub use assignment::min_cost_assignment;
pub use caps::Caps;
pub use charpoly::{
    charpoly_flv, charpoly_tropdet, charpoly_tropdet_default, eigenvalue_from_charpoly,
    tropdet_assignment,
    tropdet_bruteforce,
};
pub use error::{Error, Result};
pub use matrix::MinPlusMatrix;
pub use network::{
    coefficient_check, enumerate_circuits, enumerate_extended_circuits, min_cycle_mean,
    random_separated, separated_check, verify_corollary_equivalence,
    verify_separated_factorization, Circuit, Edge, ExtendedCircuit, Network, Report,
};
pub use polynomial::{Breakpoint, Factorization, MinPlusPolynomial};
pub use semiring::{MinPlus, Rational};
