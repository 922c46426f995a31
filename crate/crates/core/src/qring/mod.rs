//! Exact coefficient rings: Laurent polynomials, `Q(v)`, `Q(sqrt q)`,
//! quantum combinatorics and linear algebra over them.

pub mod laurent;
pub mod matrix;
pub mod quadratic;
pub mod quantum;
pub mod ratfunc;

pub use laurent::LaurentPolynomial;
pub use matrix::{Echelon, ExactMatrix, Field, OrderedField};
pub use quadratic::{Prime, QuadraticFieldElement};
pub use quantum::{evaluate_at_sqrt_q, gaussian_binomial, gaussian_multinomial, quantum_factorial, quantum_integer};
pub use ratfunc::RationalFunction;
