//! Exact computations around the duality of finite bounded semilattices.
//!
//! - [`exactlin`]: rational scalars and fraction-free dense linear algebra.
//! - [`semilattice`]: validation, characters, duals and double duals.
//! - [`bialgebra`]: the monoid bialgebra kS, group-likes and congruence
//!   quotients.
//! - [`graded`]: semilattice-graded algebras and the character action.
//! - [`letterplace`]: the supercommutative letterplace algebra with its
//!   `(N̄, max)` weight grading.
//! - [`nbar_dual`]: the finite dual of k(N̄, max) and its threshold
//!   characters.
//! - [`corpus`]: bundled examples and brute-force oracles.
//!
//! All arithmetic is exact over ℚ.

pub mod bialgebra;
pub mod corpus;
pub mod exactlin;
pub mod extnat;
pub mod graded;
pub mod letterplace;
pub mod nbar_dual;
pub mod semilattice;
pub mod text;

pub use bialgebra::{Congruence, MonoidAlgebraElement, TensorElement};
pub use exactlin::{RatMatrix, Rational};
pub use extnat::{NbarPoint, NunderPoint};
pub use graded::{AlgebraElement, GradedFDAlgebra};
pub use letterplace::{LPMonomial, LPPoly, LPVariable, ParityContext};
pub use nbar_dual::{StepFunctional, ThresholdCharacter};
pub use semilattice::{Character, FiniteSemilattice, MonoidMap};
pub use text::ParseError;
