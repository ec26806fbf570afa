//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every [`Polynomial`] carries a shared [`VarTable`] that splits the
//! variables into space variables `x` and deformation parameters `s`.
//! Terms are stored in graded reverse lexicographic order over the whole
//! table, so two equal polynomials always have identical representations
//! and identical printed forms.

mod gcd;
mod matrix;
mod monomial;
mod order;
mod parse;
mod poly;
mod rational;
mod resultant;
mod vars;

pub use gcd::{gcd, squarefree_core};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::Polynomial;
pub use rational::{format_rational, int, parse_rational, rational_to_f64, Rational};
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use vars::VarTable;
