//! Exact rational arithmetic: half-integers, dense rational matrices and
//! fraction-free elimination.

mod elim;
mod halfint;
mod matrix;

pub use elim::{
    combine, commutant_dim, in_span, inverse, kernel_basis, rank, solve_commutant, solve_joint_commutant, span_rank,
};
pub use halfint::HalfInt;
pub use matrix::ExactMatrix;

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}
