//! Exact computations on Vogan varieties of unramified Langlands parameters
//! for `GL_n` and the quasi-split classical groups.
//!
//! The pipeline runs from an infinitesimal parameter (a multiset of
//! half-integral Frobenius exponents) to the graded pieces of the dual Lie
//! algebra, the point `x_φ` of a Langlands or Arthur parameter, its
//! `H_λ`-orbit, the Pyasetskii dual orbit and the adjoint L-factor.

pub mod exact;
pub mod harness;
pub mod infinitesimal;
pub mod lfactor;
pub mod lie;
pub mod orbits;
pub mod params;
pub mod verify;

mod error;

pub use error::Error;
