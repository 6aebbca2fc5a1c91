//! Exact computations for the real Lie algebra so(2,m) and the group
//! SO₀(2,m): Chevalley bases on two Cartan subalgebras, the catalog of
//! involutions commuting with the Cartan involution, orientation of their
//! fixed-point groups, θ-stable parabolic subalgebras with their
//! Poincaré–Hodge polynomials, and the special-cycle matching predicate.
//!
//! All arithmetic is over ℚ or ℚ(i); there is no floating point.

pub mod aq;
pub mod chevalley;
pub mod cycles;
pub mod exact;
pub mod involutions;
pub mod liealg;
pub mod linear;
pub mod orientation;
pub mod roots;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported rank m = {0} (need m >= 2)")]
    UnsupportedRank(usize),
    #[error("matrix is not in so(2,m) complexified")]
    NotInAlgebra,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrices are linearly dependent")]
    Dependent,
    #[error("the primed Cartan variant exists only for even m")]
    InvalidVariant,
    #[error("highest root undefined for m = 2")]
    NoHighestRoot,
    #[error("Weyl group of rank {0} refused (limit 8)")]
    RankTooLarge(usize),
    #[error("compact simple roots do not lie in the levi subsystem")]
    NotSubsystem,
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("enumeration bound {0} is not saturated")]
    NotSaturated(i64),
}

pub use exact::{GaussianRational, HodgePolynomial, Rational};
pub use liealg::{build_context, ExactMatrix, Family, LieContext};
pub use roots::{build_root_system, Root, RootSystem, Variant};
