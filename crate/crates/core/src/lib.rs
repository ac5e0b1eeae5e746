//! Exact polynomial algebra over idempotent semifields.
//!
//! The kernel works over two concrete semifields of characteristic one: the
//! two-element boolean semifield and the max-plus semifield over exact
//! rationals (`⊕ = max`, `⊗ = +`, zero is `-inf`). On top of sparse
//! polynomial arithmetic it provides
//!
//! - canonical forms of rational polynomials (concave envelopes of the
//!   lifted support), with equality, residuation division and
//!   power-divisibility,
//! - univariate roots, multiplicities and linear factorization,
//! - tropical varieties as complexes of tie cells, the dominance graph and
//!   an exact variety-inclusion test,
//! - decision procedures for principal ideals (membership, closure, density,
//!   congruence and radical membership).
//!
//! Everything is exact: coefficients and witness points are arbitrary
//! precision rationals and all polyhedral questions are answered by
//! Fourier–Motzkin elimination or basis enumeration.

pub mod canon;
pub mod error;
pub mod geometry;
pub mod ideals;
mod linalg;
pub mod polynomial;
pub mod semifield;
pub mod univariate;
pub mod variety;

pub use canon::{canonicalize, Comparison, PowerDivisibility, RationalPolynomial};
pub use error::{Error, Result};
pub use polynomial::{Exponent, Polynomial};
pub use semifield::{Boolean, MaxPlus, Rational, Semifield};
