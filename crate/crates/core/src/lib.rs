//! Exact computation with root systems, Z-gradations of complex semisimple
//! Lie algebras, and the parabolic prehomogeneous vector spaces they induce.
//!
//! Marking a node `α₀` of a finite-type Dynkin diagram grades the algebra by
//! the `α₀`-coefficient of each root.  This crate builds those gradations,
//! extracts the Levi data and connecting multiplicities of each graded piece,
//! inverts the construction (from a Levi, a highest weight and connecting
//! multiplicities back to the ambient algebra), realizes everything in an
//! exact Chevalley basis for verification, and analyses the orbit structure
//! of the two-form pencils attached to `(GL₂ × SL_{2m+1}, C² ⊗ Λ²C^{2m+1})`.
//!
//! All field arithmetic is generic over an exact scalar ([`Scalar`]); the
//! default instantiations are the arbitrary-precision rationals [`Rat`] and
//! the machine-word rationals [`Rat64`].  No floating point is used anywhere.

pub mod augment;
pub mod chevalley;
pub mod error;
pub mod glorbits;
pub mod gradation;
pub mod levirep;
pub mod linalg;
pub mod recognize;
pub mod rng;
pub mod rootsys;
pub mod scalar;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact scalar: arbitrary-precision rationals.
pub type Rat = num_rational::Ratio<num_bigint::BigInt>;

/// Machine-word rationals, for small cases where overflow cannot occur.
pub type Rat64 = num_rational::Ratio<i64>;
