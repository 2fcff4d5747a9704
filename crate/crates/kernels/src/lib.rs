//! Exact arithmetic kernels.
//!
//! Everything in this crate is exact: arbitrary-precision integers and
//! rationals, prime fields with word-sized moduli, dense univariate
//! polynomials, integer lattices in Hermite and Smith normal form, and
//! factorization of polynomials over `F_p` and over `Q`.
//!
//! Field-generic code is written against the [`Field`] trait, which is a
//! *context* object: elements carry no reference to their field, the field
//! value is passed alongside. The same algorithms therefore run over `Q`,
//! over `F_p`, and over extension fields defined in downstream crates.

pub mod arith;
pub mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod sturm;
pub mod zpoly;

pub use error::KernelError;
pub use field::{Field, FiniteFieldOps, PrimeField, Rationals};
pub use linalg::Matrix;
pub use matrix::IntMatrix;
pub use poly::{Poly, PolyRing};
pub use zpoly::ZPoly;

/// Seed used by every randomized routine when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_c0ff_ee15_abcd;

pub type Result<T> = std::result::Result<T, KernelError>;
