//! Eigenform congruences and Hecke algebras of level one.

pub mod closure;
pub mod congruence;
pub mod error;
pub mod falg;
pub mod finfield;
pub mod hecke;
pub mod numfield;
pub mod order;
pub mod prime;

pub use error::{Error, Result};
pub use finfield::{FfElem, FiniteField};
pub use numfield::{Automorphism, FieldElement, Limits, NumberField};
pub use order::{index, maximal_order, order_generated_by, Order};
pub use prime::{j_group, ramified_primes, split_prime, JGroup, PrimeIdeal};
pub use closure::{galois_closure, GaloisClosureData};
