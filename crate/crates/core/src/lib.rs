//! Quantum stabilizer codes from algebraic-geometry codes.
//!
//! The pipeline runs a Hermitian or projective-line code over GF(2^{2m})
//! through a twisted dual-containing chain ([`agcurve`]), binary descent in a
//! self-dual basis ([`descent`]) and Steane enlargement ([`symplectic`]).
//! [`pauli`] rechecks small codes with exact operators and [`atlas`] holds
//! the asymptotic bounds and the end-to-end driver.
//!
//! The `examples/` directory has one runnable program per capability.

mod bits;
pub(crate) mod enumerate;

pub mod agcurve;
pub mod artifact;
pub mod atlas;
pub mod codes;
pub mod descent;
pub mod error;
pub mod galois;
pub mod pauli;
pub mod random;
pub mod report;
pub mod symplectic;

pub use bits::BitVec;
pub use error::{Error, Result};
