//! Reed-Solomon errors-and-erasures decoding over GF(2^m).
//!
//! Codes are nonsystematic evaluation codes: the codeword of M(x) is
//! (M(α^0), …, M(α^(n−1))) with n = 2^m − 1. Decoding interpolates the
//! received word and solves a key equation with partial extended Euclid.
//! Three erasure-capable pipelines are provided (see [`codec`]), together
//! with per-step field-operation counting in [`metrics`].

pub mod codec;
pub mod error;
pub mod galois;
pub mod key_equation;
pub mod metrics;
pub mod poly;
pub mod spectral;
pub mod workbench;

pub use codec::{Algorithm, CodeParams, Decoded, Message, ReceivedWord};
pub use error::{Error, FailureCause, Result};
pub use galois::{Field, FieldElement};
pub use poly::Poly;
pub use spectral::EvaluationVector;
