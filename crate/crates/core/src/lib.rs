//! Tensor product codes with one component over an extension field, and the
//! quantum codes built from them.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! turned off. Everything here works at the classical symplectic level:
//! stabilizers are binary `(a|b)` matrices, errors are pairs of bit vectors.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod codes;
pub mod decoder;
pub mod error;
pub mod families;
pub mod galois;
pub mod matgf;
pub mod quantum;
pub mod tpc;

pub use error::{Error, Result};
pub use galois::{Elem, Field, Poly};
pub use matgf::GfMatrix;
