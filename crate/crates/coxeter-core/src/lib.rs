//! Exact combinatorics of Coxeter systems whose matrix entries lie in
//! {2, 3, 4, inf}: canonical words, minimal galleries, roots as half-spaces,
//! the reflection representation over `Q[sqrt 2]`, and intervals of root pairs.
//!
//! ```
//! use coxeter_core::CoxeterMatrix;
//!
//! let w = CoxeterMatrix::quad444();
//! assert_eq!(w.reduce(&[1, 2, 1, 2, 1]).word(), &[2, 1, 2]);
//! ```

mod element;
mod error;
mod gallery;
mod geometry;
mod matrix;
mod repr;
pub mod rewrite;
mod root;
pub mod scalar;

/// Generator index.
pub type Gen = u8;

pub use element::{format_word, shortlex, Element};
pub use error::CoreError;
pub use gallery::Gallery;
pub use geometry::PairClass;
pub use matrix::{CoxeterMatrix, MAX_RANK};
pub use repr::{vector_sign, IntegralSigma, RootVector};
pub use root::Root;
pub use scalar::{AlgNumber, QuadBase, QuadField, QuadSqrt2, RingNumber};
