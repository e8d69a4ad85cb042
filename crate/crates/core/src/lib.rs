//! Exact algebra for coloring braid closures by Alexander quandles.
//!
//! Everything here works over the Laurent polynomial ring `Z[t, t^-1]` with
//! arbitrary-precision coefficients:
//!
//! * [`laurent`]: the ring itself (arithmetic, exact division, gcd, parsing).
//! * [`braid`]: braid words and the permutation of their closure.
//! * [`matrix`] and [`burau`]: dense matrices over the ring, the unreduced and
//!   reduced Burau representations, and the reduced Alexander polynomial.
//! * [`linalg`]: row echelon forms built only from row swaps, row scaling by
//!   nonzero polynomials and row addition, plus fraction-free determinants.
//! * [`quotient`]: equality and display representatives in `Z[t, t^-1]/(f)`.
//! * [`coloring`]: classification of closures, explicit non-trivial colorings,
//!   independent verification, and finite brute-force counting.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use alexq_core::{braid::BraidWord, burau::reduced_alexander};
//!
//! let trefoil: BraidWord = "{1,1,1}".parse().unwrap();
//! let delta = reduced_alexander(&trefoil).unwrap();
//! assert_eq!(delta.to_string(), "t^2 - t + 1");
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod burau;
pub mod coloring;
mod error;
pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod quotient;

pub use braid::BraidWord;
pub use coloring::{Classification, Coloring, ColoringRing, FiniteQuandle, Verdict};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use linalg::EchelonResult;
pub use matrix::LambdaMatrix;
pub use quotient::QuotientCtx;
