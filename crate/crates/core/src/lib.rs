//! Exact bivariate Fibonacci, Lucas and spread polynomials.
//!
//! The spread polynomials `Z_n(x, s)` are built here by five independent
//! constructions (third-order recurrence, closed coefficient formula, Lucas
//! substitution, squared Fibonacci substitution and a parity split), so each
//! one can serve as an oracle for the others. All arithmetic is exact over
//! arbitrary-precision rationals.
//!
//! The crate is `no_std` and only needs `alloc`. IO, the command line and file
//! formats live in the companion `spreadpoly` crate.
//!
//! ```
//! use spreadpoly_core::sequences::{z_polynomial, ZMethod};
//!
//! let z3 = z_polynomial(3, ZMethod::ViaFib);
//! assert_eq!(z3.to_string(), "x^3 + 6*s*x^2 + 9*s^2*x");
//! ```

#![no_std]

extern crate alloc;

mod error;
mod float;

pub mod gf;
pub mod identities;
pub mod poly;
pub mod sequences;
pub mod surd;

pub use error::{Error, Result};
pub use poly::{BiPoly, BigInt, BigRat, UniPoly};
