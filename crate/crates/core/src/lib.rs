//! Exact enumeration, bijections, statistics and cyclic sieving for domino
//! tableaux, with a focus on shapes `(n, n)` and rectangles `(n^{2k})`.
//!
//! Everything that counts is computed with arbitrary-precision integers or
//! exact integer polynomials. Floating point only appears in
//! [`combinatorics::eval_at_root_numeric`], which exists as a cross-check.
//!
//! The crate is split into four layers:
//!
//! * [`combinatorics`]: binomials, Catalan and Fibonacci numbers, compositions,
//!   integer polynomials in `q`, cyclotomic polynomials and binary words.
//! * [`tableaux`]: partitions, domino tilings and domino tableaux, their
//!   enumeration and the descent / major index statistics.
//! * [`bijection`]: the subset encoding of `DT(n, n)`, the word map, the
//!   2-quotient, the Type I/II split into pairs of increasing tableaux and
//!   the closed-form counters.
//! * [`sieving`]: the cyclic shift action, orbits, fixed points, the
//!   cyclic sieving verifier and the orbit realizability probe.
//!
//! Heavy sweeps run on rayon when the `parallel` feature is enabled (the
//! default); see [`Strategy`].

pub mod bijection;
pub mod combinatorics;
mod error;
mod par;
mod serde_util;
pub mod sieving;
pub mod tableaux;

pub use error::{Error, Result};
pub use par::Strategy;
