//! Exact arithmetic for divisor convolution sums restricted to coprime
//! representations `ax + by = n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: factorization, divisors, Möbius, totient, `σ_k`, Bernoulli numbers.
//! - [`psi`]: `ψ_s(n) = Σ_{d|n} μ(d) d^s` and coprime residue power sums.
//! - [`closed_form`]: sums of terms `c · n^p · ψ_s(n)`.
//! - [`lattice`]: enumeration of `B(n)` / `B'(n)`, `σ'_{r,s}` and brute-force convolutions.
//! - [`poly`]: integer polynomials in `a, b, x, y` used as test functions.
//! - [`identity`]: both sides of the convolution identities and the closed-form theorems.
//! - [`representations`]: the radical representation counters `L`, `M`, `L'`, `M'`.
//! - [`fit`]: exact rational fitting of the four-term `ψ` pattern.
//! - [`selftest`]: the acceptance criteria as runnable checks.
//! - [`cli`]: the command-line surface.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! computation path.

pub mod arith;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod fit;
pub mod identity;
pub mod lattice;
pub mod poly;
pub mod psi;
pub mod representations;
pub mod selftest;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = num_bigint::BigUint;

/// Exact rational in canonical reduced form (positive denominator).
pub type Ratio = num_rational::BigRational;
