//! Exact-arithmetic equivalence testing for QPP-interleaved Zadoff-Chu sequences.
//!
//! A Zadoff-Chu sequence of length `N`, root `u`, shift `q` has the quadratic
//! phase `u·t·(t + ε_N + 2q)` taken modulo `2N`, where `ε_N = N mod 2`.
//! Interleaving it by a normalized quadratic permutation polynomial (QPP)
//! `π(k) = a·k² + b·k mod N` produces a new constant-amplitude
//! zero-autocorrelation sequence. This crate decides, in exact integer
//! arithmetic, whether the interleaved sequence is still equivalent to an
//! ordinary Zadoff-Chu sequence under the five standard CAZAC-preserving
//! operations (rotation, translation, decimation, LFM multiplication,
//! conjugation).
//!
//! The decision reduces to a local valuation test: for each prime power
//! `p^α` exactly dividing `N`, the `p`-adic valuation of the quadratic
//! coefficient `a` must reach a threshold `η(p, α)` that treats `p = 2` and
//! `p = 3` specially. The obstruction behind the criterion is the third
//! forward difference of the lifted phase, which equals `12a(2aX + 3a + b)`.
//!
//! Module layout:
//!
//! - [`arith`]: factorization, p-adic valuations, CRT, totient, radical
//! - [`qpp`]: QPP validation, enumeration, and counting over `Z_N`
//! - [`phase`]: the lifted phase mod `2N`, finite differences, the quadratic
//!   phase fitting procedure, and the constructive CRT-glued representative
//! - [`criterion`]: the valuation criterion, divisor calculus, length
//!   classifiers, witness construction, and the `D = 12a(3a+b)` screen
//! - [`sequences`]: complex sequence materialization, CAZAC numerics, the
//!   five operations, and an exhaustive operational equivalence oracle
//! - [`cli`]: the `zcqpp` command-line front end
//!
//! See the crate `examples/` directory for one runnable example per
//! capability.

pub mod arith;
pub mod cli;
pub mod criterion;
pub mod phase;
pub mod qpp;
pub mod sequences;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,
    #[error("modulus {0} out of supported range (3..=2^31)")]
    ModulusOutOfRange(u64),
    #[error("CRT moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),
    #[error("({a}, {b}) is not a quadratic permutation polynomial mod {n}: {reason}")]
    NotAQpp { n: u64, a: u64, b: u64, reason: String },
    #[error("closed-form QPP count requires odd N, got {0}")]
    EvenModulus(u64),
    #[error("root {u} is not a unit mod {n}")]
    RootNotUnit { u: u64, n: u64 },
    #[error("finite difference order {0} unsupported (max 4)")]
    DifferenceOrderTooHigh(u32),
    #[error("polynomial degree {0} unsupported (max 8)")]
    DegreeTooHigh(usize),
    #[error("decimation parameter {r} is not a unit mod {n}")]
    DecimationNotUnit { r: u64, n: u64 },
    #[error("valuation criterion fails at p = {0}; no quadratic representative exists")]
    CriterionFails(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
