//! Crate-wide error type.
//!
//! A single enum covers construction errors (bad generator data), arithmetic
//! preconditions (ideal base mismatches, non-contained quotients), the
//! degenerate cases of the closed-form machinery, and internal cross-check
//! failures. The dual-path computations in [`crate::degrees`] never silently
//! return one path's answer: disagreement surfaces as [`Error::InternalMismatch`].

use thiserror::Error;

/// Errors raised by semigroup construction, relative-ideal arithmetic, and the
/// degree computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generator list is empty or contains only zeros.
    #[error("no nonzero generators given")]
    EmptyGenerators,

    /// The generators have a common divisor greater than one; they span a
    /// proper subgroup of ℤ, not a numerical semigroup.
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),

    /// The operation degenerates for H = ℤ≥0 (the ring k[[t]] is a discrete
    /// valuation ring; canonical-ideal invariants are trivial or undefined).
    #[error("H = ℤ≥0: the requested invariant degenerates for the full monoid")]
    IsFullMonoid,

    /// A membership window larger than the supported cap was requested.
    /// Guards pathological generator input from allocating gigabytes.
    #[error("membership window of {required} bits exceeds the supported bound {bound}")]
    ConductorBoundExceeded { required: u64, bound: u64 },

    /// Two relative ideals in a binary operation live over different base
    /// semigroups.
    #[error("relative ideals live over different base semigroups")]
    BaseMismatch,

    /// `length_quotient(E, F)` was asked for F ⊄ E; the witness is a member of
    /// F missing from E.
    #[error("quotient length undefined: subideal is not contained (witness {0})")]
    NotContained(i64),

    /// Two independent computations of the same invariant disagreed, or a
    /// built-in cross-identity failed. Always a bug, surfaced loudly.
    #[error("internal cross-check failed: {0}")]
    InternalMismatch(String),

    /// A documented theorem hypothesis does not hold for this input.
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    /// The semigroup is symmetric: k[[H]] is Gorenstein (for three generators,
    /// a complete intersection) and has no Herzog matrix.
    #[error("symmetric (Gorenstein): no Herzog matrix")]
    GorensteinCase,

    /// The Herzog machinery needs a minimally 3-generated semigroup; the
    /// payload lists the actual minimal generators.
    #[error("semigroup is not minimally 3-generated (minimal generators {0:?})")]
    NotThreeGenerated(Vec<u64>),

    /// The closed-form branch test b·b₂ − a·a₁ vanished; neither product row
    /// can be chosen. Not expected for any non-symmetric input — surfaced, not
    /// guessed.
    #[error("closed form undefined: b·b2 − a·a1 = 0")]
    DegenerateSign,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
