//! Exact arithmetic for numerical semigroup rings: canonical and
//! bi-canonical degrees, canonical index, Sally invariants, and the
//! almost-Gorenstein classification ladder.
//!
//! A numerical semigroup H = ⟨a₁,…,aₙ⟩ with gcd 1 determines the complete
//! local ring R = k[[t^a : a ∈ H]]. This crate computes, over ℤ and without
//! any floating point:
//!
//! * the semigroup itself — conductor, Frobenius number, gaps, genus,
//!   pseudo-Frobenius numbers, type ([`semigroup`]);
//! * relative ideals of H with exact sum/product/colon/dual arithmetic,
//!   including the canonical ideal K ([`ideal`]);
//! * the degree invariants cdeg = λ(K/R) and bideg = λ(K**/K), the canonical
//!   index ρ, the Hilbert coefficient e₁(K), the Sally multiplicity s₀, and
//!   the n-AGL / Goto / nearly Gorenstein / far-flung Gorenstein
//!   classification plus the comparison verdict bideg ≤ cdeg ([`degrees`]);
//! * Herzog matrices of non-symmetric 3-generated semigroups with the
//!   closed-form degree formulas, an independent oracle for the
//!   ideal-theoretic path ([`herzog`]);
//! * the genus-ordered tree of all numerical semigroups, for exhaustive
//!   searches ([`tree`]).
//!
//! Every invariant with two independent derivations is computed both ways,
//! and a disagreement surfaces as [`Error::InternalMismatch`] instead of a
//! silently chosen answer.

pub mod degrees;
pub mod error;
pub mod herzog;
pub mod ideal;
pub mod semigroup;
pub mod tree;

pub use degrees::{
    augmented_predictions, bideg, canonical_powers, cdeg, classify, comparison, mm_analysis,
    AugmentedPredictions, CanonicalPowers, DegreeReport, MmAnalysis,
};
pub use error::{Error, Result};
pub use herzog::{herzog_matrix, three_agl_probe, HerzogMatrix, ThreeAglProbe};
pub use ideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
