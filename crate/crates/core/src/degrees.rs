//! Degree invariants of the canonical ideal and the almost-Gorenstein
//! classification ladder.
//!
//! For a non-field semigroup ring R = k[[H]] with canonical ideal K
//! (normalized to min 0, so its minimal reduction is the unit ideal):
//!
//! * **cdeg(R)** — the canonical degree λ(K/R), equivalently g(H) − n(H);
//!   zero exactly for Gorenstein rings.
//! * **bideg(R)** — the bi-canonical degree λ(K\*\*/K), equivalently the
//!   residue res(R) = λ(R/tr(K)); zero exactly for Gorenstein rings.
//! * **ρ(R)** — the canonical index: the least j ≥ 1 with K^{j+1} = K^j.
//! * **e₁(K)** — the first Hilbert coefficient of K, reconstructed as
//!   Σ_{j=0}^{ρ−1} λ(K^{j+1}/K^j) (the j = 0 step being cdeg).
//! * **s₀ = e₁ − cdeg** — the Sally multiplicity; s₀ = n defines an n-AGL
//!   (n-almost-Gorenstein) ring, with s₀ = 0 ⟺ Gorenstein and s₀ = 1 ⟺
//!   almost Gorenstein non-Gorenstein (⟺ cdeg = r(R) − 1).
//! * flags — Goto (bideg = 1), nearly Gorenstein (res = 1; identical to Goto
//!   in this one-dimensional setting, both kept for the record), far-flung
//!   Gorenstein (bideg attains its maximum n(H)), and the comparison verdict
//!   bideg ≤ cdeg. The comparison holds whenever r(R) ≤ 3 and fails for a
//!   known type-5 semigroup; the search harness exists to map the boundary.
//!
//! Every operation that has two independent readings computes both and raises
//! [`Error::InternalMismatch`] on disagreement instead of returning either.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Full invariant record of one semigroup ring, as produced by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    /// Minimal generators of H, ascending.
    pub generators: Vec<u64>,
    /// Cohen–Macaulay type r(R) = |PF(H)|.
    #[serde(rename = "type")]
    pub ring_type: u64,
    /// Multiplicity e₀ = min(H \ {0}).
    pub multiplicity: u64,
    /// Frobenius number F(H).
    pub frobenius: i64,
    /// Genus g(H) = number of gaps.
    pub genus: u64,
    /// n(H) = #{h ∈ H : h < F}.
    pub n_of: u64,
    /// Canonical degree λ(K/R) = g(H) − n(H).
    pub cdeg: u64,
    /// Bi-canonical degree λ(K**/K) = λ(R/tr(K)).
    pub bideg: u64,
    /// Canonical index: least j ≥ 1 with K^{j+1} = K^j (1 for symmetric H by
    /// convention, since K = R).
    pub rho: u64,
    /// First Hilbert coefficient e₁(K) = Σ power_steps.
    pub e1: u64,
    /// Sally multiplicity s₀ = e₁ − cdeg.
    pub s0: u64,
    /// n-AGL level: 0 = Gorenstein, n = n-almost-Gorenstein (s₀ = n).
    pub agl_level: u64,
    /// bideg = 1.
    pub is_goto: bool,
    /// res(R) = 1 (coincides with `is_goto` in dimension one).
    pub is_nearly_gorenstein: bool,
    /// bideg = n(H), the maximal possible value.
    pub is_far_flung: bool,
    /// bideg ≤ cdeg.
    pub comparison_holds: bool,
    /// λ(K^{j+1}/K^j) for j = 0..ρ−1; power_steps[0] = cdeg.
    pub power_steps: Vec<u64>,
}

/// Result of the canonical-power iteration: ρ, the quotient lengths along the
/// filtration, and the derived coefficients e₁ and s₀.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalPowers {
    /// Canonical index ρ.
    pub rho: u64,
    /// λ(K^{j+1}/K^j) for j = 0..ρ−1.
    pub steps: Vec<u64>,
    /// e₁(K) = Σ steps.
    pub e1: u64,
    /// s₀ = e₁ − cdeg.
    pub s0: u64,
}

/// Predictions of the change-of-rings formulas for the idealization R ⋉ m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentedPredictions {
    /// cdeg(R ⋉ m) = 2·cdeg(R) + 2.
    pub cdeg: u64,
    /// r(R ⋉ m) = 2·r(R) + 1.
    #[serde(rename = "type")]
    pub ring_type: u64,
    /// bideg(R ⋉ m) = 2·bideg(R) − 1; absent for Gorenstein R, where the
    /// formula's hypothesis fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bideg: Option<u64>,
}

/// Comparison of cdeg(A) for A = m : m against the change-of-rings formula
/// cdeg(A) = cdeg(R) + e₀(m) − 2·r(R), plus the directly computed bideg(A).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MmAnalysis {
    /// Minimal generators of H′ = {z : z + M ⊆ M}.
    pub h_prime: Vec<u64>,
    /// cdeg(A) computed from H′ directly (0 when A is a DVR).
    pub cdeg_direct: u64,
    /// The formula value cdeg(R) + e₀(m) − 2·r(R).
    pub cdeg_predicted: i64,
    /// Whether the two agree (a theorem says they must).
    pub matches: bool,
    /// bideg(A) computed from H′ directly; no closed formula is known.
    pub bideg: u64,
    /// H′ = ℤ≥0, i.e. A = k[[t]]: every degree invariant of A vanishes.
    /// Happens exactly when R has maximal embedding dimension.
    pub a_is_dvr: bool,
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InternalMismatch(what.to_string()))
    }
}

fn arc(h: &NumericalSemigroup) -> Arc<NumericalSemigroup> {
    Arc::new(h.clone())
}

/// Canonical degree cdeg(R) = λ(K/R), cross-checked against g(H) − n(H).
pub fn cdeg(h: &NumericalSemigroup) -> Result<u64> {
    let base = arc(h);
    cdeg_with(&base)
}

fn cdeg_with(base: &Arc<NumericalSemigroup>) -> Result<u64> {
    let k = RelativeIdeal::canonical_ideal(base)?;
    let via_ideal = k.length_quotient(&RelativeIdeal::ring(base))?;
    let via_gaps = base.genus() - base.n_of();
    ensure(
        via_ideal == via_gaps,
        "cdeg: λ(K/R) disagrees with g(H) − n(H)",
    )?;
    Ok(via_ideal)
}

/// Bi-canonical degree bideg(R) = λ(K**/K), cross-checked against the trace
/// reading res(R) = λ(R/tr(K)).
pub fn bideg(h: &NumericalSemigroup) -> Result<u64> {
    let base = arc(h);
    bideg_with(&base)
}

fn bideg_with(base: &Arc<NumericalSemigroup>) -> Result<u64> {
    let k = RelativeIdeal::canonical_ideal(base)?;
    let via_bidual = k.bidual().length_quotient(&k)?;
    let via_trace = RelativeIdeal::ring(base).length_quotient(&k.trace())?;
    ensure(
        via_bidual == via_trace,
        "bideg: λ(K**/K) disagrees with λ(R/tr K)",
    )?;
    Ok(via_bidual)
}

/// Iterates powers of the normalized canonical ideal until they stabilize.
///
/// With min(K) = 0 the minimal reduction of K is the unit ideal, so ρ is the
/// first exponent where K^{j+1} = K^j on the nose, and the filtration steps
/// λ(K^{j+1}/K^j) reconstruct e₁(K) = cdeg + Σ_{j≥1} steps. For symmetric H
/// the convention is ρ = 1 with steps = [0] (K = R, nothing moves).
pub fn canonical_powers(h: &NumericalSemigroup) -> Result<CanonicalPowers> {
    let base = arc(h);
    canonical_powers_with(&base)
}

fn canonical_powers_with(base: &Arc<NumericalSemigroup>) -> Result<CanonicalPowers> {
    if base.is_full_monoid() {
        return Err(Error::IsFullMonoid);
    }
    let cdeg = cdeg_with(base)?;
    if base.is_symmetric() {
        return Ok(CanonicalPowers {
            rho: 1,
            steps: vec![0],
            e1: 0,
            s0: 0,
        });
    }
    let k = RelativeIdeal::canonical_ideal(base)?;
    let mut power = k.clone();
    let mut steps = vec![cdeg];
    let mut rho = 1u64;
    loop {
        let next = power.product(&k)?;
        if next == power {
            break;
        }
        steps.push(next.length_quotient(&power)?);
        rho += 1;
        power = next;
        // K^j ⊆ ℤ≥0 stabilizes long before the conductor; not doing so means
        // the arithmetic is broken.
        ensure(rho <= base.conductor() + 2, "canonical powers failed to stabilize")?;
    }
    let e1: u64 = steps.iter().sum();
    ensure(rho >= 2, "non-symmetric H must have ρ ≥ 2")?;
    ensure(steps[0] == cdeg, "power_steps[0] must equal cdeg")?;
    Ok(CanonicalPowers {
        rho,
        steps,
        e1,
        s0: e1 - cdeg,
    })
}

/// The full classification: every invariant of [`DegreeReport`], with the
/// cross-identities between them asserted along the way.
pub fn classify(h: &NumericalSemigroup) -> Result<DegreeReport> {
    let base = arc(h);
    if base.is_full_monoid() {
        return Err(Error::IsFullMonoid);
    }
    let cdeg = cdeg_with(&base)?;
    let bideg = bideg_with(&base)?;
    let powers = canonical_powers_with(&base)?;
    let ring_type = h.ring_type();
    let n_of = h.n_of();

    // Belt and suspenders: the ladder's internal identities. Violations are
    // bugs in this crate, not properties of the input.
    ensure(powers.e1 == powers.steps.iter().sum::<u64>(), "e₁ must equal Σ steps")?;
    ensure(powers.s0 + cdeg == powers.e1, "s₀ must equal e₁ − cdeg")?;
    ensure((powers.s0 == 0) == h.is_symmetric(), "s₀ = 0 must mean Gorenstein")?;
    ensure((cdeg == 0) == h.is_symmetric(), "cdeg = 0 must mean Gorenstein")?;
    ensure((bideg == 0) == h.is_symmetric(), "bideg = 0 must mean Gorenstein")?;
    ensure(cdeg + 1 >= ring_type, "cdeg ≥ r(R) − 1 must hold")?;
    ensure(
        (cdeg + 1 == ring_type) == (powers.s0 <= 1),
        "cdeg = r(R) − 1 must characterize s₀ ≤ 1",
    )?;
    if powers.s0 == 1 {
        ensure(bideg == 1, "almost Gorenstein rings must be Goto")?;
        ensure(powers.rho == 2, "almost Gorenstein rings must have ρ = 2")?;
    }
    ensure(bideg <= n_of, "bideg ≤ n(H) must hold")?;
    if ring_type == 2 && !h.is_symmetric() {
        ensure(
            powers.steps[1] == cdeg,
            "type 2: λ(K²/K) must equal λ(K/R)",
        )?;
        ensure(
            (powers.rho == 2) == (powers.e1 == 2 * cdeg),
            "type 2: ρ = 2 must characterize e₁ = 2·cdeg",
        )?;
    }

    Ok(DegreeReport {
        generators: h.generators().to_vec(),
        ring_type,
        multiplicity: h.multiplicity(),
        frobenius: h.frobenius(),
        genus: h.genus(),
        n_of,
        cdeg,
        bideg,
        rho: powers.rho,
        e1: powers.e1,
        s0: powers.s0,
        agl_level: powers.s0,
        is_goto: bideg == 1,
        is_nearly_gorenstein: bideg == 1,
        is_far_flung: bideg == n_of,
        comparison_holds: bideg <= cdeg,
        power_steps: powers.steps,
    })
}

/// The comparison verdict (cdeg, bideg, bideg ≤ cdeg).
pub fn comparison(h: &NumericalSemigroup) -> Result<(u64, u64, bool)> {
    let base = arc(h);
    let c = cdeg_with(&base)?;
    let b = bideg_with(&base)?;
    Ok((c, b, b <= c))
}

/// Change-of-rings predictions for the idealization R ⋉ m: pure formula
/// arithmetic on this ring's invariants. The bideg formula requires R
/// non-Gorenstein; the field is `None` for symmetric H.
pub fn augmented_predictions(h: &NumericalSemigroup) -> Result<AugmentedPredictions> {
    let base = arc(h);
    let c = cdeg_with(&base)?;
    let r = h.ring_type();
    let b = if h.is_symmetric() {
        None
    } else {
        Some(2 * bideg_with(&base)? - 1)
    };
    Ok(AugmentedPredictions {
        cdeg: 2 * c + 2,
        ring_type: 2 * r + 1,
        bideg: b,
    })
}

/// Analysis of A = m : m — the semigroup H′ = {z : z + M ⊆ M} — comparing
/// cdeg(A) computed directly against the change-of-rings formula
/// cdeg(A) = cdeg(R) + e₀(m) − 2·r(R), and reporting bideg(A) (for which no
/// formula is known).
///
/// When H′ = ℤ≥0 (exactly the maximal-embedding-dimension case, e.g.
/// H = ⟨3,4,5⟩ or ⟨2,3⟩) A is a DVR: its degrees are 0, the formula still
/// holds, and `a_is_dvr` flags the degeneration. The only error is
/// [`Error::IsFullMonoid`] for the input H = ℤ≥0, where R itself is a DVR
/// and the change-of-rings theorem has no content.
pub fn mm_analysis(h: &NumericalSemigroup) -> Result<MmAnalysis> {
    let h_prime = h.m_colon_m()?;
    let base = arc(h);
    let cdeg_r = cdeg_with(&base)?;
    let predicted = cdeg_r as i64 + h.multiplicity() as i64 - 2 * h.ring_type() as i64;
    let a_is_dvr = h_prime.is_full_monoid();
    let (cdeg_direct, bideg_a) = if a_is_dvr {
        (0, 0)
    } else {
        let prime_base = arc(&h_prime);
        (cdeg_with(&prime_base)?, bideg_with(&prime_base)?)
    };
    Ok(MmAnalysis {
        h_prime: h_prime.generators().to_vec(),
        cdeg_direct,
        cdeg_predicted: predicted,
        matches: predicted == cdeg_direct as i64,
        bideg: bideg_a,
        a_is_dvr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn cdeg_values() {
        assert_eq!(cdeg(&sg(&[3, 4, 5])).unwrap(), 1);
        assert_eq!(cdeg(&sg(&[5, 7, 9])).unwrap(), 2);
        assert_eq!(cdeg(&sg(&[3, 4])).unwrap(), 0);
        assert_eq!(cdeg(&sg(&[3, 7, 8])).unwrap(), 2);
        assert_eq!(cdeg(&sg(&[7, 12, 15])).unwrap(), 3);
        assert_eq!(cdeg(&sg(&[5, 9, 11])).unwrap(), 2);
        assert_eq!(cdeg(&sg(&[13, 14, 15, 16, 17, 18, 21, 23])).unwrap(), 8);
        assert_eq!(cdeg(&NumericalSemigroup::root()), Err(Error::IsFullMonoid));
    }

    #[test]
    fn bideg_values() {
        assert_eq!(bideg(&sg(&[5, 7, 9])).unwrap(), 1);
        assert_eq!(bideg(&sg(&[3, 4])).unwrap(), 0);
        assert_eq!(bideg(&sg(&[3, 4, 5])).unwrap(), 1);
        assert_eq!(bideg(&sg(&[3, 7, 8])).unwrap(), 2);
        assert_eq!(bideg(&sg(&[7, 12, 15])).unwrap(), 3);
        assert_eq!(bideg(&sg(&[5, 9, 11])).unwrap(), 1);
        assert_eq!(bideg(&sg(&[13, 14, 15, 16, 17, 18, 21, 23])).unwrap(), 9);
    }

    #[test]
    fn canonical_powers_fixtures() {
        let p = canonical_powers(&sg(&[3, 7, 8])).unwrap();
        assert_eq!((p.rho, p.steps.clone(), p.e1, p.s0), (2, vec![2, 2], 4, 2));

        let p = canonical_powers(&sg(&[5, 7, 9])).unwrap();
        assert_eq!((p.rho, p.steps.clone(), p.e1, p.s0), (4, vec![2, 2, 1, 1], 6, 4));

        let p = canonical_powers(&sg(&[7, 12, 15])).unwrap();
        assert_eq!((p.rho, p.steps.clone(), p.e1, p.s0), (2, vec![3, 3], 6, 3));

        let p = canonical_powers(&sg(&[5, 9, 11])).unwrap();
        assert_eq!((p.rho, p.steps.clone(), p.e1, p.s0), (3, vec![2, 2, 1], 5, 3));
        assert_eq!(p.steps[2], 1, "λ(K³/K²) must be 1 here");

        let p = canonical_powers(&sg(&[4, 5, 6])).unwrap();
        assert_eq!((p.rho, p.steps.clone(), p.e1, p.s0), (1, vec![0], 0, 0));
    }

    #[test]
    fn classify_345() {
        let r = classify(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(r.agl_level, 1);
        assert!(r.is_goto);
        assert_eq!(r.cdeg, r.ring_type - 1);
        assert_eq!(r.rho, 2);
        assert!(r.comparison_holds);
    }

    #[test]
    fn classify_579() {
        let r = classify(&sg(&[5, 7, 9])).unwrap();
        assert_ne!(r.agl_level, 1, "not almost Gorenstein");
        assert_ne!(r.agl_level, 2, "not 2-AGL");
        assert_eq!(r.agl_level, 4);
        assert!(r.is_goto);
        assert_eq!((r.cdeg, r.bideg, r.rho), (2, 1, 4));
    }

    #[test]
    fn classify_agl_levels() {
        assert_eq!(classify(&sg(&[3, 7, 8])).unwrap().agl_level, 2);
        assert_eq!(classify(&sg(&[7, 12, 15])).unwrap().agl_level, 3);
        assert_eq!(classify(&sg(&[5, 9, 11])).unwrap().agl_level, 3);
        assert_eq!(classify(&sg(&[2, 3])).unwrap().agl_level, 0);
    }

    #[test]
    fn classify_far_flung_378() {
        let r = classify(&sg(&[3, 7, 8])).unwrap();
        assert_eq!(r.bideg, r.n_of);
        assert!(r.is_far_flung);
    }

    #[test]
    fn classify_counterexample() {
        let r = classify(&sg(&[13, 14, 15, 16, 17, 18, 21, 23])).unwrap();
        assert_eq!(r.ring_type, 5);
        assert_eq!((r.cdeg, r.bideg), (8, 9));
        assert!(!r.comparison_holds);
        assert!(r.is_far_flung);
        assert_eq!((r.rho, r.e1, r.s0), (2, 17, 9));
    }

    #[test]
    fn comparison_fixtures() {
        assert_eq!(comparison(&sg(&[5, 7, 9])).unwrap(), (2, 1, true));
        assert_eq!(
            comparison(&sg(&[13, 14, 15, 16, 17, 18, 21, 23])).unwrap(),
            (8, 9, false)
        );
        assert_eq!(comparison(&sg(&[3, 4])).unwrap(), (0, 0, true));
    }

    #[test]
    fn augmented_fixtures() {
        let a = augmented_predictions(&sg(&[3, 4, 5])).unwrap();
        assert_eq!((a.cdeg, a.ring_type, a.bideg), (4, 5, Some(1)));
        let a = augmented_predictions(&sg(&[5, 7, 9])).unwrap();
        assert_eq!((a.cdeg, a.ring_type, a.bideg), (6, 5, Some(1)));
        let a = augmented_predictions(&sg(&[3, 4])).unwrap();
        assert_eq!((a.cdeg, a.ring_type, a.bideg), (2, 3, None));
    }

    #[test]
    fn mm_analysis_579() {
        let m = mm_analysis(&sg(&[5, 7, 9])).unwrap();
        assert_eq!(m.h_prime, vec![5, 7, 9, 11, 13]);
        assert_eq!(m.cdeg_direct, 3);
        assert_eq!(m.cdeg_predicted, 3);
        assert!(m.matches);
        assert!(!m.a_is_dvr);
        // A = k[[t⁵,t⁷,t⁹,t¹¹,t¹³]] has cdeg(A) = 3 = r(A) − 1, so it is
        // almost Gorenstein and therefore Goto: bideg(A) = 1 on both
        // computation paths.
        assert_eq!(m.bideg, 1);
    }

    #[test]
    fn mm_analysis_other_inputs() {
        // maximal embedding dimension: A = k[[t]], degenerate but the
        // formula 1 + 3 − 2·2 = 0 still matches
        let m = mm_analysis(&sg(&[3, 4, 5])).unwrap();
        assert!(m.a_is_dvr);
        assert_eq!(m.h_prime, vec![1]);
        assert_eq!((m.cdeg_direct, m.cdeg_predicted, m.bideg), (0, 0, 0));
        assert!(m.matches);

        let m = mm_analysis(&sg(&[3, 4])).unwrap();
        assert_eq!(m.h_prime, vec![3, 4, 5]);
        assert_eq!(m.cdeg_direct, 1);
        assert!(m.matches);
        assert!(!m.a_is_dvr);

        let m = mm_analysis(&sg(&[2, 3])).unwrap();
        assert!(m.a_is_dvr && m.matches);

        assert_eq!(
            mm_analysis(&NumericalSemigroup::root()),
            Err(Error::IsFullMonoid)
        );
    }

    #[test]
    fn report_serialization_round_trips() {
        let r = classify(&sg(&[5, 7, 9])).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"type\":2"));
        let back: DegreeReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
