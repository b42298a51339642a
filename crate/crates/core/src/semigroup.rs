//! Numerical semigroups and their combinatorial invariants.
//!
//! A numerical semigroup H = ⟨a₁, …, aₙ⟩ is an additive submonoid of ℤ≥0 with
//! finite complement, equivalently gcd(a₁, …, aₙ) = 1. The missing integers
//! are the *gaps*; their count is the *genus* g(H), the largest gap is the
//! *Frobenius number* F(H), and c = F + 1 is the *conductor*: every integer
//! ≥ c belongs to H. These data control the semigroup ring
//! R = k[[H]] = k[[t^a₁, …, t^aₙ]], a one-dimensional complete local domain,
//! and the ring invariants used throughout this crate have purely
//! combinatorial readings here: the multiplicity e₀(m) is the least nonzero
//! element of H, the embedding dimension is the number of minimal generators,
//! and the Cohen–Macaulay type r(R) is the number of *pseudo-Frobenius*
//! elements PF(H) = {z ∉ H : z + h ∈ H for every nonzero h ∈ H}. H is
//! *symmetric* (⟺ r(R) = 1 ⟺ R Gorenstein) when x ↦ F − x exchanges gaps
//! and sub-conductor elements.
//!
//! Membership is held in an explicit boolean window over [0, c): integers ≥ c
//! are members by definition of the conductor, negative integers never are.

use crate::error::{Error, Result};

/// Hard cap on the membership window length (in bits) any construction may
/// request. The sieve bound is min(H)·max(H); every enumeration and sweep in
/// this crate stays below 10⁴ bits, so the cap exists only to keep
/// pathological command-line input from allocating gigabytes.
pub const MAX_WINDOW_BITS: u64 = 1 << 26;

/// A numerical semigroup in canonical form: minimal generators, conductor,
/// genus, and the membership window over [0, conductor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    /// Minimal generating system, sorted ascending; `[1]` for H = ℤ≥0.
    generators: Vec<u64>,
    /// Least c with [c, ∞) ⊆ H; `0` for H = ℤ≥0.
    conductor: u64,
    /// Number of gaps.
    genus: u64,
    /// `membership[i]` ⟺ i ∈ H, for i ∈ [0, conductor).
    membership: Vec<bool>,
}

/// Greatest common divisor (Euclid).
pub(crate) fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators` (order, duplicates, and
    /// zeros are irrelevant; the stored system is re-minimalized).
    ///
    /// The additive sieve runs to min·max of the generators — a safe upper
    /// bound for the conductor in all practical ranges — and the window is
    /// then trimmed to the true conductor. Should the bound ever fall short,
    /// it is doubled rather than trusted (the sieve itself certifies
    /// completeness by exhibiting `min` consecutive members).
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }

        let lo = gens[0];
        let hi = *gens.last().unwrap();
        let mut bound = lo.saturating_mul(hi).max(lo) + 1;
        loop {
            if bound > MAX_WINDOW_BITS {
                return Err(Error::ConductorBoundExceeded {
                    required: bound,
                    bound: MAX_WINDOW_BITS,
                });
            }
            let n = bound as usize;
            let mut bits = vec![false; n];
            bits[0] = true;
            for i in 1..n {
                for &g in &gens {
                    let g = g as usize;
                    if g <= i && bits[i - g] {
                        bits[i] = true;
                        break;
                    }
                }
            }
            // A run of `lo` consecutive members starting at p proves that
            // every integer ≥ p is a member (add multiples of lo), so the
            // window may be cut at p and handed over for trimming.
            let run = lo as usize;
            let mut streak = 0usize;
            let mut cut = None;
            for (i, &b) in bits.iter().enumerate() {
                streak = if b { streak + 1 } else { 0 };
                if streak == run {
                    cut = Some(i + 1 - run);
                    break;
                }
            }
            match cut {
                Some(p) => {
                    bits.truncate(p);
                    return Ok(Self::from_membership(bits));
                }
                None => bound = bound.saturating_mul(2),
            }
        }
    }

    /// The full monoid ℤ≥0 — the root of the semigroup tree, with F = −1 and
    /// genus 0. The degree operations reject it; enumeration starts here.
    pub fn root() -> Self {
        Self {
            generators: vec![1],
            conductor: 0,
            genus: 0,
            membership: Vec::new(),
        }
    }

    /// Canonicalizes a membership window into a semigroup value.
    ///
    /// Contract: `bits[i]` ⟺ i ∈ H for i below `bits.len()`, every integer
    /// ≥ `bits.len()` is a member, `bits[0]` is true (0 ∈ H), and the
    /// described set is closed under addition with gcd 1.
    pub(crate) fn from_membership(mut bits: Vec<bool>) -> Self {
        debug_assert!(bits.first().copied().unwrap_or(true), "0 must be a member");
        let conductor = bits
            .iter()
            .rposition(|&b| !b)
            .map_or(0, |i| i as u64 + 1);
        bits.truncate(conductor as usize);
        let genus = bits.iter().filter(|&&b| !b).count() as u64;

        // Least nonzero member; the conductor itself when the window holds
        // none (e.g. ⟨2,3⟩ with window [member, gap]).
        let multiplicity = (1..conductor)
            .find(|&i| bits[i as usize])
            .unwrap_or_else(|| conductor.max(1));

        // Minimal generators. Ascending scan: e is decomposable iff e − g is a
        // nonzero member for some minimal generator g < e already found, so
        // the generators collected so far are exactly what the test needs.
        // Any member e ≥ c + multiplicity splits as multiplicity + (e −
        // multiplicity) with e − multiplicity ≥ c, hence the scan bound.
        let member = |x: u64| x >= conductor || bits[x as usize];
        let mut generators: Vec<u64> = Vec::new();
        for e in 1..(conductor + multiplicity) {
            if !member(e) {
                continue;
            }
            let decomposable = generators.iter().any(|&g| g < e && member(e - g));
            if !decomposable {
                generators.push(e);
            }
        }
        if generators.is_empty() {
            generators.push(1);
        }
        debug_assert_eq!(generators.iter().fold(0, |acc, &g| gcd(acc, g)), 1);

        Self {
            generators,
            conductor,
            genus,
            membership: bits,
        }
    }

    /// Minimal generating system, sorted ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Least c with [c, ∞) ⊆ H.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap F(H) = c − 1; `−1` for ℤ≥0.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Number of gaps g(H).
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// n(H) = #{h ∈ H : h < F}. Since F itself is a gap, this equals the
    /// member count of the window, conductor − genus.
    pub fn n_of(&self) -> u64 {
        self.conductor - self.genus
    }

    /// Multiplicity e₀ = least nonzero element of H (1 for ℤ≥0).
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators (the embedding dimension of k[[H]]).
    pub fn embedding_dim(&self) -> u64 {
        self.generators.len() as u64
    }

    /// Whether this is the full monoid ℤ≥0.
    pub fn is_full_monoid(&self) -> bool {
        self.conductor == 0
    }

    /// Membership test for an arbitrary integer.
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        let z = z as u64;
        z >= self.conductor || self.membership[z as usize]
    }

    /// The gaps ℤ≥0 \ H, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&i| !self.membership[i as usize])
            .collect()
    }

    /// Pseudo-Frobenius elements PF(H) = {z ∉ H : z + h ∈ H for all nonzero
    /// h ∈ H}. Testing z + g for the minimal generators g suffices: any
    /// nonzero h is g + h′ with h′ ∈ H, and (z + g) + h′ stays in H.
    ///
    /// For ℤ≥0 the definition over all of ℤ yields PF = {−1} (hence type 1),
    /// the usual convention.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_full_monoid() {
            return vec![-1];
        }
        self.gaps()
            .into_iter()
            .filter(|&z| {
                self.generators
                    .iter()
                    .all(|&g| self.contains(z as i64 + g as i64))
            })
            .map(|z| z as i64)
            .collect()
    }

    /// Cohen–Macaulay type r(R) = |PF(H)|.
    pub fn ring_type(&self) -> u64 {
        self.pseudo_frobenius().len() as u64
    }

    /// Whether H is symmetric: gaps and sub-conductor members pair off under
    /// x ↦ F − x, which happens exactly when g(H) = n(H), i.e. c = 2g. The
    /// equivalence with r(R) = 1 is cross-checked by the property suite.
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.genus
    }

    /// Children in the semigroup tree: H \ {g} for each minimal generator
    /// g > F(H), ordered by the removed generator ascending. Every semigroup
    /// of genus g + 1 arises exactly once this way, with Frobenius number g.
    pub fn children(&self) -> Vec<NumericalSemigroup> {
        self.generators
            .iter()
            .copied()
            .filter(|&g| g as i64 > self.frobenius())
            .map(|g| {
                let mut bits = vec![true; g as usize + 1];
                bits[..self.conductor as usize].copy_from_slice(&self.membership);
                bits[g as usize] = false;
                Self::from_membership(bits)
            })
            .collect()
    }

    /// H′ = (M : M) = {z : z + M ⊆ M} for the maximal ideal M = H \ {0} — the
    /// semigroup of the ring A = m :_{Q(R)} m. Always H′ ⊇ H; testing z + g
    /// for the minimal generators suffices (same induction as for PF), and
    /// every z ≥ c qualifies, so the window [0, c) decides everything.
    ///
    /// Errors with [`Error::IsFullMonoid`] for H = ℤ≥0 (no maximal-ideal
    /// analogue here); note the *result* may legitimately be ℤ≥0, e.g. for
    /// H = ⟨2,3⟩.
    pub fn m_colon_m(&self) -> Result<NumericalSemigroup> {
        if self.is_full_monoid() {
            return Err(Error::IsFullMonoid);
        }
        let bits: Vec<bool> = (0..self.conductor)
            .map(|z| {
                self.generators
                    .iter()
                    .all(|&g| self.contains(z as i64 + g as i64))
            })
            .collect();
        Ok(Self::from_membership(bits))
    }
}
