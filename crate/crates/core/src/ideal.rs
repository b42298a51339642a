//! Relative ideals of a numerical semigroup: fractional monomial ideals of
//! k[[H]] in combinatorial form.
//!
//! A *relative ideal* is a set E ⊆ ℤ, bounded below, with E + H ⊆ E. The
//! instances that matter here: H itself (the ring R), the maximal ideal
//! M = H \ {0}, principal ideals x + H (the fractions t^x R), and the
//! canonical ideal K = {x ∈ ℤ : F − x ∉ H}, which represents the canonical
//! module ω_R. Module operations become set arithmetic:
//!
//! * sum E + F (as R-modules) = set union,
//! * product E·F = Minkowski sum {e + f},
//! * colon (E : F) = {z : z + F ⊆ E}, giving the R-dual E* = (R : E) and the
//!   bidual E**,
//! * trace ideal tr(E) = E·E*,
//! * length λ(E/F) = |E \ F| for F ⊆ E (valuation picture of quotients of
//!   fractional ideals).
//!
//! Representation: (base H, min, window of exactly c = conductor(H) boolean
//! positions over [min, min + c)). This is complete without any heuristics:
//! E ⊇ min + H forces every integer ≥ min + c into E, so the window describes
//! E exactly. Each operation's window bound is justified where it is
//! computed; the property suite additionally checks every operation against
//! an independent set-model oracle over wider horizons.

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A relative ideal over a fixed base semigroup, in canonical form:
/// `min` is the least member and the window spans [min, min + c).
#[derive(Debug, Clone)]
pub struct RelativeIdeal {
    base: Arc<NumericalSemigroup>,
    min: i64,
    /// `window[i]` ⟺ min + i ∈ E for i ∈ [0, c); `window[0]` is always true
    /// and every integer ≥ min + c is a member.
    window: Vec<bool>,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_base(other) && self.min == other.min && self.window == other.window
    }
}

impl Eq for RelativeIdeal {}

impl RelativeIdeal {
    /// Internal constructor; callers guarantee canonical form.
    fn from_raw(base: Arc<NumericalSemigroup>, min: i64, window: Vec<bool>) -> Self {
        debug_assert_eq!(window.len() as u64, base.conductor());
        debug_assert!(window.first().copied().unwrap_or(true), "min must be a member");
        Self { base, min, window }
    }

    /// The principal ideal x + H.
    pub fn principal(base: &Arc<NumericalSemigroup>, x: i64) -> Self {
        let window = (0..base.conductor()).map(|i| base.contains(i as i64)).collect();
        Self::from_raw(Arc::clone(base), x, window)
    }

    /// The ring R = H itself, as the relative ideal 0 + H.
    pub fn ring(base: &Arc<NumericalSemigroup>) -> Self {
        Self::principal(base, 0)
    }

    /// The maximal ideal M = H \ {0}, with min = multiplicity.
    pub fn maximal_ideal(base: &Arc<NumericalSemigroup>) -> Self {
        let m = base.multiplicity() as i64;
        let window = (0..base.conductor())
            .map(|i| base.contains(m + i as i64))
            .collect();
        Self::from_raw(Arc::clone(base), m, window)
    }

    /// The canonical ideal K = {x ∈ ℤ : F − x ∉ H}, normalized: min(K) = 0
    /// automatically since F ∉ H, and K ⊇ H because F − h ∈ H would put F in
    /// H. Errors with [`Error::IsFullMonoid`] for H = ℤ≥0.
    pub fn canonical_ideal(base: &Arc<NumericalSemigroup>) -> Result<Self> {
        if base.is_full_monoid() {
            return Err(Error::IsFullMonoid);
        }
        let f = base.frobenius();
        let window = (0..base.conductor())
            .map(|i| !base.contains(f - i as i64))
            .collect();
        Ok(Self::from_raw(Arc::clone(base), 0, window))
    }

    /// The relative ideal generated by `points`: ⋃ (x + H). Panics on an
    /// empty list (no bounded-below set to describe).
    pub fn generated_by(base: &Arc<NumericalSemigroup>, points: &[i64]) -> Self {
        assert!(!points.is_empty(), "a relative ideal needs at least one generator");
        let min = *points.iter().min().unwrap();
        let window = (0..base.conductor())
            .map(|i| {
                let z = min + i as i64;
                points.iter().any(|&x| base.contains(z - x))
            })
            .collect();
        Self::from_raw(Arc::clone(base), min, window)
    }

    /// Base semigroup.
    pub fn base(&self) -> &Arc<NumericalSemigroup> {
        &self.base
    }

    /// Least member.
    pub fn min(&self) -> i64 {
        self.min
    }

    fn conductor(&self) -> usize {
        self.window.len()
    }

    fn same_base(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base == other.base
    }

    /// Membership test.
    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            return false;
        }
        let off = (z - self.min) as usize;
        off >= self.conductor() || self.window[off]
    }

    /// The members in [min, min + c), ascending — everything past them is a
    /// member by the window convention.
    pub fn members_below_conductor(&self) -> Vec<i64> {
        (0..self.conductor())
            .filter(|&i| self.window[i])
            .map(|i| self.min + i as i64)
            .collect()
    }

    /// The translate E + t.
    pub fn translate(&self, t: i64) -> Self {
        Self::from_raw(Arc::clone(&self.base), self.min + t, self.window.clone())
    }

    /// The translate with min = 0 (compare ideals "up to shift").
    pub fn normalized(&self) -> Self {
        self.translate(-self.min)
    }

    /// Module sum E + F = E ∪ F.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if !self.same_base(other) {
            return Err(Error::BaseMismatch);
        }
        let min = self.min.min(other.min);
        // Every z ≥ min + c lies in whichever summand attains min.
        let window = (0..self.conductor())
            .map(|i| {
                let z = min + i as i64;
                self.contains(z) || other.contains(z)
            })
            .collect();
        Ok(Self::from_raw(Arc::clone(&self.base), min, window))
    }

    /// Module product E·F = {e + f : e ∈ E, f ∈ F}.
    ///
    /// Window argument: a product member below min(E) + min(F) + c needs
    /// e − min(E) < c and f − min(F) < c, so the window convolution of the two
    /// windows captures everything; pairs reaching past land in the tail,
    /// which the product owns anyway (min(E) + tail of F ⊆ E·F).
    pub fn product(&self, other: &Self) -> Result<Self> {
        if !self.same_base(other) {
            return Err(Error::BaseMismatch);
        }
        let c = self.conductor();
        let min = self.min + other.min;
        let mut window = vec![false; c];
        if c > 0 {
            for i in 0..c {
                if !self.window[i] {
                    continue;
                }
                for j in 0..c - i {
                    if other.window[j] {
                        window[i + j] = true;
                    }
                }
            }
        }
        Ok(Self::from_raw(Arc::clone(&self.base), min, window))
    }

    /// Colon ideal (E : F) = {z ∈ ℤ : z + F ⊆ E}.
    ///
    /// Window argument: z + min(F) ∈ E forces z ≥ min(E) − min(F) =: lo, and
    /// every z ≥ lo + c works because z + f ≥ min(E) + c for all f ∈ F; so
    /// only [lo, lo + c) needs testing. Within it, only F's window members
    /// need checking — z + f for f ≥ min(F) + c again lands in E's tail.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        if !self.same_base(other) {
            return Err(Error::BaseMismatch);
        }
        Ok(self.colon_same_base(other))
    }

    fn colon_same_base(&self, other: &Self) -> Self {
        let c = self.conductor();
        let lo = self.min - other.min;
        let holds: Vec<bool> = (0..c)
            .map(|k| {
                let z = lo + k as i64;
                (0..c).all(|j| !other.window[j] || self.contains(z + other.min + j as i64))
            })
            .collect();
        match holds.iter().position(|&b| b) {
            Some(k0) => {
                // Trim to the first member; positions past the computed
                // horizon are members (the ≥ lo + c argument above).
                let window = (0..c).map(|i| holds.get(k0 + i).copied().unwrap_or(true)).collect();
                Self::from_raw(Arc::clone(&self.base), lo + k0 as i64, window)
            }
            None => {
                // No member below lo + c: the colon is exactly [lo + c, ∞).
                Self::from_raw(Arc::clone(&self.base), lo + c as i64, vec![true; c])
            }
        }
    }

    /// The R-dual E* = (R : E).
    pub fn dual(&self) -> Self {
        Self::ring(&self.base).colon_same_base(self)
    }

    /// The bidual E** = (R : (R : E)); always E ⊆ E**, with E* = E***.
    pub fn bidual(&self) -> Self {
        self.dual().dual()
    }

    /// The trace ideal tr(E) = E·E* (⊆ R, an honest ideal of the ring).
    pub fn trace(&self) -> Self {
        self.product(&self.dual()).expect("same base")
    }

    /// λ(E/F) = |E \ F| for F ⊆ E; errors with [`Error::NotContained`]
    /// (witnessing member of F \ E) otherwise.
    ///
    /// Both sets contain every integer ≥ min(F) + c, so the count runs over
    /// [min(E), min(F) + c): E contributes its whole window plus the stretch
    /// [min(E) + c, min(F) + c) of its tail, F contributes its window.
    pub fn length_quotient(&self, sub: &Self) -> Result<u64> {
        if !self.same_base(sub) {
            return Err(Error::BaseMismatch);
        }
        if sub.min < self.min {
            return Err(Error::NotContained(sub.min));
        }
        for i in 0..sub.conductor() {
            if sub.window[i] {
                let z = sub.min + i as i64;
                if !self.contains(z) {
                    return Err(Error::NotContained(z));
                }
            }
        }
        let d = (sub.min - self.min) as u64;
        let count_self = self.window.iter().filter(|&&b| b).count() as u64 + d;
        let count_sub = sub.window.iter().filter(|&&b| b).count() as u64;
        Ok(count_self - count_sub)
    }

    /// Minimal generators of E over H: members not of the form h + e with
    /// h ∈ H nonzero, e ∈ E. All of them sit in the window — any member
    /// ≥ min + c is min + (member − min) with member − min ≥ c in H. ν(K)
    /// equals the Cohen–Macaulay type; the property suite enforces this.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let c = self.conductor();
        if c == 0 {
            // Base ℤ≥0: E = [min, ∞) = min + H is principal.
            return vec![self.min];
        }
        (0..c)
            .filter(|&i| self.window[i])
            .map(|i| self.min + i as i64)
            .filter(|&z| {
                // z − h must fall below min or out of E for every nonzero
                // h ∈ H; h ≤ z − min < c keeps h inside the base window.
                !(1..=(z - self.min))
                    .any(|h| self.base.contains(h) && self.contains(z - h))
            })
            .collect()
    }
}

impl Serialize for RelativeIdeal {
    /// Serializes as `{min, members}`, the sorted member list below the
    /// all-members tail at min + conductor.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RelativeIdeal", 2)?;
        s.serialize_field("min", &self.min)?;
        s.serialize_field("members", &self.members_below_conductor())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(gens).unwrap())
    }

    #[test]
    fn canonical_ideal_345() {
        let h = base(&[3, 4, 5]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        assert_eq!(k.min(), 0);
        assert_eq!(k.members_below_conductor(), vec![0, 1]);
        assert!(!k.contains(2));
        assert!(k.contains(3));
    }

    #[test]
    fn canonical_ideal_579() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        // ℤ≥0 \ {1,3,4,6,8,13}
        assert_eq!(k.members_below_conductor(), vec![0, 2, 5, 7, 9, 10, 11, 12]);
        for z in [1, 3, 4, 6, 8, 13] {
            assert!(!k.contains(z));
        }
        assert!(k.contains(14));
    }

    #[test]
    fn canonical_ideal_contains_ring() {
        for gens in [&[3u64, 4, 5][..], &[5, 7, 9], &[2, 3], &[7, 12, 15]] {
            let h = base(gens);
            let k = RelativeIdeal::canonical_ideal(&h).unwrap();
            let r = RelativeIdeal::ring(&h);
            assert!(k.length_quotient(&r).is_ok(), "R ⊄ K for {gens:?}");
        }
    }

    #[test]
    fn canonical_ideal_rejects_full_monoid() {
        let h = Arc::new(NumericalSemigroup::root());
        assert_eq!(RelativeIdeal::canonical_ideal(&h), Err(Error::IsFullMonoid));
    }

    #[test]
    fn colon_ring_by_canonical_is_maximal_ideal_345() {
        let h = base(&[3, 4, 5]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        let r = RelativeIdeal::ring(&h);
        assert_eq!(r.colon(&k).unwrap(), RelativeIdeal::maximal_ideal(&h));
    }

    #[test]
    fn product_of_canonical_378_is_all_nonnegatives() {
        let h = base(&[3, 7, 8]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        let k2 = k.product(&k).unwrap();
        assert_eq!(k2.min(), 0);
        let c = h.conductor() as i64;
        assert_eq!(k2.members_below_conductor(), (0..c).collect::<Vec<_>>());
    }

    #[test]
    fn bidual_gain_579() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        assert_eq!(k.bidual().length_quotient(&k).unwrap(), 1);
    }

    #[test]
    fn trace_of_canonical_579_is_maximal_ideal() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        assert_eq!(k.trace(), RelativeIdeal::maximal_ideal(&h));
    }

    #[test]
    fn lengths_579() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        let r = RelativeIdeal::ring(&h);
        assert_eq!(k.length_quotient(&r).unwrap(), 2);
        assert_eq!(
            r.length_quotient(&RelativeIdeal::principal(&h, 5)).unwrap(),
            5
        );
    }

    #[test]
    fn length_rejects_non_contained() {
        let h = base(&[5, 7, 9]);
        let r = RelativeIdeal::ring(&h);
        let shifted = RelativeIdeal::principal(&h, 5);
        assert_eq!(shifted.length_quotient(&r), Err(Error::NotContained(0)));
    }

    #[test]
    fn minimal_generators_of_canonical() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        assert_eq!(k.minimal_generators(), vec![0, 2]);

        let h = base(&[13, 14, 15, 16, 17, 18, 21, 23]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        assert_eq!(k.minimal_generators().len(), 5);
    }

    #[test]
    fn base_mismatch_is_detected() {
        let h1 = base(&[3, 4, 5]);
        let h2 = base(&[5, 7, 9]);
        let a = RelativeIdeal::ring(&h1);
        let b = RelativeIdeal::ring(&h2);
        assert_eq!(a.sum(&b), Err(Error::BaseMismatch));
        assert_eq!(a.product(&b), Err(Error::BaseMismatch));
        assert_eq!(a.colon(&b), Err(Error::BaseMismatch));
        assert_eq!(a.length_quotient(&b), Err(Error::BaseMismatch));
    }

    #[test]
    fn equal_bases_by_value_are_accepted() {
        let h1 = base(&[3, 4, 5]);
        let h2 = base(&[3, 4, 5]);
        let a = RelativeIdeal::ring(&h1);
        let b = RelativeIdeal::maximal_ideal(&h2);
        assert_eq!(a.length_quotient(&b).unwrap(), 1);
    }

    #[test]
    fn translate_and_normalize() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        let shifted = k.translate(11);
        assert_eq!(shifted.min(), 11);
        assert!(shifted.contains(13));
        assert_eq!(shifted.normalized(), k);
    }

    #[test]
    fn generated_by_matches_unions_of_principals() {
        let h = base(&[5, 7, 9]);
        let via_sum = RelativeIdeal::principal(&h, 5)
            .sum(&RelativeIdeal::principal(&h, 7))
            .unwrap();
        assert_eq!(RelativeIdeal::generated_by(&h, &[5, 7]), via_sum);
    }

    #[test]
    fn full_monoid_base_degenerates_gracefully() {
        let h = Arc::new(NumericalSemigroup::root());
        let a = RelativeIdeal::principal(&h, 3);
        let b = RelativeIdeal::principal(&h, 5);
        assert_eq!(a.sum(&b).unwrap(), a);
        assert_eq!(a.product(&b).unwrap(), RelativeIdeal::principal(&h, 8));
        assert_eq!(a.colon(&b).unwrap(), RelativeIdeal::principal(&h, -2));
        assert_eq!(b.length_quotient(&b).unwrap(), 0);
        assert_eq!(a.length_quotient(&b).unwrap(), 2);
        assert_eq!(b.minimal_generators(), vec![5]);
    }

    #[test]
    fn serialization_shape() {
        let h = base(&[5, 7, 9]);
        let k = RelativeIdeal::canonical_ideal(&h).unwrap();
        let v = serde_json::to_value(&k).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"min": 0, "members": [0, 2, 5, 7, 9, 10, 11, 12]})
        );
    }
}
