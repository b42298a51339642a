//! The tree of numerical semigroups, organized by genus.
//!
//! Every numerical semigroup of genus g + 1 arises from exactly one semigroup
//! of genus g by removing a minimal generator larger than the Frobenius
//! number, so breadth-first expansion from ℤ≥0 visits each semigroup exactly
//! once. Levels are sorted by generator list, which fixes a deterministic
//! enumeration order independent of how the expansion is scheduled.

use crate::semigroup::NumericalSemigroup;

/// All semigroups of genus 0..=max_genus, one sorted level per genus.
///
/// Level g holds every numerical semigroup of genus g, ordered
/// lexicographically by minimal generator list.
pub fn genus_levels(max_genus: u64) -> Vec<Vec<NumericalSemigroup>> {
    let mut levels = vec![vec![NumericalSemigroup::root()]];
    for _ in 0..max_genus {
        let mut next: Vec<NumericalSemigroup> = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|h| h.children())
            .collect();
        next.sort_by(|x, y| x.generators().cmp(y.generators()));
        levels.push(next);
    }
    levels
}

/// The number of semigroups at each genus 0..=max_genus.
pub fn counts_by_genus(max_genus: u64) -> Vec<u64> {
    genus_levels(max_genus)
        .iter()
        .map(|level| level.len() as u64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        assert_eq!(
            counts_by_genus(8),
            vec![1, 1, 2, 4, 7, 12, 23, 39, 67],
        );
    }

    #[test]
    fn cumulative_count_to_genus_five() {
        let total: u64 = counts_by_genus(5).iter().sum();
        assert_eq!(total, 27);
    }

    #[test]
    fn levels_hold_their_genus_in_sorted_order() {
        for (g, level) in genus_levels(7).iter().enumerate() {
            for h in level {
                assert_eq!(h.genus(), g as u64);
            }
            for pair in level.windows(2) {
                assert!(pair[0].generators() < pair[1].generators());
            }
        }
    }

    #[test]
    fn small_levels_are_the_expected_semigroups() {
        let levels = genus_levels(2);
        let gens: Vec<Vec<u64>> = levels[2]
            .iter()
            .map(|h| h.generators().to_vec())
            .collect();
        assert_eq!(gens, vec![vec![2, 5], vec![3, 4, 5]]);
    }
}
