//! Garside left-greedy normal form for `B_n`, solving the word problem.
//!
//! The classical Garside structure is used: Δ is the positive half twist,
//! and the simple elements are the permutation braids (positive braids in
//! which each pair of strands crosses at most once), identified with
//! permutations. Every braid has a unique expression
//!
//! ```text
//!     w = Δ^p · s₁ · s₂ ⋯ s_k
//! ```
//!
//! where no factor is trivial or Δ and each consecutive pair is
//! left-weighted: no generator can be moved from the front of `s_{i+1}`
//! to the back of `s_i` while keeping both simple. Two words are equal in
//! `B_n` exactly when these forms coincide, which is the equality test
//! everything downstream relies on.
//!
//! Cost is polynomial, roughly O(|w|² · n) with tiny constants; the words
//! handled here stay under a few hundred letters.

use crate::braid::{BraidLetter, BraidWord, StrandPermutation};
use crate::error::{Error, Result};

/// A simple (permutation) braid: one positive braid in which each pair of
/// strands crosses at most once, recorded by its strand permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationFactor(StrandPermutation);

impl PermutationFactor {
    pub fn permutation(&self) -> &StrandPermutation {
        &self.0
    }

    /// The canonical positive word for this permutation braid: repeatedly
    /// emit the smallest generator in the starting set.
    pub fn positive_letters(&self) -> Vec<BraidLetter> {
        let mut perm = self.0.clone();
        let n = perm.degree();
        let mut out = Vec::new();
        loop {
            let s = starting_set(&perm);
            match (0..n.saturating_sub(1)).find(|&j| s[j]) {
                None => break,
                Some(j) => {
                    out.push(BraidLetter::new(j + 1, true).expect("index ≥ 1"));
                    perm = StrandPermutation::adjacent_transposition(n, j + 1).then(&perm);
                }
            }
        }
        out
    }
}

/// The left-greedy normal form `Δ^p s₁ ⋯ s_k` of a braid word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<PermutationFactor>,
}

impl CanonicalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[PermutationFactor] {
        &self.factors
    }

    /// True exactly when the form represents the identity braid.
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Re-expand to a braid word: the Δ power followed by the canonical
    /// positive word of each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = PermutationFactor(half_twist(n)).positive_letters();
        let mut letters: Vec<BraidLetter> = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta);
            }
        } else {
            let delta_inv: Vec<BraidLetter> = delta.iter().rev().map(BraidLetter::inverse).collect();
            for _ in 0..(-self.delta_power) {
                letters.extend_from_slice(&delta_inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.positive_letters());
        }
        BraidWord::new(n, letters).expect("letters come from valid factors")
    }
}

/// Starting set of a permutation braid: 0-based `j` is present when
/// `σ_{j+1}` left-divides it, i.e. when the strands starting at `j, j+1`
/// cross, i.e. when `π(j) > π(j+1)`.
fn starting_set(p: &StrandPermutation) -> Vec<bool> {
    let n = p.degree();
    (0..n.saturating_sub(1)).map(|j| p.apply(j) > p.apply(j + 1)).collect()
}

/// Finishing set: `σ_{j+1}` right-divides the braid iff the strands
/// *ending* at `j, j+1` cross, i.e. iff `π⁻¹(j) > π⁻¹(j+1)`.
fn finishing_set(p: &StrandPermutation) -> Vec<bool> {
    starting_set(&p.inverse())
}

/// The half twist Δ as a permutation: `i ↦ n−1−i` (0-based).
fn half_twist(n: usize) -> StrandPermutation {
    StrandPermutation::from_images((0..n).rev().collect()).expect("reversal is a bijection")
}

/// Conjugation by Δ on simple elements; an involution sending σ_i to σ_{n−i}.
fn flip(p: &StrandPermutation) -> StrandPermutation {
    let delta = half_twist(p.degree());
    delta.then(p).then(&delta)
}

/// Make the adjacent pair `(a, b)` left-weighted by moving generators from
/// the front of `b` to the back of `a` while `a` stays simple. Returns true
/// if anything moved. `b` may end up the identity.
fn left_weight(a: &mut StrandPermutation, b: &mut StrandPermutation) -> bool {
    let n = a.degree();
    let mut changed = false;
    loop {
        let fa = finishing_set(a);
        let sb = starting_set(b);
        let movable = (0..n.saturating_sub(1)).find(|&j| sb[j] && !fa[j]);
        match movable {
            None => break,
            Some(j) => {
                let t = StrandPermutation::adjacent_transposition(n, j + 1);
                *a = a.then(&t);
                *b = t.then(b);
                changed = true;
            }
        }
    }
    changed
}

/// Compute the left-greedy normal form of a braid word.
pub fn canonical_form(w: &BraidWord) -> CanonicalForm {
    let n = w.strands();
    let delta = half_twist(n);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<StrandPermutation> = Vec::new();

    // Rewrite each negative letter as Δ⁻¹ · (Δ σ_i⁻¹) and push the Δ⁻¹ to
    // the far left; conjugation by Δ flips the factors already collected.
    for letter in w.letters() {
        let t = StrandPermutation::adjacent_transposition(n, letter.index());
        if letter.is_positive() {
            factors.push(t);
        } else {
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            factors.push(delta.then(&t));
        }
    }

    // Left-weight adjacent pairs until stable. Each move shifts a crossing
    // one factor to the left, so the passes terminate.
    loop {
        factors.retain(|f| !f.is_identity());
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(i + 1);
            if left_weight(&mut left[i], &mut right[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // At a left-weighted fixpoint any Δ factors form a prefix; absorb them.
    while factors.first() == Some(&delta) {
        factors.remove(0);
        delta_power += 1;
    }
    debug_assert!(factors.iter().all(|f| !f.is_identity() && *f != delta));

    CanonicalForm {
        strands: n,
        delta_power,
        factors: factors.into_iter().map(PermutationFactor).collect(),
    }
}

/// Exact equality test in `B_n` via canonical forms.
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::GroupMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(canonical_form(u) == canonical_form(v))
}

/// True exactly when the word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    canonical_form(w).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testwords::{beta_prime, BETA};

    fn word(strands: usize, letters: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, letters).unwrap()
    }

    #[test]
    fn free_cancellation_is_trivial() {
        let c = canonical_form(&word(2, &[1, -1]));
        assert_eq!(c.delta_power(), 0);
        assert!(c.factors().is_empty());
        assert!(c.is_identity());
    }

    #[test]
    fn braid_relation_gives_delta_in_b3() {
        let lhs = canonical_form(&word(3, &[1, 2, 1]));
        let rhs = canonical_form(&word(3, &[2, 1, 2]));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.delta_power(), 1);
        assert!(lhs.factors().is_empty());
    }

    #[test]
    fn far_generators_commute() {
        assert!(words_equal(&word(5, &[1, 4]), &word(5, &[4, 1])).unwrap());
        assert!(words_equal(&word(5, &[1, -4]), &word(5, &[-4, 1])).unwrap());
    }

    #[test]
    fn distinct_generators_differ() {
        assert!(!words_equal(&word(3, &[1]), &word(3, &[2])).unwrap());
    }

    #[test]
    fn strand_count_mismatch_is_an_error() {
        assert_eq!(
            words_equal(&word(4, &[1]), &word(5, &[1])),
            Err(Error::GroupMismatch { left: 4, right: 5 })
        );
    }

    #[test]
    fn beta_equals_beta_prime_in_b5() {
        let beta = word(5, &BETA);
        let beta_p = word(5, &beta_prime());
        assert_eq!(beta.exponent_sum(), 4);
        assert_eq!(beta_p.exponent_sum(), 4);
        assert_eq!(beta.closure_permutation(), beta_p.closure_permutation());
        assert!(words_equal(&beta, &beta_p).unwrap());
    }

    #[test]
    fn beta_times_beta_prime_inverse_is_trivial() {
        let beta = word(5, &BETA);
        let beta_p = word(5, &beta_prime());
        assert!(is_trivial(&beta.concatenate(&beta_p.inverse()).unwrap()));
    }

    #[test]
    fn nonzero_exponent_sum_is_never_trivial() {
        assert!(!is_trivial(&word(2, &[1, 1])));
        assert!(is_trivial(&word(5, &[])));
    }

    #[test]
    fn negative_word_normalizes_to_negative_delta_power() {
        let c = canonical_form(&word(3, &[-1]));
        assert_eq!(c.delta_power(), -1);
        assert_eq!(c.factors().len(), 1);
    }

    #[test]
    fn reexpansion_has_the_same_canonical_form() {
        for letters in [
            &[2, 3, -2, 1][..],
            &[-1, -2, -1, 3][..],
            &[1, 1, 2, -1, 4, -3][..],
        ] {
            let w = word(5, letters);
            let c = canonical_form(&w);
            assert_eq!(canonical_form(&c.to_word()), c);
            assert!(words_equal(&c.to_word(), &w).unwrap());
        }
        let beta = word(5, &BETA);
        let c = canonical_form(&beta);
        assert_eq!(canonical_form(&c.to_word()), c);
    }

    #[test]
    fn factors_satisfy_left_weighted_condition() {
        let c = canonical_form(&word(5, &BETA));
        for pair in c.factors().windows(2) {
            let fa = finishing_set(pair[0].permutation());
            let sb = starting_set(pair[1].permutation());
            assert!(sb.iter().zip(&fa).all(|(&s, &f)| !s || f));
        }
    }
}
