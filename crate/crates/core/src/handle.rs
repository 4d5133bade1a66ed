//! Dehornoy handle reduction: an independent triviality test for braid
//! words, used as a cross-check oracle against the Garside normal form.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` whose interior `v` only
//! uses generators of index greater than `i`. Reducing it removes the two
//! outer letters and rewrites each interior `σ_{i+1}^{±1}` as
//! `σ_{i+1}^{-e} σ_i^{±1} σ_{i+1}^{e}`. Iterated reduction of the leftmost
//! handle terminates on a handle-free word, which is empty exactly when the
//! braid is trivial.
//!
//! The canonical form is the source of truth for equality; a disagreement
//! between the two engines is a hard test failure, so this module keeps a
//! step budget rather than trusting termination bounds.

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// Step budget that is far beyond anything the words in this crate need.
pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;

/// Locate the leftmost-closing handle: the smallest `q` such that some
/// `p < q` makes `w[p..=q]` a handle. Returns `(p, q)`.
fn first_handle(letters: &[(usize, bool)]) -> Option<(usize, usize)> {
    for q in 0..letters.len() {
        let (idx, sign) = letters[q];
        // Walk left for the previous letter of index ≤ idx; a handle needs
        // it to be exactly index idx with opposite sign.
        for p in (0..q).rev() {
            let (pidx, psign) = letters[p];
            if pidx < idx {
                break;
            }
            if pidx == idx {
                if psign != sign {
                    return Some((p, q));
                }
                break;
            }
        }
    }
    None
}

fn reduce_handle(letters: &mut Vec<(usize, bool)>, p: usize, q: usize) {
    let (idx, opening_sign) = letters[p];
    let mut replacement: Vec<(usize, bool)> = Vec::with_capacity(3 * (q - p));
    for &(j, s) in &letters[p + 1..q] {
        debug_assert!(j > idx);
        if j == idx + 1 {
            replacement.push((idx + 1, !opening_sign));
            replacement.push((idx, s));
            replacement.push((idx + 1, opening_sign));
        } else {
            replacement.push((j, s));
        }
    }
    letters.splice(p..=q, replacement);
}

/// Reduce until no handle remains. The result is a handle-free word equal
/// to the input in `B_n`; it is empty iff the input is trivial.
pub fn handle_reduce(w: &BraidWord, step_budget: usize) -> Result<BraidWord> {
    let mut letters: Vec<(usize, bool)> = w
        .letters()
        .iter()
        .map(|l| (l.index(), l.is_positive()))
        .collect();
    let mut steps = 0;
    while let Some((p, q)) = first_handle(&letters) {
        if steps >= step_budget {
            return Err(Error::BudgetExceeded {
                budget: step_budget,
            });
        }
        reduce_handle(&mut letters, p, q);
        steps += 1;
    }
    let letters = letters
        .into_iter()
        .map(|(i, s)| BraidLetter::new(i, s).expect("index ≥ 1"))
        .collect();
    BraidWord::new(w.strands(), letters)
}

/// Triviality via handle reduction.
pub fn is_trivial_handle(w: &BraidWord, step_budget: usize) -> Result<bool> {
    Ok(handle_reduce(w, step_budget)?.is_empty())
}

/// Equality via handle reduction of `u · v⁻¹`.
pub fn words_equal_handle(u: &BraidWord, v: &BraidWord, step_budget: usize) -> Result<bool> {
    let product = u.concatenate(&v.inverse())?;
    is_trivial_handle(&product, step_budget)
}
