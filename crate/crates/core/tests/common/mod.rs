//! Random braid words and Artin-relation rewriting for the randomized
//! word-problem suites. Every move used here is a defining relation of
//! `B_n` (or a free insertion/deletion), so a rewritten word always
//! represents the same group element as its source.

use quasipos_core::braid::BraidWord;
use rand::Rng;

pub fn random_letters<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let index = rng.gen_range(1..strands) as i64;
            if rng.gen_bool(0.5) {
                index
            } else {
                -index
            }
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::from_signed(strands, &random_letters(rng, strands, len)).unwrap()
}

/// Apply one random rewrite. Possible moves: insert a cancelling pair,
/// delete an adjacent cancelling pair, replace `σ_i^e σ_{i±1}^e σ_i^e` by
/// the braided triple, or swap far commuting letters.
fn rewrite_once<R: Rng>(rng: &mut R, strands: usize, letters: &mut Vec<i64>, max_len: usize) {
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                if letters.len() + 2 > max_len {
                    continue;
                }
                let pos = rng.gen_range(0..=letters.len());
                let k = rng.gen_range(1..strands) as i64;
                let k = if rng.gen_bool(0.5) { k } else { -k };
                letters.splice(pos..pos, [k, -k]);
                return;
            }
            1 => {
                let sites: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&p| letters[p] == -letters[p + 1])
                    .collect();
                if let Some(&p) = pick(rng, &sites) {
                    letters.drain(p..=p + 1);
                    return;
                }
            }
            2 => {
                let sites: Vec<usize> = (0..letters.len().saturating_sub(2))
                    .filter(|&p| {
                        let (a, b, c) = (letters[p], letters[p + 1], letters[p + 2]);
                        a == c
                            && a.signum() == b.signum()
                            && (a.abs() - b.abs()).abs() == 1
                    })
                    .collect();
                if let Some(&p) = pick(rng, &sites) {
                    let (a, b) = (letters[p], letters[p + 1]);
                    letters[p] = b;
                    letters[p + 1] = a;
                    letters[p + 2] = b;
                    return;
                }
            }
            _ => {
                let sites: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&p| (letters[p].abs() - letters[p + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&p) = pick(rng, &sites) {
                    letters.swap(p, p + 1);
                    return;
                }
            }
        }
    }
}

fn pick<'a, R: Rng>(rng: &mut R, sites: &'a [usize]) -> Option<&'a usize> {
    if sites.is_empty() {
        None
    } else {
        Some(&sites[rng.gen_range(0..sites.len())])
    }
}

/// A word equal to `w` in `B_n`, obtained by a random chain of rewrites.
pub fn random_equivalent<R: Rng>(
    rng: &mut R,
    w: &BraidWord,
    moves: usize,
    max_len: usize,
) -> BraidWord {
    let mut letters = w.to_signed();
    for _ in 0..moves {
        rewrite_once(rng, w.strands(), &mut letters, max_len);
    }
    BraidWord::from_signed(w.strands(), &letters).unwrap()
}
