//! Finitely presented groups: abelianization via Smith normal form,
//! conservative Tietze-style simplification, and the one-relator
//! proper-subword nontriviality test.
//!
//! Group words are sequences of signed generator ids (`k` encodes generator
//! `|k|` with sign `k`). Relators are stored freely reduced. The simplifier
//! uses a deliberately small, terminating move set — free/cyclic reduction,
//! dropping empty relators, and eliminating a generator that occurs exactly
//! once in some relator — and reports "inconclusive" rather than guessing
//! when that move set stalls.
//!
//! File format: JSON `{"generators": g, "relators": [[±id, …], …]}` with
//! 1-based ids; an optional `"description"` field is ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in a free group: signed 1-based generator ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<i64>,
}

impl GroupWord {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::MalformedToken {
                token: "0".to_owned(),
            });
        }
        Ok(GroupWord { letters })
    }

    pub fn empty() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    pub fn free_reduced(&self) -> GroupWord {
        let mut stack: Vec<i64> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if stack.last() == Some(&-k) {
                stack.pop();
            } else {
                stack.push(k);
            }
        }
        GroupWord { letters: stack }
    }

    /// Freely reduce, then strip inverse first/last pairs.
    pub fn cyclically_reduced(&self) -> GroupWord {
        let mut letters = self.free_reduced().letters;
        while letters.len() >= 2 && letters[0] == -letters[letters.len() - 1] {
            letters.pop();
            letters.remove(0);
        }
        GroupWord { letters }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.cyclically_reduced() == *self
    }

    /// Total occurrences of generator `gen`, either sign.
    fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|k| k.unsigned_abs() as usize == gen).count()
    }

    /// Replace every `gen^±1` by `replacement^±1` (not reduced).
    fn substitute(&self, gen: usize, replacement: &GroupWord) -> GroupWord {
        let mut letters = Vec::new();
        for &k in &self.letters {
            if k.unsigned_abs() as usize == gen {
                if k > 0 {
                    letters.extend_from_slice(&replacement.letters);
                } else {
                    letters.extend(replacement.inverse().letters);
                }
            } else {
                letters.push(k);
            }
        }
        GroupWord { letters }
    }

    /// Renumber ids above a removed generator down by one.
    fn renumber_above(&self, removed: usize) -> GroupWord {
        GroupWord {
            letters: self
                .letters
                .iter()
                .map(|&k| {
                    if k.unsigned_abs() as usize > removed {
                        k - k.signum()
                    } else {
                        k
                    }
                })
                .collect(),
        }
    }

    /// Does `other` occur as a contiguous run of letters in `self`?
    pub fn contains_contiguous(&self, other: &GroupWord) -> bool {
        if other.is_empty() {
            return true;
        }
        self.letters
            .windows(other.letters.len())
            .any(|w| w == other.letters.as_slice())
    }
}

/// A finite presentation: a generator count and relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_count: usize,
    relators: Vec<GroupWord>,
}

/// Invariants of the abelianized group `ℤ^free_rank ⊕ ℤ/d₁ ⊕ ⋯` with each
/// `dᵢ` dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }
}

/// Result of a simplification run; `completed` is false when the step
/// budget ran out before the move set reached its fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TietzeOutcome {
    pub presentation: GroupPresentation,
    pub completed: bool,
    pub steps_used: usize,
}

/// Verdict of the infinite-cyclic certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicVerdict {
    /// Simplification reached ⟨x | ⟩, so the group is ℤ.
    CertifiedZ,
    /// The abelianization is not ℤ, so the group is not ℤ.
    NotZ,
    /// Neither certificate applies.
    Inconclusive,
}

/// Verdict of the proper-subword test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubwordVerdict {
    /// The candidate is a proper contiguous subword of the cyclically
    /// reduced relator, hence a nontrivial element of the group.
    Nontrivial,
    /// Some hypothesis failed; nothing is claimed.
    Inapplicable,
}

impl GroupPresentation {
    /// Build a presentation; relators are stored freely reduced.
    pub fn new(generator_count: usize, relators: Vec<GroupWord>) -> Result<Self> {
        for r in &relators {
            let max = r.max_generator();
            if max > generator_count {
                return Err(Error::GeneratorOutOfRange {
                    id: max,
                    generators: generator_count,
                });
            }
        }
        Ok(GroupPresentation {
            generator_count,
            relators: relators.iter().map(GroupWord::free_reduced).collect(),
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    /// Smith normal form of the relator exponent matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        let rows: Vec<Vec<i128>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i128; self.generator_count];
                for &k in r.letters() {
                    row[k.unsigned_abs() as usize - 1] += k.signum() as i128;
                }
                row
            })
            .collect();
        let diag = smith_diagonal(rows, self.generator_count);
        let rank = diag.iter().filter(|&&d| d != 0).count();
        AbelianInvariants {
            free_rank: self.generator_count - rank,
            torsion: diag
                .iter()
                .filter(|&&d| d.unsigned_abs() >= 2)
                .map(|&d| d.unsigned_abs() as u64)
                .collect(),
        }
    }

    fn reduce_relators(&mut self) {
        for r in self.relators.iter_mut() {
            *r = r.cyclically_reduced();
        }
        self.relators.retain(|r| !r.is_empty());
    }

    /// Find the first (relator, generator) with exactly one occurrence.
    fn find_eliminable(&self) -> Option<(usize, usize)> {
        for (ri, r) in self.relators.iter().enumerate() {
            for gen in 1..=self.generator_count {
                if r.occurrences(gen) == 1 {
                    return Some((ri, gen));
                }
            }
        }
        None
    }

    /// Eliminate `gen` using relator `ri`, in which it occurs exactly once.
    fn eliminate(&mut self, ri: usize, gen: usize) {
        let r = self.relators.remove(ri);
        let pos = r
            .letters()
            .iter()
            .position(|k| k.unsigned_abs() as usize == gen)
            .expect("eliminable generator occurs");
        // Rotate the (cyclically reduced) relator so the occurrence leads:
        // gen^ε · u = 1, so gen = u⁻¹ when ε = +1 and gen = u when ε = −1.
        let mut rotated = r.letters()[pos..].to_vec();
        rotated.extend_from_slice(&r.letters()[..pos]);
        let sign = rotated[0].signum();
        let tail = GroupWord {
            letters: rotated[1..].to_vec(),
        }
        .free_reduced();
        let replacement = if sign > 0 { tail.inverse() } else { tail };
        for rel in self.relators.iter_mut() {
            *rel = rel
                .substitute(gen, &replacement)
                .renumber_above(gen)
                .free_reduced();
        }
        self.generator_count -= 1;
    }

    /// Simplify with the conservative move set, spending at most
    /// `step_budget` generator eliminations.
    pub fn tietze_simplify(&self, step_budget: usize) -> TietzeOutcome {
        let mut p = self.clone();
        let mut steps_used = 0;
        let completed = loop {
            p.reduce_relators();
            let Some((ri, gen)) = p.find_eliminable() else {
                break true;
            };
            if steps_used == step_budget {
                break false;
            }
            p.eliminate(ri, gen);
            steps_used += 1;
        };
        TietzeOutcome {
            presentation: p,
            completed,
            steps_used,
        }
    }

    /// Certify the group infinite cyclic, refute it via abelianization, or
    /// give up. ℤ is never claimed without a full Tietze certificate.
    pub fn infinite_cyclic_certificate(&self, step_budget: usize) -> CyclicVerdict {
        if !self.abelianization().is_infinite_cyclic() {
            return CyclicVerdict::NotZ;
        }
        let outcome = self.tietze_simplify(step_budget);
        if outcome.presentation.generator_count() == 1 && outcome.presentation.relators().is_empty()
        {
            CyclicVerdict::CertifiedZ
        } else {
            CyclicVerdict::Inconclusive
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let relators = file
            .relators
            .into_iter()
            .map(GroupWord::new)
            .collect::<Result<Vec<_>>>()?;
        GroupPresentation::new(file.generators, relators)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationFile {
            description: None,
            generators: self.generator_count,
            relators: self.relators.iter().map(|r| r.letters().to_vec()).collect(),
        })
        .expect("serializable")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    generators: usize,
    relators: Vec<Vec<i64>>,
}

/// Proper-subword test for a two-generator one-relator group (the caller
/// checks the presentation shape): a nonempty proper contiguous subword of
/// a nonempty cyclically reduced relator is never a relator, hence
/// represents a nontrivial element.
pub fn weinbaum_subword_test(relator: &GroupWord, candidate: &GroupWord) -> Result<SubwordVerdict> {
    if relator.is_empty() {
        return Err(Error::EmptyRelator);
    }
    let applicable = relator.is_cyclically_reduced()
        && !candidate.is_empty()
        && candidate.len() < relator.len()
        && relator.contains_contiguous(candidate);
    Ok(if applicable {
        SubwordVerdict::Nontrivial
    } else {
        SubwordVerdict::Inapplicable
    })
}

/// Diagonal of the Smith normal form of an integer matrix, in divisibility
/// order d₁ | d₂ | ⋯ (zeros trailing).
fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    let mut t = 0;
    while t < n {
        // Pivot: nonzero entry of least magnitude in the working submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut disturbed = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / m[t][t];
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    if m[i][t] != 0 {
                        // Remainder is strictly smaller: promote it.
                        m.swap(t, i);
                        disturbed = true;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / m[t][t];
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if m[t][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        disturbed = true;
                    }
                }
            }
            if disturbed {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % m[t][t] != 0 {
                        for jj in t..cols {
                            let add = m[i][jj];
                            m[t][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
