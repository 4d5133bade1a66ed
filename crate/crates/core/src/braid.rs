//! Words in the Artin braid group `B_n`.
//!
//! A word is a sequence of letters `σ_i^{±1}` with 1-based generator index
//! `i ≤ n−1`. The text interchange format is whitespace-separated nonzero
//! decimal integers, where the token `k` encodes `σ_{|k|}^{sign(k)}`;
//! `#` starts a comment running to end of line.
//!
//! Convention, fixed globally: in products the leftmost letter acts first,
//! so the closure permutation of `u·v` sends a strand first through `u`,
//! then through `v`. Component counts do not depend on this choice.

use crate::error::{Error, Result};

/// One letter `σ_index^{sign}` of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    index: usize,
    positive: bool,
}

impl BraidLetter {
    /// Letter with 1-based Artin index and sign. The index is validated
    /// against a strand count only when the letter enters a [`BraidWord`].
    pub fn new(index: usize, positive: bool) -> Result<Self> {
        if index == 0 {
            return Err(Error::MalformedToken {
                token: "0".to_owned(),
            });
        }
        Ok(BraidLetter { index, positive })
    }

    /// Decode a signed integer token: `k` means `σ_{|k|}^{sign(k)}`.
    pub fn from_signed(k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::MalformedToken {
                token: "0".to_owned(),
            });
        }
        Ok(BraidLetter {
            index: k.unsigned_abs() as usize,
            positive: k > 0,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        BraidLetter {
            index: self.index,
            positive: !self.positive,
        }
    }

    /// Signed-integer encoding used by the text format.
    pub fn to_signed(&self) -> i64 {
        self.sign() * self.index as i64
    }
}

/// A word in `B_n`: a strand count and an ordered letter sequence.
///
/// The empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// Build a word, checking every letter index against `strands`.
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount);
        }
        for l in &letters {
            if l.index() >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l.index(),
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Build from signed-integer letters.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&k| BraidLetter::from_signed(k))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    /// The identity braid in `B_n`.
    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// Parse the text format. With `strands = None` the count is inferred
    /// as `max |token| + 1` (1 for the empty word).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for raw_line in text.lines() {
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            for token in line.split_whitespace() {
                let k: i64 = token.parse().map_err(|_| Error::MalformedToken {
                    token: token.to_owned(),
                })?;
                letters.push(BraidLetter::from_signed(k)?);
            }
        }
        let strands = match strands {
            Some(n) => n,
            None => letters.iter().map(|l| l.index() + 1).max().unwrap_or(1),
        };
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed-integer encoding of the letters.
    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(BraidLetter::to_signed).collect()
    }

    /// Concatenation `self · other`; both words must live in the same `B_n`.
    pub fn concatenate(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::GroupMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Remove all adjacent `σ_i^{±1} σ_i^{∓1}` pairs. The result represents
    /// the same element of `B_n`.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(BraidLetter::inverse).collect(),
        }
    }

    /// Sum of letter signs; the image in the abelianization of `B_n`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(BraidLetter::sign).sum()
    }

    /// Image under `B_n → Sym(n)`, `σ_i ↦ (i, i+1)`, leftmost letter first.
    pub fn closure_permutation(&self) -> StrandPermutation {
        let mut perm = StrandPermutation::identity(self.strands);
        for l in &self.letters {
            perm = perm.then(&StrandPermutation::adjacent_transposition(
                self.strands,
                l.index(),
            ));
        }
        perm
    }

    /// Number of cycles of the closure permutation; fixed points count.
    /// This is the number of components of the closure link.
    pub fn closure_components(&self) -> usize {
        self.closure_permutation().cycle_count()
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.to_signed())?;
            first = false;
        }
        Ok(())
    }
}

/// Expand `i^k` power tokens into the fully expanded text format, e.g.
/// `"3^-2 1"` becomes `"-3 -3 1"`. Plain integer tokens pass through.
/// Comments are stripped. The word parser itself accepts only fully
/// expanded words; this pre-pass is the sanctioned shorthand.
pub fn expand_powers(text: &str) -> Result<String> {
    let mut out: Vec<String> = Vec::new();
    for raw_line in text.lines() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        for token in line.split_whitespace() {
            match token.split_once('^') {
                None => {
                    let k: i64 = token.parse().map_err(|_| Error::MalformedToken {
                        token: token.to_owned(),
                    })?;
                    if k == 0 {
                        return Err(Error::MalformedToken {
                            token: token.to_owned(),
                        });
                    }
                    out.push(k.to_string());
                }
                Some((base, exp)) => {
                    let i: i64 = base.parse().map_err(|_| Error::MalformedToken {
                        token: token.to_owned(),
                    })?;
                    let k: i64 = exp.parse().map_err(|_| Error::MalformedToken {
                        token: token.to_owned(),
                    })?;
                    if i <= 0 {
                        return Err(Error::MalformedToken {
                            token: token.to_owned(),
                        });
                    }
                    let letter = if k >= 0 { i } else { -i };
                    for _ in 0..k.unsigned_abs() {
                        out.push(letter.to_string());
                    }
                }
            }
        }
    }
    Ok(out.join(" "))
}

/// A permutation of the strand set `{1, …, n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    images: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        StrandPermutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; must be a bijection on `0..n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::NotAPermutation);
            }
            seen[im] = true;
        }
        Ok(StrandPermutation { images })
    }

    /// The transposition `(index, index+1)` with a 1-based `index`.
    pub fn adjacent_transposition(n: usize, index: usize) -> Self {
        debug_assert!(index >= 1 && index < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(index - 1, index);
        StrandPermutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of 0-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based image list, as in the external description.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// Composite "first `self`, then `other`".
    pub fn then(&self, other: &StrandPermutation) -> StrandPermutation {
        debug_assert_eq!(self.degree(), other.degree());
        StrandPermutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> StrandPermutation {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        StrandPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Cycles in 1-based labels, each rotated to start at its minimum,
    /// listed in increasing order of that minimum. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}
