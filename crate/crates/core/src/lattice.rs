//! Exact integer quadratic forms: negative-definite intersection forms,
//! complete enumeration of classes of a prescribed square, pairing against
//! a first-Chern vector, and the adjunction-inequality obstruction to
//! spheres of that square.
//!
//! Everything on a decision path is integer or rational. Definiteness is
//! decided by exact signs of leading principal minors; enumeration is an
//! ellipsoid descent over the exact rational Cholesky decomposition of
//! `−Q`, so completeness is a theorem rather than a numerical hope.
//!
//! File format: JSON `{"matrix": [[…]], "c1": […]}` with an optional
//! ignored `"description"` field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symmetric integer matrix, the intersection pairing on `H₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    entries: Vec<Vec<i64>>,
}

/// The vector of pairings `⟨c₁, hᵢ⟩` against the handle basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernVector {
    pairings: Vec<i64>,
}

/// Integer coordinates of a second-homology class in the handle basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomologyClass {
    coefficients: Vec<i64>,
}

impl IntersectionForm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let r = entries.len();
        if entries.iter().any(|row| row.len() != r) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..r {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(IntersectionForm { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Exact Sylvester test: `Q` is negative definite iff every leading
    /// principal minor of `−Q` is positive.
    pub fn is_negative_definite(&self) -> bool {
        let r = self.rank();
        (1..=r).all(|k| leading_minor_of_negation(&self.entries, k) > BigInt::zero())
    }
}

impl ChernVector {
    pub fn new(pairings: Vec<i64>) -> Self {
        ChernVector { pairings }
    }

    pub fn len(&self) -> usize {
        self.pairings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairings.is_empty()
    }

    pub fn pairings(&self) -> &[i64] {
        &self.pairings
    }

    /// `⟨c₁, v⟩`.
    pub fn pair(&self, v: &HomologyClass) -> Result<i64> {
        if self.len() != v.rank() {
            return Err(Error::RankMismatch {
                expected: self.len(),
                found: v.rank(),
            });
        }
        let sum: i128 = self
            .pairings
            .iter()
            .zip(v.coefficients())
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        i64::try_from(sum).map_err(|_| Error::Overflow)
    }
}

impl HomologyClass {
    pub fn new(coefficients: Vec<i64>) -> Self {
        HomologyClass { coefficients }
    }

    pub fn rank(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

/// Block-diagonal sum of forms with concatenated Chern vectors.
pub fn direct_sum(
    forms: &[IntersectionForm],
    cherns: &[ChernVector],
) -> Result<(IntersectionForm, ChernVector)> {
    if forms.len() != cherns.len() {
        return Err(Error::RankMismatch {
            expected: forms.len(),
            found: cherns.len(),
        });
    }
    for (f, c) in forms.iter().zip(cherns) {
        if f.rank() != c.len() {
            return Err(Error::RankMismatch {
                expected: f.rank(),
                found: c.len(),
            });
        }
    }
    let total: usize = forms.iter().map(IntersectionForm::rank).sum();
    let mut entries = vec![vec![0i64; total]; total];
    let mut offset = 0;
    for f in forms {
        for i in 0..f.rank() {
            for j in 0..f.rank() {
                entries[offset + i][offset + j] = f.entries()[i][j];
            }
        }
        offset += f.rank();
    }
    let pairings = cherns.iter().flat_map(|c| c.pairings().iter().copied()).collect();
    Ok((IntersectionForm { entries }, ChernVector::new(pairings)))
}

/// `vᵀ Q v`, exactly.
pub fn evaluate(q: &IntersectionForm, v: &HomologyClass) -> Result<i64> {
    if q.rank() != v.rank() {
        return Err(Error::RankMismatch {
            expected: q.rank(),
            found: v.rank(),
        });
    }
    let mut sum: i128 = 0;
    for (i, row) in q.entries().iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            sum += v.coefficients[i] as i128 * e as i128 * v.coefficients[j] as i128;
        }
    }
    i64::try_from(sum).map_err(|_| Error::Overflow)
}

/// All classes `v` with `vᵀQv = square`, one representative per `±` pair
/// (first nonzero coefficient positive), sorted lexicographically. The
/// enumeration is complete: the ellipsoid descent visits every integer
/// point the rational Cholesky bound allows.
pub fn classes_of_square(q: &IntersectionForm, square: i64) -> Result<Vec<HomologyClass>> {
    if !q.is_negative_definite() {
        return Err(Error::NotNegativeDefinite);
    }
    if square >= 0 {
        return Err(Error::NonNegativeSquare { square });
    }
    let r = q.rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    let (d, u) = rational_cholesky_of_negation(&q.entries).expect("negative definite checked");
    let goal = BigRational::from_integer(BigInt::from(-square));

    let mut coords = vec![BigInt::zero(); r];
    let mut found: Vec<Vec<BigInt>> = Vec::new();
    descend(r - 1, &goal, &d, &u, &mut coords, &mut found);

    let mut classes: Vec<HomologyClass> = found
        .into_iter()
        .map(|v| {
            v.into_iter()
                .map(|c| i64::try_from(&c).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|v| v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .map(HomologyClass::new)
        .collect();
    classes.sort();
    for v in &classes {
        debug_assert_eq!(evaluate(q, v), Ok(square));
    }
    Ok(classes)
}

/// Verdict of the adjunction inequality for one class and genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjunctionVerdict {
    Satisfied,
    Violated,
}

/// The bound `v·v + |⟨c₁, v⟩| ≤ 2·genus − 2` for a nontrivial class in a
/// Stein domain. `Violated` means no embedded surface of that genus can
/// represent the class.
pub fn adjunction_bound(
    q: &IntersectionForm,
    c1: &ChernVector,
    v: &HomologyClass,
    genus: i64,
) -> Result<AdjunctionVerdict> {
    if genus < 0 {
        return Err(Error::NegativeGenus { genus });
    }
    if v.is_zero() {
        return Err(Error::ZeroClass);
    }
    let square = evaluate(q, v)?;
    let pairing = c1.pair(v)?;
    Ok(if square + pairing.abs() <= 2 * genus - 2 {
        AdjunctionVerdict::Satisfied
    } else {
        AdjunctionVerdict::Violated
    })
}

/// One enumerated class with its pairing and whether a sphere (genus 0,
/// or the requested genus) would satisfy the adjunction bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssessment {
    pub class: HomologyClass,
    pub c1_pairing: i64,
    pub adjunction_satisfiable_for_sphere: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionVerdict {
    /// Every class of the requested square fails the bound: no embedded
    /// sphere (surface of the requested genus) realizes that square.
    NoSphereInClassList,
    /// Some class passes the bound; nothing is claimed either way.
    ObstructionInconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereObstructionReport {
    pub square: i64,
    pub genus: i64,
    pub classes: Vec<ClassAssessment>,
    pub verdict: ObstructionVerdict,
}

/// Enumerate all classes of the given square and apply the adjunction
/// bound at the given genus to each.
pub fn obstruction_report(
    q: &IntersectionForm,
    c1: &ChernVector,
    square: i64,
    genus: i64,
) -> Result<SphereObstructionReport> {
    if c1.len() != q.rank() {
        return Err(Error::RankMismatch {
            expected: q.rank(),
            found: c1.len(),
        });
    }
    let classes = classes_of_square(q, square)?
        .into_iter()
        .map(|class| {
            let pairing = c1.pair(&class)?;
            let satisfiable =
                adjunction_bound(q, c1, &class, genus)? == AdjunctionVerdict::Satisfied;
            Ok(ClassAssessment {
                class,
                c1_pairing: pairing,
                adjunction_satisfiable_for_sphere: satisfiable,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = if classes.iter().all(|c| !c.adjunction_satisfiable_for_sphere) {
        ObstructionVerdict::NoSphereInClassList
    } else {
        ObstructionVerdict::ObstructionInconclusive
    };
    Ok(SphereObstructionReport {
        square,
        genus,
        classes,
        verdict,
    })
}

/// Genus-zero case: the sphere obstruction.
pub fn sphere_obstruction_report(
    q: &IntersectionForm,
    c1: &ChernVector,
    square: i64,
) -> Result<SphereObstructionReport> {
    obstruction_report(q, c1, square, 0)
}

#[derive(Debug, Serialize, Deserialize)]
struct LatticeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    matrix: Vec<Vec<i64>>,
    c1: Vec<i64>,
}

/// Read `{"matrix": [[…]], "c1": […]}`.
pub fn read_lattice_json(text: &str) -> Result<(IntersectionForm, ChernVector)> {
    let file: LatticeFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let form = IntersectionForm::new(file.matrix)?;
    if file.c1.len() != form.rank() {
        return Err(Error::RankMismatch {
            expected: form.rank(),
            found: file.c1.len(),
        });
    }
    Ok((form, ChernVector::new(file.c1)))
}

pub fn write_lattice_json(q: &IntersectionForm, c1: &ChernVector) -> String {
    serde_json::to_string_pretty(&LatticeFile {
        description: None,
        matrix: q.entries().to_vec(),
        c1: c1.pairings().to_vec(),
    })
    .expect("serializable")
}

/// Leading k×k minor of `−Q` by fraction-free Bareiss elimination.
fn leading_minor_of_negation(entries: &[Vec<i64>], k: usize) -> BigInt {
    let mut a: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| BigInt::from(-entries[i][j])).collect())
        .collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&i| !a[i][col].is_zero()) {
            Some(row) => row,
            None => return BigInt::zero(),
        };
        if pivot_row != col {
            a.swap(col, pivot_row);
            sign = -sign;
        }
        for i in col + 1..k {
            for j in col + 1..k {
                let num = &a[i][j] * &a[col][col] - &a[i][col] * &a[col][j];
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    a[k - 1][k - 1].clone() * BigInt::from(sign)
}

/// Exact rational Cholesky of `P = −Q`: positive pivots `d` and an upper
/// unitriangular `u` with `vᵀPv = Σᵢ dᵢ (vᵢ + Σ_{j>i} uᵢⱼ vⱼ)²`.
/// Returns `None` when some pivot fails to be positive.
#[allow(clippy::type_complexity)]
fn rational_cholesky_of_negation(
    entries: &[Vec<i64>],
) -> Option<(Vec<BigRational>, Vec<Vec<BigRational>>)> {
    let r = entries.len();
    let zero = BigRational::zero();
    let mut d = vec![zero.clone(); r];
    let mut u = vec![vec![zero.clone(); r]; r];
    for i in 0..r {
        let mut pivot = BigRational::from_integer(BigInt::from(-entries[i][i]));
        for k in 0..i {
            pivot -= &d[k] * &u[k][i] * &u[k][i];
        }
        if !pivot.is_positive() {
            return None;
        }
        for j in i + 1..r {
            let mut val = BigRational::from_integer(BigInt::from(-entries[i][j]));
            for k in 0..i {
                val -= &d[k] * &u[k][i] * &u[k][j];
            }
            u[i][j] = val / &pivot;
        }
        d[i] = pivot;
    }
    Some((d, u))
}

/// Depth-first scan of level `level` (levels run from r−1 down to 0).
/// `remaining` is the exact budget left for levels ≤ `level`; a vector is
/// accepted when the budget is spent exactly.
fn descend(
    level: usize,
    remaining: &BigRational,
    d: &[BigRational],
    u: &[Vec<BigRational>],
    coords: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    let r = coords.len();
    let mut center = BigRational::zero();
    for j in level + 1..r {
        center -= &u[level][j] * BigRational::from_integer(coords[j].clone());
    }
    let base = center.floor().to_integer();
    let cost = |k: &BigInt| -> BigRational {
        let diff = BigRational::from_integer(k.clone()) - &center;
        &d[level] * &diff * &diff
    };
    for direction in [-1i64, 1] {
        let mut k = if direction < 0 {
            base.clone()
        } else {
            &base + 1
        };
        loop {
            let c = cost(&k);
            if &c > remaining {
                break;
            }
            coords[level] = k.clone();
            let next = remaining - &c;
            if level == 0 {
                if next.is_zero() {
                    out.push(coords.clone());
                }
            } else {
                descend(level - 1, &next, d, u, coords, out);
            }
            k += direction;
        }
    }
    coords[level] = BigInt::zero();
}
