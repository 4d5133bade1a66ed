//! Quasipositive factorizations and the topology of their braided surfaces.
//!
//! A factorization is an ordered product of bands `w σ_j w⁻¹` over `n`
//! strands. The associated positively braided surface is built from `n`
//! parallel disks with one positively twisted band per factor, so its Euler
//! characteristic is `n − #bands` and its boundary is the closure of the
//! expanded braid word. Genus is read off from the Euler characteristic,
//! boundary count, and the number of connected components of the
//! disk-and-band complex.
//!
//! File format: JSON `{"strands": n, "bands": [{"conjugator": "<braid-word
//! text>", "generator": j}, …]}`. An optional `"description"` field is
//! ignored so shipped files can document themselves.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

/// One band `conjugator · σ_generator · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPBand {
    conjugator: BraidWord,
    generator_index: usize,
}

impl QPBand {
    pub fn new(conjugator: BraidWord, generator_index: usize) -> Result<Self> {
        if generator_index == 0 || generator_index >= conjugator.strands() {
            return Err(Error::IndexOutOfRange {
                index: generator_index,
                strands: conjugator.strands(),
            });
        }
        Ok(QPBand {
            conjugator,
            generator_index,
        })
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn generator_index(&self) -> usize {
        self.generator_index
    }

    /// The band as a braid word `w σ_j w⁻¹` (not freely reduced).
    pub fn word(&self) -> BraidWord {
        let n = self.conjugator.strands();
        let mut letters = self.conjugator.letters().to_vec();
        letters.push(BraidLetter::new(self.generator_index, true).expect("index ≥ 1"));
        letters.extend(self.conjugator.inverse().letters().iter().copied());
        BraidWord::new(n, letters).expect("letters stay in range")
    }

    /// The pair of strands the band joins: the support of its permutation.
    fn joined_strands(&self) -> (usize, usize) {
        let p = self.word().closure_permutation();
        let moved: Vec<usize> = (0..p.degree()).filter(|&i| p.apply(i) != i).collect();
        debug_assert_eq!(moved.len(), 2, "a band permutes exactly two strands");
        (moved[0], moved[1])
    }
}

/// An ordered list of bands over a fixed strand count. Zero bands is legal
/// (n disjoint disks) and acts as the boundary-sum unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasipositiveFactorization {
    strands: usize,
    bands: Vec<QPBand>,
}

/// Topological type of the braided surface of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceType {
    #[serde(rename = "chi")]
    pub euler_characteristic: i64,
    #[serde(rename = "boundary")]
    pub boundary_components: usize,
    pub genus: i64,
}

impl QuasipositiveFactorization {
    pub fn new(strands: usize, bands: Vec<QPBand>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrandCount);
        }
        for b in &bands {
            if b.conjugator().strands() != strands {
                return Err(Error::GroupMismatch {
                    left: strands,
                    right: b.conjugator().strands(),
                });
            }
        }
        Ok(QuasipositiveFactorization { strands, bands })
    }

    /// n disks, no bands.
    pub fn trivial(strands: usize) -> Result<Self> {
        QuasipositiveFactorization::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[QPBand] {
        &self.bands
    }

    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    /// Concatenate all bands and freely reduce. The result has exponent
    /// sum equal to the band count.
    pub fn expand(&self) -> BraidWord {
        let mut letters: Vec<BraidLetter> = Vec::new();
        for band in &self.bands {
            letters.extend(band.word().letters().iter().copied());
        }
        BraidWord::new(self.strands, letters)
            .expect("band letters stay in range")
            .free_reduce()
    }

    /// Number of connected components of the disk-and-band complex.
    fn surface_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.strands).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let root = find(parent, parent[i]);
                parent[i] = root;
            }
            parent[i]
        }
        for band in &self.bands {
            let (a, b) = band.joined_strands();
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..self.strands)
            .filter(|&i| find(&mut parent, i) == i)
            .count()
    }

    /// Euler characteristic, boundary components, and genus of the braided
    /// surface: χ = strands − bands, the boundary is the braid closure,
    /// and 2·components − χ − boundary = 2·genus.
    pub fn surface_type(&self) -> SurfaceType {
        let chi = self.strands as i64 - self.bands.len() as i64;
        let boundary = self.expand().closure_components();
        let components = self.surface_components();
        let twice_genus = 2 * components as i64 - chi - boundary as i64;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "inconsistent surface data: χ={chi}, boundary={boundary}, components={components}"
        );
        SurfaceType {
            euler_characteristic: chi,
            boundary_components: boundary,
            genus: twice_genus / 2,
        }
    }

    /// New factorization with `band` first; χ drops by one.
    pub fn prepend_band(&self, band: QPBand) -> Result<Self> {
        if band.conjugator().strands() != self.strands {
            return Err(Error::GroupMismatch {
                left: self.strands,
                right: band.conjugator().strands(),
            });
        }
        let mut bands = Vec::with_capacity(self.bands.len() + 1);
        bands.push(band);
        bands.extend(self.bands.iter().cloned());
        QuasipositiveFactorization::new(self.strands, bands)
    }

    /// Boundary sum: stack `self` above `other` (indices of `other` shifted
    /// up by `self.strands`) and join with one positively half-twisted band
    /// between the adjacent disks.
    pub fn boundary_sum(&self, other: &QuasipositiveFactorization) -> Result<Self> {
        let total = self.strands + other.strands;
        let mut bands: Vec<QPBand> = Vec::with_capacity(self.bands.len() + other.bands.len() + 1);
        for band in &self.bands {
            let conj = BraidWord::new(total, band.conjugator().letters().to_vec())?;
            bands.push(QPBand::new(conj, band.generator_index())?);
        }
        for band in &other.bands {
            let shifted: Vec<i64> = band
                .conjugator()
                .to_signed()
                .iter()
                .map(|&k| k.signum() * (k.abs() + self.strands as i64))
                .collect();
            let conj = BraidWord::from_signed(total, &shifted)?;
            bands.push(QPBand::new(conj, band.generator_index() + self.strands)?);
        }
        bands.push(QPBand::new(BraidWord::identity(total)?, self.strands)?);
        QuasipositiveFactorization::new(total, bands)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: QpFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&QpFile::from(self)).expect("serializable")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct QpFileBand {
    conjugator: String,
    generator: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct QpFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    strands: usize,
    bands: Vec<QpFileBand>,
}

impl TryFrom<QpFile> for QuasipositiveFactorization {
    type Error = Error;

    fn try_from(file: QpFile) -> Result<Self> {
        let bands = file
            .bands
            .into_iter()
            .map(|b| {
                let conj = BraidWord::parse(&b.conjugator, Some(file.strands))?;
                QPBand::new(conj, b.generator)
            })
            .collect::<Result<Vec<_>>>()?;
        QuasipositiveFactorization::new(file.strands, bands)
    }
}

impl From<&QuasipositiveFactorization> for QpFile {
    fn from(f: &QuasipositiveFactorization) -> Self {
        QpFile {
            description: None,
            strands: f.strands(),
            bands: f
                .bands()
                .iter()
                .map(|b| QpFileBand {
                    conjugator: b.conjugator().to_string(),
                    generator: b.generator_index(),
                })
                .collect(),
        }
    }
}

fn band(strands: usize, conjugator: &[i64], generator: usize) -> QPBand {
    QPBand::new(
        BraidWord::from_signed(strands, conjugator).expect("valid catalog conjugator"),
        generator,
    )
    .expect("valid catalog band")
}

/// The built-in surface catalog.
///
/// - `"D"`, `"D'"`: the exotic pair of quasipositive disks in B₅. Their
///   expansions are the 5-strand words β and β′, which are equal in B₅
///   even though the factorizations differ.
/// - `"A"`, `"A'"`: the annuli obtained by prepending the bare band σ₂.
/// - `"A0"`: the accessory annulus, encoded on 3 strands as
///   (∅,σ₁), (∅,σ₂), (σ₂,σ₁) — a triply twisted band traded for an extra
///   disk plus two braided bands.
/// - `"T0"`: the accessory once-punctured torus on 4 strands: the two
///   original disks sit at strands 1 and 4, each multiply twisted band
///   contributes one inner disk and two braided bands around the central
///   band (σ₃σ₂, σ₁).
pub fn builtin_factorizations() -> BTreeMap<String, QuasipositiveFactorization> {
    let w: &[i64] = &[3, -4, -1, -3, -3, -2, -1, -3];
    let with_w = |tail: &[i64]| -> Vec<i64> {
        let mut v = w.to_vec();
        v.extend_from_slice(tail);
        v
    };

    let disk = QuasipositiveFactorization::new(
        5,
        vec![
            band(5, &[2], 3),
            band(5, &[-1, -1, 2, 3, 4, 4, -3], 2),
            band(5, &[-3, 2], 1),
            band(5, &[-4], 3),
        ],
    )
    .expect("catalog D");

    let disk_prime = QuasipositiveFactorization::new(
        5,
        vec![
            band(5, &[], 2),
            band(5, &with_w(&[-2]), 1),
            band(5, &with_w(&[-2, 3, 1]), 2),
            band(5, &with_w(&[3, 3]), 4),
        ],
    )
    .expect("catalog D'");

    let annulus = disk.prepend_band(band(5, &[], 2)).expect("catalog A");
    let annulus_prime = disk_prime.prepend_band(band(5, &[], 2)).expect("catalog A'");

    let accessory_annulus = QuasipositiveFactorization::new(
        3,
        vec![band(3, &[], 1), band(3, &[], 2), band(3, &[2], 1)],
    )
    .expect("catalog A0");

    let accessory_torus = QuasipositiveFactorization::new(
        4,
        vec![
            band(4, &[], 1),
            band(4, &[3], 2),
            band(4, &[3, 2], 1),
            band(4, &[2], 1),
            band(4, &[], 3),
        ],
    )
    .expect("catalog T0");

    let mut catalog = BTreeMap::new();
    catalog.insert("D".to_owned(), disk);
    catalog.insert("D'".to_owned(), disk_prime);
    catalog.insert("A".to_owned(), annulus);
    catalog.insert("A'".to_owned(), annulus_prime);
    catalog.insert("A0".to_owned(), accessory_annulus);
    catalog.insert("T0".to_owned(), accessory_torus);
    catalog
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::words_equal;
    use crate::testwords::{beta_prime, BETA};

    #[test]
    fn single_band_expands_to_its_generator() {
        let f =
            QuasipositiveFactorization::new(2, vec![band(2, &[], 1)]).unwrap();
        assert_eq!(f.expand().to_signed(), vec![1]);
    }

    #[test]
    fn disk_factorization_expands_to_beta_letterwise() {
        let catalog = builtin_factorizations();
        let beta = BraidWord::from_signed(5, &BETA).unwrap();
        assert_eq!(catalog["D"].expand(), beta);
    }

    #[test]
    fn disk_prime_factorization_expands_to_beta_prime() {
        let catalog = builtin_factorizations();
        let beta_p = BraidWord::from_signed(5, &beta_prime()).unwrap();
        assert!(words_equal(&catalog["D'"].expand(), &beta_p).unwrap());
        // The conjugator cancellations w⁻¹·w collapse under free reduction,
        // so the expansion matches the reduced transcription letterwise.
        assert_eq!(catalog["D'"].expand(), beta_p.free_reduce());
    }

    #[test]
    fn expansions_of_the_disk_pair_are_equal_in_b5() {
        let catalog = builtin_factorizations();
        assert!(words_equal(&catalog["D"].expand(), &catalog["D'"].expand()).unwrap());
    }

    #[test]
    fn exponent_sum_counts_bands() {
        let catalog = builtin_factorizations();
        for f in catalog.values() {
            assert_eq!(f.expand().exponent_sum(), f.band_count() as i64);
        }
    }

    #[test]
    fn surface_types_of_the_catalog() {
        let catalog = builtin_factorizations();
        let expect = |name: &str, chi: i64, boundary: usize, genus: i64| {
            let t = catalog[name].surface_type();
            assert_eq!(
                (t.euler_characteristic, t.boundary_components, t.genus),
                (chi, boundary, genus),
                "surface type of {name}"
            );
        };
        expect("D", 1, 1, 0);
        expect("D'", 1, 1, 0);
        expect("A", 0, 2, 0);
        expect("A'", 0, 2, 0);
        expect("A0", 0, 2, 0);
        expect("T0", -1, 1, 1);
    }

    #[test]
    fn trivial_factorization_is_n_disks() {
        let f = QuasipositiveFactorization::trivial(3).unwrap();
        let t = f.surface_type();
        assert_eq!(
            (t.euler_characteristic, t.boundary_components, t.genus),
            (3, 3, 0)
        );
    }

    #[test]
    fn prepend_band_drops_chi_by_one() {
        let catalog = builtin_factorizations();
        let annulus = catalog["D"].prepend_band(band(5, &[], 2)).unwrap();
        assert_eq!(annulus, catalog["A"]);
        assert_eq!(
            annulus.surface_type().euler_characteristic,
            catalog["D"].surface_type().euler_characteristic - 1
        );
        let single = QuasipositiveFactorization::trivial(2)
            .unwrap()
            .prepend_band(band(2, &[], 1))
            .unwrap();
        assert_eq!(single.band_count(), 1);
    }

    #[test]
    fn prepend_band_rejects_mismatched_strands() {
        let catalog = builtin_factorizations();
        assert_eq!(
            catalog["D"].prepend_band(band(4, &[], 2)),
            Err(Error::GroupMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn boundary_sum_of_two_disks_is_a_disk() {
        let d1 = QuasipositiveFactorization::trivial(1).unwrap();
        let sum = d1.boundary_sum(&d1).unwrap();
        assert_eq!(sum.strands(), 2);
        assert_eq!(sum.band_count(), 1);
        assert_eq!(sum.expand().to_signed(), vec![1]);
        let t = sum.surface_type();
        assert_eq!(
            (t.euler_characteristic, t.boundary_components, t.genus),
            (1, 1, 0)
        );
    }

    #[test]
    fn boundary_sum_of_annulus_and_accessory_annulus_is_planar() {
        let catalog = builtin_factorizations();
        let sum = catalog["A"].boundary_sum(&catalog["A0"]).unwrap();
        let t = sum.surface_type();
        assert_eq!(
            (t.euler_characteristic, t.boundary_components, t.genus),
            (-1, 3, 0)
        );
    }

    #[test]
    fn boundary_sum_arithmetic_and_genus_additivity() {
        let catalog = builtin_factorizations();
        let pairs = [("A", "A0"), ("T0", "A0"), ("D", "T0"), ("A'", "T0")];
        for (x, y) in pairs {
            let (f, g) = (&catalog[x], &catalog[y]);
            let sum = f.boundary_sum(g).unwrap();
            let (tf, tg, ts) = (f.surface_type(), g.surface_type(), sum.surface_type());
            assert_eq!(
                ts.euler_characteristic,
                tf.euler_characteristic + tg.euler_characteristic - 1
            );
            assert_eq!(
                ts.boundary_components,
                tf.boundary_components + tg.boundary_components - 1
            );
            assert_eq!(ts.genus, tf.genus + tg.genus);
        }
    }

    #[test]
    fn boundary_sum_surface_type_is_associative() {
        let catalog = builtin_factorizations();
        for (x, y, z) in [("A", "A0", "T0"), ("D", "A", "A0"), ("T0", "T0", "A")] {
            let (f, g, h) = (&catalog[x], &catalog[y], &catalog[z]);
            let left = f.boundary_sum(g).unwrap().boundary_sum(h).unwrap();
            let right = f.boundary_sum(&g.boundary_sum(h).unwrap()).unwrap();
            assert_eq!(left.surface_type(), right.surface_type());
        }
    }

    #[test]
    fn json_round_trip() {
        let catalog = builtin_factorizations();
        for f in catalog.values() {
            let text = f.to_json();
            assert_eq!(&QuasipositiveFactorization::from_json(&text).unwrap(), f);
        }
        let with_description = r#"{
            "description": "two disks, one band",
            "strands": 2,
            "bands": [{"conjugator": "", "generator": 1}]
        }"#;
        let f = QuasipositiveFactorization::from_json(with_description).unwrap();
        assert_eq!(f.expand().to_signed(), vec![1]);
    }

    #[test]
    fn json_rejects_out_of_range_generator() {
        let bad = r#"{"strands": 3, "bands": [{"conjugator": "", "generator": 3}]}"#;
        assert!(QuasipositiveFactorization::from_json(bad).is_err());
    }
}
