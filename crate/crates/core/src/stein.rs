//! Numerical bookkeeping for Stein handle diagrams: Thurston–Bennequin and
//! rotation numbers from cusp/writhe counts, the framing rule
//! `framing = tb − 1`, and assembly of the intersection form and Chern
//! pairings consumed by the lattice engine.
//!
//! Front-diagram combinatorics are deliberately out of scope; inputs are
//! the per-component count fields, shipped as data files. The classical
//! parity constraint `rotation ≡ tb + 1 (mod 2)` is exposed so loaders can
//! reject corrupt data.
//!
//! File format: JSON `{"components": [{"writhe", "right_cusps",
//! "left_cusps_down", "right_cusps_up", "framing"}, …], "linking": [[…]]}`
//! with an optional ignored `"description"` field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ChernVector, IntersectionForm};

/// Cusp and writhe counts of one oriented Legendrian front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianCounts {
    pub writhe: i64,
    pub right_cusps: u32,
    pub left_cusps_down: u32,
    pub right_cusps_up: u32,
}

impl LegendrianCounts {
    pub fn validate(&self) -> Result<()> {
        if self.right_cusps < self.right_cusps_up {
            return Err(Error::Format(format!(
                "right_cusps_up = {} exceeds right_cusps = {}",
                self.right_cusps_up, self.right_cusps
            )));
        }
        Ok(())
    }

    /// Thurston–Bennequin number: writhe minus the number of right cusps.
    pub fn tb(&self) -> i64 {
        self.writhe - self.right_cusps as i64
    }

    /// Rotation number: down-oriented left cusps minus up-oriented right
    /// cusps.
    pub fn rotation(&self) -> i64 {
        self.left_cusps_down as i64 - self.right_cusps_up as i64
    }

    /// Standard front parity: rotation ≡ tb + 1 (mod 2). A failure marks
    /// the counts as corrupt.
    pub fn front_parity_ok(&self) -> bool {
        (self.rotation() - self.tb() - 1).rem_euclid(2) == 0
    }
}

/// One 2-handle: Legendrian counts plus the declared framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HandleComponent {
    pub counts: LegendrianCounts,
    pub framing: i64,
}

/// A framed-link handle diagram with its linking matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinHandleDiagram {
    components: Vec<HandleComponent>,
    linking: IntersectionForm,
}

/// A single validation failure, naming the offending component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinViolation {
    /// The handle framing is not tb − 1.
    Framing {
        component: usize,
        framing: i64,
        tb: i64,
    },
    /// The linking-matrix diagonal disagrees with the declared framing.
    Diagonal {
        component: usize,
        framing: i64,
        diagonal: i64,
    },
}

impl std::fmt::Display for SteinViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SteinViolation::Framing {
                component,
                framing,
                tb,
            } => write!(
                f,
                "component {component}: framing {framing} is not tb − 1 = {}",
                tb - 1
            ),
            SteinViolation::Diagonal {
                component,
                framing,
                diagonal,
            } => write!(
                f,
                "component {component}: linking diagonal {diagonal} differs from framing {framing}"
            ),
        }
    }
}

/// Outcome of the framing-rule validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteinVerdict {
    SteinOk,
    Violations(Vec<SteinViolation>),
}

impl SteinHandleDiagram {
    pub fn new(components: Vec<HandleComponent>, linking: IntersectionForm) -> Result<Self> {
        if linking.rank() != components.len() {
            return Err(Error::RankMismatch {
                expected: components.len(),
                found: linking.rank(),
            });
        }
        for c in &components {
            c.counts.validate()?;
        }
        Ok(SteinHandleDiagram {
            components,
            linking,
        })
    }

    pub fn components(&self) -> &[HandleComponent] {
        &self.components
    }

    pub fn linking(&self) -> &IntersectionForm {
        &self.linking
    }

    /// Check `framing = tb − 1` and the diagonal/framing agreement for
    /// every component; list every offender.
    pub fn validate_stein(&self) -> SteinVerdict {
        let mut violations = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            let tb = c.counts.tb();
            if c.framing != tb - 1 {
                violations.push(SteinViolation::Framing {
                    component: i,
                    framing: c.framing,
                    tb,
                });
            }
            let diagonal = self.linking.entries()[i][i];
            if diagonal != c.framing {
                violations.push(SteinViolation::Diagonal {
                    component: i,
                    framing: c.framing,
                    diagonal,
                });
            }
        }
        if violations.is_empty() {
            SteinVerdict::SteinOk
        } else {
            SteinVerdict::Violations(violations)
        }
    }

    /// The intersection form (= linking matrix) and the Chern pairings
    /// (= rotation numbers). Requires the Stein validation to pass.
    pub fn to_lattice(&self) -> Result<(IntersectionForm, ChernVector)> {
        match self.validate_stein() {
            SteinVerdict::SteinOk => Ok((
                self.linking.clone(),
                ChernVector::new(self.components.iter().map(|c| c.counts.rotation()).collect()),
            )),
            SteinVerdict::Violations(v) => Err(Error::NotStein {
                reason: v
                    .iter()
                    .map(SteinViolation::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            }),
        }
    }

    /// Parity check across all components; loaders treat a failure as a
    /// corrupt input file.
    pub fn front_parity_ok(&self) -> bool {
        self.components.iter().all(|c| c.counts.front_parity_ok())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SteinFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let components = file
            .components
            .into_iter()
            .map(|c| HandleComponent {
                counts: LegendrianCounts {
                    writhe: c.writhe,
                    right_cusps: c.right_cusps,
                    left_cusps_down: c.left_cusps_down,
                    right_cusps_up: c.right_cusps_up,
                },
                framing: c.framing,
            })
            .collect();
        SteinHandleDiagram::new(components, IntersectionForm::new(file.linking)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SteinFile {
            description: None,
            components: self
                .components
                .iter()
                .map(|c| SteinFileComponent {
                    writhe: c.counts.writhe,
                    right_cusps: c.counts.right_cusps,
                    left_cusps_down: c.counts.left_cusps_down,
                    right_cusps_up: c.counts.right_cusps_up,
                    framing: c.framing,
                })
                .collect(),
            linking: self.linking.entries().to_vec(),
        })
        .expect("serializable")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct SteinFileComponent {
    writhe: i64,
    right_cusps: u32,
    left_cusps_down: u32,
    right_cusps_up: u32,
    framing: i64,
}

#[derive(Debug, Serialize, Deserialize)]
struct SteinFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    components: Vec<SteinFileComponent>,
    linking: Vec<Vec<i64>>,
}
