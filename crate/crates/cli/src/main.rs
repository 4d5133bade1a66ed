//! `quasipos`: braid-word equality and normal forms, quasipositive
//! factorization surfaces, presentation certificates, Stein handle
//! validation, and the definite-lattice sphere obstruction.
//!
//! JSON goes to stdout (parse that), a human summary goes to stderr.
//! `qp-sum` and `stein-check` print bare artifact JSON in the same file
//! formats the commands consume, so they can be piped onward.

mod report;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

use quasipos_core::braid::BraidWord;
use quasipos_core::canonical::{canonical_form, words_equal};
use quasipos_core::lattice::{
    classes_of_square, obstruction_report, read_lattice_json, write_lattice_json,
    ObstructionVerdict, SphereObstructionReport,
};
use quasipos_core::presentation::{CyclicVerdict, GroupPresentation, GroupWord, SubwordVerdict};
use quasipos_core::qp::QuasipositiveFactorization;
use quasipos_core::stein::{SteinHandleDiagram, SteinVerdict};

use report::{digest_bytes, InputDigest, RunReport};

#[derive(Parser)]
#[command(name = "quasipos", version, about = "Exact braid, surface, and lattice verification")]
struct Cli {
    /// Suppress the human summary on stderr (stdout JSON is unchanged).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two braid words are equal in B_n.
    Equal {
        file_u: PathBuf,
        file_v: PathBuf,
        /// Strand count for both words (default: inferred per file).
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Left-greedy normal form of a braid word.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Expand a quasipositive factorization to a braid word.
    QpExpand { file: PathBuf },
    /// Euler characteristic, boundary components, and genus of the
    /// braided surface of a factorization.
    QpSurface { file: PathBuf },
    /// Boundary sum of two factorizations; prints factorization JSON.
    QpSum { file_f: PathBuf, file_g: PathBuf },
    /// Simplify a presentation and try to certify it infinite cyclic.
    Pi1Simplify {
        file: PathBuf,
        /// Maximum number of generator eliminations.
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Abelian invariants (Smith normal form) of a presentation.
    Abelianize { file: PathBuf },
    /// Proper-subword nontriviality check in a two-generator one-relator
    /// presentation.
    SubwordCheck {
        file: PathBuf,
        /// Candidate word as signed generator ids, e.g. "1 2".
        #[arg(long)]
        candidate: String,
    },
    /// Enumerate homology classes of a given square in a lattice file.
    LatticeClasses {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        square: i64,
    },
    /// Adjunction-inequality obstruction on a lattice file.
    LatticeSphereCheck {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        square: i64,
        /// Genus of the would-be representing surface (0 = sphere).
        #[arg(long, default_value_t = 0)]
        genus: i64,
    },
    /// Validate a Stein handle diagram; prints its (Q, c1) lattice JSON.
    SteinCheck { file: PathBuf },
    /// Pipeline: Stein diagram → lattice → sphere obstruction.
    NoSphere {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        square: i64,
        #[arg(long, default_value_t = 0)]
        genus: i64,
    },
}

/// What a command wants printed and returned.
struct Outcome {
    stdout: String,
    summary: String,
    exit_code: i32,
}

/// Any input problem: unreadable file, parse failure, precondition.
struct Failure {
    inputs: Vec<InputDigest>,
    message: String,
}

fn main() {
    let cli = Cli::parse();
    let command_name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.stdout);
            if !cli.json {
                eprintln!("{}", outcome.summary);
            }
            std::process::exit(outcome.exit_code);
        }
        Err(failure) => {
            let report = RunReport {
                command: command_name,
                inputs: failure.inputs,
                verdict: "error".to_owned(),
                details: json!({ "message": failure.message }),
                exit_code: 2,
            };
            println!("{}", report.to_json());
            if !cli.json {
                eprintln!("error: {}", failure.message);
            }
            std::process::exit(2);
        }
    }
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Equal { .. } => "equal",
        Command::Normalize { .. } => "normalize",
        Command::QpExpand { .. } => "qp-expand",
        Command::QpSurface { .. } => "qp-surface",
        Command::QpSum { .. } => "qp-sum",
        Command::Pi1Simplify { .. } => "pi1-simplify",
        Command::Abelianize { .. } => "abelianize",
        Command::SubwordCheck { .. } => "subword-check",
        Command::LatticeClasses { .. } => "lattice-classes",
        Command::LatticeSphereCheck { .. } => "lattice-sphere-check",
        Command::SteinCheck { .. } => "stein-check",
        Command::NoSphere { .. } => "no-sphere",
    }
    .to_owned()
}

/// Read a file, recording its digest for the report even on later errors.
fn read_input(path: &Path, inputs: &mut Vec<InputDigest>) -> Result<String, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure {
        inputs: inputs.clone(),
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    inputs.push(digest_bytes(path, &bytes));
    String::from_utf8(bytes).map_err(|_| Failure {
        inputs: inputs.clone(),
        message: format!("{} is not valid UTF-8", path.display()),
    })
}

fn fail(inputs: &[InputDigest], message: impl std::fmt::Display) -> Failure {
    Failure {
        inputs: inputs.to_vec(),
        message: message.to_string(),
    }
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    let name = command_name(command);
    let mut inputs: Vec<InputDigest> = Vec::new();
    match command {
        Command::Equal {
            file_u,
            file_v,
            strands,
        } => {
            let u = BraidWord::parse(&read_input(file_u, &mut inputs)?, *strands)
                .map_err(|e| fail(&inputs, e))?;
            let v = BraidWord::parse(&read_input(file_v, &mut inputs)?, *strands)
                .map_err(|e| fail(&inputs, e))?;
            let equal = words_equal(&u, &v).map_err(|e| fail(&inputs, e))?;
            let perms_equal = u.closure_permutation() == v.closure_permutation();
            let report = RunReport {
                command: name,
                inputs,
                verdict: if equal { "equal" } else { "not-equal" }.to_owned(),
                details: json!({
                    "strands": u.strands(),
                    "lengths": [u.len(), v.len()],
                    "exponent_sums": [u.exponent_sum(), v.exponent_sum()],
                    "closure_permutations_equal": perms_equal,
                }),
                exit_code: if equal { 0 } else { 1 },
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "the words are {} in B_{}",
                    if equal { "equal" } else { "not equal" },
                    u.strands()
                ),
                exit_code: report.exit_code,
            })
        }

        Command::Normalize { file, strands } => {
            let w = BraidWord::parse(&read_input(file, &mut inputs)?, *strands)
                .map_err(|e| fail(&inputs, e))?;
            let c = canonical_form(&w);
            let factors: Vec<Vec<usize>> = c
                .factors()
                .iter()
                .map(|f| f.permutation().one_based_images())
                .collect();
            let word = c.to_word();
            let report = RunReport {
                command: name,
                inputs,
                verdict: "normalized".to_owned(),
                details: json!({
                    "strands": c.strands(),
                    "delta_power": c.delta_power(),
                    "factor_count": factors.len(),
                    "factors": factors,
                    "word": word.to_string(),
                }),
                exit_code: 0,
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "normal form: delta power {}, {} factor(s)",
                    c.delta_power(),
                    c.factors().len()
                ),
                exit_code: 0,
            })
        }

        Command::QpExpand { file } => {
            let f = QuasipositiveFactorization::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let word = f.expand();
            let report = RunReport {
                command: name,
                inputs,
                verdict: "expanded".to_owned(),
                details: json!({
                    "strands": f.strands(),
                    "bands": f.band_count(),
                    "exponent_sum": word.exponent_sum(),
                    "word": word.to_string(),
                }),
                exit_code: 0,
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "expanded {} band(s) on {} strands to a {}-letter word",
                    f.band_count(),
                    f.strands(),
                    word.len()
                ),
                exit_code: 0,
            })
        }

        Command::QpSurface { file } => {
            let f = QuasipositiveFactorization::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let t = f.surface_type();
            let report = RunReport {
                command: name,
                inputs,
                verdict: "computed".to_owned(),
                details: serde_json::to_value(t).expect("surface type serializes"),
                exit_code: 0,
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "chi = {}, boundary components = {}, genus = {}",
                    t.euler_characteristic, t.boundary_components, t.genus
                ),
                exit_code: 0,
            })
        }

        Command::QpSum { file_f, file_g } => {
            let f = QuasipositiveFactorization::from_json(&read_input(file_f, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let g = QuasipositiveFactorization::from_json(&read_input(file_g, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let sum = f.boundary_sum(&g).map_err(|e| fail(&inputs, e))?;
            let t = sum.surface_type();
            Ok(Outcome {
                stdout: sum.to_json(),
                summary: format!(
                    "boundary sum: {} strands, {} band(s); chi = {}, boundary = {}, genus = {}",
                    sum.strands(),
                    sum.band_count(),
                    t.euler_characteristic,
                    t.boundary_components,
                    t.genus
                ),
                exit_code: 0,
            })
        }

        Command::Pi1Simplify { file, budget } => {
            let p = GroupPresentation::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let ab = p.abelianization();
            let outcome = p.tietze_simplify(*budget);
            let verdict = match p.infinite_cyclic_certificate(*budget) {
                CyclicVerdict::CertifiedZ => "certified_Z",
                CyclicVerdict::NotZ => "not_Z",
                CyclicVerdict::Inconclusive => "inconclusive",
            };
            let relators: Vec<Vec<i64>> = outcome
                .presentation
                .relators()
                .iter()
                .map(|r| r.letters().to_vec())
                .collect();
            let report = RunReport {
                command: name,
                inputs,
                verdict: verdict.to_owned(),
                details: json!({
                    "budget": budget,
                    "steps_used": outcome.steps_used,
                    "completed": outcome.completed,
                    "generators": outcome.presentation.generator_count(),
                    "relators": relators,
                    "abelianization": {
                        "free_rank": ab.free_rank,
                        "torsion": ab.torsion,
                    },
                }),
                exit_code: if verdict == "certified_Z" { 0 } else { 1 },
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "verdict {verdict}: simplified to {} generator(s), {} relator(s)",
                    outcome.presentation.generator_count(),
                    outcome.presentation.relators().len()
                ),
                exit_code: if verdict == "certified_Z" { 0 } else { 1 },
            })
        }

        Command::Abelianize { file } => {
            let p = GroupPresentation::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let ab = p.abelianization();
            let report = RunReport {
                command: name,
                inputs,
                verdict: "computed".to_owned(),
                details: json!({
                    "free_rank": ab.free_rank,
                    "torsion": ab.torsion,
                }),
                exit_code: 0,
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "abelianization: free rank {}, torsion {:?}",
                    ab.free_rank, ab.torsion
                ),
                exit_code: 0,
            })
        }

        Command::SubwordCheck { file, candidate } => {
            let p = GroupPresentation::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            if p.generator_count() != 2 || p.relators().len() != 1 {
                return Err(fail(
                    &inputs,
                    format!(
                        "subword-check needs a two-generator one-relator presentation, got {} generators and {} relators",
                        p.generator_count(),
                        p.relators().len()
                    ),
                ));
            }
            let relator = p.relators()[0].clone();
            let letters = candidate
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| fail(&inputs, format!("malformed candidate token {t:?}")))
                })
                .collect::<Result<Vec<i64>, Failure>>()?;
            let candidate_word = GroupWord::new(letters).map_err(|e| fail(&inputs, e))?;
            let verdict = quasipos_core::presentation::weinbaum_subword_test(
                &relator,
                &candidate_word,
            )
            .map_err(|e| fail(&inputs, e))?;
            let nontrivial = verdict == SubwordVerdict::Nontrivial;
            let report = RunReport {
                command: name,
                inputs,
                verdict: if nontrivial { "nontrivial" } else { "inapplicable" }.to_owned(),
                details: json!({
                    "relator": relator.letters(),
                    "relator_cyclically_reduced": relator.is_cyclically_reduced(),
                    "candidate": candidate_word.letters(),
                }),
                exit_code: if nontrivial { 0 } else { 1 },
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: if nontrivial {
                    "the candidate is a proper subword of the cyclically reduced relator, hence nontrivial".to_owned()
                } else {
                    "the subword test does not apply".to_owned()
                },
                exit_code: if nontrivial { 0 } else { 1 },
            })
        }

        Command::LatticeClasses { file, square } => {
            let (q, _c1) = read_lattice_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let classes = classes_of_square(&q, *square).map_err(|e| fail(&inputs, e))?;
            let coeffs: Vec<Vec<i64>> =
                classes.iter().map(|c| c.coefficients().to_vec()).collect();
            let report = RunReport {
                command: name,
                inputs,
                verdict: "enumerated".to_owned(),
                details: json!({
                    "square": square,
                    "rank": q.rank(),
                    "count": coeffs.len(),
                    "classes": coeffs,
                }),
                exit_code: 0,
            };
            Ok(Outcome {
                stdout: report.to_json(),
                summary: format!(
                    "{} class(es) of square {square} up to sign",
                    classes.len()
                ),
                exit_code: 0,
            })
        }

        Command::LatticeSphereCheck {
            file,
            square,
            genus,
        } => {
            let (q, c1) = read_lattice_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            let r = obstruction_report(&q, &c1, *square, *genus).map_err(|e| fail(&inputs, e))?;
            obstruction_outcome(name, inputs, &r, None)
        }

        Command::SteinCheck { file } => {
            let d = SteinHandleDiagram::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            if !d.front_parity_ok() {
                return Err(fail(
                    &inputs,
                    "corrupt data: some component violates rotation ≡ tb + 1 (mod 2)",
                ));
            }
            match d.validate_stein() {
                SteinVerdict::SteinOk => {
                    let (q, c1) = d.to_lattice().map_err(|e| fail(&inputs, e))?;
                    let tbs: Vec<i64> = d.components().iter().map(|c| c.counts.tb()).collect();
                    let rotations: Vec<i64> =
                        d.components().iter().map(|c| c.counts.rotation()).collect();
                    Ok(Outcome {
                        stdout: write_lattice_json(&q, &c1),
                        summary: format!(
                            "stein_ok: tb = {tbs:?}, rotation = {rotations:?}; framing = tb − 1 on every component"
                        ),
                        exit_code: 0,
                    })
                }
                SteinVerdict::Violations(v) => {
                    let messages: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    let report = RunReport {
                        command: name,
                        inputs,
                        verdict: "violations".to_owned(),
                        details: json!({ "violations": messages }),
                        exit_code: 1,
                    };
                    Ok(Outcome {
                        stdout: report.to_json(),
                        summary: format!("not Stein: {}", messages.join("; ")),
                        exit_code: 1,
                    })
                }
            }
        }

        Command::NoSphere {
            file,
            square,
            genus,
        } => {
            let d = SteinHandleDiagram::from_json(&read_input(file, &mut inputs)?)
                .map_err(|e| fail(&inputs, e))?;
            if !d.front_parity_ok() {
                return Err(fail(
                    &inputs,
                    "corrupt data: some component violates rotation ≡ tb + 1 (mod 2)",
                ));
            }
            let (q, c1) = d.to_lattice().map_err(|e| fail(&inputs, e))?;
            let r = obstruction_report(&q, &c1, *square, *genus).map_err(|e| fail(&inputs, e))?;
            let tbs: Vec<i64> = d.components().iter().map(|c| c.counts.tb()).collect();
            let rotations: Vec<i64> = d.components().iter().map(|c| c.counts.rotation()).collect();
            let extra = json!({
                "tb": tbs,
                "rotations": rotations,
                "matrix": q.entries(),
                "c1": c1.pairings(),
            });
            obstruction_outcome(name, inputs, &r, Some(extra))
        }
    }
}

fn obstruction_outcome(
    name: String,
    inputs: Vec<InputDigest>,
    r: &SphereObstructionReport,
    extra: Option<Value>,
) -> Result<Outcome, Failure> {
    let no_sphere = r.verdict == ObstructionVerdict::NoSphereInClassList;
    let verdict = if no_sphere {
        "no_sphere_in_class_list"
    } else {
        "obstruction_inconclusive"
    };
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "class": c.class.coefficients(),
                "c1_pairing": c.c1_pairing,
                "adjunction_satisfiable_for_sphere": c.adjunction_satisfiable_for_sphere,
            })
        })
        .collect();
    let mut details = json!({
        "square": r.square,
        "genus": r.genus,
        "classes": classes,
    });
    if let Some(Value::Object(map)) = extra {
        let obj = details.as_object_mut().expect("object");
        for (k, v) in map {
            obj.insert(k, v);
        }
    }
    let summary = if no_sphere {
        format!(
            "no embedded sphere realizes square {}: all {} class(es) violate the adjunction bound",
            r.square,
            r.classes.len()
        )
    } else {
        format!(
            "inconclusive: some class of square {} passes the adjunction bound",
            r.square
        )
    };
    let report = RunReport {
        command: name,
        inputs,
        verdict: verdict.to_owned(),
        details,
        exit_code: if no_sphere { 0 } else { 1 },
    };
    Ok(Outcome {
        stdout: report.to_json(),
        summary,
        exit_code: if no_sphere { 0 } else { 1 },
    })
}
