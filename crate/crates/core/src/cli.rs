//! The `phom` command line: homology of coloured poset files, cube
//! complexes over Boolean lattices, link homology from PD codes, graph
//! homology, structural verification runs, and a seeded instance generator.
//!
//! Every subcommand prints a machine-readable report on stdout (TSV by
//! default, JSON with `--format json`). The process exits 0 when all
//! checks pass, 1 when a verification fails, and 2 on input errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::boolean::BooleanLattice;
use crate::chromatic::{self, GraphError, UnitalAlgebra};
use crate::coloured::{boolean_split, ColouredData, ColouringError};
use crate::complex::{cube_complex, poset_complex, ComplexError};
use crate::format::{self, ParseError, PosetFile};
use crate::homology::{HomologyGroup, HomologyResult};
use crate::khovanov::{self, DiagramError};
use crate::matrix::AlgebraError;
use crate::poset::PosetError;
use crate::random;
use crate::ring::{Integers, PrimeField, Rationals, RingError, RingSpec};
use crate::verify::{self, VerifyError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "phom",
    version,
    about = "Homology of coloured posets and the complexes built on them"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of the strict chain complex of a coloured poset file
    Homology {
        file: PathBuf,
        /// Override the coefficient ring of the file (Z, Q or Fp:<p>)
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Homology of the cube complex; the file must carry a Boolean header
    Cube {
        file: PathBuf,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Check that the cube-to-chain comparison is an isomorphism on
    /// homology over Z, Q, F_2 and F_3
    VerifyMain {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Check the long exact sequence of the atom split of a Boolean file
    VerifyLes {
        file: PathBuf,
        /// Atom to split at (0-based)
        #[arg(long, default_value_t = 0)]
        split: usize,
        /// Field to work over (Q or Fp:<p>; defaults to the file ring,
        /// falling back to Q when the file is over Z)
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Split the multi-sequence complex and check the contraction of its
    /// repeat part
    VerifyHomotopy {
        file: PathBuf,
        /// Truncation degree of the multi-sequence complex
        #[arg(long, default_value_t = 6)]
        truncate: usize,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Link homology of a PD file, normalised to (i, j) bidegrees, with
    /// the graded Euler characteristic checked against the state sum
    Khovanov {
        file: PathBuf,
        /// Coefficients (default Z)
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Graph homology of a graph file, with the Euler characteristic
    /// checked against the chromatic polynomial
    Chromatic {
        file: PathBuf,
        /// Rank of the coefficient algebra k[x]/(x^m)
        #[arg(long, default_value_t = 2)]
        module_rank: usize,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
    /// Print a seeded random coloured Boolean lattice as a poset file
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rank of the Boolean lattice (at most 6)
        #[arg(long, default_value_t = 3)]
        rank: u32,
        /// Largest fiber rank
        #[arg(long, default_value_t = 2)]
        fiber: usize,
        /// Ring to stamp on the generated file
        #[arg(long)]
        ring: Option<String>,
    },
}

/// Parse the arguments, run, print, and translate the outcome to an exit
/// code: 0 all checks passed, 1 a verification failed, 2 bad input.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match render(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Run one parsed invocation, returning the report text and whether every
/// check in it passed.
pub fn render(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Homology { file, ring, format } => {
            let pf = read_poset(&file)?;
            let spec = effective_ring(&pf, ring.as_deref())?;
            let result = chain_homology(&pf.data, &spec)?;
            Ok((render_homology(&spec, &result, format)?, true))
        }
        Command::Cube { file, ring, format } => {
            let pf = read_poset(&file)?;
            let lattice = boolean_carrier(&pf)?;
            let spec = effective_ring(&pf, ring.as_deref())?;
            let result = cube_homology(&lattice, &pf.data, &spec)?;
            Ok((render_homology(&spec, &result, format)?, true))
        }
        Command::VerifyMain { file, format } => {
            let pf = read_poset(&file)?;
            let lattice = boolean_carrier(&pf)?;
            let report = verify::verify_main(&lattice, &pf.data)?;
            let out = match format {
                OutputFormat::Json => json(&report)?,
                OutputFormat::Tsv => {
                    let mut out = String::from("ring\tdegree\tcube\tchains\tok\n");
                    for r in &report.rings {
                        for d in &r.degrees {
                            let _ = writeln!(
                                out,
                                "{}\t{}\t{}\t{}\t{}",
                                r.ring, d.degree, d.cube, d.chains, d.ok
                            );
                        }
                    }
                    let _ = writeln!(out, "# ok\t{}", report.ok);
                    out
                }
            };
            Ok((out, report.ok))
        }
        Command::VerifyLes { file, split, ring, format } => {
            let pf = read_poset(&file)?;
            let lattice = boolean_carrier(&pf)?;
            let spec = match ring {
                Some(s) => RingSpec::parse(&s)?,
                None if pf.ring == RingSpec::Integers => RingSpec::Rationals,
                None => pf.ring,
            };
            let report = match spec {
                RingSpec::Integers => {
                    return Err(CliError::Invalid(
                        "exactness checks need field coefficients (Q or Fp:<p>)".into(),
                    ))
                }
                RingSpec::Rationals => {
                    les_reports(&lattice, &pf.data.over(&Rationals)?, split)?
                }
                RingSpec::PrimeField(p) => {
                    les_reports(&lattice, &pf.data.over(&PrimeField::new(p)?)?, split)?
                }
            };
            let ok = report.ok;
            let out = match format {
                OutputFormat::Json => json(&report)?,
                OutputFormat::Tsv => {
                    let mut out = String::from("side\tnode\tok\n");
                    let _ = writeln!(
                        out,
                        "chains\tretraction iso\t{}",
                        report.chain_side.retraction_iso
                    );
                    for c in &report.chain_side.checks {
                        let _ = writeln!(out, "chains\t{}\t{}", c.node, c.ok);
                    }
                    for c in &report.cube_side.checks {
                        let _ = writeln!(out, "cube\t{}\t{}", c.node, c.ok);
                    }
                    let _ = writeln!(out, "# ok\t{ok}");
                    out
                }
            };
            Ok((out, ok))
        }
        Command::VerifyHomotopy { file, truncate, ring, format } => {
            let pf = read_poset(&file)?;
            let spec = effective_ring(&pf, ring.as_deref())?;
            let report = match &spec {
                RingSpec::Integers => {
                    verify::verify_homotopy(&pf.data.over(&Integers)?, truncate)?
                }
                RingSpec::Rationals => {
                    verify::verify_homotopy(&pf.data.over(&Rationals)?, truncate)?
                }
                RingSpec::PrimeField(p) => {
                    verify::verify_homotopy(&pf.data.over(&PrimeField::new(*p)?)?, truncate)?
                }
            };
            let ok = report.ok;
            let out = match format {
                OutputFormat::Json => json(&report)?,
                OutputFormat::Tsv => {
                    let mut out = String::from("degree\tfull\tstrict\trepeat\n");
                    for r in &report.ranks {
                        let _ =
                            writeln!(out, "{}\t{}\t{}\t{}", r.degree, r.full, r.strict, r.repeat);
                    }
                    let _ = writeln!(out, "# split ok\t{}", report.split_ok);
                    let _ = writeln!(out, "# strict part matches\t{}", report.strict_part_matches);
                    let _ = writeln!(out, "# identity ok\t{}", report.identity_ok);
                    let _ = writeln!(
                        out,
                        "# repeat part acyclic\t{}",
                        report.repeat_homology_trivial
                    );
                    let _ = writeln!(out, "# ok\t{ok}");
                    out
                }
            };
            Ok((out, ok))
        }
        Command::Khovanov { file, ring, format } => {
            let text = read(&file)?;
            let d = format::parse_pd(&text)?;
            let spec = match ring {
                Some(s) => RingSpec::parse(&s)?,
                None => RingSpec::Integers,
            };
            let table = match &spec {
                RingSpec::Integers => khovanov::khovanov_table(&d, &Integers)?,
                RingSpec::Rationals => khovanov::khovanov_table(&d, &Rationals)?,
                RingSpec::PrimeField(p) => khovanov::khovanov_table(&d, &PrimeField::new(*p)?)?,
            };
            let state_sum = khovanov::kauffman_state_sum(&d);
            let (lattice, cp) = khovanov::khovanov_colouring(&d, &Integers)?;
            let cx = cube_complex(&lattice, &cp)?;
            let euler = khovanov::graded_euler_characteristic(&cx)?;
            let ok = euler == state_sum;

            #[derive(Serialize)]
            struct Entry {
                i: i64,
                j: i64,
                betti: usize,
                torsion: Vec<String>,
            }
            #[derive(Serialize)]
            struct Out {
                ring: String,
                table: Vec<Entry>,
                state_sum: String,
                graded_euler: String,
                state_sum_matches: bool,
            }
            let entries: Vec<Entry> = table
                .entries
                .iter()
                .map(|(&(i, j), g)| Entry {
                    i,
                    j,
                    betti: g.betti,
                    torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
                })
                .collect();
            let out = match format {
                OutputFormat::Json => json(&Out {
                    ring: spec.to_string(),
                    table: entries,
                    state_sum: state_sum.to_string(),
                    graded_euler: euler.to_string(),
                    state_sum_matches: ok,
                })?,
                OutputFormat::Tsv => {
                    let mut out = String::from("i\tj\tbetti\ttorsion\n");
                    for e in &entries {
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}",
                            e.i,
                            e.j,
                            e.betti,
                            if e.torsion.is_empty() {
                                "-".to_string()
                            } else {
                                e.torsion.join(",")
                            }
                        );
                    }
                    let _ = writeln!(out, "# state sum\t{state_sum}");
                    let _ = writeln!(out, "# graded euler\t{euler}");
                    let _ = writeln!(out, "# state sum matches\t{ok}");
                    out
                }
            };
            Ok((out, ok))
        }
        Command::Chromatic { file, module_rank, ring, format } => {
            let text = read(&file)?;
            let g = format::parse_graph(&text)?;
            if module_rank == 0 {
                return Err(CliError::Invalid("the module rank must be positive".into()));
            }
            let alg = UnitalAlgebra::truncated_polynomial(module_rank);
            let spec = match ring {
                Some(s) => RingSpec::parse(&s)?,
                None => RingSpec::Integers,
            };
            let (result, euler_ok) = match &spec {
                RingSpec::Integers => chromatic_run(&g, &alg, &Integers)?,
                RingSpec::Rationals => chromatic_run(&g, &alg, &Rationals)?,
                RingSpec::PrimeField(p) => chromatic_run(&g, &alg, &PrimeField::new(*p)?)?,
            };
            let poly = chromatic::chromatic_polynomial(&g);

            #[derive(Serialize)]
            struct Out {
                ring: String,
                groups: Vec<GroupLine>,
                chromatic_polynomial: Vec<String>,
                euler_matches_polynomial: bool,
            }
            let groups = group_lines(&result);
            let out = match format {
                OutputFormat::Json => json(&Out {
                    ring: spec.to_string(),
                    groups,
                    chromatic_polynomial: poly.iter().map(|c| c.to_string()).collect(),
                    euler_matches_polynomial: euler_ok,
                })?,
                OutputFormat::Tsv => {
                    let mut out = homology_tsv(&groups);
                    let _ = writeln!(
                        out,
                        "# chromatic polynomial\t{}",
                        poly.iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    let _ = writeln!(out, "# euler matches polynomial\t{euler_ok}");
                    out
                }
            };
            Ok((out, euler_ok))
        }
        Command::Random { seed, rank, fiber, ring } => {
            if rank > 6 {
                return Err(CliError::Invalid("the rank is capped at 6".into()));
            }
            if fiber == 0 {
                return Err(CliError::Invalid("the fiber bound must be positive".into()));
            }
            let spec = match ring {
                Some(s) => RingSpec::parse(&s)?,
                None => RingSpec::Integers,
            };
            let (_, data) = random::random_instance(seed, rank, fiber);
            let file = PosetFile {
                data,
                ring: spec,
                boolean_rank: Some(rank),
            };
            Ok((format::write_coloured(&file), true))
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn read_poset(path: &PathBuf) -> Result<PosetFile, CliError> {
    Ok(format::parse_coloured(&read(path)?)?)
}

fn boolean_carrier(pf: &PosetFile) -> Result<BooleanLattice, CliError> {
    match pf.boolean_rank {
        Some(r) => Ok(BooleanLattice::new(r)?),
        None => Err(CliError::Invalid(
            "this command needs a Boolean lattice file (header `boolean <rank> <ring>`)".into(),
        )),
    }
}

fn effective_ring(pf: &PosetFile, flag: Option<&str>) -> Result<RingSpec, CliError> {
    match flag {
        Some(s) => Ok(RingSpec::parse(s)?),
        None => Ok(pf.ring),
    }
}

fn chain_homology(data: &ColouredData, spec: &RingSpec) -> Result<HomologyResult, CliError> {
    Ok(match spec {
        RingSpec::Integers => poset_complex(&data.over(&Integers)?)?.homology()?,
        RingSpec::Rationals => poset_complex(&data.over(&Rationals)?)?.homology()?,
        RingSpec::PrimeField(p) => poset_complex(&data.over(&PrimeField::new(*p)?)?)?.homology()?,
    })
}

fn cube_homology(
    lattice: &BooleanLattice,
    data: &ColouredData,
    spec: &RingSpec,
) -> Result<HomologyResult, CliError> {
    Ok(match spec {
        RingSpec::Integers => cube_complex(lattice, &data.over(&Integers)?)?.homology()?,
        RingSpec::Rationals => cube_complex(lattice, &data.over(&Rationals)?)?.homology()?,
        RingSpec::PrimeField(p) => {
            cube_complex(lattice, &data.over(&PrimeField::new(*p)?)?)?.homology()?
        }
    })
}

fn chromatic_run<R: crate::ring::Ring>(
    g: &chromatic::SimpleGraph,
    alg: &UnitalAlgebra,
    ring: &R,
) -> Result<(HomologyResult, bool), CliError> {
    let (lattice, cp) = chromatic::chromatic_colouring(g, alg, ring)?;
    let result = cube_complex(&lattice, &cp)?.homology()?;
    let euler_ok = chromatic::euler_check(g, alg, ring)?;
    Ok((result, euler_ok))
}

#[derive(Serialize)]
struct GroupLine {
    degree: i64,
    betti: usize,
    torsion: Vec<String>,
    group: String,
}

#[derive(Serialize)]
struct HomologyOut {
    ring: String,
    groups: Vec<GroupLine>,
}

fn group_lines(result: &HomologyResult) -> Vec<GroupLine> {
    result
        .groups
        .iter()
        .enumerate()
        .map(|(n, g)| line_of(n as i64, g))
        .collect()
}

fn line_of(degree: i64, g: &HomologyGroup) -> GroupLine {
    GroupLine {
        degree,
        betti: g.betti,
        torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
        group: g.to_string(),
    }
}

fn homology_tsv(groups: &[GroupLine]) -> String {
    let mut out = String::from("degree\tbetti\ttorsion\tgroup\n");
    for g in groups {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            g.degree,
            g.betti,
            if g.torsion.is_empty() {
                "-".to_string()
            } else {
                g.torsion.join(",")
            },
            g.group
        );
    }
    out
}

fn render_homology(
    spec: &RingSpec,
    result: &HomologyResult,
    format: OutputFormat,
) -> Result<String, CliError> {
    let groups = group_lines(result);
    Ok(match format {
        OutputFormat::Json => json(&HomologyOut {
            ring: spec.to_string(),
            groups,
        })?,
        OutputFormat::Tsv => homology_tsv(&groups),
    })
}

#[derive(Serialize)]
struct SplitLesOut {
    split: usize,
    chain_side: verify::LesReport,
    cube_side: verify::LesReport,
    ok: bool,
}

fn les_reports<F: crate::gauss::FieldRing>(
    lattice: &BooleanLattice,
    cp: &crate::coloured::ColouredPoset<F>,
    split: usize,
) -> Result<SplitLesOut, CliError> {
    let parts = boolean_split(lattice, cp, split)?;
    let chain_side = verify::verify_les(&parts.lower, &parts.upper, &parts.morphism)?;
    let cube_side = verify::verify_cube_les(lattice, cp, split)?;
    let ok = chain_side.ok && cube_side.ok;
    Ok(SplitLesOut {
        split,
        chain_side,
        cube_side,
        ok,
    })
}

fn json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn run(args: &[&str]) -> Result<(String, bool), CliError> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        render(cli)
    }

    fn temp_file(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    const SQUARE: &str = "\
boolean 2 Z
elem 0 rank 1
elem a1 rank 1
elem a2 rank 1
elem a1a2 rank 1
cover 0 a1
map 2
cover 0 a2
map 2
cover a1 a1a2
map 2
cover a2 a1a2
map 2
";

    #[test]
    fn homology_of_the_doubling_square() {
        let f = temp_file(SQUARE);
        let path = f.path().to_str().unwrap();
        let (out, ok) = run(&["phom", "homology", path]).unwrap();
        assert!(ok);
        assert_eq!(
            out,
            "degree\tbetti\ttorsion\tgroup\n0\t0\t2\tZ/2\n1\t0\t2\tZ/2\n2\t0\t-\t0\n"
        );
        let (json_out, _) = run(&["phom", "homology", path, "--format", "json"]).unwrap();
        assert!(json_out.contains("\"group\": \"Z/2\""));
        // over the rationals the doubled maps become invertible
        let (q_out, _) = run(&["phom", "homology", path, "--ring", "Q"]).unwrap();
        assert_eq!(
            q_out,
            "degree\tbetti\ttorsion\tgroup\n0\t0\t-\t0\n1\t0\t-\t0\n2\t0\t-\t0\n"
        );
        // over F_2 they vanish instead
        let (f2_out, _) = run(&["phom", "homology", path, "--ring", "Fp:2"]).unwrap();
        assert!(f2_out.contains("0\t1\t-\tZ"));
        let (cube_out, _) = run(&["phom", "cube", path]).unwrap();
        assert_eq!(out, cube_out);
    }

    #[test]
    fn cube_needs_a_boolean_header() {
        let f = temp_file("poset Z\nelem a rank 1\nelem 1 rank 1\ncover a 1\nmap 2\n");
        let path = f.path().to_str().unwrap();
        let err = run(&["phom", "cube", path]).unwrap_err();
        assert!(matches!(err, CliError::Invalid(_)));
        let (out, ok) = run(&["phom", "homology", path]).unwrap();
        assert!(ok);
        assert!(out.contains("0\t0\t2\tZ/2"));
    }

    #[test]
    fn verifications_on_the_square() {
        let f = temp_file(SQUARE);
        let path = f.path().to_str().unwrap();
        let (out, ok) = run(&["phom", "verify-main", path]).unwrap();
        assert!(ok, "{out}");
        assert!(out.contains("# ok\ttrue"));
        let (out, ok) = run(&["phom", "verify-les", path, "--split", "1"]).unwrap();
        assert!(ok, "{out}");
        let (out, ok) = run(&["phom", "verify-homotopy", path, "--truncate", "4"]).unwrap();
        assert!(ok, "{out}");
        assert!(out.contains("# identity ok\ttrue"));
    }

    #[test]
    fn khovanov_table_of_the_left_trefoil() {
        let f = temp_file("pd n+ 0 n- 3\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
        let path = f.path().to_str().unwrap();
        let (out, ok) = run(&["phom", "khovanov", path]).unwrap();
        assert!(ok, "{out}");
        assert_eq!(
            out,
            "i\tj\tbetti\ttorsion\n\
             -3\t-9\t1\t-\n\
             -2\t-7\t0\t2\n\
             -2\t-5\t1\t-\n\
             0\t-3\t1\t-\n\
             0\t-1\t1\t-\n\
             # state sum\tq^-3 - q - q^3 - q^5\n\
             # graded euler\tq^-3 - q - q^3 - q^5\n\
             # state sum matches\ttrue\n"
        );
    }

    #[test]
    fn chromatic_run_on_the_triangle() {
        let f = temp_file("graph 3\ne 0 1\ne 1 2\ne 0 2\n");
        let path = f.path().to_str().unwrap();
        let (out, ok) = run(&["phom", "chromatic", path]).unwrap();
        assert!(ok, "{out}");
        assert!(out.contains("# chromatic polynomial\t0,2,-3,1"));
        assert!(out.contains("# euler matches polynomial\ttrue"));
    }

    #[test]
    fn random_files_round_trip() {
        let (out, ok) = run(&["phom", "random", "--seed", "4", "--rank", "2", "--fiber", "2"]).unwrap();
        assert!(ok);
        let pf = format::parse_coloured(&out).unwrap();
        assert_eq!(pf.boolean_rank, Some(2));
        pf.data.over(&Integers).unwrap();
        let f = temp_file(&out);
        let path = f.path().to_str().unwrap();
        let (_, ok) = run(&["phom", "verify-main", path]).unwrap();
        assert!(ok);
    }
}
