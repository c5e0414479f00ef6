//! Command-line front end: file parsing, solver orchestration, corpus
//! generators and DOT export.

pub mod format;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use bikernel::gen::{self, SplitMix64};
use bikernel::{
    bk_color, cartesian_product, chorded_cycle_bikernel, condensation, cycle_bikernel,
    detect_shape, is_bikernel, mono_cycle_vertex, path_bikernel, regular22_necessary,
    solve_acyclic, solve_brute_capped, solve_classes, BicoloredDigraph, BikernelCheck,
    BikernelVerdict, BkColorError, Color, ColoringResult, Condensation, FamilyError, FamilyShape,
    GraphError, NoBikernelReason, NotColorable, ProductError, RegularCheck, SolveError, Violation,
    DEFAULT_BRUTE_CAP,
};
use format::FileError;

const OUTPUT_VOCABULARY: &str = "\
Output vocabulary (machine-readable, closed):
  solve / family:
    BIKERNEL <v>...                           verified bikernel, exit 0
    NONE empty-graph                          exit 1
    NONE class-count-mismatch <m1> <m2>
    NONE no-perfect-matching {<class>}...
    NONE adjacent-critical-pair <u> <v> <color>
    NONE exhausted
  family only:
    SHAPE directed-path <v>... | SHAPE directed-cycle <v>...
    SHAPE chorded-cycle <v>... CHORD <tail> <head> <color> | SHAPE other
    REGULAR22 inconclusive-pass <k> | REGULAR22 fails <k1> <k2>
    NO-CHARACTERIZATION                       exit 1
  check:
    YES                                       exit 0
    NO empty-set                              exit 1
    NO independence <u> <v> <color>
    NO absorbency <v>
    NO dominance <v>
  bk-color:
    arc lines of the coloring, then BIKERNEL <v>...   exit 0
    NOT-BK-COLORABLE dead-arc <tail> <head>           exit 1
    NOT-BK-COLORABLE no-star-assignment
    NOT-BK-COLORABLE not-strongly-connected {<vertices>}
    NOT-BK-COLORABLE no-coloring-found

Exit codes: 0 found/yes, 1 none/no, 2 input or usage error.

Generated corpora are reproducible: gen --seed S always emits the same
bytes (SplitMix64 generator).";

#[derive(Parser)]
#[command(
    name = "bikernel",
    version,
    about = "Bikernels by monochromatic paths in bicolored digraphs",
    after_long_help = OUTPUT_VOCABULARY
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Acyclic fast path when no monochromatic cycle exists, else classes.
    Auto,
    /// Exhaustive subset search (small graphs; see --cap).
    Brute,
    /// Cyclic-classes matching algorithm.
    Classes,
    /// Fast path for digraphs without monochromatic cycles.
    Acyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a bikernel and print one if so.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Vertex cap for the exhaustive method (at most 64).
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        cap: usize,
    },
    /// Check whether a given vertex set is a bikernel.
    Check {
        file: PathBuf,
        /// Comma-separated vertex names.
        #[arg(long)]
        set: String,
    },
    /// Print the cyclic classes of both colors with their extremes.
    Classes { file: PathBuf },
    /// Classify the graph shape and apply its characterization.
    Family { file: PathBuf },
    /// Write the cartesian product of two bicolored graphs.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Search a 2-coloring of an uncolored digraph that admits a bikernel.
    BkColor { file: PathBuf },
    /// Generate reproducible corpora.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Render the graph in DOT (color 1 blue, color 2 red).
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// A randomly colored directed path.
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A randomly colored directed cycle.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A randomly colored cycle with a random chord.
    ChordedCycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random tournament (uncolored).
    Tournament {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Resample until the tournament is strongly connected.
        #[arg(long)]
        strong: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random bicolored digraph.
    Random {
        #[arg(long)]
        n: usize,
        /// Arc count; defaults to a seeded draw.
        #[arg(long)]
        arcs: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    File(#[from] FileError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    BkColor(#[from] BkColorError),
    #[error("{0}")]
    Usage(String),
}

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<format::GraphFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(format::parse(&text)?)
}

fn load_bicolored(path: &Path) -> Result<BicoloredDigraph, CliError> {
    Ok(read_file(path)?.to_bicolored()?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn braced(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

fn reason_code(reason: &NoBikernelReason) -> String {
    match reason {
        NoBikernelReason::EmptyGraph => "empty-graph".into(),
        NoBikernelReason::ClassCountMismatch {
            maximal_one,
            minimal_two,
        } => {
            format!("class-count-mismatch {maximal_one} {minimal_two}")
        }
        NoBikernelReason::NoPerfectMatching { hall_witness } => {
            let classes: Vec<String> = hall_witness.iter().map(|c| braced(c)).collect();
            format!("no-perfect-matching {}", classes.join(" "))
        }
        NoBikernelReason::AdjacentCriticalPair { from, to, color } => {
            format!("adjacent-critical-pair {from} {to} {color}")
        }
        NoBikernelReason::Exhausted => "exhausted".into(),
    }
}

fn print_verdict(verdict: &BikernelVerdict) -> u8 {
    match verdict {
        BikernelVerdict::Found(members) => {
            println!("BIKERNEL {}", members.join(" "));
            0
        }
        BikernelVerdict::None(reason) => {
            println!("NONE {}", reason_code(reason));
            1
        }
    }
}

fn violation_code(violation: &Violation) -> String {
    match violation {
        Violation::EmptySet => "empty-set".into(),
        Violation::Independence { from, to, color } => format!("independence {from} {to} {color}"),
        Violation::Absorbency { vertex } => format!("absorbency {vertex}"),
        Violation::Dominance { vertex } => format!("dominance {vertex}"),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Solve { file, method, cap } => {
            let g = load_bicolored(&file)?;
            let verdict = match method {
                Method::Brute => solve_brute_capped(&g, cap)?,
                Method::Classes => solve_classes(&g)?,
                Method::Acyclic => solve_acyclic(&g)?,
                Method::Auto => {
                    let acyclic = Color::BOTH
                        .iter()
                        .all(|&c| mono_cycle_vertex(&g, c).is_none());
                    if acyclic && g.vertex_count() > 0 {
                        solve_acyclic(&g)?
                    } else {
                        solve_classes(&g)?
                    }
                }
            };
            Ok(print_verdict(&verdict))
        }

        Command::Check { file, set } => {
            let g = load_bicolored(&file)?;
            let names: Vec<&str> = set.split(',').filter(|s| !s.is_empty()).collect();
            let vertex_set = g.vertex_set(names.iter().copied())?;
            match is_bikernel(&g, &vertex_set) {
                BikernelCheck::Yes => {
                    println!("YES");
                    Ok(0)
                }
                BikernelCheck::No(violation) => {
                    println!("NO {}", violation_code(&violation));
                    Ok(1)
                }
            }
        }

        Command::Classes { file } => {
            let g = load_bicolored(&file)?;
            let class_line = |cond: &Condensation, ids: Option<&[usize]>| {
                let ids: Vec<usize> = match ids {
                    Some(ids) => ids.to_vec(),
                    None => (0..cond.classes.len()).collect(),
                };
                ids.iter()
                    .map(|&id| {
                        let names: Vec<String> = cond.classes[id]
                            .iter()
                            .map(|&v| g.name(v).to_string())
                            .collect();
                        braced(&names)
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let c1 = condensation(&g, Color::One);
            let c2 = condensation(&g, Color::Two);
            println!("1-classes: {}", class_line(&c1, None));
            println!("1-maximal: {}", class_line(&c1, Some(&c1.maximal)));
            println!("2-classes: {}", class_line(&c2, None));
            println!("2-minimal: {}", class_line(&c2, Some(&c2.minimal)));
            Ok(0)
        }

        Command::Family { file } => {
            let g = load_bicolored(&file)?;
            let names = |vs: &[bikernel::Vertex]| {
                vs.iter()
                    .map(|&v| g.name(v).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            match detect_shape(&g) {
                FamilyShape::DirectedPath { order } => {
                    println!("SHAPE directed-path {}", names(&order));
                    Ok(print_verdict(&path_bikernel(&g)?))
                }
                FamilyShape::DirectedCycle { order } => {
                    println!("SHAPE directed-cycle {}", names(&order));
                    Ok(print_verdict(&cycle_bikernel(&g)?))
                }
                FamilyShape::ChordedCycle { order, chord } => {
                    println!(
                        "SHAPE chorded-cycle {} CHORD {} {} {}",
                        names(&order),
                        g.name(chord.tail),
                        g.name(chord.head),
                        chord.color
                    );
                    Ok(print_verdict(&chorded_cycle_bikernel(&g)?))
                }
                FamilyShape::Other => {
                    println!("SHAPE other");
                    match regular22_necessary(&g) {
                        Ok(RegularCheck::InconclusivePass { cycles }) => {
                            println!("REGULAR22 inconclusive-pass {cycles}");
                            Ok(0)
                        }
                        Ok(RegularCheck::Fails {
                            color1_cycles,
                            color2_cycles,
                        }) => {
                            println!("REGULAR22 fails {color1_cycles} {color2_cycles}");
                            Ok(1)
                        }
                        Err(_) => {
                            println!("NO-CHARACTERIZATION");
                            Ok(1)
                        }
                    }
                }
            }
        }

        Command::Product { a, b, output } => {
            let ga = load_bicolored(&a)?;
            let gb = load_bicolored(&b)?;
            let p = cartesian_product(&ga, &gb)?;
            write_output(Some(&output), &format::serialize_bicolored(&p))?;
            Ok(0)
        }

        Command::BkColor { file } => {
            let d = read_file(&file)?.to_digraph()?;
            match bk_color(&d)? {
                ColoringResult::Colored { graph, bikernel } => {
                    print!("{}", format::serialize_bicolored(&graph));
                    println!("BIKERNEL {}", bikernel.join(" "));
                    Ok(0)
                }
                ColoringResult::NotColorable(reason) => {
                    let code = match reason {
                        NotColorable::DeadArc { tail, head } => {
                            format!("dead-arc {tail} {head}")
                        }
                        NotColorable::NoStarAssignment => "no-star-assignment".into(),
                        NotColorable::NotStronglyConnected { trapped } => {
                            format!("not-strongly-connected {}", braced(&trapped))
                        }
                        NotColorable::NoColoringFound => "no-coloring-found".into(),
                    };
                    println!("NOT-BK-COLORABLE {code}");
                    Ok(1)
                }
            }
        }

        Command::Gen { what } => {
            let (text, output) = match what {
                GenCommand::Path { n, seed, output } => {
                    if n < 1 {
                        return Err(CliError::Usage("path needs --n >= 1".into()));
                    }
                    let mut rng = SplitMix64::new(seed);
                    (
                        format::serialize_bicolored(&gen::random_path(&mut rng, n)),
                        output,
                    )
                }
                GenCommand::Cycle { n, seed, output } => {
                    if n < 3 {
                        return Err(CliError::Usage("cycle needs --n >= 3".into()));
                    }
                    let mut rng = SplitMix64::new(seed);
                    (
                        format::serialize_bicolored(&gen::random_cycle(&mut rng, n)),
                        output,
                    )
                }
                GenCommand::ChordedCycle { n, seed, output } => {
                    if n < 3 {
                        return Err(CliError::Usage("chorded-cycle needs --n >= 3".into()));
                    }
                    let mut rng = SplitMix64::new(seed);
                    (
                        format::serialize_bicolored(&gen::random_chorded_cycle(&mut rng, n)),
                        output,
                    )
                }
                GenCommand::Tournament {
                    n,
                    seed,
                    strong,
                    output,
                } => {
                    let mut rng = SplitMix64::new(seed);
                    let mut t = gen::random_tournament(&mut rng, n);
                    if strong {
                        let mut attempts = 0;
                        while !t.is_strongly_connected() {
                            attempts += 1;
                            if attempts > 100_000 {
                                return Err(CliError::Usage(format!(
                                    "no strong tournament on {n} vertices found"
                                )));
                            }
                            t = gen::random_tournament(&mut rng, n);
                        }
                    }
                    (format::serialize_digraph(&t), output)
                }
                GenCommand::Random {
                    n,
                    arcs,
                    seed,
                    output,
                } => {
                    if n < 1 {
                        return Err(CliError::Usage("random needs --n >= 1".into()));
                    }
                    let mut rng = SplitMix64::new(seed);
                    let max = 2 * n * (n - 1);
                    let arcs = arcs.unwrap_or_else(|| rng.below(max as u64 + 1) as usize);
                    (
                        format::serialize_bicolored(&gen::random_bicolored(&mut rng, n, arcs)),
                        output,
                    )
                }
            };
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }

        Command::ExportDot { file, output } => {
            let parsed = read_file(&file)?;
            let dot = if parsed.uncolored_arcs.is_empty() {
                format::export_dot_bicolored(&parsed.to_bicolored()?)
            } else {
                format::export_dot_digraph(&parsed.to_digraph()?)
            };
            write_output(output.as_deref(), &dot)?;
            Ok(0)
        }
    }
}
