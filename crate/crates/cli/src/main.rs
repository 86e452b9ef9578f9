//! Command-line driver: parse and classify graded algebra inputs, build
//! Ufnarovskii graphs, normalize weighted quivers to degree one, connectify,
//! print degree series, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 validation error, 4 budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use pathalg_core::hilbert::{compare_series, path_counts};
use pathalg_core::pipeline::run_pipeline;
use pathalg_core::verify::{run_named_suite, SuiteOptions};
use pathalg_core::{
    build_ufnarovskii, classify, connectify, emit_json, emit_string, normalize_to_degree_one,
    parse_input, reduce_forbidden, AlgebraClass, AlgebraInput, Error, QuiverMonomialAlgebra,
    DEFAULT_ENUM_BUDGET,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pathalg",
    version,
    about = "Transformations between graded path and monomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Pa1,
    Wpa,
    Ma,
    Cma,
    Cma1,
}

impl From<ClassArg> for AlgebraClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Pa1 => AlgebraClass::PA1,
            ClassArg::Wpa => AlgebraClass::WPA,
            ClassArg::Ma => AlgebraClass::MA,
            ClassArg::Cma => AlgebraClass::CMA,
            ClassArg::Cma1 => AlgebraClass::CMA1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ufgraph,
    Split,
    Adjunction,
    Hilbert,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Ufgraph => "ufgraph",
            SuiteArg::Split => "split",
            SuiteArg::Adjunction => "adjunction",
            SuiteArg::Hilbert => "hilbert",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse, validate, and classify an input file.
    Check { path: PathBuf },
    /// Print every class label that applies to the input.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the weighted Ufnarovskii graph of a monomial presentation.
    Ufgraph {
        path: PathBuf,
        /// Emit GraphViz instead of JSON.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop forbidden words containing another as a proper factor first.
        #[arg(long)]
        reduce_forbidden: bool,
    },
    /// Split arrows until every arrow has degree one.
    Normalize {
        path: PathBuf,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Present the one-vertex algebra on a quiver's arrows.
    Connectify {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree series and path counts.
    Hilbert {
        path: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        reduce_forbidden: bool,
    },
    /// Run the constructive chain from the input's class to a target class,
    /// verifying each step.
    Pipeline {
        path: PathBuf,
        #[arg(long, value_enum)]
        to: ClassArg,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        reduce_forbidden: bool,
    },
    /// Run one verification suite on the input.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        reduce_forbidden: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_input(path: &Path, reduce: bool) -> Result<AlgebraInput, Error> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let input = parse_input(&bytes)?;
    Ok(match input {
        AlgebraInput::Presentation(p) if reduce => {
            AlgebraInput::Presentation(reduce_forbidden(&p))
        }
        other => other,
    })
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check { path } => {
            let input = read_input(&path, false)?;
            println!("class: {}", classify(&input));
            Ok(0)
        }
        Command::Classify { path, json } => {
            let input = read_input(&path, false)?;
            let c = classify(&input);
            if json {
                let value = serde_json::json!({
                    "most_specific": c.most_specific(),
                    "all": c.labels,
                });
                print!("{}", pretty(&value));
            } else {
                println!("class: {c}");
            }
            Ok(0)
        }
        Command::Ufgraph { path, dot, json: _, out, reduce_forbidden } => {
            let input = read_input(&path, reduce_forbidden)?;
            let AlgebraInput::Presentation(p) = input else {
                return Err(Error::validation(
                    "input",
                    "ufgraph requires a monomial presentation input",
                ));
            };
            let g = build_ufnarovskii(&p, DEFAULT_ENUM_BUDGET)?;
            let content = if dot {
                g.to_dot()
            } else {
                pretty(&emit_json(&AlgebraInput::Quiver(g.quiver().clone())))
            };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Command::Normalize { path, dot, json: _, out } => {
            let input = read_input(&path, false)?;
            let q = match &input {
                AlgebraInput::Quiver(q) => q,
                _ => {
                    return Err(Error::validation(
                        "input",
                        "normalize requires a quiver input without relations",
                    ))
                }
            };
            let (normalized, trace) = normalize_to_degree_one(q);
            let content = if dot {
                normalized.to_dot()
            } else {
                pretty(&serde_json::json!({
                    "quiver": emit_json(&AlgebraInput::Quiver(normalized.clone())),
                    "trace": serde_json::to_value(&trace).expect("trace serializes"),
                }))
            };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Command::Connectify { path, out } => {
            let input = read_input(&path, false)?;
            let alg = match input {
                AlgebraInput::Quiver(q) => QuiverMonomialAlgebra::from(q),
                AlgebraInput::QuiverWithRelations(alg) => alg,
                AlgebraInput::Presentation(_) => {
                    return Err(Error::validation(
                        "input",
                        "connectify requires a quiver input (a presentation is already connected)",
                    ))
                }
            };
            let presented = connectify(&alg)?;
            let content = emit_string(&AlgebraInput::Presentation(presented));
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Command::Hilbert { path, max_degree, json, out, reduce_forbidden } => {
            let input = read_input(&path, reduce_forbidden)?;
            let content = match &input {
                AlgebraInput::Presentation(p) => {
                    let cmp = compare_series(p, max_degree, 8, DEFAULT_ENUM_BUDGET)?;
                    if json {
                        pretty(&cmp.to_json())
                    } else {
                        cmp.to_table()
                    }
                }
                AlgebraInput::Quiver(q)
                | AlgebraInput::QuiverWithRelations(QuiverMonomialAlgebra { quiver: q, .. }) => {
                    let table = path_counts(q, max_degree);
                    if json {
                        pretty(&table.to_json())
                    } else {
                        let degrees: Vec<String> =
                            (0..=max_degree).map(|d| d.to_string()).collect();
                        let by_degree: Vec<String> =
                            table.by_degree().iter().map(|c| c.to_string()).collect();
                        let by_length: Vec<String> =
                            table.by_length().iter().map(|c| c.to_string()).collect();
                        pathalg_core::hilbert::render_table(&[
                            ("degree/length", &degrees),
                            ("paths by degree", &by_degree),
                            ("paths by length", &by_length),
                        ])
                    }
                }
            };
            write_output(out.as_ref(), &content)?;
            Ok(0)
        }
        Command::Pipeline { path, to, max_degree, trials, seed, json, out, reduce_forbidden } => {
            let input = read_input(&path, reduce_forbidden)?;
            let opts = SuiteOptions { max_degree, trials, seed, budget: DEFAULT_ENUM_BUDGET };
            let report = run_pipeline(&input, to.into(), opts)?;
            let content = if json { pretty(&report.to_json()) } else { report.render_text() };
            write_output(out.as_ref(), &content)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Verify { path, suite, max_degree, trials, seed, json, reduce_forbidden } => {
            let input = read_input(&path, reduce_forbidden)?;
            let opts = SuiteOptions { max_degree, trials, seed, budget: DEFAULT_ENUM_BUDGET };
            let report = run_named_suite(suite.name(), &input, opts)?;
            let content = if json { pretty(&report.to_json()) } else { report.render_text() };
            print!("{content}");
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}
