//! The `tverberg` command line. Exit codes: 0 success or verified,
//! 1 negative mathematical result, 2 usage, IO or parse error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use tverberg_core::instance::generate_instance;
use tverberg_core::linalg::general_position_violation;
use tverberg_core::reduction::{run_reduction, ReductionOptions, DEFAULT_RETRIES};
use tverberg_core::tverberg::{brute_force_all, find_tverberg3, TverbergWitness};
use tverberg_core::vkf::{find_vkf3, ScanMode};
use tverberg_core::{Error, PointConfig};

use crate::document::{parse_pointset, parse_witness, serialize_pointset, to_json, WitnessDocument};
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tverberg", version, about = "Exact Tverberg 3-partitions with checkable certificates")]
struct Cli {
    /// Worker threads for candidate scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a seeded random point set in general position.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        dim: usize,
        /// Largest coordinate denominator.
        #[arg(long, default_value_t = 100)]
        denom: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report whether a point set is in general position.
    GpCheck { input: Option<PathBuf> },
    /// Tverberg 3-partitions of a point set.
    Tverberg {
        #[command(subcommand)]
        action: TverbergAction,
    },
    /// Van Kampen-Flores triples.
    Vkf {
        #[command(subcommand)]
        action: VkfAction,
    },
    /// Tverberg partition of 6k+1 points in dimension 3k-1 via lifting and descent.
    Reduce {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_RETRIES)]
        retries: usize,
        /// Also write the full reduction trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Accept whichever seed triple the parallel scan reaches first.
        #[arg(long)]
        fast: bool,
        /// Only seed from triples that leave the apex unused.
        #[arg(long)]
        avoid_apex: bool,
        input: Option<PathBuf>,
    },
    /// Re-check a witness document against its point set.
    Verify {
        #[arg(long)]
        points: PathBuf,
        witness: Option<PathBuf>,
    },
    /// Draw a planar point set, optionally with a witness.
    Render {
        #[arg(long)]
        svg: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum TverbergAction {
    /// First partition in canonical order whose hulls meet.
    Find { input: Option<PathBuf> },
    /// Every partition whose hulls meet (at most 12 points).
    Oracle { input: Option<PathBuf> },
}

#[derive(Debug, Subcommand)]
enum VkfAction {
    Find {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        fast: bool,
        input: Option<PathBuf>,
    },
}

enum Failure {
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Exhausted(_) | Error::ReductionFailed(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<String, Failure> {
        match path {
            Some(p) if p != Path::new("-") => {
                fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
            }
            _ => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Usage(format!("standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    fn points(&mut self, path: Option<&Path>) -> Result<PointConfig, Failure> {
        let text = self.read(path)?;
        parse_pointset(&text).map_err(|e| Failure::Usage(format!("{}: {e}", describe(path))))
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("standard output: {e}")))
    }
}

fn describe(path: Option<&Path>) -> String {
    path.map_or_else(|| "standard input".into(), |p| p.display().to_string())
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct GpReport {
    general_position: bool,
    violation: Option<Vec<usize>>,
}

fn execute(cli: Cli, io: &mut Io) -> Result<i32, Failure> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.command {
        Command::Gen {
            seed,
            count,
            dim,
            denom,
            output,
        } => {
            let c = generate_instance(seed, count, dim, denom)?;
            let text = serialize_pointset(&c);
            match output {
                Some(p) => write_file(&p, &text)?,
                None => io.emit(&text)?,
            }
            Ok(EXIT_OK)
        }
        Command::GpCheck { input } => {
            let c = io.points(input.as_deref())?;
            let violation = general_position_violation(&c);
            let report = GpReport {
                general_position: violation.is_none(),
                violation,
            };
            io.emit(&to_json(&report))?;
            Ok(if report.general_position { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Tverberg { action } => match action {
            TverbergAction::Find { input } => {
                let c = io.points(input.as_deref())?;
                let w = find_tverberg3(&c)?;
                io.emit(&to_json(&WitnessDocument::from_tverberg(&w)))?;
                Ok(EXIT_OK)
            }
            TverbergAction::Oracle { input } => {
                let c = io.points(input.as_deref())?;
                let all: Vec<WitnessDocument> = brute_force_all(&c)?
                    .into_iter()
                    .map(|(parts, cert)| WitnessDocument::from_tverberg(&TverbergWitness { parts, cert }))
                    .collect();
                io.emit(&to_json(&all))?;
                Ok(if all.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
            }
        },
        Command::Vkf {
            action: VkfAction::Find { k, fast, input },
        } => {
            let c = io.points(input.as_deref())?;
            let mode = if fast { ScanMode::Fast } else { ScanMode::Canonical };
            let w = find_vkf3(&c, k, mode)?;
            io.emit(&to_json(&WitnessDocument::from_vkf(&w)))?;
            Ok(EXIT_OK)
        }
        Command::Reduce {
            k,
            retries,
            trace,
            fast,
            avoid_apex,
            input,
        } => {
            let c = io.points(input.as_deref())?;
            let opts = ReductionOptions {
                retries,
                scan: if fast { ScanMode::Fast } else { ScanMode::Canonical },
                avoid_apex,
                ..Default::default()
            };
            let t = run_reduction(&c, k, &opts)?;
            if let Some(p) = trace {
                write_file(&p, &to_json(&WitnessDocument::from_trace(&t)))?;
            }
            io.emit(&to_json(&WitnessDocument::from_tverberg(&t.final_witness)))?;
            Ok(EXIT_OK)
        }
        Command::Verify { points, witness } => {
            let c = io.points(Some(&points))?;
            let text = io.read(witness.as_deref())?;
            let doc = parse_witness(&text).map_err(|e| Failure::Usage(format!("{}: {e}", describe(witness.as_deref()))))?;
            match doc.verify(&c) {
                Ok(true) => {
                    io.emit("verified\n")?;
                    Ok(EXIT_OK)
                }
                Ok(false) => Err(Failure::Negative("witness does not verify".into())),
                Err(e) => Err(Failure::Usage(format!("{}: {e}", describe(witness.as_deref())))),
            }
        }
        Command::Render { svg: out, witness, input } => {
            let c = io.points(input.as_deref())?;
            let doc = match witness {
                Some(p) => {
                    let text = io.read(Some(&p))?;
                    let doc = parse_witness(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    Some(doc.certificate().map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?)
                }
                None => None,
            };
            let drawing = svg::render(&c, doc.as_ref().map(|(p, c)| (p, c))).map_err(Failure::Usage)?;
            write_file(&out, &drawing)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(cli, &mut io) {
        Ok(code) => code,
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(stderr, "tverberg: {msg}");
            EXIT_NEGATIVE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "tverberg: {msg}");
            EXIT_USAGE
        }
    }
}
