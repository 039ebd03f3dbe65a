//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 counterexample, 2 usage or input error,
//! 3 macrostate cap reached.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sccdet_core::generate::{gen_family_an, gen_random_nba};
use sccdet_core::lasso::{bounded_equiv, det_accepts, nba_accepts};
use sccdet_core::rabin::{rabin_pairs, to_rabin};
use sccdet_core::{
    build_dela, classify, decompose, ColorLayout, Dela, Error, LassoWord, Nba, Options,
};

use crate::hoa::{self, HoaDocument, HoaError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sccdet",
    version,
    about = "Determinize Büchi automata into Emerson-Lei automata, SCC by SCC"
)]
pub struct Cli {
    /// Print extra diagnostics on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AcceptanceMode {
    Ela,
    Rabin,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinize an HOA Büchi automaton.
    Determinize {
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = AcceptanceMode::Ela)]
        acceptance: AcceptanceMode,
        #[arg(long, env = "SCCDET_MAX_STATES", default_value_t = 1_000_000,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_states: u64,
        /// Also write the transition graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the SCCs of an HOA Büchi automaton with their kinds.
    Classify { input: Option<PathBuf> },
    /// Rewrite a determinized automaton with Rabin acceptance.
    ToRabin {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide membership of the lasso word stem·cycle^ω.
    Member {
        input: PathBuf,
        /// Letters of the stem, comma or space separated.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        stem: String,
        #[arg(long)]
        cycle: String,
    },
    /// Compare an automaton and its determinization on all bounded lasso words.
    DiffCheck {
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        stem_max: usize,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        cycle_max: u64,
        /// Deterministic automaton to compare against instead of building one.
        #[arg(long)]
        against: Option<PathBuf>,
        #[arg(long, env = "SCCDET_MAX_STATES", default_value_t = 1_000_000,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_states: u64,
    },
    /// Emit generated automata as HOA.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Family with n singleton DACs over letters 0..=n.
    FamilyAn {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=15))]
        n: u64,
    },
    /// Seeded random complete automaton.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        states: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=65536))]
        letters: u64,
        #[arg(long, default_value_t = 1.5)]
        density: f64,
        #[arg(long, default_value_t = 0.3)]
        accepting: f64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Hoa(#[from] HoaError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Counterexample(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Counterexample(_) => EXIT_COUNTEREXAMPLE,
            CliError::Core(Error::MacrostateCap { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    verbose: u8,
}

impl Io<'_> {
    fn read_input(&mut self, path: Option<&Path>) -> Result<String, CliError> {
        match path {
            Some(p) if p != Path::new("-") => {
                fs::read_to_string(p).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                })
            }
            _ => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|source| CliError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Ok(text)
            }
        }
    }

    fn write_output(&mut self, path: Option<&Path>, text: &str) -> Result<(), CliError> {
        match path {
            Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            }),
            _ => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                }),
        }
    }

    fn note(&mut self, msg: std::fmt::Arguments<'_>) {
        let _ = writeln!(self.stderr, "{msg}");
    }
}

/// Runs the CLI on `args` (including the program name) with process stdio.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (stdin, stdout, stderr) = (std::io::stdin(), std::io::stdout(), std::io::stderr());
    run_with(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

pub fn run_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
        verbose: cli.verbose,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            io.note(format_args!("sccdet: {e}"));
            e.exit_code()
        }
    }
}

fn read_nba(io: &mut Io<'_>, path: Option<&Path>) -> Result<(Nba, HoaDocument), CliError> {
    let doc = hoa::parse_hoa(&io.read_input(path)?)?;
    Ok((hoa::to_nba(&doc)?, doc))
}

fn parse_letters(text: &str, alphabet_size: usize, what: &str) -> Result<Vec<u32>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<u32>() {
            Ok(a) if (a as usize) < alphabet_size => Ok(a),
            _ => Err(CliError::Usage(format!(
                "{what}: `{s}` is not a letter below {alphabet_size}"
            ))),
        })
        .collect()
}

fn format_word(w: &LassoWord) -> String {
    let show = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    format!("stem=[{}] cycle=[{}]", show(w.stem()), show(w.cycle()))
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), CliError> {
    match command {
        Command::Determinize {
            input,
            output,
            acceptance,
            max_states,
            dot,
        } => {
            let (nba, doc) = read_nba(io, input.as_deref())?;
            let aps = doc.aps;
            let started = Instant::now();
            let det = build_dela(
                &nba,
                &Options {
                    max_states: max_states as usize,
                },
            )?;
            let (dela, acc_name) = match acceptance {
                AcceptanceMode::Ela => (det.dela, None),
                AcceptanceMode::Rabin => {
                    let r = to_rabin(&det.dela, &det.layout)?;
                    let name = format!("Rabin {}", rabin_pairs(&r).len());
                    (r, Some(name))
                }
            };
            let elapsed = started.elapsed().as_millis();
            if io.verbose > 0 {
                let cls = &det.classification;
                io.note(format_args!(
                    "weak={} dacs={} nacs={}",
                    cls.weak.len(),
                    cls.dacs.len(),
                    cls.nacs.len()
                ));
            }
            io.note(format_args!(
                "states={} colors={} time_ms={}",
                dela.state_count, dela.color_count, elapsed
            ));
            if let Some(path) = dot {
                let text = hoa::dela_to_dot(&dela, &aps)?;
                fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            let text = hoa::serialize_dela(&dela, &aps, acc_name.as_deref())?;
            io.write_output(output.as_deref(), &text)
        }
        Command::Classify { input } => {
            let (nba, _) = read_nba(io, input.as_deref())?;
            let cls = classify(&nba, decompose(&nba));
            let mut text = String::new();
            for (id, (scc, kind)) in cls.sccs.iter().zip(&cls.kinds).enumerate() {
                text.push_str(&format!("SCC {id} {kind} {}\n", scc.len()));
            }
            io.write_output(None, &text)
        }
        Command::ToRabin { input, output } => {
            let doc = hoa::parse_hoa(&io.read_input(input.as_deref())?)?;
            let dela = hoa::to_dela(&doc)?;
            let layout = ColorLayout::from_acceptance(&dela.acceptance, dela.color_count)?;
            let r = to_rabin(&dela, &layout)?;
            let name = format!("Rabin {}", rabin_pairs(&r).len());
            let text = hoa::serialize_dela(&r, &doc.aps, Some(&name))?;
            io.write_output(output.as_deref(), &text)
        }
        Command::Member { input, stem, cycle } => {
            let doc = hoa::parse_hoa(&io.read_input(Some(&input))?)?;
            let alphabet = hoa::explicit_alphabet(&doc)?.alphabet_size;
            let stem = parse_letters(&stem, alphabet, "--stem")?;
            let cycle = parse_letters(&cycle, alphabet, "--cycle")?;
            let w = LassoWord::new(stem, cycle)
                .map_err(|_| CliError::Usage("--cycle must be nonempty".into()))?;
            let accepted = if hoa::is_buchi(&doc) {
                nba_accepts(&hoa::to_nba(&doc)?, &w)
            } else {
                det_accepts(&hoa::to_dela(&doc)?, &w)
            };
            io.write_output(None, if accepted { "accepted\n" } else { "rejected\n" })
        }
        Command::DiffCheck {
            input,
            stem_max,
            cycle_max,
            against,
            max_states,
        } => {
            let (nba, _) = read_nba(io, Some(&input))?;
            let dela: Dela = match against {
                Some(path) => {
                    let doc = hoa::parse_hoa(&io.read_input(Some(&path))?)?;
                    hoa::to_dela(&doc)?
                }
                None => {
                    build_dela(
                        &nba,
                        &Options {
                            max_states: max_states as usize,
                        },
                    )?
                    .dela
                }
            };
            if dela.alphabet_size != nba.alphabet_size() {
                return Err(CliError::Usage("automata have different alphabets".into()));
            }
            match bounded_equiv(&nba, &dela, stem_max, cycle_max as usize) {
                None => {
                    io.note(format_args!(
                        "no counterexample up to stem {stem_max}, cycle {cycle_max}"
                    ));
                    Ok(())
                }
                Some(w) => {
                    let verdict = nba_accepts(&nba, &w);
                    Err(CliError::Counterexample(format!(
                        "counterexample {}: nondeterministic {}, deterministic {}",
                        format_word(&w),
                        verdict,
                        !verdict
                    )))
                }
            }
        }
        Command::Gen { family, output } => {
            let nba = match family {
                GenCommand::FamilyAn { n } => gen_family_an(n as usize),
                GenCommand::Random {
                    seed,
                    states,
                    letters,
                    density,
                    accepting,
                } => {
                    if !(0.0..=1.0).contains(&accepting) || density.is_nan() || density < 0.0 {
                        return Err(CliError::Usage(
                            "densities must be nonnegative, --accepting at most 1".into(),
                        ));
                    }
                    gen_random_nba(seed, states as usize, letters as usize, density, accepting)
                }
            };
            let padded = nba.pad_alphabet(nba.alphabet_size().next_power_of_two(), 0);
            let aps = hoa::default_aps(padded.alphabet_size())?;
            let text = hoa::serialize_nba(&padded, &aps)?;
            io.write_output(output.as_deref(), &text)
        }
    }
}
