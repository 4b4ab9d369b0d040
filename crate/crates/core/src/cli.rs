//! Command-line front end.
//!
//! Exit codes: 0 success (or "true" for boolean subcommands), 1 "false",
//! 2 usage error, 3 parse or precondition error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::artin::artin_action;
use crate::artin::classical_equal;
use crate::error::Error;
use crate::moves::{apply_move, enumerate_moves, random_walk, walk_chain, walk_log, WalkPolicy};
use crate::numbering::{integer_numbering, smooth, CrossingKind};
use crate::projection::{classicalize, gauss_project, injectivity_pipeline};
use crate::render::{render_svg, RenderOptions};
use crate::word::{free_reduce, inverse, parse, permutation, BraidWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "vbraid",
    version,
    about = "Virtual braid words: numbering, parity, projection"
)]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Number of strands.
    #[arg(short = 'n', long = "strands")]
    pub strands: usize,

    /// Word tokens (`s1`, `S1`, `t1`); several arguments are joined with spaces.
    #[arg(allow_hyphen_values = false)]
    pub word: Vec<String>,
}

impl WordArgs {
    fn parse(&self) -> Result<BraidWord, Error> {
        parse(&self.word.join(" "), self.strands)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a word and print its canonical spelling.
    Parse(WordArgs),
    /// Inverse word.
    Inverse(WordArgs),
    /// Cancel adjacent inverse pairs.
    Reduce(WordArgs),
    /// Top position reached by each bottom strand.
    Perm(WordArgs),
    /// Integer numbering report.
    Number(WordArgs),
    /// Parity of every classical crossing.
    Parity(WordArgs),
    /// Exit 0 iff the word admits an Alexander numbering.
    AlmostClassical(WordArgs),
    /// Oriented smoothing of one classical crossing.
    Smooth {
        #[command(flatten)]
        word: WordArgs,
        /// Letter position (0-based).
        #[arg(long)]
        letter: usize,
    },
    /// List every applicable move and its result.
    Moves(WordArgs),
    /// Gaussian projection.
    Project {
        #[command(flatten)]
        word: WordArgs,
        /// Also print each round.
        #[arg(long)]
        trace: bool,
    },
    /// Remove virtual crossings of an almost classical word.
    Classicalize(WordArgs),
    /// Images of the free generators under the Artin action.
    Artin(WordArgs),
    /// Exit 0 iff two classical words are equal in the braid group.
    Equal {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        first: String,
        second: String,
    },
    /// Run the projection pipeline over a chain file (JSON lines; `-` for stdin).
    Pipeline {
        #[arg(short = 'n', long = "strands")]
        strands: usize,
        file: PathBuf,
    },
    /// Random move walk from a classical word, checked by the pipeline.
    Fuzz {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Independent walks with seeds `seed, seed + 1, …`; prints one verdict per trial.
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = WalkPolicy::default().insertion_weight)]
        insertion_weight: u32,
        #[arg(long, default_value_t = WalkPolicy::default().pattern_weight)]
        pattern_weight: u32,
    },
    /// SVG diagram of a word.
    Render {
        #[command(flatten)]
        word: WordArgs,
        /// Label arcs with their integer numbers.
        #[arg(long)]
        numbers: bool,
        /// Write to a file instead of standard output.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdin, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn print_word(out: &mut dyn Write, json: bool, w: &BraidWord) -> std::io::Result<()> {
    if json {
        writeln!(
            out,
            "{}",
            json!({"strands": w.strands(), "word": w.to_string()})
        )
    } else {
        writeln!(out, "{w}")
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Parse(args) => {
            print_word(out, json, &args.parse()?)?;
        }
        Command::Inverse(args) => {
            print_word(out, json, &inverse(&args.parse()?))?;
        }
        Command::Reduce(args) => {
            print_word(out, json, &free_reduce(&args.parse()?))?;
        }
        Command::Perm(args) => {
            let p = permutation(&args.parse()?);
            if json {
                writeln!(out, "{}", json!({"strands": p.len(), "images": p.images()}))?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Number(args) => {
            let w = args.parse()?;
            let numbering = integer_numbering(&w);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&numbering.report()).expect("serializable")
                )?;
            } else {
                for (c, letter) in numbering.crossings.iter().zip(w.letters()) {
                    match c.kind {
                        CrossingKind::Classical { lambda, mu, .. } => writeln!(
                            out,
                            "{}: {letter} lambda={lambda} mu={mu} {}",
                            c.word_index,
                            if c.parity() == Some(crate::numbering::Parity::Even) {
                                "even"
                            } else {
                                "odd"
                            }
                        )?,
                        CrossingKind::Virtual => {
                            writeln!(out, "{}: {letter} virtual", c.word_index)?
                        }
                    }
                }
                writeln!(out, "top strands: {}", join(&numbering.top_strands))?;
                writeln!(out, "top numbers: {}", join(&numbering.top_numbers))?;
            }
        }
        Command::Parity(args) => {
            let parities = integer_numbering(&args.parse()?).parities();
            if json {
                let entries: Vec<_> = parities
                    .iter()
                    .map(|(k, p)| json!({"index": k, "parity": p}))
                    .collect();
                writeln!(out, "{}", serde_json::Value::Array(entries))?;
            } else {
                for (k, p) in parities {
                    writeln!(
                        out,
                        "{k} {}",
                        if p == crate::numbering::Parity::Even {
                            "even"
                        } else {
                            "odd"
                        }
                    )?;
                }
            }
        }
        Command::AlmostClassical(args) => {
            let odd = integer_numbering(&args.parse()?).odd_letters();
            let yes = odd.is_empty();
            if json {
                writeln!(out, "{}", json!({"almost_classical": yes, "odd": odd}))?;
            } else if yes {
                writeln!(out, "almost classical")?;
            } else {
                writeln!(out, "odd crossings at letters {}", join_with(&odd, ","))?;
            }
            return Ok(if yes { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Smooth { word, letter } => {
            print_word(out, json, &smooth(&word.parse()?, *letter)?)?;
        }
        Command::Moves(args) => {
            let w = args.parse()?;
            for m in enumerate_moves(&w) {
                let next = apply_move(&w, &m)?;
                if json {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "kind": m.kind,
                            "site": m.site,
                            "direction": m.direction,
                            "payload": m.payload.map(|p| p.to_string()),
                            "word": next.to_string(),
                        })
                    )?;
                } else {
                    writeln!(out, "{m} -> {next}")?;
                }
            }
        }
        Command::Project { word, trace } => {
            let t = gauss_project(&word.parse()?);
            if json {
                let rounds: Vec<_> = t
                    .rounds
                    .iter()
                    .map(|r| json!({"input": r.input.to_string(), "virtualized": r.virtualized}))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({"strands": t.result.strands(), "result": t.result.to_string(), "rounds": rounds})
                )?;
            } else {
                if *trace {
                    for (k, r) in t.rounds.iter().enumerate() {
                        writeln!(
                            out,
                            "round {}: {} -> virtualized {}",
                            k + 1,
                            r.input,
                            join_with(&r.virtualized, ",")
                        )?;
                    }
                }
                writeln!(out, "{}", t.result)?;
            }
        }
        Command::Classicalize(args) => {
            print_word(out, json, &classicalize(&args.parse()?)?)?;
        }
        Command::Artin(args) => {
            let e = artin_action(&args.parse()?)?;
            if json {
                writeln!(out, "{}", json!({"strands": e.rank(), "images": e.images}))?;
            } else {
                for l in e.lines() {
                    writeln!(out, "{l}")?;
                }
            }
        }
        Command::Equal {
            strands,
            first,
            second,
        } => {
            let (a, b) = (parse(first, *strands)?, parse(second, *strands)?);
            let eq = classical_equal(&a, &b)?;
            if json {
                writeln!(out, "{}", json!({"equal": eq}))?;
            } else {
                writeln!(out, "{}", if eq { "equal" } else { "not equal" })?;
            }
            return Ok(if eq { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Pipeline { strands, file } => {
            let mut text = String::new();
            if file.as_os_str() == "-" {
                stdin.read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(file)?;
            }
            let chain = parse_chain(&text, *strands)?;
            let report = injectivity_pipeline(&chain)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&report.json()).expect("serializable")
                )?;
            } else {
                for (k, w) in report.classical_chain.iter().enumerate() {
                    writeln!(out, "{k}: {w}")?;
                }
                match report.first_failure {
                    None => writeln!(out, "equal")?,
                    Some(k) => writeln!(out, "not equal at {k}")?,
                }
            }
            return Ok(if report.equal { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Fuzz {
            word,
            steps,
            seed,
            trials,
            insertion_weight,
            pattern_weight,
        } => {
            let start = word.parse()?;
            if !start.is_classical() {
                return Err(Error::ChainStartNotClassical.into());
            }
            let policy = WalkPolicy {
                insertion_weight: *insertion_weight,
                pattern_weight: *pattern_weight,
            };
            let mut all_equal = true;
            for trial in 0..*trials {
                let trial_seed = seed.wrapping_add(trial);
                let walk = random_walk(&start, *steps, trial_seed, policy);
                let report = injectivity_pipeline(&walk_chain(&start, &walk))?;
                all_equal &= report.equal;
                if *trials == 1 {
                    for entry in walk_log(&start, &walk) {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(&entry).expect("serializable")
                        )?;
                    }
                    let verdict = json!({
                        "seed": trial_seed,
                        "steps": walk.len(),
                        "equal": report.equal,
                        "first_failure": report.first_failure,
                        "classical_end": report.classical_chain.last().map(|w| w.to_string()),
                    });
                    writeln!(err, "{verdict}")?;
                } else {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "trial": trial,
                            "seed": trial_seed,
                            "steps": walk.len(),
                            "equal": report.equal,
                            "first_failure": report.first_failure,
                        })
                    )?;
                }
            }
            return Ok(if all_equal { EXIT_OK } else { EXIT_FALSE });
        }
        Command::Render {
            word,
            numbers,
            output,
        } => {
            let svg = render_svg(&word.parse()?, RenderOptions { numbers: *numbers });
            match output {
                Some(path) => std::fs::write(path, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    join_with(items, " ")
}

fn join_with<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Reads a chain file: one word per line, either a JSON string, a JSON object
/// with a `word` field (walk logs), or a bare word. Blank lines are skipped.
pub fn parse_chain(text: &str, strands: usize) -> Result<Vec<BraidWord>, Error> {
    let mut chain = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let trimmed = line.trim();
        let line_start = offset;
        offset += line.len() + 1;
        if trimmed.is_empty() {
            continue;
        }
        let spelled = if trimmed.starts_with('{') || trimmed.starts_with('"') {
            let value: serde_json::Value =
                serde_json::from_str(trimmed).map_err(|e| Error::Syntax {
                    position: line_start,
                    message: format!("invalid JSON line: {e}"),
                })?;
            match value {
                serde_json::Value::String(s) => s,
                serde_json::Value::Object(ref map) => match map.get("word") {
                    Some(serde_json::Value::String(s)) => s.clone(),
                    _ => {
                        return Err(Error::Syntax {
                            position: line_start,
                            message: "JSON object without a string `word` field".into(),
                        })
                    }
                },
                _ => unreachable!("line starts with `{{` or `\"`"),
            }
        } else {
            trimmed.to_string()
        };
        chain.push(parse(&spelled, strands)?);
    }
    Ok(chain)
}
