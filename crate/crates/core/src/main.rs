use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rsgao::galois::default_primitive_poly;
use rsgao::workbench::blockfile::{parse_hex, to_received, BlockFile};
use rsgao::workbench::{bench, corrupt, selftest, BenchConfig, ChannelSpec};
use rsgao::{Algorithm, CodeParams, Error, EvaluationVector, Field, Message};

/// Reed-Solomon errors-and-erasures workbench.
#[derive(Parser)]
#[command(name = "rsgao", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode messages into a block file.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message symbols, low coefficient first; repeat for several blocks.
        #[arg(long, allow_hyphen_values = true)]
        message: Vec<String>,
        /// File with one message per line (default: stdin when no --message).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Add errors and erasures to every block of a block file.
    Corrupt {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decode every block of a block file and print the messages.
    Decode {
        #[arg(long, default_value = "suggested", value_parser = parse_algorithm)]
        algorithm: Algorithm,
        /// Re-encode each result and reject inconsistent decodes.
        #[arg(long)]
        self_check: bool,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count field operations of every decoder on random corrupted words.
    Bench {
        #[command(flatten)]
        code: CodeArgs,
        /// Errors per trial; random within the decoding radius when omitted.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write mean counts as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run quick radius and oracle checks on small codes.
    Selftest {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Extension degree of GF(2^m).
    #[arg(long)]
    m: Option<u32>,
    /// Block length, 2^m - 1.
    #[arg(long)]
    n: Option<usize>,
    /// Message length.
    #[arg(long)]
    k: usize,
    /// Primitive polynomial in hex; a standard one is used when omitted.
    #[arg(long)]
    prim_poly: Option<String>,
}

#[derive(Args)]
struct ChannelArgs {
    /// Number of random errors.
    #[arg(long, default_value_t = 0)]
    t: usize,
    /// Number of random erasures.
    #[arg(long, default_value_t = 0)]
    l: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Explicit error positions, comma separated (overrides --t).
    #[arg(long, value_delimiter = ',')]
    positions: Option<Vec<usize>>,
    /// Explicit erasure positions, comma separated (overrides --l).
    #[arg(long, value_delimiter = ',')]
    erasure_positions: Option<Vec<usize>>,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, Error> {
        let m = match (self.m, self.n) {
            (Some(m), Some(n)) if (1usize << m.min(31)) - 1 != n => {
                return Err(Error::InvalidParams(format!("n = {n} is not 2^{m} - 1")))
            }
            (Some(m), _) => m,
            (None, Some(n)) if (n + 1).is_power_of_two() => (n + 1).trailing_zeros(),
            (None, Some(n)) => {
                return Err(Error::InvalidParams(format!("n = {n} is not of the form 2^m - 1")))
            }
            (None, None) => return Err(Error::InvalidParams("one of --m or --n is required".into())),
        };
        let poly = match &self.prim_poly {
            Some(text) => parse_hex(text)?,
            None => default_primitive_poly(m).ok_or(Error::UnsupportedDegree(m))?,
        };
        CodeParams::new(Field::new(m, poly)?, self.k)
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(text)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(e.to_string())),
    }
}

fn parse_message(params: &CodeParams, line: &str) -> Result<Message, Error> {
    let values = line
        .split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad symbol {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Message::from_values(params, &values)
}

/// Exit status: 0 ok, 1 decode failure or failed check, 2 bad usage/input.
fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Encode {
            code,
            message,
            input,
            output,
        } => {
            let params = code.params()?;
            let lines: Vec<String> = if message.is_empty() {
                read_input(&input)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(String::from)
                    .collect()
            } else {
                message
            };
            let mut file = BlockFile::new(&params);
            for line in &lines {
                let msg = parse_message(&params, line)?;
                file.push_codeword(&params.encode(&msg)?);
            }
            write_output(&output, &file.render())?;
            Ok(0)
        }
        Command::Corrupt {
            channel,
            input,
            output,
        } => {
            let file = BlockFile::parse(&read_input(&input)?)?;
            let params = file.header.params()?;
            let mut out = BlockFile::new(&params);
            for (i, block) in file.blocks.iter().enumerate() {
                if block.iter().any(Option::is_none) {
                    return Err(Error::Parse(format!("block {} already has erasures", i + 1)));
                }
                let values: Vec<u32> = block.iter().flatten().copied().collect();
                let word = EvaluationVector::from_values(params.field(), &values)?;
                let mut spec =
                    ChannelSpec::random(channel.t, channel.l, channel.seed.wrapping_add(i as u64));
                if let Some(p) = &channel.positions {
                    spec = spec.with_error_positions(p.clone());
                }
                if let Some(p) = &channel.erasure_positions {
                    spec = spec.with_erasure_positions(p.clone());
                }
                out.push_received(&corrupt(&params, &word, &spec)?.received);
            }
            write_output(&output, &out.render())?;
            Ok(0)
        }
        Command::Decode {
            algorithm,
            self_check,
            input,
            output,
        } => {
            let file = BlockFile::parse(&read_input(&input)?)?;
            let params = file.header.params()?.with_self_check(self_check);
            let mut text = String::new();
            let mut failed = false;
            for block in &file.blocks {
                let received = to_received(&params, block)?;
                match params.decode(algorithm, &received) {
                    Ok(dec) => text.push_str(&format!("{}\n", dec.message)),
                    Err(Error::Decode(cause)) => {
                        failed = true;
                        text.push_str(&format!("FAIL {cause}\n"));
                    }
                    Err(e) => return Err(e),
                }
            }
            write_output(&output, &text)?;
            Ok(u8::from(failed))
        }
        Command::Bench {
            code,
            t,
            l,
            trials,
            seed,
            csv,
        } => {
            let params = code.params()?;
            let report = bench(
                &params,
                &BenchConfig {
                    trials,
                    errors: t,
                    erasures: l,
                    seed,
                },
            )?;
            report
                .write_table(io::stdout().lock())
                .map_err(|e| Error::Io(e.to_string()))?;
            if let Some(path) = csv {
                report.write_csv(&path)?;
            }
            let violations = report.claim_violations();
            if violations.is_empty() {
                println!("suggested <= truong on every trial");
                Ok(0)
            } else {
                println!("suggested exceeded truong on {} trials", violations.len());
                Ok(1)
            }
        }
        Command::Selftest { trials, seed } => {
            let checks = selftest::run(trials, seed)?;
            let mut ok = true;
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                ok &= c.passed;
            }
            Ok(u8::from(!ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
