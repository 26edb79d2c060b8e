//! Command-line front end.
//!
//! Exit codes are part of the interface:
//!
//! * `solve`: 0 feasible, 1 infeasible.
//! * `check`: 0 certificate valid, 1 certificate invalid.
//! * `gen`: 0 on success.
//! * `sweep`: 0 when no disagreements were found, 1 otherwise.
//! * any command: 2 on usage, parse, I/O or internal errors.
//!
//! Only the artifact (verdict, instance, report) goes to standard output;
//! diagnostics go to standard error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::Rational;
use crate::decide::{
    decide_feasibility, verify_farkas, verify_feasible_point, Certificate, Status,
};
use crate::error::Error;
use crate::io::{
    parse_certificate, parse_instance, render_certificate, render_instance, render_verdict,
    VerdictFormat,
};
use crate::oracle::{
    exhaustive_small_check, gen_instance, random_agreement_check, GeneratorConfig, Plant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polyfeas",
    version,
    about = "Decide feasibility of Ax >= b exactly, with checkable certificates",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlantArg {
    None,
    Feasible,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance file ('-' for standard input).
    Solve {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Also write the certificate line to this file.
        #[arg(long, value_name = "PATH")]
        cert_out: Option<PathBuf>,
    },
    /// Verify a witness or Farkas certificate against an instance without solving.
    Check {
        instance: String,
        certificate: String,
    },
    /// Print a generated instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = -9)]
        num_min: i64,
        #[arg(long, default_value_t = 9)]
        num_max: i64,
        #[arg(long, default_value_t = 1)]
        den_min: i64,
        #[arg(long, default_value_t = 4)]
        den_max: i64,
        #[arg(long, value_enum, default_value_t = PlantArg::None)]
        plant: PlantArg,
    },
    /// Compare the solver against the Fourier-Motzkin oracle.
    ///
    /// Without --random, enumerates every instance with entries from
    /// --entries up to --max-m x --max-n.
    Sweep {
        #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1")]
        entries: String,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        /// Number of generated instances to check instead of enumerating.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Failure that maps to exit code 2.
struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string())
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Vec<u8>, Fail> {
    let mut buf = Vec::new();
    if path == "-" {
        stdin
            .read_to_end(&mut buf)
            .map_err(|e| Fail(format!("reading standard input: {e}")))?;
    } else {
        buf = std::fs::read(path).map_err(|e| Fail(format!("reading {path}: {e}")))?;
    }
    Ok(buf)
}

fn parse_from(path: &str, stdin: &mut dyn Read) -> Result<crate::model::FeasibilityInstance, Fail> {
    let bytes = read_input(path, stdin)?;
    parse_instance(&bytes).map_err(|e| Fail(format!("{path}: {e}")))
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(
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
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_ERROR
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok((code, output)) => match stdout
            .write_all(output.as_bytes())
            .and_then(|_| stdout.flush())
        {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "polyfeas: writing output: {e}");
                EXIT_ERROR
            }
        },
        Err(Fail(msg)) => {
            let _ = writeln!(stderr, "polyfeas: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<(i32, String), Fail> {
    match command {
        Command::Solve {
            input,
            format,
            cert_out,
        } => {
            let inst = parse_from(&input, stdin)?;
            let verdict = decide_feasibility(&inst)?;
            if let Some(path) = cert_out {
                std::fs::write(&path, render_certificate(&verdict.certificate))
                    .map_err(|e| Fail(format!("writing {}: {e}", path.display())))?;
            }
            let format = match format {
                OutputFormat::Text => VerdictFormat::Text,
                OutputFormat::Json => VerdictFormat::Json,
            };
            let code = match verdict.status {
                Status::Feasible => EXIT_OK,
                Status::Infeasible => EXIT_NEGATIVE,
            };
            Ok((code, render_verdict(&verdict, format)))
        }
        Command::Check {
            instance,
            certificate,
        } => {
            if instance == "-" && certificate == "-" {
                return Err(Fail("only one input may be standard input".into()));
            }
            let inst = parse_from(&instance, stdin)?;
            let bytes = read_input(&certificate, stdin)?;
            let cert =
                parse_certificate(&bytes).map_err(|e| Fail(format!("{certificate}: {e}")))?;
            let valid = match &cert {
                Certificate::Witness(x) => verify_feasible_point(&inst, x)?,
                Certificate::Farkas(y) => verify_farkas(&inst, y)?,
            };
            let (code, word) = if valid {
                (EXIT_OK, "valid")
            } else {
                (EXIT_NEGATIVE, "invalid")
            };
            Ok((code, format!("{word}\n")))
        }
        Command::Gen {
            seed,
            m,
            n,
            num_min,
            num_max,
            den_min,
            den_max,
            plant,
        } => {
            let cfg = GeneratorConfig {
                seed,
                m,
                n,
                num_min,
                num_max,
                den_min,
                den_max,
                plant: match plant {
                    PlantArg::None => Plant::None,
                    PlantArg::Feasible => Plant::Feasible,
                },
                ..GeneratorConfig::default()
            };
            let inst = gen_instance(&cfg)?;
            Ok((EXIT_OK, render_instance(&inst)))
        }
        Command::Sweep {
            entries,
            max_m,
            max_n,
            random,
            seed,
            m,
            n,
        } => {
            let report = match random {
                Some(count) => {
                    let (Some(m), Some(n)) = (m, n) else {
                        return Err(Fail("--random needs --m and --n".into()));
                    };
                    random_agreement_check(seed, count, m, n)?
                }
                None => {
                    let values = entries
                        .split(',')
                        .map(|t| t.trim().parse::<Rational>())
                        .collect::<Result<Vec<_>, _>>()?;
                    exhaustive_small_check(max_m, max_n, &values)?
                }
            };
            let code = if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok((code, report.render()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["polyfeas"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn solve_from_stdin() {
        let (code, out, err) = call(&["solve"], "polyfeas 1\n1 1\n1\n0\n");
        assert_eq!(
            (code, out.as_str(), err.as_str()),
            (0, "FEASIBLE\nvalue 0\nx 0\n", "")
        );
        let (code, out, _) = call(&["solve", "-"], "polyfeas 1\n2 1\n-1\n1\n0 1\n");
        assert_eq!(
            (code, out.as_str()),
            (1, "INFEASIBLE\nvalue 1\nfarkas 1 1\n")
        );
        let (code, out, _) = call(
            &["solve", "--format", "json"],
            "polyfeas 1\n2 1\n-1\n1\n0 1\n",
        );
        assert_eq!(code, 1);
        assert_eq!(
            out,
            "{\"status\":\"infeasible\",\"optimal_value\":\"1\",\"farkas\":[\"1\",\"1\"]}\n"
        );
    }

    #[test]
    fn solve_malformed() {
        let (code, out, err) = call(&["solve"], "polyfeas 1\n1 1\n1 2\n0\n");
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("line 3, column 3"), "{err}");
    }

    #[test]
    fn gen_validates() {
        let (code, out, err) = call(&["gen", "--m", "0", "--n", "2"], "");
        assert_eq!(code, 2);
        assert!(out.is_empty() && !err.is_empty());
        let (code, _, _) = call(
            &[
                "gen",
                "--m",
                "2",
                "--n",
                "2",
                "--num-min",
                "-1",
                "--num-max",
                "-2",
            ],
            "",
        );
        assert_eq!(code, 2);
    }

    #[test]
    fn gen_is_deterministic() {
        let a = call(&["gen", "--seed", "7", "--m", "2", "--n", "2"], "");
        let b = call(&["gen", "--seed", "7", "--m", "2", "--n", "2"], "");
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
        assert!(a.1.starts_with("polyfeas 1\n2 2\n"));
    }

    #[test]
    fn sweep_modes() {
        let (code, out, _) = call(
            &[
                "sweep",
                "--entries",
                "-1,0,1",
                "--max-m",
                "1",
                "--max-n",
                "1",
            ],
            "",
        );
        assert_eq!((code, out.as_str()), (0, "checked=9 disagreements=0\n"));
        let (code, out, _) = call(
            &[
                "sweep", "--random", "20", "--seed", "1", "--m", "3", "--n", "2",
            ],
            "",
        );
        assert_eq!((code, out.as_str()), (0, "checked=20 disagreements=0\n"));
        assert_eq!(
            call(&["sweep", "--random", "5", "--m", "2", "--n", "9"], "").0,
            2
        );
        assert_eq!(call(&["sweep", "--random", "5"], "").0, 2);
        assert_eq!(call(&["sweep", "--entries", "1,x"], "").0, 2);
        assert_eq!(call(&["sweep", "--max-n", "9"], "").0, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["check", "-", "-"], "").0, 2);
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("solve"));
    }
}
