use std::io::Write;
use std::process::ExitCode;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use killing_lie::geometry::{DEFAULT_SAMPLES, DEFAULT_SEED, SPHERE_FIXTURES};
use killing_lie::{parse_algebra, RootKind, Vector};

mod commands;
mod selftest;

#[derive(Parser, Debug)]
#[command(
    name = "killing-lie",
    version,
    about = "Root systems, centralizers and Hermitian pairs of compact simple Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple and positive roots of an algebra.
    Roots {
        #[arg(long, value_parser = algebra)]
        algebra: (RootKind, usize),
    },
    /// Weyl orbit of a Cartan vector.
    Orbit {
        #[command(flatten)]
        target: Target,
        /// Abort when the orbit grows beyond this many points.
        #[arg(long, default_value_t = killing_lie::weyl::DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Eigenvalue levels of ad(Z)^2 on the complement of the centralizer.
    Spectrum(Target),
    /// Decides whether the centralizer of Z gives a Hermitian symmetric pair.
    Classify(Target),
    /// Irreducible summands of m and, for so(2n) and sp(n), commuting units.
    Decompose(Target),
    /// Sampled metric identities for a sphere fixture.
    VerifySphere {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SPHERE_FIXTURES))]
        fixture: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = clap::value_parser!(u64).range(1..).map(|n| n as usize))]
        samples: usize,
        #[arg(long, env = "KILLING_LIE_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Runs the built-in fixture suite.
    Selftest,
}

/// An algebra plus a Cartan vector, given directly or as the generator of a
/// non-compact simple root.
#[derive(Args, Debug)]
struct Target {
    #[arg(long, value_parser = algebra)]
    algebra: (RootKind, usize),
    /// Ambient coordinates, e.g. `1/2,1/2,-1/2,-1/2` or `[[1,2],[1,2],...]`.
    #[arg(long, value_parser = rational_vector, allow_hyphen_values = true, conflicts_with = "noncompact", required_unless_present = "noncompact")]
    z: Option<Vector>,
    /// 1-based index of a non-compact simple root.
    #[arg(long)]
    noncompact: Option<usize>,
}

fn algebra(s: &str) -> Result<(RootKind, usize), String> {
    parse_algebra(s).map_err(|e| e.to_string())
}

fn rational_vector(s: &str) -> Result<Vector, String> {
    Vector::parse(s).map_err(|e| e.to_string())
}

/// Printed output; `ok` is false when a check ran and failed.
pub struct Output {
    pub body: String,
    pub ok: bool,
}

/// A failed command: the offending flag (if any), the message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub flag: Option<&'static str>,
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn flag(flag: &'static str, e: killing_lie::Error) -> Self {
        Failure {
            flag: Some(flag),
            message: e.to_string(),
            code: 2,
        }
    }

    pub fn from_core(e: killing_lie::Error) -> Self {
        let code = match e {
            killing_lie::Error::Parameter(_) | killing_lie::Error::Domain(_) => 2,
            _ => 1,
        };
        Failure {
            flag: None,
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Roots { algebra } => commands::roots(algebra, cli.format),
        Command::Orbit { target, cap } => target
            .resolve()
            .and_then(|r| commands::orbit(&r, cap, cli.format)),
        Command::Spectrum(t) => t.resolve().and_then(|r| commands::spectrum(&r, cli.format)),
        Command::Classify(t) => t.resolve().and_then(|r| commands::classify(&r, cli.format)),
        Command::Decompose(t) => t
            .resolve()
            .and_then(|r| commands::decompose(&r, cli.format)),
        Command::VerifySphere {
            fixture,
            samples,
            seed,
        } => commands::verify_sphere(&fixture, samples, seed, cli.format),
        Command::Selftest => selftest::run(cli.format),
    };
    match result {
        Ok(out) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.body);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(f) => {
            match f.flag {
                Some(flag) => eprintln!("error: invalid value for --{flag}: {}", f.message),
                None => eprintln!("error: {}", f.message),
            }
            ExitCode::from(f.code)
        }
    }
}

impl Target {
    fn resolve(&self) -> Result<commands::Resolved, Failure> {
        commands::Resolved::new(self.algebra, self.z.clone(), self.noncompact)
    }
}
