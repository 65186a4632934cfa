//! Command-line front end (`hhwreath`).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::betti::{AlgebraPreset, BettiTable};
use crate::cherednik::{normal_order, parse_word};
use crate::error::{Error, Result};
use crate::presets::{emit_report, emit_series, emit_table, load_preset, Format, Report};
use crate::verify;
use crate::wreath::{deformation_parameter_count, generating_series_product, hh_cohomology_wreath, hilb_poincare};

#[derive(Parser, Debug)]
#[command(name = "hhwreath", version, about = "Hochschild (co)homology of wreath-product algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Plain,
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Plain => Format::Plain,
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Wreath,
    Bruteforce,
    Koszul,
    Cherednik,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generating series Σ qⁿ P(HH^*(A(n))) as a truncated product.
    Series {
        /// builtin name, gamma:<classes>, inline JSON or a .json file
        #[arg(long)]
        preset: String,
        /// type B uses the Z₂ crossed product of the rank-one preset
        #[arg(long, value_enum, ignore_case = true, default_value = "a")]
        group: Group,
        #[arg(long, default_value_t = 4)]
        max_q: usize,
        #[arg(long, default_value_t = 8)]
        max_t: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutFormat,
    },
    /// Betti table of HH^*(ℚ[S_n] ⋉ A^⊗n).
    Betti {
        #[arg(long)]
        preset: String,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutFormat,
    },
    /// Poincaré polynomial of the n-th symmetric power of a surface-like table.
    Hilb {
        /// comma-separated b0,b1,b2
        #[arg(long)]
        betti: String,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutFormat,
    },
    /// Number of deformation parameters dim HH²(A(n)).
    Deform {
        #[arg(long)]
        preset: String,
        #[arg(short)]
        n: usize,
    },
    /// Rational Cherednik algebra A(n, k).
    Cherednik {
        #[command(subcommand)]
        action: CherednikAction,
    },
    /// Run verification suites; exit status 1 if any check fails.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutFormat,
    },
}

#[derive(Subcommand, Debug)]
enum CherednikAction {
    /// Normal form of a word such as "p1 x1".
    Reduce {
        #[arg(short)]
        n: usize,
        word: String,
    },
    /// Confluence, PBW and specialization checks.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutFormat,
    },
}

fn preset_for_group(name: &str, group: Group) -> Result<AlgebraPreset> {
    match group {
        Group::A => load_preset(name),
        Group::B => match name {
            "weyl" | "trig" | "qweyl" => load_preset(&format!("z2_{name}")),
            n if n.starts_with("z2_") => load_preset(n),
            _ => Err(Error::UnknownPreset(format!("{name} (type B needs weyl, trig or qweyl)"))),
        },
    }
}

fn parse_betti_list(s: &str) -> Result<BettiTable> {
    let dims: Vec<u64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad Betti number {x:?}"))))
        .collect::<Result<_>>()?;
    Ok(BettiTable::from_dense(&dims))
}

enum Outcome {
    Text(String),
    Reports(Vec<Report>, Format),
}

fn execute(cmd: Command) -> Result<Outcome> {
    Ok(match cmd {
        Command::Series { preset, group, max_q, max_t, format } => {
            let p = preset_for_group(&preset, group)?;
            let s = generating_series_product(&p.betti, p.d, max_q, max_t)?;
            Outcome::Text(emit_series(&s, format.into()))
        }
        Command::Betti { preset, n, format } => {
            let p = load_preset(&preset)?;
            Outcome::Text(emit_table(&hh_cohomology_wreath(&p.betti, p.d, n)?, format.into()))
        }
        Command::Hilb { betti, n, format } => {
            let t = BettiTable::from_dense(&hilb_poincare(&parse_betti_list(&betti)?, n)?);
            Outcome::Text(emit_table(&t, format.into()))
        }
        Command::Deform { preset, n } => {
            let p = load_preset(&preset)?;
            Outcome::Text(format!("{}\n", deformation_parameter_count(&p.betti, p.d, n)?))
        }
        Command::Cherednik { action: CherednikAction::Reduce { n, word } } => {
            let w = parse_word(&word, n)?;
            Outcome::Text(format!("{}\n", normal_order(&w, n)?))
        }
        Command::Cherednik { action: CherednikAction::Verify { seed, format } } => {
            Outcome::Reports(vec![verify::cherednik_suite(seed)], format.into())
        }
        Command::Verify { suite, seed, format } => {
            let reports = match suite {
                Suite::All => verify::all_suites(seed),
                Suite::Wreath => vec![verify::wreath_suite(seed)],
                Suite::Bruteforce => vec![verify::bruteforce_suite(seed)],
                Suite::Koszul => vec![verify::koszul_suite()],
                Suite::Cherednik => vec![verify::cherednik_suite(seed)],
            };
            Outcome::Reports(reports, format.into())
        }
    })
}

/// Runs the CLI and returns the process exit code: 0 on success, 1 if a
/// verification fails, 2 on a usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Text(s)) => {
            let _ = write!(out, "{s}");
            0
        }
        Ok(Outcome::Reports(reports, format)) => {
            let passed = reports.iter().all(Report::passed);
            for r in &reports {
                let _ = write!(out, "{}", emit_report(r, format));
            }
            if passed {
                0
            } else {
                let _ = writeln!(err, "verification failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
