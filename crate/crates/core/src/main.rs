use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use geoprove::algebra::{AssignOptions, PinAxis, Pinning};
use geoprove::proof::{NdgMode, Verdict};
use geoprove::protocol::Label;
use geoprove::report::{bench, prove_source, read_corpus, BenchRow, MethodChoice, ProveOptions};

#[derive(Parser)]
#[command(name = "geoprove", version, about = "Algebraic prover for constructive plane geometry")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Wu,
    Groebner,
}

#[derive(Clone, Copy, ValueEnum)]
enum NdgArg {
    None,
    Side,
    Wu,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    X,
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Prove the conjecture in a protocol file.
    Prove {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "wu")]
        method: MethodArg,
        /// Points to pin, `P1,P2`, or `none`. Default: the two most referenced.
        #[arg(long)]
        pin: Option<String>,
        #[arg(long, value_enum, default_value = "y")]
        pin_axis: AxisArg,
        /// Which NDGs the Groebner method may assume.
        #[arg(long, value_enum, default_value = "wu")]
        ndg_mode: NdgArg,
        #[arg(long, value_enum, default_value = "text")]
        report: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        verify_certificate: bool,
    },
    /// Prove every `.gp` file of a directory and tabulate the timings.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "wu")]
        method: MethodArg,
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

const EXIT_INPUT: u8 = 3;

fn method(m: MethodArg) -> MethodChoice {
    match m {
        MethodArg::Wu => MethodChoice::Wu,
        MethodArg::Groebner => MethodChoice::Groebner,
    }
}

fn timeout(t: Option<f64>) -> Result<Option<Duration>, String> {
    t.map(|s| Duration::try_from_secs_f64(s).map_err(|e| format!("bad --timeout: {e}"))).transpose()
}

fn pinning(s: Option<&str>) -> Pinning {
    match s {
        None => Pinning::Auto,
        Some("none") => Pinning::None,
        Some(list) => Pinning::Labels(list.split(',').map(|l| Label::new(l.trim())).collect()),
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Prove { file, method: m, pin, pin_axis, ndg_mode, report, out, timeout: t, verify_certificate } => {
            let src = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let opts = ProveOptions {
                method: method(m),
                ndg_mode: match ndg_mode {
                    NdgArg::None => NdgMode::None,
                    NdgArg::Side => NdgMode::Side,
                    NdgArg::Wu => NdgMode::Wu,
                },
                assign: AssignOptions {
                    pinning: pinning(pin.as_deref()),
                    axis: match pin_axis {
                        AxisArg::X => PinAxis::X,
                        AxisArg::Y => PinAxis::Y,
                    },
                },
                timeout: timeout(t)?,
                verify_certificate,
            };
            let r = prove_source(&src, &opts).map_err(|e| format!("{}: {e}", file.display()))?;
            let doc = match report {
                Format::Text => r.to_text(),
                Format::Json => r.to_json() + "\n",
            };
            match out {
                Some(p) => std::fs::write(&p, doc).map_err(|e| format!("{}: {e}", p.display()))?,
                None => print!("{doc}"),
            }
            if r.certificate_verified == Some(false) {
                eprintln!("certificate replay failed");
                return Ok(1);
            }
            Ok(match r.result.verdict {
                Verdict::Proved => 0,
                Verdict::NotProved { .. } | Verdict::Inconsistent => 1,
                Verdict::Timeout { .. } => 2,
            })
        }
        Cmd::Bench { dir, method: m, timeout: t, csv } => {
            let entries = read_corpus(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            let opts = ProveOptions { method: method(m), timeout: timeout(t)?, ..ProveOptions::default() };
            let rows = bench(&entries, &opts);
            print!("{}", BenchRow::to_table(&rows));
            if let Some(p) = csv {
                std::fs::write(&p, BenchRow::to_csv(&rows)).map_err(|e| format!("{}: {e}", p.display()))?;
            }
            Ok(if rows.iter().all(|r| r.verdict == "proved") { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
