//! `sylkac`: spectra, characteristic polynomials, eigenvector certificates,
//! verification, and benchmarks for the Sylvester-Kac and biogeography
//! matrix families.
//!
//! Exit statuses: 0 success, 1 verification failure, 2 usage error,
//! 3 size-guard violation. Results go to standard output, diagnostics to
//! standard error.

mod render;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sylkac::{
    bisection_eigenvalues, build_biogeography_report, build_charpoly_report, exact_eigenvector,
    run_bench, run_verification, Eigenpair, Error, MatrixFamily, BISECTION_MAX_N, EIGVEC_MAX_N,
    EXACT_CHARPOLY_MAX_N,
};

/// Inclusive parameter range; a single integer n means n..n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct NRange {
    start: u32,
    end: u32,
}

impl NRange {
    fn single(self) -> Option<u32> {
        (self.start == self.end).then_some(self.start)
    }
}

fn parse_n(s: &str) -> Result<u32, String> {
    let n: u32 = s
        .trim()
        .parse()
        .map_err(|_| format!("invalid matrix parameter `{s}`"))?;
    if n < 1 {
        return Err("matrix parameter n must be at least 1".to_string());
    }
    Ok(n)
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse_n(a)?, parse_n(b)?),
            None => {
                let n = parse_n(s)?;
                (n, n)
            }
        };
        if end < start {
            return Err(format!("range start {start} exceeds end {end}"));
        }
        Ok(NRange { start, end })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Args)]
struct CommonArgs {
    /// Matrix family: kac (Sylvester-Kac) or bio (biogeography)
    #[arg(long, default_value = "bio")]
    matrix: MatrixFamily,

    /// Matrix parameter: a single integer or an inclusive range a..b
    #[arg(long, value_name = "INT|A..B")]
    n: NRange,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Computation route: exact closed forms or floating-point bisection
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,

    /// Bisection tolerance (float mode, verify, and bench)
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Parser)]
#[command(
    name = "sylkac",
    version,
    about = "Exact spectra of the Sylvester-Kac and biogeography matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the selected family
    Spectrum(CommonArgs),
    /// Characteristic polynomial by four independent routes
    Charpoly(CommonArgs),
    /// Exact eigenvector certificates for every closed-form eigenvalue
    Eigvec(CommonArgs),
    /// Cross-route invariant checks over a range of n
    Verify(CommonArgs),
    /// Wall-clock comparison of the eigenvalue routes over a doubling sweep
    Bench(CommonArgs),
}

/// A failed run: what to print on stderr and which status to exit with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeGuard { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn single_n(args: &CommonArgs, command: &str) -> Result<u32, Failure> {
    args.n.single().ok_or_else(|| {
        Failure::usage(format!(
            "{command} takes a single n, got the range {}..{}",
            args.n.start, args.n.end
        ))
    })
}

fn require_exact(args: &CommonArgs, command: &str) -> Result<(), Failure> {
    if args.mode == Mode::Float {
        return Err(Failure::usage(format!(
            "{command} is exact-only; --mode float does not apply"
        )));
    }
    Ok(())
}

fn cmd_spectrum(args: &CommonArgs) -> Result<u8, Failure> {
    let n = single_n(args, "spectrum")?;
    let spectrum = match args.mode {
        Mode::Exact => args.matrix.closed_form_spectrum(n)?,
        Mode::Float => {
            if n > BISECTION_MAX_N {
                return Err(Error::SizeGuard {
                    what: "bisection spectrum",
                    limit: BISECTION_MAX_N,
                    got: n,
                }
                .into());
            }
            bisection_eigenvalues(&args.matrix.matrix(n)?, args.tol)?
        }
    };
    let out = match args.format {
        Format::Json => render::spectrum_json(&spectrum),
        Format::Csv => render::spectrum_csv(&spectrum),
        Format::Text => render::spectrum_text(&spectrum, args.matrix),
    };
    print!("{out}");
    Ok(0)
}

fn cmd_charpoly(args: &CommonArgs) -> Result<u8, Failure> {
    let n = single_n(args, "charpoly")?;
    require_exact(args, "charpoly")?;
    if n > EXACT_CHARPOLY_MAX_N {
        return Err(Error::SizeGuard {
            what: "exact charpoly",
            limit: EXACT_CHARPOLY_MAX_N,
            got: n,
        }
        .into());
    }
    let report = match args.matrix {
        MatrixFamily::SylvesterKac => build_charpoly_report(n)?,
        MatrixFamily::Biogeography => build_biogeography_report(n)?,
    };
    let out = match args.format {
        Format::Json => render::report_json(&report),
        Format::Csv => render::report_csv(&report),
        Format::Text => render::report_text(&report),
    };
    print!("{out}");
    Ok(0)
}

fn cmd_eigvec(args: &CommonArgs) -> Result<u8, Failure> {
    let n = single_n(args, "eigvec")?;
    require_exact(args, "eigvec")?;
    if n > EIGVEC_MAX_N {
        return Err(Error::SizeGuard {
            what: "eigenvector certificates",
            limit: EIGVEC_MAX_N,
            got: n,
        }
        .into());
    }
    let m = args.matrix.matrix(n)?;
    let spectrum = args.matrix.closed_form_spectrum(n)?;
    let pairs: Vec<Eigenpair> = spectrum
        .exact_values()
        .expect("closed forms are exact")
        .iter()
        .map(|lambda| exact_eigenvector(&m, lambda))
        .collect::<Result<_, _>>()?;
    let out = match args.format {
        Format::Json => render::eigenpairs_json(&pairs),
        Format::Csv => render::eigenpairs_csv(&pairs),
        Format::Text => render::eigenpairs_text(&pairs),
    };
    print!("{out}");
    Ok(0)
}

fn cmd_verify(args: &CommonArgs) -> Result<u8, Failure> {
    require_exact(args, "verify")?;
    let summary = run_verification(args.n.start, args.n.end, args.tol)?;
    let out = match args.format {
        Format::Json => render::summary_json(&summary),
        Format::Csv => render::summary_csv(&summary),
        Format::Text => render::summary_text(&summary),
    };
    print!("{out}");
    if summary.all_passed {
        Ok(0)
    } else {
        for check in summary.checks.iter().filter(|c| c.failed > 0) {
            for n in &check.failing_ns {
                eprintln!("verification failed: check {} at n = {}", check.name, n);
            }
        }
        Ok(1)
    }
}

/// n = start, 2*start, 4*start, ... while <= end. A single n stays single.
fn doubling_sweep(range: NRange) -> Vec<u32> {
    let mut ns = Vec::new();
    let mut n = range.start;
    loop {
        ns.push(n);
        match n.checked_mul(2) {
            Some(next) if next <= range.end => n = next,
            _ => break,
        }
    }
    ns
}

fn cmd_bench(args: &CommonArgs) -> Result<u8, Failure> {
    require_exact(args, "bench")?;
    let ns = doubling_sweep(args.n);
    let records = run_bench(args.matrix, &ns, args.tol)?;
    let out = match args.format {
        Format::Json => render::bench_json(&records),
        Format::Csv => render::bench_csv(&records),
        Format::Text => render::bench_text(&records),
    };
    print!("{out}");
    Ok(0)
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(&args),
        Command::Charpoly(args) => cmd_charpoly(&args),
        Command::Eigvec(args) => cmd_eigvec(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!("4".parse(), Ok(NRange { start: 4, end: 4 }));
        assert_eq!("1..12".parse(), Ok(NRange { start: 1, end: 12 }));
        assert_eq!("7..7".parse(), Ok(NRange { start: 7, end: 7 }));
        assert!("0".parse::<NRange>().is_err());
        assert!("5..4".parse::<NRange>().is_err());
        assert!("1..".parse::<NRange>().is_err());
        assert!("..5".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
        assert!("1..2..3".parse::<NRange>().is_err());
    }

    #[test]
    fn doubling_sweep_hits_powers_of_two_times_start() {
        assert_eq!(doubling_sweep(NRange { start: 500, end: 2000 }), [500, 1000, 2000]);
        assert_eq!(doubling_sweep(NRange { start: 1, end: 10 }), [1, 2, 4, 8]);
        assert_eq!(doubling_sweep(NRange { start: 6, end: 6 }), [6]);
    }
}
