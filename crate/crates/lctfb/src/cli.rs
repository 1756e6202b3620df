//! Command-line front end: `design`, `run`, `spectrum`, `gen`, `verify`.
//!
//! Every command exits 0 only if all requested checks pass their tolerances.
//! Outputs are deterministic: the same flags and files produce byte-identical
//! results.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::bank::{FilterBank, Tolerances, VerificationReport};
use crate::design::design_power_symmetric;
use crate::error::{Error, Result};
use crate::io;
use crate::params::LctParams;
use crate::run::{analysis, generate_multitone, seeded_probe, synthesis, verify_bank};
use crate::signal::Signal;
use crate::transform::{dtlct, FrequencyGrid};

#[derive(Parser)]
#[command(
    name = "lctfb",
    version,
    about = "Two-channel paraunitary filter banks in the discrete-time LCT domain"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Design a prototype, build the bank, verify it, and write bank JSON.
    Design(DesignArgs),
    /// Run a bank over an input signal: sub-bands, reconstruction, report.
    Run(RunArgs),
    /// Evaluate the transform of a signal on a frequency grid.
    Spectrum(SpectrumArgs),
    /// Generate a chirped multitone test signal.
    Gen(GenArgs),
    /// Recheck a bank JSON against its tolerances.
    Verify(VerifyArgs),
}

/// LCT parameters: either --frft-angle or all four of --a --b --c --d.
#[derive(Args)]
struct ParamArgs {
    /// FrFT angle; shorthand for (cos t, sin t, -sin t, cos t).
    #[arg(long, value_name = "RAD", conflicts_with_all = ["a", "b", "c", "d"])]
    frft_angle: Option<f64>,
    /// LCT parameter a.
    #[arg(long, allow_hyphen_values = true, requires_all = ["b", "c", "d"])]
    a: Option<f64>,
    /// LCT parameter b (must be positive).
    #[arg(long, allow_hyphen_values = true, requires_all = ["a", "c", "d"])]
    b: Option<f64>,
    /// LCT parameter c.
    #[arg(long, allow_hyphen_values = true, requires_all = ["a", "b", "d"])]
    c: Option<f64>,
    /// LCT parameter d.
    #[arg(long, allow_hyphen_values = true, requires_all = ["a", "b", "c"])]
    d: Option<f64>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<LctParams> {
        if let Some(angle) = self.frft_angle {
            return LctParams::frft(angle);
        }
        match (self.a, self.b, self.c, self.d) {
            (Some(a), Some(b), Some(c), Some(d)) => LctParams::new(a, b, c, d),
            _ => Err(Error::Usage {
                message: "give either --frft-angle or all of --a --b --c --d".into(),
            }),
        }
    }
}

#[derive(Args)]
struct ToleranceArgs {
    /// Power-symmetry tolerance.
    #[arg(long, default_value_t = 1e-7)]
    ps_tol: f64,
    /// Paraunitarity tolerance.
    #[arg(long, default_value_t = 1e-7)]
    pu_tol: f64,
    /// Perfect-reconstruction tolerance.
    #[arg(long, default_value_t = 1e-7)]
    pr_tol: f64,
}

impl ToleranceArgs {
    fn resolve(&self) -> Tolerances {
        Tolerances {
            power_symmetry: self.ps_tol,
            paraunitarity: self.pu_tol,
            reconstruction: self.pr_tol,
        }
    }
}

#[derive(Args)]
struct DesignArgs {
    /// Half-band order: twice an odd number (14 gives a bank of order 7).
    #[arg(
        long,
        required_unless_present = "prototype",
        conflicts_with = "prototype"
    )]
    order: Option<usize>,
    /// Skip the design step and read prototype coefficients from a
    /// `k,re,im` CSV instead.
    #[arg(long, value_name = "CSV")]
    prototype: Option<PathBuf>,
    /// Also write the (designed or imported) prototype as a `k,re,im` CSV.
    #[arg(long, value_name = "CSV")]
    out_prototype: Option<PathBuf>,
    /// Transition width of the half-band around pi/2, in radians.
    #[arg(long, default_value_t = 1.0)]
    transition: f64,
    /// Kaiser window beta (0 = rectangular).
    #[arg(long, default_value_t = 8.0)]
    shape: f64,
    #[command(flatten)]
    params: ParamArgs,
    /// Sample period T.
    #[arg(long)]
    period: f64,
    /// Output path for the bank JSON.
    #[arg(long)]
    out: PathBuf,
    /// Verification grid size over [0, 2pi).
    #[arg(long, default_value_t = 512)]
    grid: usize,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    /// Seed of the reconstruction probe.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Length of the reconstruction probe.
    #[arg(long, default_value_t = 256)]
    probe_len: usize,
}

#[derive(Args)]
struct RunArgs {
    /// Bank JSON produced by `design`.
    bank: PathBuf,
    /// Input signal CSV (header `n,re,im`).
    input: PathBuf,
    /// Sample period of the input; defaults to the sidecar, then the bank's.
    #[arg(long)]
    period: Option<f64>,
    /// Prefix for y0.csv, y1.csv, xhat.csv, report.json.
    #[arg(long, default_value = "")]
    out_prefix: String,
    /// Verification grid size over [0, 2pi).
    #[arg(long, default_value_t = 512)]
    grid: usize,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Input signal CSV.
    input: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
    /// Sample period; defaults to the sidecar next to the input.
    #[arg(long)]
    period: Option<f64>,
    /// Number of grid points over [0, 2pi); at least 2.
    #[arg(long, default_value_t = 512)]
    grid: usize,
    /// Output CSV (`omega,re,im,abs`).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    /// Peak frequencies in [0, 2pi); at least one.
    #[arg(long, value_name = "RAD", num_args = 1.., required = true)]
    peaks: Vec<f64>,
    /// Number of samples.
    #[arg(long, default_value_t = 512)]
    length: usize,
    #[command(flatten)]
    params: ParamArgs,
    /// Sample period T.
    #[arg(long)]
    period: f64,
    /// Output signal CSV (a `.meta.json` sidecar records the period).
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bank JSON to recheck.
    bank: PathBuf,
    /// Verification grid size over [0, 2pi).
    #[arg(long, default_value_t = 512)]
    grid: usize,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    /// Seed of the reconstruction probe.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Length of the reconstruction probe.
    #[arg(long, default_value_t = 256)]
    probe_len: usize,
}

fn print_report(report: &VerificationReport) {
    let line = |name: &str, err: f64, tol: f64| {
        let verdict = if err <= tol { "pass" } else { "FAIL" };
        println!("{name}: {err:.3e} (tolerance {tol:.1e}) {verdict}");
    };
    line(
        "power symmetry",
        report.max_ps_error,
        report.tolerances.power_symmetry,
    );
    line(
        "paraunitarity ",
        report.max_pu_error,
        report.tolerances.paraunitarity,
    );
    line(
        "reconstruction",
        report.max_pr_error,
        report.tolerances.reconstruction,
    );
    println!(
        "reconstruction (magnitude only): {:.3e}",
        report.max_pr_magnitude_error
    );
}

fn resolve_period(flag: Option<f64>, csv: &Path, fallback: Option<f64>) -> Result<f64> {
    if let Some(p) = flag {
        return Ok(p);
    }
    if let Some(p) = io::read_period_sidecar(csv)? {
        return Ok(p);
    }
    fallback.ok_or_else(|| Error::Usage {
        message: format!(
            "no --period given and no sidecar {} found",
            io::sidecar_path(csv).display()
        ),
    })
}

impl Cli {
    /// Runs the parsed command. `Ok(true)` means every requested check
    /// passed; `Ok(false)` means the command ran but a check failed.
    pub fn execute(self) -> Result<bool> {
        match self.command {
            Command::Design(args) => design(args),
            Command::Run(args) => run(args),
            Command::Spectrum(args) => spectrum(args),
            Command::Gen(args) => gen(args),
            Command::Verify(args) => verify(args),
        }
    }
}

fn design(args: DesignArgs) -> Result<bool> {
    let params = args.params.resolve()?;
    let proto_signal = match (&args.prototype, args.order) {
        (Some(path), _) => io::read_prototype_csv(path, args.period)?,
        (None, Some(order)) => {
            let coeffs = design_power_symmetric(order, args.transition, args.shape)?;
            Signal::from_real(&coeffs, args.period)?
        }
        (None, None) => unreachable!("clap enforces --order or --prototype"),
    };
    if let Some(path) = &args.out_prototype {
        io::write_prototype_csv(path, &proto_signal)?;
        println!("wrote {}", path.display());
    }
    let bank = FilterBank::from_prototype(&proto_signal, &params)?;
    let grid = FrequencyGrid::full(args.grid)?;
    let probe = seeded_probe(args.seed, args.probe_len, args.period)?;
    let report = verify_bank(
        &probe,
        &bank,
        &grid,
        args.tolerances.resolve(),
        Some(args.seed),
    )?;
    io::write_bank(&args.out, &bank, Some(&report))?;
    println!(
        "wrote {} (bank order {}, period {})",
        args.out.display(),
        bank.order(),
        bank.period()
    );
    print_report(&report);
    Ok(report.passes())
}

fn run(args: RunArgs) -> Result<bool> {
    let (bank, _) = io::read_bank(&args.bank)?;
    let period = resolve_period(args.period, &args.input, Some(bank.period()))?;
    if period != bank.period() {
        return Err(Error::PeriodMismatch {
            left: period,
            right: bank.period(),
        });
    }
    let x = io::read_signal_csv(&args.input, period)?;
    let (y0, y1) = analysis(&x, &bank)?;
    let xhat = synthesis(&y0, &y1, &bank)?;
    let grid = FrequencyGrid::full(args.grid)?;
    let report = verify_bank(&x, &bank, &grid, args.tolerances.resolve(), None)?;

    let prefix = &args.out_prefix;
    let out = |name: &str| PathBuf::from(format!("{prefix}{name}"));
    io::write_signal_csv(&out("y0.csv"), &y0)?;
    io::write_period_sidecar(&out("y0.csv"), y0.period())?;
    io::write_signal_csv(&out("y1.csv"), &y1)?;
    io::write_period_sidecar(&out("y1.csv"), y1.period())?;
    io::write_signal_csv(&out("xhat.csv"), &xhat)?;
    io::write_period_sidecar(&out("xhat.csv"), xhat.period())?;
    io::write_report(&out("report.json"), &report)?;
    println!(
        "wrote {}y0.csv {}y1.csv {}xhat.csv {}report.json",
        prefix, prefix, prefix, prefix
    );
    print_report(&report);
    Ok(report.passes())
}

fn spectrum(args: SpectrumArgs) -> Result<bool> {
    let params = args.params.resolve()?;
    let period = resolve_period(args.period, &args.input, None)?;
    let x = io::read_signal_csv(&args.input, period)?;
    let grid = FrequencyGrid::full(args.grid)?;
    let spec = dtlct(&x, &params, &grid);
    io::write_spectrum_csv(&args.out, &spec)?;
    println!(
        "wrote {} ({} points, |X| peak at bin {})",
        args.out.display(),
        args.grid,
        spec.argmax()
    );
    Ok(true)
}

fn gen(args: GenArgs) -> Result<bool> {
    let params = args.params.resolve()?;
    let x = generate_multitone(&args.peaks, args.length, &params, args.period)?;
    io::write_signal_csv(&args.out, &x)?;
    io::write_period_sidecar(&args.out, args.period)?;
    println!(
        "wrote {} ({} samples, {} peaks)",
        args.out.display(),
        args.length,
        args.peaks.len()
    );
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let (bank, stored_report) = io::read_bank(&args.bank)?;
    let grid = FrequencyGrid::full(args.grid)?;
    let probe = seeded_probe(args.seed, args.probe_len, bank.period())?;
    let report = verify_bank(
        &probe,
        &bank,
        &grid,
        args.tolerances.resolve(),
        Some(args.seed),
    )?;
    if let Some(stored) = stored_report {
        println!(
            "stored report: ps {:.3e}, pu {:.3e}, pr {:.3e}",
            stored.max_ps_error, stored.max_pu_error, stored.max_pr_error
        );
    }
    print_report(&report);
    Ok(report.passes())
}

/// Entry point for the `lctfb` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.execute() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more checks failed");
            ExitCode::FAILURE
        }
        Err(err) => {
            eprintln!("error: {err}");
            let mut source = std::error::Error::source(&err);
            while let Some(cause) = source {
                eprintln!("  caused by: {cause}");
                source = cause.source();
            }
            ExitCode::FAILURE
        }
    }
}
