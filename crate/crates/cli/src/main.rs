//! `stencil-lab`: sweeps, stencil dumps and spectra from the command line.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use stencil_core::harness::{emit, preset, run_sweep, write_csv, CellStatus, Format, SweepOptions, PRESETS};
use stencil_core::numerics::dft_spectrum;
use stencil_core::problems::{catalog, Overrides, PressureLaplacian, SolverKind};
use stencil_core::stencils::{FactorialMode, Method, Scheme};
use stencil_core::{Complex64, Experiment, StencilSpec};

#[derive(Parser)]
#[command(name = "stencil-lab", version, about = "Compare high-order differentiation stencils")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a (method, M) sweep and write one CSV row per cell.
    Sweep(SweepArgs),
    /// Dump the weights of one stencil as CSV.
    Weights(WeightsArgs),
    /// Write the discrete spectrum of an experiment's exact solution as CSV.
    Spectrum(SpectrumArgs),
    /// Print the fully-populated problem description.
    Describe(DescribeArgs),
    /// List experiments with their default half-widths.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Factorials {
    /// Log-space ratios, finite for any M.
    Log,
    /// Double-precision factorials clamped at the largest finite value.
    Saturating,
}

impl From<Factorials> for FactorialMode {
    fn from(f: Factorials) -> Self {
        match f {
            Factorials::Log => FactorialMode::LogSpace,
            Factorials::Saturating => FactorialMode::SaturatingGamma,
        }
    }
}

#[derive(Args, Default)]
struct OverrideArgs {
    /// Node count per direction.
    #[arg(long)]
    n: Option<usize>,
    /// Wavenumber parameter.
    #[arg(long)]
    k: Option<f64>,
    /// Time step of time-dependent problems.
    #[arg(long)]
    dt: Option<f64>,
    /// Number of time steps.
    #[arg(long)]
    steps: Option<usize>,
    /// Use dense LU instead of the iterative solver.
    #[arg(long)]
    dense_solver: bool,
    /// Pressure Poisson operator of the flow problem: stencil or projection.
    #[arg(long, value_parser = parse_pressure)]
    pressure: Option<PressureLaplacian>,
}

fn parse_pressure(s: &str) -> std::result::Result<PressureLaplacian, String> {
    s.parse().map_err(|e: stencil_core::Error| e.to_string())
}

impl OverrideArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            n: self.n,
            k: self.k,
            dt: self.dt,
            steps: self.steps,
            solver: self.dense_solver.then_some(SolverKind::Dense),
            pressure: self.pressure,
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    experiment: Experiment,
    /// Comma-separated methods; defaults to all seven.
    #[arg(long, value_delimiter = ',')]
    methods: Vec<Method>,
    /// Comma-separated half-widths; defaults to the tabulated list.
    #[arg(long = "m-list", value_delimiter = ',')]
    m_list: Vec<usize>,
    /// DSC-RSK width for every M, replacing the table.
    #[arg(long)]
    r: Option<f64>,
    /// Sech constant, replacing the default.
    #[arg(long)]
    d: Option<f64>,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG chart of error against M.
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Run cells one at a time.
    #[arg(long)]
    serial: bool,
    #[arg(long, value_enum, default_value = "log")]
    factorials: Factorials,
    #[command(flatten)]
    overrides: OverrideArgs,
}

#[derive(Args)]
struct WeightsArgs {
    /// fd, boyd-fd, euler, meuler, sech, sinc or dsc-rsk.
    scheme: Method,
    /// Derivative order.
    #[arg(long, default_value_t = 1)]
    n: u8,
    /// Half-width.
    #[arg(long)]
    m: usize,
    /// Grid spacing.
    #[arg(long, default_value_t = 1.0)]
    h: f64,
    /// DSC-RSK width.
    #[arg(long, conflicts_with = "d")]
    r: Option<f64>,
    /// Sech constant.
    #[arg(long)]
    d: Option<f64>,
    #[arg(long, value_enum, default_value = "log")]
    factorials: Factorials,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    experiment: Experiment,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    overrides: OverrideArgs,
}

#[derive(Args)]
struct DescribeArgs {
    experiment: Experiment,
    #[command(flatten)]
    overrides: OverrideArgs,
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn sweep(args: SweepArgs) -> Result<()> {
    let methods = if args.methods.is_empty() { Method::ALL.to_vec() } else { args.methods };
    let m_list = if args.m_list.is_empty() { preset(args.experiment).m_list() } else { args.m_list };
    let opts = SweepOptions {
        overrides: args.overrides.overrides(),
        r: args.r,
        d: args.d,
        serial: args.serial,
        factorials: args.factorials.into(),
    };
    let results = run_sweep(args.experiment, &methods, &m_list, &opts)?;
    match &args.out {
        Some(p) => emit(&results, Format::Csv, p)?,
        None => {
            let mut out = output(None)?;
            write_csv(&results, &mut out)?;
            out.flush()?;
        }
    }
    if let Some(p) = &args.plot {
        emit(&results, Format::Svg, p)?;
    }
    let failed = results.iter().filter(|r| r.status != CellStatus::Ok).count();
    eprintln!("{} cells, {} not ok", results.len(), failed);
    Ok(())
}

fn weights(args: WeightsArgs) -> Result<()> {
    let param = match args.scheme {
        Method::DscRsk => Some(args.r.context("dsc-rsk needs --r")?),
        Method::Sech => Some(args.d.context("sech needs --d")?),
        _ => None,
    };
    let scheme = Scheme::from_method(args.scheme, param)?.with_factorials(args.factorials.into());
    let spec = StencilSpec::new(args.n, args.m, args.h)?;
    let w = scheme.weights(&spec)?;
    let mut out = output(args.out.as_ref())?;
    w.write_csv(&mut out)?;
    out.flush()?;
    Ok(())
}

fn spectrum(args: SpectrumArgs) -> Result<()> {
    let spec = catalog(args.experiment.name(), &args.overrides.overrides())?;
    let Some(exact) = spec.exact() else {
        bail!("{} has no closed-form solution to transform", args.experiment);
    };
    let grid = spec.grid()?;
    let samples: Vec<Complex64> = grid.sample(|x| exact(x));
    let report = dft_spectrum(&samples, grid.h());
    let mut out = output(args.out.as_ref())?;
    report.write_csv(&mut out)?;
    out.flush()?;
    Ok(())
}

fn describe(args: DescribeArgs) -> Result<()> {
    let spec = catalog(args.experiment.name(), &args.overrides.overrides())?;
    print!("{}", spec.to_key_value());
    Ok(())
}

fn list() {
    for p in PRESETS.iter() {
        let ms = p.m_list();
        println!(
            "{:<16} M {}..{} ({} points), sech D {}",
            p.experiment.name(),
            ms.first().unwrap_or(&0),
            ms.last().unwrap_or(&0),
            ms.len(),
            p.sech_d
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Weights(a) => weights(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Describe(a) => describe(a),
        Command::List => {
            list();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
