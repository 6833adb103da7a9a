//! Command-line front end: `scan`, `sample`, `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::interferometer::{interference_scan, linspace, PhaseAngle};
use crate::measurement::{sequential_experiment_partitioned, Order, RandomStream, SequentialStats};
use crate::par;
use crate::uncertainty::duality_report;
use crate::verify::{self, Fault, VerifySetup};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

pub const SCAN_COLUMNS: [&str; 7] =
    ["phi", "w_expectation", "p_expectation", "delta_p", "delta_w", "robertson_bound", "gap"];

pub const SAMPLE_COLUMNS: [&str; 12] = [
    "phi",
    "phi0",
    "order",
    "shots",
    "first_mean",
    "first_variance",
    "second_mean",
    "second_variance",
    "n_plus",
    "n_minus",
    "chi2",
    "pass",
];

#[derive(Debug, Parser)]
#[command(name = "twopath", version, about = "Two-path interferometer: fringes, uncertainty and sequential measurements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic fringe and uncertainty values on a phase grid.
    Scan,
    /// Monte Carlo sequential path/wave measurements on a phase grid.
    Sample,
    /// Run the invariant suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    BeamSplitter,
    Basis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Pw,
    Wp,
    Both,
}

impl OrderArg {
    fn orders(self) -> &'static [Order] {
        match self {
            OrderArg::Pw => &[Order::PThenW],
            OrderArg::Wp => &[Order::WThenP],
            OrderArg::Both => &Order::BOTH,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Setup phase offset φ₀.
    #[arg(long, global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi0: f64,
    /// First grid phase [default: −π].
    #[arg(long = "from", global = true, allow_negative_numbers = true)]
    pub from: Option<f64>,
    /// Last grid phase [default: π].
    #[arg(long = "to", global = true, allow_negative_numbers = true)]
    pub to: Option<f64>,
    #[arg(long, global = true, default_value_t = 101)]
    pub steps: usize,
    /// Shots per grid point and order (`verify`: enables Monte Carlo checks).
    #[arg(long, global = true)]
    pub shots: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Both)]
    pub order: OrderArg,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Interpret --phi0/--from/--to as degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
    /// Independent RNG sub-streams per run.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Also emit a gnuplot script (next to --out, else on stderr).
    #[arg(long, global = true)]
    pub gnuplot: bool,
}

pub const DEFAULT_SHOTS: u64 = 100_000;

/// Validated run parameters, angles in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phi0: f64,
    pub phi_start: f64,
    pub phi_end: f64,
    pub steps: usize,
    pub shots: u64,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub orders: Vec<Order>,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_options(o: &Options) -> Result<Self> {
        let conv = |x: f64| if o.degrees { x.to_radians() } else { x };
        let cfg = RunConfig {
            phi0: conv(o.phi0),
            phi_start: o.from.map(conv).unwrap_or(-std::f64::consts::PI),
            phi_end: o.to.map(conv).unwrap_or(std::f64::consts::PI),
            steps: o.steps,
            shots: o.shots.unwrap_or(DEFAULT_SHOTS),
            seed: o.seed,
            output_path: o.out.clone(),
            orders: o.order.orders().to_vec(),
            workers: o.workers,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if ![self.phi0, self.phi_start, self.phi_end].iter().all(|x| x.is_finite()) {
            return Err(Error::Config("angles must be finite".into()));
        }
        if self.steps == 0 {
            return Err(Error::Config("--steps must be at least 1".into()));
        }
        if self.phi_start > self.phi_end {
            return Err(Error::Config("--from must not exceed --to".into()));
        }
        if self.shots == 0 {
            return Err(Error::Config("--shots must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("--workers must be at least 1".into()));
        }
        Ok(())
    }

    fn grid(&self) -> Result<Vec<PhaseAngle>> {
        linspace(self.phi_start, self.phi_end, self.steps)
    }
}

/// 17 significant digits, so values round-trip exactly.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV of ASCII numbers"))
}

/// Analytic scan CSV, one row per grid phase.
pub fn cmd_scan(cfg: &RunConfig) -> Result<String> {
    let phi0 = PhaseAngle::new(cfg.phi0)?;
    let grid = cfg.grid()?;
    let scan = interference_scan(phi0, &grid)?;
    let mut w = csv_writer();
    w.write_record(SCAN_COLUMNS)?;
    for pt in &scan.points {
        let r = duality_report(pt.phi, phi0);
        w.write_record([pt.phi.value(), pt.w_expect, pt.p_expect, r.delta_p, r.delta_w, r.bound, r.gap].map(fmt_num))?;
    }
    finish(w)
}

/// Seed of the run at `row`: sub-stream `row` of the base seed.
pub fn row_seed(base: u64, row: usize) -> u64 {
    RandomStream::new(base).substream(row as u64).seed()
}

/// Monte Carlo CSV: for each grid phase, one row per requested order.
pub fn cmd_sample(cfg: &RunConfig) -> Result<String> {
    let phi0 = PhaseAngle::new(cfg.phi0)?;
    let grid = cfg.grid()?;
    let jobs: Vec<(PhaseAngle, Order)> =
        grid.iter().flat_map(|&phi| cfg.orders.iter().map(move |&o| (phi, o))).collect();
    let rows: Vec<Result<SequentialStats>> = par::map_range(jobs.len(), |i| {
        let (phi, order) = jobs[i];
        sequential_experiment_partitioned(order, phi, phi0, cfg.shots, row_seed(cfg.seed, i), cfg.workers)
    });
    let mut w = csv_writer();
    w.write_record(SAMPLE_COLUMNS)?;
    for ((phi, _), stats) in jobs.iter().zip(rows) {
        let s = stats?;
        let (chi2, pass) = s.second_uniformity();
        w.write_record([
            fmt_num(phi.value()),
            fmt_num(phi0.value()),
            s.order.code().to_string(),
            s.shots.to_string(),
            fmt_num(s.first_mean),
            fmt_num(s.first_variance),
            fmt_num(s.second_mean),
            fmt_num(s.second_variance),
            s.second_counts.plus.to_string(),
            s.second_counts.minus.to_string(),
            fmt_num(chi2),
            u8::from(pass).to_string(),
        ])?;
    }
    finish(w)
}

/// Plotting script for a CSV written to `data`.
pub fn gnuplot_script(command: &Command, data: &str) -> String {
    match command {
        Command::Scan => format!(
            "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'phi'\n\
             plot '{data}' using 1:2 with lines, '' using 1:5 with lines, '' using 1:6 with points\n"
        ),
        Command::Sample => format!(
            "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'phi'\n\
             plot '{data}' using 1:6 with points, '' using 1:7 with points\n"
        ),
        Command::Verify { .. } => String::new(),
    }
}

fn emit(cfg: &RunConfig, body: &str) -> Result<()> {
    match &cfg.output_path {
        Some(p) => fs::write(p, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn gnuplot_target(out: Option<&Path>) -> Option<PathBuf> {
    out.map(|p| {
        let mut s = p.as_os_str().to_owned();
        s.push(".gp");
        PathBuf::from(s)
    })
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("twopath: {e}");
            exit_for(&e)
        }
    }
}

fn run_inner(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Verify { inject_fault } => {
            let o = &cli.opts;
            let phi0 = if o.degrees { o.phi0.to_radians() } else { o.phi0 };
            if o.workers == 0 || o.shots == Some(0) {
                return Err(Error::Config("--workers and --shots must be at least 1".into()));
            }
            let mut setup = VerifySetup {
                phi0: PhaseAngle::new(phi0)?,
                shots: o.shots,
                seed: o.seed,
                workers: o.workers,
                ..VerifySetup::default()
            };
            if let Some(f) = inject_fault {
                setup = setup.with_fault(match f {
                    FaultArg::BeamSplitter => Fault::BeamSplitter,
                    FaultArg::Basis => Fault::NonComplementaryBasis,
                });
            }
            let report = verify::run(&setup);
            let text = report.render();
            match &o.out {
                Some(p) => fs::write(p, &text)?,
                None => print!("{text}"),
            }
            for f in report.failures() {
                eprintln!("twopath: invariant violated: {}", f.name);
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        cmd => {
            let cfg = RunConfig::from_options(&cli.opts)?;
            let body = match cmd {
                Command::Scan => cmd_scan(&cfg)?,
                _ => cmd_sample(&cfg)?,
            };
            emit(&cfg, &body)?;
            if cli.opts.gnuplot {
                match gnuplot_target(cfg.output_path.as_deref()) {
                    Some(gp) => {
                        let data = cfg.output_path.as_ref().expect("target implies path").display().to_string();
                        fs::write(gp, gnuplot_script(cmd, &data))?;
                    }
                    None => eprint!("{}", gnuplot_script(cmd, "-")),
                }
            }
            Ok(EXIT_OK)
        }
    }
}
