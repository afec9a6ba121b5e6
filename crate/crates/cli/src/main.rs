//! Command-line front end for qubit-probe discrimination of two candidate
//! bath temperatures.
//!
//! Every subcommand runs a single deterministic pipeline: resolve the bath
//! pair, evaluate the requested quantities over a fixed grid, render the
//! whole result in memory, and only then write it to stdout or `--out`.
//! Invalid flags exit nonzero with a one-line diagnostic on stderr and never
//! leave a partial output file behind.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qthermo::channel::{self, BathOccupancy, ProbePair, ProbeState};
use qthermo::entangled::{self, ProbeFamily};
use qthermo::optimizer;

mod output;
use output::{Cell, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Trajectory(args) => cmd_trajectory(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Landmarks(args) => cmd_landmarks(args),
        Command::Entangled(args) => cmd_entangled(args),
        Command::OptimalCurve(args) => cmd_optimal_curve(args),
    }
}

#[derive(Parser)]
#[command(
    name = "qthermo",
    version,
    about = "Qubit probes that distinguish two candidate temperatures of a bosonic bath",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one probe under both candidate baths over a time grid
    Trajectory(TrajectoryArgs),
    /// Tabulate the state separation over a (time, angle) grid
    Scan(ScanArgs),
    /// Report characteristic times and separations for the bath pair
    Landmarks(LandmarksArgs),
    /// Compare an entangled probe with the best single-qubit probe
    Entangled(EntangledArgs),
    /// Tabulate the best probe angle and separation against time
    OptimalCurve(OptimalCurveArgs),
}

/// Candidate-bath selection. Exactly one style may be used: occupancies
/// (`--n1`/`--n2`) or temperatures (`--T1`/`--T2`); with neither, the pair
/// defaults to occupancies (12, 20).
#[derive(Args)]
struct PairOpts {
    /// Mean occupancy parameter of the colder bath (n = 1 + 2 nbar >= 1)
    #[arg(long, requires = "n2", conflicts_with_all = ["temp1", "temp2"])]
    n1: Option<f64>,
    /// Mean occupancy parameter of the hotter bath (must exceed --n1)
    #[arg(long, requires = "n1")]
    n2: Option<f64>,
    /// Temperature of the colder bath, in units of the qubit gap
    #[arg(long = "T1", requires = "temp2", conflicts_with_all = ["n1", "n2"])]
    temp1: Option<f64>,
    /// Temperature of the hotter bath, in units of the qubit gap
    #[arg(long = "T2", requires = "temp1")]
    temp2: Option<f64>,
}

impl PairOpts {
    fn resolve(&self) -> Result<ProbePair, String> {
        match (self.n1, self.n2, self.temp1, self.temp2) {
            (None, None, None, None) => {
                Ok(ProbePair::from_values(12.0, 20.0).expect("default pair is valid"))
            }
            (Some(n1), Some(n2), None, None) => {
                ProbePair::from_values(n1, n2).map_err(|e| e.to_string())
            }
            (None, None, Some(t1), Some(t2)) => {
                let cold = BathOccupancy::from_temperature(t1).map_err(|e| e.to_string())?;
                let hot = BathOccupancy::from_temperature(t2).map_err(|e| e.to_string())?;
                ProbePair::new(cold, hot).map_err(|e| e.to_string())
            }
            _ => Err("specify both --n1 and --n2, or both --T1 and --T2".to_string()),
        }
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Significant digits for printed numbers (1-17)
    #[arg(long, default_value_t = 9)]
    precision: usize,
    /// Write the result to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputOpts {
    fn validate(&self) -> Result<(), String> {
        if !(1..=17).contains(&self.precision) {
            return Err(format!(
                "--precision must be between 1 and 17, got {}",
                self.precision
            ));
        }
        Ok(())
    }

    /// Writes the fully rendered text in one call, so a failure cannot leave
    /// a truncated file behind.
    fn emit(&self, text: String) -> Result<(), String> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn validate_grid(t_max: f64, t_steps: usize) -> Result<(), String> {
    if !t_max.is_finite() || t_max <= 0.0 {
        return Err(format!("--t-max must be positive and finite, got {t_max}"));
    }
    if t_steps == 0 {
        return Err("--t-steps must be at least 1".to_string());
    }
    Ok(())
}

/// `steps + 1` evenly spaced times with exact endpoints 0 and `t_max`.
fn time_grid(t_max: f64, steps: usize) -> impl Iterator<Item = f64> {
    (0..=steps).map(move |i| (i as f64 / steps as f64) * t_max)
}

#[derive(Args)]
struct TrajectoryArgs {
    #[command(flatten)]
    pair: PairOpts,
    /// Polar angle of the probe Bloch vector, radians in [0, pi]
    #[arg(long, default_value_t = PI)]
    theta: f64,
    /// Azimuthal angle of the probe Bloch vector, radians in [0, 2 pi)
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    /// Bloch radius of the probe, in [0, 1]
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// Largest evolution time on the grid
    #[arg(long = "t-max", default_value_t = 2.0)]
    t_max: f64,
    /// Number of grid intervals (the table has t-steps + 1 rows)
    #[arg(long = "t-steps", default_value_t = 600)]
    t_steps: usize,
    #[command(flatten)]
    output: OutputOpts,
}

fn cmd_trajectory(args: TrajectoryArgs) -> Result<(), String> {
    args.output.validate()?;
    let pair = args.pair.resolve()?;
    validate_grid(args.t_max, args.t_steps)?;
    let probe = ProbeState::new(args.r, args.theta, args.phi).map_err(|e| e.to_string())?;
    let start = probe.bloch_vector();

    let mut rows = Vec::with_capacity(args.t_steps + 1);
    for t in time_grid(args.t_max, args.t_steps) {
        let cold = channel::evolve_bloch(start, pair.n1(), t).map_err(|e| e.to_string())?;
        let hot = channel::evolve_bloch(start, pair.n2(), t).map_err(|e| e.to_string())?;
        rows.push(vec![
            Cell::Num(t),
            Cell::Num(cold.x),
            Cell::Num(cold.y),
            Cell::Num(cold.z),
            Cell::Num(hot.x),
            Cell::Num(hot.y),
            Cell::Num(hot.z),
            Cell::Num(channel::delta(probe, pair, t)),
        ]);
    }
    let text = output::render_table(
        &["t", "x1", "y1", "z1", "x2", "y2", "z2", "delta"],
        &rows,
        args.output.format,
        args.output.precision,
    );
    args.output.emit(text)
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    pair: PairOpts,
    /// Largest evolution time on the grid
    #[arg(long = "t-max", default_value_t = 0.6)]
    t_max: f64,
    /// Number of time intervals
    #[arg(long = "t-steps", default_value_t = 600)]
    t_steps: usize,
    /// Number of angle intervals over [0, pi]
    #[arg(long = "theta-steps", default_value_t = 200)]
    theta_steps: usize,
    #[command(flatten)]
    output: OutputOpts,
}

fn cmd_scan(args: ScanArgs) -> Result<(), String> {
    args.output.validate()?;
    let pair = args.pair.resolve()?;
    validate_grid(args.t_max, args.t_steps)?;
    if args.theta_steps == 0 {
        return Err("--theta-steps must be at least 1".to_string());
    }
    let delta_infinity = pair.delta_infinity();

    let mut rows = Vec::with_capacity((args.t_steps + 1) * (args.theta_steps + 1));
    for t in time_grid(args.t_max, args.t_steps) {
        let first = rows.len();
        let mut argmax = 0usize;
        let mut best = f64::NEG_INFINITY;
        for j in 0..=args.theta_steps {
            let theta = (j as f64 / args.theta_steps as f64) * PI;
            let probe = ProbeState::pure(theta, 0.0).expect("grid angle is in range");
            let delta = channel::delta(probe, pair, t);
            // Ties resolve to the largest angle, so the zero row at t = 0
            // reports the fully polarized probe.
            if delta >= best {
                best = delta;
                argmax = j;
            }
            rows.push(vec![
                Cell::Num(t),
                Cell::Num(theta),
                Cell::Num(delta),
                Cell::Num(delta / delta_infinity),
                Cell::Flag(false),
            ]);
        }
        rows[first + argmax][4] = Cell::Flag(true);
    }
    let text = output::render_table(
        &["t", "theta", "delta", "delta_normalized", "argmax"],
        &rows,
        args.output.format,
        args.output.precision,
    );
    args.output.emit(text)
}

#[derive(Args)]
struct LandmarksArgs {
    #[command(flatten)]
    pair: PairOpts,
    #[command(flatten)]
    output: OutputOpts,
}

fn cmd_landmarks(args: LandmarksArgs) -> Result<(), String> {
    args.output.validate()?;
    let pair = args.pair.resolve()?;
    let marks = optimizer::Landmarks::compute(pair).map_err(|e| e.to_string())?;
    let at_star = optimizer::theta_optimal(pair, marks.t_star).map_err(|e| e.to_string())?;

    let entries = [
        ("n1", Some(pair.n1().value())),
        ("n2", Some(pair.n2().value())),
        ("delta_infinity", Some(marks.delta_infinity)),
        ("t_star", Some(marks.t_star)),
        ("delta_opt_at_t_star", Some(at_star.delta)),
        ("t_ground", marks.t_ground),
        (
            "delta_ground_at_t_ground",
            marks.t_ground.map(|t| optimizer::delta_ground(pair, t)),
        ),
        ("t_coherent_approx", Some(marks.t_coherent_approx)),
        (
            "delta_coherent_at_t_coherent",
            Some(optimizer::delta_coherent(pair, marks.t_coherent_approx)),
        ),
        ("t_crossing", Some(marks.t_crossing)),
        (
            "delta_entangled_at_t_crossing",
            Some(entangled::delta_entangled_phi_plus(pair, marks.t_crossing)),
        ),
    ];
    let text = output::render_report(&entries, args.output.format, args.output.precision);
    args.output.emit(text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// sqrt(1 - alpha) |00> + sqrt(alpha) |11>
    PhiPlusLike,
    /// sqrt(1 - alpha) |01> - sqrt(alpha) |10>
    Fujiwara,
}

impl FamilyArg {
    fn family(self) -> ProbeFamily {
        match self {
            FamilyArg::PhiPlusLike => ProbeFamily::PhiPlusLike,
            FamilyArg::Fujiwara => ProbeFamily::Fujiwara,
        }
    }
}

#[derive(Args)]
struct EntangledArgs {
    #[command(flatten)]
    pair: PairOpts,
    /// Largest evolution time on the grid
    #[arg(long = "t-max", default_value_t = 2.0)]
    t_max: f64,
    /// Number of time intervals
    #[arg(long = "t-steps", default_value_t = 600)]
    t_steps: usize,
    /// Weight of the second basis state in the probe family, in [0, 1];
    /// without it the balanced probe is evaluated in closed form
    #[arg(long)]
    alpha: Option<f64>,
    /// Probe family used with --alpha
    #[arg(long, value_enum, requires = "alpha")]
    family: Option<FamilyArg>,
    #[command(flatten)]
    output: OutputOpts,
}

fn cmd_entangled(args: EntangledArgs) -> Result<(), String> {
    args.output.validate()?;
    let pair = args.pair.resolve()?;
    validate_grid(args.t_max, args.t_steps)?;
    let delta_infinity = pair.delta_infinity();
    let probe = match args.alpha {
        Some(alpha) => Some(
            args.family
                .unwrap_or(FamilyArg::PhiPlusLike)
                .family()
                .state(alpha)
                .map_err(|e| e.to_string())?,
        ),
        None => None,
    };

    let mut rows = Vec::with_capacity(args.t_steps + 1);
    for t in time_grid(args.t_max, args.t_steps) {
        let ent = match &probe {
            Some(psi) => entangled::delta_entangled(psi, pair, t).map_err(|e| e.to_string())?,
            None => entangled::delta_entangled_phi_plus(pair, t),
        };
        let single = optimizer::theta_optimal(pair, t)
            .map_err(|e| e.to_string())?
            .delta;
        rows.push(vec![
            Cell::Num(t),
            Cell::Num(ent),
            Cell::Num(single),
            Cell::Num(ent / delta_infinity),
            Cell::Num(single / delta_infinity),
        ]);
    }
    let text = output::render_table(
        &[
            "t",
            "delta_entangled",
            "delta_optimal",
            "entangled_normalized",
            "optimal_normalized",
        ],
        &rows,
        args.output.format,
        args.output.precision,
    );
    args.output.emit(text)
}

#[derive(Args)]
struct OptimalCurveArgs {
    #[command(flatten)]
    pair: PairOpts,
    /// Largest evolution time on the grid
    #[arg(long = "t-max", default_value_t = 2.0)]
    t_max: f64,
    /// Number of time intervals
    #[arg(long = "t-steps", default_value_t = 600)]
    t_steps: usize,
    #[command(flatten)]
    output: OutputOpts,
}

fn cmd_optimal_curve(args: OptimalCurveArgs) -> Result<(), String> {
    args.output.validate()?;
    let pair = args.pair.resolve()?;
    validate_grid(args.t_max, args.t_steps)?;
    let delta_infinity = pair.delta_infinity();

    let mut rows = Vec::with_capacity(args.t_steps + 1);
    for t in time_grid(args.t_max, args.t_steps) {
        let best = optimizer::theta_optimal(pair, t).map_err(|e| e.to_string())?;
        rows.push(vec![
            Cell::Num(t),
            Cell::Num(best.theta),
            Cell::Num(best.delta),
            Cell::Num(best.delta / delta_infinity),
        ]);
    }
    let text = output::render_table(
        &["t", "theta_opt", "delta_opt", "delta_opt_normalized"],
        &rows,
        args.output.format,
        args.output.precision,
    );
    args.output.emit(text)
}
