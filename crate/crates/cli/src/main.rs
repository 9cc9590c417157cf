//! Command-line front end for the rating engines: loads a match log,
//! runs one subcommand, and writes a CSV or JSON artifact. Identical
//! arguments and input bytes produce byte-identical output.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leaguerate::eval::{
    accuracy_histogram, calibrate_hfa, compare_methods, comparison_csv, correlation_series,
    foresight_accuracy, synthetic_roundrobin, trajectory, trajectory_csv, HfaGrid, MethodSpec,
};
use leaguerate::massey::{build_incidence, build_normal, solve_by_component, solve_massey,
    spectral_report};
use leaguerate::matchlog::{infer_rounds, official_standings, parse_fixture_csv, MatchLog, Round};
use leaguerate::temporal::{rate_temporal, trace_coefficients, InitialStrengths};
use leaguerate::variants::{
    rate_colley_static, rate_colley_temporal, rate_constant, rate_elo, rate_massey_weighted,
    trace_constant_coefficients, ConstantCoeffConfig, EloConfig, WeightMode, WeightVector,
};
use leaguerate::Error;

#[derive(Parser)]
#[command(name = "leaguerate", version, about = "Rating engines for league match logs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rating vector (whole-log methods) or round-by-round history
    Rate(RateArgs),
    /// Coefficient breakdown of one team's round-by-round rating
    Trace(TraceArgs),
    /// Eigenvalue diagnostics of the rating normal matrix
    Spectral(SpectralArgs),
    /// Foresight accuracy, method comparison grid, or rank correlations
    Evaluate(EvaluateArgs),
    /// Grid search for the home-field offset that maximizes accuracy
    Calibrate(CalibrateArgs),
    /// Rating and rank paths for selected teams
    Trajectory(TrajectoryArgs),
    /// Generate a synthetic round-robin season
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Match log CSV (`-` reads stdin)
    #[arg(long)]
    input: String,
    /// Input has no round column (date,home,away,goals); rounds are
    /// inferred so no team plays twice in one round
    #[arg(long)]
    infer_rounds: bool,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of stdout; relative paths land under
    /// $LEAGUERATE_OUT_DIR when it is set
    #[arg(long)]
    output: Option<PathBuf>,
    /// csv is fixed to 6 decimal places, json keeps full precision
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightsArg {
    /// Every match weighs 1
    Unit,
    /// A match in round t weighs t
    Linear,
}

#[derive(Args)]
struct MethodArgs {
    /// massey | tmassey | cmassey | colley | tcolley | elo | wmassey | official
    #[arg(long)]
    method: String,
    /// Memory constant for cmassey, in (0, 1) [default: 0.5]
    #[arg(long)]
    alpha: Option<f64>,
    /// Elo step size [default: 25]
    #[arg(long)]
    kappa: Option<f64>,
    /// Elo logistic scale [default: 400]
    #[arg(long)]
    zeta: Option<f64>,
    /// Match weighting for wmassey [default: unit]
    #[arg(long, value_enum)]
    weights: Option<WeightsArg>,
}

impl MethodArgs {
    fn spec(&self) -> Result<MethodSpec, Error> {
        build_spec(&self.method, self.alpha, self.kappa, self.zeta, self.weights)
    }
}

/// Validates per-method constants: a flag for one method is rejected when
/// another method is selected.
fn build_spec(
    method: &str,
    alpha: Option<f64>,
    kappa: Option<f64>,
    zeta: Option<f64>,
    weights: Option<WeightsArg>,
) -> Result<MethodSpec, Error> {
    let bad = |flag: &str| {
        Err(Error::InvalidConfig(format!("--{flag} does not apply to method `{method}`")))
    };
    if alpha.is_some() && method != "cmassey" {
        return bad("alpha");
    }
    if (kappa.is_some() || zeta.is_some()) && method != "elo" {
        return bad(if kappa.is_some() { "kappa" } else { "zeta" });
    }
    if weights.is_some() && method != "wmassey" {
        return bad("weights");
    }
    match method {
        "massey" => Ok(MethodSpec::Massey),
        "tmassey" => Ok(MethodSpec::MasseyTemporal),
        "cmassey" => {
            Ok(MethodSpec::MasseyConstant(ConstantCoeffConfig::new(alpha.unwrap_or(0.5))?))
        }
        "colley" => Ok(MethodSpec::Colley),
        "tcolley" => Ok(MethodSpec::ColleyTemporal),
        "elo" => Ok(MethodSpec::Elo(EloConfig {
            kappa: kappa.unwrap_or(25.0),
            zeta: zeta.unwrap_or(400.0),
            ..EloConfig::default()
        })),
        "wmassey" => Ok(MethodSpec::MasseyWeighted(match weights.unwrap_or(WeightsArg::Unit) {
            WeightsArg::Unit => WeightMode::Unit,
            WeightsArg::Linear => WeightMode::LinearByRound,
        })),
        "official" => Ok(MethodSpec::Official),
        other => Err(Error::InvalidConfig(format!("unknown method `{other}`"))),
    }
}

#[derive(Args)]
struct RateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    method: MethodArgs,
    /// Last round to use (default: whole log)
    #[arg(long)]
    upto: Option<Round>,
    /// Home-field offset added inside Elo updates (elo only)
    #[arg(long)]
    hfa: Option<f64>,
    /// Initial strengths CSV `team,strength` (tmassey and cmassey only)
    #[arg(long)]
    rho: Option<PathBuf>,
    /// Multiplier applied to the initial strengths [default: 1]
    #[arg(long)]
    rho_scale: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Team whose rating is decomposed
    #[arg(long)]
    team: String,
    /// Round to decompose at (default: whole log)
    #[arg(long)]
    upto: Option<Round>,
    /// tmassey (varying coefficients) or cmassey (constant) [default: tmassey]
    #[arg(long, default_value = "tmassey")]
    method: String,
    /// Memory constant for cmassey, in (0, 1) [default: 0.5]
    #[arg(long)]
    alpha: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SpectralArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Last round to use (default: whole log)
    #[arg(long)]
    upto: Option<Round>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// massey | tmassey | cmassey | colley | tcolley | elo | wmassey | official
    #[arg(long, conflicts_with = "all_methods")]
    method: Option<String>,
    /// Memory constant for cmassey, in (0, 1) [default: 0.5]
    #[arg(long)]
    alpha: Option<f64>,
    /// Elo step size [default: 25]
    #[arg(long)]
    kappa: Option<f64>,
    /// Elo logistic scale [default: 400]
    #[arg(long)]
    zeta: Option<f64>,
    /// Match weighting for wmassey [default: unit]
    #[arg(long, value_enum)]
    weights: Option<WeightsArg>,
    /// Home-field offset added to the home rating when predicting
    #[arg(long, default_value_t = 0.0)]
    hfa: f64,
    /// Rounds at the start that are not predicted [default: 1]
    #[arg(long, default_value_t = 1)]
    warmup: Round,
    /// Emit the per-round accuracy histogram instead of the round table
    #[arg(long, conflicts_with_all = ["all_methods", "correlate"])]
    histogram: bool,
    /// Score every method, plain and with a calibrated offset
    #[arg(long, conflicts_with = "correlate")]
    all_methods: bool,
    /// Comma-separated methods; emit pairwise rank correlations per round
    #[arg(long)]
    correlate: Option<String>,
    /// First round of the correlation series [default: 1]
    #[arg(long, requires = "correlate")]
    from: Option<Round>,
    /// Last round of the correlation series (default: whole log)
    #[arg(long, requires = "correlate")]
    to: Option<Round>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CalibrateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    method: MethodArgs,
    /// Rounds at the start that are not predicted [default: 1]
    #[arg(long, default_value_t = 1)]
    warmup: Round,
    /// Grid start (default: the method's own grid)
    #[arg(long)]
    grid_min: Option<f64>,
    /// Grid end (default: the method's own grid)
    #[arg(long)]
    grid_max: Option<f64>,
    /// Grid step (default: the method's own grid)
    #[arg(long)]
    grid_step: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TrajectoryArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    method: MethodArgs,
    /// Comma-separated team names
    #[arg(long)]
    teams: String,
    /// First round of the path [default: 1]
    #[arg(long, default_value_t = 1)]
    from: Round,
    /// Last round of the path (default: whole log)
    #[arg(long)]
    to: Option<Round>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SimulateArgs {
    /// Number of teams (even)
    #[arg(long)]
    teams: usize,
    /// Comma-separated true strengths (default: evenly spaced, 1 apart)
    #[arg(long)]
    strengths: Option<String>,
    /// Standard deviation of the noise on each true margin
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// RNG seed; same seed, same season
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Play each pairing twice with venues swapped
    #[arg(long)]
    double: bool,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

enum AppError {
    Io(String),
    Core(Error),
}

impl AppError {
    /// 1 I/O, 2 usage, 3 parse, 4 data invariant, 5 numeric.
    fn code(&self) -> u8 {
        match self {
            AppError::Io(_) => 1,
            AppError::Core(e) => match e {
                Error::InvalidConfig(_) => 2,
                Error::Parse { .. } | Error::UnknownHeader { .. } => 3,
                Error::DuplicateTeamRound { .. }
                | Error::UnknownTeam(_)
                | Error::RoundOutOfRange { .. }
                | Error::TeamWithoutMatches(_) => 4,
                Error::DisconnectedGraph { .. } | Error::SingularSystem => 5,
            },
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Io(msg) => write!(f, "{msg}"),
            AppError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Core(e)
    }
}

fn read_input(path: &str) -> Result<String, AppError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| AppError::Io(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| AppError::Io(format!("{path}: {e}")))
}

fn load_log(args: &InputArgs) -> Result<MatchLog, AppError> {
    let text = read_input(&args.input)?;
    let log = if args.infer_rounds {
        infer_rounds(&parse_fixture_csv(&text)?)?
    } else {
        MatchLog::parse_csv(&text)?
    };
    Ok(log)
}

fn emit(out: &OutputArgs, text: String) -> Result<(), AppError> {
    let Some(path) = &out.output else {
        print!("{text}");
        return Ok(());
    };
    let path = match std::env::var_os("LEAGUERATE_OUT_DIR") {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.clone(),
    };
    std::fs::write(&path, text).map_err(|e| AppError::Io(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

/// Resolves `--upto`, defaulting to the whole log.
fn resolve_upto(upto: Option<Round>, log: &MatchLog) -> Round {
    upto.unwrap_or_else(|| log.rounds())
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Rate(a) => rate_cmd(a),
        Command::Trace(a) => trace_cmd(a),
        Command::Spectral(a) => spectral_cmd(a),
        Command::Evaluate(a) => evaluate_cmd(a),
        Command::Calibrate(a) => calibrate_cmd(a),
        Command::Trajectory(a) => trajectory_cmd(a),
        Command::Simulate(a) => simulate_cmd(a),
    }
}

fn load_rho(args: &RateArgs, log: &MatchLog) -> Result<InitialStrengths, AppError> {
    let Some(path) = &args.rho else {
        if args.rho_scale.is_some() {
            return Err(Error::InvalidConfig("--rho-scale needs --rho".into()).into());
        }
        return Ok(InitialStrengths::zeros(log.team_count()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Io(format!("{}: {e}", path.display())))?;
    let (rho, unmatched) =
        InitialStrengths::from_prior_csv(&text, log, args.rho_scale.unwrap_or(1.0))?;
    for name in unmatched {
        eprintln!("warning: prior for unknown team `{name}` ignored");
    }
    Ok(rho)
}

fn rate_cmd(args: RateArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let spec = args.method.spec()?;
    let upto = resolve_upto(args.upto, &log);
    if args.hfa.is_some() && !matches!(spec, MethodSpec::Elo(_)) {
        return Err(Error::InvalidConfig("--hfa in `rate` only applies to elo".into()).into());
    }
    if args.rho.is_some() && !matches!(spec, MethodSpec::MasseyTemporal | MethodSpec::MasseyConstant(_))
    {
        return Err(
            Error::InvalidConfig("--rho only applies to tmassey and cmassey".into()).into()
        );
    }
    let rho = load_rho(&args, &log)?;
    let json = args.out.format == Format::Json;

    let text = match &spec {
        MethodSpec::MasseyTemporal => {
            let h = rate_temporal(&log, &rho, upto)?;
            if json { to_json(&h) } else { h.to_csv() }
        }
        MethodSpec::MasseyConstant(cfg) => {
            let h = rate_constant(&log, *cfg, &rho, upto)?;
            if json { to_json(&h) } else { h.to_csv() }
        }
        MethodSpec::ColleyTemporal => {
            let h = rate_colley_temporal(&log, upto)?;
            if json { to_json(&h) } else { h.to_csv() }
        }
        MethodSpec::Elo(cfg) => {
            let h = rate_elo(&log, *cfg, args.hfa.unwrap_or(0.0), upto)?;
            if json { to_json(&h) } else { h.to_csv() }
        }
        MethodSpec::Massey => {
            let sys = build_normal(&build_incidence(&log, upto)?);
            vector_output(&log, &solve_massey(&sys)?.values, json)
        }
        MethodSpec::Colley => vector_output(&log, &rate_colley_static(&log, upto)?.values, json),
        MethodSpec::MasseyWeighted(mode) => {
            let sys = build_incidence(&log, upto)?;
            let w = WeightVector::for_mode(&sys, *mode);
            vector_output(&log, &rate_massey_weighted(&log, &w, upto)?.values, json)
        }
        MethodSpec::Official => {
            let table = official_standings(&log, upto)?;
            if json { to_json(&table) } else { table.to_csv() }
        }
    };
    emit(&args.out, text)
}

fn vector_output(log: &MatchLog, values: &[f64], json: bool) -> String {
    if json {
        let rows: Vec<serde_json::Value> = log
            .team_names()
            .iter()
            .zip(values)
            .map(|(name, v)| serde_json::json!({"team": name, "rating": v}))
            .collect();
        to_json(&rows)
    } else {
        let mut out = String::from("team,rating\n");
        for (name, v) in log.team_names().iter().zip(values) {
            out.push_str(&format!("{name},{v:.6}\n"));
        }
        out
    }
}

fn trace_cmd(args: TraceArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let team = log
        .team_index(&args.team)
        .ok_or_else(|| Error::UnknownTeam(args.team.clone()))?;
    let upto = resolve_upto(args.upto, &log);
    let trace = match args.method.as_str() {
        "tmassey" => {
            if args.alpha.is_some() {
                return Err(
                    Error::InvalidConfig("--alpha does not apply to method `tmassey`".into())
                        .into(),
                );
            }
            trace_coefficients(&log, team, upto)?
        }
        "cmassey" => {
            let cfg = ConstantCoeffConfig::new(args.alpha.unwrap_or(0.5))?;
            trace_constant_coefficients(&log, cfg, team, upto)?
        }
        other => {
            return Err(Error::InvalidConfig(format!(
                "trace supports tmassey and cmassey, not `{other}`"
            ))
            .into())
        }
    };
    let names = log.team_names();
    let text = if args.out.format == Format::Json {
        let spread: Vec<serde_json::Value> = trace
            .spread_coeffs
            .iter()
            .map(|(&(k, l), &v)| {
                serde_json::json!({"team": names[k], "round": l, "coefficient": v})
            })
            .collect();
        let init: Vec<serde_json::Value> = names
            .iter()
            .zip(&trace.init_coeffs)
            .map(|(name, v)| serde_json::json!({"team": name, "coefficient": v}))
            .collect();
        to_json(&serde_json::json!({
            "team": names[trace.team],
            "upto": trace.upto,
            "total_mass": trace.total_mass(),
            "spread": spread,
            "init": init,
        }))
    } else {
        // round 0 rows carry the weights on initial strengths
        let mut out = trace.to_csv(names);
        for (name, v) in names.iter().zip(&trace.init_coeffs) {
            out.push_str(&format!("{name},0,{v:.6}\n"));
        }
        out
    };
    emit(&args.out, text)
}

fn spectral_cmd(args: SpectralArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let upto = resolve_upto(args.upto, &log);
    let sys = build_normal(&build_incidence(&log, upto)?);
    let r = solve_by_component(&sys)?;
    let rep = spectral_report(&sys, &r)?;
    let text = if args.out.format == Format::Json {
        to_json(&rep)
    } else {
        let mut out = String::from("key,value\n");
        out.push_str(&format!("connected,{}\n", rep.connected));
        out.push_str(&format!("components,{}\n", rep.components));
        let cell = |v: Option<f64>| v.map(|x| format!("{x:.6}")).unwrap_or_default();
        out.push_str(&format!("algebraic_connectivity,{}\n", cell(rep.algebraic_connectivity)));
        out.push_str(&format!("deviation,{:.6}\n", rep.deviation));
        out.push_str(&format!("bound_rhs,{}\n", cell(rep.bound_rhs)));
        for (i, l) in rep.eigenvalues.iter().enumerate() {
            // avoid a "-0.000000" render for the structural zero eigenvalue
            let l = if l.abs() < 5e-7 { 0.0 } else { *l };
            out.push_str(&format!("eigenvalue_{i},{l:.6}\n"));
        }
        out
    };
    emit(&args.out, text)
}

fn evaluate_cmd(args: EvaluateArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let json = args.out.format == Format::Json;

    if let Some(list) = &args.correlate {
        let specs: Vec<MethodSpec> = list
            .split(',')
            .map(|id| build_spec(id.trim(), args.alpha, args.kappa, args.zeta, args.weights))
            .collect::<Result<_, _>>()?;
        let from = args.from.unwrap_or(1);
        let to = args.to.unwrap_or_else(|| log.rounds());
        let series = correlation_series(&log, &specs, from, to)?;
        let text = if json { to_json(&series) } else { series.to_csv() };
        return emit(&args.out, text);
    }

    if args.all_methods {
        let specs = all_method_specs(&args)?;
        let rows = compare_methods(&log, &specs, args.warmup)?;
        let text = if json { to_json(&rows) } else { comparison_csv(&rows) };
        return emit(&args.out, text);
    }

    let Some(method) = &args.method else {
        return Err(Error::InvalidConfig(
            "pick --method, --all-methods, or --correlate".into(),
        )
        .into());
    };
    let spec = build_spec(method, args.alpha, args.kappa, args.zeta, args.weights)?;
    let report = foresight_accuracy(&log, &spec, args.hfa, args.warmup)?;
    let text = if args.histogram {
        let hist = accuracy_histogram(&report);
        if json {
            to_json(&hist)
        } else {
            let mut out = String::from("bucket,count\n");
            for (i, count) in hist.bins.iter().enumerate() {
                out.push_str(&format!("0.{i}-{},{count}\n", if i == 9 { "1.0".into() } else { format!("0.{}", i + 1) }));
            }
            out.push_str(&format!("skipped,{}\n", hist.skipped_rounds));
            out
        }
    } else if json {
        to_json(&report)
    } else {
        let mut out = report.to_csv();
        match report.aggregate {
            Some(a) => out.push_str(&format!(
                "total,{},{},{a:.6}\n",
                report.correct, report.decisive
            )),
            None => out.push_str(&format!("total,{},{},\n", report.correct, report.decisive)),
        }
        out
    };
    emit(&args.out, text)
}

/// The full comparison lineup, honoring any method constants that were set.
fn all_method_specs(args: &EvaluateArgs) -> Result<Vec<MethodSpec>, AppError> {
    Ok(vec![
        MethodSpec::Massey,
        MethodSpec::MasseyTemporal,
        MethodSpec::MasseyConstant(ConstantCoeffConfig::new(args.alpha.unwrap_or(0.5))?),
        MethodSpec::Colley,
        MethodSpec::ColleyTemporal,
        MethodSpec::Elo(EloConfig {
            kappa: args.kappa.unwrap_or(25.0),
            zeta: args.zeta.unwrap_or(400.0),
            ..EloConfig::default()
        }),
        MethodSpec::MasseyWeighted(match args.weights.unwrap_or(WeightsArg::Unit) {
            WeightsArg::Unit => WeightMode::Unit,
            WeightsArg::Linear => WeightMode::LinearByRound,
        }),
        MethodSpec::Official,
    ])
}

fn calibrate_cmd(args: CalibrateArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let spec = args.method.spec()?;
    let default = spec.default_hfa_grid();
    let grid = HfaGrid {
        min: args.grid_min.unwrap_or(default.min),
        max: args.grid_max.unwrap_or(default.max),
        step: args.grid_step.unwrap_or(default.step),
    };
    let cal = calibrate_hfa(&log, &spec, &grid, args.warmup)?;
    let text = if args.out.format == Format::Json {
        to_json(&cal)
    } else {
        let cell = |v: Option<f64>| v.map(|a| format!("{a:.6}")).unwrap_or_default();
        format!(
            "method,hfa,accuracy,baseline\n{},{:.6},{},{}\n",
            cal.method,
            cal.hfa,
            cell(cal.accuracy),
            cell(cal.baseline),
        )
    };
    emit(&args.out, text)
}

fn trajectory_cmd(args: TrajectoryArgs) -> Result<(), AppError> {
    let log = load_log(&args.input)?;
    let spec = args.method.spec()?;
    let teams: Vec<_> = args
        .teams
        .split(',')
        .map(|name| {
            log.team_index(name.trim())
                .ok_or_else(|| Error::UnknownTeam(name.trim().to_string()))
        })
        .collect::<Result<_, _>>()?;
    let to = resolve_upto(args.to, &log);
    let paths = trajectory(&log, &spec, &teams, args.from, to)?;
    let text = if args.out.format == Format::Json {
        to_json(&paths)
    } else {
        trajectory_csv(&paths)
    };
    emit(&args.out, text)
}

fn simulate_cmd(args: SimulateArgs) -> Result<(), AppError> {
    let strengths: Vec<f64> = match &args.strengths {
        Some(list) => list
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidConfig(format!("bad strength `{s}`")))
            })
            .collect::<Result<_, _>>()?,
        // evenly spaced, strongest first: n=4 gives 1.5, 0.5, -0.5, -1.5
        None => (0..args.teams)
            .map(|i| (args.teams as f64 - 1.0) / 2.0 - i as f64)
            .collect(),
    };
    if strengths.len() != args.teams {
        return Err(Error::InvalidConfig(format!(
            "{} strengths for {} teams",
            strengths.len(),
            args.teams
        ))
        .into());
    }
    let log = synthetic_roundrobin(&strengths, args.double, args.noise, args.seed)?;
    let text = if args.out.format == Format::Json {
        to_json(&serde_json::json!({
            "teams": log.team_names(),
            "matches": log.matches(),
        }))
    } else {
        log.to_csv()
    };
    emit(&args.out, text)
}
