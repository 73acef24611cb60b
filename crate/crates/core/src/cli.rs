//! Command-line surface. The binary only forwards `argv` to [`run`].
//!
//! Exit codes: 0 success (including reporter rows), 1 input or class
//! errors, 2 an asserted inequality failed, 3 a resource limit refused the
//! request.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::families::{count, enumerate, tribes_closed_form, tribes_closed_form_exact, tribes_exact, FamilyClass, TribesParams};
use crate::flow::{check_kahn_flow, kleitman_feasible, LambdaScheme};
use crate::inequalities::{evaluate, evaluate_ensemble, CheckerId, EnsembleChecker, Params, Permutation};
use crate::io;
use crate::profile::FamilyProfile;
use crate::search::{scan, tribes_sweep, Budget, Objective, ScanSpec, SweepMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hypercorr",
    version,
    about = "Exact correlation-inequality laboratory on the discrete cube",
    after_help = "Family files are JSON: {\"n\": 3, \"family\": [[1,2],[1,3],[2,3],[1,2,3]]}, \
{\"n\": 3, \"generators\": [[1,2],[1,3],[2,3]], \"closure\": \"up\"} or {\"n\": 3, \"tt\": \"e8\"}. \
The tt hex string is the 2^n-bit membership table, byte 0 first; bit m is the subset with mask m, \
and element i is bit i-1 of the mask."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one inequality on a pair of families.
    Check(CheckArgs),
    /// Exhaustive or sampled extremal scan.
    Scan(ScanArgs),
    /// Kahn / Kleitman flow feasibility for a maximal intersecting family.
    Flow(FlowArgs),
    /// Tribes statistics, one row or a sweep.
    Tribes(TribesArgs),
    /// Enumerate a monotone class.
    Enumerate(EnumerateArgs),
    /// Averaged inequalities over an ensemble of families.
    Avg(AvgArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub ineq: String,
    #[arg(long = "A")]
    pub a: Option<PathBuf>,
    #[arg(long = "B")]
    pub b: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    /// Coordinate order: identity, ascending, descending, or e.g. 3,1,2.
    #[arg(long)]
    pub perm: Option<String>,
    /// Measure window exponent for weakly_symmetric.
    #[arg(long, default_value_t = 1.0)]
    pub window: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "A-class", default_value = "increasing")]
    pub a_class: String,
    #[arg(long = "B-class", default_value = "increasing")]
    pub b_class: String,
    #[arg(long)]
    pub ineq: String,
    #[arg(long, default_value = "min-margin")]
    pub objective: String,
    /// `exhaustive` or a sample count.
    #[arg(long, default_value = "exhaustive")]
    pub budget: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub alpha: f64,
    #[arg(long)]
    pub perm: Option<String>,
    #[arg(long, env = "HYPERCORR_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[arg(long)]
    pub family: PathBuf,
    /// `max`, `average`, or `kleitman`.
    #[arg(long, default_value = "max")]
    pub scheme: String,
    #[arg(long)]
    pub perm: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TribesArgs {
    #[arg(long)]
    pub r: usize,
    /// Number of tribes; omitted means the one balancing μ(B).
    #[arg(long)]
    pub m: Option<usize>,
    /// Brute force on the truth table.
    #[arg(long)]
    pub exact: bool,
    /// Floating-point closed form.
    #[arg(long, conflicts_with = "exact")]
    pub float: bool,
    /// Sweep tribe sizes 1..=r (each with its balancing m).
    #[arg(long)]
    pub sweep: bool,
    /// CSV table for sweeps.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "increasing")]
    pub class: String,
    #[arg(long)]
    pub count_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AvgArgs {
    #[arg(long)]
    pub families: PathBuf,
    #[arg(long)]
    pub ineq: String,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_permutation(s: Option<&str>) -> Result<Permutation> {
    Ok(match s.map(str::trim) {
        None | Some("identity") => Permutation::Identity,
        Some("ascending") => Permutation::AscendingInfluence,
        Some("descending") => Permutation::DescendingInfluence,
        Some(list) => Permutation::Explicit(
            list.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad permutation `{list}`"))))
                .collect::<Result<_>>()?,
        ),
    })
}

fn emit(out: Option<&Path>, argv: &[String], seed: Option<u64>, start: Instant, body: Json) -> Result<()> {
    let doc = io::envelope(argv, seed, start.elapsed().as_millis(), body);
    match out {
        Some(p) => io::write_json(p, &doc),
        None => {
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(())
        }
    }
}

fn cmd_check(args: &CheckArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let id: CheckerId = args.ineq.parse()?;
    let params = Params { alpha: args.alpha, permutation: parse_permutation(args.perm.as_deref())?, a: args.window };
    let load = |p: &Option<PathBuf>| -> Result<Option<FamilyProfile>> {
        p.as_deref().map(|p| io::read_family(p).map(FamilyProfile::new)).transpose()
    };
    let (a, b) = (load(&args.a)?, load(&args.b)?);
    let report = evaluate(id, a.as_ref(), b.as_ref(), &params)?;
    emit(args.out.as_deref(), argv, None, start, io::report_json(&report))?;
    Ok(if report.passes() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_scan(args: &ScanArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let checker: CheckerId = args.ineq.parse()?;
    let budget = match args.budget.as_str() {
        "exhaustive" => Budget::Exhaustive,
        k => Budget::Samples(k.parse().map_err(|_| Error::InvalidInput(format!("bad budget `{k}`")))?),
    };
    let spec = ScanSpec {
        params: Params { alpha: args.alpha, permutation: parse_permutation(args.perm.as_deref())?, ..Params::default() },
        objective: args.objective.parse::<Objective>()?,
        budget,
        seed: args.seed,
        jobs: args.jobs,
        ..ScanSpec::new(args.n, checker, args.a_class.parse()?, args.b_class.parse()?)
    };
    let rec = scan(&spec)?;
    emit(args.out.as_deref(), argv, Some(args.seed), start, io::record_json(&rec))?;
    let asserted = matches!(
        checker.kind(),
        crate::inequalities::CheckKind::ExactAssert | crate::inequalities::CheckKind::FloatAssert
    );
    Ok(if asserted && rec.failures > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_flow(args: &FlowArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let family = io::read_family(&args.family)?;
    let body = match args.scheme.as_str() {
        "kleitman" => {
            let k = kleitman_feasible(&family)?;
            json!({ "scheme": "kleitman", "result": io::kleitman_json(&k), "feasible": k.feasible })
        }
        s => {
            let scheme = match s {
                "max" => match parse_permutation(args.perm.as_deref())? {
                    Permutation::Identity => LambdaScheme::max_coordinate(),
                    Permutation::Explicit(order) => LambdaScheme::MaxCoordinate { order: Some(order) },
                    _ => return Err(Error::InvalidInput("flow --perm takes an explicit order".into())),
                },
                "average" => LambdaScheme::Average,
                other => return Err(Error::InvalidInput(format!("unknown scheme `{other}`"))),
            };
            let k = check_kahn_flow(&family, &scheme)?;
            json!({ "scheme": scheme.name(), "result": io::kahn_json(&k), "feasible": k.result.feasible })
        }
    };
    let feasible = body["feasible"].as_bool() == Some(true);
    emit(args.out.as_deref(), argv, None, start, body)?;
    Ok(if feasible { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_tribes(args: &TribesArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let mode = if args.exact {
        SweepMode::Exact
    } else if args.float {
        SweepMode::ClosedForm
    } else {
        SweepMode::ClosedFormExact
    };
    let body = if args.sweep {
        let sweep = tribes_sweep(1..=args.r, mode)?;
        if let Some(path) = &args.csv {
            let mut w = csv::Writer::from_path(path).map_err(|e| Error::InvalidInput(e.to_string()))?;
            w.write_record(["r", "m", "n", "mu_b", "cor", "influence", "ratio_chvatal", "ratio_balanced"])
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            for s in &sweep.rows {
                w.write_record([
                    s.params.r.to_string(),
                    s.params.m.to_string(),
                    s.params.n().to_string(),
                    s.mu_b.to_f64().to_string(),
                    s.cor.to_f64().to_string(),
                    s.influence.to_f64().to_string(),
                    s.ratio_chvatal.to_f64().to_string(),
                    s.ratio_balanced.to_f64().to_string(),
                ])
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            }
            w.flush()?;
        }
        json!({
            "rows": sweep.rows.iter().map(io::tribes_json).collect::<Vec<_>>(),
            "balanced_ratio_decreasing": sweep.balanced_ratio_decreasing,
        })
    } else {
        let m = args.m.unwrap_or_else(|| crate::search::balancing_tribe_count(args.r));
        let params = TribesParams::new(args.r, m)?;
        let stats = match mode {
            SweepMode::Exact => {
                if params.n() > crate::MAX_DIM {
                    return Err(Error::LimitExceeded(format!("exact tribes need r·m ≤ {}", crate::MAX_DIM)));
                }
                tribes_exact(params)?
            }
            SweepMode::ClosedForm => tribes_closed_form(params),
            SweepMode::ClosedFormExact => tribes_closed_form_exact(params),
        };
        io::tribes_json(&stats)
    };
    emit(args.out.as_deref(), argv, None, start, body)?;
    Ok(EXIT_OK)
}

fn cmd_enumerate(args: &EnumerateArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let class: FamilyClass = args.class.parse()?;
    if args.count_only {
        println!("{}", count(args.n, class)?);
        return Ok(EXIT_OK);
    }
    if args.n > 5 {
        return Err(Error::LimitExceeded("listing families needs n ≤ 5; use --count-only".into()));
    }
    let families: Vec<Json> = enumerate(args.n, class)?
        .map(|f| json!({ "n": f.n(), "tt": f.to_hex() }))
        .collect();
    let body = json!({ "n": args.n, "class": class.name(), "count": families.len(), "families": families });
    emit(args.out.as_deref(), argv, None, start, body)?;
    Ok(EXIT_OK)
}

fn cmd_avg(args: &AvgArgs, argv: &[String]) -> Result<i32> {
    let start = Instant::now();
    let checker: EnsembleChecker = args.ineq.parse()?;
    let families = io::read_families(&args.families)?;
    let rep = evaluate_ensemble(checker, &families, args.gamma)?;
    emit(args.out.as_deref(), argv, None, start, io::ensemble_json(&rep))?;
    Ok(if rep.holds { EXIT_OK } else { EXIT_VIOLATION })
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded(_) | Error::DimensionTooLarge(_) => EXIT_LIMIT,
        _ => EXIT_INPUT,
    }
}

/// Runs one command line (including the program name) and returns the
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, &argv),
        Command::Scan(a) => cmd_scan(a, &argv),
        Command::Flow(a) => cmd_flow(a, &argv),
        Command::Tribes(a) => cmd_tribes(a, &argv),
        Command::Enumerate(a) => cmd_enumerate(a, &argv),
        Command::Avg(a) => cmd_avg(a, &argv),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_parse() {
        assert_eq!(parse_permutation(None).unwrap(), Permutation::Identity);
        assert_eq!(parse_permutation(Some("3,1,2")).unwrap(), Permutation::Explicit(vec![3, 1, 2]));
        assert_eq!(parse_permutation(Some("ascending")).unwrap(), Permutation::AscendingInfluence);
        assert!(parse_permutation(Some("x")).is_err());
    }

    #[test]
    fn count_only_and_limits() {
        assert_eq!(run(["hypercorr", "enumerate", "--n", "3", "--count-only"]), EXIT_OK);
        assert_eq!(run(["hypercorr", "enumerate", "--n", "7", "--count-only"]), EXIT_LIMIT);
        assert_eq!(run(["hypercorr", "bogus"]), EXIT_INPUT);
    }
}
