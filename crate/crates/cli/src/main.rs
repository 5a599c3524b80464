//! Batch CLI for the uncertainty-bound computations: single bound queries,
//! figure sweeps as CSV, permutation-power and Haar-sampled studies,
//! brute-force oracle runs, and the invariant check suites.

// negated float comparisons are deliberate throughout: they reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod check;
mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use check::{run_suite, CheckConfig, SUITE_NAMES};
use eur_core::bounds::{
    coles_piani_star, conjugacy_region, deutsch, maassen_uffink, proposition_bound, prz_worst,
    rastegin_f, Branch, ConjugacyRegion,
};
use eur_core::entropy::{EntropySpec, FTag, Index};
use eur_core::maxprob::h_min;
use eur_core::oracle::{min_entropy_fixed_max, min_entropy_sum_states, min_sum_lp_grid, Argmin};
use eur_core::quantum::{permutation_power, qubit_rotation, Purity, Sampler};
use eur_core::OverlapTriplet;
use output::{fmt9, open_sink};

#[derive(Parser)]
#[command(
    name = "eur",
    version,
    about = "Entropic uncertainty bounds for measurement pairs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the overlap-triplet bound for one entropy pair.
    Bound(BoundArgs),
    /// Index-plane sweep against a reference bound, as CSV.
    Sweep(SweepArgs),
    /// Bounds along powers of the circular permutation matrix, as CSV.
    Perm(PermArgs),
    /// Bounds over Haar-random unitaries, as CSV.
    Haar(HaarArgs),
    /// Brute-force minimizers, reported against their closed forms.
    Oracle(OracleArgs),
    /// Invariant suites; exits 1 on any violation.
    Check(CheckArgs),
}

fn parse_spec(s: &str) -> Result<EntropySpec, String> {
    s.parse::<EntropySpec>().map_err(|e| e.to_string())
}

fn parse_triplet(s: &str) -> Result<OverlapTriplet, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected cA,cB,cAB".to_string());
    }
    let vals: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    OverlapTriplet::new(vals[0], vals[1], vals[2]).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Renyi,
    Tsallis,
}

impl Family {
    fn spec(self, index: f64) -> Result<EntropySpec, String> {
        match self {
            Family::Renyi => EntropySpec::renyi(Index::Finite(index)),
            Family::Tsallis => EntropySpec::tsallis(Index::Finite(index)),
        }
        .map_err(|e| e.to_string())
    }

    fn ftag(self) -> FTag {
        match self {
            Family::Renyi => FTag::Log,
            Family::Tsallis => FTag::IdMinusOne,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Reference {
    Mu,
    Rastegin,
    #[value(alias = "cp_star")]
    CpStar,
    Deutsch,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Region {
    All,
    Conj,
    Below,
    Above,
}

#[derive(Args)]
struct BoundArgs {
    /// Entropy spec for the first measurement: shannon | renyi:<l|inf> | tsallis:<l>
    #[arg(long, value_parser = parse_spec)]
    ea: EntropySpec,
    /// Entropy spec for the second measurement.
    #[arg(long, value_parser = parse_spec)]
    eb: EntropySpec,
    /// Nondegenerate overlap; shorthand for --triplet 1,1,<c>.
    #[arg(long, conflicts_with = "triplet")]
    c: Option<f64>,
    /// Full overlap triplet cA,cB,cAB.
    #[arg(long, value_parser = parse_triplet)]
    triplet: Option<OverlapTriplet>,
}

#[derive(Args)]
struct SweepArgs {
    /// Overlap between the two eigenbases.
    #[arg(long)]
    c: f64,
    /// Reference bound for the relative difference.
    #[arg(long, value_enum)]
    reference: Reference,
    /// Entropy family of the bound under study.
    #[arg(long, value_enum, default_value = "renyi")]
    family: Family,
    /// Parts of the index plane to sweep (comma separated). Defaults to the
    /// reference bound's validity region.
    #[arg(long, value_enum, value_delimiter = ',')]
    region: Vec<Region>,
    /// Upper end of both index axes (default 3, or 1 for cp-star).
    #[arg(long)]
    grid_max: Option<f64>,
    /// Index step along both axes.
    #[arg(long, default_value_t = 0.05)]
    grid_step: f64,
    /// Hilbert-space dimension for the cp-star reference.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Output path (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PermArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Common entropic index for both measurements.
    #[arg(long)]
    alpha: f64,
    #[arg(long, value_enum, default_value = "renyi")]
    family: Family,
    #[arg(long, default_value_t = 0.0)]
    s_min: f64,
    #[arg(long, default_value_t = 0.5)]
    s_max: f64,
    #[arg(long, default_value_t = 0.005)]
    s_step: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HaarArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Common entropic index; shorthand for --ea/--eb with --family.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_enum, default_value = "renyi")]
    family: Family,
    #[arg(long, value_parser = parse_spec, requires = "eb")]
    ea: Option<EntropySpec>,
    #[arg(long, value_parser = parse_spec, requires = "ea")]
    eb: Option<EntropySpec>,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    command: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum entropy at fixed maximum probability vs the closed form.
    FixedMax {
        #[arg(long, value_parser = parse_spec)]
        spec: EntropySpec,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum entropy sum over states vs the triplet bound.
    States {
        #[arg(long, value_parser = parse_spec)]
        ea: EntropySpec,
        #[arg(long, value_parser = parse_spec)]
        eb: EntropySpec,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Qubit rotation overlap (N = 2 only).
        #[arg(long, conflicts_with = "s")]
        c: Option<f64>,
        /// Power of the circular permutation matrix (any N).
        #[arg(long)]
        s: Option<f64>,
        #[arg(long, value_enum, default_value = "pure")]
        purity: PurityArg,
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum of the minimal-entropy sum over the Landau-Pollak domain.
    LpGrid {
        #[arg(long, value_parser = parse_spec)]
        ea: EntropySpec,
        #[arg(long, value_parser = parse_spec)]
        eb: EntropySpec,
        #[arg(long, conflicts_with = "triplet")]
        c: Option<f64>,
        #[arg(long, value_parser = parse_triplet)]
        triplet: Option<OverlapTriplet>,
        #[arg(long, default_value_t = 10_000)]
        gridsize: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PurityArg {
    Pure,
    Mixed,
}

impl From<PurityArg> for Purity {
    fn from(p: PurityArg) -> Purity {
        match p {
            PurityArg::Pure => Purity::Pure,
            PurityArg::Mixed => Purity::Mixed,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Run a single suite (default: all). One of: entropy-props,
    /// monotonicity, closed-forms, soundness, qubit-optimal, lp-domain,
    /// oracle-hmin.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 20_000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.9)]
    c: f64,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Bound(args) => cmd_bound(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Perm(args) => cmd_perm(args),
        Command::Haar(args) => cmd_haar(args),
        Command::Oracle(args) => cmd_oracle(args.command),
        Command::Check(args) => cmd_check(args),
    }
}

fn resolve_triplet(
    c: Option<f64>,
    triplet: Option<OverlapTriplet>,
) -> Result<OverlapTriplet, String> {
    match (c, triplet) {
        (Some(c), None) => OverlapTriplet::nondegenerate(c).map_err(|e| e.to_string()),
        (None, Some(t)) => Ok(t),
        _ => Err("exactly one of --c or --triplet is required".to_string()),
    }
}

fn cmd_bound(args: BoundArgs) -> Result<i32, String> {
    let t = resolve_triplet(args.c, args.triplet)?;
    let r = proposition_bound(&args.ea, &args.eb, &t);
    let branch = match r.branch {
        Branch::AnalyticCorner => "analytic-corner",
        Branch::Minimized => "minimized",
    };
    let theta = match r.minimizer_theta {
        Some(theta) => fmt9(theta),
        None => "none".to_string(),
    };
    println!("B={} branch={branch} theta={theta}", fmt9(r.value));
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> Result<i32, String> {
    let grid_max = args.grid_max.unwrap_or(match args.reference {
        Reference::CpStar => 1.0,
        _ => 3.0,
    });
    if !(args.grid_step > 0.0) || grid_max < args.grid_step {
        return Err("need 0 < grid-step <= grid-max".to_string());
    }
    let regions = if args.region.is_empty() {
        match args.reference {
            Reference::Mu | Reference::Rastegin => vec![Region::Below, Region::Conj],
            Reference::CpStar | Reference::Deutsch => vec![Region::All],
        }
    } else {
        args.region.clone()
    };

    // each reference bound is only claimed on its validity region
    match args.reference {
        Reference::Mu => {
            if args.family != Family::Renyi {
                return Err("--reference mu compares the renyi-family bound".to_string());
            }
            if regions
                .iter()
                .any(|r| matches!(r, Region::All | Region::Above))
            {
                return Err(
                    "--reference mu is only valid on and below the conjugacy curve \
                     (--region below,conj)"
                        .to_string(),
                );
            }
        }
        Reference::Rastegin => {
            if regions
                .iter()
                .any(|r| matches!(r, Region::All | Region::Above))
            {
                return Err(
                    "--reference rastegin is only valid on and below the conjugacy curve \
                     (--region below,conj)"
                        .to_string(),
                );
            }
        }
        Reference::CpStar => {
            if grid_max > 1.0 + 1e-9 {
                return Err("--reference cp-star is only valid for indices in [0, 1]".to_string());
            }
            if regions.iter().any(|r| matches!(r, Region::Conj)) {
                return Err("the conjugacy curve leaves the cp-star validity square".to_string());
            }
        }
        Reference::Deutsch => {
            if args.family == Family::Tsallis && grid_max > 1.0 + 1e-9 {
                return Err(
                    "--reference deutsch with the tsallis family is only valid for indices in [0, 1]"
                        .to_string(),
                );
            }
        }
    }

    let steps = (grid_max / args.grid_step + 1e-9).floor() as usize;
    let axis: Vec<f64> = (0..=steps).map(|k| k as f64 * args.grid_step).collect();
    let mut points: Vec<(f64, f64)> = Vec::new();
    for region in &regions {
        match region {
            Region::All => {
                for &a in &axis {
                    for &b in &axis {
                        points.push((a, b));
                    }
                }
            }
            Region::Below | Region::Above => {
                let want = if matches!(region, Region::Below) {
                    ConjugacyRegion::Below
                } else {
                    ConjugacyRegion::Above
                };
                for &a in &axis {
                    for &b in &axis {
                        if conjugacy_region(a, b).map_err(|e| e.to_string())? == want {
                            points.push((a, b));
                        }
                    }
                }
            }
            Region::Conj => {
                for &a in &axis {
                    if a > 0.5 {
                        points.push((a, a / (2.0 * a - 1.0)));
                    }
                }
            }
        }
    }

    let c = args.c;
    let reference_constant = match args.reference {
        Reference::Mu => Some(maassen_uffink(c).map_err(|e| e.to_string())?),
        Reference::Deutsch => Some(deutsch(c).map_err(|e| e.to_string())?),
        Reference::CpStar => Some(coles_piani_star(c, args.n).map_err(|e| e.to_string())?),
        Reference::Rastegin => None,
    };
    let family = args.family;
    let ftag = family.ftag();
    let rows: Vec<String> = points
        .par_iter()
        .map(|&(alpha, beta)| {
            let ea = family.spec(alpha).expect("grid index is valid");
            let eb = family.spec(beta).expect("grid index is valid");
            let t = OverlapTriplet::nondegenerate(c).expect("validated overlap");
            let bound = proposition_bound(&ea, &eb, &t).value;
            let reference = reference_constant
                .unwrap_or_else(|| rastegin_f(ftag, alpha, beta, c).unwrap_or(f64::NAN));
            let reldiff = if bound == 0.0 {
                f64::NAN
            } else {
                (bound - reference) / bound
            };
            format!(
                "{},{},{},{},{}",
                fmt9(alpha),
                fmt9(beta),
                fmt9(bound),
                fmt9(reference),
                fmt9(reldiff)
            )
        })
        .collect();

    let mut sink = open_sink(&args.out).map_err(|e| e.to_string())?;
    writeln!(sink, "alpha,beta,B,Bref,reldiff").map_err(|e| e.to_string())?;
    for row in rows {
        writeln!(sink, "{row}").map_err(|e| e.to_string())?;
    }
    Ok(0)
}

fn cmd_perm(args: PermArgs) -> Result<i32, String> {
    if !(args.s_step > 0.0) || args.s_max < args.s_min {
        return Err("need s-min <= s-max and s-step > 0".to_string());
    }
    let spec = args.family.spec(args.alpha)?;
    let ftag = args.family.ftag();
    let steps = ((args.s_max - args.s_min) / args.s_step + 1e-9).floor() as usize;
    let svalues: Vec<f64> = (0..=steps)
        .map(|k| args.s_min + k as f64 * args.s_step)
        .collect();
    let rows: Vec<String> = svalues
        .par_iter()
        .map(|&s| -> Result<String, String> {
            let c = permutation_power(args.n, s)
                .map_err(|e| e.to_string())?
                .overlap();
            let t = OverlapTriplet::nondegenerate(c).map_err(|e| e.to_string())?;
            let bound = proposition_bound(&spec, &spec, &t).value;
            let rastegin = rastegin_f(ftag, args.alpha, args.alpha, c).unwrap_or(f64::NAN);
            Ok(format!(
                "{},{},{},{},{},{},{}",
                fmt9(s),
                fmt9(c),
                fmt9(bound),
                fmt9(deutsch(c).map_err(|e| e.to_string())?),
                fmt9(maassen_uffink(c).map_err(|e| e.to_string())?),
                fmt9(rastegin),
                fmt9(prz_worst(args.alpha, c).map_err(|e| e.to_string())?)
            ))
        })
        .collect::<Result<_, _>>()?;

    let mut sink = open_sink(&args.out).map_err(|e| e.to_string())?;
    writeln!(sink, "s,c,B,B_deutsch,B_mu,B_rastegin,B_prz_worst").map_err(|e| e.to_string())?;
    for row in rows {
        writeln!(sink, "{row}").map_err(|e| e.to_string())?;
    }
    Ok(0)
}

/// Index of a power-family spec for the reference-bound columns.
fn power_index(spec: &EntropySpec) -> Option<f64> {
    match spec.index() {
        Some(Index::Finite(v)) => Some(v),
        Some(Index::Infinite) => None,
        // Shannon is the index-1 member
        None => Some(1.0),
    }
}

fn cmd_haar(args: HaarArgs) -> Result<i32, String> {
    let (ea, eb) = match (&args.ea, &args.eb, args.alpha) {
        (Some(ea), Some(eb), None) => (ea.clone(), eb.clone()),
        (None, None, Some(alpha)) => {
            let spec = args.family.spec(alpha)?;
            (spec.clone(), spec)
        }
        _ => return Err("pass either --alpha or both --ea and --eb".to_string()),
    };
    let both_tsallis =
        ea.family_tag() == Some(FTag::IdMinusOne) && eb.family_tag() == Some(FTag::IdMinusOne);
    let ftag = if both_tsallis {
        FTag::IdMinusOne
    } else {
        FTag::Log
    };
    let (ia, ib) = (power_index(&ea), power_index(&eb));

    let mut sampler = Sampler::new(args.seed);
    let overlaps: Vec<f64> = (0..args.samples)
        .map(|_| sampler.haar_unitary(args.n).map(|u| u.overlap()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;

    let rows: Vec<String> = overlaps
        .par_iter()
        .enumerate()
        .map(|(k, &c)| -> Result<String, String> {
            let t = OverlapTriplet::nondegenerate(c).map_err(|e| e.to_string())?;
            let bound = proposition_bound(&ea, &eb, &t).value;
            let rastegin = match (ia, ib) {
                (Some(a), Some(b)) => rastegin_f(ftag, a, b, c).unwrap_or(f64::NAN),
                _ => f64::NAN,
            };
            let prz = match (ia, ib) {
                (Some(a), Some(b)) if (a - b).abs() < 1e-12 => {
                    prz_worst(a, c).map_err(|e| e.to_string())?
                }
                _ => f64::NAN,
            };
            Ok(format!(
                "{k},{},{},{},{},{},{}",
                fmt9(c),
                fmt9(bound),
                fmt9(maassen_uffink(c).map_err(|e| e.to_string())?),
                fmt9(deutsch(c).map_err(|e| e.to_string())?),
                fmt9(rastegin),
                fmt9(prz)
            ))
        })
        .collect::<Result<_, _>>()?;

    let mut sink = open_sink(&args.out).map_err(|e| e.to_string())?;
    writeln!(sink, "sample,c,B,B_mu,B_deutsch,B_rastegin,B_prz_worst")
        .map_err(|e| e.to_string())?;
    for row in rows {
        writeln!(sink, "{row}").map_err(|e| e.to_string())?;
    }
    Ok(0)
}

fn cmd_oracle(command: OracleCommand) -> Result<i32, String> {
    match command {
        OracleCommand::FixedMax {
            spec,
            p,
            n,
            budget,
            seed,
        } => {
            let report =
                min_entropy_fixed_max(&spec, p, n, budget, seed).map_err(|e| e.to_string())?;
            let closed = h_min(&spec, p).map_err(|e| e.to_string())?;
            let argmin = match &report.argmin {
                Argmin::Probabilities(v) => v
                    .components()
                    .iter()
                    .map(|&x| fmt9(x))
                    .collect::<Vec<_>>()
                    .join(","),
                _ => String::new(),
            };
            println!(
                "min={} closed={} gap={} samples={} sweeps={} argmin={argmin}",
                fmt9(report.minimum_value),
                fmt9(closed),
                fmt9(report.minimum_value - closed),
                report.samples_used,
                report.refinement_iterations
            );
            Ok(0)
        }
        OracleCommand::States {
            ea,
            eb,
            n,
            c,
            s,
            purity,
            budget,
            seed,
        } => {
            let t = match (c, s) {
                (Some(c), None) => {
                    if n != 2 {
                        return Err("--c builds a qubit rotation; use --s for N > 2".to_string());
                    }
                    qubit_rotation(c).map_err(|e| e.to_string())?
                }
                (None, Some(s)) => permutation_power(n, s).map_err(|e| e.to_string())?,
                _ => return Err("exactly one of --c or --s is required".to_string()),
            };
            let overlap = t.overlap();
            let triplet = OverlapTriplet::nondegenerate(overlap).map_err(|e| e.to_string())?;
            let bound = proposition_bound(&ea, &eb, &triplet).value;
            let report = min_entropy_sum_states(&ea, &eb, &t, purity.into(), budget, seed)
                .map_err(|e| e.to_string())?;
            println!(
                "min={} bound={} gap={} c={} samples={} sweeps={}",
                fmt9(report.minimum_value),
                fmt9(bound),
                fmt9(report.minimum_value - bound),
                fmt9(overlap),
                report.samples_used,
                report.refinement_iterations
            );
            Ok(0)
        }
        OracleCommand::LpGrid {
            ea,
            eb,
            c,
            triplet,
            gridsize,
        } => {
            let t = resolve_triplet(c, triplet)?;
            let bound = proposition_bound(&ea, &eb, &t).value;
            let report = min_sum_lp_grid(&ea, &eb, &t, gridsize).map_err(|e| e.to_string())?;
            let (pa, pb) = match report.argmin {
                Argmin::MaxProbabilityPair(pa, pb) => (pa, pb),
                _ => (f64::NAN, f64::NAN),
            };
            println!(
                "min={} bound={} gap={} argmin_pa={} argmin_pb={}",
                fmt9(report.minimum_value),
                fmt9(bound),
                fmt9(report.minimum_value - bound),
                fmt9(pa),
                fmt9(pb)
            );
            Ok(0)
        }
    }
}

fn cmd_check(args: CheckArgs) -> Result<i32, String> {
    let cfg = CheckConfig {
        budget: args.budget,
        seed: args.seed,
        c: args.c,
        n: args.n,
        samples: args.samples,
    };
    let selected: Vec<&str> = match &args.suite {
        Some(name) => {
            if !SUITE_NAMES.contains(&name.as_str()) {
                return Err(format!(
                    "unknown suite {name:?}; expected one of {}",
                    SUITE_NAMES.join(", ")
                ));
            }
            vec![name.as_str()]
        }
        None => SUITE_NAMES.to_vec(),
    };
    let mut all_passed = true;
    for name in selected {
        let outcome = run_suite(name, &cfg).expect("suite names validated");
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("check {}: {verdict} ({})", outcome.name, outcome.detail);
        all_passed &= outcome.passed;
    }
    Ok(if all_passed { 0 } else { 1 })
}
