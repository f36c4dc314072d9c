//! Command-line harness: one experiment per invocation, seeded and audited.
//!
//! Every run writes (unless `--no-csv`) one CSV of metric rows per trial and
//! a JSON summary containing the exact resolved configuration, per-trial
//! final metrics, and elapsed wall time. Exit codes: 0 success, 1
//! configuration error, 2 numerical abort mid-run.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use infomax::config::{
    canonical_json, load_config, CapacityProblem, ChaseRunConfig, FilterRunConfig,
    MeanfieldRunConfig, SpikingRunConfig,
};
use infomax::env::{build_factorized_env, EnvironmentSpec, EventStream};
use infomax::error::Error;
use infomax::log::{format_float, TrainLog};
use infomax::prob::{capacity_oracle, entropy, FiniteDistribution};
use infomax::{chase, filter, meanfield, spiking, validate};

#[derive(Parser)]
#[command(name = "infomax", version, about = "Seeded simulator for information-maximizing neural codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// JSON run configuration; defaults are used when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Overrides the seed from the config file.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for CSV logs and the run summary.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Number of independent trials (seeds seed, seed+1, ...) run in
    /// parallel with isolated state.
    #[arg(long, default_value_t = 1)]
    trials: u64,
    /// Write CSV metric logs (the default).
    #[arg(long, overrides_with = "no_csv")]
    csv: bool,
    /// Skip CSV metric logs; still writes the summary.
    #[arg(long)]
    no_csv: bool,
}

impl CommonArgs {
    fn write_csv(&self) -> bool {
        self.csv || !self.no_csv
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tabular chase game: code vs auxiliary marginal.
    RunChase {
        #[command(flatten)]
        common: CommonArgs,
        /// Overrides the step count from the config file.
        #[arg(long)]
        steps: Option<u64>,
    },
    /// Factorized per-neuron code with lateral predictors.
    RunMeanfield {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        steps: Option<u64>,
    },
    /// Recursive Bayesian posterior over an event stream.
    RunFilter {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Continuous-time spiking network trained on events.
    RunSpiking {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Runs the built-in invariant suite.
    Validate {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Prints the brute-force channel capacity of a problem file.
    Capacity {
        /// JSON file with fields `px` (input distribution) and `ny`
        /// (output alphabet size).
        #[arg(long)]
        env: Option<PathBuf>,
        /// Alias for --env.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    init_logging();
    // clap's default exit code for usage errors is 2, which is reserved
    // here for numerical aborts; usage problems are configuration errors
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            e.print().expect("stderr is writable");
            return if is_help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn init_logging() {
    let level = std::env::var("INFOMAX_LOG_LEVEL").unwrap_or_else(|_| "error".into());
    let level = match level.as_str() {
        "error" | "info" | "debug" => level,
        other => {
            eprintln!("warning: INFOMAX_LOG_LEVEL must be error, info, or debug (got '{other}'); using error");
            "error".into()
        }
    };
    env_logger::Builder::new().parse_filters(&level).init();
}

/// 1 for configuration problems, 2 for numerical aborts mid-run.
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NonFinite { .. }
        | Error::ZeroMass
        | Error::ZeroMarginal { .. }
        | Error::UnbalancedPerturbation { .. } => 2,
        _ => 1,
    }
}

fn dispatch(command: Command) -> Result<(), Error> {
    match command {
        Command::RunChase { common, steps } => {
            let mut cfg: ChaseRunConfig = load_or_default(&common)?;
            if let Some(seed) = common.seed {
                cfg.seed = seed;
            }
            if let Some(steps) = steps {
                cfg.steps = steps;
            }
            cfg.validate()?;
            run_trials(&common, "chase", &cfg, |seed| {
                let mut c = cfg.clone();
                c.seed = seed;
                chase::run_chase(&c.input()?, &c.dynamics())
            })
        }
        Command::RunMeanfield { common, steps } => {
            let mut cfg: MeanfieldRunConfig = load_or_default(&common)?;
            if let Some(seed) = common.seed {
                cfg.seed = seed;
            }
            if let Some(steps) = steps {
                cfg.steps = steps;
            }
            cfg.validate()?;
            run_trials(&common, "meanfield", &cfg, |seed| {
                let mut c = cfg.clone();
                c.seed = seed;
                meanfield::run_meanfield(&c.input()?, c.n, &c.dynamics())
            })
        }
        Command::RunFilter { common } => {
            let mut cfg: FilterRunConfig = load_or_default(&common)?;
            if let Some(seed) = common.seed {
                cfg.seed = seed;
            }
            cfg.validate()?;
            run_trials(&common, "filter", &cfg, |seed| run_filter(&cfg, seed))
        }
        Command::RunSpiking { common } => {
            let mut cfg: SpikingRunConfig = match &common.config {
                Some(path) => load_config(path)?,
                None => default_spiking_config(),
            };
            if let Some(seed) = common.seed {
                cfg.network.seed = seed;
                cfg.train.env_seed = seed.wrapping_add(1);
            }
            cfg.validate()?;
            run_trials(&common, "spiking", &cfg, |seed| run_spiking(&cfg, seed))
        }
        Command::Validate { seed } => validate::run_all(seed),
        Command::Capacity { env, config } => run_capacity(env.or(config).as_deref()),
    }
}

fn load_or_default<T: serde::de::DeserializeOwned + Default>(
    common: &CommonArgs,
) -> Result<T, Error> {
    match &common.config {
        Some(path) => load_config(path),
        None => Ok(T::default()),
    }
}

fn default_spiking_config() -> SpikingRunConfig {
    serde_json::from_value(json!({
        "network": { "n": 2, "nx": 4, "seed": 0 },
        "train": { "events": 20_000, "env_seed": 1 },
    }))
    .expect("built-in default config is valid")
}

/// Fans out `--trials` seeded runs on threads, writes one CSV per trial and
/// a merged summary JSON.
fn run_trials<C, F>(common: &CommonArgs, name: &str, cfg: &C, run: F) -> Result<(), Error>
where
    C: Serialize,
    F: Fn(u64) -> Result<TrainLog, Error> + Sync,
{
    if common.trials == 0 {
        return Err(Error::Config("--trials must be >= 1".into()));
    }
    std::fs::create_dir_all(&common.out)?;
    let base_seed = extract_seed(cfg);
    let start = Instant::now();

    let seeds: Vec<u64> = (0..common.trials).map(|k| base_seed.wrapping_add(k)).collect();
    let run = &run;
    let logs: Vec<Result<TrainLog, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .iter()
            .map(|&seed| scope.spawn(move || run(seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("trial thread panicked"))
            .collect()
    });

    let mut trials = Vec::new();
    for (&seed, log) in seeds.iter().zip(logs) {
        let log = log?;
        let csv_path = common.out.join(format!("{name}_seed{seed}.csv"));
        if common.write_csv() {
            log.save_csv(&csv_path)?;
        }
        log::info!("{name} seed {seed}: {} rows", log.len());
        trials.push(json!({
            "seed": seed,
            "rows": log.len(),
            "final": final_metrics(&log),
            "csv": if common.write_csv() { Some(csv_path.display().to_string()) } else { None },
        }));
    }

    let summary = json!({
        "command": format!("run-{name}"),
        "config": serde_json::from_str::<serde_json::Value>(&canonical_json(cfg))?,
        "trials": trials,
        "elapsed_seconds": start.elapsed().as_secs_f64(),
    });
    let path = common.out.join(format!("{name}_summary.json"));
    std::fs::write(&path, serde_json::to_string_pretty(&summary)?)?;
    println!("wrote {}", path.display());
    Ok(())
}

/// Pulls the `seed` field back out of any config record via its JSON form.
fn extract_seed<C: Serialize>(cfg: &C) -> u64 {
    let v: serde_json::Value = serde_json::to_value(cfg).expect("config serializes");
    v.get("seed")
        .or_else(|| v.get("network").and_then(|n| n.get("seed")))
        .and_then(serde_json::Value::as_u64)
        .unwrap_or(0)
}

fn final_metrics(log: &TrainLog) -> BTreeMap<String, f64> {
    log.columns()
        .iter()
        .filter_map(|c| log.last(c).map(|v| (c.clone(), v)))
        .collect()
}

fn load_env(path: &Option<String>, n: usize, event_len: usize, seed: u64) -> Result<EnvironmentSpec, Error> {
    match path {
        Some(p) => EnvironmentSpec::load(p),
        None => build_factorized_env(n, event_len, seed),
    }
}

/// Joint recursive filtering over sampled events, logging per-step posterior
/// entropy and the log-score of the true latent.
fn run_filter(cfg: &FilterRunConfig, seed: u64) -> Result<TrainLog, Error> {
    let spec = load_env(&cfg.env_path, cfg.n, cfg.event_len, seed.wrapping_add(0x5eed))?;
    spec.validate()?;
    let lik = filter::LikelihoodModel::new(spec.emission.clone());
    let mut stream = EventStream::new(&spec, seed);
    let mut log = TrainLog::new(vec![
        "step".to_string(),
        "posterior_entropy_nats".to_string(),
        "true_latent_log_score".to_string(),
    ]);
    let mut step = 0u64;
    for _ in 0..cfg.events {
        let (z, xs) = stream.next_event();
        let mut state = filter::PosteriorState::from_prior(&spec.latent_prior);
        for &x in &xs {
            state = filter::filter_update(&state, &lik, x)?;
            step += 1;
            let belief = state.belief();
            log.push(vec![
                step as f64,
                entropy(&belief),
                belief.prob(z).max(f64::MIN_POSITIVE).ln(),
            ])?;
        }
    }
    Ok(log)
}

fn run_spiking(cfg: &SpikingRunConfig, seed: u64) -> Result<TrainLog, Error> {
    let spec = load_env(
        &cfg.env_path,
        cfg.n,
        cfg.event_len,
        cfg.train.env_seed.wrapping_add(0x5eed),
    )?;
    spec.validate()?;
    let mut net_cfg = cfg.network.clone();
    net_cfg.seed = seed;
    if net_cfg.nx != spec.n_stimuli() {
        return Err(Error::Config(format!(
            "network nx = {} but environment emits {} stimulus symbols",
            net_cfg.nx,
            spec.n_stimuli()
        )));
    }
    let mut net = spiking::SpikingNetwork::new(net_cfg)?;
    let mut train_cfg = cfg.train.clone();
    train_cfg.env_seed = seed.wrapping_add(1);
    spiking::train(&mut net, &spec, &train_cfg)
}

fn run_capacity(path: Option<&Path>) -> Result<(), Error> {
    let problem: CapacityProblem = match path {
        Some(p) => load_config(p)?,
        None => CapacityProblem {
            px: vec![0.5, 0.5],
            ny: 2,
        },
    };
    problem.validate()?;
    let px = FiniteDistribution::new(problem.px.clone())?;
    let (cap, argmax) = capacity_oracle(&px, problem.ny)?;
    println!("capacity_nats = {}", format_float(cap));
    for (x, row) in argmax.rows().iter().enumerate() {
        let cells: Vec<String> = row.probs().iter().map(|&p| format_float(p)).collect();
        println!("argmax p(y|x={x}) = [{}]", cells.join(", "));
    }
    Ok(())
}
