//! Command-line driver: graph sampling, exact solves, equality sweeps,
//! threshold bisection, stopping-time and max-cut studies, bound
//! evaluators, and the verification suites.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

use turan_core::bounds;
use turan_core::experiment::{self, with_thread_pool, ExperimentConfig};
use turan_core::graph;
use turan_core::params::ParamSet;
use turan_core::solver;
use turan_core::verify;

#[derive(Parser)]
#[command(
    name = "turan",
    about = "exact extremal solvers and seeded experiments on small random graphs",
    version
)]
struct Cli {
    /// Master seed for all randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = library default). Results are identical across
    /// thread counts.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Emit JSON where a structured form exists.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a random graph and print it in the text format.
    Sample {
        #[command(subcommand)]
        model: SampleModel,
    },
    /// Exact solves on a graph file.
    Solve {
        #[command(subcommand)]
        what: SolveWhat,
    },
    /// Equality-rate sweep over a p grid; prints the CSV schema.
    Sweep(SweepArgs),
    /// Bisect for the p achieving a target equality rate.
    Bisect(BisectArgs),
    /// Stopping-time process study.
    Stoptime(StoptimeArgs),
    /// Max-cut edge-share study.
    Cutconj(CutconjArgs),
    /// Bound evaluators and Monte-Carlo validators.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Derived-constant bundle for (n, r, p), echoed as JSON.
    Params(ParamsArgs),
    /// Run a named verification suite; nonzero exit on failure.
    Verify {
        /// Suite id (or `all`).
        suite: String,
    },
}

#[derive(Subcommand)]
enum SampleModel {
    /// Binomial model: each pair present with probability p.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Uniform model with exactly m edges.
    Gnm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Add random edges until every edge lies in a clique of order r.
    Stoptime {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SolveWhat {
    /// Maximum K_r-free subgraph.
    KrFree {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Use the exhaustive oracle instead of branch and bound.
        #[arg(long)]
        brute_force: bool,
    },
    /// Maximum k-partite subgraph.
    Partite {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        brute_force: bool,
    },
    /// Both quantities and their gap.
    Gap {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Are all maximum K_r-free subgraphs (r-1)-partite? (tiny graphs)
    Optima {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        edge_limit: Option<usize>,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// JSON config file mirroring the experiment fields.
    #[arg(long, conflicts_with_all = ["n", "r", "p_grid", "trials"])]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Comma-separated strictly increasing grid, e.g. 0.2,0.4,0.6.
    #[arg(long)]
    p_grid: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BisectArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    target: f64,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    lo: f64,
    #[arg(long)]
    hi: f64,
    #[arg(long, default_value_t = 20)]
    max_iters: usize,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct StoptimeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct CutconjArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    trials: u64,
}

#[derive(Args)]
struct ParamsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    p: f64,
    /// Threshold constant C.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// exp[-t^2 / (2 delta_bar)].
    Janson {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        delta_bar: f64,
        #[arg(long)]
        t: f64,
    },
    /// exp[-(t-gamma)^2 / (2 theta_bar)], or the refined form.
    RiordanWarnke {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        theta_bar: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        refined: bool,
    },
    /// Upper tail exp[-lambda^2 / (2(mu + lambda/3))].
    ChernoffUpper {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        lambda: f64,
    },
    /// Lower tail exp[-lambda^2 / (2 mu)].
    ChernoffLower {
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        lambda: f64,
    },
    /// Weighted Bernoulli upper tail exp[-eta lambda / (4z)].
    Weighted {
        #[arg(long)]
        psi: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        z: f64,
    },
    /// Exact mu, delta_bar, theta_bar, gamma for a family file.
    FamilyStats {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        p: f64,
    },
    /// Monte-Carlo lower tail P(X <= mu - t) for a family file.
    Empirical {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        trials: u64,
    },
    /// Covariance of two catalog events, spec "<f>__<g>".
    Harris {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: u64,
    },
    /// Estimate a catalog event under both random-graph models.
    TwoModel {
        #[arg(long)]
        event: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: u64,
    },
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn load_graph(path: &PathBuf) -> Result<graph::Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(graph::read_graph(&text)?)
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let seed = cli.seed;
    let json = cli.json;
    with_thread_pool(cli.threads, move || run(cli.command, seed, json))
}

fn run(command: Command, seed: u64, json: bool) -> Result<()> {
    match command {
        Command::Sample { model } => match model {
            SampleModel::Gnp { n, p, output } => {
                let g = graph::sample_gnp(n, p, seed)?;
                emit(&graph::write_graph(&g), &output)
            }
            SampleModel::Gnm { n, m, output } => {
                let g = graph::sample_gnm(n, m, seed)?;
                emit(&graph::write_graph(&g), &output)
            }
            SampleModel::Stoptime { n, r, output } => {
                let (g, stop_index) = graph::stopping_time_process(n, r, seed)?;
                let text = format!("# stop_index {stop_index}\n{}", graph::write_graph(&g));
                emit(&text, &output)
            }
        },
        Command::Solve { what } => {
            let result = match what {
                SolveWhat::KrFree { input, r, budget, brute_force } => {
                    let g = load_graph(&input)?;
                    if brute_force {
                        solver::brute_force_max_kr_free(&g, r)?
                    } else {
                        solver::max_kr_free(&g, r, budget)?
                    }
                }
                SolveWhat::Partite { input, k, budget, brute_force } => {
                    let g = load_graph(&input)?;
                    if brute_force {
                        solver::brute_force_max_partite(&g, k)?
                    } else {
                        solver::max_partite(&g, k, budget)?
                    }
                }
                SolveWhat::Gap { input, r, budget } => {
                    let g = load_graph(&input)?;
                    let tg = solver::turan_gap(&g, r, budget)?;
                    let out = serde_json::json!({
                        "t": tg.t.to_json(),
                        "b": tg.b.to_json(),
                        "gap": tg.gap,
                    });
                    println!("{out}");
                    return Ok(());
                }
                SolveWhat::Optima { input, r, edge_limit } => {
                    let g = load_graph(&input)?;
                    let all = solver::all_max_kr_free_partite(&g, r, edge_limit)?;
                    println!("{}", serde_json::json!({ "all_optima_partite": all }));
                    return Ok(());
                }
            };
            println!("{}", result.to_json());
            Ok(())
        }
        Command::Sweep(args) => {
            let config = match args.config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str::<ExperimentConfig>(&text)?
                }
                None => {
                    let grid: Vec<f64> = args
                        .p_grid
                        .as_deref()
                        .context("need --config or --n/--r/--p-grid/--trials")?
                        .split(',')
                        .map(|tok| tok.trim().parse::<f64>())
                        .collect::<std::result::Result<_, _>>()
                        .context("bad grid value")?;
                    ExperimentConfig {
                        n: args.n.context("missing --n")?,
                        r: args.r.context("missing --r")?,
                        p: None,
                        p_grid: Some(grid),
                        trials: args.trials.context("missing --trials")?,
                        master_seed: seed,
                        solver_budget: args.budget,
                        delta: None,
                        alpha: None,
                        gamma: None,
                        output: args.output.as_ref().map(|p| p.display().to_string()),
                    }
                }
            };
            let rows = experiment::sweep(&config)?;
            let csv = experiment::sweep_to_csv(&rows);
            let target = config.output.clone().map(PathBuf::from).or(args.output);
            emit(&csv, &target)
        }
        Command::Bisect(args) => {
            let rep = experiment::bisect_threshold(
                args.n,
                args.r,
                args.target,
                args.trials,
                seed,
                args.max_iters,
                args.lo,
                args.hi,
                args.budget,
            )?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "p_estimate {} in [{}, {}] after {} iterations (threshold formula at C=1: {})",
                    rep.p_estimate,
                    rep.bracket_lo,
                    rep.bracket_hi,
                    rep.iterations,
                    rep.threshold_formula
                );
            }
            Ok(())
        }
        Command::Stoptime(args) => {
            let rep =
                experiment::stopping_time_study(args.n, args.r, args.trials, seed, args.budget)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "failures {}/{} resolved, rate {:.4} (95% CI [{:.4}, {:.4}]), stop index {}..{} mean {:.1}",
                    rep.failures,
                    rep.trials - rep.unresolved,
                    rep.failure_rate,
                    rep.ci_lo,
                    rep.ci_hi,
                    rep.stop_index_min,
                    rep.stop_index_max,
                    rep.stop_index_mean
                );
                for (i, ex) in rep.failure_examples.iter().enumerate() {
                    println!("# failure example {i}");
                    print!("{ex}");
                }
            }
            Ok(())
        }
        Command::Cutconj(args) => {
            let rep = experiment::cutconj_study(args.n, args.p, args.trials, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "edge-share stat: mean {:.4}, max {:.4}; fraction above 0.51: {:.4} (95% CI [{:.4}, {:.4}])",
                    rep.stat_mean, rep.stat_max, rep.fraction_exceeding, rep.ci_lo, rep.ci_hi
                );
            }
            Ok(())
        }
        Command::Bounds { which } => run_bounds(which, seed, json),
        Command::Params(args) => {
            let ps = ParamSet::new(
                args.n, args.r, args.p, args.c, args.delta, args.alpha, args.gamma,
            )?;
            println!("{}", serde_json::to_string_pretty(&ps)?);
            Ok(())
        }
        Command::Verify { suite } => {
            let reports = verify::run_suite(&suite)?;
            let mut all_pass = true;
            for rep in &reports {
                println!("{}", rep.line());
                all_pass &= rep.pass;
            }
            if !all_pass {
                std::process::exit(1);
            }
            Ok(())
        }
    }
}

fn run_bounds(which: BoundsCmd, seed: u64, json: bool) -> Result<()> {
    match which {
        BoundsCmd::Janson { mu, delta_bar, t } => {
            let input = bounds::TailBoundInput {
                mu,
                delta_bar,
                theta_bar: delta_bar,
                gamma_overlap: 0.0,
                t,
            };
            println!("{}", bounds::janson_bound(&input)?);
        }
        BoundsCmd::RiordanWarnke { mu, theta_bar, gamma, t, refined } => {
            let input = bounds::TailBoundInput {
                mu,
                delta_bar: theta_bar,
                theta_bar,
                gamma_overlap: gamma,
                t,
            };
            println!("{}", bounds::riordan_warnke_bound(&input, refined)?);
        }
        BoundsCmd::ChernoffUpper { mu, lambda } => {
            println!("{}", bounds::chernoff_upper(mu, lambda)?);
        }
        BoundsCmd::ChernoffLower { mu, lambda } => {
            println!("{}", bounds::chernoff_lower(mu, lambda)?);
        }
        BoundsCmd::Weighted { psi, lambda, eta, z } => {
            println!("{}", bounds::weighted_bernoulli_bound(psi, lambda, eta, z)?);
        }
        BoundsCmd::FamilyStats { family, p } => {
            let text = std::fs::read_to_string(&family)
                .with_context(|| format!("reading {}", family.display()))?;
            let fam = bounds::TailFamily::from_json(&text)?;
            let stats = bounds::family_stats(&fam, p)?;
            println!("{}", serde_json::to_string_pretty(&stats)?);
        }
        BoundsCmd::Empirical { family, p, t, trials } => {
            let text = std::fs::read_to_string(&family)
                .with_context(|| format!("reading {}", family.display()))?;
            let fam = bounds::TailFamily::from_json(&text)?;
            let (est, se) = bounds::empirical_lower_tail(&fam, p, t, trials, seed)?;
            if json {
                println!("{}", serde_json::json!({ "estimate": est, "std_error": se }));
            } else {
                println!("{est} (std error {se})");
            }
        }
        BoundsCmd::Harris { spec, n, p, trials } => {
            let rep = bounds::harris_covariance_check(&spec, n, p, trials, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "covariance {} (std error {}), f {}creasing, g {}creasing",
                    rep.cov_estimate,
                    rep.std_error,
                    if rep.f_increasing { "in" } else { "de" },
                    if rep.g_increasing { "in" } else { "de" },
                );
            }
        }
        BoundsCmd::TwoModel { event, n, p, trials } => {
            let rep = bounds::two_model_compare(&event, n, p, trials, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "binomial model: {} (se {}); fixed-size model (m = {}): {} (se {}); |difference| {}",
                    rep.gnp_estimate,
                    rep.gnp_std_error,
                    rep.m,
                    rep.gnm_estimate,
                    rep.gnm_std_error,
                    rep.abs_difference
                );
            }
        }
    }
    Ok(())
}
