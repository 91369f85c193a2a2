//! Seeded batch experiments: equality-probability sweeps with a fixed CSV
//! schema, threshold bisection, stopping-time failure studies, and max-cut
//! edge-share studies.  Per-trial generators are derived from
//! `(master_seed, trial)`, and aggregation order is fixed, so results are
//! bit-identical across thread counts.

use crate::cuts::cut_conjecture_stat;
use crate::error::{Error, Result};
use crate::graph::{sample_gnp_with, stopping_time_process_with, write_graph};
use crate::params::threshold_p;
use crate::rng::stream_rng;
use crate::solver::turan_gap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Mirrors the JSON config file: single `p` or a grid, plus overrides.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_grid: Option<Vec<f64>>,
    pub trials: u64,
    pub master_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl ExperimentConfig {
    pub fn grid(&self) -> Result<Vec<f64>> {
        let grid = match (&self.p, &self.p_grid) {
            (Some(p), None) => vec![*p],
            (None, Some(g)) => g.clone(),
            _ => {
                return Err(Error::invalid(
                    "config needs exactly one of `p` or `p_grid`",
                ))
            }
        };
        if self.trials < 1 {
            return Err(Error::invalid("trials must be at least 1"));
        }
        if grid.is_empty() {
            return Err(Error::invalid("empty p grid"));
        }
        for w in grid.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::invalid("p grid must be strictly increasing"));
            }
        }
        if grid.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::invalid("grid values must lie in [0,1]"));
        }
        Ok(grid)
    }
}

/// One sweep line: equality counts for `(n, r, p)` over seeded trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub r: usize,
    pub p: f64,
    pub trials: u64,
    pub equality_count: u64,
    pub unresolved_count: u64,
    pub equality_rate: f64,
    pub stderr: f64,
    pub seed: u64,
}

pub const CSV_HEADER: &str = "n,r,p,trials,equality_count,unresolved_count,equality_rate,stderr,seed";

impl SweepRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.r,
            self.p,
            self.trials,
            self.equality_count,
            self.unresolved_count,
            self.equality_rate,
            self.stderr,
            self.seed
        )
    }
}

/// Per-trial exact gap; equality rate over the resolved trials with its
/// binomial standard error.  Budget-hit trials are counted, not dropped
/// silently; all trials unresolved is an explicit failure.
pub fn estimate_equality_prob(
    n: usize,
    r: usize,
    p: f64,
    trials: u64,
    seed: u64,
    budget: Option<u64>,
) -> Result<SweepRow> {
    if trials < 1 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("p = {p} outside [0,1]")));
    }
    if r < 3 {
        return Err(Error::invalid("r must be at least 3"));
    }
    let outcomes: Vec<Option<bool>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trial);
            let g = sample_gnp_with(n, p, &mut rng).expect("validated p");
            let tg = turan_gap(&g, r, budget).expect("validated r");
            tg.gap.map(|gap| gap == 0)
        })
        .collect();
    let unresolved_count = outcomes.iter().filter(|o| o.is_none()).count() as u64;
    let equality_count = outcomes.iter().filter(|o| **o == Some(true)).count() as u64;
    let resolved = trials - unresolved_count;
    if resolved == 0 {
        return Err(Error::invalid(
            "all trials unresolved: raise the solver budget",
        ));
    }
    let rate = equality_count as f64 / resolved as f64;
    let stderr = (rate * (1.0 - rate) / resolved as f64).sqrt();
    Ok(SweepRow {
        n,
        r,
        p,
        trials,
        equality_count,
        unresolved_count,
        equality_rate: rate,
        stderr,
        seed,
    })
}

/// One row per grid point, in grid order, under the shared master seed.
pub fn sweep(config: &ExperimentConfig) -> Result<Vec<SweepRow>> {
    let grid = config.grid()?;
    grid.iter()
        .map(|&p| {
            estimate_equality_prob(
                config.n,
                config.r,
                p,
                config.trials,
                config.master_seed,
                config.solver_budget,
            )
        })
        .collect()
}

pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

/// Parses the documented CSV schema back into rows.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "empty csv".into() })?;
    if header != CSV_HEADER {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header mismatch: expected `{CSV_HEADER}`"),
        });
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 9 {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("expected 9 fields, got {}", fields.len()),
            });
        }
        let err = |what: &str| Error::Parse {
            line: i + 1,
            msg: format!("bad {what}"),
        };
        rows.push(SweepRow {
            n: fields[0].parse().map_err(|_| err("n"))?,
            r: fields[1].parse().map_err(|_| err("r"))?,
            p: fields[2].parse().map_err(|_| err("p"))?,
            trials: fields[3].parse().map_err(|_| err("trials"))?,
            equality_count: fields[4].parse().map_err(|_| err("equality_count"))?,
            unresolved_count: fields[5].parse().map_err(|_| err("unresolved_count"))?,
            equality_rate: fields[6].parse().map_err(|_| err("equality_rate"))?,
            stderr: fields[7].parse().map_err(|_| err("stderr"))?,
            seed: fields[8].parse().map_err(|_| err("seed"))?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct BisectReport {
    pub p_estimate: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
    /// The analytic threshold at C = 1, reported for context, never
    /// asserted.
    pub threshold_formula: f64,
}

/// Interval bisection on the estimated equality rate.  Assumes the rate is
/// near-monotone increasing on `[lo, hi]`, which fails below the trivial
/// small-p equality regime; start the interval above it.
#[allow(clippy::too_many_arguments)]
pub fn bisect_threshold(
    n: usize,
    r: usize,
    target_rate: f64,
    trials: u64,
    seed: u64,
    max_iters: usize,
    lo: f64,
    hi: f64,
    budget: Option<u64>,
) -> Result<BisectReport> {
    if !(0.0 < target_rate && target_rate < 1.0) {
        return Err(Error::invalid("target rate must lie strictly in (0,1)"));
    }
    if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
        return Err(Error::invalid("need 0 <= lo <= hi <= 1"));
    }
    let formula = threshold_p(n, r, 1.0)?;
    if lo == hi {
        return Ok(BisectReport {
            p_estimate: lo,
            bracket_lo: lo,
            bracket_hi: hi,
            iterations: 0,
            threshold_formula: formula,
        });
    }
    let rate_at = |p: f64| -> Result<f64> {
        Ok(estimate_equality_prob(n, r, p, trials, seed, budget)?.equality_rate)
    };
    let r_lo = rate_at(lo)?;
    let r_hi = rate_at(hi)?;
    if !(r_lo <= target_rate && target_rate <= r_hi) {
        return Err(Error::invalid(format!(
            "interval does not bracket the target: rate({lo}) = {r_lo}, rate({hi}) = {r_hi}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let mut iterations = 0;
    for _ in 0..max_iters {
        let mid = (a + b) / 2.0;
        let rm = rate_at(mid)?;
        if rm < target_rate {
            a = mid;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    Ok(BisectReport {
        p_estimate: (a + b) / 2.0,
        bracket_lo: a,
        bracket_hi: b,
        iterations,
        threshold_formula: formula,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StopTimeReport {
    pub n: usize,
    pub r: usize,
    pub trials: u64,
    /// Trials whose stopped graph had `t_r > b_r`.
    pub failures: u64,
    pub unresolved: u64,
    pub failure_rate: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub stop_index_min: usize,
    pub stop_index_mean: f64,
    pub stop_index_max: usize,
    /// Text form of up to [`Self::MAX_EXAMPLES`] failing graphs.
    pub failure_examples: Vec<String>,
}

impl StopTimeReport {
    pub const MAX_EXAMPLES: usize = 10;
}

/// Runs the stopping-time process per trial and solves the resulting
/// graph exactly; reports the frequency of equality failures with a normal
/// 95% interval and keeps example witnesses.
pub fn stopping_time_study(
    n: usize,
    r: usize,
    trials: u64,
    seed: u64,
    budget: Option<u64>,
) -> Result<StopTimeReport> {
    if trials < 1 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if r < 3 || n < r {
        return Err(Error::invalid("need r >= 3 and n >= r"));
    }
    struct Trial {
        stop_index: usize,
        outcome: Option<bool>, // Some(true) = gap > 0
        text: String,
    }
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trial);
            let (g, stop_index) =
                stopping_time_process_with(n, r, &mut rng).expect("validated n, r");
            let gap = turan_gap(&g, r, budget).ok().and_then(|tg| tg.gap);
            Trial {
                stop_index,
                outcome: gap.map(|d| d > 0),
                text: write_graph(&g),
            }
        })
        .collect();
    let unresolved = results.iter().filter(|t| t.outcome.is_none()).count() as u64;
    let failures = results.iter().filter(|t| t.outcome == Some(true)).count() as u64;
    let resolved = trials - unresolved;
    if resolved == 0 {
        return Err(Error::invalid(
            "all trials unresolved: raise the solver budget",
        ));
    }
    let rate = failures as f64 / resolved as f64;
    let se = (rate * (1.0 - rate) / resolved as f64).sqrt();
    let failure_examples: Vec<String> = results
        .iter()
        .filter(|t| t.outcome == Some(true))
        .take(StopTimeReport::MAX_EXAMPLES)
        .map(|t| t.text.clone())
        .collect();
    let stops: Vec<usize> = results.iter().map(|t| t.stop_index).collect();
    Ok(StopTimeReport {
        n,
        r,
        trials,
        failures,
        unresolved,
        failure_rate: rate,
        ci_lo: (rate - 1.96 * se).max(0.0),
        ci_hi: (rate + 1.96 * se).min(1.0),
        stop_index_min: stops.iter().copied().min().unwrap(),
        stop_index_mean: stops.iter().sum::<usize>() as f64 / stops.len() as f64,
        stop_index_max: stops.iter().copied().max().unwrap(),
        failure_examples,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CutConjReport {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub stat_mean: f64,
    pub stat_max: f64,
    /// Fraction of trials whose max-cut edge share exceeded 0.51.
    pub fraction_exceeding: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

/// Distribution of the max-cut edge-share statistic over seeded trials.
pub fn cutconj_study(n: usize, p: f64, trials: u64, seed: u64) -> Result<CutConjReport> {
    if trials < 1 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let stats: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<f64> {
            let mut rng = stream_rng(seed, trial);
            let g = sample_gnp_with(n, p, &mut rng)?;
            cut_conjecture_stat(&g)
        })
        .collect::<Result<Vec<_>>>()?;
    let exceeding = stats.iter().filter(|&&s| s > 0.51).count() as f64;
    let frac = exceeding / trials as f64;
    let se = (frac * (1.0 - frac) / trials as f64).sqrt();
    Ok(CutConjReport {
        n,
        p,
        trials,
        stat_mean: stats.iter().sum::<f64>() / trials as f64,
        stat_max: stats.iter().copied().fold(0.0, f64::max),
        fraction_exceeding: frac,
        ci_lo: (frac - 1.96 * se).max(0.0),
        ci_hi: (frac + 1.96 * se).min(1.0),
    })
}

/// Runs a closure under a dedicated rayon pool of the given size
/// (0 = library default).
pub fn with_thread_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::read_graph;
    use crate::solver::brute_force_max_kr_free;

    #[test]
    fn equality_rate_is_one_at_endpoints() {
        for &(n, r) in &[(8usize, 3usize), (8, 4), (10, 3)] {
            for &p in &[0.0, 1.0] {
                let row = estimate_equality_prob(n, r, p, 10, 1, None).unwrap();
                assert_eq!(row.equality_rate, 1.0, "n={n} r={r} p={p}");
                assert_eq!(row.unresolved_count, 0);
                assert_eq!(row.stderr, 0.0);
            }
        }
    }

    #[test]
    fn sweep_is_thread_invariant_and_roundtrips() {
        let config = ExperimentConfig {
            n: 9,
            r: 3,
            p: None,
            p_grid: Some(vec![0.0, 0.4, 0.8, 1.0]),
            trials: 40,
            master_seed: 5,
            solver_budget: None,
            delta: None,
            alpha: None,
            gamma: None,
            output: None,
        };
        let csv1 = with_thread_pool(1, || sweep_to_csv(&sweep(&config).unwrap()));
        let csv8 = with_thread_pool(8, || sweep_to_csv(&sweep(&config).unwrap()));
        assert_eq!(csv1, csv8);

        let rows = parse_sweep_csv(&csv1).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(sweep_to_csv(&rows), csv1);
        assert_eq!(rows[0].equality_rate, 1.0);
        assert_eq!(rows[3].equality_rate, 1.0);
        assert!(rows.iter().all(|row| row.seed == 5));
    }

    #[test]
    fn config_validation() {
        let mut config = ExperimentConfig {
            n: 8,
            r: 3,
            p: Some(0.5),
            p_grid: None,
            trials: 1,
            master_seed: 0,
            solver_budget: None,
            delta: None,
            alpha: None,
            gamma: None,
            output: None,
        };
        assert_eq!(config.grid().unwrap(), vec![0.5]);
        config.p_grid = Some(vec![0.1, 0.2]);
        assert!(config.grid().is_err()); // both set
        config.p = None;
        assert!(config.grid().is_ok());
        config.p_grid = Some(vec![0.2, 0.1]);
        assert!(config.grid().is_err()); // not increasing
        config.p_grid = Some(vec![0.2, 1.2]);
        assert!(config.grid().is_err()); // out of range

        let js = r#"{"n": 8, "r": 3, "p": 0.5, "trials": 10, "master_seed": 7}"#;
        let parsed: ExperimentConfig = serde_json::from_str(js).unwrap();
        assert_eq!(parsed.trials, 10);
        assert_eq!(parsed.master_seed, 7);
    }

    #[test]
    fn unresolved_trials_are_counted_not_dropped() {
        // budget of 1 node forces unresolved solves at moderate density
        let row = estimate_equality_prob(9, 3, 0.6, 12, 3, Some(1));
        match row {
            Ok(row) => {
                assert!(row.unresolved_count > 0);
                assert_eq!(
                    row.equality_count as f64 / (row.trials - row.unresolved_count) as f64,
                    row.equality_rate
                );
            }
            Err(_) => {
                // all unresolved is an explicit failure, also acceptable here
            }
        }
    }

    #[test]
    fn counts_are_permutation_invariant() {
        // recompute the per-trial outcomes in reverse order and compare the
        // aggregate: counting commutes with trial order
        let (n, r, p, trials, seed) = (10usize, 3usize, 0.6f64, 100u64, 1u64);
        let row = estimate_equality_prob(n, r, p, trials, seed, None).unwrap();
        let mut eq = 0u64;
        for trial in (0..trials).rev() {
            let mut rng = stream_rng(seed, trial);
            let g = sample_gnp_with(n, p, &mut rng).unwrap();
            let tg = turan_gap(&g, r, None).unwrap();
            if tg.gap == Some(0) {
                eq += 1;
            }
        }
        assert_eq!(eq, row.equality_count);
        assert_eq!(row.unresolved_count, 0);
    }

    #[test]
    fn csv_parse_rejects_bad_input() {
        assert!(parse_sweep_csv("").is_err());
        assert!(parse_sweep_csv("wrong,header\n").is_err());
        let bad = format!("{CSV_HEADER}\n1,2,3\n");
        assert!(parse_sweep_csv(&bad).is_err());
    }

    #[test]
    fn bisect_degenerate_and_bracketing() {
        let rep = bisect_threshold(10, 3, 0.5, 20, 1, 5, 1.0, 1.0, None).unwrap();
        assert_eq!(rep.p_estimate, 1.0);

        // bracketed run stays in the interval and is reproducible
        let a = bisect_threshold(10, 3, 0.8, 30, 2, 6, 0.3, 1.0, None).unwrap();
        let b = bisect_threshold(10, 3, 0.8, 30, 2, 6, 0.3, 1.0, None).unwrap();
        assert_eq!(a.p_estimate, b.p_estimate);
        assert!(a.bracket_lo <= a.p_estimate && a.p_estimate <= a.bracket_hi);
        assert!(a.bracket_lo >= 0.3 && a.bracket_hi <= 1.0);
        assert_eq!(a.iterations, 6);

        assert!(bisect_threshold(10, 3, 1.5, 10, 1, 3, 0.2, 0.9, None).is_err());
    }

    #[test]
    fn stopping_time_trivial_case() {
        // n = r: the process stops at the complete graph, gap 0
        let rep = stopping_time_study(3, 3, 20, 3, None).unwrap();
        assert_eq!(rep.failures, 0);
        assert_eq!(rep.stop_index_max, 3);
    }

    #[test]
    fn stopping_time_failures_reverify() {
        let rep = stopping_time_study(10, 3, 60, 11, None).unwrap();
        assert_eq!(rep.unresolved, 0);
        for text in &rep.failure_examples {
            let g = read_graph(text).unwrap();
            let t = brute_force_max_kr_free(&g, 3).unwrap().value;
            let b = crate::solver::brute_force_max_partite(&g, 2).unwrap().value;
            assert!(t > b, "reported failure does not reverify");
        }
    }

    #[test]
    fn cutconj_study_trivial_cases() {
        let rep = cutconj_study(8, 0.0, 20, 1).unwrap();
        assert_eq!(rep.stat_max, 0.0);
        assert_eq!(rep.fraction_exceeding, 0.0);

        // n = 2 with p = 1: a single edge always crosses
        let rep = cutconj_study(2, 1.0, 5, 1).unwrap();
        assert_eq!(rep.stat_mean, 1.0);
        assert_eq!(rep.fraction_exceeding, 1.0);
    }
}
