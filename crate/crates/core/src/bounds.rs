//! Lower-tail bound evaluators (Chernoff, weighted Bernoulli sums, the
//! subset-event inequality and its increasing-union generalization), exact
//! family statistics, and the Monte-Carlo validators that hold them to
//! account: empirical lower tails, monotone-event covariance checks, and
//! binomial-vs-fixed-size model comparisons.

use crate::error::{Error, Result};
use crate::graph::{sample_gnm_with, sample_gnp_with, Graph};
use crate::rng::stream_rng;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// `P(ξ > μ + λ) < exp[-λ² / (2(μ + λ/3))]` for binomial `ξ`.
pub fn chernoff_upper(mu: f64, lambda: f64) -> Result<f64> {
    if mu <= 0.0 || mu.is_nan() || lambda < 0.0 {
        return Err(Error::invalid("chernoff needs mu > 0 and lambda >= 0"));
    }
    Ok((-lambda * lambda / (2.0 * (mu + lambda / 3.0))).exp())
}

/// `P(ξ < μ - λ) < exp[-λ² / (2μ)]`.
pub fn chernoff_lower(mu: f64, lambda: f64) -> Result<f64> {
    if mu <= 0.0 || mu.is_nan() || lambda < 0.0 {
        return Err(Error::invalid("chernoff needs mu > 0 and lambda >= 0"));
    }
    Ok((-lambda * lambda / (2.0 * mu)).exp())
}

/// Weighted Bernoulli upper tail: weights in `[0, z]`, mean at most `ψ`,
/// and `λ >= ηψ` with `η ∈ [0,1]` give `P(ξ >= ψ + λ) <= exp[-ηλ/(4z)]`.
pub fn weighted_bernoulli_bound(psi: f64, lambda: f64, eta: f64, z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::invalid("eta outside [0,1]"));
    }
    if z <= 0.0 || z.is_nan() {
        return Err(Error::invalid("z must be positive"));
    }
    if lambda < eta * psi {
        return Err(Error::invalid("need lambda >= eta * psi"));
    }
    Ok((-eta * lambda / (4.0 * z)).exp())
}

/// Family of increasing subset events over a pair ground set: outer index
/// `i` carries inner events `A_ij ⊆ Γ`; the counted variable is the number
/// of outer indices with some inner event satisfied.
#[derive(Debug, Clone)]
pub struct TailFamily {
    pub ground_size: usize,
    /// `events[i][j]` is the bitmask of `A_ij`.
    pub events: Vec<Vec<u128>>,
}

/// Ground-set guard: masks are `u128`.
pub const GROUND_LIMIT: usize = 128;
/// Guard on the total inner-event count for exact statistics.
pub const EVENT_LIMIT: usize = 2000;
/// Per-neighborhood inclusion-exclusion guard.
const THETA_IE_LIMIT: usize = 20;

#[derive(Debug, Serialize, Deserialize)]
struct FamilyJson {
    ground_size: usize,
    events: Vec<Vec<usize>>,
}

impl TailFamily {
    /// Flat mode: one inner event per outer index.
    pub fn flat(ground_size: usize, sets: Vec<Vec<usize>>) -> Result<TailFamily> {
        Self::nested(ground_size, sets.into_iter().map(|s| vec![s]).collect())
    }

    pub fn nested(ground_size: usize, groups: Vec<Vec<Vec<usize>>>) -> Result<TailFamily> {
        if ground_size > GROUND_LIMIT {
            return Err(Error::GuardExceeded(format!(
                "ground set of {ground_size} exceeds {GROUND_LIMIT}"
            )));
        }
        let mut events = Vec::with_capacity(groups.len());
        for group in groups {
            if group.is_empty() {
                return Err(Error::invalid("outer index without inner events"));
            }
            let mut inner = Vec::with_capacity(group.len());
            for set in group {
                let mut mask = 0u128;
                for idx in set {
                    if idx >= ground_size {
                        return Err(Error::invalid(format!("ground element {idx} out of range")));
                    }
                    mask |= 1u128 << idx;
                }
                inner.push(mask);
            }
            events.push(inner);
        }
        Ok(TailFamily { ground_size, events })
    }

    /// Loads the flat JSON form `{"ground_size": g, "events": [[idx, ...], ...]}`.
    pub fn from_json(text: &str) -> Result<TailFamily> {
        let parsed: FamilyJson = serde_json::from_str(text)?;
        Self::flat(parsed.ground_size, parsed.events)
    }

    pub fn total_events(&self) -> usize {
        self.events.iter().map(|g| g.len()).sum()
    }

    /// The triangles of `K_n` as a flat family over the lexicographic pair
    /// universe.
    pub fn triangles_of_complete(n: usize) -> Result<TailFamily> {
        let mut index = vec![vec![0usize; n]; n];
        let mut next = 0usize;
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = next;
                next += 1;
            }
        }
        let mut sets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    sets.push(vec![index[a][b], index[a][c], index[b][c]]);
                }
            }
        }
        Self::flat(next, sets)
    }

    /// Number of outer events satisfied by a sampled ground subset.
    pub fn count_satisfied(&self, sample: u128) -> usize {
        self.events
            .iter()
            .filter(|group| group.iter().any(|&a| a & sample == a))
            .count()
    }
}

/// Exact first/second-moment statistics of a family at density `p`.
#[derive(Debug, Clone, Serialize)]
pub struct TailStats {
    /// `Σ_{i,j} E I_ij`.
    pub mu: f64,
    /// `ΣΣ E[I_ij I_kl]` over dependent ordered pairs, diagonal included.
    pub delta_bar: f64,
    /// `Σ_{i,j} Σ_k P(A_ij ∩ ∪_l {A_kl dependent on A_ij})`, or the
    /// `delta_bar` fallback when inclusion-exclusion is infeasible.
    pub theta_bar: f64,
    /// `Σ_i Σ_{j<k} E[I_ij I_ik]`: same-index inner overlaps.
    pub gamma_overlap: f64,
    /// Set when `theta_bar` fell back to `delta_bar`.
    pub theta_fallback: bool,
}

/// Exact `μ`, `Δ̄`, `γ` and (when feasible) `Θ̄` by enumeration.
pub fn family_stats(family: &TailFamily, p: f64) -> Result<TailStats> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p outside [0,1]"));
    }
    if family.total_events() > EVENT_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "family has {} events, guard is {EVENT_LIMIT}",
            family.total_events()
        )));
    }
    let flat: Vec<(usize, u128)> = family
        .events
        .iter()
        .enumerate()
        .flat_map(|(i, group)| group.iter().map(move |&m| (i, m)))
        .collect();
    let prob = |mask: u128| p.powi(mask.count_ones() as i32);

    let mu: f64 = flat.iter().map(|&(_, m)| prob(m)).sum();

    let related = |a: (usize, u128), b: (usize, u128), same_slot: bool| -> bool {
        same_slot || a.1 & b.1 != 0
    };

    let mut delta_bar = 0f64;
    for (x, &a) in flat.iter().enumerate() {
        for (y, &b) in flat.iter().enumerate() {
            if related(a, b, x == y) {
                delta_bar += prob(a.1 | b.1);
            }
        }
    }

    let mut gamma_overlap = 0f64;
    for group in &family.events {
        for j in 0..group.len() {
            for k in j + 1..group.len() {
                gamma_overlap += prob(group[j] | group[k]);
            }
        }
    }

    // Θ̄ by inclusion-exclusion per (event, outer index) neighborhood:
    // P(A ∩ ∪ B_s) = Σ_{∅≠S} (-1)^(|S|+1) p^|A ∪ ∪_{s∈S} B_s|
    let mut theta_bar = 0f64;
    let mut theta_fallback = false;
    'theta: for (i, group_i) in family.events.iter().enumerate() {
        for (j, &a_mask) in group_i.iter().enumerate() {
            for (k, group_k) in family.events.iter().enumerate() {
                let dependent: Vec<u128> = group_k
                    .iter()
                    .enumerate()
                    .filter(|&(l, &b)| (k == i && l == j) || (a_mask & b != 0))
                    .map(|(_, &b)| b)
                    .collect();
                if dependent.is_empty() {
                    continue;
                }
                if dependent.len() > THETA_IE_LIMIT {
                    theta_fallback = true;
                    break 'theta;
                }
                let mut term = 0f64;
                for subset in 1u64..(1 << dependent.len()) {
                    let mut union = a_mask;
                    for (s, &b) in dependent.iter().enumerate() {
                        if subset >> s & 1 == 1 {
                            union |= b;
                        }
                    }
                    let sign = if subset.count_ones() % 2 == 1 { 1.0 } else { -1.0 };
                    term += sign * prob(union);
                }
                theta_bar += term;
            }
        }
    }
    if theta_fallback {
        theta_bar = delta_bar;
    }

    Ok(TailStats {
        mu,
        delta_bar,
        theta_bar,
        gamma_overlap,
        theta_fallback,
    })
}

/// Inputs to the lower-tail evaluators.
#[derive(Debug, Clone, Copy)]
pub struct TailBoundInput {
    pub mu: f64,
    pub delta_bar: f64,
    pub theta_bar: f64,
    pub gamma_overlap: f64,
    pub t: f64,
}

impl TailBoundInput {
    fn validate(&self) -> Result<()> {
        if self.theta_bar < 0.0 || self.theta_bar > self.delta_bar + 1e-12 {
            return Err(Error::invalid("need 0 <= theta_bar <= delta_bar"));
        }
        if self.gamma_overlap < 0.0 {
            return Err(Error::invalid("gamma_overlap must be nonnegative"));
        }
        Ok(())
    }
}

/// Subset-event lower tail: `P(X <= μ - t) <= exp[-t²/(2Δ̄)]` for
/// `t ∈ [0, μ]`.
pub fn janson_bound(input: &TailBoundInput) -> Result<f64> {
    input.validate()?;
    if input.delta_bar <= 0.0 || input.delta_bar.is_nan() {
        return Err(Error::invalid("delta_bar must be positive"));
    }
    if input.t < 0.0 || input.t > input.mu {
        return Err(Error::invalid("janson needs t in [0, mu]"));
    }
    Ok((-input.t * input.t / (2.0 * input.delta_bar)).exp())
}

/// Increasing-union lower tail for `t ∈ [γ, μ]`: the plain form
/// `exp[-(t-γ)²/(2Θ̄)]`, or the refined `exp[-φ((γ-t)/μ) μ²/Θ̄]` with
/// `φ(x) = (1+x)log(1+x) - x`.
pub fn riordan_warnke_bound(input: &TailBoundInput, refined: bool) -> Result<f64> {
    input.validate()?;
    if input.theta_bar <= 0.0 || input.theta_bar.is_nan() {
        return Err(Error::invalid("theta_bar must be positive"));
    }
    if input.t < input.gamma_overlap {
        return Err(Error::invalid("generalized bound needs t >= gamma_overlap"));
    }
    if input.t > input.mu {
        return Err(Error::invalid("generalized bound needs t <= mu"));
    }
    if refined {
        let x = (input.gamma_overlap - input.t) / input.mu;
        let phi = (1.0 + x) * (1.0 + x).ln() - x;
        Ok((-phi * input.mu * input.mu / input.theta_bar).exp())
    } else {
        let d = input.t - input.gamma_overlap;
        Ok((-d * d / (2.0 * input.theta_bar)).exp())
    }
}

/// Monte-Carlo estimate of `P(X <= μ - t)` with binomial standard error;
/// deterministic in `(seed, trials)` regardless of thread count.
pub fn empirical_lower_tail(
    family: &TailFamily,
    p: f64,
    t: f64,
    trials: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::invalid("trials must be positive"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p outside [0,1]"));
    }
    let mu = family_stats(family, p)?.mu;
    let threshold = mu - t;
    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trial);
            let mut sample = 0u128;
            for b in 0..family.ground_size {
                if rng.gen::<f64>() < p {
                    sample |= 1u128 << b;
                }
            }
            u64::from((family.count_satisfied(sample) as f64) <= threshold)
        })
        .sum();
    let est = hits as f64 / trials as f64;
    let se = (est * (1.0 - est) / trials as f64).sqrt();
    Ok((est, se))
}

/// Ground guard for the exhaustive tail probability.
pub const EXHAUSTIVE_GROUND_LIMIT: usize = 20;

/// Exact `P(X <= μ - t)` by enumerating all `2^|Γ|` outcomes.
pub fn exhaustive_lower_tail(family: &TailFamily, p: f64, t: f64) -> Result<f64> {
    if family.ground_size > EXHAUSTIVE_GROUND_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "exhaustive tail needs ground <= {EXHAUSTIVE_GROUND_LIMIT}"
        )));
    }
    let mu = family_stats(family, p)?.mu;
    let threshold = mu - t;
    let g = family.ground_size as u32;
    let mut total = 0f64;
    for sample in 0u128..(1u128 << g) {
        let ones = sample.count_ones();
        if (family.count_satisfied(sample) as f64) <= threshold {
            total += p.powi(ones as i32) * (1.0 - p).powi((g - ones) as i32);
        }
    }
    Ok(total)
}

/// Monotone graph events with direction certified by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneEvent {
    /// `|G| <= k` (decreasing).
    EdgesAtMost(usize),
    /// `|G| >= k` (increasing).
    EdgesAtLeast(usize),
    /// Contains a clique on `r` vertices (increasing).
    ContainsClique(usize),
    /// `Δ(G) <= k` (decreasing).
    MaxDegreeAtMost(usize),
}

impl MonotoneEvent {
    /// Parses `edges_le_K`, `edges_ge_K`, `clique_R`, `triangle`,
    /// `max_deg_le_K`.
    pub fn parse(id: &str) -> Result<MonotoneEvent> {
        if id == "triangle" {
            return Ok(MonotoneEvent::ContainsClique(3));
        }
        let num = |prefix: &str| -> Option<usize> {
            id.strip_prefix(prefix).and_then(|s| s.parse().ok())
        };
        if let Some(k) = num("edges_le_") {
            return Ok(MonotoneEvent::EdgesAtMost(k));
        }
        if let Some(k) = num("edges_ge_") {
            return Ok(MonotoneEvent::EdgesAtLeast(k));
        }
        if let Some(r) = num("clique_") {
            if r >= 2 {
                return Ok(MonotoneEvent::ContainsClique(r));
            }
        }
        if let Some(k) = num("max_deg_le_") {
            return Ok(MonotoneEvent::MaxDegreeAtMost(k));
        }
        Err(Error::UnknownCatalog(id.to_string()))
    }

    pub fn is_increasing(&self) -> bool {
        matches!(
            self,
            MonotoneEvent::EdgesAtLeast(_) | MonotoneEvent::ContainsClique(_)
        )
    }

    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            MonotoneEvent::EdgesAtMost(k) => g.edge_count() <= k,
            MonotoneEvent::EdgesAtLeast(k) => g.edge_count() >= k,
            MonotoneEvent::ContainsClique(r) => g.has_clique(r),
            MonotoneEvent::MaxDegreeAtMost(k) => g.max_degree() <= k,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HarrisReport {
    pub cov_estimate: f64,
    pub std_error: f64,
    pub f_increasing: bool,
    pub g_increasing: bool,
}

/// Covariance of two catalog events over seeded binomial graphs.  The spec
/// string is `"<f>__<g>"`, e.g. `edges_le_7__triangle`.
pub fn harris_covariance_check(
    spec: &str,
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<HarrisReport> {
    let (f_id, g_id) = spec
        .split_once("__")
        .ok_or_else(|| Error::UnknownCatalog(spec.to_string()))?;
    let f = MonotoneEvent::parse(f_id)?;
    let g = MonotoneEvent::parse(g_id)?;
    if trials == 0 {
        return Err(Error::invalid("trials must be positive"));
    }
    let outcomes: Vec<(f64, f64)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trial);
            let graph = sample_gnp_with(n, p, &mut rng).expect("validated p");
            (
                f.holds(&graph) as u8 as f64,
                g.holds(&graph) as u8 as f64,
            )
        })
        .collect();
    let tf = trials as f64;
    let mean_f: f64 = outcomes.iter().map(|o| o.0).sum::<f64>() / tf;
    let mean_g: f64 = outcomes.iter().map(|o| o.1).sum::<f64>() / tf;
    let cov: f64 = outcomes
        .iter()
        .map(|o| (o.0 - mean_f) * (o.1 - mean_g))
        .sum::<f64>()
        / tf;
    let var: f64 = outcomes
        .iter()
        .map(|o| {
            let x = (o.0 - mean_f) * (o.1 - mean_g) - cov;
            x * x
        })
        .sum::<f64>()
        / tf;
    let se = (var / tf).sqrt();
    Ok(HarrisReport {
        cov_estimate: cov,
        std_error: se,
        f_increasing: f.is_increasing(),
        g_increasing: g.is_increasing(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoModelReport {
    pub event: String,
    pub n: usize,
    pub p: f64,
    pub m: usize,
    pub gnp_estimate: f64,
    pub gnp_std_error: f64,
    pub gnm_estimate: f64,
    pub gnm_std_error: f64,
    pub abs_difference: f64,
}

/// Estimates a catalog event under the binomial model and under the
/// fixed-size model with `M = round(p C(n,2))`; report only.
pub fn two_model_compare(
    event_id: &str,
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<TwoModelReport> {
    let event = MonotoneEvent::parse(event_id)?;
    if trials == 0 {
        return Err(Error::invalid("trials must be positive"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p outside [0,1]"));
    }
    let m = (p * (n * (n - 1) / 2) as f64).round() as usize;
    let gnp_hits: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trial);
            let g = sample_gnp_with(n, p, &mut rng).expect("validated p");
            u64::from(event.holds(&g))
        })
        .sum();
    let gnm_hits: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = stream_rng(seed, trials + trial);
            let g = sample_gnm_with(n, m, &mut rng).expect("validated m");
            u64::from(event.holds(&g))
        })
        .sum();
    let tf = trials as f64;
    let pe = gnp_hits as f64 / tf;
    let me = gnm_hits as f64 / tf;
    Ok(TwoModelReport {
        event: event_id.to_string(),
        n,
        p,
        m,
        gnp_estimate: pe,
        gnp_std_error: (pe * (1.0 - pe) / tf).sqrt(),
        gnm_estimate: me,
        gnm_std_error: (me * (1.0 - me) / tf).sqrt(),
        abs_difference: (pe - me).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    #[test]
    fn chernoff_values() {
        approx(chernoff_upper(100.0, 30.0).unwrap(), (-900.0f64 / 220.0).exp(), 1e-12);
        assert!((chernoff_upper(100.0, 30.0).unwrap() - 0.0167).abs() < 1e-3);
        assert_eq!(chernoff_upper(10.0, 0.0).unwrap(), 1.0);
        assert_eq!(chernoff_lower(10.0, 0.0).unwrap(), 1.0);
        assert!(chernoff_lower(0.0, 1.0).is_err());
    }

    #[test]
    fn chernoff_lower_dominates_binomial_tail() {
        // empirical P(B(1000, 0.1) < 100 - 40) at 10^5 trials
        let (n_coins, p, lambda) = (1000usize, 0.1f64, 40f64);
        let trials = 100_000u64;
        let hits: u64 = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = stream_rng(99, trial);
                let mut count = 0usize;
                for _ in 0..n_coins {
                    if rng.gen::<f64>() < p {
                        count += 1;
                    }
                }
                u64::from((count as f64) < 100.0 - lambda)
            })
            .sum();
        let emp = hits as f64 / trials as f64;
        let bound = chernoff_lower(100.0, lambda).unwrap();
        assert!(emp <= bound, "empirical {emp} above bound {bound}");
    }

    #[test]
    fn weighted_bound_values() {
        approx(
            weighted_bernoulli_bound(10.0, 10.0, 1.0, 1.0).unwrap(),
            (-2.5f64).exp(),
            1e-12,
        );
        // boundary lambda = eta * psi accepted
        assert!(weighted_bernoulli_bound(10.0, 5.0, 0.5, 1.0).is_ok());
        assert!(weighted_bernoulli_bound(10.0, 4.9, 0.5, 1.0).is_err());
        assert!(weighted_bernoulli_bound(10.0, 5.0, 1.5, 1.0).is_err());
    }

    #[test]
    fn weighted_bound_dominates_simulation() {
        // random weights in [0, z], Bernoulli(q) coins
        let z = 2.0;
        let q = 0.3;
        let mut wrng = stream_rng(5, 0);
        let weights: Vec<f64> = (0..50).map(|_| wrng.gen::<f64>() * z).collect();
        let psi: f64 = weights.iter().sum::<f64>() * q; // exact mean
        let eta = 0.8;
        let lambda = eta * psi + 1.0;
        let trials = 100_000u64;
        let hits: u64 = (0..trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = stream_rng(6, trial);
                let xi: f64 = weights
                    .iter()
                    .map(|&w| if rng.gen::<f64>() < q { w } else { 0.0 })
                    .sum();
                u64::from(xi >= psi + lambda)
            })
            .sum();
        let emp = hits as f64 / trials as f64;
        let bound = weighted_bernoulli_bound(psi, lambda, eta, z).unwrap();
        assert!(emp <= bound, "empirical {emp} above bound {bound}");
    }

    #[test]
    fn k4_triangle_family_stats() {
        let fam = TailFamily::triangles_of_complete(4).unwrap();
        assert_eq!(fam.ground_size, 6);
        assert_eq!(fam.total_events(), 4);
        let st = family_stats(&fam, 0.5).unwrap();
        approx(st.mu, 0.5, 1e-12);
        approx(st.delta_bar, 0.875, 1e-12);
        approx(st.gamma_overlap, 0.0, 1e-15);
        assert!(!st.theta_fallback);
        // flat mode: theta equals delta exactly
        approx(st.theta_bar, st.delta_bar, 1e-12);
    }

    #[test]
    fn nested_family_stats_hand_computed() {
        // groups: {A_00 = {0}, A_01 = {1}}, {A_10 = {0,1}}, p = 1/2
        let fam = TailFamily::nested(2, vec![vec![vec![0], vec![1]], vec![vec![0, 1]]]).unwrap();
        let st = family_stats(&fam, 0.5).unwrap();
        // mu = p + p + p^2
        approx(st.mu, 1.25, 1e-12);
        // gamma: same-group overlap E[I_00 I_01] = p^2
        approx(st.gamma_overlap, 0.25, 1e-12);
        // delta_bar: diagonals p + p + p^2, cross terms 4 p^2
        approx(st.delta_bar, 2.25, 1e-12);
        // theta_bar: 0.75 + 0.75 + 0.5 by inclusion-exclusion
        approx(st.theta_bar, 2.0, 1e-12);
        assert!(!st.theta_fallback);
        assert!(st.theta_bar <= st.delta_bar);
    }

    #[test]
    fn disjoint_events_only_keep_the_diagonal() {
        let fam = TailFamily::flat(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let st = family_stats(&fam, 0.5).unwrap();
        approx(st.delta_bar, 3.0 * 0.25, 1e-12);
        approx(st.mu, 0.75, 1e-12);
        // single-event family: delta_bar = E I_1
        let one = TailFamily::flat(4, vec![vec![0, 1, 2]]).unwrap();
        let st1 = family_stats(&one, 0.5).unwrap();
        approx(st1.delta_bar, 0.125, 1e-12);
    }

    #[test]
    fn janson_bound_values() {
        let input = TailBoundInput {
            mu: 0.5,
            delta_bar: 0.875,
            theta_bar: 0.875,
            gamma_overlap: 0.0,
            t: 0.25,
        };
        approx(janson_bound(&input).unwrap(), 0.96491, 1e-4);
        let zero_t = TailBoundInput { t: 0.0, ..input };
        assert_eq!(janson_bound(&zero_t).unwrap(), 1.0);
        let bad = TailBoundInput { t: 0.6, ..input };
        assert!(janson_bound(&bad).is_err());
    }

    #[test]
    fn riordan_warnke_bound_values() {
        let input = TailBoundInput {
            mu: 10.0,
            delta_bar: 5.0,
            theta_bar: 5.0,
            gamma_overlap: 1.0,
            t: 3.0,
        };
        approx(riordan_warnke_bound(&input, false).unwrap(), (-0.4f64).exp(), 1e-12);
        let at_gamma = TailBoundInput { t: 1.0, ..input };
        assert_eq!(riordan_warnke_bound(&at_gamma, false).unwrap(), 1.0);
        approx(riordan_warnke_bound(&at_gamma, true).unwrap(), 1.0, 1e-12);
        let below = TailBoundInput { t: 0.5, ..input };
        assert!(riordan_warnke_bound(&below, false).is_err());
        // refined form is at least as strong
        for t in [2.0, 3.0, 5.0, 8.0] {
            let inp = TailBoundInput { t, ..input };
            assert!(riordan_warnke_bound(&inp, true).unwrap() <= riordan_warnke_bound(&inp, false).unwrap() + 1e-12);
        }
        // monotone decreasing in t, inside (0, 1]
        let mut prev = 1.0f64 + 1e-12;
        for k in 0..=20 {
            let t = 1.0 + 9.0 * k as f64 / 20.0;
            let b = riordan_warnke_bound(&TailBoundInput { t, ..input }, false).unwrap();
            assert!(b <= prev && b > 0.0 && b <= 1.0);
            prev = b;
        }
        // replacing theta_bar by a larger second moment only weakens it
        let weaker = TailBoundInput {
            theta_bar: 8.0,
            delta_bar: 8.0,
            ..input
        };
        assert!(
            riordan_warnke_bound(&input, false).unwrap()
                <= riordan_warnke_bound(&weaker, false).unwrap()
        );
    }

    #[test]
    fn riordan_warnke_reduces_to_janson_in_flat_mode() {
        // gamma = 0, theta = delta: identical values across a grid
        for k in 1..=100 {
            let mu = 0.1 * k as f64;
            let delta = 0.05 + 0.031 * k as f64;
            let t = mu * (k as f64 / 101.0);
            let input = TailBoundInput {
                mu,
                delta_bar: delta,
                theta_bar: delta,
                gamma_overlap: 0.0,
                t,
            };
            let j = janson_bound(&input).unwrap();
            let w = riordan_warnke_bound(&input, false).unwrap();
            assert!(
                (j - w).abs() <= 1e-12 * j.max(w),
                "k={k}: janson {j} vs generalized {w}"
            );
        }
    }

    #[test]
    fn monotone_bounds_in_t() {
        let fam = TailFamily::triangles_of_complete(4).unwrap();
        let st = family_stats(&fam, 0.35).unwrap();
        let mut prev = 1.0f64 + 1e-9;
        for k in 0..=9 {
            let t = st.mu * (k as f64) / 10.0;
            let input = TailBoundInput {
                mu: st.mu,
                delta_bar: st.delta_bar,
                theta_bar: st.theta_bar,
                gamma_overlap: 0.0,
                t,
            };
            let b = janson_bound(&input).unwrap();
            assert!(b <= prev && b > 0.0 && b <= 1.0);
            prev = b;
        }
    }

    #[test]
    fn empirical_matches_exhaustive_on_small_family() {
        let fam = TailFamily::flat(6, vec![vec![0, 1], vec![1, 2, 3], vec![4, 5], vec![0, 5]])
            .unwrap();
        let p = 0.4;
        let st = family_stats(&fam, p).unwrap();
        let t = 0.3 * st.mu;
        let exact = exhaustive_lower_tail(&fam, p, t).unwrap();
        let (est, se) = empirical_lower_tail(&fam, p, t, 100_000, 11).unwrap();
        assert!(
            (est - exact).abs() <= 3.0 * se.max(1e-4),
            "estimate {est} vs exact {exact} (se {se})"
        );
    }

    #[test]
    fn deterministic_at_p_one() {
        let fam = TailFamily::triangles_of_complete(4).unwrap();
        let (est, se) = empirical_lower_tail(&fam, 1.0, 0.5, 1000, 3).unwrap();
        // X = 4 always, mu = 4, threshold 3.5: estimate exactly 0
        assert_eq!(est, 0.0);
        assert_eq!(se, 0.0);
        let (est, _) = empirical_lower_tail(&fam, 1.0, -0.5, 1000, 3).unwrap();
        assert_eq!(est, 1.0);
    }

    #[test]
    fn empirical_below_janson_on_k4_family() {
        let fam = TailFamily::triangles_of_complete(4).unwrap();
        let p = 0.5;
        let st = family_stats(&fam, p).unwrap();
        for k in [2, 5, 8] {
            let t = st.mu * k as f64 / 10.0;
            let input = TailBoundInput {
                mu: st.mu,
                delta_bar: st.delta_bar,
                theta_bar: st.theta_bar,
                gamma_overlap: 0.0,
                t,
            };
            let bound = janson_bound(&input).unwrap();
            let (est, se) = empirical_lower_tail(&fam, p, t, 100_000, 21).unwrap();
            assert!(
                est <= bound + 3.0 * se,
                "t={t}: estimate {est} above bound {bound} + 3se"
            );
        }
    }

    #[test]
    fn empirical_thread_invariance() {
        let fam = TailFamily::triangles_of_complete(5).unwrap();
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| empirical_lower_tail(&fam, 0.4, 0.5, 20_000, 17).unwrap())
        };
        assert_eq!(run(1), run(8));
    }

    #[test]
    fn catalog_parses() {
        assert_eq!(
            MonotoneEvent::parse("triangle").unwrap(),
            MonotoneEvent::ContainsClique(3)
        );
        assert_eq!(
            MonotoneEvent::parse("edges_le_7").unwrap(),
            MonotoneEvent::EdgesAtMost(7)
        );
        assert!(MonotoneEvent::parse("nonsense").is_err());
        assert!(!MonotoneEvent::parse("max_deg_le_3").unwrap().is_increasing());
    }

    #[test]
    fn harris_negative_correlation() {
        // decreasing vs increasing: covariance below +3 standard errors
        let rep = harris_covariance_check("edges_le_7__triangle", 6, 0.5, 100_000, 31).unwrap();
        assert!(!rep.f_increasing && rep.g_increasing);
        assert!(
            rep.cov_estimate <= 3.0 * rep.std_error,
            "cov {} se {}",
            rep.cov_estimate,
            rep.std_error
        );
        // in this configuration the correlation is genuinely negative
        assert!(rep.cov_estimate < 0.0);
    }

    #[test]
    fn harris_positive_association() {
        // two increasing events: covariance above -3 standard errors
        let rep =
            harris_covariance_check("edges_ge_8__triangle", 6, 0.5, 100_000, 37).unwrap();
        assert!(rep.f_increasing && rep.g_increasing);
        assert!(rep.cov_estimate >= -3.0 * rep.std_error);
    }

    #[test]
    fn harris_matches_exhaustive_covariance_at_n5() {
        // exact covariance over all 2^10 graphs on 5 vertices
        let n = 5usize;
        let p = 0.5f64;
        let f = MonotoneEvent::parse("edges_le_5").unwrap();
        let g_ev = MonotoneEvent::parse("triangle").unwrap();
        let pairs = crate::graph::all_pairs(n);
        let mut e_f = 0f64;
        let mut e_g = 0f64;
        let mut e_fg = 0f64;
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let w = p.powi(edges.len() as i32)
                * (1.0 - p).powi((pairs.len() - edges.len()) as i32);
            let graph = Graph::from_edges(n, &edges);
            let fv = f.holds(&graph) as u8 as f64;
            let gv = g_ev.holds(&graph) as u8 as f64;
            e_f += w * fv;
            e_g += w * gv;
            e_fg += w * fv * gv;
        }
        let exact_cov = e_fg - e_f * e_g;
        // f decreasing, g increasing: the exact covariance is nonpositive
        assert!(exact_cov <= 1e-15, "exact covariance {exact_cov}");

        let rep = harris_covariance_check("edges_le_5__triangle", n, p, 200_000, 53).unwrap();
        assert!(
            (rep.cov_estimate - exact_cov).abs() <= 3.0 * rep.std_error.max(1e-4),
            "estimate {} vs exact {exact_cov} (se {})",
            rep.cov_estimate,
            rep.std_error
        );
    }

    #[test]
    fn empirical_matches_exhaustive_on_ten_bit_family() {
        // 2^10-outcome ground set
        let fam = TailFamily::flat(
            10,
            vec![
                vec![0, 1, 2],
                vec![2, 3, 4],
                vec![5, 6],
                vec![7, 8, 9],
                vec![0, 9],
                vec![4, 5, 6, 7],
            ],
        )
        .unwrap();
        let p = 0.55;
        let st = family_stats(&fam, p).unwrap();
        for frac in [0.2, 0.6] {
            let t = frac * st.mu;
            let exact = exhaustive_lower_tail(&fam, p, t).unwrap();
            let (est, se) = empirical_lower_tail(&fam, p, t, 100_000, 77).unwrap();
            assert!(
                (est - exact).abs() <= 3.0 * se.max(1e-4),
                "t={t}: estimate {est} vs exact {exact}"
            );
        }
    }

    #[test]
    fn harris_degenerate_p() {
        for p in [0.0, 1.0] {
            let rep = harris_covariance_check("edges_le_7__triangle", 6, p, 2_000, 3).unwrap();
            assert_eq!(rep.cov_estimate, 0.0);
        }
        assert!(harris_covariance_check("widget__triangle", 6, 0.5, 10, 3).is_err());
    }

    #[test]
    fn two_model_estimates_match_exact_small_case() {
        // exact P(K_3 ⊆ G(5, 0.5)) by exhaustive enumeration over 2^10
        let n = 5usize;
        let p = 0.5f64;
        let pairs: Vec<(usize, usize)> = crate::graph::all_pairs(n);
        let mut exact_gnp = 0f64;
        let m_target = (p * pairs.len() as f64).round() as usize;
        let mut count_m = 0usize;
        let mut hit_m = 0usize;
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges);
            let has = g.has_clique(3);
            if has {
                exact_gnp += p.powi(edges.len() as i32)
                    * (1.0 - p).powi((pairs.len() - edges.len()) as i32);
            }
            if edges.len() == m_target {
                count_m += 1;
                hit_m += has as usize;
            }
        }
        let exact_gnm = hit_m as f64 / count_m as f64;

        let rep = two_model_compare("triangle", n, p, 100_000, 41).unwrap();
        assert_eq!(rep.m, m_target);
        assert!(
            (rep.gnp_estimate - exact_gnp).abs() <= 3.0 * rep.gnp_std_error.max(1e-4),
            "gnp {} vs exact {exact_gnp}",
            rep.gnp_estimate
        );
        assert!(
            (rep.gnm_estimate - exact_gnm).abs() <= 3.0 * rep.gnm_std_error.max(1e-4),
            "gnm {} vs exact {exact_gnm}",
            rep.gnm_estimate
        );
        assert!(rep.abs_difference >= 0.0);
    }

    #[test]
    fn two_model_certainty_case() {
        let rep = two_model_compare("edges_ge_1", 5, 1.0, 500, 3).unwrap();
        assert_eq!(rep.gnp_estimate, 1.0);
        assert_eq!(rep.gnm_estimate, 1.0);
    }

    #[test]
    fn family_json_roundtrip() {
        let fam = TailFamily::from_json(r#"{"ground_size": 6, "events": [[0,1,2],[3,4]]}"#)
            .unwrap();
        assert_eq!(fam.ground_size, 6);
        assert_eq!(fam.total_events(), 2);
        assert!(TailFamily::from_json(r#"{"ground_size": 2, "events": [[5]]}"#).is_err());
    }
}
