//! Exact solvers for the two extremal quantities everything else is
//! measured against: the maximum `K_r`-free subgraph (via minimum hitting
//! set over enumerated `K_r` copies) and the maximum `k`-partite subgraph
//! (via branch and bound over vertex assignments).  Brute-force oracles are
//! shipped alongside for verification.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde_json::json;

/// Witness attached to a solve: an edge set for `K_r`-free solves, an
/// ordered partition for partite solves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Edges(Vec<(usize, usize)>),
    Parts(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Witness,
    /// Exact optimum; false only when a node budget was supplied and hit.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub budget_hit: bool,
}

impl SolveResult {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "value": self.value,
            "optimal": self.optimal,
            "nodes": self.nodes_explored,
        });
        match &self.witness {
            Witness::Edges(es) => {
                v["witness_edges"] = json!(es.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>());
            }
            Witness::Parts(ps) => {
                v["witness_parts"] = json!(ps);
            }
        }
        v
    }
}

/// Shared scaffolding for the hitting-set search.
struct HittingSetInstance {
    m: usize,
    copy_words: usize,
    edge_words: usize,
    /// per copy: bitset of its edge indices
    copy_edges: Vec<Vec<u64>>,
    /// per edge: copy indices containing it
    edge_copies: Vec<Vec<u32>>,
    /// per copy: its edge indices
    copy_edge_list: Vec<Vec<usize>>,
}

impl HittingSetInstance {
    fn new(g: &Graph, r: usize) -> Self {
        let edges = g.edges();
        let m = edges.len();
        let mut edge_index = std::collections::HashMap::new();
        for (i, &e) in edges.iter().enumerate() {
            edge_index.insert(e, i);
        }
        let cliques = g.cliques(r);
        let edge_words = bits::words_for(m);
        let copy_words = bits::words_for(cliques.len());
        let mut copy_edges = Vec::with_capacity(cliques.len());
        let mut copy_edge_list = Vec::with_capacity(cliques.len());
        let mut edge_copies = vec![Vec::new(); m];
        for (ci, cl) in cliques.iter().enumerate() {
            let mut mask = vec![0u64; edge_words];
            let mut list = Vec::new();
            for i in 0..cl.len() {
                for j in i + 1..cl.len() {
                    let e = edge_index[&(cl[i], cl[j])];
                    bits::set_bit(&mut mask, e);
                    list.push(e);
                    edge_copies[e].push(ci as u32);
                }
            }
            list.sort_unstable();
            copy_edges.push(mask);
            copy_edge_list.push(list);
        }
        HittingSetInstance {
            m,
            copy_words,
            edge_words,
            copy_edges,
            edge_copies,
            copy_edge_list,
        }
    }

    fn n_copies(&self) -> usize {
        self.copy_edges.len()
    }

    /// Greedy hitting set: repeatedly delete the edge covering the most
    /// uncovered copies (lowest index on ties).
    fn greedy(&self) -> Vec<usize> {
        let mut covered = vec![0u64; self.copy_words];
        let mut deleted = Vec::new();
        let mut n_covered = 0;
        while n_covered < self.n_copies() {
            let mut best_e = usize::MAX;
            let mut best_gain = 0usize;
            for e in 0..self.m {
                let gain = self.edge_copies[e]
                    .iter()
                    .filter(|&&c| !bits::test_bit(&covered, c as usize))
                    .count();
                if gain > best_gain {
                    best_gain = gain;
                    best_e = e;
                }
            }
            debug_assert!(best_e != usize::MAX);
            deleted.push(best_e);
            for &c in &self.edge_copies[best_e] {
                if !bits::test_bit(&covered, c as usize) {
                    bits::set_bit(&mut covered, c as usize);
                    n_covered += 1;
                }
            }
        }
        deleted
    }

    /// Lower bound: greedy packing of edge-disjoint uncovered copies.
    fn packing_bound(&self, covered: &[u64]) -> usize {
        let mut used = vec![0u64; self.edge_words];
        let mut count = 0usize;
        'outer: for c in 0..self.n_copies() {
            if bits::test_bit(covered, c) {
                continue;
            }
            for (w, &cw) in self.copy_edges[c].iter().enumerate() {
                if used[w] & cw != 0 {
                    continue 'outer;
                }
            }
            for (w, &cw) in self.copy_edges[c].iter().enumerate() {
                used[w] |= cw;
            }
            count += 1;
        }
        count
    }

    fn first_uncovered(&self, covered: &[u64]) -> Option<usize> {
        (0..self.n_copies()).find(|&c| !bits::test_bit(covered, c))
    }
}

struct HittingSetSearch<'a> {
    inst: &'a HittingSetInstance,
    best: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    budget_hit: bool,
}

impl<'a> HittingSetSearch<'a> {
    fn run(inst: &'a HittingSetInstance, budget: Option<u64>) -> (Vec<usize>, u64, bool) {
        let mut s = HittingSetSearch {
            inst,
            best: inst.greedy(),
            nodes: 0,
            budget,
            budget_hit: false,
        };
        let mut covered = vec![0u64; inst.copy_words];
        let mut deleted = Vec::new();
        s.dfs(&mut covered, &mut deleted);
        (s.best, s.nodes, s.budget_hit)
    }

    fn dfs(&mut self, covered: &mut [u64], deleted: &mut Vec<usize>) {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.budget_hit = true;
                return;
            }
        }
        if deleted.len() + self.inst.packing_bound(covered) >= self.best.len() {
            return;
        }
        let Some(c) = self.inst.first_uncovered(covered) else {
            // strict improvement guaranteed by the bound check above
            self.best = deleted.clone();
            return;
        };
        for &e in &self.inst.copy_edge_list[c] {
            let newly: Vec<u32> = self.inst.edge_copies[e]
                .iter()
                .copied()
                .filter(|&ci| !bits::test_bit(covered, ci as usize))
                .collect();
            for &ci in &newly {
                bits::set_bit(covered, ci as usize);
            }
            deleted.push(e);
            self.dfs(covered, deleted);
            deleted.pop();
            for &ci in &newly {
                bits::clear_bit(covered, ci as usize);
            }
            if self.budget_hit {
                return;
            }
        }
    }
}

/// Maximum `K_r`-free subgraph of `g`, exact unless the node budget is hit.
///
/// `value = |G| - (minimum number of edges meeting every K_r copy)`; the
/// witness is the `K_r`-free subgraph realizing it.
pub fn max_kr_free(g: &Graph, r: usize, budget: Option<u64>) -> Result<SolveResult> {
    if r < 3 {
        return Err(Error::invalid("clique order r must be at least 3"));
    }
    let inst = HittingSetInstance::new(g, r);
    let (deleted, nodes, budget_hit) = HittingSetSearch::run(&inst, budget);
    let edges = g.edges();
    let mut del_mask = vec![false; edges.len()];
    for &e in &deleted {
        del_mask[e] = true;
    }
    let witness: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !del_mask[*i])
        .map(|(_, &e)| e)
        .collect();
    let result = SolveResult {
        value: edges.len() - deleted.len(),
        witness: Witness::Edges(witness),
        optimal: !budget_hit,
        nodes_explored: nodes,
        budget_hit,
    };
    debug_assert!(
        budget_hit || {
            let w = Graph::from_edges(g.n(), match &result.witness {
                Witness::Edges(es) => es,
                _ => unreachable!(),
            });
            !w.has_clique(r)
        },
        "witness contains a K_r"
    );
    Ok(result)
}

/// Brute-force oracle for [`max_kr_free`]: exhaustive DFS over `K_r`-free
/// edge subsets (include/exclude in index order, trivial remaining-count
/// prune, incremental clique check).
pub fn brute_force_max_kr_free(g: &Graph, r: usize) -> Result<SolveResult> {
    if r < 3 {
        return Err(Error::invalid("clique order r must be at least 3"));
    }
    let edges = g.edges();
    // greedy seed so the trivial bound bites early
    let mut seed_graph = Graph::empty(g.n());
    let mut seed = Vec::new();
    for &(u, v) in &edges {
        seed_graph.add_edge(u, v);
        if creates_clique(&seed_graph, u, v, r) {
            seed_graph.remove_edge(u, v);
        } else {
            seed.push((u, v));
        }
    }

    struct S<'a> {
        edges: &'a [(usize, usize)],
        r: usize,
        best: Vec<(usize, usize)>,
        current: Vec<(usize, usize)>,
        nodes: u64,
    }
    impl S<'_> {
        fn dfs(&mut self, i: usize, f: &mut Graph) {
            self.nodes += 1;
            if self.current.len() + (self.edges.len() - i) <= self.best.len() {
                return;
            }
            if i == self.edges.len() {
                self.best = self.current.clone();
                return;
            }
            let (u, v) = self.edges[i];
            f.add_edge(u, v);
            if !creates_clique(f, u, v, self.r) {
                self.current.push((u, v));
                self.dfs(i + 1, f);
                self.current.pop();
            }
            f.remove_edge(u, v);
            self.dfs(i + 1, f);
        }
    }
    let mut s = S {
        edges: &edges,
        r,
        best: seed,
        current: Vec::new(),
        nodes: 0,
    };
    let mut f = Graph::empty(g.n());
    s.dfs(0, &mut f);
    debug_assert_eq!(s.best.len(), {
        let w = Graph::from_edges(g.n(), &s.best);
        assert!(!w.has_clique(r));
        s.best.len()
    });
    Ok(SolveResult {
        value: s.best.len(),
        witness: Witness::Edges(s.best.clone()),
        optimal: true,
        nodes_explored: s.nodes,
        budget_hit: false,
    })
}

/// Does adding the already-inserted edge `uv` close a `K_r` in `f`?
fn creates_clique(f: &Graph, u: usize, v: usize, r: usize) -> bool {
    let mut common = vec![0u64; f.words()];
    bits::and_into(f.row(u), f.row(v), &mut common);
    f.count_cliques_in(&common, r - 2) > 0
}

/// Maximum `k`-partite subgraph: branch and bound assigning vertices in
/// descending degree order, first vertex pinned to part 0.
pub fn max_partite(g: &Graph, k: usize, budget: Option<u64>) -> Result<SolveResult> {
    if k < 1 {
        return Err(Error::invalid("part count k must be at least 1"));
    }
    let n = g.n();
    if k >= n {
        // singleton parts: everything crosses
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); k];
        for v in 0..n {
            parts[v].push(v);
        }
        return Ok(SolveResult {
            value: g.edge_count(),
            witness: Witness::Parts(parts),
            optimal: true,
            nodes_explored: 1,
            budget_hit: false,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    struct S<'a> {
        g: &'a Graph,
        order: &'a [usize],
        k: usize,
        assign: Vec<usize>, // part of order[i], usize::MAX = unassigned
        // per vertex: neighbors already assigned to each part
        d_part: Vec<Vec<usize>>,
        unassigned_edges: usize,
        cross: usize,
        best_value: usize,
        best_assign: Vec<usize>,
        nodes: u64,
        budget: Option<u64>,
        budget_hit: bool,
    }
    impl S<'_> {
        fn upper_bound(&self, next: usize) -> usize {
            let mut ub = self.cross + self.unassigned_edges;
            for &v in &self.order[next..] {
                let assigned_deg: usize = self.d_part[v].iter().sum();
                let forced = self.d_part[v].iter().min().copied().unwrap_or(0);
                ub += assigned_deg - forced;
            }
            ub
        }

        fn dfs(&mut self, i: usize, used: usize) {
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    self.budget_hit = true;
                    return;
                }
            }
            if i == self.order.len() {
                if self.cross > self.best_value {
                    self.best_value = self.cross;
                    self.best_assign = self.assign.clone();
                }
                return;
            }
            if self.upper_bound(i) <= self.best_value {
                return;
            }
            let v = self.order[i];
            let limit = (used + 1).min(self.k);
            for part in 0..limit {
                let internal = self.d_part[v][part];
                let assigned_deg: usize = self.d_part[v].iter().sum();
                self.assign[v] = part;
                self.cross += assigned_deg - internal;
                let mut touched = Vec::new();
                for u in self.g.neighbors(v) {
                    if self.assign[u] == usize::MAX && u != v {
                        self.d_part[u][part] += 1;
                        self.unassigned_edges -= 1;
                        touched.push(u);
                    }
                }
                self.dfs(i + 1, used.max(part + 1));
                for &u in &touched {
                    self.d_part[u][part] -= 1;
                    self.unassigned_edges += 1;
                }
                self.cross -= assigned_deg - internal;
                self.assign[v] = usize::MAX;
                if self.budget_hit {
                    return;
                }
            }
        }
    }

    // greedy seed: each vertex to the part minimizing internal edges, so a
    // budget-hit search still returns a valid witness
    let mut greedy_assign = vec![usize::MAX; n];
    for (idx, &v) in order.iter().enumerate() {
        let pick = if idx == 0 {
            0
        } else {
            (0..k)
                .min_by_key(|&part| {
                    g.neighbors(v)
                        .filter(|&u| greedy_assign[u] == part)
                        .count()
                })
                .unwrap()
        };
        greedy_assign[v] = pick;
    }
    let greedy_value = g
        .edges()
        .iter()
        .filter(|&&(u, v)| greedy_assign[u] != greedy_assign[v])
        .count();

    let mut s = S {
        g,
        order: &order,
        k,
        assign: vec![usize::MAX; n],
        d_part: vec![vec![0usize; k]; n],
        unassigned_edges: g.edge_count(),
        cross: 0,
        best_value: greedy_value,
        best_assign: greedy_assign,
        nodes: 0,
        budget,
        budget_hit: false,
    };
    s.dfs(0, 0);

    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in 0..n {
        parts[s.best_assign[v]].push(v);
    }
    Ok(SolveResult {
        value: s.best_value,
        witness: Witness::Parts(parts),
        optimal: !s.budget_hit,
        nodes_explored: s.nodes,
        budget_hit: s.budget_hit,
    })
}

/// Brute-force oracle for [`max_partite`]: all `k^(n-1)` assignments with
/// vertex 0 pinned.
pub fn brute_force_max_partite(g: &Graph, k: usize) -> Result<SolveResult> {
    if k < 1 {
        return Err(Error::invalid("part count k must be at least 1"));
    }
    let n = g.n();
    let k_eff = k.min(n);
    let edges = g.edges();
    let mut assign = vec![0usize; n];
    let mut best = 0usize;
    let mut best_assign = assign.clone();
    loop {
        let cross = edges
            .iter()
            .filter(|&&(u, v)| assign[u] != assign[v])
            .count();
        if cross > best {
            best = cross;
            best_assign = assign.clone();
        }
        // odometer over vertices 1..n (vertex 0 pinned to part 0)
        let mut i = 1;
        while i < n {
            assign[i] += 1;
            if assign[i] < k_eff {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in 0..n {
        parts[best_assign[v]].push(v);
    }
    Ok(SolveResult {
        value: best,
        witness: Witness::Parts(parts),
        optimal: true,
        nodes_explored: 0,
        budget_hit: false,
    })
}

#[derive(Debug, Clone)]
pub struct TuranGap {
    pub t: SolveResult,
    pub b: SolveResult,
    /// `t - b`, present only when both sides are exact.
    pub gap: Option<usize>,
}

/// Exact `t_r` and `b_r` with the two standing inequalities asserted:
/// `t_r >= b_r` and `(r-1) b_r >= (r-2) |G|`.
pub fn turan_gap(g: &Graph, r: usize, budget: Option<u64>) -> Result<TuranGap> {
    let t = max_kr_free(g, r, budget)?;
    let b = max_partite(g, r - 1, budget)?;
    let gap = if t.optimal && b.optimal {
        assert!(t.value >= b.value, "t_r < b_r on an exact solve");
        assert!(
            (r - 1) * b.value >= (r - 2) * g.edge_count(),
            "standard observation violated: (r-1) b_r < (r-2) |G|"
        );
        Some(t.value - b.value)
    } else {
        None
    };
    Ok(TuranGap { t, b, gap })
}

/// Is the graph on `n` vertices with the given edges properly
/// `k`-vertex-colorable?
pub fn is_k_colorable(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    if k >= n {
        return true;
    }
    let g = Graph::from_edges(n, edges);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];
    fn rec(g: &Graph, order: &[usize], color: &mut [usize], i: usize, k: usize, used: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(k);
        'c: for c in 0..limit {
            for u in g.neighbors(v) {
                if color[u] == c {
                    continue 'c;
                }
            }
            color[v] = c;
            if rec(g, order, color, i + 1, k, used.max(c + 1)) {
                return true;
            }
            color[v] = usize::MAX;
        }
        false
    }
    rec(&g, &order, &mut color, 0, k, 0)
}

/// Default guard for [`all_max_kr_free_partite`].
pub const OPTIMA_EDGE_LIMIT: usize = 40;

/// True iff every maximum `K_r`-free subgraph of `g` is `(r-1)`-partite,
/// by enumerating all optima of the hitting-set formulation.
///
/// Guarded: rejects graphs with more than `edge_limit` edges
/// (default [`OPTIMA_EDGE_LIMIT`]).
pub fn all_max_kr_free_partite(g: &Graph, r: usize, edge_limit: Option<usize>) -> Result<bool> {
    if r < 3 {
        return Err(Error::invalid("clique order r must be at least 3"));
    }
    let limit = edge_limit.unwrap_or(OPTIMA_EDGE_LIMIT);
    if g.edge_count() > limit {
        return Err(Error::GuardExceeded(format!(
            "all_max_kr_free_partite: {} edges exceeds the guard of {limit}",
            g.edge_count()
        )));
    }
    let inst = HittingSetInstance::new(g, r);
    let (best, _, _) = HittingSetSearch::run(&inst, None);
    let tau = best.len();
    let edges = g.edges();

    // enumerate all hitting sets of size exactly tau, in edge-index order
    let max_edge_of_copy: Vec<usize> = inst
        .copy_edge_list
        .iter()
        .map(|es| es.iter().copied().max().unwrap())
        .collect();
    struct E<'a> {
        inst: &'a HittingSetInstance,
        max_edge_of_copy: &'a [usize],
        tau: usize,
        deleted: Vec<usize>,
        all: Vec<Vec<usize>>,
    }
    impl E<'_> {
        fn dfs(&mut self, i: usize, covered: &mut [u64], n_covered: usize) {
            if self.deleted.len() == self.tau {
                if n_covered == self.inst.n_copies() {
                    self.all.push(self.deleted.clone());
                }
                return;
            }
            if i == self.inst.m || self.deleted.len() + (self.inst.m - i) < self.tau {
                return;
            }
            // include edge i
            let newly: Vec<u32> = self.inst.edge_copies[i]
                .iter()
                .copied()
                .filter(|&c| !bits::test_bit(covered, c as usize))
                .collect();
            for &c in &newly {
                bits::set_bit(covered, c as usize);
            }
            self.deleted.push(i);
            self.dfs(i + 1, covered, n_covered + newly.len());
            self.deleted.pop();
            for &c in &newly {
                bits::clear_bit(covered, c as usize);
            }
            // exclude edge i: only feasible when no copy ending at i is left uncovered
            let dead = (0..self.inst.n_copies()).any(|c| {
                self.max_edge_of_copy[c] == i && !bits::test_bit(covered, c)
            });
            if !dead {
                self.dfs(i + 1, covered, n_covered);
            }
        }
    }
    let mut e = E {
        inst: &inst,
        max_edge_of_copy: &max_edge_of_copy,
        tau,
        deleted: Vec::new(),
        all: Vec::new(),
    };
    let mut covered = vec![0u64; inst.copy_words];
    e.dfs(0, &mut covered, 0);
    debug_assert!(!e.all.is_empty());

    for del in &e.all {
        let del_set: std::collections::HashSet<usize> = del.iter().copied().collect();
        let f_edges: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !del_set.contains(i))
            .map(|(_, &e)| e)
            .collect();
        if !is_k_colorable(g.n(), &f_edges, r - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_gnp, Graph};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn kr_free_known_values() {
        let c5 = cycle(5);
        assert_eq!(max_kr_free(&c5, 3, None).unwrap().value, 5);

        let k5 = Graph::complete(5);
        // frozen from the brute-force oracle below
        assert_eq!(max_kr_free(&k5, 3, None).unwrap().value, 6);
        assert_eq!(max_kr_free(&k5, 4, None).unwrap().value, 8);
        assert_eq!(brute_force_max_kr_free(&k5, 3).unwrap().value, 6);
        assert_eq!(brute_force_max_kr_free(&k5, 4).unwrap().value, 8);
    }

    #[test]
    fn partite_known_values() {
        let c5 = cycle(5);
        assert_eq!(max_partite(&c5, 2, None).unwrap().value, 4);
        assert_eq!(brute_force_max_partite(&c5, 2).unwrap().value, 4);

        let k5 = Graph::complete(5);
        assert_eq!(max_partite(&k5, 2, None).unwrap().value, 6);
        assert_eq!(brute_force_max_partite(&k5, 2).unwrap().value, 6);

        // k >= n: singleton parts take every edge
        let g = sample_gnp(7, 0.5, 4).unwrap();
        assert_eq!(max_partite(&g, 7, None).unwrap().value, g.edge_count());
        assert_eq!(max_partite(&g, 9, None).unwrap().value, g.edge_count());
    }

    #[test]
    fn partite_witness_consistent() {
        let g = sample_gnp(9, 0.5, 21).unwrap();
        let res = max_partite(&g, 3, None).unwrap();
        let Witness::Parts(parts) = &res.witness else { panic!() };
        assert_eq!(parts.len(), 3);
        let mut seen = vec![false; g.n()];
        for p in parts {
            for &v in p {
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        let mut cross = 0;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                cross += g.cross_edges(&parts[i], &parts[j]);
            }
        }
        assert_eq!(cross, res.value);
    }

    #[test]
    fn kr_free_witness_consistent() {
        let g = sample_gnp(9, 0.6, 5).unwrap();
        let res = max_kr_free(&g, 3, None).unwrap();
        let Witness::Edges(es) = &res.witness else { panic!() };
        assert_eq!(es.len(), res.value);
        let w = Graph::from_edges(g.n(), es);
        assert!(!w.has_clique(3));
    }

    #[test]
    fn turan_gap_examples() {
        let k6 = Graph::complete(6);
        let tg = turan_gap(&k6, 3, None).unwrap();
        assert_eq!(tg.gap, Some(0));

        let c5 = cycle(5);
        let tg = turan_gap(&c5, 3, None).unwrap();
        assert_eq!((tg.t.value, tg.b.value, tg.gap), (5, 4, Some(1)));

        let e = Graph::empty(4);
        let tg = turan_gap(&e, 3, None).unwrap();
        assert_eq!((tg.t.value, tg.b.value, tg.gap), (0, 0, Some(0)));
    }

    #[test]
    fn solver_matches_brute_force_small() {
        let mut checked = 0;
        for seed in 0..12 {
            for &p in &[0.3, 0.6] {
                let g = sample_gnp(8, p, seed).unwrap();
                for r in [3, 4] {
                    let bb = max_kr_free(&g, r, None).unwrap();
                    let bf = brute_force_max_kr_free(&g, r).unwrap();
                    assert_eq!(bb.value, bf.value, "t_{r} mismatch seed {seed} p {p}");
                    let bb = max_partite(&g, r - 1, None).unwrap();
                    let bf = brute_force_max_partite(&g, r - 1).unwrap();
                    assert_eq!(bb.value, bf.value, "b_{r} mismatch seed {seed} p {p}");
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 48);
    }

    #[test]
    fn single_edge_deletion_changes_values_by_at_most_one() {
        for seed in 0..6 {
            let g = sample_gnp(8, 0.5, seed).unwrap();
            let t = max_kr_free(&g, 3, None).unwrap().value;
            let b = max_partite(&g, 2, None).unwrap().value;
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if i % 3 != 0 {
                    continue; // spot check
                }
                let mut h = g.clone();
                h.remove_edge(u, v);
                let t2 = max_kr_free(&h, 3, None).unwrap().value;
                let b2 = max_partite(&h, 2, None).unwrap().value;
                assert!(t - t2 <= 1, "t dropped by more than 1");
                assert!(b - b2 <= 1, "b dropped by more than 1");
                assert!(t2 <= t && b2 <= b);
            }
        }
    }

    #[test]
    fn budget_exhaustion_reports_nonoptimal() {
        let k8 = Graph::complete(8);
        let res = max_kr_free(&k8, 3, Some(2)).unwrap();
        assert!(!res.optimal);
        assert!(res.budget_hit);
        // witness still valid
        let Witness::Edges(es) = &res.witness else { panic!() };
        let w = Graph::from_edges(8, es);
        assert!(!w.has_clique(3));
    }

    #[test]
    fn all_optima_partite() {
        let k5 = Graph::complete(5);
        assert!(all_max_kr_free_partite(&k5, 3, None).unwrap());

        let c5 = cycle(5);
        assert!(!all_max_kr_free_partite(&c5, 3, None).unwrap());

        // no K_r present: true iff the graph itself is (r-1)-partite
        let c4 = cycle(4);
        assert!(all_max_kr_free_partite(&c4, 3, None).unwrap());
        assert!(!all_max_kr_free_partite(&c5, 3, None).unwrap());
        assert!(all_max_kr_free_partite(&c5, 4, None).unwrap());

        let big = Graph::complete(12);
        assert!(all_max_kr_free_partite(&big, 3, None).is_err());
    }

    #[test]
    fn optima_enumeration_matches_subset_scan() {
        // dual oracle: enumerate every maximum K_r-free subgraph by a full
        // 2^m scan and compare the all-partite verdict
        for seed in 0..20 {
            let g = sample_gnp(6, 0.5, 3000 + seed).unwrap();
            let edges = g.edges();
            let m = edges.len();
            if m > 15 {
                continue;
            }
            for r in [3usize, 4] {
                let mut best = 0usize;
                let mut optima: Vec<Vec<(usize, usize)>> = Vec::new();
                for mask in 0u32..(1 << m) {
                    let subset: Vec<(usize, usize)> = edges
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let h = Graph::from_edges(6, &subset);
                    if h.has_clique(r) {
                        continue;
                    }
                    match subset.len().cmp(&best) {
                        std::cmp::Ordering::Greater => {
                            best = subset.len();
                            optima = vec![subset];
                        }
                        std::cmp::Ordering::Equal => optima.push(subset),
                        std::cmp::Ordering::Less => {}
                    }
                }
                let expected = optima.iter().all(|f| is_k_colorable(6, f, r - 1));
                assert_eq!(
                    all_max_kr_free_partite(&g, r, None).unwrap(),
                    expected,
                    "seed {seed} r {r}"
                );
            }
        }
    }

    #[test]
    fn turan_equality_on_complete_graphs() {
        for r in [3, 4, 5] {
            for n in 3..=9 {
                let g = Graph::complete(n);
                let tg = turan_gap(&g, r, None).unwrap();
                assert_eq!(tg.gap, Some(0), "K_{n}, r={r}");
            }
        }
    }

    #[test]
    fn json_schema() {
        let k4 = Graph::complete(4);
        let res = max_kr_free(&k4, 3, None).unwrap();
        let v = res.to_json();
        assert!(v.get("value").is_some());
        assert!(v.get("optimal").is_some());
        assert!(v.get("nodes").is_some());
        assert!(v.get("witness_edges").is_some());
        let res = max_partite(&k4, 2, None).unwrap();
        assert!(res.to_json().get("witness_parts").is_some());
    }
}

