//! Undirected simple graphs on vertex set `0..n` with bitset adjacency rows,
//! random generators and the text file format.

use crate::bits;
use crate::error::{Error, Result};
use crate::rng::stream_rng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Undirected simple graph; adjacency is kept symmetric and loop-free.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0u64; n * words],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut g = Graph::empty(n);
        let mut bounds = Vec::with_capacity(parts.len() + 1);
        bounds.push(0usize);
        for &s in parts {
            bounds.push(bounds.last().unwrap() + s);
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for u in bounds[i]..bounds[i + 1] {
                    for v in bounds[j]..bounds[j + 1] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        if !self.has_edge(u, v) {
            bits::set_bit(&mut self.rows[u * self.words..(u + 1) * self.words], v);
            bits::set_bit(&mut self.rows[v * self.words..(v + 1) * self.words], u);
            self.edge_count += 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            bits::clear_bit(&mut self.rows[u * self.words..(u + 1) * self.words], v);
            bits::clear_bit(&mut self.rows[v * self.words..(v + 1) * self.words], u);
            self.edge_count -= 1;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test_bit(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count_ones(self.row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Number of common neighbors `|N(x) ∩ N(y)|`.
    pub fn codegree(&self, x: usize, y: usize) -> usize {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Degree of `v` into the vertex set `set`.
    pub fn degree_into(&self, v: usize, set: &[usize]) -> usize {
        set.iter().filter(|&&u| self.has_edge(v, u)).count()
    }

    /// Edges with both endpoints in `set` (the size of the induced subgraph).
    pub fn induced_edges(&self, set: &[usize]) -> usize {
        let mut mask = vec![0u64; self.words];
        for &v in set {
            bits::set_bit(&mut mask, v);
        }
        let mut total = 0usize;
        for &v in set {
            total += self
                .row(v)
                .iter()
                .zip(&mask)
                .map(|(&a, &b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        total / 2
    }

    /// Edges between the disjoint vertex sets `s` and `t`.
    pub fn cross_edges(&self, s: &[usize], t: &[usize]) -> usize {
        s.iter().map(|&v| self.degree_into(v, t)).sum()
    }

    /// Edges in canonical order (`u < v`, lexicographically sorted).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in bits::ones(self.row(u)) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Checks adjacency symmetry, loop-freeness and the cached edge count.
    pub fn check_invariants(&self) -> bool {
        let mut total = 0usize;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in 0..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return false;
                }
            }
            total += self.degree(u);
        }
        total == 2 * self.edge_count
    }

    /// True when the induced subgraph on `cand ∩ rest` contains a clique of
    /// size `k`; `cand` is a bitset row.
    fn has_clique_in(&self, cand: &[u64], k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if bits::count_ones(cand) < k {
            return false;
        }
        let mut next = vec![0u64; self.words];
        for v in bits::ones(cand) {
            bits::and_into(cand, self.row(v), &mut next);
            // only keep candidates above v to avoid revisiting
            for i in 0..=v {
                bits::clear_bit(&mut next, i);
            }
            if self.has_clique_in(&next.clone(), k - 1) {
                return true;
            }
        }
        false
    }

    /// True when `G` contains a complete subgraph on `r` vertices.
    pub fn has_clique(&self, r: usize) -> bool {
        let full: Vec<u64> = {
            let mut m = vec![0u64; self.words];
            for v in 0..self.n {
                bits::set_bit(&mut m, v);
            }
            m
        };
        self.has_clique_in(&full, r)
    }

    /// All `r`-cliques, each as a sorted vertex list.
    pub fn cliques(&self, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(r);
        let mut cand = vec![0u64; self.words];
        for v in 0..self.n {
            bits::set_bit(&mut cand, v);
        }
        self.cliques_in_rec(&cand, r, &mut current, &mut out);
        out
    }

    /// All `k`-cliques inside the candidate bitset, as sorted vertex lists.
    pub fn cliques_in(&self, cand: &[u64], k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        self.cliques_in_rec(cand, k, &mut current, &mut out);
        out
    }

    /// Number of `k`-cliques inside the candidate bitset `cand`.
    pub fn count_cliques_in(&self, cand: &[u64], k: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        if bits::count_ones(cand) < k {
            return 0;
        }
        if k == 1 {
            return bits::count_ones(cand) as u64;
        }
        let mut total = 0u64;
        let mut next = vec![0u64; self.words];
        for v in bits::ones(cand) {
            bits::and_into(cand, self.row(v), &mut next);
            for i in 0..=v {
                bits::clear_bit(&mut next, i);
            }
            total += self.count_cliques_in(&next.clone(), k - 1);
        }
        total
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count, self.edges())
    }
}

/// All unordered pairs of `0..n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Binomial random graph: every pair kept independently with probability `p`.
///
/// Identical `(n, p, seed)` reproduces the identical graph bit for bit.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    sample_gnp_with(n, p, &mut stream_rng(seed, 0))
}

/// [`sample_gnp`] over a caller-provided stream, for derived per-trial
/// generators.
pub fn sample_gnp_with(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("p = {p} outside [0, 1]")));
    }
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Uniform random graph with exactly `m` edges, via partial Fisher-Yates
/// over the pair indices.
pub fn sample_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    sample_gnm_with(n, m, &mut stream_rng(seed, 0))
}

/// [`sample_gnm`] over a caller-provided stream.
pub fn sample_gnm_with(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph> {
    let total = n * (n - 1) / 2;
    if m > total {
        return Err(Error::invalid(format!(
            "m = {m} exceeds the {total} pairs of an {n}-vertex graph"
        )));
    }
    let mut pairs = all_pairs(n);
    let mut g = Graph::empty(n);
    for i in 0..m {
        let j = rng.gen_range(i..total);
        pairs.swap(i, j);
        let (u, v) = pairs[i];
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Adds uniformly random edges one at a time and stops at the first prefix
/// in which every present edge lies in at least one `K_r`; falls back to the
/// complete graph when no earlier prefix qualifies.
///
/// Returns the stopped graph and the number of edges added.
pub fn stopping_time_process(n: usize, r: usize, seed: u64) -> Result<(Graph, usize)> {
    stopping_time_process_with(n, r, &mut stream_rng(seed, 0))
}

/// [`stopping_time_process`] over a caller-provided stream.
pub fn stopping_time_process_with(
    n: usize,
    r: usize,
    rng: &mut impl Rng,
) -> Result<(Graph, usize)> {
    if r < 3 {
        return Err(Error::invalid("clique order r must be at least 3"));
    }
    if n < r {
        return Err(Error::invalid(format!("need n >= r, got n={n}, r={r}")));
    }
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);

    let mut g = Graph::empty(n);
    // covered[u][v] = the edge uv lies in some K_r of the current graph
    let words = bits::words_for(n);
    let mut covered = vec![0u64; n * words];
    let mut uncovered = 0usize;

    for (t, &(u, v)) in pairs.iter().enumerate() {
        g.add_edge(u, v);
        uncovered += 1;
        // New K_r copies all contain uv: they are (r-2)-cliques in the
        // common neighborhood.  Mark every edge of every such copy covered.
        let mut common = vec![0u64; words];
        bits::and_into(g.row(u), g.row(v), &mut common);
        let mut completions = Vec::new();
        let mut cur = Vec::new();
        g.cliques_in_rec(&common, r - 2, &mut cur, &mut completions);
        for z in &completions {
            let mut verts = z.clone();
            verts.push(u);
            verts.push(v);
            for i in 0..verts.len() {
                for j in i + 1..verts.len() {
                    let (a, b) = (verts[i], verts[j]);
                    if !bits::test_bit(&covered[a * words..(a + 1) * words], b) {
                        bits::set_bit(&mut covered[a * words..(a + 1) * words], b);
                        bits::set_bit(&mut covered[b * words..(b + 1) * words], a);
                        uncovered -= 1;
                    }
                }
            }
        }
        if uncovered == 0 {
            return Ok((g, t + 1));
        }
    }
    let m = g.edge_count();
    Ok((g, m))
}

impl Graph {
    pub(crate) fn cliques_in_rec(
        &self,
        cand: &[u64],
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == 0 {
            out.push(current.clone());
            return;
        }
        if bits::count_ones(cand) < k {
            return;
        }
        let mut next = vec![0u64; self.words];
        for v in bits::ones(cand) {
            bits::and_into(cand, self.row(v), &mut next);
            for i in 0..=v {
                bits::clear_bit(&mut next, i);
            }
            current.push(v);
            self.cliques_in_rec(&next.clone(), k - 1, current, out);
            current.pop();
        }
    }
}

/// Parses the text format: header `n m`, then `m` lines `u v` with
/// `0 <= u < v < n` in sorted order; `#` starts a comment line.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let mut it = header.split_whitespace();
    let parse_count = |tok: Option<&str>, what: &str, line: usize| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
            .parse::<usize>()
            .map_err(|_| Error::Parse { line, msg: format!("malformed {what}") })
    };
    let n = parse_count(it.next(), "vertex count", header_line)?;
    let m = parse_count(it.next(), "edge count", header_line)?;
    if it.next().is_some() {
        return Err(Error::Parse { line: header_line, msg: "trailing tokens in header".into() });
    }
    if n == 0 {
        return Err(Error::Parse { line: header_line, msg: "vertex count must be positive".into() });
    }

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line, l) in lines {
        let mut it = l.split_whitespace();
        let u = parse_count(it.next(), "endpoint", line)?;
        let v = parse_count(it.next(), "endpoint", line)?;
        if it.next().is_some() {
            return Err(Error::Parse { line, msg: "trailing tokens on edge line".into() });
        }
        if u >= v {
            return Err(Error::Parse { line, msg: format!("edge ({u},{v}) not in u < v form") });
        }
        if v >= n {
            return Err(Error::Parse { line, msg: format!("vertex index {v} out of range (n={n})") });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse { line, msg: format!("duplicate edge ({u},{v})") });
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header declares {m} edges but {seen} were listed"),
        });
    }
    Ok(g)
}

/// Canonical writer: header then edges sorted lexicographically with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
