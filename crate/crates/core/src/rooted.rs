//! Rooted pattern graphs: density and (strict) balance by exhaustive
//! subgraph scan, anchored copy counting in a host graph, expectation
//! profiles, and the three-rooted pattern family indexed by block pairs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num_rational::Rational64;
use std::collections::BTreeMap;

/// A small pattern graph with an ordered root sequence.  Density and
/// balance are computed over the non-root part: `E'` drops root-internal
/// edges, `v_H = |V \ R|`, `e_H = |E'|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    roots: Vec<usize>,
}

/// Guard for exhaustive balance scans and profile enumeration.
pub const PATTERN_V_LIMIT: usize = 12;

impl RootedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)], roots: &[usize]) -> Result<RootedGraph> {
        let mut es: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::invalid(format!("bad edge ({a},{b})")));
            }
            let e = (a.min(b), a.max(b));
            if es.contains(&e) {
                return Err(Error::invalid(format!("duplicate edge ({a},{b})")));
            }
            es.push(e);
        }
        es.sort_unstable();
        for (i, &r) in roots.iter().enumerate() {
            if r >= n {
                return Err(Error::invalid(format!("root {r} out of range")));
            }
            if roots[..i].contains(&r) {
                return Err(Error::invalid("repeated root"));
            }
        }
        Ok(RootedGraph {
            n,
            edges: es,
            roots: roots.to_vec(),
        })
    }

    /// Parses the text form `"n; root root ...; u-v u-v ..."`.
    pub fn parse(text: &str) -> Result<RootedGraph> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                line: 1,
                msg: "pattern literal needs three ';'-separated fields".into(),
            });
        }
        let n: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: 1, msg: "bad vertex count".into() })?;
        let roots: Vec<usize> = parts[1]
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse { line: 1, msg: "bad root list".into() })?;
        let mut edges = Vec::new();
        for tok in parts[2].split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("edge token '{tok}' is not of the form u-v"),
            })?;
            let a: usize = a.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad edge endpoint in '{tok}'"),
            })?;
            let b: usize = b.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad edge endpoint in '{tok}'"),
            })?;
            edges.push((a, b));
        }
        RootedGraph::new(n, &edges, &roots)
    }

    pub fn to_text(&self) -> String {
        let roots = self
            .roots
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let edges = self
            .edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{}; {}; {}", self.n, roots, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn is_root(&self, v: usize) -> bool {
        self.roots.contains(&v)
    }

    /// Edges not inside the root set.
    pub fn e_prime(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| !(self.is_root(a) && self.is_root(b)))
            .collect()
    }

    pub fn v_h(&self) -> usize {
        self.n - self.roots.len()
    }

    pub fn e_h(&self) -> usize {
        self.e_prime().len()
    }

    /// `ρ(H) = e_H / v_H`, defined only when there are non-root vertices.
    pub fn density(&self) -> Result<Rational64> {
        if self.v_h() == 0 {
            return Err(Error::invalid("density undefined: no non-root vertices"));
        }
        Ok(Rational64::new(self.e_h() as i64, self.v_h() as i64))
    }

    fn non_roots(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.is_root(v)).collect()
    }

    /// `(v', e')` of the subgraph induced by the roots plus the given
    /// non-root subset.
    fn induced_profile(&self, keep: &[usize]) -> (usize, usize) {
        let mut present = vec![false; self.n];
        for &r in &self.roots {
            present[r] = true;
        }
        for &v in keep {
            present[v] = true;
        }
        let e = self
            .e_prime()
            .iter()
            .filter(|&&(a, b)| present[a] && present[b])
            .count();
        (keep.len(), e)
    }
}

fn check_pattern_guard(h: &RootedGraph) -> Result<()> {
    if h.n() > PATTERN_V_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "pattern has {} vertices, guard is {PATTERN_V_LIMIT}",
            h.n()
        )));
    }
    if h.v_h() == 0 {
        return Err(Error::invalid("balance undefined: no non-root vertices"));
    }
    Ok(())
}

/// `ρ(H') <= ρ(H)` for every root-preserving subgraph: it suffices to scan
/// induced subgraphs over non-root vertex subsets, since dropping edges
/// only lowers the density at fixed vertex count.
pub fn is_balanced(h: &RootedGraph) -> Result<bool> {
    check_pattern_guard(h)?;
    let nr = h.non_roots();
    let (v_h, e_h) = (h.v_h() as i64, h.e_h() as i64);
    for mask in 1u32..(1 << nr.len()) {
        let keep: Vec<usize> = nr
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let (v, e) = h.induced_profile(&keep);
        // e/v > e_h/v_h ?
        if (e as i64) * v_h > e_h * (v as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Balanced, and no proper induced subgraph attains the density of `H`
/// itself (subgraphs with missing edges at full vertex count are strictly
/// sparser automatically).
pub fn is_strictly_balanced(h: &RootedGraph) -> Result<bool> {
    check_pattern_guard(h)?;
    if !is_balanced(h)? {
        return Ok(false);
    }
    let nr = h.non_roots();
    let (v_h, e_h) = (h.v_h() as i64, h.e_h() as i64);
    let full = (1u32 << nr.len()) - 1;
    for mask in 1u32..full {
        let keep: Vec<usize> = nr
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let (v, e) = h.induced_profile(&keep);
        if (e as i64) * v_h == e_h * (v as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `N(H, G; x_1..x_s)`: injections of the pattern into `g` sending root
/// `i` to `anchors[i]`, with every non-root-internal pattern edge present.
/// Repeated anchors yield 0 by convention.
pub fn count_copies(h: &RootedGraph, g: &Graph, anchors: &[usize]) -> Result<u64> {
    if anchors.len() != h.roots().len() {
        return Err(Error::invalid(format!(
            "got {} anchors for {} roots",
            anchors.len(),
            h.roots().len()
        )));
    }
    if anchors.iter().any(|&a| a >= g.n()) {
        return Err(Error::invalid("anchor index out of range"));
    }
    for (i, &a) in anchors.iter().enumerate() {
        if anchors[..i].contains(&a) {
            return Ok(0);
        }
    }
    let mut image = vec![usize::MAX; h.n()];
    let mut used = vec![false; g.n()];
    for (&root, &anchor) in h.roots().iter().zip(anchors) {
        image[root] = anchor;
        used[anchor] = true;
    }
    let order = h.non_roots();
    let eprime = h.e_prime();
    Ok(copies_rec(h, g, &order, 0, &eprime, &mut image, &mut used))
}

fn copies_rec(
    h: &RootedGraph,
    g: &Graph,
    order: &[usize],
    i: usize,
    eprime: &[(usize, usize)],
    image: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if i == order.len() {
        return 1;
    }
    let v = order[i];
    let mut count = 0;
    'cand: for cand in 0..g.n() {
        if used[cand] {
            continue;
        }
        // all pattern edges from v to already-placed vertices must map to
        // host edges
        for &(a, b) in eprime {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if image[other] != usize::MAX && !g.has_edge(cand, image[other]) {
                continue 'cand;
            }
        }
        image[v] = cand;
        used[cand] = true;
        count += copies_rec(h, g, order, i + 1, eprime, image, used);
        used[cand] = false;
        image[v] = usize::MAX;
    }
    count
}

/// Expectation profile of an anchored pattern count at `(n, p)`.
#[derive(Debug, Clone)]
pub struct ExpectationProfile {
    pub v_h: usize,
    pub e_h: usize,
    /// `n^{v_H} p^{e_H}`.
    pub e0_bound: f64,
    /// Falling-factorial copy count in the complete host: `(n-s)_{v_H} p^{e_H}`.
    pub e0_exact: f64,
    /// For each achievable subgraph profile `(v_L, e_L)` with `e_L < e_H`
    /// (the empty shape `(0,0)` included), the bound
    /// `(v_H)_{v_L} n^{v_H - v_L} p^{e_H - e_L}`.
    pub el_bounds: BTreeMap<(usize, usize), f64>,
}

/// Enumerates achievable `(v_L, e_L)` profiles of root-preserving subgraph
/// shapes and evaluates the standard upper bounds.  Profiles aggregate
/// isomorphism types: the bound depends only on the vertex and edge counts.
pub fn expectation_profile(h: &RootedGraph, n: usize, p: f64) -> Result<ExpectationProfile> {
    check_pattern_guard(h)?;
    let s = h.roots().len();
    if n < s + h.v_h() {
        return Err(Error::invalid("host too small for the pattern"));
    }
    let v_h = h.v_h();
    let e_h = h.e_h();
    let nf = n as f64;
    let e0_bound = nf.powi(v_h as i32) * p.powi(e_h as i32);
    let mut e0_exact = p.powi(e_h as i32);
    for k in 0..v_h {
        e0_exact *= (n - s - k) as f64;
    }

    let nr = h.non_roots();
    let eprime = h.e_prime();
    let mut el_bounds: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    let falling = |v_l: usize| -> f64 {
        let mut f = 1f64;
        for k in 0..v_l {
            f *= (v_h - k) as f64;
        }
        f
    };
    let mut insert = |v_l: usize, e_l: usize| {
        if e_l < e_h {
            let bound = falling(v_l) * nf.powi((v_h - v_l) as i32) * p.powi((e_h - e_l) as i32);
            el_bounds.insert((v_l, e_l), bound);
        }
    };
    insert(0, 0);
    for mask in 1u32..(1 << nr.len()) {
        let keep: Vec<usize> = nr
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        // induced E' edges on roots ∪ keep
        let mut present = vec![false; h.n()];
        for &r in h.roots() {
            present[r] = true;
        }
        for &v in &keep {
            present[v] = true;
        }
        let induced: Vec<(usize, usize)> = eprime
            .iter()
            .copied()
            .filter(|&(a, b)| present[a] && present[b])
            .collect();
        // a shape with V(L) ∩ (V \ R) = keep needs every kept vertex
        // covered; the minimum such edge count comes from a subset-cover DP
        let Some(cover) = min_cover(&keep, &induced) else {
            continue;
        };
        for e_l in cover..=induced.len() {
            insert(keep.len(), e_l);
        }
    }
    Ok(ExpectationProfile {
        v_h,
        e_h,
        e0_bound,
        e0_exact,
        el_bounds,
    })
}

/// Minimum number of edges covering every vertex of `targets`, or `None`
/// when some target is isolated.
fn min_cover(targets: &[usize], edges: &[(usize, usize)]) -> Option<usize> {
    let k = targets.len();
    let bit_of = |v: usize| targets.iter().position(|&t| t == v);
    let full: u32 = (1 << k) - 1;
    let masks: Vec<u32> = edges
        .iter()
        .map(|&(a, b)| {
            let mut m = 0u32;
            if let Some(i) = bit_of(a) {
                m |= 1 << i;
            }
            if let Some(i) = bit_of(b) {
                m |= 1 << i;
            }
            m
        })
        .collect();
    let mut dp = vec![u32::MAX; (full as usize) + 1];
    dp[0] = 0;
    for covered in 0..=full {
        if dp[covered as usize] == u32::MAX {
            continue;
        }
        for &m in &masks {
            let next = covered | m;
            if dp[next as usize] > dp[covered as usize] + 1 {
                dp[next as usize] = dp[covered as usize] + 1;
            }
        }
    }
    (dp[full as usize] != u32::MAX).then_some(dp[full as usize] as usize)
}

/// Minimum density slack `ρ(H) - ρ(H')` over proper induced subgraphs
/// with at least one non-root vertex; positive exactly for strictly
/// balanced patterns.  Exposed in place of an existential constant.
pub fn density_slack(h: &RootedGraph) -> Result<Rational64> {
    check_pattern_guard(h)?;
    let rho = h.density()?;
    let nr = h.non_roots();
    let full = (1u32 << nr.len()) - 1;
    let mut slack: Option<Rational64> = None;
    for mask in 1u32..full {
        let keep: Vec<usize> = nr
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let (v, e) = h.induced_profile(&keep);
        let cand = rho - Rational64::new(e as i64, v as i64);
        slack = Some(match slack {
            Some(s) if s < cand => s,
            _ => cand,
        });
    }
    slack.ok_or_else(|| Error::invalid("no proper subgraph with non-root vertices"))
}

/// Reverse-lexicographic index of the pair `(i, j)`, starting at 1:
/// `(1,2) -> 1`, `(1,3) -> 2`, `(2,3) -> 3`, `(1,4) -> 4`, ...
pub fn reverse_lex_rank(i: usize, j: usize) -> usize {
    (j - 1) * (j - 2) / 2 + i
}

/// The three-rooted pattern on vertices `{u_0, ..., u_j}` with edges
/// `u_0 u_k` for all `k` plus every `u_k u_l` preceding `(i, j)` in
/// reverse-lexicographic order; roots `(u_0, u_i, u_j)`.
pub fn apex_pattern(r: usize, i: usize, j: usize) -> Result<RootedGraph> {
    if !(1 <= i && i < j && j <= r - 1) {
        return Err(Error::invalid(format!("need 1 <= i < j <= r-1, got ({i},{j}) at r={r}")));
    }
    let mut edges = Vec::new();
    for k in 1..=j {
        edges.push((0, k));
    }
    for l in 2..=j {
        for k in 1..l {
            // (k, l) strictly precedes (i, j) reverse-lexicographically
            if l < j || (l == j && k < i) {
                edges.push((k, l));
            }
        }
    }
    RootedGraph::new(j + 1, &edges, &[0, i, j])
}

/// Copy-count scale of the `(i, j)` pattern:
/// `n^(j-1) p^(rank(i,j) + j - 1)`.
pub fn apex_pattern_scale(n: usize, p: f64, i: usize, j: usize) -> f64 {
    (n as f64).powi(j as i32 - 1) * p.powi((reverse_lex_rank(i, j) + j - 1) as i32)
}

/// The prefix subgraph induced by `{u_0..u_k} ∪ {u_i, u_j}`, with the same
/// roots.
pub fn apex_pattern_prefix(r: usize, i: usize, j: usize, k: usize) -> Result<RootedGraph> {
    let h = apex_pattern(r, i, j)?;
    if k == 0 || k >= j {
        return Err(Error::invalid("prefix index must satisfy 1 <= k <= j-1"));
    }
    let mut present = vec![false; h.n()];
    for v in 0..=k {
        present[v] = true;
    }
    present[i] = true;
    present[j] = true;
    let verts: Vec<usize> = (0..h.n()).filter(|&v| present[v]).collect();
    let relabel: std::collections::HashMap<usize, usize> =
        verts.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let edges: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .filter(|&&(a, b)| present[a] && present[b])
        .map(|&(a, b)| (relabel[&a], relabel[&b]))
        .collect();
    let roots: Vec<usize> = [0, i, j].iter().map(|&v| relabel[&v]).collect();
    RootedGraph::new(verts.len(), &edges, &roots)
}

/// Closed forms for the prefix densities: `(k+5)/2` below `i`, then
/// `(k^2 + k + 2i - 4) / (2(k-1))`.  Undefined at `k = i = 1`.
pub fn apex_prefix_density(i: usize, j: usize, k: usize) -> Result<Rational64> {
    if k == 0 || k >= j {
        return Err(Error::invalid("prefix index out of range"));
    }
    if k < i {
        Ok(Rational64::new(k as i64 + 5, 2))
    } else if k == 1 && i == 1 {
        Err(Error::invalid("density undefined at k = i = 1"))
    } else {
        let ki = k as i64;
        Ok(Rational64::new(ki * ki + ki + 2 * i as i64 - 4, 2 * (ki - 1)))
    }
}
