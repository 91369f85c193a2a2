//! Counting functionals over a host graph: near-clique completion counts
//! `κ` with mixed anchor/collection arguments, the explicit completion
//! family, transversal clique tuples `τ`, the covered-pair count `σ(R)`,
//! and the exact intersecting-pair second moment for completion families.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One argument position of `κ`: either a fixed vertex set (given as a
/// tuple) or a collection of 1- or 2-element subsets to range over.
#[derive(Debug, Clone)]
pub enum KappaArg {
    /// A single explicit set `{x_1, ..., x_a}`.
    Tuple(Vec<usize>),
    /// A collection of singletons (a vertex set).
    Vertices(Vec<usize>),
    /// A collection of pairs.
    Pairs(Vec<(usize, usize)>),
}

impl KappaArg {
    fn arity(&self) -> usize {
        match self {
            KappaArg::Tuple(t) => t.len(),
            KappaArg::Vertices(_) => 1,
            KappaArg::Pairs(_) => 2,
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            KappaArg::Tuple(t) => {
                if t.is_empty() {
                    return Err(Error::invalid("empty tuple argument"));
                }
                for (i, &v) in t.iter().enumerate() {
                    if v >= n {
                        return Err(Error::invalid(format!("vertex {v} out of range")));
                    }
                    if t[..i].contains(&v) {
                        return Err(Error::invalid("tuple argument with repeated vertex"));
                    }
                }
            }
            KappaArg::Vertices(vs) => {
                let mut seen = vs.clone();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::invalid("vertex collection with duplicates"));
                }
                if vs.iter().any(|&v| v >= n) {
                    return Err(Error::invalid("vertex out of range in collection"));
                }
            }
            KappaArg::Pairs(ps) => {
                let mut seen: Vec<(usize, usize)> =
                    ps.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                seen.sort_unstable();
                if seen.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::invalid("pair collection with duplicates"));
                }
                if ps.iter().any(|&(a, b)| a == b || a >= n || b >= n) {
                    return Err(Error::invalid("bad pair in collection"));
                }
            }
        }
        Ok(())
    }
}

fn full_mask(g: &Graph) -> Vec<u64> {
    let mut m = vec![0u64; g.words()];
    for v in 0..g.n() {
        bits::set_bit(&mut m, v);
    }
    m
}

/// `κ_H(X_1, ..., X_s)`: the number of ways to pick pairwise disjoint
/// `Y_i ∈ X_i` and an `(r - Σ aᵢ)`-set `Z` so that every pair among the
/// chosen `r` vertices lies in `H`, except pairs inside a single `Y_i`.
///
/// The running intersection of chosen-vertex neighborhoods enforces both
/// the disjointness and the cross-pair requirements; the completion count
/// is a clique count inside that intersection.
pub fn kappa(h: &Graph, r: usize, args: &[KappaArg]) -> Result<u64> {
    let total: usize = args.iter().map(|a| a.arity()).sum();
    if total > r {
        return Err(Error::invalid(format!(
            "arity violation: sum of argument arities {total} exceeds r = {r}"
        )));
    }
    if r < 2 {
        return Err(Error::invalid("kappa needs r >= 2"));
    }
    for a in args {
        a.validate(h.n())?;
    }
    let common = full_mask(h);
    Ok(kappa_rec(h, r - total, args, &common))
}

fn kappa_rec(h: &Graph, z_size: usize, args: &[KappaArg], common: &[u64]) -> u64 {
    let Some((first, rest)) = args.split_first() else {
        return h.count_cliques_in(common, z_size);
    };
    let mut count = 0u64;
    let mut visit = |y: &[usize]| {
        if !y.iter().all(|&v| bits::test_bit(common, v)) {
            return;
        }
        let mut next = common.to_vec();
        for &v in y {
            bits::and_assign(&mut next, h.row(v));
        }
        count += kappa_rec(h, z_size, rest, &next);
    };
    match first {
        KappaArg::Tuple(t) => visit(t),
        KappaArg::Vertices(vs) => {
            for &v in vs {
                visit(&[v]);
            }
        }
        KappaArg::Pairs(ps) => {
            for &(a, b) in ps {
                visit(&[a, b]);
            }
        }
    }
    count
}

/// The explicit family counted by `κ(xy, B_1, ..., B_{r-2})`: one edge set
/// per completion, each of size `C(r,2) - 1` (only the anchor pair missing).
pub fn kr_minus_family(
    g: &Graph,
    xy: (usize, usize),
    blocks: &[Vec<usize>],
) -> Result<Vec<Vec<(usize, usize)>>> {
    let (x, y) = xy;
    let n = g.n();
    if x == y || x >= n || y >= n {
        return Err(Error::invalid("bad anchor pair"));
    }
    let mut seen = vec![false; n];
    seen[x] = true;
    seen[y] = true;
    for b in blocks {
        for &v in b {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::invalid(
                    "blocks must be disjoint from each other and from the anchor pair",
                ));
            }
            seen[v] = true;
        }
    }
    let r = blocks.len() + 2;
    let mut out = Vec::new();
    let mut chosen = vec![x, y];
    let mut common = full_mask(g);
    bits::and_assign(&mut common, g.row(x));
    bits::and_assign(&mut common, g.row(y));
    family_rec(g, blocks, 0, &mut chosen, &common, &mut out);
    debug_assert!(out.iter().all(|f| f.len() == r * (r - 1) / 2 - 1));
    Ok(out)
}

fn family_rec(
    g: &Graph,
    blocks: &[Vec<usize>],
    i: usize,
    chosen: &mut Vec<usize>,
    common: &[u64],
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if i == blocks.len() {
        let mut edges = Vec::new();
        for a in 0..chosen.len() {
            for b in a + 1..chosen.len() {
                if (a, b) != (0, 1) {
                    let (u, v) = (chosen[a].min(chosen[b]), chosen[a].max(chosen[b]));
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        out.push(edges);
        return;
    }
    for &v in &blocks[i] {
        if !bits::test_bit(common, v) {
            continue;
        }
        let mut next = common.to_vec();
        bits::and_assign(&mut next, g.row(v));
        chosen.push(v);
        family_rec(g, blocks, i + 1, chosen, &next, out);
        chosen.pop();
    }
}

/// `τ(S_1, ..., S_{r-1})`: ordered tuples of distinct vertices, one per
/// set, inducing a complete graph in `g`.  Repeats of an identical set are
/// allowed (the shorthand for trailing copies); partial overlaps between
/// distinct sets are rejected.
pub fn tau(g: &Graph, sets: &[Vec<usize>]) -> Result<u64> {
    for (i, a) in sets.iter().enumerate() {
        if a.iter().any(|&v| v >= g.n()) {
            return Err(Error::invalid("vertex out of range"));
        }
        for b in sets.iter().take(i) {
            if a == b {
                continue;
            }
            if a.iter().any(|v| b.contains(v)) {
                return Err(Error::invalid(
                    "tau sets must be pairwise disjoint (or identical repeats)",
                ));
            }
        }
    }
    let mut used = vec![false; g.n()];
    let common = full_mask(g);
    Ok(tau_rec(g, sets, 0, &mut used, &common))
}

fn tau_rec(g: &Graph, sets: &[Vec<usize>], i: usize, used: &mut [bool], common: &[u64]) -> u64 {
    if i == sets.len() {
        return 1;
    }
    let mut count = 0;
    for &v in &sets[i] {
        if used[v] || !bits::test_bit(common, v) {
            continue;
        }
        let mut next = common.to_vec();
        bits::and_assign(&mut next, g.row(v));
        used[v] = true;
        count += tau_rec(g, sets, i + 1, used, &next);
        used[v] = false;
    }
    count
}

/// `σ(R)`: the number of pairs `{u,v}` covered by some completion anchored
/// at a member of `R`, i.e. with `κ(R, u, v) > 0`.  Needs `r >= 4`.
pub fn sigma(g: &Graph, r_set: &[(usize, usize)], r: usize) -> Result<u64> {
    if r < 4 {
        return Err(Error::invalid("sigma needs r >= 4"));
    }
    let n = g.n();
    let mut count = 0u64;
    for u in 0..n {
        'pair: for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for &(a, b) in r_set {
                let (x, y) = (a.min(b), a.max(b));
                if x == u || x == v || y == u || y == v {
                    continue;
                }
                if !(g.has_edge(u, x) && g.has_edge(u, y) && g.has_edge(v, x) && g.has_edge(v, y)) {
                    continue;
                }
                // remaining r-4 vertices: a clique adjacent to all four
                let mut cand = full_mask(g);
                for &w in &[u, v, x, y] {
                    bits::and_assign(&mut cand, g.row(w));
                }
                if g.count_cliques_in(&cand, r - 4) > 0 {
                    count += 1;
                    continue 'pair;
                }
            }
        }
    }
    Ok(count)
}

/// Exact and closed-form-bounded second moment of the completion family
/// over `R` on `n` vertices.
#[derive(Debug, Clone)]
pub struct DeltaBarReport {
    /// Full enumeration of `Σ E[I_K I_L]` over intersecting (and diagonal)
    /// ordered pairs of the family.
    pub exact: f64,
    /// The crude closed-form bracket bound with `B = r!`.
    pub closed_form_bound: f64,
    /// Number of completion sets in the family.
    pub family_size: usize,
}

/// Vertex guard for the exact enumeration.
pub const DELTA_BAR_N_LIMIT: usize = 12;

/// Enumerates the family `K(xy, Z)` for `xy ∈ R`, `Z ∈ C(V∖{x,y}, r-2)`,
/// computes the exact intersecting-pair sum `Σ p^{|K ∪ L|}` (diagonal
/// included) and evaluates the closed-form bound for comparison.
pub fn delta_bar_kr_minus(
    n: usize,
    p: f64,
    r: usize,
    pairs: &[(usize, usize)],
) -> Result<DeltaBarReport> {
    if n > DELTA_BAR_N_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "delta_bar_kr_minus: n = {n} exceeds the exact-mode guard of {DELTA_BAR_N_LIMIT}"
        )));
    }
    if r < 3 || n < r {
        return Err(Error::invalid("need 3 <= r <= n"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid("p outside [0,1]"));
    }
    // pair indexing over C(n,2) <= 66 bits: one u128 mask per member
    let mut pair_index = vec![vec![0usize; n]; n];
    let mut idx = 0usize;
    for u in 0..n {
        for v in u + 1..n {
            pair_index[u][v] = idx;
            idx += 1;
        }
    }
    let pidx = |u: usize, v: usize| pair_index[u.min(v)][u.max(v)];

    let mut family: Vec<u128> = Vec::new();
    let verts: Vec<usize> = (0..n).collect();
    for &(a, b) in pairs {
        let (x, y) = (a.min(b), a.max(b));
        if x == y || y >= n {
            return Err(Error::invalid("bad pair in R"));
        }
        let others: Vec<usize> = verts.iter().copied().filter(|&v| v != x && v != y).collect();
        for z in combinations(&others, r - 2) {
            let mut vs = z.clone();
            vs.push(x);
            vs.push(y);
            let mut mask = 0u128;
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    mask |= 1u128 << pidx(vs[i], vs[j]);
                }
            }
            mask &= !(1u128 << pidx(x, y));
            family.push(mask);
        }
    }

    // group by |K ∪ L| so the float total is a short dot product
    let max_exp = 2 * (crate::params::choose2(r) - 1);
    let mut by_exp = vec![0u64; max_exp + 1];
    for (i, &k) in family.iter().enumerate() {
        for &l in family.iter().skip(i) {
            if k & l != 0 {
                let e = (k | l).count_ones() as usize;
                by_exp[e] += if k == l { 1 } else { 2 }; // ordered pairs
            }
        }
    }
    let exact: f64 = by_exp
        .iter()
        .enumerate()
        .map(|(e, &c)| c as f64 * p.powi(e as i32))
        .sum();

    // closed form: |R| n^{2r-4} p^{r^2-r-2} [ Σ_{b=3}^{r} n^{2-b} p^{1-C(b,2)}
    //   + B (|R| + Δ_R n) Σ_{b=2}^{r} n^{-b} p^{-C(b,2)} ],  B = r!
    let mut deg = vec![0usize; n];
    for &(a, b) in pairs {
        deg[a] += 1;
        deg[b] += 1;
    }
    let max_deg = deg.iter().copied().max().unwrap_or(0) as f64;
    let b_const: f64 = (1..=r).map(|i| i as f64).product();
    let nf = n as f64;
    let r_sz = pairs.len() as f64;
    let sum1: f64 = (3..=r)
        .map(|b| nf.powi(2 - b as i32) * p.powi(1 - crate::params::choose2(b) as i32))
        .sum();
    let sum2: f64 = (2..=r)
        .map(|b| nf.powi(-(b as i32)) * p.powi(-(crate::params::choose2(b) as i32)))
        .sum();
    let closed_form_bound = r_sz
        * nf.powi(2 * r as i32 - 4)
        * p.powi((r * r - r - 2) as i32)
        * (sum1 + b_const * (r_sz + max_deg * nf) * sum2);

    Ok(DeltaBarReport {
        exact,
        closed_form_bound,
        family_size: family.len(),
    })
}

/// All `k`-subsets of `items`, in lexicographic order.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Clone>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            cur.push(items[i].clone());
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        let mut cur: Vec<T> = Vec::with_capacity(k);
        rec(items, k, 0, &mut cur, &mut out);
    }
    out
}
