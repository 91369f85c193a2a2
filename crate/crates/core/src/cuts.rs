//! Ordered cuts and the statistics hung on them: cut sizes, defects, the
//! weighted edge functional `φ`, bad pairs and bad vertices, balanced cut
//! families with a pinned first block, and the max-cut edge-share statistic.

use crate::counts::{kappa, KappaArg};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{big, below_quadratic_threshold, constants, lambda_r_exact, rational_from_f64};
use crate::solver::max_partite;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// Ordered partition of `0..n` into `r - 1` blocks; the first block is
/// distinguished.  Blocks may be empty unless produced by a balanced family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl Cut {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Cut> {
        if parts.is_empty() {
            return Err(Error::invalid("a cut needs at least one block"));
        }
        let mut seen = vec![false; n];
        for p in &parts {
            for &v in p {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::invalid(format!("vertex {v} in two blocks")));
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::invalid("blocks do not cover the vertex set"));
        }
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        Ok(Cut { n, parts })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The clique order this cut is an `(r-1)`-partition for.
    #[inline]
    pub fn r(&self) -> usize {
        self.parts.len() + 1
    }

    #[inline]
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.parts
            .iter()
            .position(|p| p.binary_search(&v).is_ok())
            .expect("cut covers all vertices")
    }

    /// Block labels indexed by vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0usize; self.n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                lab[v] = i;
            }
        }
        lab
    }
}

/// `|Π_G|`: edges of `g` whose endpoints lie in two distinct blocks.
pub fn cut_edges(g: &Graph, cut: &Cut) -> Result<usize> {
    if cut.n() != g.n() {
        return Err(Error::invalid("cut and graph disagree on n"));
    }
    let lab = cut.labels();
    Ok(g.edges().iter().filter(|&&(u, v)| lab[u] != lab[v]).count())
}

/// `φ(F, Π) = (r-1) |F[A_1]| + |F ∩ ext(Π)|` for an edge set `F` given as
/// a graph over the same vertices.
pub fn phi(f: &Graph, cut: &Cut) -> Result<usize> {
    if cut.n() != f.n() {
        return Err(Error::invalid("edge set and cut disagree on n"));
    }
    let r = cut.r();
    let inside_a1 = f.induced_edges(&cut.parts()[0]);
    let exterior = cut_edges(f, cut)?;
    Ok((r - 1) * inside_a1 + exterior)
}

/// Scope of a defect computation: against the global optimum `b_r` or
/// against the best cut of a realized family.
pub enum DefectScope<'a> {
    Global,
    Family(&'a CutFamily),
}

/// `b - |Π_G|` where `b` is the global `b_r(G)` or the family maximum.
/// With a family scope, `Π` must be a member.
pub fn defect(g: &Graph, cut: &Cut, scope: DefectScope<'_>) -> Result<usize> {
    let own = cut_edges(g, cut)?;
    let b = match scope {
        DefectScope::Global => max_partite(g, cut.r() - 1, None)?.value,
        DefectScope::Family(fam) => {
            if fam.members.is_empty() {
                return Err(Error::EmptyFamily("defect over an empty family".into()));
            }
            if !fam.members.contains(cut) {
                return Err(Error::invalid("cut is not a member of the family"));
            }
            fam.members
                .iter()
                .map(|c| cut_edges(g, c))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap()
        }
    };
    debug_assert!(b >= own);
    Ok(b - own)
}

/// Pairs from the first block whose completion count falls below
/// `γ Λ_r(n, p)`; adjacency of the pair is irrelevant.  Exact rational
/// comparison.
pub fn bad_pairs(g: &Graph, cut: &Cut, gamma: f64, p: f64) -> Result<Vec<(usize, usize)>> {
    if gamma <= 0.0 || gamma.is_nan() {
        return Err(Error::invalid("gamma must be positive"));
    }
    let r = cut.r();
    let threshold = rational_from_f64(gamma)? * lambda_r_exact(g.n(), p, r)?;
    let a1 = &cut.parts()[0];
    let rest: Vec<KappaArg> = cut.parts()[1..]
        .iter()
        .map(|b| KappaArg::Vertices(b.clone()))
        .collect();
    let mut out = Vec::new();
    for i in 0..a1.len() {
        for j in i + 1..a1.len() {
            let (x, y) = (a1[i], a1[j]);
            let mut args = vec![KappaArg::Tuple(vec![x, y])];
            args.extend(rest.iter().cloned());
            let k = kappa(g, r, &args)?;
            if big(k as i64) < threshold {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// `D_Π(x) = Σ_{i<j} d_{A_i}(x) d_{A_j}(x)` over all block pairs.
pub fn d_pi(g: &Graph, cut: &Cut, x: usize) -> Result<usize> {
    if x >= g.n() {
        return Err(Error::invalid(format!("vertex {x} out of range")));
    }
    let degs: Vec<usize> = cut.parts().iter().map(|p| g.degree_into(x, p)).collect();
    let mut total = 0usize;
    for i in 0..degs.len() {
        for j in i + 1..degs.len() {
            total += degs[i] * degs[j];
        }
    }
    Ok(total)
}

/// Vertices of the first block with `D_Π(x) < c_r n^2 p^2`, by exact
/// rational comparison.  Needs `r >= 4` for the constant.
pub fn bad_vertices(g: &Graph, cut: &Cut, p: f64) -> Result<Vec<usize>> {
    if p <= 0.0 || p.is_nan() {
        return Err(Error::invalid("p must be positive"));
    }
    let r = cut.r();
    let c_r = constants(r, None)?.c;
    let mut out = Vec::new();
    for &x in &cut.parts()[0] {
        let d = d_pi(g, cut, x)?;
        if below_quadratic_threshold(d, &c_r, g.n(), p)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Serializable description of a balanced-cut family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyDescription {
    pub n: usize,
    pub r: usize,
    pub delta: f64,
    #[serde(rename = "X")]
    pub pinned: Vec<usize>,
}

/// A fully realized family of balanced cuts with `X ⊆ A_1`.
#[derive(Debug, Clone)]
pub struct CutFamily {
    pub description: FamilyDescription,
    pub members: Vec<Cut>,
}

/// Guard for full realization.
pub const FAMILY_N_LIMIT: usize = 14;

/// Is `s (r-1)` strictly between `(1-δ) n` and `(1+δ) n`?
fn balanced_size(s: usize, n: usize, r: usize, delta: &BigRational) -> bool {
    let lhs = big((s * (r - 1)) as i64);
    let nn = big(n as i64);
    let one = big(1);
    (&one - delta) * &nn < lhs && lhs < (&one + delta) * nn
}

/// Enumerates every ordered `(r-1)`-partition of `0..n` whose blocks all
/// have size strictly within `(1 ± δ) n/(r-1)` and whose first block
/// contains `pinned`, in lexicographic order on the part lists.
pub fn enumerate_balanced_cuts(
    n: usize,
    r: usize,
    delta: f64,
    pinned: &[usize],
    limit: Option<usize>,
) -> Result<CutFamily> {
    let cap = limit.unwrap_or(FAMILY_N_LIMIT);
    if n > cap {
        return Err(Error::GuardExceeded(format!(
            "enumerate_balanced_cuts: n = {n} exceeds the realization guard of {cap}"
        )));
    }
    if r < 3 {
        return Err(Error::invalid("r must be at least 3"));
    }
    if pinned.iter().any(|&v| v >= n) {
        return Err(Error::invalid("pinned vertex out of range"));
    }
    let delta_rat = rational_from_f64(delta)?;
    let sizes: Vec<usize> = (0..=n)
        .filter(|&s| balanced_size(s, n, r, &delta_rat))
        .collect();

    let mut members = Vec::new();
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(r - 1);
    let mut pinned_sorted = pinned.to_vec();
    pinned_sorted.sort_unstable();
    pinned_sorted.dedup();
    let all: Vec<usize> = (0..n).collect();
    assign_blocks(&all, r - 1, &sizes, &pinned_sorted, &mut parts, &mut members);
    members.sort_by(|a, b| a.parts().cmp(b.parts()));
    Ok(CutFamily {
        description: FamilyDescription {
            n,
            r,
            delta,
            pinned: pinned_sorted,
        },
        members,
    })
}

fn assign_blocks(
    remaining: &[usize],
    blocks_left: usize,
    sizes: &[usize],
    pinned: &[usize],
    parts: &mut Vec<Vec<usize>>,
    out: &mut Vec<Cut>,
) {
    if blocks_left == 0 {
        if remaining.is_empty() {
            let n: usize = parts.iter().map(|p| p.len()).sum();
            out.push(Cut {
                n,
                parts: parts.clone(),
            });
        }
        return;
    }
    let first_block = parts.is_empty();
    for &s in sizes {
        if s > remaining.len() {
            continue;
        }
        if first_block && s < pinned.len() {
            continue;
        }
        let choices = if first_block {
            let free: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|v| !pinned.contains(v))
                .collect();
            crate::counts::combinations(&free, s - pinned.len())
                .into_iter()
                .map(|mut c| {
                    c.extend_from_slice(pinned);
                    c.sort_unstable();
                    c
                })
                .collect::<Vec<_>>()
        } else {
            crate::counts::combinations(remaining, s)
        };
        for block in choices {
            let rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|v| !block.contains(v))
                .collect();
            parts.push(block);
            assign_blocks(&rest, blocks_left - 1, sizes, pinned, parts, out);
            parts.pop();
        }
    }
}

/// Guard for the exhaustive ordinary-max-cut scan.
pub const MAXCUT_N_LIMIT: usize = 22;

/// Max over ordinary max cuts and vertices of the fraction of a vertex's
/// edges crossing the cut; isolated vertices contribute 0.
pub fn cut_conjecture_stat(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n > MAXCUT_N_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "cut_conjecture_stat: n = {n} exceeds the guard of {MAXCUT_N_LIMIT}"
        )));
    }
    if n == 1 {
        return Ok(0.0);
    }
    let edges = g.edges();
    // vertex 0 pinned to one side; the mask encodes the side of 1..n
    let mut best = 0usize;
    let mut best_masks: Vec<u64> = Vec::new();
    for mask in 0..(1u64 << (n - 1)) {
        let cross = edges
            .iter()
            .filter(|&&(u, v)| mask_side(mask, u) != mask_side(mask, v))
            .count();
        if cross > best {
            best = cross;
            best_masks.clear();
            best_masks.push(mask);
        } else if cross == best {
            best_masks.push(mask);
        }
    }
    let mut stat = 0f64;
    for mask in best_masks {
        for x in 0..n {
            let d = g.degree(x);
            if d == 0 {
                continue;
            }
            let crossing = g
                .neighbors(x)
                .filter(|&u| mask_side(mask, u) != mask_side(mask, x))
                .count();
            stat = stat.max(crossing as f64 / d as f64);
        }
    }
    Ok(stat)
}

#[inline]
fn mask_side(mask: u64, v: usize) -> bool {
    v != 0 && mask >> (v - 1) & 1 == 1
}
