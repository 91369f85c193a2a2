//! Proper edge coloring into `Δ+1` classes (fan rotations and alternating
//! path inversions), then class-size equalization by swapping along
//! two-color alternating paths.  Every output is cheap to verify, and the
//! tests do so per instance.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A proper edge coloring whose class sizes pairwise differ by at most one.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl EdgeColoring {
    /// Properness: no two edges sharing a vertex in one class.
    pub fn is_proper(&self, g: &Graph) -> bool {
        for class in &self.classes {
            let mut seen = vec![false; g.n()];
            for &(u, v) in class {
                if !g.has_edge(u, v) || seen[u] || seen[v] {
                    return false;
                }
                seen[u] = true;
                seen[v] = true;
            }
        }
        let total: usize = self.classes.iter().map(|c| c.len()).sum();
        total == g.edge_count()
    }

    /// Class sizes pairwise differ by at most one.
    pub fn is_equitable(&self) -> bool {
        let sizes: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        let lo = sizes.iter().min().copied().unwrap_or(0);
        let hi = sizes.iter().max().copied().unwrap_or(0);
        hi - lo <= 1
    }
}

struct ColorState {
    ncolors: usize,
    /// at[v * ncolors + c] = neighbor joined to v by color c, or NONE
    at: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl ColorState {
    fn new(n: usize, ncolors: usize) -> Self {
        ColorState {
            ncolors,
            at: vec![NONE; n * ncolors],
        }
    }

    #[inline]
    fn partner(&self, v: usize, c: usize) -> usize {
        self.at[v * self.ncolors + c]
    }

    #[inline]
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.partner(v, c) == NONE
    }

    fn free_color(&self, v: usize) -> usize {
        (0..self.ncolors)
            .find(|&c| self.is_free(v, c))
            .expect("a free color always exists with Δ+1 colors")
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        (0..self.ncolors).find(|&c| self.partner(u, c) == v)
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u * self.ncolors + c] = v;
        self.at[v * self.ncolors + c] = u;
    }

    fn unset(&mut self, u: usize, v: usize) -> usize {
        let c = self.color_of(u, v).expect("edge not colored");
        self.at[u * self.ncolors + c] = NONE;
        self.at[v * self.ncolors + c] = NONE;
        c
    }

    /// Flips colors `c` and `d` along the maximal alternating path leaving
    /// `u` (which must miss `c`).
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let mut x = u;
        let mut col = d;
        while self.partner(x, col) != NONE {
            let y = self.partner(x, col);
            path.push((x, y, col));
            x = y;
            col = if col == d { c } else { d };
        }
        for &(a, b, _) in &path {
            if self.color_of(a, b).is_some() {
                self.unset(a, b);
            }
        }
        for &(a, b, col) in &path {
            let flipped = if col == d { c } else { d };
            self.set(a, b, flipped);
        }
    }

    fn color_edge(&mut self, u: usize, v: usize, g: &Graph) {
        // maximal fan of u starting at v
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let mut extended = false;
            for w in g.neighbors(u) {
                if fan.contains(&w) {
                    continue;
                }
                if let Some(cw) = self.color_of(u, w) {
                    if self.is_free(last, cw) {
                        fan.push(w);
                        extended = true;
                        break;
                    }
                }
            }
            if !extended {
                break;
            }
        }
        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        if c != d && !self.is_free(u, d) {
            self.invert_path(u, c, d);
        }
        debug_assert!(self.is_free(u, d));
        // first prefix of the fan that is still a fan and ends where d is free
        let mut w_idx = None;
        'scan: for (idx, &fv) in fan.iter().enumerate() {
            if self.is_free(fv, d) {
                for i in 0..idx {
                    let cw = match self.color_of(u, fan[i + 1]) {
                        Some(cw) => cw,
                        None => continue 'scan,
                    };
                    if !self.is_free(fan[i], cw) {
                        continue 'scan;
                    }
                }
                w_idx = Some(idx);
                break;
            }
        }
        let w_idx = w_idx.expect("fan rotation target exists");
        for i in 0..w_idx {
            let t = self.unset(u, fan[i + 1]);
            self.set(u, fan[i], t);
        }
        self.set(u, fan[w_idx], d);
    }
}

/// Proper edge coloring of `g` into exactly `m >= Δ(G)+1` classes whose
/// sizes pairwise differ by at most one.
pub fn equitable_edge_coloring(g: &Graph, m: usize) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    if m < delta + 1 {
        return Err(Error::invalid(format!(
            "need at least Δ+1 = {} classes, got {m}",
            delta + 1
        )));
    }
    // proper coloring with Δ+1 colors, then empty classes up to m
    let mut st = ColorState::new(g.n(), delta + 1);
    for (u, v) in g.edges() {
        st.color_edge(u, v, g);
    }
    let mut class_of: std::collections::HashMap<(usize, usize), usize> = g
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), st.color_of(u, v).expect("edge colored")))
        .collect();

    rebalance(g, &mut class_of, m);

    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (u, v) in g.edges() {
        classes[class_of[&(u, v)]].push((u, v));
    }
    let coloring = EdgeColoring { classes };
    debug_assert!(coloring.is_proper(g) && coloring.is_equitable());
    Ok(coloring)
}

/// Repeatedly swaps along an alternating path between the largest and
/// smallest class until sizes differ by at most one.  A maximal path
/// component with a surplus of the larger color always exists, and the
/// swap preserves properness.
fn rebalance(g: &Graph, class_of: &mut std::collections::HashMap<(usize, usize), usize>, m: usize) {
    loop {
        let mut sizes = vec![0usize; m];
        for &c in class_of.values() {
            sizes[c] += 1;
        }
        let hi = (0..m).max_by_key(|&c| (sizes[c], m - c)).unwrap();
        let lo = (0..m).min_by_key(|&c| (sizes[c], c)).unwrap();
        if sizes[hi] - sizes[lo] <= 1 {
            return;
        }
        // partner tables within the two-color subgraph
        let mut hi_at = vec![NONE; g.n()];
        let mut lo_at = vec![NONE; g.n()];
        for (&(u, v), &c) in class_of.iter() {
            if c == hi {
                hi_at[u] = v;
                hi_at[v] = u;
            } else if c == lo {
                lo_at[u] = v;
                lo_at[v] = u;
            }
        }
        // walk a component from each path endpoint that starts with a
        // hi-edge and count the surplus
        let mut done = false;
        for start in 0..g.n() {
            if hi_at[start] == NONE || lo_at[start] != NONE {
                continue; // not an endpoint whose pendant edge is hi
            }
            // traverse: hi, lo, hi, ...
            let mut edges = Vec::new();
            let mut x = start;
            let mut want_hi = true;
            loop {
                let next = if want_hi { hi_at[x] } else { lo_at[x] };
                if next == NONE {
                    break;
                }
                let e = (x.min(next), x.max(next));
                if edges.contains(&e) {
                    break;
                }
                edges.push(e);
                x = next;
                want_hi = !want_hi;
            }
            let hi_count = edges.iter().filter(|e| class_of[*e] == hi).count();
            let lo_count = edges.len() - hi_count;
            if hi_count > lo_count {
                for e in &edges {
                    let c = class_of[e];
                    let flipped = if c == hi { lo } else { hi };
                    class_of.insert(*e, flipped);
                }
                done = true;
                break;
            }
        }
        debug_assert!(done, "no augmenting component found");
        if !done {
            return; // unreachable when |hi| > |lo| + 1
        }
    }
}
