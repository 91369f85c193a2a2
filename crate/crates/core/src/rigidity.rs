//! Max cuts of a realized family, the agreement equivalence over them,
//! rigidity, cores, and the critical edge set.

use crate::cuts::{cut_edges, Cut, CutFamily};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{big, rational_from_f64};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    /// `b(C, G)`: the best cut size over the family.
    pub max_value: usize,
    /// All maximizing cuts, in family (lexicographic) order.
    pub max_cuts: Vec<Vec<Vec<usize>>>,
    /// Unordered vertex pairs agreeing on their block in every max cut.
    pub equivalent_pairs: usize,
    /// Literal rational comparison `pairs >= (1-α) n^2 / (2(r-1))`.
    pub rigid: bool,
    /// The `r-1` components of size greater than `n/r`, when rigid and
    /// extractable.
    pub core: Option<Vec<Vec<usize>>>,
    /// Set when rigidity holds but the core does not materialize.
    pub core_diagnostic: Option<String>,
    /// Agreement classes, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

/// Max cuts by exhaustive comparison over the family, agreement classes of
/// the block-equality relation, the literal rigidity inequality at `α`,
/// and core extraction.
pub fn rigidity_analysis(g: &Graph, family: &CutFamily, alpha: f64) -> Result<RigidityReport> {
    if family.members.is_empty() {
        return Err(Error::EmptyFamily(
            "rigidity is undefined over an empty family".into(),
        ));
    }
    let n = g.n();
    let r = family.description.r;
    let values: Vec<usize> = family
        .members
        .iter()
        .map(|c| cut_edges(g, c))
        .collect::<Result<Vec<_>>>()?;
    let max_value = *values.iter().max().unwrap();
    let max_cuts: Vec<&Cut> = family
        .members
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v == max_value)
        .map(|(c, _)| c)
        .collect();

    // signature of a vertex: its block index in every max cut
    let labelings: Vec<Vec<usize>> = max_cuts.iter().map(|c| c.labels()).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let idx = components.len();
        class_of[v] = Some(idx);
        let mut class = vec![v];
        for u in v + 1..n {
            if class_of[u].is_none() && labelings.iter().all(|lab| lab[u] == lab[v]) {
                class_of[u] = Some(idx);
                class.push(u);
            }
        }
        components.push(class);
    }
    let equivalent_pairs: usize = components.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();

    // pairs >= (1 - alpha) n^2 / (2 (r-1)), exactly
    let alpha_rat = rational_from_f64(alpha)?;
    let lhs = big((equivalent_pairs * 2 * (r - 1)) as i64);
    let rhs = (big(1) - alpha_rat) * big((n * n) as i64);
    let rigid = lhs >= rhs;

    let (core, core_diagnostic) = if rigid {
        // components of size strictly greater than n/r; at most r-1 can
        // exist, and the core needs exactly r-1
        let large: Vec<Vec<usize>> = components
            .iter()
            .filter(|c| c.len() * r > n)
            .cloned()
            .collect();
        if large.len() == r - 1 {
            (Some(large), None)
        } else {
            (
                None,
                Some(format!(
                    "rigid, but {} components exceed n/r where {} are required; \
                     parameter mismatch (alpha, delta)",
                    large.len(),
                    r - 1
                )),
            )
        }
    } else {
        (None, None)
    };

    Ok(RigidityReport {
        max_value,
        max_cuts: max_cuts.iter().map(|c| c.parts().to_vec()).collect(),
        equivalent_pairs,
        rigid,
        core,
        core_diagnostic,
        components,
    })
}

/// `crit(G)`: edges of `g` lying in the exterior of every max cut of the
/// family (the intersection characterization).
pub fn crit(g: &Graph, family: &CutFamily) -> Result<Vec<(usize, usize)>> {
    if family.members.is_empty() {
        return Err(Error::EmptyFamily("crit over an empty family".into()));
    }
    let values: Vec<usize> = family
        .members
        .iter()
        .map(|c| cut_edges(g, c))
        .collect::<Result<Vec<_>>>()?;
    let b = *values.iter().max().unwrap();
    let max_labelings: Vec<Vec<usize>> = family
        .members
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v == b)
        .map(|(c, _)| c.labels())
        .collect();
    Ok(g.edges()
        .into_iter()
        .filter(|&(u, v)| max_labelings.iter().all(|lab| lab[u] != lab[v]))
        .collect())
}

/// The deletion characterization: edges whose removal strictly lowers
/// `b(C, ·)`.  Dual oracle for [`crit`].
pub fn crit_by_deletion(g: &Graph, family: &CutFamily) -> Result<Vec<(usize, usize)>> {
    if family.members.is_empty() {
        return Err(Error::EmptyFamily("crit over an empty family".into()));
    }
    let b = family
        .members
        .iter()
        .map(|c| cut_edges(g, c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v);
        let b_minus = family
            .members
            .iter()
            .map(|c| cut_edges(&h, c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap();
        if b_minus < b {
            out.push((u, v));
        }
    }
    Ok(out)
}
