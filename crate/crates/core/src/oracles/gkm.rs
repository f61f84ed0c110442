//! GKM divisibility over the moment graph of `LGr_n`.
//!
//! Reflections act on labels: `t_i − t_j` swaps `i ↔ j` and `bar(i) ↔ bar(j)`,
//! `t_i + t_j` swaps `i ↔ bar(j)` and `j ↔ bar(i)`, `2t_i` swaps `i ↔ bar(i)`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::indexcomb::{bar_unchecked, enumerate_isotropic, IsotropicIndex};
use crate::laurent::Root;
use crate::restriction::{restrict, Theory};
use crate::Laurent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GkmEdge {
    pub from: IsotropicIndex,
    pub to: IsotropicIndex,
    /// Positive in the standard convention.
    pub root: Root,
}

/// Positive roots of `C_n` with the label transpositions of their reflections.
pub fn reflections(n: usize) -> Vec<(Root, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((
                Root::pair(n, i, 1, j, -1).expect("root"),
                vec![(i, j), (bar_unchecked(i, n), bar_unchecked(j, n))],
            ));
            out.push((
                Root::pair(n, i, 1, j, 1).expect("root"),
                vec![(i, bar_unchecked(j, n)), (j, bar_unchecked(i, n))],
            ));
        }
        out.push((Root::double(n, i, 1).expect("root"), vec![(i, bar_unchecked(i, n))]));
    }
    out
}

fn reflect(beta: &IsotropicIndex, swaps: &[(usize, usize)]) -> IsotropicIndex {
    let values = beta
        .values()
        .iter()
        .map(|&k| {
            swaps
                .iter()
                .find_map(|&(a, b)| {
                    if k == a {
                        Some(b)
                    } else if k == b {
                        Some(a)
                    } else {
                        None
                    }
                })
                .unwrap_or(k)
        })
        .collect();
    IsotropicIndex::new(beta.rank(), values).expect("reflections preserve I_n")
}

/// Edges `β1 < β2` of the moment graph, deduplicated.
pub fn gkm_edges(n: usize) -> Result<Vec<GkmEdge>> {
    let refl = reflections(n);
    let mut edges = BTreeSet::new();
    for beta in enumerate_isotropic(n)? {
        for (root, swaps) in &refl {
            let other = reflect(&beta, swaps);
            if other != beta {
                let (from, to) = if beta < other { (beta.clone(), other) } else { (other, beta.clone()) };
                edges.insert(GkmEdge {
                    from,
                    to,
                    root: root.clone(),
                });
            }
        }
    }
    Ok(edges.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GkmFailure {
    pub alpha: IsotropicIndex,
    pub edge: GkmEdge,
    pub difference: Laurent,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GkmReport {
    pub theory: Theory,
    pub edges_checked: usize,
    pub failures: Vec<GkmFailure>,
}

impl GkmReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Restrictions of `[X_α]` at every fixed point.
pub fn restriction_row(
    alpha: &IsotropicIndex,
    theory: Theory,
) -> Result<BTreeMap<IsotropicIndex, Laurent>> {
    enumerate_isotropic(alpha.rank())?
        .into_par_iter()
        .map(|b| restrict(alpha, &b, theory).map(|r| (b, r.value)))
        .collect()
}

/// Divisibility of `f(β1) − f(β2)` along every edge.
pub fn gkm_check_row(
    alpha: &IsotropicIndex,
    row: &BTreeMap<IsotropicIndex, Laurent>,
    edges: &[GkmEdge],
    theory: Theory,
) -> Result<GkmReport> {
    let mut failures = Vec::new();
    for edge in edges {
        let diff = &row[&edge.from] - &row[&edge.to];
        let ok = match theory {
            Theory::H => diff.divisible_by_root_h(&edge.root)?,
            Theory::K => diff.divisible_by_k_root(&edge.root)?,
        };
        if !ok {
            failures.push(GkmFailure {
                alpha: alpha.clone(),
                edge: edge.clone(),
                difference: diff,
            });
        }
    }
    Ok(GkmReport {
        theory,
        edges_checked: edges.len(),
        failures,
    })
}

pub fn gkm_check(alpha: &IsotropicIndex, theory: Theory) -> Result<GkmReport> {
    let edges = gkm_edges(alpha.rank())?;
    let row = restriction_row(alpha, theory)?;
    gkm_check_row(alpha, &row, &edges, theory)
}
