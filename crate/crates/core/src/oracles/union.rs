//! K-class of a union of coordinate subspaces by inclusion-exclusion.
//!
//! Each component `W_P` (one per `P ∈ SSYT(σ(α), σ(β))`) is cut out by a set
//! of chart coordinates. An intersection of components is cut out by the union
//! of their cut sets, and the class of `V(C)` relative to the chart is
//! `Π_{y ∈ C} (1 − wt(y))`.

use std::collections::{BTreeMap, BTreeSet};

use crate::chart::{subspace_in_chart, ChartIndexSet, Coordinate};
use crate::error::{Error, Result};
use crate::indexcomb::IsotropicIndex;
use crate::tableaux::enumerate_ssyt;
use crate::Laurent;

/// Largest component count accepted by [`kclass_union_oracle`].
pub const MAX_COMPONENTS: usize = 20;

/// Cut sets of the components of `W_{α,β}`, one per shifted Young tableau.
pub fn union_components(
    alpha: &IsotropicIndex,
    beta: &IsotropicIndex,
) -> Result<Vec<BTreeSet<Coordinate>>> {
    if alpha.rank() != beta.rank() {
        return Err(Error::RankMismatch {
            left: alpha.rank(),
            right: beta.rank(),
        });
    }
    let chart = ChartIndexSet::new(beta);
    enumerate_ssyt(&alpha.sigma(), &beta.sigma())
        .iter()
        .map(|p| subspace_in_chart(p, &chart).map(|s| s.cut))
        .collect()
}

pub fn kclass_union_oracle(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<Laurent> {
    let n = beta.rank();
    let components = union_components(alpha, beta)?;
    let m = components.len();
    if m > MAX_COMPONENTS {
        return Err(Error::TooManyComponents {
            components: m,
            limit: MAX_COMPONENTS,
        });
    }
    let coords: Vec<Coordinate> = components
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let masks: Vec<u64> = components
        .iter()
        .map(|cut| {
            cut.iter()
                .map(|y| 1u64 << coords.binary_search(y).expect("collected above"))
                .fold(0, |a, b| a | b)
        })
        .collect();

    // Net sign per distinct union of cut sets.
    let mut signed: BTreeMap<u64, i64> = BTreeMap::new();
    for t in 1u64..(1 << m) {
        let union = (0..m)
            .filter(|i| t >> i & 1 == 1)
            .fold(0, |acc, i| acc | masks[i]);
        let sign = if t.count_ones() % 2 == 1 { 1 } else { -1 };
        *signed.entry(union).or_default() += sign;
    }

    let chart = ChartIndexSet::new(beta);
    let factors: Vec<Laurent> = coords
        .iter()
        .map(|&y| Ok(&Laurent::one(n) - &chart.weight_k::<i64>(y)?))
        .collect::<Result<_>>()?;
    let mut total = Laurent::zero(n);
    for (mask, c) in signed {
        if c == 0 {
            continue;
        }
        let term = (0..coords.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(Laurent::one(n), |acc, i| &acc * &factors[i]);
        total += &term.scalar_mul(&c);
    }
    Ok(total)
}
