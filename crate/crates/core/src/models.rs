//! Equivalent models for `SSYT(λ, μ)`: shifted Young tableaux, subsets of
//! the shifted diagram of `μ`, and families of nonintersecting paths on it.
//! Also the doubled (symmetric) versions on the Young diagram of `η`, where
//! `ρ(η) = μ`.
//!
//! Boxes are `(row, column)` with absolute columns, so box `(x, z)` of the
//! ambient diagram sits in row `x`, column `z ≥ x`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indexcomb::{Partition, StrictPartition};
use crate::tableaux::{enumerate_ssyt, SetValuedShiftedTableau, ShiftedDiagram};

pub type Box2 = (usize, usize);

/// A set of boxes of the shifted diagram of `ambient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramSubset {
    pub ambient: StrictPartition,
    pub members: BTreeSet<Box2>,
}

impl DiagramSubset {
    pub fn new(ambient: StrictPartition, members: BTreeSet<Box2>) -> Result<Self> {
        let diagram = ShiftedDiagram::new(ambient.clone());
        if let Some(&(row, col)) = members.iter().find(|&&(r, c)| !diagram.contains(r, c)) {
            return Err(Error::OutsideAmbient { row, col });
        }
        Ok(DiagramSubset { ambient, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Ambient boxes not in the subset.
    pub fn complement(&self) -> BTreeSet<Box2> {
        ShiftedDiagram::new(self.ambient.clone())
            .boxes()
            .filter(|b| !self.members.contains(b))
            .collect()
    }
}

/// Disjoint lattice paths on the shifted diagram of `ambient`.
///
/// Each path lists its boxes from bottom-left to top-right; consecutive
/// boxes differ by one step right or one step up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathFamily {
    pub ambient: StrictPartition,
    pub paths: Vec<Vec<Box2>>,
}

impl PathFamily {
    pub fn support(&self) -> BTreeSet<Box2> {
        self.paths.iter().flatten().copied().collect()
    }

    /// Paths are disjoint, inside the ambient diagram, and made of unit
    /// right/up steps.
    pub fn is_valid(&self) -> bool {
        let diagram = ShiftedDiagram::new(self.ambient.clone());
        let total: usize = self.paths.iter().map(Vec::len).sum();
        let support = self.support();
        support.len() == total
            && support.iter().all(|&(r, c)| diagram.contains(r, c))
            && self.paths.iter().all(|p| {
                !p.is_empty()
                    && p.windows(2).all(|w| {
                        let ((r0, c0), (r1, c1)) = (w[0], w[1]);
                        (r1 == r0 && c1 == c0 + 1) || (c1 == c0 && r1 + 1 == r0)
                    })
            })
    }
}

/// `P ↦ {(v, v + c − r)}` over the entries `v` of `P` in box `(r, c)`.
pub fn tableau_to_subset(
    tableau: &SetValuedShiftedTableau,
    mu: &StrictPartition,
) -> Result<DiagramSubset> {
    if !tableau.is_young() {
        return Err(Error::InvalidTableau("expected one entry per box".into()));
    }
    let diagram = ShiftedDiagram::new(mu.clone());
    let mut members = BTreeSet::new();
    for e in tableau.entries() {
        let b = (e.value, e.z());
        if !diagram.contains(b.0, b.1) {
            return Err(Error::OutsideAmbient { row: b.0, col: b.1 });
        }
        if !members.insert(b) {
            return Err(Error::InvalidTableau(format!("two entries map to box {b:?}")));
        }
    }
    Ok(DiagramSubset {
        ambient: mu.clone(),
        members,
    })
}

/// Inverse of [`tableau_to_subset`]. Boxes of `D` on the diagonal `z − x = d`
/// fill the boxes of `λ` on the diagonal `c − r = d` from top to bottom.
pub fn subset_to_tableau(
    subset: &DiagramSubset,
    lambda: &StrictPartition,
) -> Result<SetValuedShiftedTableau> {
    let mut by_diag: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, z) in &subset.members {
        by_diag.entry(z - x).or_default().push(x);
    }
    let diagram = ShiftedDiagram::new(lambda.clone());
    let mut rows: Vec<Vec<usize>> = (1..=lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut cells_by_diag: BTreeMap<usize, Vec<Box2>> = BTreeMap::new();
    for (r, c) in diagram.boxes() {
        cells_by_diag.entry(c - r).or_default().push((r, c));
    }
    if by_diag.keys().any(|d| !cells_by_diag.contains_key(d)) {
        return Err(Error::NotInImage("diagonal outside the shape".into()));
    }
    for (d, cells) in &cells_by_diag {
        let xs = by_diag.get(d).map(Vec::as_slice).unwrap_or(&[]);
        if xs.len() != cells.len() {
            return Err(Error::NotInImage(format!(
                "diagonal {d} holds {} boxes, the shape needs {}",
                xs.len(),
                cells.len()
            )));
        }
        // BTreeSet order already sorts xs ascending within a diagonal.
        for (&(r, c), &x) in cells.iter().zip(xs) {
            rows[r - 1][c - r] = x;
        }
    }
    let tableau = SetValuedShiftedTableau::from_young(lambda.clone(), rows)?;
    if !tableau.is_semistandard() || !tableau.is_on(&subset.ambient) {
        return Err(Error::NotInImage("preimage is not semistandard on μ".into()));
    }
    Ok(tableau)
}

/// Splits the complement of `D` into paths. Each path starts at the topmost,
/// then rightmost, remaining box and walks left when possible, else down.
pub fn subset_to_family(subset: &DiagramSubset) -> PathFamily {
    let mut remaining = subset.complement();
    let mut paths = Vec::new();
    while let Some(start) = remaining
        .iter()
        .copied()
        .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
    {
        let mut path = vec![start];
        remaining.remove(&start);
        let mut cur = start;
        loop {
            let left = (cur.0, cur.1.wrapping_sub(1));
            let down = (cur.0 + 1, cur.1);
            let next = if remaining.contains(&left) {
                left
            } else if remaining.contains(&down) {
                down
            } else {
                break;
            };
            remaining.remove(&next);
            path.push(next);
            cur = next;
        }
        path.reverse();
        paths.push(path);
    }
    PathFamily {
        ambient: subset.ambient.clone(),
        paths,
    }
}

pub fn family_to_subset(family: &PathFamily) -> DiagramSubset {
    let support = family.support();
    let members = ShiftedDiagram::new(family.ambient.clone())
        .boxes()
        .filter(|b| !support.contains(b))
        .collect();
    DiagramSubset {
        ambient: family.ambient.clone(),
        members,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Tableaux,
    Subsets,
    Families,
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tableaux" => Ok(ModelKind::Tableaux),
            "subsets" => Ok(ModelKind::Subsets),
            "families" => Ok(ModelKind::Families),
            _ => Err(Error::Parse(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ModelElement {
    Tableau(SetValuedShiftedTableau),
    Subset(DiagramSubset),
    Family(PathFamily),
}

/// All three models, index-aligned: `subsets[i]` is the image of
/// `tableaux[i]` and `families[i]` the path family of `subsets[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Models {
    pub tableaux: Vec<SetValuedShiftedTableau>,
    pub subsets: Vec<DiagramSubset>,
    pub families: Vec<PathFamily>,
}

pub fn enumerate_models(lambda: &StrictPartition, mu: &StrictPartition) -> Result<Models> {
    let tableaux = enumerate_ssyt(lambda, mu);
    let subsets = tableaux
        .iter()
        .map(|p| tableau_to_subset(p, mu))
        .collect::<Result<Vec<_>>>()?;
    let families = subsets.iter().map(subset_to_family).collect();
    Ok(Models {
        tableaux,
        subsets,
        families,
    })
}

pub fn enumerate_model(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    kind: ModelKind,
) -> Result<Vec<ModelElement>> {
    let m = enumerate_models(lambda, mu)?;
    Ok(match kind {
        ModelKind::Tableaux => m.tableaux.into_iter().map(ModelElement::Tableau).collect(),
        ModelKind::Subsets => m.subsets.into_iter().map(ModelElement::Subset).collect(),
        ModelKind::Families => m.families.into_iter().map(ModelElement::Family).collect(),
    })
}

/// A filling of the Young diagram of a symmetric partition with
/// `P_{i,j} − i = P_{j,i} − j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricTableau {
    pub shape: Partition,
    pub content: BTreeMap<Box2, usize>,
}

impl SymmetricTableau {
    pub fn is_symmetric(&self) -> bool {
        self.shape.is_symmetric()
            && self.content.iter().all(|(&(i, j), &v)| {
                self.content
                    .get(&(j, i))
                    .is_some_and(|&w| v + j == w + i)
            })
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.content.iter().all(|(&(i, j), &v)| {
            self.content.get(&(i, j + 1)).is_none_or(|&w| v <= w)
                && self.content.get(&(i + 1, j)).is_none_or(|&w| v < w)
        })
    }

    /// Deletes the boxes below the main diagonal.
    pub fn rho(&self) -> Result<SetValuedShiftedTableau> {
        let shape = self.shape.rho();
        let rows = (1..=shape.len())
            .map(|r| {
                (r..r + shape.part(r))
                    .map(|c| self.content[&(r, c)])
                    .collect()
            })
            .collect();
        SetValuedShiftedTableau::from_young(shape, rows)
    }
}

/// Extends a shifted Young tableau below the diagonal by
/// `P_{j,i} = P_{i,j} − i + j`.
pub fn unfold_symmetric(tableau: &SetValuedShiftedTableau) -> Result<SymmetricTableau> {
    let young = tableau
        .young_rows()
        .ok_or_else(|| Error::InvalidTableau("expected one entry per box".into()))?;
    let mut content = BTreeMap::new();
    for (i, row) in young.iter().enumerate() {
        let r = i + 1;
        for (k, &v) in row.iter().enumerate() {
            let c = r + k;
            content.insert((r, c), v);
            if c > r {
                content.insert((c, r), v + c - r);
            }
        }
    }
    let out = SymmetricTableau {
        shape: tableau.shape().unrho(),
        content,
    };
    if !out.is_semistandard() {
        return Err(Error::InvalidTableau("doubled filling is not semistandard".into()));
    }
    Ok(out)
}

/// A subset of the Young diagram of a symmetric partition, closed under
/// transposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetricSubset {
    pub shape: Partition,
    pub members: BTreeSet<Box2>,
}

impl SymmetricSubset {
    pub fn is_symmetric(&self) -> bool {
        self.members.iter().all(|&(i, j)| self.members.contains(&(j, i)))
    }

    /// Deletes the boxes below the main diagonal.
    pub fn rho(&self) -> DiagramSubset {
        DiagramSubset {
            ambient: self.shape.rho(),
            members: self.members.iter().copied().filter(|&(i, j)| j >= i).collect(),
        }
    }
}

pub fn double_subset(subset: &DiagramSubset) -> SymmetricSubset {
    let members = subset
        .members
        .iter()
        .flat_map(|&(i, j)| [(i, j), (j, i)])
        .collect();
    SymmetricSubset {
        shape: subset.ambient.unrho(),
        members,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn young(shape: &[usize], rows: &[&[usize]]) -> SetValuedShiftedTableau {
        SetValuedShiftedTableau::from_young(sp(shape), rows.iter().map(|r| r.to_vec()).collect())
            .unwrap()
    }

    fn boxes(v: &[Box2]) -> BTreeSet<Box2> {
        v.iter().copied().collect()
    }

    #[test]
    fn gray_box_subsets() {
        let mu = sp(&[5, 3, 2, 1]);
        let a = tableau_to_subset(&young(&[3, 1], &[&[1, 1, 1], &[2]]), &mu).unwrap();
        assert_eq!(a.members, boxes(&[(1, 1), (1, 2), (1, 3), (2, 2)]));
        let b = tableau_to_subset(&young(&[3, 1], &[&[2, 2, 2], &[4]]), &mu).unwrap();
        assert_eq!(b.members, boxes(&[(2, 2), (2, 3), (2, 4), (4, 4)]));
        assert_eq!(
            subset_to_tableau(&b, &sp(&[3, 1])).unwrap(),
            young(&[3, 1], &[&[2, 2, 2], &[4]])
        );
    }

    #[test]
    fn empty_cases() {
        let mu = sp(&[2, 1]);
        let t = SetValuedShiftedTableau::empty();
        let d = tableau_to_subset(&t, &mu).unwrap();
        assert!(d.is_empty());
        assert_eq!(subset_to_tableau(&d, &StrictPartition::empty()).unwrap(), t);
        let f = subset_to_family(&d);
        assert_eq!(f.support().len(), 3);
        let full = DiagramSubset::new(mu.clone(), ShiftedDiagram::new(mu).boxes().collect()).unwrap();
        assert!(subset_to_family(&full).paths.is_empty());
    }

    #[test]
    fn off_ambient_rejected() {
        let t = young(&[2], &[&[1, 1]]);
        assert!(matches!(
            tableau_to_subset(&t, &sp(&[1])),
            Err(Error::OutsideAmbient { row: 1, col: 2 })
        ));
    }

    #[test]
    fn subset_not_in_image() {
        let d = DiagramSubset::new(sp(&[3, 2]), boxes(&[(1, 1), (2, 2)])).unwrap();
        assert!(subset_to_tableau(&d, &sp(&[2])).is_err());
    }

    #[test]
    fn drawn_path_families() {
        let (lambda, mu) = (sp(&[3, 1]), sp(&[5, 3, 2, 1]));
        let cases: [(&[&[usize]], Vec<Vec<Box2>>); 10] = [
            (&[&[1, 1, 1], &[2]], vec![vec![(3, 3), (2, 3), (2, 4), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[1, 1, 2], &[2]], vec![vec![(3, 3), (2, 3), (1, 3), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[1, 1, 2], &[3]], vec![vec![(2, 2), (2, 3), (1, 3), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[1, 2, 2], &[3]], vec![vec![(2, 2), (1, 2), (1, 3), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[2, 2, 2], &[3]], vec![vec![(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[2, 2, 2], &[4]], vec![vec![(1, 1), (1, 2), (1, 3), (1, 4), (1, 5)], vec![(3, 3), (3, 4)]]),
            (&[&[1, 1, 1], &[3]], vec![vec![(2, 2), (2, 3), (2, 4), (1, 4), (1, 5)], vec![(4, 4), (3, 4)]]),
            (&[&[1, 1, 1], &[4]], vec![vec![(2, 2), (2, 3), (2, 4), (1, 4), (1, 5)], vec![(3, 3), (3, 4)]]),
            (&[&[1, 1, 2], &[4]], vec![vec![(2, 2), (2, 3), (1, 3), (1, 4), (1, 5)], vec![(3, 3), (3, 4)]]),
            (&[&[1, 2, 2], &[4]], vec![vec![(2, 2), (1, 2), (1, 3), (1, 4), (1, 5)], vec![(3, 3), (3, 4)]]),
        ];
        for (rows, paths) in cases {
            let t = young(&[3, 1], rows);
            let d = tableau_to_subset(&t, &mu).unwrap();
            let f = subset_to_family(&d);
            assert_eq!(f.paths, paths, "tableau {rows:?}");
            assert!(f.is_valid());
            assert_eq!(family_to_subset(&f), d);
            assert_eq!(subset_to_tableau(&d, &lambda).unwrap(), t);
        }
    }

    #[test]
    fn model_counts() {
        let m = enumerate_models(&sp(&[3, 1]), &sp(&[5, 3, 2, 1])).unwrap();
        assert_eq!((m.tableaux.len(), m.subsets.len(), m.families.len()), (10, 10, 10));
        let m = enumerate_models(&sp(&[2]), &sp(&[3, 2])).unwrap();
        assert_eq!(m.families.len(), 3);
        let m = enumerate_models(&StrictPartition::empty(), &sp(&[3, 2])).unwrap();
        assert_eq!(m.subsets.len(), 1);
    }

    #[test]
    fn unfold_small() {
        let t = young(&[1], &[&[1]]);
        let s = unfold_symmetric(&t).unwrap();
        assert_eq!(s.content, BTreeMap::from([((1, 1), 1)]));
        let t = young(&[2], &[&[1, 2]]);
        let s = unfold_symmetric(&t).unwrap();
        assert_eq!(s.content[&(2, 1)], 3);
        assert!(s.is_symmetric());
        assert_eq!(s.rho().unwrap(), t);
    }

    #[test]
    fn unfold_round_trips() {
        let m = enumerate_models(&sp(&[3, 1]), &sp(&[5, 3, 2, 1])).unwrap();
        for t in &m.tableaux {
            let s = unfold_symmetric(t).unwrap();
            assert!(s.is_symmetric() && s.is_semistandard());
            assert_eq!(&s.rho().unwrap(), t);
        }
        for d in &m.subsets {
            let s = double_subset(d);
            assert!(s.is_symmetric());
            assert_eq!(s.shape, Partition::new(vec![5, 4, 4, 4, 1]).unwrap());
            assert_eq!(&s.rho(), d);
        }
    }

    #[test]
    fn doubling_small() {
        let d = DiagramSubset::new(sp(&[2]), boxes(&[(1, 1)])).unwrap();
        assert_eq!(double_subset(&d).members, boxes(&[(1, 1)]));
        let d = DiagramSubset::new(sp(&[2]), boxes(&[(1, 2)])).unwrap();
        assert_eq!(double_subset(&d).members, boxes(&[(1, 2), (2, 1)]));
    }
}
