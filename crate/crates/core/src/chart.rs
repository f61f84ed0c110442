//! The affine chart around a fixed point `e_β`.
//!
//! Coordinates `y_{ab}` are indexed by pairs `(a, b)` with `a ∈ β'`, `b ∈ β`
//! and `a ≤ bar(b)`. The torus scales `y_{ab}` by `t_b / t_a` (with
//! `t_{bar(k)} = t_k^{-1}`).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::indexcomb::{bar_unchecked, IsotropicIndex};
use crate::laurent::{bar_var_h, bar_var_k, Coefficient, LaurentPolynomial};
use crate::tableaux::SetValuedShiftedTableau;

pub type Coordinate = (usize, usize);

/// The index set `R_β` of chart coordinates, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartIndexSet {
    beta: IsotropicIndex,
    pairs: Vec<Coordinate>,
}

impl ChartIndexSet {
    pub fn new(beta: &IsotropicIndex) -> Self {
        let n = beta.rank();
        let comp = beta.complement();
        let mut pairs: Vec<Coordinate> = comp
            .values()
            .iter()
            .flat_map(|&a| {
                beta.values()
                    .iter()
                    .filter(move |&&b| a <= bar_unchecked(b, n))
                    .map(move |&b| (a, b))
            })
            .collect();
        pairs.sort_unstable();
        ChartIndexSet {
            beta: beta.clone(),
            pairs,
        }
    }

    pub fn beta(&self) -> &IsotropicIndex {
        &self.beta
    }

    pub fn pairs(&self) -> &[Coordinate] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: Coordinate) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    /// Position of `pair` in the sorted index set.
    pub fn position(&self, pair: Coordinate) -> Option<usize> {
        self.pairs.binary_search(&pair).ok()
    }

    fn check(&self, pair: Coordinate) -> Result<()> {
        if self.contains(pair) {
            Ok(())
        } else {
            Err(Error::NotACoordinate {
                a: pair.0,
                b: pair.1,
            })
        }
    }

    pub fn weight_k<C: Coefficient>(&self, pair: Coordinate) -> Result<LaurentPolynomial<C>> {
        self.check(pair)?;
        coordinate_weight_k(pair.0, pair.1, self.beta.rank())
    }

    pub fn weight_h<C: Coefficient>(&self, pair: Coordinate) -> Result<LaurentPolynomial<C>> {
        self.check(pair)?;
        coordinate_weight_h(pair.0, pair.1, self.beta.rank())
    }
}

pub fn chart_index_set(beta: &IsotropicIndex) -> ChartIndexSet {
    ChartIndexSet::new(beta)
}

/// The character `t_b / t_a` by which the torus scales `y_{ab}`.
pub fn coordinate_weight_k<C: Coefficient>(
    a: usize,
    b: usize,
    n: usize,
) -> Result<LaurentPolynomial<C>> {
    if a == b {
        return Err(Error::NotACoordinate { a, b });
    }
    let ta: LaurentPolynomial<C> = bar_var_k(a, n)?;
    let tb: LaurentPolynomial<C> = bar_var_k(b, n)?;
    Ok(&tb * &ta.monomial_inverse().expect("monomial"))
}

/// The linear weight `t_b − t_a` of `y_{ab}`.
pub fn coordinate_weight_h<C: Coefficient>(
    a: usize,
    b: usize,
    n: usize,
) -> Result<LaurentPolynomial<C>> {
    if a == b {
        return Err(Error::NotACoordinate { a, b });
    }
    let ta: LaurentPolynomial<C> = bar_var_h(a, n)?;
    let tb: LaurentPolynomial<C> = bar_var_h(b, n)?;
    Ok(&tb - &ta)
}

/// One cell of the `2n × n` matrix describing the chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cell {
    Zero,
    One,
    Coord { sign: i8, a: usize, b: usize },
}

/// Rows are labelled `1..=2n`, columns by `β(1), …, β(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixPattern {
    pub n: usize,
    pub columns: Vec<usize>,
    pub rows: Vec<Vec<Cell>>,
}

/// The matrix `K·M`: identity in rows `β`, chart coordinates in rows `β'`
/// mirrored about the antidiagonal of the `β' × β` block, and rows
/// `a ∈ β'` with `a ≤ n` negated.
pub fn chart_matrix_pattern(beta: &IsotropicIndex) -> MatrixPattern {
    let n = beta.rank();
    let comp = beta.complement();
    let rows = (1..=2 * n)
        .map(|label| {
            if let Ok(j) = beta.values().binary_search(&label) {
                return (0..n).map(|k| if k == j { Cell::One } else { Cell::Zero }).collect();
            }
            let i = comp.values().binary_search(&label).expect("β ∪ β' covers all labels") + 1;
            let sign: i8 = if label <= n { -1 } else { 1 };
            (1..=n)
                .map(|j| {
                    let (a, b) = (comp.at(i), beta.at(j));
                    let (a, b) = if a <= bar_unchecked(b, n) {
                        (a, b)
                    } else {
                        (comp.at(n + 1 - j), beta.at(n + 1 - i))
                    };
                    Cell::Coord { sign, a, b }
                })
                .collect()
        })
        .collect();
    MatrixPattern {
        n,
        columns: beta.values().to_vec(),
        rows,
    }
}

impl fmt::Display for MatrixPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |k: usize| -> String {
            if k <= self.n {
                k.to_string()
            } else {
                format!("-{}", bar_unchecked(k, self.n))
            }
        };
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match *c {
                        Cell::Zero => "0".to_string(),
                        Cell::One => "1".to_string(),
                        Cell::Coord { sign, a, b } => format!(
                            "{}y({},{})",
                            if sign < 0 { "-" } else { "" },
                            label(a),
                            label(b)
                        ),
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (r, row) in cells.iter().enumerate() {
            write!(f, "{:>3} |", label(r + 1))?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f, " |")?;
        }
        Ok(())
    }
}

/// The coordinate subspace `W_S`, stored as the set of vanishing coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceSpec {
    pub beta: IsotropicIndex,
    pub cut: BTreeSet<Coordinate>,
}

/// `W_S = V(y_{β'(x), bar(β'(z(x)))} : x ∈ S)`.
pub fn subspace_of_tableau(
    tableau: &SetValuedShiftedTableau,
    beta: &IsotropicIndex,
) -> Result<SubspaceSpec> {
    let chart = ChartIndexSet::new(beta);
    subspace_in_chart(tableau, &chart)
}

pub(crate) fn subspace_in_chart(
    tableau: &SetValuedShiftedTableau,
    chart: &ChartIndexSet,
) -> Result<SubspaceSpec> {
    let beta = chart.beta();
    let n = beta.rank();
    let comp = beta.complement();
    let mut cut = BTreeSet::new();
    for e in tableau.entries() {
        let z = e.z();
        if e.value > n || z > n {
            return Err(Error::NotACoordinate {
                a: e.value,
                b: z,
            });
        }
        let pair = (comp.at(e.value), bar_unchecked(comp.at(z), n));
        chart.check(pair)?;
        cut.insert(pair);
    }
    Ok(SubspaceSpec {
        beta: beta.clone(),
        cut,
    })
}
