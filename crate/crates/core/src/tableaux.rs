//! Shifted diagrams and semistandard set-valued shifted tableaux.
//!
//! Columns are absolute: row `r` of a shifted diagram starts at column `r`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indexcomb::StrictPartition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedDiagram {
    shape: StrictPartition,
}

impl ShiftedDiagram {
    pub fn new(shape: StrictPartition) -> Self {
        ShiftedDiagram { shape }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    /// Columns `r..=r + λ_r − 1` of row `r`.
    pub fn row_columns(&self, r: usize) -> std::ops::RangeInclusive<usize> {
        let len = self.shape.part(r);
        r..=r + len - 1
    }

    /// Boxes `(row, col)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.shape.len()).flat_map(move |r| self.row_columns(r).map(move |c| (r, c)))
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.shape.len() && col >= row && col < row + self.shape.part(row)
    }

    pub fn num_boxes(&self) -> usize {
        self.shape.size()
    }
}

/// An entry `x` together with the row and absolute column of its box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EntryContext {
    pub value: usize,
    pub row: usize,
    pub col: usize,
}

impl EntryContext {
    /// `z(x) = x + c(x) − r(x)`.
    pub fn z(&self) -> usize {
        self.value + self.col - self.row
    }
}

/// A filling of a shifted diagram by nonempty sets of positive integers.
///
/// `rows[r - 1][j]` is the sorted content of box `(r, r + j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetValuedShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<Vec<usize>>>,
}

impl SetValuedShiftedTableau {
    /// Checks that `rows` fills `shape` with nonempty sets of positive
    /// integers; sets are sorted and deduplicated.
    pub fn new(shape: StrictPartition, mut rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::InvalidTableau(format!(
                "{} rows for shape {shape}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter_mut().enumerate() {
            if row.len() != shape.part(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} boxes, shape {shape}",
                    i + 1,
                    row.len()
                )));
            }
            for cell in row.iter_mut() {
                cell.sort_unstable();
                cell.dedup();
                if cell.is_empty() || cell[0] == 0 {
                    return Err(Error::InvalidTableau(
                        "boxes need nonempty sets of positive integers".into(),
                    ));
                }
            }
        }
        Ok(SetValuedShiftedTableau { shape, rows })
    }

    /// A tableau with one integer per box.
    pub fn from_young(shape: StrictPartition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| vec![v]).collect())
            .collect();
        Self::new(shape, rows)
    }

    pub fn empty() -> Self {
        SetValuedShiftedTableau {
            shape: StrictPartition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn diagram(&self) -> ShiftedDiagram {
        ShiftedDiagram::new(self.shape.clone())
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    /// Content of box `(row, col)`.
    pub fn cell(&self, row: usize, col: usize) -> Option<&[usize]> {
        if col < row {
            return None;
        }
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col - row)
            .map(Vec::as_slice)
    }

    /// Every entry, repeats in distinct boxes counted separately.
    pub fn entries(&self) -> impl Iterator<Item = EntryContext> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().flat_map(move |(j, cell)| {
                cell.iter().map(move |&value| EntryContext {
                    value,
                    row: i + 1,
                    col: i + 1 + j,
                })
            })
        })
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    /// Every box holds a single integer.
    pub fn is_young(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.len() == 1)
    }

    /// Single entries of a Young tableau, row by row.
    pub fn young_rows(&self) -> Option<Vec<Vec<usize>>> {
        self.is_young()
            .then(|| self.rows.iter().map(|r| r.iter().map(|c| c[0]).collect()).collect())
    }

    /// Rows weakly increase between boxes, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            let r = i + 1;
            for (j, cell) in row.iter().enumerate() {
                let c = r + j;
                let max = *cell.last().expect("nonempty");
                if let Some(right) = self.cell(r, c + 1) {
                    if max > right[0] {
                        return false;
                    }
                }
                if let Some(below) = self.cell(r + 1, c) {
                    if max >= below[0] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every entry satisfies `x ≤ h` and `z(x) ≤ μ_x + x − 1`.
    pub fn is_on(&self, mu: &StrictPartition) -> bool {
        let h = mu.len();
        self.entries()
            .all(|e| e.value <= h && e.z() < mu.part(e.value) + e.value)
    }

    pub fn to_json_cells(&self) -> Vec<JsonCell> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, cell)| JsonCell {
                    row: i + 1,
                    col: i + 1 + j,
                    entries: cell.clone(),
                })
            })
            .collect()
    }
}

impl fmt::Display for SetValuedShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::tableau_ascii(self))
    }
}

/// JSON form of one box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCell {
    pub row: usize,
    pub col: usize,
    pub entries: Vec<usize>,
}

impl Serialize for SetValuedShiftedTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_cells().serialize(s)
    }
}

/// All semistandard set-valued shifted tableaux of shape `lambda` on `mu`.
pub fn enumerate_ssvt(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Vec<SetValuedShiftedTableau> {
    Enumerator::new(lambda, mu, false).run()
}

/// The Young (single-entry) members of [`enumerate_ssvt`].
pub fn enumerate_ssyt(
    lambda: &StrictPartition,
    mu: &StrictPartition,
) -> Vec<SetValuedShiftedTableau> {
    Enumerator::new(lambda, mu, true).run()
}

/// Row-major backtracking. An entry `x` in relative column `j` needs
/// `j ≤ μ_x`; since `μ` is strict the admissible values form a prefix `1..=cap`.
struct Enumerator<'a> {
    lambda: &'a StrictPartition,
    boxes: Vec<(usize, usize)>,
    caps: Vec<usize>,
    singletons: bool,
    cells: Vec<Vec<usize>>,
    out: Vec<SetValuedShiftedTableau>,
}

impl<'a> Enumerator<'a> {
    fn new(lambda: &'a StrictPartition, mu: &StrictPartition, singletons: bool) -> Self {
        let boxes: Vec<(usize, usize)> = ShiftedDiagram::new(lambda.clone()).boxes().collect();
        let caps = boxes
            .iter()
            .map(|&(r, c)| {
                let j = c - r + 1;
                (1..=mu.len()).take_while(|&x| mu.part(x) >= j).count()
            })
            .collect();
        Enumerator {
            lambda,
            boxes,
            caps,
            singletons,
            cells: Vec::new(),
            out: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<SetValuedShiftedTableau> {
        self.place(0);
        self.out.sort();
        self.out
    }

    fn index_of(&self, r: usize, c: usize) -> Option<usize> {
        if c < r || r == 0 || c >= r + self.lambda.part(r) {
            return None;
        }
        let before: usize = (1..r).map(|i| self.lambda.part(i)).sum();
        Some(before + c - r)
    }

    fn place(&mut self, k: usize) {
        if k == self.boxes.len() {
            let mut rows = Vec::with_capacity(self.lambda.len());
            let mut it = self.cells.iter().cloned();
            for r in 1..=self.lambda.len() {
                rows.push(it.by_ref().take(self.lambda.part(r)).collect());
            }
            self.out.push(SetValuedShiftedTableau {
                shape: self.lambda.clone(),
                rows,
            });
            return;
        }
        let (r, c) = self.boxes[k];
        let mut low = 1;
        if let Some(left) = self.index_of(r, c.wrapping_sub(1)) {
            low = low.max(*self.cells[left].last().expect("nonempty"));
        }
        if r > 1 {
            if let Some(above) = self.index_of(r - 1, c) {
                low = low.max(self.cells[above].last().expect("nonempty") + 1);
            }
        }
        let cap = self.caps[k];
        if low > cap {
            return;
        }
        let width = cap - low + 1;
        for mask in 1u64..1 << width {
            if self.singletons && mask.count_ones() != 1 {
                continue;
            }
            let set: Vec<usize> = (0..width)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| low + b)
                .collect();
            self.cells.push(set);
            self.place(k + 1);
            self.cells.pop();
        }
    }
}
