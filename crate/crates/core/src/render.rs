//! ASCII and SVG pictures of tableaux, diagram subsets, path families and
//! Young diagrams. Shifted rows are indented so the left edge is a staircase.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::indexcomb::{Partition, StrictPartition};
use crate::models::{Box2, DiagramSubset, PathFamily, SymmetricSubset};
use crate::tableaux::{SetValuedShiftedTableau, ShiftedDiagram};

const CELL: f64 = 30.0;
const PAD: f64 = 10.0;
const PATH_COLORS: [&str; 6] = ["#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98", "#17202a"];

fn cell_label(cell: &[usize]) -> String {
    if cell.len() == 1 {
        cell[0].to_string()
    } else {
        cell.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Text grid with one column slot per absolute column.
fn ascii_grid(rows: &[(usize, Vec<String>)]) -> String {
    let width = rows
        .iter()
        .flat_map(|(_, r)| r.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (start, cells) in rows {
        let mut line = " ".repeat((start - 1) * (width + 1));
        let body: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
        line.push_str(&body.join(" "));
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn tableau_ascii(t: &SetValuedShiftedTableau) -> String {
    if t.rows().is_empty() {
        return "(empty)\n".into();
    }
    let rows: Vec<(usize, Vec<String>)> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| (i + 1, row.iter().map(|c| cell_label(c)).collect()))
        .collect();
    ascii_grid(&rows)
}

fn shifted_marks(mu: &StrictPartition, mark: impl Fn(Box2) -> String) -> String {
    if mu.is_empty() {
        return "(empty)\n".into();
    }
    let rows: Vec<(usize, Vec<String>)> = (1..=mu.len())
        .map(|r| (r, (r..r + mu.part(r)).map(|c| mark((r, c))).collect()))
        .collect();
    ascii_grid(&rows)
}

/// `#` for members, `.` for the rest of the ambient diagram.
pub fn subset_ascii(d: &DiagramSubset) -> String {
    shifted_marks(&d.ambient, |b| if d.members.contains(&b) { "#" } else { "." }.into())
}

/// Each support box shows the letter of its path; `.` marks the rest.
pub fn family_ascii(f: &PathFamily) -> String {
    shifted_marks(&f.ambient, |b| {
        f.paths
            .iter()
            .position(|p| p.contains(&b))
            .map_or(".".into(), |i| char::from(b'a' + (i % 26) as u8).to_string())
    })
}

/// Young diagram with `#` for marked boxes and `.` otherwise.
pub fn young_ascii(shape: &Partition, marked: &BTreeSet<Box2>) -> String {
    if shape.is_empty() {
        return "(empty)\n".into();
    }
    let mut out = String::new();
    for r in 1..=shape.len() {
        let line: Vec<&str> = (1..=shape.part(r))
            .map(|c| if marked.contains(&(r, c)) { "#" } else { "." })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn symmetric_subset_ascii(s: &SymmetricSubset) -> String {
    young_ascii(&s.shape, &s.members)
}

/// `η` on the left with the boxes below the diagonal shaded, `ρ(η)` on the
/// right.
pub fn rho_ascii(eta: &Partition) -> String {
    let below: BTreeSet<Box2> = eta.boxes().filter(|&(r, c)| c < r).collect();
    let left = young_ascii(eta, &below);
    let rho = eta.rho();
    let right = shifted_marks(&rho, |_| ".".into());
    let (l, r): (Vec<&str>, Vec<&str>) = (left.lines().collect(), right.lines().collect());
    let w = l.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = String::new();
    for i in 0..l.len().max(r.len()) {
        let a = l.get(i).copied().unwrap_or("");
        let b = r.get(i).copied().unwrap_or("");
        let mid = if i == 0 { "  ->  " } else { "      " };
        let line = format!("{a:<w$}{mid}{b}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new() -> Self {
        Svg {
            body: String::new(),
            width: 0.0,
            height: 0.0,
        }
    }

    fn extend(&mut self, x: f64, y: f64) {
        self.width = self.width.max(x + PAD);
        self.height = self.height.max(y + PAD);
    }

    /// Box `(r, c)` in grid coordinates, offset by `dx` pixels.
    fn cell(&mut self, dx: f64, r: usize, c: usize, fill: &str) {
        let (x, y) = (dx + PAD + (c - 1) as f64 * CELL, PAD + (r - 1) as f64 * CELL);
        let _ = writeln!(
            self.body,
            r#"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="black"/>"#
        );
        self.extend(x + CELL, y + CELL);
    }

    fn text(&mut self, dx: f64, r: usize, c: usize, label: &str) {
        let x = dx + PAD + (c as f64 - 0.5) * CELL;
        let y = PAD + (r as f64 - 0.5) * CELL;
        let size = if label.len() > 2 { 10 } else { 14 };
        let _ = writeln!(
            self.body,
            r#"<text x="{x}" y="{y}" font-size="{size}" text-anchor="middle" dominant-baseline="central">{label}</text>"#
        );
    }

    fn polyline(&mut self, dx: f64, boxes: &[Box2], color: &str) {
        let pts: Vec<String> = boxes
            .iter()
            .map(|&(r, c)| {
                format!(
                    "{},{}",
                    dx + PAD + (c as f64 - 0.5) * CELL,
                    PAD + (r as f64 - 0.5) * CELL
                )
            })
            .collect();
        let _ = writeln!(
            self.body,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="3"/>"#,
            pts.join(" ")
        );
        if let [(r, c)] = boxes {
            let (x, y) = (dx + PAD + (*c as f64 - 0.5) * CELL, PAD + (*r as f64 - 0.5) * CELL);
            let _ = writeln!(self.body, r#"<circle cx="{x}" cy="{y}" r="4" fill="{color}"/>"#);
        }
    }

    fn finish(self) -> String {
        let (w, h) = (self.width.max(2.0 * PAD), self.height.max(2.0 * PAD));
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n{}</svg>\n",
            self.body
        )
    }
}

pub fn tableau_svg(t: &SetValuedShiftedTableau) -> String {
    let mut svg = Svg::new();
    for (i, row) in t.rows().iter().enumerate() {
        let r = i + 1;
        for (j, cell) in row.iter().enumerate() {
            svg.cell(0.0, r, r + j, "white");
            svg.text(0.0, r, r + j, &cell_label(cell));
        }
    }
    svg.finish()
}

/// Ambient diagram with the members shaded gray.
pub fn subset_svg(d: &DiagramSubset) -> String {
    let mut svg = Svg::new();
    for (r, c) in ShiftedDiagram::new(d.ambient.clone()).boxes() {
        let fill = if d.members.contains(&(r, c)) { "#b0b0b0" } else { "white" };
        svg.cell(0.0, r, c, fill);
    }
    svg.finish()
}

/// Ambient diagram with one polyline per path through the box centers.
pub fn family_svg(f: &PathFamily) -> String {
    let mut svg = Svg::new();
    for (r, c) in ShiftedDiagram::new(f.ambient.clone()).boxes() {
        svg.cell(0.0, r, c, "white");
    }
    for (i, p) in f.paths.iter().enumerate() {
        svg.polyline(0.0, p, PATH_COLORS[i % PATH_COLORS.len()]);
    }
    svg.finish()
}

pub fn young_svg(shape: &Partition, marked: &BTreeSet<Box2>) -> String {
    let mut svg = Svg::new();
    for (r, c) in shape.boxes() {
        let fill = if marked.contains(&(r, c)) { "#b0b0b0" } else { "white" };
        svg.cell(0.0, r, c, fill);
    }
    svg.finish()
}

pub fn symmetric_subset_svg(s: &SymmetricSubset) -> String {
    young_svg(&s.shape, &s.members)
}

/// The before/after pair for `ρ`: `η` with its below-diagonal boxes shaded,
/// then the shifted diagram `ρ(η)`.
pub fn rho_svg(eta: &Partition) -> String {
    let mut svg = Svg::new();
    for (r, c) in eta.boxes() {
        svg.cell(0.0, r, c, if c < r { "#b0b0b0" } else { "white" });
    }
    let dx = (eta.part(1) as f64 + 2.0) * CELL;
    let rho = eta.rho();
    for (r, c) in ShiftedDiagram::new(rho).boxes() {
        svg.cell(dx, r, c, "white");
    }
    svg.finish()
}
