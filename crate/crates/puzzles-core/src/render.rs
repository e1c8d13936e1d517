//! Deterministic SVG rendering of boundaries and fillings.
//!
//! Geometry is the standard triangular-lattice embedding: edges have unit
//! length, rows have height sqrt(3)/2, and the y-axis points down, so the
//! apex of an up-triangle has the smaller y. Every piece becomes exactly
//! one `<polygon>` element (a rhombus is a single quadrilateral); the
//! region outline is a `<path>`, so the polygon count of a document equals
//! the placement count of the rendered filling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::pieces::{EdgeLabel, Piece, PieceLabels};
use crate::region::{build_lattice, BoundarySpec, CellId, EdgeId};
use crate::tiler::Filling;

const ROW_HEIGHT: f64 = 0.866_025_403_784_438_6;
const MARGIN: f64 = 0.5;

/// Fill colors per catalog class. Every piece falls into exactly one of
/// the five classes, so a palette always covers the full catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub all_zero: String,
    pub all_one: String,
    pub ten_bearing: String,
    pub equivariant: String,
    pub k_piece: String,
}

impl Default for Palette {
    fn default() -> Palette {
        Palette {
            all_zero: "#e5534b".to_string(),
            all_one: "#4f7bd9".to_string(),
            ten_bearing: "#ffffff".to_string(),
            equivariant: "#f5d76e".to_string(),
            k_piece: "#9fd49f".to_string(),
        }
    }
}

impl Palette {
    pub fn fill_for(&self, piece: &Piece) -> &str {
        if piece.is_rhombus() {
            return &self.equivariant;
        }
        if piece.is_k_piece() {
            return &self.k_piece;
        }
        match piece.triangle_labels() {
            Some((EdgeLabel::Zero, EdgeLabel::Zero, EdgeLabel::Zero)) => &self.all_zero,
            Some((EdgeLabel::One, EdgeLabel::One, EdgeLabel::One)) => &self.all_one,
            _ => &self.ten_bearing,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Edge length in pixels.
    pub unit: f64,
    pub palette: Palette,
    pub draw_labels: bool,
}

impl Default for RenderStyle {
    fn default() -> RenderStyle {
        RenderStyle {
            unit: 48.0,
            palette: Palette::default(),
            draw_labels: true,
        }
    }
}

/// What to draw: a bare boundary (outline and labels only) or a filling.
#[derive(Debug, Clone, Copy)]
pub enum RenderTarget<'a> {
    Boundary(&'a BoundarySpec),
    Filling(&'a Filling),
}

impl<'a> From<&'a BoundarySpec> for RenderTarget<'a> {
    fn from(b: &'a BoundarySpec) -> RenderTarget<'a> {
        RenderTarget::Boundary(b)
    }
}

impl<'a> From<&'a Filling> for RenderTarget<'a> {
    fn from(f: &'a Filling) -> RenderTarget<'a> {
        RenderTarget::Filling(f)
    }
}

/// Renders a boundary or filling as a standalone SVG document. Output is
/// byte-identical for identical inputs.
pub fn render_svg<'a>(target: impl Into<RenderTarget<'a>>, style: &RenderStyle) -> String {
    let target = target.into();
    let b = match target {
        RenderTarget::Boundary(b) => b,
        RenderTarget::Filling(f) => f.boundary(),
    };
    let n = b.n;
    let width = (n as f64 + 2.0 * MARGIN) * style.unit;
    let height = (n as f64 * ROW_HEIGHT + 2.0 * MARGIN) * style.unit;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt_px(width),
        fmt_px(height),
        fmt_px(width),
        fmt_px(height)
    );

    if let RenderTarget::Filling(f) = target {
        for (cell, piece) in f.placements() {
            let corners = piece_corners(n, *cell, piece);
            let points: Vec<String> = corners
                .iter()
                .map(|&(x, y)| format!("{},{}", px(x, style), px(y, style)))
                .collect();
            let _ = writeln!(
                svg,
                "<polygon points=\"{}\" fill=\"{}\" stroke=\"black\" stroke-width=\"{}\"/>",
                points.join(" "),
                style.palette.fill_for(piece),
                fmt_px(0.03 * style.unit)
            );
        }
    }

    let _ = writeln!(
        svg,
        "<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
        outline_path(b, style),
        fmt_px(0.06 * style.unit)
    );

    if style.draw_labels {
        for (edge, label) in edge_labels(target) {
            let (x, y) = edge_midpoint(n, edge);
            let _ = writeln!(
                svg,
                "<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\" \
                 text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                px(x, style),
                px(y, style),
                fmt_px(0.3 * style.unit),
                label
            );
        }
    }

    svg.push_str("</svg>\n");
    svg
}

fn px(v: f64, style: &RenderStyle) -> String {
    fmt_px((v + MARGIN) * style.unit)
}

fn fmt_px(v: f64) -> String {
    format!("{:.2}", v)
}

/// Corner coordinates in lattice units, clockwise on screen.
fn piece_corners(n: usize, cell: CellId, piece: &Piece) -> Vec<(f64, f64)> {
    match (cell, piece.is_rhombus()) {
        (CellId::Up { r, i }, false) => {
            let (apex, bl, br) = up_corners(n, r, i);
            vec![apex, br, bl]
        }
        (CellId::Down { r, i }, false) => {
            let (tl, tr, bottom) = down_corners(n, r, i);
            vec![tl, tr, bottom]
        }
        (CellId::Up { r, i }, true) => {
            // Anchored at the up cell, claiming the down cell beneath.
            let (apex, bl, br) = up_corners(n, r, i);
            let (_, _, bottom) = down_corners(n, r + 1, i);
            vec![apex, br, bottom, bl]
        }
        (CellId::Down { .. }, true) => unreachable!("rhombi anchor at up cells"),
    }
}

fn up_corners(n: usize, r: usize, i: usize) -> ((f64, f64), (f64, f64), (f64, f64)) {
    let left = (n as f64 - r as f64) / 2.0 + (i - 1) as f64;
    let apex = (left + 0.5, (r - 1) as f64 * ROW_HEIGHT);
    let bl = (left, r as f64 * ROW_HEIGHT);
    let br = (left + 1.0, r as f64 * ROW_HEIGHT);
    (apex, bl, br)
}

fn down_corners(n: usize, r: usize, i: usize) -> ((f64, f64), (f64, f64), (f64, f64)) {
    let left = (n as f64 - r as f64) / 2.0 + i as f64 - 0.5;
    let tl = (left, (r - 1) as f64 * ROW_HEIGHT);
    let tr = (left + 1.0, (r - 1) as f64 * ROW_HEIGHT);
    let bottom = (left + 0.5, r as f64 * ROW_HEIGHT);
    (tl, tr, bottom)
}

/// The region outline, clockwise from the S/SW corner, omitting vertices
/// collapsed by zero-size cuts.
fn outline_path(b: &BoundarySpec, style: &RenderStyle) -> String {
    let n = b.n as f64;
    let (p, q, s) = (b.cut_bl as f64, b.cut_top as f64, b.cut_br as f64);
    let h = ROW_HEIGHT;
    let vertices = [
        (p, n * h),
        (p / 2.0, (n - p) * h),
        ((n - q) / 2.0, q * h),
        ((n + q) / 2.0, q * h),
        (n - s / 2.0, (n - s) * h),
        (n - s, n * h),
    ];
    let mut kept: Vec<(f64, f64)> = Vec::new();
    for v in vertices {
        if kept.last() != Some(&v) && kept.first() != Some(&v) {
            kept.push(v);
        }
    }
    let mut d = String::new();
    for (k, (x, y)) in kept.iter().enumerate() {
        let _ = write!(
            d,
            "{}{} {}",
            if k == 0 { "M" } else { " L" },
            px(*x, style),
            px(*y, style)
        );
    }
    d.push_str(" Z");
    d
}

/// Labeled edges: the boundary labels for a bare boundary, every piece
/// edge for a filling. Keyed by edge id so shared interior edges appear
/// once and output order is canonical.
fn edge_labels(target: RenderTarget<'_>) -> BTreeMap<EdgeId, EdgeLabel> {
    let mut out = BTreeMap::new();
    match target {
        RenderTarget::Boundary(b) => {
            out.extend(build_lattice(b).boundary_labels);
        }
        RenderTarget::Filling(f) => {
            let lat = build_lattice(f.boundary());
            for (cell, piece) in f.placements() {
                match piece.labels {
                    PieceLabels::Triangle {
                        rising,
                        falling,
                        horizontal,
                    } => {
                        let [er, ef, eh] = lat.cell_edges(*cell);
                        out.insert(er, rising);
                        out.insert(ef, falling);
                        out.insert(eh, horizontal);
                    }
                    PieceLabels::Rhombus { nw, ne, se, sw } => {
                        let CellId::Up { r, i } = *cell else {
                            unreachable!("rhombi anchor at up cells")
                        };
                        let [er, ef, _] = lat.cell_edges(CellId::Up { r, i });
                        out.insert(er, nw);
                        out.insert(ef, ne);
                        let [er, ef, _] = lat.cell_edges(CellId::Down { r: r + 1, i });
                        out.insert(er, se);
                        out.insert(ef, sw);
                    }
                }
            }
        }
    }
    out
}

/// Decodes an edge id per the documented scheme: UP(r,i) owns edges
/// 3*pos .. 3*pos+2 with pos = r(r-1)/2 + (i-1).
fn edge_midpoint(n: usize, edge: EdgeId) -> (f64, f64) {
    let pos = edge / 3;
    let mut r = 1usize;
    while r * (r + 1) / 2 <= pos {
        r += 1;
    }
    let i = pos - r * (r - 1) / 2 + 1;
    let (apex, bl, br) = up_corners(n, r, i);
    let other = match edge % 3 {
        0 => bl,
        1 => br,
        _ => return ((bl.0 + br.0) / 2.0, bl.1),
    };
    ((apex.0 + other.0) / 2.0, (apex.1 + other.1) / 2.0)
}
