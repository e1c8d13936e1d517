//! Convex polygonal boundaries in the triangular lattice.
//!
//! Every region is modeled as a size-N up-triangle with up-triangular
//! corner cuts at the bottom-left, top, and bottom-right corners. The six
//! boundary sides are read clockwise starting at the SW cut side: SW and NW
//! upward, N left to right, NE and SE downward, S right to left. A side of
//! length zero carries the empty string and contributes no edges.
//!
//! Cells of the full size-N triangle are UP(r,i) (1 <= i <= r <= N) and
//! DOWN(r,i) (1 <= i <= r-1), rows numbered top to bottom. UP(r,i) shares
//! its rising edge with DOWN(r,i-1), its falling edge with DOWN(r,i), and
//! its horizontal edge with DOWN(r+1,i).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pieces::EdgeLabel;
use crate::words::{BinaryString, Content};

/// A cell of the triangular lattice, in row/index coordinates of the
/// ambient size-N triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellId {
    Up { r: usize, i: usize },
    Down { r: usize, i: usize },
}

impl CellId {
    /// Key realizing the canonical scan order: rows top to bottom, within a
    /// row UP(r,1), DOWN(r,1), UP(r,2), DOWN(r,2), ...
    fn scan_key(&self) -> (usize, usize) {
        match *self {
            CellId::Up { r, i } => (r, 2 * i),
            CellId::Down { r, i } => (r, 2 * i + 1),
        }
    }
}

impl Ord for CellId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.scan_key().cmp(&other.scan_key())
    }
}

impl PartialOrd for CellId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CellId::Up { r, i } => write!(f, "U({},{})", r, i),
            CellId::Down { r, i } => write!(f, "D({},{})", r, i),
        }
    }
}

impl FromStr for CellId {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::ParseError(format!("invalid cell id {:?}", text));
        let (kind, rest) = text.split_at(text.len().min(1));
        let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (r, i) = rest.split_once(',').ok_or_else(bad)?;
        let r: usize = r.trim().parse().map_err(|_| bad())?;
        let i: usize = i.trim().parse().map_err(|_| bad())?;
        match kind {
            "U" => Ok(CellId::Up { r, i }),
            "D" => Ok(CellId::Down { r, i }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CellId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CellId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Lattice edges are numbered within the ambient triangle: UP(r,i) owns its
/// rising, falling, and horizontal edges under ids 3*pos, 3*pos+1, 3*pos+2
/// where pos = r(r-1)/2 + (i-1).
pub type EdgeId = usize;

fn edge_rising(r: usize, i: usize) -> EdgeId {
    3 * (r * (r - 1) / 2 + (i - 1))
}

fn edge_falling(r: usize, i: usize) -> EdgeId {
    edge_rising(r, i) + 1
}

fn edge_horizontal(r: usize, i: usize) -> EdgeId {
    edge_rising(r, i) + 2
}

/// The six boundary sides, clockwise from the bottom-left cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    SW,
    NW,
    N,
    NE,
    SE,
    S,
}

impl Side {
    pub const ALL: [Side; 6] = [Side::SW, Side::NW, Side::N, Side::NE, Side::SE, Side::S];

    pub fn as_str(self) -> &'static str {
        match self {
            Side::SW => "SW",
            Side::NW => "NW",
            Side::N => "N",
            Side::NE => "NE",
            Side::SE => "SE",
            Side::S => "S",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A labeled convex boundary: triangle size, corner cuts, and the six side
/// strings. The cuts are determined by the side lengths; the constructor
/// checks the closure identities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundarySpec {
    pub n: usize,
    pub cut_bl: usize,
    pub cut_top: usize,
    pub cut_br: usize,
    pub sw: BinaryString,
    pub nw: BinaryString,
    pub north: BinaryString,
    pub ne: BinaryString,
    pub se: BinaryString,
    pub south: BinaryString,
}

impl BoundarySpec {
    /// Builds the unique boundary with the given clockwise side labels
    /// (SW, NW, N, NE, SE, S). The cuts are the lengths of SW, N, SE and
    /// N is |SW|+|NW|+|N|; the NE/SE/S lengths must close up the polygon.
    pub fn from_sides(sides: [BinaryString; 6]) -> Result<BoundarySpec> {
        let [sw, nw, north, ne, se, south] = sides;
        let cut_bl = sw.len();
        let cut_top = north.len();
        let cut_br = se.len();
        let n = cut_bl + nw.len() + cut_top;
        if cut_top + ne.len() + cut_br != n {
            return Err(Error::InfeasibleShape(format!(
                "side lengths do not close up: |N|+|NE|+|SE| = {} but |SW|+|NW|+|N| = {}",
                cut_top + ne.len() + cut_br,
                n
            )));
        }
        if cut_br + south.len() + cut_bl != n {
            return Err(Error::InfeasibleShape(format!(
                "side lengths do not close up: |SE|+|S|+|SW| = {} but |SW|+|NW|+|N| = {}",
                cut_br + south.len() + cut_bl,
                n
            )));
        }
        Ok(BoundarySpec {
            n,
            cut_bl,
            cut_top,
            cut_br,
            sw,
            nw,
            north,
            ne,
            se,
            south,
        })
    }

    pub fn sides(&self) -> [&BinaryString; 6] {
        [&self.sw, &self.nw, &self.north, &self.ne, &self.se, &self.south]
    }

    pub fn side(&self, side: Side) -> &BinaryString {
        match side {
            Side::SW => &self.sw,
            Side::NW => &self.nw,
            Side::N => &self.north,
            Side::NE => &self.ne,
            Side::SE => &self.se,
            Side::S => &self.south,
        }
    }

    /// Number of lattice cells: N^2 minus one square per cut.
    pub fn cell_count(&self) -> usize {
        self.n * self.n
            - self.cut_bl * self.cut_bl
            - self.cut_top * self.cut_top
            - self.cut_br * self.cut_br
    }

    fn shape_name(&self) -> &'static str {
        let (sw, n, se) = (self.cut_bl > 0, self.cut_top > 0, self.cut_br > 0);
        match (sw, n, se) {
            (false, false, false) => "triangle",
            (true, false, false) => "trapezoid",
            (true, false, true) if self.south.is_empty() => "parallelogram",
            (false, true, true) if self.sw.is_empty() => "pentagon",
            _ => "hexagon",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SidesJson {
    #[serde(rename = "SW")]
    sw: BinaryString,
    #[serde(rename = "NW")]
    nw: BinaryString,
    #[serde(rename = "N")]
    north: BinaryString,
    #[serde(rename = "NE")]
    ne: BinaryString,
    #[serde(rename = "SE")]
    se: BinaryString,
    #[serde(rename = "S")]
    south: BinaryString,
}

#[derive(Serialize, Deserialize)]
struct BoundaryJson {
    shape: String,
    sides: SidesJson,
}

impl Serialize for BoundarySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BoundaryJson {
            shape: self.shape_name().to_string(),
            sides: SidesJson {
                sw: self.sw.clone(),
                nw: self.nw.clone(),
                north: self.north.clone(),
                ne: self.ne.clone(),
                se: self.se.clone(),
                south: self.south.clone(),
            },
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundarySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BoundaryJson::deserialize(deserializer)?;
        let s = raw.sides;
        BoundarySpec::from_sides([s.sw, s.nw, s.north, s.ne, s.se, s.south])
            .map_err(D::Error::custom)
    }
}

/// The triangle boundary with NW side λ (read upward), NE side μ (read
/// downward), and S side ν (read right to left).
pub fn triangle_boundary(
    lambda: &BinaryString,
    mu: &BinaryString,
    nu: &BinaryString,
) -> Result<BoundarySpec> {
    if lambda.len() != mu.len() || lambda.len() != nu.len() {
        return Err(Error::LengthMismatch(format!(
            "triangle sides must have equal length, got {}/{}/{}",
            lambda.len(),
            mu.len(),
            nu.len()
        )));
    }
    BoundarySpec::from_sides([
        BinaryString::empty(),
        lambda.clone(),
        BinaryString::empty(),
        mu.clone(),
        BinaryString::empty(),
        nu.clone(),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonKind {
    Trapezoid,
    Parallelogram,
    Pentagon,
    Hexagon,
    Rhombus,
}

/// Places `labels` onto the six clockwise sides for the given kind,
/// inserting empty sides where the kind degenerates: trapezoids have empty
/// N and SE, parallelograms and rhombi empty N and S, pentagons empty SW.
pub fn polygon_boundary(kind: PolygonKind, labels: &[BinaryString]) -> Result<BoundarySpec> {
    let expected = match kind {
        PolygonKind::Trapezoid | PolygonKind::Parallelogram | PolygonKind::Rhombus => 4,
        PolygonKind::Pentagon => 5,
        PolygonKind::Hexagon => 6,
    };
    if labels.len() != expected {
        return Err(Error::InfeasibleShape(format!(
            "{:?} takes {} side labels, got {}",
            kind,
            expected,
            labels.len()
        )));
    }
    let e = BinaryString::empty;
    let sides = match kind {
        PolygonKind::Trapezoid => {
            let [beta, gamma, nu, delta] = [&labels[0], &labels[1], &labels[2], &labels[3]];
            if beta.len() + gamma.len() != nu.len() {
                return Err(Error::InfeasibleShape(format!(
                    "trapezoid needs |β|+|γ| = |ν|, got {}+{} != {}",
                    beta.len(),
                    gamma.len(),
                    nu.len()
                )));
            }
            if delta.len() != gamma.len() {
                return Err(Error::InfeasibleShape(format!(
                    "trapezoid needs |δ| = |γ|, got {} != {}",
                    delta.len(),
                    gamma.len()
                )));
            }
            [(*beta).clone(), (*gamma).clone(), e(), (*nu).clone(), e(), (*delta).clone()]
        }
        PolygonKind::Parallelogram | PolygonKind::Rhombus => {
            let [alpha, gamma, beta, delta] = [&labels[0], &labels[1], &labels[2], &labels[3]];
            if alpha.len() != beta.len() {
                return Err(Error::InfeasibleShape(format!(
                    "parallelogram needs |α| = |β|, got {} != {}",
                    alpha.len(),
                    beta.len()
                )));
            }
            if gamma.len() != delta.len() {
                return Err(Error::InfeasibleShape(format!(
                    "parallelogram needs |γ| = |δ|, got {} != {}",
                    gamma.len(),
                    delta.len()
                )));
            }
            if kind == PolygonKind::Rhombus && alpha.len() != gamma.len() {
                return Err(Error::InfeasibleShape(format!(
                    "rhombus needs all four sides equal, got {} != {}",
                    alpha.len(),
                    gamma.len()
                )));
            }
            [(*alpha).clone(), (*gamma).clone(), e(), (*beta).clone(), (*delta).clone(), e()]
        }
        PolygonKind::Pentagon => {
            let mut sides = vec![e()];
            sides.extend(labels.iter().cloned());
            let arr: [BinaryString; 6] = sides.try_into().expect("six sides");
            arr
        }
        PolygonKind::Hexagon => {
            let arr: [BinaryString; 6] = labels.to_vec().try_into().expect("six sides");
            arr
        }
    };
    BoundarySpec::from_sides(sides)
}

/// A realized region: its cells in scan order, the boundary edge labels,
/// and the edge-id universe of the ambient triangle.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub n: usize,
    pub cut_bl: usize,
    pub cut_top: usize,
    pub cut_br: usize,
    pub cells: Vec<CellId>,
    pub boundary_labels: BTreeMap<EdgeId, EdgeLabel>,
    /// Set when a fully degenerate boundary assigns two different labels to
    /// the same edge; such a boundary admits no fillings.
    pub boundary_conflict: bool,
}

impl Lattice {
    pub fn edge_universe(&self) -> usize {
        3 * self.n * (self.n + 1) / 2
    }

    pub fn contains(&self, cell: CellId) -> bool {
        let (n, p, q, s) = (self.n, self.cut_bl, self.cut_top, self.cut_br);
        match cell {
            CellId::Up { r, i } => {
                r >= q + 1
                    && r <= n
                    && i >= 1
                    && i <= r
                    && i + n >= r + p + 1
                    && i + s <= n
            }
            CellId::Down { r, i } => {
                r >= q + 1
                    && r <= n
                    && i >= 1
                    && i + 1 <= r
                    && i + n >= r + p
                    && i + s <= n
            }
        }
    }

    /// [rising, falling, horizontal] edge ids of a cell.
    pub fn cell_edges(&self, cell: CellId) -> [EdgeId; 3] {
        match cell {
            CellId::Up { r, i } => [edge_rising(r, i), edge_falling(r, i), edge_horizontal(r, i)],
            CellId::Down { r, i } => {
                [edge_rising(r, i + 1), edge_falling(r, i), edge_horizontal(r - 1, i)]
            }
        }
    }

    /// Boundary edge ids of one side, in that side's reading order.
    pub fn side_edges(&self, side: Side) -> Vec<EdgeId> {
        let (n, p, q, s) = (self.n, self.cut_bl, self.cut_top, self.cut_br);
        match side {
            Side::SW => (n - p + 1..=n).rev().map(|r| edge_falling(r, r + p - n)).collect(),
            Side::NW => (q + 1..=n - p).rev().map(|r| edge_rising(r, 1)).collect(),
            Side::N => (1..=q).map(|i| edge_horizontal(q, i)).collect(),
            Side::NE => (q + 1..=n - s).map(|r| edge_falling(r, r)).collect(),
            Side::SE => (n - s + 1..=n).map(|r| edge_rising(r, n - s + 1)).collect(),
            Side::S => (p + 1..=n - s).rev().map(|i| edge_horizontal(n, i)).collect(),
        }
    }
}

/// Realizes a boundary as a lattice, distributing each side string one
/// character per boundary edge along the clockwise traversal.
pub fn build_lattice(b: &BoundarySpec) -> Lattice {
    build_lattice_with_free_sides(b, &[])
}

/// As [`build_lattice`], but the listed sides are left unlabeled; the tiler
/// then treats their edges as free (any binary label).
pub(crate) fn build_lattice_with_free_sides(b: &BoundarySpec, free: &[Side]) -> Lattice {
    let mut lat = Lattice {
        n: b.n,
        cut_bl: b.cut_bl,
        cut_top: b.cut_top,
        cut_br: b.cut_br,
        cells: Vec::with_capacity(b.cell_count()),
        boundary_labels: BTreeMap::new(),
        boundary_conflict: false,
    };
    for r in 1..=b.n {
        for i in 1..=r {
            let up = CellId::Up { r, i };
            if lat.contains(up) {
                lat.cells.push(up);
            }
            let down = CellId::Down { r, i };
            if lat.contains(down) {
                lat.cells.push(down);
            }
        }
    }
    for side in Side::ALL {
        if free.contains(&side) {
            continue;
        }
        let label = b.side(side);
        let edges = lat.side_edges(side);
        debug_assert_eq!(label.len(), edges.len());
        for (edge, &bit) in edges.into_iter().zip(label.bits()) {
            let new = EdgeLabel::from_bit(bit);
            match lat.boundary_labels.insert(edge, new) {
                Some(old) if old != new => lat.boundary_conflict = true,
                _ => {}
            }
        }
    }
    lat
}

/// Feasibility verdict from the boundary content identities. A `true`
/// verdict never guarantees a filling exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub violation: Option<String>,
}

/// Checks the three pairwise content identities that every filled boundary
/// satisfies: NW+N = SE+S, SW+NW = NE+SE, and N+NE = S+SW (as contents).
pub fn content_feasible(b: &BoundarySpec) -> Feasibility {
    let c = |s: &BinaryString| s.content();
    let checks: [(&str, Content, Content); 3] = [
        (
            "content(NW)+content(N) = content(SE)+content(S)",
            c(&b.nw).plus(c(&b.north)),
            c(&b.se).plus(c(&b.south)),
        ),
        (
            "content(SW)+content(NW) = content(NE)+content(SE)",
            c(&b.sw).plus(c(&b.nw)),
            c(&b.ne).plus(c(&b.se)),
        ),
        (
            "content(N)+content(NE) = content(S)+content(SW)",
            c(&b.north).plus(c(&b.ne)),
            c(&b.south).plus(c(&b.sw)),
        ),
    ];
    for (name, lhs, rhs) in checks {
        if lhs != rhs {
            return Feasibility {
                feasible: false,
                violation: Some(format!(
                    "{} violated: ({},{}) vs ({},{})",
                    name, lhs.zeros, lhs.ones, rhs.zeros, rhs.ones
                )),
            };
        }
    }
    Feasibility {
        feasible: true,
        violation: None,
    }
}

/// Cyclic shift of the six sides: side slot i of the result carries side
/// slot i+sixths of the input. Rotating a triangle by 2 sixths sends
/// Δ_{λ,μ,ν} to Δ_{μ,ν,λ}.
pub fn rotate_boundary(b: &BoundarySpec, sixths: i64) -> BoundarySpec {
    let k = sixths.rem_euclid(6) as usize;
    let old = b.sides();
    let sides: [BinaryString; 6] = std::array::from_fn(|i| old[(i + k) % 6].clone());
    BoundarySpec::from_sides(sides).expect("rotation preserves side-length closure")
}

/// Mirror duality: hexagon(α,β,γ,δ,ε,ζ) maps to hexagon(ε*,δ*,γ*,β*,α*,ζ*),
/// the reflection across the vertical axis with 0s and 1s exchanged.
pub fn dual_boundary(b: &BoundarySpec) -> BoundarySpec {
    let sides = [
        b.se.dual(),
        b.ne.dual(),
        b.north.dual(),
        b.nw.dual(),
        b.sw.dual(),
        b.south.dual(),
    ];
    BoundarySpec::from_sides(sides).expect("duality preserves side-length closure")
}

/// Parses the CLI compact boundary form: `tri:λ,μ,ν` (NW, NE, S),
/// `trap:β,γ,ν,δ`, `par:α,γ,β,δ`, `rhom:α,γ,β,δ`, `pent:β,γ,δ,ε,ζ`, or
/// `hex:α,β,γ,δ,ε,ζ`, sides clockwise, `-` denoting an empty side.
pub fn parse_boundary(text: &str) -> Result<BoundarySpec> {
    let (kind, rest) = text.split_once(':').ok_or_else(|| {
        Error::ParseError(format!(
            "boundary {:?} is missing its shape prefix (tri:, trap:, par:, rhom:, pent:, hex:)",
            text
        ))
    })?;
    let labels: Vec<BinaryString> = rest
        .split(',')
        .map(|part| if part == "-" { Ok(BinaryString::empty()) } else { part.parse() })
        .collect::<Result<_>>()?;
    let expect_count = |count: usize| -> Result<()> {
        if labels.len() == count {
            Ok(())
        } else {
            Err(Error::ParseError(format!(
                "boundary kind {:?} takes {} sides, got {}",
                kind,
                count,
                labels.len()
            )))
        }
    };
    match kind {
        "tri" => {
            expect_count(3)?;
            triangle_boundary(&labels[0], &labels[1], &labels[2])
        }
        "trap" => {
            expect_count(4)?;
            polygon_boundary(PolygonKind::Trapezoid, &labels)
        }
        "par" => {
            expect_count(4)?;
            polygon_boundary(PolygonKind::Parallelogram, &labels)
        }
        "rhom" => {
            expect_count(4)?;
            polygon_boundary(PolygonKind::Rhombus, &labels)
        }
        "pent" => {
            expect_count(5)?;
            polygon_boundary(PolygonKind::Pentagon, &labels)
        }
        "hex" => {
            expect_count(6)?;
            polygon_boundary(PolygonKind::Hexagon, &labels)
        }
        other => Err(Error::ParseError(format!(
            "unknown boundary kind {:?}",
            other
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn s(text: &str) -> BinaryString {
        text.parse().unwrap()
    }

    #[test]
    fn triangle_boundaries() {
        let b = triangle_boundary(&s("1010"), &s("0101"), &s("0011")).unwrap();
        assert_eq!((b.n, b.cut_bl, b.cut_top, b.cut_br), (4, 0, 0, 0));
        assert_eq!(b.nw, s("1010"));
        assert_eq!(b.ne, s("0101"));
        assert_eq!(b.south, s("0011"));
        assert_eq!(triangle_boundary(&s("0"), &s("0"), &s("0")).unwrap().n, 1);
        assert!(matches!(
            triangle_boundary(&s("01"), &s("0"), &s("01")),
            Err(Error::LengthMismatch(_))
        ));
    }

    #[test]
    fn polygon_boundaries_solve_cuts_from_lengths() {
        let b = polygon_boundary(
            PolygonKind::Trapezoid,
            &[s("01"), s("010"), s("01010"), s("010")],
        )
        .unwrap();
        assert_eq!((b.n, b.cut_bl, b.cut_top, b.cut_br), (5, 2, 0, 0));

        let b = polygon_boundary(PolygonKind::Parallelogram, &[s("11"), s("0"), s("11"), s("0")])
            .unwrap();
        assert_eq!((b.n, b.cut_bl, b.cut_top, b.cut_br), (3, 2, 0, 1));

        let b = polygon_boundary(
            PolygonKind::Hexagon,
            &[s("01"), s("01"), s("01"), s("01"), s("01"), s("01")],
        )
        .unwrap();
        assert_eq!((b.n, b.cut_bl, b.cut_top, b.cut_br), (6, 2, 2, 2));

        assert!(matches!(
            polygon_boundary(PolygonKind::Trapezoid, &[s("01"), s("010"), s("01"), s("010")]),
            Err(Error::InfeasibleShape(_))
        ));
        assert!(matches!(
            polygon_boundary(PolygonKind::Rhombus, &[s("01"), s("0"), s("01"), s("0")]),
            Err(Error::InfeasibleShape(_))
        ));
    }

    #[test]
    fn lattice_counts_for_small_regions() {
        let b = triangle_boundary(&s("0"), &s("0"), &s("0")).unwrap();
        let lat = build_lattice(&b);
        assert_eq!(lat.cells.len(), 1);
        assert_eq!(lat.boundary_labels.len(), 3);

        let b = triangle_boundary(&s("01"), &s("01"), &s("10")).unwrap();
        let lat = build_lattice(&b);
        assert_eq!(lat.cells.len(), 4);
        assert_eq!(lat.boundary_labels.len(), 6);

        let b = polygon_boundary(
            PolygonKind::Hexagon,
            &[s("0"), s("1"), s("0"), s("1"), s("0"), s("1")],
        )
        .unwrap();
        assert_eq!(build_lattice(&b).cells.len(), 6);
    }

    #[test]
    fn cell_count_formula_matches_enumeration() {
        for n in 0..=8usize {
            for p in 0..=n {
                for q in 0..=(n - p) {
                    for cut in 0..=n.min(n - p).min(n - q) {
                        if p + cut > n || q + cut > n {
                            continue;
                        }
                        let sides = [
                            s(&"0".repeat(p)),
                            s(&"0".repeat(n - p - q)),
                            s(&"0".repeat(q)),
                            s(&"0".repeat(n - q - cut)),
                            s(&"0".repeat(cut)),
                            s(&"0".repeat(n - cut - p)),
                        ];
                        let b = BoundarySpec::from_sides(sides).unwrap();
                        assert_eq!(build_lattice(&b).cells.len(), b.cell_count());
                    }
                }
            }
        }
    }

    #[test]
    fn interior_edges_have_two_cells_boundary_edges_one() {
        for (kind, labels) in [
            (PolygonKind::Hexagon, vec![s("0"), s("10"), s("01"), s("11"), s("0"), s("001")]),
            (PolygonKind::Trapezoid, vec![s("01"), s("010"), s("01010"), s("010")]),
            (PolygonKind::Parallelogram, vec![s("11"), s("0"), s("11"), s("0")]),
        ] {
            let b = polygon_boundary(kind, &labels).unwrap();
            let lat = build_lattice(&b);
            let mut uses: HashMap<EdgeId, usize> = HashMap::new();
            for &cell in &lat.cells {
                for edge in lat.cell_edges(cell) {
                    *uses.entry(edge).or_insert(0) += 1;
                }
            }
            for (&edge, &count) in &uses {
                assert!(count <= 2);
                assert_eq!(count == 1, lat.boundary_labels.contains_key(&edge));
            }
            let boundary_on_cells =
                uses.iter().filter(|&(_, &c)| c == 1).count();
            assert_eq!(boundary_on_cells, lat.boundary_labels.len());
        }
    }

    #[test]
    fn hexagon_content_checks() {
        let good = triangle_boundary(&s("01"), &s("10"), &s("01")).unwrap();
        assert!(content_feasible(&good).feasible);

        let bad = triangle_boundary(&s("00"), &s("11"), &s("01")).unwrap();
        let verdict = content_feasible(&bad);
        assert!(!verdict.feasible);
        assert!(verdict.violation.is_some());

        let trap =
            polygon_boundary(PolygonKind::Trapezoid, &[s("0"), s("0"), s("10"), s("1")]).unwrap();
        assert!(!content_feasible(&trap).feasible);
    }

    #[test]
    fn rotation_shifts_sides() {
        let b = triangle_boundary(&s("10"), &s("01"), &s("11")).unwrap();
        let r = rotate_boundary(&b, 2);
        assert_eq!(r.nw, s("01"));
        assert_eq!(r.ne, s("11"));
        assert_eq!(r.south, s("10"));
        assert_eq!(rotate_boundary(&b, 6), b);
        assert_eq!(rotate_boundary(&rotate_boundary(&b, 2), 4), b);

        let hexsides = [s("0"), s("1"), s("0"), s("1"), s("0"), s("1")];
        let hb = polygon_boundary(PolygonKind::Hexagon, &hexsides).unwrap();
        let hr = rotate_boundary(&hb, 1);
        assert_eq!(hr.sides().map(BinaryString::clone), [
            s("1"), s("0"), s("1"), s("0"), s("1"), s("0")
        ]);
    }

    #[test]
    fn duality_mirrors_and_dualizes() {
        let b = polygon_boundary(
            PolygonKind::Hexagon,
            &[s("0"), s("10"), s("01"), s("11"), s("0"), s("001")],
        )
        .unwrap();
        let d = dual_boundary(&b);
        assert_eq!(d.sw, s("0").dual());
        assert_eq!(d.nw, s("11").dual());
        assert_eq!(d.north, s("01").dual());
        assert_eq!(d.ne, s("10").dual());
        assert_eq!(d.se, s("0").dual());
        assert_eq!(d.south, s("001").dual());
        assert_eq!(dual_boundary(&d), b);

        let tri = triangle_boundary(&s("10"), &s("01"), &s("11")).unwrap();
        let dt = dual_boundary(&tri);
        assert_eq!(dt.nw, s("01").dual());
        assert_eq!(dt.ne, s("10").dual());
        assert_eq!(dt.south, s("11").dual());
    }

    #[test]
    fn degenerate_boundaries_share_edges() {
        // a = 0 parallelogram: NW and SE address the same edges.
        let consistent =
            BoundarySpec::from_sides([s(""), s("01"), s(""), s(""), s("10"), s("")]).unwrap();
        assert!(!build_lattice(&consistent).boundary_conflict);
        assert_eq!(build_lattice(&consistent).cells.len(), 0);

        let conflicting =
            BoundarySpec::from_sides([s(""), s("01"), s(""), s(""), s("01"), s("")]).unwrap();
        assert!(build_lattice(&conflicting).boundary_conflict);
    }

    #[test]
    fn boundary_json_round_trip() {
        let b = polygon_boundary(
            PolygonKind::Hexagon,
            &[s("01"), s("01"), s("01"), s("01"), s("01"), s("01")],
        )
        .unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert!(json.starts_with("{\"shape\":\"hexagon\",\"sides\":{\"SW\":\"01\""));
        let back: BoundarySpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn parse_boundary_compact_forms() {
        let b = parse_boundary("tri:1010,0101,0011").unwrap();
        assert_eq!(b.nw, s("1010"));
        let b = parse_boundary("par:101,0101,011,0011").unwrap();
        assert_eq!((b.n, b.cut_bl, b.cut_top, b.cut_br), (7, 3, 0, 4));
        let b = parse_boundary("hex:0,1,0,1,0,1").unwrap();
        assert_eq!(b.n, 3);
        let b = parse_boundary("pent:01,0,1,0,10").unwrap();
        assert_eq!((b.cut_bl, b.cut_top, b.cut_br), (0, 1, 1));
        let b = parse_boundary("trap:-,0,0,0").unwrap();
        assert_eq!((b.n, b.cut_bl), (1, 0));
        assert!(matches!(parse_boundary("tri:00,11"), Err(Error::ParseError(_))));
        assert!(matches!(parse_boundary("blob:0,1"), Err(Error::ParseError(_))));
        assert!(matches!(parse_boundary("tri:0a,11,01"), Err(Error::ParseError(_))));
    }

    #[test]
    fn parsed_triangle_with_mismatched_content_is_reported() {
        let b = parse_boundary("tri:00,11,01").unwrap();
        assert!(!content_feasible(&b).feasible);
    }

    #[test]
    fn scan_order_interleaves_up_and_down() {
        let b = triangle_boundary(&s("01"), &s("01"), &s("10")).unwrap();
        let lat = build_lattice(&b);
        assert_eq!(
            lat.cells,
            vec![
                CellId::Up { r: 1, i: 1 },
                CellId::Up { r: 2, i: 1 },
                CellId::Down { r: 2, i: 1 },
                CellId::Up { r: 2, i: 2 },
            ]
        );
    }
}
