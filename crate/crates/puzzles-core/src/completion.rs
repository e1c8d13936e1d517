//! Completion of polygonal regions to triangles.
//!
//! Cutting a corner off a triangle leaves a polygon; the corner itself,
//! once its two outer sides are fixed to a word and its sorting, admits
//! exactly one filling, and that filling uses only classical pieces. So
//! fillings of the polygon correspond one-to-one with fillings of the
//! completed triangle, which is how polygonal counts reduce to
//! Littlewood-Richardson numbers.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pieces::{PieceSet, PieceShape};
use crate::region::{triangle_boundary, BoundarySpec, CellId, Side};
use crate::tiler::{enumerate, enumerate_free, Filling};
use crate::words::BinaryString;

/// A cut corner of the ambient triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    BottomLeft,
    Top,
    BottomRight,
}

impl Corner {
    pub fn as_str(self) -> &'static str {
        match self {
            Corner::BottomLeft => "BL",
            Corner::Top => "TOP",
            Corner::BottomRight => "BR",
        }
    }
}

impl Serialize for Corner {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// The two oriented forms of the uniquely filled identity triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityOrientation {
    /// NW = lambda and NE = sort(lambda); the filling realizes
    /// S = reverse(lambda).
    NwNe,
    /// S = lambda and NW = sort(lambda); the filling realizes
    /// NE = reverse(lambda).
    SNw,
}

/// The bijection data between a polygon and its completed triangle. Each
/// attached corner filling is stored in corner-local coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionMap {
    pub polygon: BoundarySpec,
    pub triangle: BoundarySpec,
    pub attached_regions: Vec<(Corner, Filling)>,
}

impl Serialize for CompletionMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Attached<'a> {
            corner: Corner,
            filling: &'a Filling,
        }
        let mut st = serializer.serialize_struct("CompletionMap", 3)?;
        st.serialize_field("polygon", &self.polygon)?;
        st.serialize_field("triangle", &self.triangle)?;
        let attached: Vec<Attached> = self
            .attached_regions
            .iter()
            .map(|(c, f)| Attached { corner: *c, filling: f })
            .collect();
        st.serialize_field("attached_regions", &attached)?;
        st.end()
    }
}

/// The unique filling of the identity triangle for `lambda`, in either
/// orientation. Exists for every word and uses only classical pieces.
pub fn identity_filling(lambda: &BinaryString, orientation: IdentityOrientation) -> Filling {
    let b = match orientation {
        IdentityOrientation::NwNe => {
            triangle_boundary(lambda, &lambda.sort(), &lambda.reverse())
        }
        IdentityOrientation::SNw => {
            triangle_boundary(&lambda.sort(), &lambda.reverse(), lambda)
        }
    }
    .expect("identity boundaries are well formed");
    let mut fills = enumerate(&b, &PieceSet::classical());
    assert_eq!(fills.len(), 1, "identity triangle for {} fills uniquely", lambda);
    fills.pop().expect("one filling")
}

fn has_nabla(f: &Filling) -> bool {
    f.placements()
        .iter()
        .any(|(_, p)| p.is_k_piece() && p.shape == PieceShape::DownTriangle)
}

/// Maps a corner-local cell into the coordinates of the ambient triangle.
fn embed_cell(corner: Corner, b: &BoundarySpec, cell: CellId) -> CellId {
    let (n, p, s) = (b.n, b.cut_bl, b.cut_br);
    let (dr, di) = match corner {
        Corner::BottomLeft => (n - p, 0),
        Corner::Top => (0, 0),
        Corner::BottomRight => (n - s, n - s),
    };
    match cell {
        CellId::Up { r, i } => CellId::Up { r: r + dr, i: i + di },
        CellId::Down { r, i } => CellId::Down { r: r + dr, i: i + di },
    }
}

/// Completes a polygonal boundary to its triangle. The triangle's sides
/// are sort(SW)·NW·N, sort(N)·NE·sort(SE), SE·S·SW, and the three cut
/// corners carry identity fillings.
pub fn complete_to_triangle(b: &BoundarySpec) -> Result<CompletionMap> {
    let alpha = b.side(Side::SW);
    let beta = b.side(Side::NW);
    let gamma = b.side(Side::N);
    let delta = b.side(Side::NE);
    let eps = b.side(Side::SE);
    let zeta = b.side(Side::S);

    let nw = alpha.sort().concat(beta).concat(gamma);
    let ne = gamma.sort().concat(delta).concat(&eps.sort());
    let south = eps.concat(zeta).concat(alpha);
    let triangle = triangle_boundary(&nw, &ne, &south)?;

    let mut attached_regions = Vec::new();
    if !alpha.is_empty() {
        attached_regions.push((
            Corner::BottomLeft,
            identity_filling(alpha, IdentityOrientation::SNw),
        ));
    }
    if !gamma.is_empty() {
        attached_regions.push((
            Corner::Top,
            identity_filling(gamma, IdentityOrientation::NwNe),
        ));
    }
    if !eps.is_empty() {
        attached_regions.push((
            Corner::BottomRight,
            identity_filling(&eps.reverse(), IdentityOrientation::NwNe),
        ));
    }
    for (corner, f) in &attached_regions {
        if !f.uses_only_classical() {
            return Err(Error::InfeasibleCorner(format!(
                "corner {} is not classically filled",
                corner.as_str()
            )));
        }
    }
    Ok(CompletionMap {
        polygon: b.clone(),
        triangle,
        attached_regions,
    })
}

/// The unique classical filling of the pentagonal boundary with
/// NW = 0^{c0} 1^{c1} and NE = 0^{a0} 1^{a1}, together with the realized
/// SE, S, SW labels. Returns nothing when c0 > a0 and a1 > c1, the case
/// with no filling at all.
pub fn unique_pentagon_fill(
    a0: usize,
    a1: usize,
    c0: usize,
    c1: usize,
) -> Option<(Filling, BinaryString, BinaryString, BinaryString)> {
    let sat = |x: usize, y: usize| x.saturating_sub(y);
    let n = a0.max(c0) + a1.max(c1);
    let p = sat(a1, c1) + sat(a0, c0);
    let s = sat(c1, a1) + sat(c0, a0);
    let word = |ones: usize, zeros: usize| {
        let mut bits = vec![1u8; ones];
        bits.extend(std::iter::repeat(0u8).take(zeros));
        BinaryString::new(bits)
    };
    let nw = {
        let mut bits = vec![0u8; c0];
        bits.extend(std::iter::repeat(1u8).take(c1));
        BinaryString::new(bits)
    };
    let ne = {
        let mut bits = vec![0u8; a0];
        bits.extend(std::iter::repeat(1u8).take(a1));
        BinaryString::new(bits)
    };
    let b = BoundarySpec::from_sides([
        word(0, p),
        nw,
        BinaryString::empty(),
        ne,
        word(0, s),
        word(0, n - s - p),
    ])
    .expect("pentagon side lengths close up");
    let mut found = enumerate_free(
        &b,
        &PieceSet::classical(),
        &[Side::SW, Side::SE, Side::S],
    );
    if found.is_empty() {
        debug_assert!(c0 > a0 && a1 > c1);
        return None;
    }
    assert_eq!(found.len(), 1, "pentagonal boundary fills uniquely");
    let (filling, realized) = found.pop().expect("one filling");
    let se = realized[&Side::SE].clone();
    let s_side = realized[&Side::S].clone();
    let sw = realized[&Side::SW].clone();
    debug_assert_eq!(se, word(sat(c1, a1), sat(c0, a0)));
    debug_assert_eq!(s_side, word(a1.min(c1), a0.min(c0)));
    debug_assert_eq!(sw, word(sat(a1, c1), sat(a0, c0)));
    Some((filling, se, s_side, sw))
}

fn expected_corner_placements(cm: &CompletionMap) -> Vec<(CellId, crate::pieces::Piece)> {
    let mut expected = Vec::new();
    for (corner, f) in &cm.attached_regions {
        for &(cell, piece) in f.placements() {
            expected.push((embed_cell(*corner, &cm.polygon, cell), piece));
        }
    }
    expected.sort_by_key(|&(c, _)| c);
    expected
}

/// Cuts the attached corner regions off a triangle filling, leaving the
/// polygon filling. Fails with CornerMismatch when the corners do not
/// carry the identity fillings, which the completion propositions rule
/// out for genuine fillings.
pub fn truncate(f: &Filling, cm: &CompletionMap) -> Result<Filling> {
    if has_nabla(f) {
        return Err(Error::UnsupportedPieceSet(
            "completion does not apply to fillings with the inverted K triangle".into(),
        ));
    }
    if f.boundary() != &cm.triangle {
        return Err(Error::CornerMismatch(
            "filling does not tile the completion triangle".into(),
        ));
    }
    let expected = expected_corner_placements(cm);
    let mut kept = Vec::new();
    let mut consumed = 0usize;
    for &(cell, piece) in f.placements() {
        match expected.binary_search_by_key(&cell, |&(c, _)| c) {
            Ok(k) => {
                if expected[k].1 != piece {
                    return Err(Error::CornerMismatch(format!(
                        "corner cell {} carries a non-identity piece",
                        cell
                    )));
                }
                consumed += 1;
            }
            Err(_) => kept.push((cell, piece)),
        }
    }
    if consumed != expected.len() {
        return Err(Error::CornerMismatch(
            "a corner cell is covered from outside its corner".into(),
        ));
    }
    Ok(Filling::from_parts(cm.polygon.clone(), kept))
}

/// Glues the identity corner fillings onto a polygon filling, producing
/// the completed triangle filling. Inverse of [`truncate`].
pub fn glue(f: &Filling, cm: &CompletionMap) -> Result<Filling> {
    if has_nabla(f) {
        return Err(Error::UnsupportedPieceSet(
            "completion does not apply to fillings with the inverted K triangle".into(),
        ));
    }
    if f.boundary() != &cm.polygon {
        return Err(Error::CornerMismatch(
            "filling does not tile the polygon of this completion".into(),
        ));
    }
    let mut placements = f.placements().to_vec();
    placements.extend(expected_corner_placements(cm));
    Ok(Filling::from_parts(cm.triangle.clone(), placements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{parse_boundary, rotate_boundary};
    use crate::tiler::{count, is_valid_filling, rotate_filling};
    use crate::words::strings_of_length;

    fn s(text: &str) -> BinaryString {
        text.parse().unwrap()
    }

    #[test]
    fn trapezoid_completion_sides() {
        let b = parse_boundary("trap:01,101,01101,110").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        assert_eq!(cm.triangle.nw, s("01").concat(&s("101")));
        assert_eq!(cm.triangle.ne, s("01101"));
        assert_eq!(cm.triangle.south, s("110").concat(&s("01")));
        let corners: Vec<Corner> = cm.attached_regions.iter().map(|(c, _)| *c).collect();
        assert_eq!(corners, [Corner::BottomLeft]);
    }

    #[test]
    fn parallelogram_completion_sides() {
        let b = parse_boundary("par:101,0101,011,0011").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        assert_eq!(cm.triangle.nw, s("011").concat(&s("0101")));
        assert_eq!(cm.triangle.ne, s("011").concat(&s("0011").sort()));
        assert_eq!(cm.triangle.south, s("0011").concat(&s("101")));
        let corners: Vec<Corner> = cm.attached_regions.iter().map(|(c, _)| *c).collect();
        assert_eq!(corners, [Corner::BottomLeft, Corner::BottomRight]);
    }

    #[test]
    fn hexagon_completion_sides_and_corners() {
        let b = parse_boundary("hex:01,01,01,01,01,01").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        assert_eq!(cm.triangle.nw, s("010101"));
        assert_eq!(cm.triangle.ne, s("010101"));
        assert_eq!(cm.triangle.south, s("010101"));
        assert_eq!(cm.attached_regions.len(), 3);
    }

    #[test]
    fn triangle_completes_to_itself() {
        let b = parse_boundary("tri:1010,0101,0011").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        assert_eq!(cm.triangle, b);
        assert!(cm.attached_regions.is_empty());
    }

    #[test]
    fn identity_fillings_pinned() {
        let f = identity_filling(&s("01"), IdentityOrientation::NwNe);
        assert_eq!(f.boundary().south, s("10"));
        assert_eq!(f.placements().len(), 4);
        assert!(f.uses_only_classical());

        let f = identity_filling(&s("0101"), IdentityOrientation::NwNe);
        assert_eq!(f.boundary().south, s("1010"));
        assert!(is_valid_filling(&f));

        let f = identity_filling(&BinaryString::empty(), IdentityOrientation::SNw);
        assert!(f.placements().is_empty());
    }

    #[test]
    fn identity_boundaries_force_the_filling_with_one_side_free() {
        let full = PieceSet {
            equivariant: true,
            k_delta: true,
            ..PieceSet::default()
        };
        for n in 0..=4 {
            for lam in strings_of_length(n) {
                // NW and NE fixed, S free.
                let b = triangle_boundary(&lam, &lam.sort(), &lam.reverse()).unwrap();
                let found = enumerate_free(&b, &full, &[Side::S]);
                assert_eq!(found.len(), 1, "NW/NE at {}", lam);
                assert_eq!(found[0].1[&Side::S], lam.reverse());

                // S and NW fixed, NE free.
                let b = triangle_boundary(&lam.sort(), &lam.reverse(), &lam).unwrap();
                let found = enumerate_free(&b, &full, &[Side::NE]);
                assert_eq!(found.len(), 1, "S/NW at {}", lam);
                assert_eq!(found[0].1[&Side::NE], lam.reverse());

                // NE and S fixed, NW free: the bottom-right corner case.
                let b = triangle_boundary(&lam.reverse(), &lam.sort(), &lam).unwrap();
                let found = enumerate_free(&b, &full, &[Side::NW]);
                assert_eq!(found.len(), 1, "NE/S at {}", lam);
                assert_eq!(found[0].1[&Side::NW], lam.reverse());
            }
        }
    }

    #[test]
    fn pentagon_fill_pinned_cases() {
        let (f, se, s_side, sw) = unique_pentagon_fill(1, 0, 0, 1).unwrap();
        assert!(is_valid_filling(&f));
        assert_eq!((se, s_side, sw), (s("1"), BinaryString::empty(), s("0")));

        assert!(unique_pentagon_fill(0, 1, 1, 0).is_none());

        let (f, se, s_side, sw) = unique_pentagon_fill(0, 0, 0, 0).unwrap();
        assert!(f.placements().is_empty());
        assert!(se.is_empty() && s_side.is_empty() && sw.is_empty());
    }

    #[test]
    fn pentagon_fill_small_sweep() {
        for a0 in 0..=2 {
            for a1 in 0..=2 {
                for c0 in 0..=2 {
                    for c1 in 0..=2 {
                        let good = a0 >= c0 || c1 >= a1;
                        match unique_pentagon_fill(a0, a1, c0, c1) {
                            Some((f, _, _, _)) => {
                                assert!(good, "unexpected filling at {:?}", (a0, a1, c0, c1));
                                assert!(is_valid_filling(&f));
                                assert!(f.uses_only_classical());
                            }
                            None => assert!(!good, "missing filling at {:?}", (a0, a1, c0, c1)),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn completion_preserves_counts() {
        let sets = [
            PieceSet::classical(),
            PieceSet::with_equivariant(),
            PieceSet::with_k_delta(),
        ];
        for text in [
            "trap:01,10,1001,01",
            "trap:1,01,011,10",
            "par:101,0101,011,0011",
            "par:01,01,01,10",
            "hex:01,01,01,01,01,01",
            "hex:1,01,0,11,0,10",
            "pent:01,0,1,0,10",
        ] {
            let b = parse_boundary(text).unwrap();
            let cm = complete_to_triangle(&b).unwrap();
            for set in &sets {
                assert_eq!(
                    count(&b, set),
                    count(&cm.triangle, set),
                    "count mismatch for {}",
                    text
                );
            }
        }
    }

    #[test]
    fn glue_then_truncate_round_trips_trapezoids() {
        let sets = [
            PieceSet::classical(),
            PieceSet::with_equivariant(),
            PieceSet::with_k_delta(),
        ];
        for n in 2..=4usize {
            for p in 1..n {
                for beta in strings_of_length(p) {
                    for gamma in strings_of_length(n - p) {
                        for nu in strings_of_length(n) {
                            for delta in strings_of_length(n - p) {
                                let b = crate::region::polygon_boundary(
                                    crate::region::PolygonKind::Trapezoid,
                                    &[beta.clone(), gamma.clone(), nu.clone(), delta.clone()],
                                )
                                .unwrap();
                                let cm = complete_to_triangle(&b).unwrap();
                                for set in &sets {
                                    let polys = crate::tiler::enumerate(&b, set);
                                    let tris = crate::tiler::enumerate(&cm.triangle, set);
                                    assert_eq!(polys.len(), tris.len());
                                    for f in &polys {
                                        let g = glue(f, &cm).unwrap();
                                        assert!(is_valid_filling(&g));
                                        assert_eq!(&truncate(&g, &cm).unwrap(), f);
                                    }
                                    for g in &tris {
                                        let f = truncate(g, &cm).unwrap();
                                        assert!(is_valid_filling(&f));
                                        assert_eq!(&glue(&f, &cm).unwrap(), g);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nabla_fillings_are_rejected() {
        let b = parse_boundary("tri:01,01,01").unwrap();
        let nabla_set = PieceSet {
            k_nabla: true,
            ..PieceSet::default()
        };
        let fills = crate::tiler::enumerate(&b, &nabla_set);
        assert_eq!(fills.len(), 1);
        assert_eq!(fills[0].k_piece_count(), 1);
        let cm = complete_to_triangle(&b).unwrap();
        assert!(matches!(
            truncate(&fills[0], &cm),
            Err(Error::UnsupportedPieceSet(_))
        ));
        assert!(matches!(
            glue(&fills[0], &cm),
            Err(Error::UnsupportedPieceSet(_))
        ));
    }

    #[test]
    fn truncate_rejects_foreign_fillings() {
        let b = parse_boundary("trap:01,10,1001,01").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        let other = parse_boundary("tri:01,01,10").unwrap();
        let f = &crate::tiler::enumerate(&other, &PieceSet::classical())[0];
        assert!(matches!(truncate(f, &cm), Err(Error::CornerMismatch(_))));
    }

    #[test]
    fn completed_fillings_rotate_half_turn() {
        // A completed filling carries over under 180-degree rotation; the
        // corner identities become the corners of the rotated completion.
        let b = parse_boundary("hex:01,01,01,01,01,01").unwrap();
        let cm = complete_to_triangle(&b).unwrap();
        let fills = crate::tiler::enumerate(&cm.triangle, &PieceSet::classical());
        let rotated_b = rotate_boundary(&cm.triangle, 3);
        for f in &fills {
            let g = rotate_filling(f, 3).unwrap();
            assert!(is_valid_filling(&g));
            assert_eq!(g.boundary(), &rotated_b);
        }
    }
}
