//! Piece catalogs.
//!
//! The classical set consists of ten labeled unit triangles: five
//! up-triangles and their 180-degree rotations. Optional extras are the
//! equivariant vertical rhombus (weight a variable difference, never
//! rotated) and the two K-theory triangles (weight -1 each). Edge slots use
//! lattice directions so up and down triangles share one vocabulary:
//! "rising" is the "/" edge, "falling" the "\" edge, "horizontal" the flat
//! edge (bottom of an up-triangle, top of a down-triangle).

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An edge label. TEN is the composite "10" label; it never appears on an
/// outer-boundary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    Zero,
    One,
    Ten,
}

impl EdgeLabel {
    fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Zero => "0",
            EdgeLabel::One => "1",
            EdgeLabel::Ten => "10",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(EdgeLabel::Zero),
            "1" => Ok(EdgeLabel::One),
            "10" => Ok(EdgeLabel::Ten),
            other => Err(Error::ParseError(format!("invalid edge label {:?}", other))),
        }
    }

    /// 0 and 1 exchanged, TEN fixed.
    pub fn flip(self) -> EdgeLabel {
        match self {
            EdgeLabel::Zero => EdgeLabel::One,
            EdgeLabel::One => EdgeLabel::Zero,
            EdgeLabel::Ten => EdgeLabel::Ten,
        }
    }

    pub fn from_bit(bit: u8) -> EdgeLabel {
        if bit == 0 {
            EdgeLabel::Zero
        } else {
            EdgeLabel::One
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for EdgeLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        EdgeLabel::parse(&s).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceShape {
    UpTriangle,
    DownTriangle,
    /// Covers one up-triangle cell and the down-triangle cell directly
    /// beneath it, across their shared horizontal edge.
    VerticalRhombus,
}

impl PieceShape {
    fn as_str(self) -> &'static str {
        match self {
            PieceShape::UpTriangle => "UP_TRIANGLE",
            PieceShape::DownTriangle => "DOWN_TRIANGLE",
            PieceShape::VerticalRhombus => "VERTICAL_RHOMBUS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightTag {
    Unit,
    SignMinusOne,
    Equivariant,
}

impl WeightTag {
    fn as_str(self) -> &'static str {
        match self {
            WeightTag::Unit => "UNIT",
            WeightTag::SignMinusOne => "SIGN_MINUS_ONE",
            WeightTag::Equivariant => "EQUIVARIANT",
        }
    }
}

/// Edge labels keyed by slot, shaped to match the piece geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceLabels {
    Triangle {
        rising: EdgeLabel,
        falling: EdgeLabel,
        horizontal: EdgeLabel,
    },
    Rhombus {
        nw: EdgeLabel,
        ne: EdgeLabel,
        se: EdgeLabel,
        sw: EdgeLabel,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub shape: PieceShape,
    pub labels: PieceLabels,
    pub weight_tag: WeightTag,
}

impl Piece {
    fn triangle(up: bool, rising: EdgeLabel, falling: EdgeLabel, horizontal: EdgeLabel) -> Piece {
        let weight_tag = if rising == EdgeLabel::Ten
            && falling == EdgeLabel::Ten
            && horizontal == EdgeLabel::Ten
        {
            WeightTag::SignMinusOne
        } else {
            WeightTag::Unit
        };
        Piece {
            shape: if up {
                PieceShape::UpTriangle
            } else {
                PieceShape::DownTriangle
            },
            labels: PieceLabels::Triangle {
                rising,
                falling,
                horizontal,
            },
            weight_tag,
        }
    }

    fn rhombus() -> Piece {
        Piece {
            shape: PieceShape::VerticalRhombus,
            labels: PieceLabels::Rhombus {
                nw: EdgeLabel::Zero,
                ne: EdgeLabel::One,
                se: EdgeLabel::Zero,
                sw: EdgeLabel::One,
            },
            weight_tag: WeightTag::Equivariant,
        }
    }

    /// (rising, falling, horizontal) of a triangle piece.
    pub fn triangle_labels(&self) -> Option<(EdgeLabel, EdgeLabel, EdgeLabel)> {
        match self.labels {
            PieceLabels::Triangle {
                rising,
                falling,
                horizontal,
            } => Some((rising, falling, horizontal)),
            PieceLabels::Rhombus { .. } => None,
        }
    }

    pub fn is_rhombus(&self) -> bool {
        self.shape == PieceShape::VerticalRhombus
    }

    pub fn is_k_piece(&self) -> bool {
        self.weight_tag == WeightTag::SignMinusOne
    }
}

/// Which optional pieces accompany the ten classical triangles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PieceSet {
    pub equivariant: bool,
    pub k_delta: bool,
    pub k_nabla: bool,
}

impl PieceSet {
    /// The ten classical triangles only.
    pub fn classical() -> PieceSet {
        PieceSet::default()
    }

    /// Classical triangles plus the equivariant rhombus.
    pub fn with_equivariant() -> PieceSet {
        PieceSet {
            equivariant: true,
            ..PieceSet::default()
        }
    }

    /// Classical triangles plus the K-theory up-triangle.
    pub fn with_k_delta() -> PieceSet {
        PieceSet {
            k_delta: true,
            ..PieceSet::default()
        }
    }
}

/// The five (rising, falling, horizontal) label triples of the classical
/// up-triangles; the down-triangles reuse the same triples.
const CLASSICAL_TRIPLES: [(EdgeLabel, EdgeLabel, EdgeLabel); 5] = [
    (EdgeLabel::Zero, EdgeLabel::Zero, EdgeLabel::Zero),
    (EdgeLabel::One, EdgeLabel::One, EdgeLabel::One),
    (EdgeLabel::One, EdgeLabel::Zero, EdgeLabel::Ten),
    (EdgeLabel::Ten, EdgeLabel::One, EdgeLabel::Zero),
    (EdgeLabel::Zero, EdgeLabel::Ten, EdgeLabel::One),
];

/// The placeable pieces of a set, in a fixed duplicate-free order: the five
/// classical up-triangles, the five down-triangles, then the optional
/// rhombus, K up-triangle, and K down-triangle.
pub fn catalog(set: &PieceSet) -> Vec<Piece> {
    let mut out = Vec::with_capacity(13);
    for &(r, f, h) in &CLASSICAL_TRIPLES {
        out.push(Piece::triangle(true, r, f, h));
    }
    for &(r, f, h) in &CLASSICAL_TRIPLES {
        out.push(Piece::triangle(false, r, f, h));
    }
    if set.equivariant {
        out.push(Piece::rhombus());
    }
    if set.k_delta {
        out.push(Piece::triangle(
            true,
            EdgeLabel::Ten,
            EdgeLabel::Ten,
            EdgeLabel::Ten,
        ));
    }
    if set.k_nabla {
        out.push(Piece::triangle(
            false,
            EdgeLabel::Ten,
            EdgeLabel::Ten,
            EdgeLabel::Ten,
        ));
    }
    out
}

/// Rotation by `sixths` times 60 degrees clockwise. One step turns an
/// up-triangle into a down-triangle whose (rising, falling, horizontal)
/// labels are the old (falling, horizontal, rising). The rhombus admits
/// only full-turn rotations.
pub fn rotate_piece(p: &Piece, sixths: i64) -> Result<Piece> {
    let k = sixths.rem_euclid(6);
    if p.is_rhombus() {
        if k == 0 {
            return Ok(*p);
        }
        return Err(Error::Unrotatable(format!(
            "the equivariant rhombus cannot be rotated by {} sixths",
            sixths
        )));
    }
    let mut shape = p.shape;
    let (mut r, mut f, mut h) = p.triangle_labels().expect("triangle");
    for _ in 0..k {
        let (nr, nf, nh) = (f, h, r);
        r = nr;
        f = nf;
        h = nh;
        shape = match shape {
            PieceShape::UpTriangle => PieceShape::DownTriangle,
            PieceShape::DownTriangle => PieceShape::UpTriangle,
            PieceShape::VerticalRhombus => unreachable!(),
        };
    }
    Ok(Piece {
        shape,
        labels: PieceLabels::Triangle {
            rising: r,
            falling: f,
            horizontal: h,
        },
        weight_tag: p.weight_tag,
    })
}

/// Mirror across the vertical axis with 0 and 1 exchanged (TEN fixed). The
/// mirror swaps the rising and falling slots of a triangle and the NW/NE and
/// SW/SE slots of the rhombus; every listed catalog maps to itself.
pub fn dual_piece(p: &Piece) -> Piece {
    let labels = match p.labels {
        PieceLabels::Triangle {
            rising,
            falling,
            horizontal,
        } => PieceLabels::Triangle {
            rising: falling.flip(),
            falling: rising.flip(),
            horizontal: horizontal.flip(),
        },
        PieceLabels::Rhombus { nw, ne, se, sw } => PieceLabels::Rhombus {
            nw: ne.flip(),
            ne: nw.flip(),
            se: sw.flip(),
            sw: se.flip(),
        },
    };
    Piece {
        shape: p.shape,
        labels,
        weight_tag: p.weight_tag,
    }
}

#[derive(Serialize, Deserialize)]
struct PieceJson {
    shape: String,
    labels: BTreeMap<String, String>,
    weight_tag: String,
}

impl Serialize for Piece {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut labels = BTreeMap::new();
        match self.labels {
            PieceLabels::Triangle {
                rising,
                falling,
                horizontal,
            } => {
                labels.insert("rising".to_string(), rising.as_str().to_string());
                labels.insert("falling".to_string(), falling.as_str().to_string());
                labels.insert("horizontal".to_string(), horizontal.as_str().to_string());
            }
            PieceLabels::Rhombus { nw, ne, se, sw } => {
                labels.insert("nw".to_string(), nw.as_str().to_string());
                labels.insert("ne".to_string(), ne.as_str().to_string());
                labels.insert("se".to_string(), se.as_str().to_string());
                labels.insert("sw".to_string(), sw.as_str().to_string());
            }
        }
        PieceJson {
            shape: self.shape.as_str().to_string(),
            labels,
            weight_tag: self.weight_tag.as_str().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Piece {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PieceJson::deserialize(deserializer)?;
        let get = |slot: &str| -> std::result::Result<EdgeLabel, D::Error> {
            let text = raw
                .labels
                .get(slot)
                .ok_or_else(|| D::Error::custom(format!("missing edge slot {:?}", slot)))?;
            EdgeLabel::parse(text).map_err(D::Error::custom)
        };
        let shape = match raw.shape.as_str() {
            "UP_TRIANGLE" => PieceShape::UpTriangle,
            "DOWN_TRIANGLE" => PieceShape::DownTriangle,
            "VERTICAL_RHOMBUS" => PieceShape::VerticalRhombus,
            other => return Err(D::Error::custom(format!("invalid shape {:?}", other))),
        };
        let labels = match shape {
            PieceShape::VerticalRhombus => PieceLabels::Rhombus {
                nw: get("nw")?,
                ne: get("ne")?,
                se: get("se")?,
                sw: get("sw")?,
            },
            _ => PieceLabels::Triangle {
                rising: get("rising")?,
                falling: get("falling")?,
                horizontal: get("horizontal")?,
            },
        };
        let weight_tag = match raw.weight_tag.as_str() {
            "UNIT" => WeightTag::Unit,
            "SIGN_MINUS_ONE" => WeightTag::SignMinusOne,
            "EQUIVARIANT" => WeightTag::Equivariant,
            other => return Err(D::Error::custom(format!("invalid weight tag {:?}", other))),
        };
        Ok(Piece {
            shape,
            labels,
            weight_tag,
        })
    }
}
