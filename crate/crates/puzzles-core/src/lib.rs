//! Exact combinatorics of Knutson-Tao puzzles on convex polygonal regions.
//!
//! The crate enumerates fillings of triangular-lattice regions by the
//! classical puzzle pieces, the equivariant rhombus, and the K-theory
//! triangles; computes the associated weight sums (counts, signed counts,
//! polynomials in y_1..y_n); and cross-checks the results against an
//! independent Littlewood-Richardson oracle based on the ballot rule.

pub mod completion;
pub mod error;
pub mod lrcalc;
pub mod pieces;
pub mod poly;
pub mod region;
pub mod render;
pub mod theorems;
pub mod tiler;
pub mod words;

pub use completion::{
    complete_to_triangle, glue, identity_filling, truncate, unique_pentagon_fill, CompletionMap,
    Corner, IdentityOrientation,
};
pub use error::{Error, Result};
pub use lrcalc::{lr_coeff, lr_coeff_padded, lr_via_puzzles};
pub use pieces::{catalog, dual_piece, rotate_piece, EdgeLabel, Piece, PieceLabels, PieceSet, PieceShape, WeightTag};
pub use poly::{Monomial, Poly};
pub use render::{render_svg, Palette, RenderStyle, RenderTarget};
pub use region::{
    build_lattice, content_feasible, dual_boundary, parse_boundary, polygon_boundary,
    rotate_boundary, triangle_boundary, BoundarySpec, CellId, EdgeId, Feasibility, Lattice,
    PolygonKind, Side,
};
pub use theorems::{
    sweep, verify_commutativity, verify_equivariant_parallelogram, verify_formula,
    verify_instance, verify_unique_pentagon, TheoremId, VerificationReport,
};
pub use tiler::{
    count, dual_filling, enumerate, equivariant_indices, is_valid_filling, rotate_filling,
    weight_of_fillings_with_anchors, weight_sum, EqIndexPair, Filling, Weight,
};
pub use words::{strings_of_content, strings_of_length, BinaryString, Content, Partition};
