//! Mechanical verification of the commutativity theorems and closed
//! formulas for puzzle counts on trapezoids, parallelograms, rhombi,
//! pentagons, and hexagons.
//!
//! Each theorem is identified by a [`TheoremId`]. A verification computes
//! every quantity the theorem asserts equal, by honest enumeration on one
//! side and (for the formula theorems) by Littlewood-Richardson arithmetic
//! on the other, and records them in a [`VerificationReport`]. The two code
//! paths share nothing beyond the binary-string type, so a failing report
//! localizes either a transcription error in the theorem statement or a bug
//! in exactly one of the tiler and the tableau oracle.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lrcalc::{lr0, lr0_padded};
use crate::pieces::PieceSet;
use crate::poly::Poly;
use crate::region::{polygon_boundary, triangle_boundary, BoundarySpec, PolygonKind, Side};
use crate::tiler::{count, enumerate_free, weight_sum, Weight};
use crate::words::{strings_of_content, strings_of_length, BinaryString};

/// Identifiers for every theorem the engine can check.
///
/// Commutativity identifiers assert that a family of puzzle counts agree;
/// `*_FORMULA` identifiers assert that a puzzle count equals a closed
/// Littlewood-Richardson expression; the `K_*` identifiers assert the
/// commutativity statements for signed sums over K-theoretic fillings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Split,
    Trapezoid,
    Parallelogram,
    Rhombus,
    Hex180,
    HexOpposite,
    HexTwoway,
    Pentagon,
    HexThreeway,
    HexAllway,
    KSplit,
    KTrapezoid,
    KParallelogram,
    SplitFormula,
    TrapezoidFormula,
    TrapezoidD,
    ParaFormula,
    HexFormula,
    HexThreewayFormula,
    HexAllwayFormula,
    HexAllwayCount,
    EqualityLr,
    EqvtParallelogram,
    UniquePentagon,
}

impl TheoremId {
    pub const ALL: [TheoremId; 24] = [
        TheoremId::Split,
        TheoremId::Trapezoid,
        TheoremId::Parallelogram,
        TheoremId::Rhombus,
        TheoremId::Hex180,
        TheoremId::HexOpposite,
        TheoremId::HexTwoway,
        TheoremId::Pentagon,
        TheoremId::HexThreeway,
        TheoremId::HexAllway,
        TheoremId::KSplit,
        TheoremId::KTrapezoid,
        TheoremId::KParallelogram,
        TheoremId::SplitFormula,
        TheoremId::TrapezoidFormula,
        TheoremId::TrapezoidD,
        TheoremId::ParaFormula,
        TheoremId::HexFormula,
        TheoremId::HexThreewayFormula,
        TheoremId::HexAllwayFormula,
        TheoremId::HexAllwayCount,
        TheoremId::EqualityLr,
        TheoremId::EqvtParallelogram,
        TheoremId::UniquePentagon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Split => "SPLIT",
            TheoremId::Trapezoid => "TRAPEZOID",
            TheoremId::Parallelogram => "PARALLELOGRAM",
            TheoremId::Rhombus => "RHOMBUS",
            TheoremId::Hex180 => "HEX_180",
            TheoremId::HexOpposite => "HEX_OPPOSITE",
            TheoremId::HexTwoway => "HEX_TWOWAY",
            TheoremId::Pentagon => "PENTAGON",
            TheoremId::HexThreeway => "HEX_THREEWAY",
            TheoremId::HexAllway => "HEX_ALLWAY",
            TheoremId::KSplit => "K_SPLIT",
            TheoremId::KTrapezoid => "K_TRAPEZOID",
            TheoremId::KParallelogram => "K_PARALLELOGRAM",
            TheoremId::SplitFormula => "SPLIT_FORMULA",
            TheoremId::TrapezoidFormula => "TRAPEZOID_FORMULA",
            TheoremId::TrapezoidD => "TRAPEZOID_D",
            TheoremId::ParaFormula => "PARA_FORMULA",
            TheoremId::HexFormula => "HEX_FORMULA",
            TheoremId::HexThreewayFormula => "HEX_THREEWAY_FORMULA",
            TheoremId::HexAllwayFormula => "HEX_ALLWAY_FORMULA",
            TheoremId::HexAllwayCount => "HEX_ALLWAY_COUNT",
            TheoremId::EqualityLr => "EQUALITY_LR",
            TheoremId::EqvtParallelogram => "EQVT_PARALLELOGRAM",
            TheoremId::UniquePentagon => "UNIQUE_PENTAGON",
        }
    }

    /// Names of the side labels an instance of this theorem takes, in the
    /// order `verify_instance` expects them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            TheoremId::Split | TheoremId::KSplit | TheoremId::SplitFormula => {
                &["alpha", "beta", "gamma", "delta", "nu"]
            }
            TheoremId::Trapezoid | TheoremId::KTrapezoid | TheoremId::TrapezoidFormula => {
                &["beta", "gamma", "nu", "delta"]
            }
            TheoremId::TrapezoidD | TheoremId::EqualityLr => &["lambda", "mu", "nu"],
            TheoremId::Parallelogram
            | TheoremId::KParallelogram
            | TheoremId::ParaFormula
            | TheoremId::Rhombus
            | TheoremId::EqvtParallelogram => &["alpha", "gamma", "beta", "delta"],
            TheoremId::Pentagon => &["beta", "gamma", "delta", "epsilon", "zeta"],
            TheoremId::Hex180
            | TheoremId::HexOpposite
            | TheoremId::HexTwoway
            | TheoremId::HexThreeway
            | TheoremId::HexAllway
            | TheoremId::HexFormula
            | TheoremId::HexThreewayFormula
            | TheoremId::HexAllwayFormula
            | TheoremId::HexAllwayCount => &["alpha", "beta", "gamma", "delta", "epsilon", "zeta"],
            TheoremId::UniquePentagon => &[],
        }
    }

    /// Default bound used by [`sweep`] when none is given.
    ///
    /// The bound's meaning depends on the boundary family: completed
    /// triangle size for triangles, trapezoids, parallelograms, rhombi and
    /// pentagons; boundary perimeter for general hexagons; common side
    /// length for the equilateral all-way hexagons; per-corner content
    /// bound for the unique-pentagon lemma and the equivariant sweep.
    pub fn default_bound(self) -> usize {
        match self {
            TheoremId::Split
            | TheoremId::Trapezoid
            | TheoremId::Parallelogram
            | TheoremId::Pentagon
            | TheoremId::SplitFormula
            | TheoremId::TrapezoidFormula
            | TheoremId::TrapezoidD
            | TheoremId::ParaFormula => 6,
            TheoremId::Hex180
            | TheoremId::HexOpposite
            | TheoremId::HexTwoway
            | TheoremId::HexThreeway
            | TheoremId::HexFormula
            | TheoremId::HexThreewayFormula => 14,
            TheoremId::KSplit | TheoremId::KTrapezoid | TheoremId::KParallelogram => 5,
            TheoremId::Rhombus | TheoremId::EqualityLr | TheoremId::EqvtParallelogram => 3,
            TheoremId::HexAllway | TheoremId::HexAllwayFormula => 2,
            TheoremId::HexAllwayCount => 4,
            TheoremId::UniquePentagon => 3,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::ParseError(format!("unknown theorem id: {s}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Outcome of checking one theorem instance.
///
/// `values` lists every quantity the theorem relates, labelled so that each
/// one can be recomputed in isolation from the command line; `pass` records
/// whether the asserted equalities hold exactly.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub instance: String,
    pub values: Vec<(String, String)>,
    pub pass: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// One-line rendering: status, theorem, instance, and the values.
    pub fn summary(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let shown: Vec<String> = self
            .values
            .iter()
            .map(|(label, value)| format!("{label} = {value}"))
            .collect();
        format!(
            "{status} {} [{}] {}",
            self.theorem,
            self.instance,
            shown.join("; ")
        )
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Values<'a>(&'a [(String, String)]);

        impl Serialize for Values<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Entry<'a> {
                    label: &'a str,
                    value: &'a str,
                }
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (label, value) in self.0 {
                    seq.serialize_element(&Entry { label, value })?;
                }
                seq.end()
            }
        }

        let mut st = serializer.serialize_struct("VerificationReport", 5)?;
        st.serialize_field("theorem", &self.theorem)?;
        st.serialize_field("instance", &self.instance)?;
        st.serialize_field("values", &Values(&self.values))?;
        st.serialize_field("pass", &self.pass)?;
        st.serialize_field("elapsed_ms", &(self.elapsed.as_secs_f64() * 1000.0))?;
        st.end()
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(msg.into()))
    }
}

fn arity(id: TheoremId, params: &[BinaryString]) -> Result<()> {
    let want = id.param_names().len();
    if params.len() == want {
        Ok(())
    } else {
        Err(Error::ParseError(format!(
            "{id} expects {want} side labels ({}), got {}",
            id.param_names().join(","),
            params.len()
        )))
    }
}

fn side_str(s: &BinaryString) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.to_string()
    }
}

fn instance_string(id: TheoremId, params: &[BinaryString]) -> String {
    id.param_names()
        .iter()
        .zip(params)
        .map(|(name, s)| format!("{name}={}", side_str(s)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tri_label(nw: &BinaryString, ne: &BinaryString, s: &BinaryString) -> String {
    format!("tri:{},{},{}", side_str(nw), side_str(ne), side_str(s))
}

fn poly_label(kind: PolygonKind, labels: &[BinaryString]) -> String {
    let prefix = match kind {
        PolygonKind::Trapezoid => "trap",
        PolygonKind::Parallelogram => "par",
        PolygonKind::Rhombus => "rhom",
        PolygonKind::Pentagon => "pent",
        PolygonKind::Hexagon => "hex",
    };
    let sides: Vec<String> = labels.iter().map(side_str).collect();
    format!("{prefix}:{}", sides.join(","))
}

/// `1^ones 0^zeros`.
fn run(ones: usize, zeros: usize) -> BinaryString {
    let mut bits = vec![1u8; ones];
    bits.extend(vec![0u8; zeros]);
    BinaryString::new(bits)
}

/// `0^zeros 1^ones`, the sorted string of the given content.
fn sorted_word(zeros: usize, ones: usize) -> BinaryString {
    let mut bits = vec![0u8; zeros];
    bits.extend(vec![1u8; ones]);
    BinaryString::new(bits)
}

fn bs(len: usize, ones: usize) -> Vec<BinaryString> {
    strings_of_content(len - ones, ones)
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pool.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            let v = pool.remove(i);
            cur.push(v);
            rec(pool, cur, out);
            cur.pop();
            pool.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Count or signed sum for one boundary, with a label that reproduces it.
fn measure(label: String, b: &BoundarySpec, set: &PieceSet) -> (String, String) {
    if set.k_delta || set.k_nabla {
        let v = match weight_sum(b, set) {
            Weight::Sign(v) => v,
            w => i64::try_from(w.value_at_zero()).expect("signed sum fits in i64"),
        };
        (format!("ksum({label})"), v.to_string())
    } else {
        (format!("count({label})"), count(b, set).to_string())
    }
}

fn all_values_equal(values: &[(String, String)]) -> bool {
    values.windows(2).all(|w| w[0].1 == w[1].1)
}

fn split_triangles(
    alpha: &BinaryString,
    beta: &BinaryString,
    gamma: &BinaryString,
    delta: &BinaryString,
    nu: &BinaryString,
) -> Vec<(String, BoundarySpec)> {
    [
        (alpha, gamma, delta, beta),
        (beta, gamma, delta, alpha),
        (alpha, delta, gamma, beta),
        (beta, delta, gamma, alpha),
    ]
    .iter()
    .map(|(x, y, u, v)| {
        let nw = x.concat(y);
        let s = u.concat(v);
        let b = triangle_boundary(&nw, nu, &s).expect("split triangle closes");
        (tri_label(&nw, nu, &s), b)
    })
    .collect()
}

fn split_hypotheses(
    alpha: &BinaryString,
    beta: &BinaryString,
    gamma: &BinaryString,
    delta: &BinaryString,
    nu: &BinaryString,
) -> Result<()> {
    require(
        alpha.sort() == beta.sort(),
        "alpha and beta must share content",
    )?;
    require(
        gamma.sort() == delta.sort(),
        "gamma and delta must share content",
    )?;
    require(
        nu.len() == alpha.len() + gamma.len(),
        "nu must have length |alpha| + |gamma|",
    )?;
    require(
        nu.content() == alpha.content().plus(gamma.content()),
        "nu must have the content of alpha.gamma",
    )
}

/// Check one commutativity statement: compute every member of the asserted
/// family of counts (or signed sums) and require them all equal.
pub fn verify_commutativity(id: TheoremId, params: &[BinaryString]) -> Result<VerificationReport> {
    let start = Instant::now();
    arity(id, params)?;
    let set = match id {
        TheoremId::KSplit | TheoremId::KTrapezoid | TheoremId::KParallelogram => {
            PieceSet::with_k_delta()
        }
        _ => PieceSet::classical(),
    };

    let boundaries: Vec<(String, BoundarySpec)> = match id {
        TheoremId::Split | TheoremId::KSplit => {
            let [alpha, beta, gamma, delta, nu] = params else {
                unreachable!()
            };
            split_hypotheses(alpha, beta, gamma, delta, nu)?;
            split_triangles(alpha, beta, gamma, delta, nu)
        }
        TheoremId::Trapezoid | TheoremId::KTrapezoid => {
            let [beta, gamma, nu, delta] = params else {
                unreachable!()
            };
            let mut out = Vec::new();
            for labels in [
                [beta, gamma, nu, delta],
                [beta, delta, nu, gamma],
            ] {
                let labels: Vec<BinaryString> = labels.into_iter().cloned().collect();
                let b = polygon_boundary(PolygonKind::Trapezoid, &labels)?;
                out.push((poly_label(PolygonKind::Trapezoid, &labels), b));
            }
            out
        }
        TheoremId::Parallelogram | TheoremId::KParallelogram => {
            let [alpha, gamma, beta, delta] = params else {
                unreachable!()
            };
            let mut out = Vec::new();
            for labels in [
                [alpha, gamma, beta, delta],
                [beta, gamma, alpha, delta],
                [alpha, delta, beta, gamma],
                [beta, delta, alpha, gamma],
            ] {
                let labels: Vec<BinaryString> = labels.into_iter().cloned().collect();
                let b = polygon_boundary(PolygonKind::Parallelogram, &labels)?;
                out.push((poly_label(PolygonKind::Parallelogram, &labels), b));
            }
            out
        }
        TheoremId::Rhombus => {
            let [alpha, gamma, beta, delta] = params else {
                unreachable!()
            };
            require(
                alpha.sort() == gamma.sort()
                    && alpha.sort() == beta.sort()
                    && alpha.sort() == delta.sort(),
                "all four rhombus labels must share content",
            )?;
            let given = [alpha, gamma, beta, delta];
            permutations(4)
                .into_iter()
                .map(|p| {
                    let labels: Vec<BinaryString> =
                        p.iter().map(|&i| given[i].clone()).collect();
                    let b = polygon_boundary(PolygonKind::Rhombus, &labels)
                        .expect("rhombus labels share length");
                    (poly_label(PolygonKind::Rhombus, &labels), b)
                })
                .collect()
        }
        TheoremId::Hex180 => {
            let labels: Vec<BinaryString> = params.to_vec();
            let rotated: Vec<BinaryString> = (0..6).map(|i| params[(i + 3) % 6].clone()).collect();
            let b0 = polygon_boundary(PolygonKind::Hexagon, &labels)?;
            let b1 = polygon_boundary(PolygonKind::Hexagon, &rotated)
                .expect("the rotated hexagon closes whenever the original does");
            vec![
                (poly_label(PolygonKind::Hexagon, &labels), b0),
                (poly_label(PolygonKind::Hexagon, &rotated), b1),
            ]
        }
        TheoremId::HexOpposite => {
            let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
                unreachable!()
            };
            require(
                alpha.sort() == delta.sort(),
                "alpha and delta must share content",
            )?;
            require(
                beta.sort() == epsilon.sort(),
                "beta and epsilon must share content",
            )?;
            require(
                gamma.sort() == zeta.sort(),
                "gamma and zeta must share content",
            )?;
            let mut out = Vec::new();
            for swaps in 0..8u8 {
                let pick = |bit: u8, x: &BinaryString, y: &BinaryString| {
                    if swaps >> bit & 1 == 1 {
                        (y.clone(), x.clone())
                    } else {
                        (x.clone(), y.clone())
                    }
                };
                let (a, d) = pick(2, alpha, delta);
                let (b, e) = pick(1, beta, epsilon);
                let (c, z) = pick(0, gamma, zeta);
                let labels = vec![a, b, c, d, e, z];
                let bnd = polygon_boundary(PolygonKind::Hexagon, &labels)
                    .expect("opposite-side swaps preserve the shape");
                out.push((poly_label(PolygonKind::Hexagon, &labels), bnd));
            }
            out
        }
        TheoremId::HexTwoway | TheoremId::Pentagon => {
            let (alpha, rest): (BinaryString, [&BinaryString; 5]) =
                if id == TheoremId::Pentagon {
                    let [beta, gamma, delta, epsilon, zeta] = params else {
                        unreachable!()
                    };
                    (BinaryString::empty(), [beta, gamma, delta, epsilon, zeta])
                } else {
                    let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
                        unreachable!()
                    };
                    (alpha.clone(), [beta, gamma, delta, epsilon, zeta])
                };
            let [beta, gamma, delta, epsilon, zeta] = rest;
            require(
                beta.sort() == zeta.sort(),
                "beta and zeta must share content",
            )?;
            require(
                gamma.sort() == epsilon.sort(),
                "gamma and epsilon must share content",
            )?;
            let mut out = Vec::new();
            for (b, z) in [(beta, zeta), (zeta, beta)] {
                for (c, e) in [(gamma, epsilon), (epsilon, gamma)] {
                    let labels = vec![
                        alpha.clone(),
                        b.clone(),
                        c.clone(),
                        delta.clone(),
                        e.clone(),
                        z.clone(),
                    ];
                    let bnd = polygon_boundary(PolygonKind::Hexagon, &labels)?;
                    out.push((poly_label(PolygonKind::Hexagon, &labels), bnd));
                }
            }
            out
        }
        TheoremId::HexThreeway => {
            let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
                unreachable!()
            };
            require(
                alpha.sort() == gamma.sort() && alpha.sort() == epsilon.sort(),
                "alpha, gamma, epsilon must share content",
            )?;
            require(
                beta.sort() == delta.sort() && beta.sort() == zeta.sort(),
                "beta, delta, zeta must share content",
            )?;
            let odd = [alpha, gamma, epsilon];
            let even = [beta, delta, zeta];
            let mut out = Vec::new();
            for p in permutations(3) {
                for q in permutations(3) {
                    let labels = vec![
                        odd[p[0]].clone(),
                        even[q[0]].clone(),
                        odd[p[1]].clone(),
                        even[q[1]].clone(),
                        odd[p[2]].clone(),
                        even[q[2]].clone(),
                    ];
                    let bnd = polygon_boundary(PolygonKind::Hexagon, &labels)
                        .expect("equal alternating lengths close");
                    out.push((poly_label(PolygonKind::Hexagon, &labels), bnd));
                }
            }
            out
        }
        TheoremId::HexAllway => {
            let sorted = params[0].sort();
            require(
                params.iter().all(|s| s.sort() == sorted),
                "all six sides must share content",
            )?;
            permutations(6)
                .into_iter()
                .map(|p| {
                    let labels: Vec<BinaryString> =
                        p.iter().map(|&i| params[i].clone()).collect();
                    let b = polygon_boundary(PolygonKind::Hexagon, &labels)
                        .expect("equilateral hexagons close");
                    (poly_label(PolygonKind::Hexagon, &labels), b)
                })
                .collect()
        }
        other => {
            return Err(Error::ParseError(format!(
                "{other} is not a commutativity statement"
            )))
        }
    };

    let values: Vec<(String, String)> = boundaries
        .iter()
        .map(|(label, b)| measure(label.clone(), b, &set))
        .collect();
    let pass = all_values_equal(&values);
    Ok(VerificationReport {
        theorem: id,
        instance: instance_string(id, params),
        values,
        pass,
        elapsed: start.elapsed(),
    })
}

fn split_formula_rhs(
    alpha: &BinaryString,
    beta: &BinaryString,
    gamma: &BinaryString,
    delta: &BinaryString,
    nu: &BinaryString,
) -> u64 {
    let ac = alpha.content();
    let cc = gamma.content();
    let mut sum = 0u64;
    for lambda in bs(alpha.len(), ac.ones) {
        let left = lr0(alpha, &lambda, &beta.reverse());
        if left == 0 {
            continue;
        }
        for mu in bs(gamma.len(), cc.ones) {
            let right = lr0(gamma, &mu, &delta.reverse());
            if right == 0 {
                continue;
            }
            sum += lr0_padded(&lambda, &mu, nu) * left * right;
        }
    }
    sum
}

fn trapezoid_formula_rhs(
    beta: &BinaryString,
    gamma: &BinaryString,
    nu: &BinaryString,
    delta: &BinaryString,
) -> u64 {
    let cc = gamma.content();
    let beta_rev = beta.reverse();
    let mut sum = 0u64;
    for mu in bs(gamma.len(), cc.ones) {
        sum += lr0_padded(&beta_rev, &mu, nu) * lr0(gamma, &mu, &delta.reverse());
    }
    sum
}

fn para_formula_rhs(
    alpha: &BinaryString,
    gamma: &BinaryString,
    beta: &BinaryString,
    delta: &BinaryString,
) -> u64 {
    let a = alpha.content();
    let c = gamma.content();
    let mut sum = 0u64;
    match (a.zeros >= c.zeros, c.ones >= a.ones) {
        (true, false) => {
            let tail = run(a.ones - c.ones, a.zeros - c.zeros);
            for mu in bs(c.len(), c.ones) {
                sum += lr0(alpha, beta, &mu.concat(&tail)) * lr0(gamma, delta, &mu.reverse());
            }
        }
        (false, true) => {
            let head = run(c.ones - a.ones, c.zeros - a.zeros);
            for lambda in bs(a.len(), a.ones) {
                sum += lr0(alpha, beta, &lambda.reverse()) * lr0(gamma, delta, &head.concat(&lambda));
            }
        }
        (true, true) => {
            let zeros = sorted_word(a.zeros - c.zeros, 0);
            let ones = run(c.ones - a.ones, 0);
            for eta in bs(c.zeros + a.ones, a.ones) {
                sum += lr0(alpha, beta, &eta.reverse().concat(&zeros))
                    * lr0(gamma, delta, &ones.concat(&eta));
            }
        }
        (false, false) => {}
    }
    sum
}

fn hex_formula_rhs(params: &[BinaryString]) -> u64 {
    let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
        unreachable!()
    };
    let (a0, a1) = (alpha.content().zeros, alpha.content().ones);
    let b0 = beta.content().zeros;
    let (c0, c1) = (gamma.content().zeros, gamma.content().ones);
    let (e0, e1) = (epsilon.content().zeros, epsilon.content().ones);
    let z1 = zeta.content().ones;
    let left_outer = sorted_word(b0, 0)
        .concat(&alpha.reverse())
        .concat(&run(z1, 0));
    let right_outer = run(c1, 0).concat(delta).concat(&sorted_word(e0, 0));
    let bc = beta.concat(gamma);
    let ez_rev = epsilon.concat(zeta).reverse();
    let mut sum = 0u64;
    for mu in bs(b0 + c0 + beta.content().ones + gamma.content().ones, beta.content().ones + gamma.content().ones) {
        let m = sorted_word(a0, 0).concat(&mu).concat(&run(a1, 0));
        let bits = m.bits();
        if bits[..c0].iter().any(|&b| b != 0) {
            continue;
        }
        if bits[bits.len() - e1..].iter().any(|&b| b != 1) {
            continue;
        }
        let theta = BinaryString::new(bits[c0..bits.len() - e1].to_vec());
        sum += lr0(&left_outer, &theta, &right_outer) * lr0(&bc, &mu, &ez_rev);
    }
    sum
}

fn threeway_formula_rhs(params: &[BinaryString]) -> u64 {
    let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
        unreachable!()
    };
    let bc = beta.concat(gamma);
    let ez = epsilon.concat(zeta);
    let delta_rev = delta.reverse();
    let alpha_rev = alpha.reverse();
    let inner = bs(beta.len(), beta.content().ones);
    let outer = bs(alpha.len(), alpha.content().ones);
    let mut sum = 0u64;
    for lambda in &inner {
        for mu in &outer {
            let f1 = lr0_padded(lambda, mu, &bc);
            if f1 == 0 {
                continue;
            }
            for rho in &inner {
                let f3 = lr0(rho, lambda, &delta_rev);
                if f3 == 0 {
                    continue;
                }
                for sigma in &outer {
                    sum += f1 * f3 * lr0_padded(rho, sigma, &ez) * lr0(mu, sigma, &alpha_rev);
                }
            }
        }
    }
    sum
}

fn allway_formula_rhs(params: &[BinaryString]) -> u64 {
    let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
        unreachable!()
    };
    let domain = bs(alpha.len(), alpha.content().ones);
    let gamma_rev = gamma.reverse();
    let delta_rev = delta.reverse();
    let zeta_rev = zeta.reverse();
    let alpha_rev = alpha.reverse();
    let mut sum = 0u64;
    for xi in &domain {
        let xi_rev = xi.reverse();
        for mu in &domain {
            let f1 = lr0(beta, xi, mu);
            if f1 == 0 {
                continue;
            }
            for lambda in &domain {
                let f2 = lr0(&lambda.reverse(), &xi_rev, &gamma_rev);
                if f2 == 0 {
                    continue;
                }
                for rho in &domain {
                    let f3 = lr0(rho, lambda, &delta_rev);
                    if f3 == 0 {
                        continue;
                    }
                    for tau in &domain {
                        let f4 = lr0(epsilon, tau, rho);
                        if f4 == 0 {
                            continue;
                        }
                        let tau_rev = tau.reverse();
                        for sigma in &domain {
                            sum += f1
                                * f2
                                * f3
                                * f4
                                * lr0(&sigma.reverse(), &tau_rev, &zeta_rev)
                                * lr0(mu, sigma, &alpha_rev);
                        }
                    }
                }
            }
        }
    }
    sum
}

fn hexagon_content_hypotheses(params: &[BinaryString]) -> Result<()> {
    let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
        unreachable!()
    };
    require(
        beta.content().plus(gamma.content()) == epsilon.content().plus(zeta.content()),
        "content(beta.gamma) must equal content(epsilon.zeta)",
    )?;
    require(
        alpha.content().plus(beta.content()) == delta.content().plus(epsilon.content()),
        "content(alpha.beta) must equal content(delta.epsilon)",
    )?;
    require(
        gamma.content().plus(delta.content()) == zeta.content().plus(alpha.content()),
        "content(gamma.delta) must equal content(zeta.alpha)",
    )
}

/// Check one closed formula: enumerate the left side, evaluate the
/// Littlewood-Richardson expression on the right, and require equality.
pub fn verify_formula(id: TheoremId, params: &[BinaryString]) -> Result<VerificationReport> {
    let start = Instant::now();
    arity(id, params)?;
    let set = PieceSet::classical();

    let values: Vec<(String, String)> = match id {
        TheoremId::SplitFormula => {
            let [alpha, beta, gamma, delta, nu] = params else {
                unreachable!()
            };
            split_hypotheses(alpha, beta, gamma, delta, nu)?;
            let nw = alpha.concat(gamma);
            let s = delta.concat(beta);
            let b = triangle_boundary(&nw, nu, &s).expect("split triangle closes");
            let lhs = measure(tri_label(&nw, nu, &s), &b, &set);
            let rhs = split_formula_rhs(alpha, beta, gamma, delta, nu);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::TrapezoidFormula => {
            let [beta, gamma, nu, delta] = params else {
                unreachable!()
            };
            let labels = params.to_vec();
            let b = polygon_boundary(PolygonKind::Trapezoid, &labels)?;
            let lhs = measure(poly_label(PolygonKind::Trapezoid, &labels), &b, &set);
            let rhs = trapezoid_formula_rhs(beta, gamma, nu, delta);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::TrapezoidD => {
            let [lambda, mu, nu] = params else {
                unreachable!()
            };
            require(
                nu.content() == lambda.content().plus(mu.content()),
                "nu must have the content of lambda.mu",
            )?;
            let labels = vec![lambda.reverse(), mu.sort(), nu.clone(), mu.reverse()];
            let b = polygon_boundary(PolygonKind::Trapezoid, &labels)
                .expect("the D-shaped trapezoid closes");
            let lhs = measure(poly_label(PolygonKind::Trapezoid, &labels), &b, &set);
            let rhs = lr0_padded(lambda, mu, nu);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::ParaFormula => {
            let [alpha, gamma, beta, delta] = params else {
                unreachable!()
            };
            require(
                alpha.sort() == beta.sort(),
                "alpha and beta must share content",
            )?;
            require(
                gamma.sort() == delta.sort(),
                "gamma and delta must share content",
            )?;
            let labels = params.to_vec();
            let b = polygon_boundary(PolygonKind::Parallelogram, &labels)?;
            let lhs = measure(poly_label(PolygonKind::Parallelogram, &labels), &b, &set);
            let rhs = para_formula_rhs(alpha, gamma, beta, delta);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::HexFormula => {
            hexagon_content_hypotheses(params)?;
            let labels = params.to_vec();
            let b = polygon_boundary(PolygonKind::Hexagon, &labels)?;
            let lhs = measure(poly_label(PolygonKind::Hexagon, &labels), &b, &set);
            let rhs = hex_formula_rhs(params);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::HexThreewayFormula => {
            let [alpha, beta, gamma, delta, epsilon, zeta] = params else {
                unreachable!()
            };
            require(
                alpha.sort() == gamma.sort() && alpha.sort() == epsilon.sort(),
                "alpha, gamma, epsilon must share content",
            )?;
            require(
                beta.sort() == delta.sort() && beta.sort() == zeta.sort(),
                "beta, delta, zeta must share content",
            )?;
            let labels = params.to_vec();
            let b = polygon_boundary(PolygonKind::Hexagon, &labels)?;
            let lhs = measure(poly_label(PolygonKind::Hexagon, &labels), &b, &set);
            let rhs = threeway_formula_rhs(params);
            vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
        }
        TheoremId::HexAllwayFormula | TheoremId::HexAllwayCount => {
            let sorted = params[0].sort();
            require(
                params.iter().all(|s| s.sort() == sorted),
                "all six sides must share content",
            )?;
            let labels = params.to_vec();
            let b = polygon_boundary(PolygonKind::Hexagon, &labels)?;
            let lhs = measure(poly_label(PolygonKind::Hexagon, &labels), &b, &set);
            if id == TheoremId::HexAllwayFormula {
                let rhs = allway_formula_rhs(params);
                vec![lhs, ("lrcalc".to_string(), rhs.to_string())]
            } else {
                let content = params[0].content();
                let rhs = if params.iter().all(|s| *s == sorted) {
                    binom(content.len(), content.ones)
                } else {
                    0
                };
                let label = format!("binom({},{}) if all sorted else 0", content.len(), content.ones);
                vec![lhs, (label, rhs.to_string())]
            }
        }
        TheoremId::EqualityLr => {
            let [lambda, mu, nu] = params else {
                unreachable!()
            };
            require(
                nu.content() == lambda.content().plus(mu.content()),
                "nu must have the content of lambda.mu",
            )?;
            let sorted = lambda.sort().concat(&mu.sort());
            let prod = lambda.concat(mu);
            let target = nu.content();
            let lam_pad = lambda.pad(target).expect("content hypothesis admits padding");
            let mu_pad = mu.pad(target).expect("content hypothesis admits padding");
            let b1 = triangle_boundary(&sorted, nu, &prod.reverse())
                .expect("sorted-product triangle closes");
            let b2 = triangle_boundary(&lam_pad, &mu_pad, &nu.reverse())
                .expect("padded triangle closes");
            vec![
                (
                    "ballot c(sort,nu;prod)".to_string(),
                    lr0(&sorted, nu, &prod).to_string(),
                ),
                (
                    "ballot c(pad,pad;nu)".to_string(),
                    lr0_padded(lambda, mu, nu).to_string(),
                ),
                measure(tri_label(&sorted, nu, &prod.reverse()), &b1, &set),
                measure(tri_label(&lam_pad, &mu_pad, &nu.reverse()), &b2, &set),
            ]
        }
        other => {
            return Err(Error::ParseError(format!(
                "{other} is not a closed formula"
            )))
        }
    };

    let pass = all_values_equal(&values);
    Ok(VerificationReport {
        theorem: id,
        instance: instance_string(id, params),
        values,
        pass,
        elapsed: start.elapsed(),
    })
}

fn eq_poly(w: Weight) -> Poly {
    match w {
        Weight::EqPoly(p) => p,
        Weight::Count(v) => Poly::constant(v.into()),
        Weight::Sign(v) => Poly::constant(v.into()),
    }
}

/// Check the equivariant parallelogram theorem on one instance: the four
/// weight sums agree after reversing the variable blocks `y_1..y_a` and
/// `y_{a+1}..y_{a+c}` as dictated by which labels were exchanged, the four
/// puzzle counts agree outright, and every weight sum specializes at
/// `y == 0` to the classical count of the same boundary.
pub fn verify_equivariant_parallelogram(
    alpha: &BinaryString,
    gamma: &BinaryString,
    beta: &BinaryString,
    delta: &BinaryString,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let id = TheoremId::EqvtParallelogram;
    require(
        alpha.sort() == beta.sort(),
        "alpha and beta must share content",
    )?;
    require(
        gamma.sort() == delta.sort(),
        "gamma and delta must share content",
    )?;
    let set = PieceSet::with_equivariant();
    let a = alpha.len() as u32;
    let c = gamma.len() as u32;
    let phi_a = move |v: u32| if v <= a { a + 1 - v } else { v };
    let phi_c = move |v: u32| {
        if v > a && v <= a + c {
            2 * a + c + 1 - v
        } else {
            v
        }
    };

    let configs = [
        [alpha, gamma, beta, delta],
        [beta, gamma, alpha, delta],
        [alpha, delta, beta, gamma],
        [beta, delta, alpha, gamma],
    ];
    let mut polys = Vec::new();
    let mut counts = Vec::new();
    let mut values = Vec::new();
    let mut grounded = true;
    for labels in configs {
        let labels: Vec<BinaryString> = labels.into_iter().cloned().collect();
        let b = polygon_boundary(PolygonKind::Parallelogram, &labels)?;
        let label = poly_label(PolygonKind::Parallelogram, &labels);
        let w = weight_sum(&b, &set);
        let at_zero = w.value_at_zero();
        let p = eq_poly(w);
        let n = count(&b, &set);
        grounded &= at_zero == BigInt::from(count(&b, &PieceSet::classical()));
        values.push((format!("eqweight({label})"), p.to_string()));
        values.push((format!("count({label})"), n.to_string()));
        polys.push(p);
        counts.push(n);
    }

    let pass = polys[0] == polys[1].apply_var_map(phi_a)
        && polys[0] == polys[2].apply_var_map(phi_c)
        && polys[0] == polys[3].apply_var_map(|v| phi_c(phi_a(v)))
        && counts.iter().all(|&n| n == counts[0])
        && grounded;
    Ok(VerificationReport {
        theorem: id,
        instance: instance_string(id, &[alpha.clone(), gamma.clone(), beta.clone(), delta.clone()]),
        values,
        pass,
        elapsed: start.elapsed(),
    })
}

/// Check the unique-pentagon lemma over all corner contents up to `max`:
/// when `a0 >= c0` or `c1 >= a1` the pentagon with free south boundary has
/// exactly one filling even with the K-theory triangle allowed, it uses no
/// K pieces, and its realized south-side labels are the predicted words;
/// otherwise it has none.
pub fn verify_unique_pentagon(max: usize) -> VerificationReport {
    let start = Instant::now();
    let sat = |x: usize, y: usize| x.saturating_sub(y);
    let set = PieceSet::with_k_delta();
    let mut instances = 0u64;
    let mut good_count = 0u64;
    let mut bad_count = 0u64;
    let mut mismatches = 0u64;
    for a0 in 0..=max {
        for a1 in 0..=max {
            for c0 in 0..=max {
                for c1 in 0..=max {
                    instances += 1;
                    let n = a0.max(c0) + a1.max(c1);
                    let p = sat(a1, c1) + sat(a0, c0);
                    let s = sat(c1, a1) + sat(c0, a0);
                    let b = BoundarySpec::from_sides([
                        run(0, p),
                        sorted_word(c0, c1),
                        BinaryString::empty(),
                        sorted_word(a0, a1),
                        run(0, s),
                        run(0, n - s - p),
                    ])
                    .expect("pentagon frame closes");
                    let sols = enumerate_free(&b, &set, &[Side::SW, Side::SE, Side::S]);
                    let good = a0 >= c0 || c1 >= a1;
                    let ok = if good {
                        good_count += 1;
                        sols.len() == 1 && {
                            let (fill, realized) = &sols[0];
                            fill.k_piece_count() == 0
                                && realized[&Side::SE] == run(sat(c1, a1), sat(c0, a0))
                                && realized[&Side::S] == run(a1.min(c1), a0.min(c0))
                                && realized[&Side::SW] == run(sat(a1, c1), sat(a0, c0))
                        }
                    } else {
                        bad_count += 1;
                        sols.is_empty()
                    };
                    if !ok {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    let values = vec![
        ("instances".to_string(), instances.to_string()),
        ("good".to_string(), good_count.to_string()),
        ("bad".to_string(), bad_count.to_string()),
        ("mismatches".to_string(), mismatches.to_string()),
    ];
    VerificationReport {
        theorem: TheoremId::UniquePentagon,
        instance: format!("a0,a1,c0,c1 in 0..={max}"),
        values,
        pass: mismatches == 0,
        elapsed: start.elapsed(),
    }
}

/// Dispatch a single instance to the checker for its theorem.
pub fn verify_instance(id: TheoremId, params: &[BinaryString]) -> Result<VerificationReport> {
    match id {
        TheoremId::Split
        | TheoremId::Trapezoid
        | TheoremId::Parallelogram
        | TheoremId::Rhombus
        | TheoremId::Hex180
        | TheoremId::HexOpposite
        | TheoremId::HexTwoway
        | TheoremId::Pentagon
        | TheoremId::HexThreeway
        | TheoremId::HexAllway
        | TheoremId::KSplit
        | TheoremId::KTrapezoid
        | TheoremId::KParallelogram => verify_commutativity(id, params),
        TheoremId::SplitFormula
        | TheoremId::TrapezoidFormula
        | TheoremId::TrapezoidD
        | TheoremId::ParaFormula
        | TheoremId::HexFormula
        | TheoremId::HexThreewayFormula
        | TheoremId::HexAllwayFormula
        | TheoremId::HexAllwayCount
        | TheoremId::EqualityLr => verify_formula(id, params),
        TheoremId::EqvtParallelogram => {
            arity(id, params)?;
            verify_equivariant_parallelogram(&params[0], &params[1], &params[2], &params[3])
        }
        TheoremId::UniquePentagon => Err(Error::ParseError(
            "UNIQUE_PENTAGON ranges over corner sizes; use sweep".to_string(),
        )),
    }
}

fn gen_split(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for c in 1..=max - a {
            for a1 in 0..=a {
                for c1 in 0..=c {
                    let nus = bs(a + c, a1 + c1);
                    for alpha in bs(a, a1) {
                        for beta in bs(a, a1) {
                            for gamma in bs(c, c1) {
                                for delta in bs(c, c1) {
                                    for nu in &nus {
                                        out.push(vec![
                                            alpha.clone(),
                                            beta.clone(),
                                            gamma.clone(),
                                            delta.clone(),
                                            nu.clone(),
                                        ]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_trapezoid(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for b in 1..max {
        for c in 1..=max - b {
            for beta in strings_of_length(b) {
                for gamma in strings_of_length(c) {
                    let deltas = bs(c, gamma.content().ones);
                    let nus = bs(b + c, beta.content().ones + gamma.content().ones);
                    for nu in &nus {
                        for delta in &deltas {
                            out.push(vec![
                                beta.clone(),
                                gamma.clone(),
                                nu.clone(),
                                delta.clone(),
                            ]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_trapezoid_d(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for l in 1..max {
        for m in 1..=max - l {
            for lambda in strings_of_length(l) {
                for mu in strings_of_length(m) {
                    for nu in bs(l + m, lambda.content().ones + mu.content().ones) {
                        out.push(vec![lambda.clone(), mu.clone(), nu]);
                    }
                }
            }
        }
    }
    out
}

fn gen_parallelogram(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for c in 1..=max - a {
            for a1 in 0..=a {
                for c1 in 0..=c {
                    for alpha in bs(a, a1) {
                        for beta in bs(a, a1) {
                            for gamma in bs(c, c1) {
                                for delta in bs(c, c1) {
                                    out.push(vec![
                                        alpha.clone(),
                                        gamma.clone(),
                                        beta.clone(),
                                        delta.clone(),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_rhombus(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..=max {
        for a1 in 0..=a {
            let family = bs(a, a1);
            for alpha in &family {
                for gamma in &family {
                    for beta in &family {
                        for delta in &family {
                            out.push(vec![
                                alpha.clone(),
                                gamma.clone(),
                                beta.clone(),
                                delta.clone(),
                            ]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Content-feasible hexagons with all six sides nonempty and perimeter at
/// most `max`, as label vectors `[alpha..zeta]`.
fn gen_hexagons(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for b in 1..max {
            for c in 1..max {
                for e in 1..(a + b).min(b + c) {
                    let d = a + b - e;
                    let z = b + c - e;
                    if a + b + c + d + e + z > max {
                        continue;
                    }
                    for a1 in 0..=a {
                        for b1 in 0..=b {
                            for c1 in 0..=c {
                                for e1 in 0..=e {
                                    let d1 = (a1 + b1).checked_sub(e1);
                                    let z1 = (b1 + c1).checked_sub(e1);
                                    let (Some(d1), Some(z1)) = (d1, z1) else {
                                        continue;
                                    };
                                    if d1 > d || z1 > z {
                                        continue;
                                    }
                                    for alpha in bs(a, a1) {
                                        for beta in bs(b, b1) {
                                            for gamma in bs(c, c1) {
                                                for delta in bs(d, d1) {
                                                    for epsilon in bs(e, e1) {
                                                        for zeta in bs(z, z1) {
                                                            out.push(vec![
                                                                alpha.clone(),
                                                                beta.clone(),
                                                                gamma.clone(),
                                                                delta.clone(),
                                                                epsilon.clone(),
                                                                zeta.clone(),
                                                            ]);
                                                        }
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_hex_opposite(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for b in 1..max {
            for c in 1..max {
                if 2 * (a + b + c) > max {
                    continue;
                }
                for a1 in 0..=a {
                    for b1 in 0..=b {
                        for c1 in 0..=c {
                            for alpha in bs(a, a1) {
                                for delta in bs(a, a1) {
                                    for beta in bs(b, b1) {
                                        for epsilon in bs(b, b1) {
                                            for gamma in bs(c, c1) {
                                                for zeta in bs(c, c1) {
                                                    out.push(vec![
                                                        alpha.clone(),
                                                        beta.clone(),
                                                        gamma.clone(),
                                                        delta.clone(),
                                                        epsilon.clone(),
                                                        zeta.clone(),
                                                    ]);
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_hex_twoway(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for b in 1..max {
            for c in 1..max {
                if a + b <= c {
                    continue;
                }
                let d = a + b - c;
                if a + 2 * b + 2 * c + d > max {
                    continue;
                }
                for alpha in strings_of_length(a) {
                    let a1 = alpha.content().ones;
                    for b1 in 0..=b {
                        for c1 in 0..=c {
                            let Some(d1) = (a1 + b1).checked_sub(c1) else {
                                continue;
                            };
                            if d1 > d {
                                continue;
                            }
                            for beta in bs(b, b1) {
                                for zeta in bs(b, b1) {
                                    for gamma in bs(c, c1) {
                                        for epsilon in bs(c, c1) {
                                            for delta in bs(d, d1) {
                                                out.push(vec![
                                                    alpha.clone(),
                                                    beta.clone(),
                                                    gamma.clone(),
                                                    delta.clone(),
                                                    epsilon.clone(),
                                                    zeta.clone(),
                                                ]);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_pentagon(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for c in 1..max {
        for b in c..=max - c {
            let d = b - c;
            for b1 in 0..=b {
                for c1 in 0..=c.min(b1) {
                    if c - c1 > b - b1 {
                        continue;
                    }
                    let d1 = b1 - c1;
                    for beta in bs(b, b1) {
                        for zeta in bs(b, b1) {
                            for gamma in bs(c, c1) {
                                for epsilon in bs(c, c1) {
                                    for delta in bs(d, d1) {
                                        out.push(vec![
                                            beta.clone(),
                                            gamma.clone(),
                                            delta.clone(),
                                            epsilon.clone(),
                                            zeta.clone(),
                                        ]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_hex_threeway(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..max {
        for b in 1..max {
            if 3 * (a + b) > max {
                continue;
            }
            for a1 in 0..=a {
                for b1 in 0..=b {
                    let odd = bs(a, a1);
                    let even = bs(b, b1);
                    for alpha in &odd {
                        for gamma in &odd {
                            for epsilon in &odd {
                                for beta in &even {
                                    for delta in &even {
                                        for zeta in &even {
                                            out.push(vec![
                                                alpha.clone(),
                                                beta.clone(),
                                                gamma.clone(),
                                                delta.clone(),
                                                epsilon.clone(),
                                                zeta.clone(),
                                            ]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn gen_hex_allway(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 1..=max {
        for a1 in 0..=a {
            let family = bs(a, a1);
            let mut stack = vec![Vec::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == 6 {
                    out.push(prefix);
                    continue;
                }
                for s in family.iter().rev() {
                    let mut next: Vec<BinaryString> = prefix.clone();
                    next.push(s.clone());
                    stack.push(next);
                }
            }
        }
    }
    out
}

fn gen_equality_lr(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for l in 0..=max {
        for m in 0..=max {
            for lambda in strings_of_length(l) {
                for mu in strings_of_length(m) {
                    for nu in bs(l + m, lambda.content().ones + mu.content().ones) {
                        out.push(vec![lambda.clone(), mu.clone(), nu]);
                    }
                }
            }
        }
    }
    out
}

fn gen_eqvt(max: usize) -> Vec<Vec<BinaryString>> {
    let mut out = Vec::new();
    for a in 0..=max {
        for c in 0..=max {
            for a1 in 0..=a {
                for c1 in 0..=c {
                    for alpha in bs(a, a1) {
                        for beta in bs(a, a1) {
                            for gamma in bs(c, c1) {
                                for delta in bs(c, c1) {
                                    out.push(vec![
                                        alpha.clone(),
                                        gamma.clone(),
                                        beta.clone(),
                                        delta.clone(),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn generate_instances(id: TheoremId, max: usize) -> Vec<Vec<BinaryString>> {
    match id {
        TheoremId::Split | TheoremId::KSplit | TheoremId::SplitFormula => gen_split(max),
        TheoremId::Trapezoid | TheoremId::KTrapezoid | TheoremId::TrapezoidFormula => {
            gen_trapezoid(max)
        }
        TheoremId::TrapezoidD => gen_trapezoid_d(max),
        TheoremId::Parallelogram | TheoremId::KParallelogram | TheoremId::ParaFormula => {
            gen_parallelogram(max)
        }
        TheoremId::Rhombus => gen_rhombus(max),
        TheoremId::Hex180 | TheoremId::HexFormula => gen_hexagons(max),
        TheoremId::HexOpposite => gen_hex_opposite(max),
        TheoremId::HexTwoway => gen_hex_twoway(max),
        TheoremId::Pentagon => gen_pentagon(max),
        TheoremId::HexThreeway | TheoremId::HexThreewayFormula => gen_hex_threeway(max),
        TheoremId::HexAllway | TheoremId::HexAllwayFormula | TheoremId::HexAllwayCount => {
            gen_hex_allway(max)
        }
        TheoremId::EqualityLr => gen_equality_lr(max),
        TheoremId::EqvtParallelogram => gen_eqvt(max),
        TheoremId::UniquePentagon => Vec::new(),
    }
}

/// Verify every instance of a theorem up to the size bound, in parallel,
/// returning reports in a deterministic order: side lengths first, then the
/// concatenation of the side labels lexicographically.
pub fn sweep(id: TheoremId, max_size: Option<usize>) -> Vec<VerificationReport> {
    let max = max_size.unwrap_or_else(|| id.default_bound());
    if id == TheoremId::UniquePentagon {
        return vec![verify_unique_pentagon(max)];
    }
    let mut instances = generate_instances(id, max);
    instances.sort_by_key(|params| {
        let lengths: Vec<usize> = params.iter().map(|s| s.len()).collect();
        let joined: String = params.iter().map(|s| s.to_string()).collect();
        (lengths, joined)
    });
    instances
        .par_iter()
        .map(|params| verify_instance(id, params).expect("generated instances satisfy hypotheses"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryString {
        BinaryString::new(s.bytes().map(|b| b - b'0').collect())
    }

    fn ps(strs: &[&str]) -> Vec<BinaryString> {
        strs.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn theorem_ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert!("SPLITS".parse::<TheoremId>().is_err());
    }

    #[test]
    fn split_four_triangle_counts_agree() {
        let report =
            verify_commutativity(TheoremId::Split, &ps(&["01", "10", "1", "1", "101"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 4);
    }

    #[test]
    fn split_rejects_mismatched_nu() {
        let err = verify_commutativity(TheoremId::Split, &ps(&["01", "10", "1", "1", "01011"]))
            .unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn split_formula_matches_enumeration() {
        let report =
            verify_formula(TheoremId::SplitFormula, &ps(&["01", "10", "1", "1", "101"])).unwrap();
        assert!(report.pass, "{}", report.summary());
    }

    #[test]
    fn trapezoid_swap_commutes_and_vacuous_contents_agree() {
        let live = verify_commutativity(
            TheoremId::Trapezoid,
            &ps(&["01", "101", "01101", "110"]),
        )
        .unwrap();
        assert!(live.pass, "{}", live.summary());

        let vacuous =
            verify_commutativity(TheoremId::Trapezoid, &ps(&["0", "0", "00", "1"])).unwrap();
        assert!(vacuous.pass);
        assert!(vacuous.values.iter().all(|(_, v)| v == "0"));
    }

    #[test]
    fn trapezoid_formula_matches_enumeration() {
        let report = verify_formula(
            TheoremId::TrapezoidFormula,
            &ps(&["01", "101", "01101", "110"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
    }

    #[test]
    fn trapezoid_d_counts_one_lr_coefficient() {
        let report =
            verify_formula(TheoremId::TrapezoidD, &ps(&["10", "10", "1001"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values[0].1, "1");
    }

    #[test]
    fn parallelogram_four_counts_agree() {
        let report = verify_commutativity(
            TheoremId::Parallelogram,
            &ps(&["101", "0101", "011", "0011"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 4);
    }

    #[test]
    fn para_formula_empty_intersection_is_zero() {
        let report =
            verify_formula(TheoremId::ParaFormula, &ps(&["11", "0", "11", "0"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert!(report.values.iter().all(|(_, v)| v == "0"));
    }

    #[test]
    fn para_formula_matches_enumeration_on_mixed_contents() {
        for params in [
            ["101", "0101", "011", "0101"],
            ["10", "001", "01", "010"],
            ["01", "11", "10", "11"],
        ] {
            let report = verify_formula(TheoremId::ParaFormula, &ps(&params)).unwrap();
            assert!(report.pass, "{}", report.summary());
        }
    }

    // The padding run in the first case is written in the fixed order
    // 1^(a1-c1) 0^(a0-c0); these instances distinguish it from its reverse.
    #[test]
    fn para_formula_first_case_pad_order() {
        for (params, expect) in [
            (["001", "0", "001", "0"], "0"),
            (["001", "0", "010", "0"], "1"),
            (["0101", "1", "1001", "1"], "0"),
        ] {
            let report = verify_formula(TheoremId::ParaFormula, &ps(&params)).unwrap();
            assert!(report.pass, "{}", report.summary());
            assert!(report.values.iter().all(|(_, v)| v == expect));
        }
    }

    #[test]
    fn rhombus_all_orderings_agree() {
        let report =
            verify_commutativity(TheoremId::Rhombus, &ps(&["01", "01", "10", "10"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 24);
    }

    #[test]
    fn hexagon_rotation_counts_agree() {
        let report = verify_commutativity(
            TheoremId::Hex180,
            &ps(&["1", "01", "0", "11", "0", "10"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 2);
    }

    #[test]
    fn hex_formula_matches_enumeration() {
        for params in [
            ["1", "01", "0", "11", "0", "10"],
            ["01", "01", "01", "01", "01", "01"],
            ["0", "10", "0", "01", "0", "10"],
        ] {
            let report = verify_formula(TheoremId::HexFormula, &ps(&params)).unwrap();
            assert!(report.pass, "{}", report.summary());
        }
    }

    #[test]
    fn hex_opposite_eight_counts_agree() {
        let report = verify_commutativity(
            TheoremId::HexOpposite,
            &ps(&["01", "10", "01", "10", "01", "10"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 8);
    }

    #[test]
    fn hex_twoway_four_counts_agree() {
        let report = verify_commutativity(
            TheoremId::HexTwoway,
            &ps(&["0", "10", "01", "0", "10", "01"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 4);
    }

    #[test]
    fn pentagon_four_counts_agree() {
        let report =
            verify_commutativity(TheoremId::Pentagon, &ps(&["01", "0", "1", "0", "10"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 4);
    }

    #[test]
    fn hex_threeway_all_36_counts_agree() {
        let report = verify_commutativity(
            TheoremId::HexThreeway,
            &ps(&["0", "01", "0", "10", "0", "01"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 36);
    }

    #[test]
    fn hex_threeway_formula_matches_enumeration() {
        let report = verify_formula(
            TheoremId::HexThreewayFormula,
            &ps(&["0", "01", "0", "10", "0", "01"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
    }

    #[test]
    fn hex_allway_all_720_counts_agree() {
        let report = verify_commutativity(
            TheoremId::HexAllway,
            &ps(&["01", "01", "01", "10", "10", "01"]),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 720);
    }

    #[test]
    fn hex_allway_formula_matches_enumeration() {
        for params in [
            ["01", "01", "01", "10", "10", "01"],
            ["1", "1", "1", "1", "1", "1"],
        ] {
            let report = verify_formula(TheoremId::HexAllwayFormula, &ps(&params)).unwrap();
            assert!(report.pass, "{}", report.summary());
        }
    }

    #[test]
    fn hex_allway_count_is_binomial_or_zero() {
        let sorted = verify_formula(
            TheoremId::HexAllwayCount,
            &ps(&["01", "01", "01", "01", "01", "01"]),
        )
        .unwrap();
        assert!(sorted.pass, "{}", sorted.summary());
        assert_eq!(sorted.values[0].1, "2");

        let unsorted = verify_formula(
            TheoremId::HexAllwayCount,
            &ps(&["01", "01", "01", "10", "10", "01"]),
        )
        .unwrap();
        assert!(unsorted.pass, "{}", unsorted.summary());
        assert_eq!(unsorted.values[0].1, "0");
    }

    #[test]
    fn k_variants_pass_on_small_instances() {
        let split =
            verify_commutativity(TheoremId::KSplit, &ps(&["01", "10", "1", "1", "101"])).unwrap();
        assert!(split.pass, "{}", split.summary());
        let trap = verify_commutativity(
            TheoremId::KTrapezoid,
            &ps(&["01", "101", "01101", "110"]),
        )
        .unwrap();
        assert!(trap.pass, "{}", trap.summary());
        let par = verify_commutativity(
            TheoremId::KParallelogram,
            &ps(&["101", "0101", "011", "0011"]),
        )
        .unwrap();
        assert!(par.pass, "{}", par.summary());
        assert!(par.values[0].0.starts_with("ksum("));
    }

    #[test]
    fn equality_lr_four_values_agree() {
        let report = verify_formula(TheoremId::EqualityLr, &ps(&["10", "10", "1001"])).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values.len(), 4);
        assert_eq!(report.values[0].1, "1");
    }

    #[test]
    fn eqvt_parallelogram_reverses_variable_blocks() {
        let report = verify_equivariant_parallelogram(
            &w("101"),
            &w("0011"),
            &w("011"),
            &w("1010"),
        )
        .unwrap();
        assert!(report.pass, "{}", report.summary());
        let counts: Vec<&str> = report
            .values
            .iter()
            .filter(|(label, _)| label.starts_with("count("))
            .map(|(_, v)| v.as_str())
            .collect();
        assert_eq!(counts, vec!["3", "3", "3", "3"]);

        let vd = Poly::var_diff;
        let top = vd(4, 1)
            .mul(&vd(4, 3))
            .add(&vd(4, 3).mul(&vd(6, 3)))
            .add(&vd(4, 3).mul(&vd(5, 2)));
        let bottom = vd(7, 3)
            .mul(&vd(6, 3))
            .add(&vd(5, 1).mul(&vd(7, 3)))
            .add(&vd(7, 3).mul(&vd(7, 2)));
        assert_eq!(report.values[0].1, top.to_string());
        assert_eq!(report.values[4].1, bottom.to_string());
    }

    #[test]
    fn eqvt_parallelogram_identical_labels_trivially_symmetric() {
        let same =
            verify_equivariant_parallelogram(&w("10"), &w("10"), &w("10"), &w("10")).unwrap();
        assert!(same.pass, "{}", same.summary());
        let gamma_eq_delta =
            verify_equivariant_parallelogram(&w("01"), &w("01"), &w("10"), &w("01")).unwrap();
        assert!(gamma_eq_delta.pass, "{}", gamma_eq_delta.summary());
    }

    #[test]
    fn eqvt_parallelogram_singleton_matches_triangle_weight() {
        let report = verify_equivariant_parallelogram(&w("1"), &w("0"), &w("1"), &w("0")).unwrap();
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values[0].1, Poly::var_diff(2, 1).to_string());
        assert_eq!(report.values[1].1, "1");
    }

    #[test]
    fn unique_pentagon_lemma_holds_to_two() {
        let report = verify_unique_pentagon(2);
        assert!(report.pass, "{}", report.summary());
        assert_eq!(report.values[0].1, "81");
        assert_eq!(report.values[3].1, "0");
    }

    #[test]
    fn sweeps_pass_on_small_bounds() {
        for (id, max) in [
            (TheoremId::Split, 3),
            (TheoremId::Trapezoid, 3),
            (TheoremId::TrapezoidD, 3),
            (TheoremId::Parallelogram, 3),
            (TheoremId::Rhombus, 2),
            (TheoremId::Hex180, 8),
            (TheoremId::HexOpposite, 8),
            (TheoremId::HexTwoway, 8),
            (TheoremId::Pentagon, 4),
            (TheoremId::HexThreeway, 6),
            (TheoremId::HexAllway, 1),
            (TheoremId::KSplit, 3),
            (TheoremId::KTrapezoid, 3),
            (TheoremId::KParallelogram, 3),
            (TheoremId::SplitFormula, 3),
            (TheoremId::TrapezoidFormula, 3),
            (TheoremId::ParaFormula, 3),
            (TheoremId::HexFormula, 8),
            (TheoremId::HexThreewayFormula, 6),
            (TheoremId::HexAllwayFormula, 1),
            (TheoremId::HexAllwayCount, 2),
            (TheoremId::EqualityLr, 2),
            (TheoremId::EqvtParallelogram, 2),
            (TheoremId::UniquePentagon, 1),
        ] {
            let reports = sweep(id, Some(max));
            assert!(!reports.is_empty(), "{id}: empty sweep");
            for report in &reports {
                assert!(report.pass, "{id}: {}", report.summary());
            }
        }
    }

    #[test]
    fn sweep_order_is_deterministic() {
        let first = sweep(TheoremId::Rhombus, Some(2));
        let second = sweep(TheoremId::Rhombus, Some(2));
        let keys: Vec<&String> = first.iter().map(|r| &r.instance).collect();
        let again: Vec<&String> = second.iter().map(|r| &r.instance).collect();
        assert_eq!(keys, again);

        let sort_key = |instance: &str| {
            let sides: Vec<&str> = instance
                .split_whitespace()
                .map(|kv| kv.split_once('=').unwrap().1)
                .collect();
            let lengths: Vec<usize> = sides.iter().map(|s| s.len()).collect();
            (lengths, sides.join(""))
        };
        let computed: Vec<_> = keys.iter().map(|k| sort_key(k)).collect();
        let mut sorted = computed.clone();
        sorted.sort();
        assert_eq!(computed, sorted, "reports arrive ordered by length then label");
    }

    #[test]
    fn report_serializes_with_millisecond_timing() {
        let report =
            verify_commutativity(TheoremId::Trapezoid, &ps(&["0", "0", "00", "1"])).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["theorem"], "TRAPEZOID");
        assert!(json["pass"].as_bool().unwrap());
        assert!(json["elapsed_ms"].as_f64().unwrap() >= 0.0);
        assert_eq!(json["values"][0]["value"], "0");
    }

    #[test]
    fn verify_instance_rejects_wrong_arity_and_unique_pentagon() {
        assert!(matches!(
            verify_instance(TheoremId::Split, &ps(&["01", "10"])),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            verify_instance(TheoremId::UniquePentagon, &[]),
            Err(Error::ParseError(_))
        ));
    }
}
