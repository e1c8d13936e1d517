//! Binary-string algebra.
//!
//! Boundary labels of puzzle regions are finite words over {0,1}. This module
//! provides the operations the rest of the crate is phrased in: content
//! counts, sorting, reversal, duality, padding, the bijection with Young
//! diagrams in a rectangle, and inversion length.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over {0,1}, possibly empty, stored in reading order:
/// `bits[0]` is the leftmost character of the written string.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryString {
    bits: Vec<u8>,
}

/// Multiplicities of the two symbols in a binary string.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Content {
    pub zeros: usize,
    pub ones: usize,
}

impl Content {
    pub fn new(zeros: usize, ones: usize) -> Self {
        Content { zeros, ones }
    }

    pub fn len(&self) -> usize {
        self.zeros + self.ones
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Componentwise sum; the natural monoid for concatenation of strings.
    pub fn plus(&self, other: Content) -> Content {
        Content::new(self.zeros + other.zeros, self.ones + other.ones)
    }
}

/// A partition drawn inside a `rows x cols` rectangle. Trailing zero parts
/// are trimmed, so `parts.len() <= rows` and every part is `<= cols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    pub parts: Vec<usize>,
    pub rows: usize,
    pub cols: usize,
}

impl Partition {
    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl BinaryString {
    pub fn new(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinaryString { bits }
    }

    pub fn empty() -> Self {
        BinaryString { bits: Vec::new() }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Counts of 0s and 1s.
    pub fn content(&self) -> Content {
        let ones = self.bits.iter().filter(|&&b| b == 1).count();
        Content::new(self.bits.len() - ones, ones)
    }

    /// All 0s moved ahead of all 1s: `0^{n0} 1^{n1}`.
    pub fn sort(&self) -> BinaryString {
        let c = self.content();
        let mut bits = vec![0u8; c.zeros];
        bits.extend(std::iter::repeat(1u8).take(c.ones));
        BinaryString::new(bits)
    }

    /// Written backwards; an involution.
    pub fn reverse(&self) -> BinaryString {
        BinaryString::new(self.bits.iter().rev().copied().collect())
    }

    /// Reversed with 0 and 1 exchanged; an involution.
    pub fn dual(&self) -> BinaryString {
        BinaryString::new(self.bits.iter().rev().map(|&b| 1 - b).collect())
    }

    /// Concatenation, written left to right.
    pub fn concat(&self, other: &BinaryString) -> BinaryString {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BinaryString::new(bits)
    }

    /// `0^{d0} . self . 1^{d1}` where the deltas raise the content to
    /// `target`. Fails if `target` is smaller than the current content.
    pub fn pad(&self, target: Content) -> Result<BinaryString> {
        let c = self.content();
        if target.zeros < c.zeros || target.ones < c.ones {
            return Err(Error::ContentTooSmall(format!(
                "cannot pad string of content ({},{}) to content ({},{})",
                c.zeros, c.ones, target.zeros, target.ones
            )));
        }
        let mut bits = vec![0u8; target.zeros - c.zeros];
        bits.extend_from_slice(&self.bits);
        bits.extend(std::iter::repeat(1u8).take(target.ones - c.ones));
        Ok(BinaryString::new(bits))
    }

    /// The Young diagram traced by reading the string as a lattice path from
    /// the NE corner of the `ones x zeros` rectangle: a 0 steps left, a 1
    /// steps down. Row j of the partition counts the 0s to the right of the
    /// j-th 1.
    pub fn to_partition(&self) -> Partition {
        let c = self.content();
        let mut parts = Vec::with_capacity(c.ones);
        let mut zeros_seen_from_right = 0usize;
        for &b in self.bits.iter().rev() {
            if b == 0 {
                zeros_seen_from_right += 1;
            } else {
                parts.push(zeros_seen_from_right);
            }
        }
        parts.reverse();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition {
            parts,
            rows: c.ones,
            cols: c.zeros,
        }
    }

    /// Inverse of [`to_partition`](Self::to_partition): the string of length
    /// `rows + cols` whose j-th 1 sits at position `j + (cols - parts[j-1])`.
    pub fn from_partition(p: &Partition) -> BinaryString {
        let mut bits = vec![0u8; p.rows + p.cols];
        for j in 1..=p.rows {
            let part = p.parts.get(j - 1).copied().unwrap_or(0);
            bits[j + (p.cols - part) - 1] = 1;
        }
        BinaryString::new(bits)
    }

    /// Number of inversions: pairs (i,j) with i<j, `s_i = 1`, `s_j = 0`.
    pub fn length(&self) -> usize {
        let mut ones_so_far = 0usize;
        let mut inversions = 0usize;
        for &b in &self.bits {
            if b == 1 {
                ones_so_far += 1;
            } else {
                inversions += ones_so_far;
            }
        }
        inversions
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => {
                    return Err(Error::ParseError(format!(
                        "invalid character {:?} in binary string {:?}",
                        other, s
                    )))
                }
            }
        }
        Ok(BinaryString::new(bits))
    }
}

impl Serialize for BinaryString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BinaryString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// All binary strings with `zeros` 0s and `ones` 1s, in lexicographic order
/// (0 < 1). Used by the verification sweeps.
pub fn strings_of_content(zeros: usize, ones: usize) -> Vec<BinaryString> {
    let n = zeros + ones;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(cur: &mut Vec<u8>, zeros: usize, ones: usize, out: &mut Vec<BinaryString>) {
        if zeros == 0 && ones == 0 {
            out.push(BinaryString::new(cur.clone()));
            return;
        }
        if zeros > 0 {
            cur.push(0);
            rec(cur, zeros - 1, ones, out);
            cur.pop();
        }
        if ones > 0 {
            cur.push(1);
            rec(cur, zeros, ones - 1, out);
            cur.pop();
        }
    }
    rec(&mut cur, zeros, ones, &mut out);
    out
}

/// All binary strings of length `n`, in lexicographic order.
pub fn strings_of_length(n: usize) -> Vec<BinaryString> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let bits = (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect();
        out.push(BinaryString::new(bits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> BinaryString {
        text.parse().unwrap()
    }

    #[test]
    fn content_counts_both_symbols() {
        assert_eq!(s("").content(), Content::new(0, 0));
        assert_eq!(s("0011").content(), Content::new(2, 2));
        assert_eq!(s("1010").content(), Content::new(2, 2));
    }

    #[test]
    fn sort_moves_zeros_ahead() {
        assert_eq!(s("1010").sort(), s("0011"));
        assert_eq!(s("0011").sort(), s("0011"));
        assert_eq!(s("111").sort(), s("111"));
    }

    #[test]
    fn reverse_and_dual_are_involutions() {
        assert_eq!(s("0011").reverse(), s("1100"));
        assert_eq!(s("10").reverse(), s("01"));
        assert_eq!(s("001").dual(), s("011"));
        assert_eq!(s("10").dual(), s("10"));
        for word in strings_of_length(6) {
            assert_eq!(word.reverse().reverse(), word);
            assert_eq!(word.dual().dual(), word);
        }
    }

    #[test]
    fn pad_prepends_zeros_appends_ones() {
        assert_eq!(s("10").pad(Content::new(2, 2)).unwrap(), s("0101"));
        assert_eq!(s("").pad(Content::new(1, 1)).unwrap(), s("01"));
        assert_eq!(s("1010").pad(Content::new(2, 2)).unwrap(), s("1010"));
        assert!(matches!(
            s("1010").pad(Content::new(1, 3)),
            Err(Error::ContentTooSmall(_))
        ));
    }

    #[test]
    fn partition_bijection_matches_path_tracing() {
        assert_eq!(s("0011").to_partition().parts, Vec::<usize>::new());
        assert_eq!(s("1100").to_partition().parts, vec![2, 2]);
        assert_eq!(s("1010").to_partition().parts, vec![2, 1]);
        let p = s("1010").to_partition();
        assert_eq!((p.rows, p.cols), (2, 2));
    }

    #[test]
    fn partition_roundtrip_short_strings() {
        for n in 0..=10 {
            for word in strings_of_length(n) {
                let p = word.to_partition();
                assert_eq!(BinaryString::from_partition(&p), word);
                assert_eq!(p.size(), word.length());
            }
        }
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(s("0011").length(), 0);
        assert_eq!(s("1100").length(), 4);
        assert_eq!(s("1010").length(), 3);
    }

    #[test]
    fn strings_of_content_is_lexicographic_and_complete() {
        let all = strings_of_content(2, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], s("0011"));
        assert_eq!(all[5], s("1100"));
        for w in &all {
            assert_eq!(w.content(), Content::new(2, 2));
        }
    }

    #[test]
    fn serde_round_trips_as_plain_string() {
        let w = s("0101");
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"0101\"");
        assert_eq!(
            serde_json::from_str::<BinaryString>("\"0101\"").unwrap(),
            w
        );
        assert_eq!(serde_json::to_string(&s("")).unwrap(), "\"\"");
    }
}
