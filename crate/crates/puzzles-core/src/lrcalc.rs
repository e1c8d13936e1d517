//! Littlewood-Richardson oracle.
//!
//! Coefficients are computed by the ballot (lattice word) tableau rule,
//! entirely independent of the puzzle enumeration engine: c_{λμ}^ν counts
//! semistandard skew tableaux of shape ν/λ and content μ whose reverse
//! reading word (rows right to left, top to bottom) is a ballot word. The
//! engine-facing wrapper [`lr_via_puzzles`] lives here too so the two
//! computations can be compared directly.

use crate::error::{Error, Result};
use crate::pieces::PieceSet;
use crate::region::triangle_boundary;
use crate::tiler::count;
use crate::words::{BinaryString, Partition};

/// c_{λμ}^ν for three strings of equal content, via the ballot rule.
///
/// Returns 0 when the partition of λ is not contained in the partition of ν
/// or when the degrees do not add up.
pub fn lr_coeff(lambda: &BinaryString, mu: &BinaryString, nu: &BinaryString) -> Result<u64> {
    let c = lambda.content();
    if mu.content() != c || nu.content() != c {
        return Err(Error::ContentMismatch(format!(
            "lr_coeff requires equal content, got {} / {} / {}",
            lambda, mu, nu
        )));
    }
    Ok(lr_partitions(
        &lambda.to_partition(),
        &mu.to_partition(),
        &nu.to_partition(),
    ))
}

/// c_{λ!,μ!}^ν: both factors padded with leading 0s and trailing 1s up to
/// the content of ν.
pub fn lr_coeff_padded(
    lambda: &BinaryString,
    mu: &BinaryString,
    nu: &BinaryString,
) -> Result<u64> {
    let target = nu.content();
    let lambda = lambda.pad(target)?;
    let mu = mu.pad(target)?;
    lr_coeff(&lambda, &mu, nu)
}

/// The same coefficient read off the puzzle engine: the number of fillings
/// of the triangle with sides λ, μ, reverse(ν) using the classical pieces.
pub fn lr_via_puzzles(lambda: &BinaryString, mu: &BinaryString, nu: &BinaryString) -> u64 {
    match triangle_boundary(lambda, mu, &nu.reverse()) {
        Ok(b) => count(&b, &PieceSet::classical()),
        Err(_) => 0,
    }
}

/// Checks c_{sort(λ)sort(μ), ν}^{λμ} = c_{λ!,μ!}^ν for strings with
/// content(ν) = content(λ) + content(μ).
pub fn equality_of_lr_check(
    lambda: &BinaryString,
    mu: &BinaryString,
    nu: &BinaryString,
) -> Result<bool> {
    if nu.content() != lambda.content().plus(mu.content()) {
        return Err(Error::ContentMismatch(format!(
            "equality check requires content(ν) = content(λ) + content(μ), got {} / {} / {}",
            lambda, mu, nu
        )));
    }
    let lhs = lr_coeff(
        &lambda.sort().concat(&mu.sort()),
        nu,
        &lambda.concat(mu),
    )?;
    let rhs = lr_coeff_padded(lambda, mu, nu)?;
    Ok(lhs == rhs)
}

/// Total variant of [`lr_coeff`]: content mismatch counts as coefficient 0.
pub(crate) fn lr0(lambda: &BinaryString, mu: &BinaryString, nu: &BinaryString) -> u64 {
    lr_coeff(lambda, mu, nu).unwrap_or(0)
}

/// Total variant of [`lr_coeff_padded`]: impossible padding counts as 0.
pub(crate) fn lr0_padded(lambda: &BinaryString, mu: &BinaryString, nu: &BinaryString) -> u64 {
    lr_coeff_padded(lambda, mu, nu).unwrap_or(0)
}

fn lr_partitions(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    for r in 0..lam.parts.len() {
        if lam.parts[r] > nu.parts.get(r).copied().unwrap_or(0) {
            return 0;
        }
    }
    if lam.size() + mu.size() != nu.size() {
        return 0;
    }

    // Cells of ν/λ in reverse reading order: rows top to bottom, each row
    // right to left, so every cell's row successor and column predecessor
    // are already assigned when it is reached.
    let rows = nu.parts.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        let start = lam.parts.get(r).copied().unwrap_or(0);
        for c in (start..nu.parts[r]).rev() {
            cells.push((r, c));
        }
    }

    let lam_start = |r: usize| lam.parts.get(r).copied().unwrap_or(0);
    let max_entry = mu.parts.len();
    let mut grid: Vec<Vec<u8>> = (0..rows).map(|r| vec![0u8; nu.parts[r]]).collect();
    let mut counts = vec![0usize; max_entry];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        nu_parts: &[usize],
        lam_start: &dyn Fn(usize) -> usize,
        target: &[usize],
        grid: &mut Vec<Vec<u8>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            // counts[v] <= target[v] throughout and the totals agree, so
            // the content is exactly μ here.
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0u64;
        for v in 1..=target.len() {
            if counts[v - 1] >= target[v - 1] {
                continue;
            }
            if v > 1 && counts[v - 2] <= counts[v - 1] {
                continue;
            }
            if c + 1 < nu_parts[r] && grid[r][c + 1] < v as u8 {
                continue;
            }
            if r > 0 && c >= lam_start(r - 1) && grid[r - 1][c] >= v as u8 {
                continue;
            }
            grid[r][c] = v as u8;
            counts[v - 1] += 1;
            total += rec(idx + 1, cells, nu_parts, lam_start, target, grid, counts);
            counts[v - 1] -= 1;
            grid[r][c] = 0;
        }
        total
    }

    rec(
        0,
        &cells,
        &nu.parts,
        &lam_start,
        &mu.parts,
        &mut grid,
        &mut counts,
    )
}
