use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::domino::{DominoTableau, Orientation, Placement};
use super::enumerate::enumerate_tableaux_with;
use super::Partition;
use crate::combinatorics::QPolynomial;
use crate::{Error, Result, Strategy};

/// A maximal run of `width` consecutive stacks in a `2 x n` tiling, where a
/// stack is a top horizontal domino directly above a bottom horizontal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Stacking {
    pub start_col: u32,
    pub width: u32,
}

/// Stackings of a set of placements covering `(n, n)`, left to right.
pub fn tiling_stackings(placements: &[Placement]) -> Vec<Stacking> {
    let mut stack_cols: Vec<u32> = placements
        .iter()
        .filter(|p| p.orient == Orientation::Horizontal && p.row == 1)
        .map(|p| p.col)
        .collect();
    stack_cols.sort_unstable();
    let mut out: Vec<Stacking> = Vec::new();
    for col in stack_cols {
        match out.last_mut() {
            Some(s) if s.start_col + 2 * s.width == col => s.width += 1,
            _ => out.push(Stacking {
                start_col: col,
                width: 1,
            }),
        }
    }
    out
}

pub fn stackings(t: &DominoTableau) -> Result<Vec<Stacking>> {
    if t.shape().two_row_width().is_none() {
        return Err(Error::NotTwoRow(t.shape().to_string()));
    }
    Ok(tiling_stackings(&t.tiling().placements))
}

/// `i` is a descent when the north-east-most cell of domino `i + 1` lies in
/// a lower row than that of domino `i`.
pub fn descent_set(t: &DominoTableau) -> BTreeSet<u32> {
    let n = t.len() as u32;
    (1..n)
        .filter(|&i| match (t.domino(i), t.domino(i + 1)) {
            (Some(a), Some(b)) => b.ne_cell().0 > a.ne_cell().0,
            _ => false,
        })
        .collect()
}

pub fn maj(t: &DominoTableau) -> u64 {
    descent_set(t).into_iter().map(u64::from).sum()
}

/// `Σ_{D ∈ DT(shape)} q^{maj(D)}` by exhaustive enumeration.
pub fn maj_polynomial(shape: &Partition) -> QPolynomial {
    maj_polynomial_with(shape, Strategy::default())
}

pub fn maj_polynomial_with(shape: &Partition, strategy: Strategy) -> QPolynomial {
    let tableaux = enumerate_tableaux_with(shape, strategy);
    let majors = strategy.map(&tableaux, maj);
    let top = majors.iter().copied().max().unwrap_or(0) as usize;
    let mut coeffs = vec![BigInt::default(); top + 1];
    for m in majors {
        coeffs[m as usize] += BigInt::one();
    }
    QPolynomial::new(coeffs)
}
