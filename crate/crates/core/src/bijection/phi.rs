//! The subset encoding of `DT(n, n)`.
//!
//! A tableau of shape `(n, n)` is determined by the labels of its bottom
//! horizontal dominoes. `phi` records those labels and pads them with the
//! smallest vertical labels up to `⌊n/2⌋` elements; `phi_inverse` recovers
//! the split by the running count `x_s = s - (2|H_s| + |V_s|)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::combinatorics::BinaryWord;
use crate::tableaux::{Domino, DominoTableau, Orientation, Partition, Placement};
use crate::{Error, Result};

/// A `⌊n/2⌋`-subset of `[n]` with its bottom-horizontal / vertical split.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetState {
    pub n: u32,
    #[serde(rename = "S")]
    pub subset: BTreeSet<u32>,
    #[serde(rename = "H")]
    pub horizontal: BTreeSet<u32>,
    #[serde(rename = "V")]
    pub vertical: BTreeSet<u32>,
}

impl SubsetState {
    /// Splits `subset` with [`hv_split`].
    pub fn new(n: u32, subset: BTreeSet<u32>) -> Result<Self> {
        let (horizontal, vertical) = hv_split(n, &subset)?;
        Ok(Self {
            n,
            subset,
            horizontal,
            vertical,
        })
    }

    /// Checks `S = H ⊔ V`, `1 ∉ H`, `n ∉ V` and `2|H_s| + |V_s| <= s - 1`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        if self.subset.len() != (self.n / 2) as usize {
            return fail(format!("|S| = {} != ⌊n/2⌋", self.subset.len()));
        }
        if !self.horizontal.is_disjoint(&self.vertical) {
            return fail("H and V intersect".into());
        }
        let union: BTreeSet<u32> = self.horizontal.union(&self.vertical).copied().collect();
        if union != self.subset {
            return fail("H ∪ V != S".into());
        }
        if self.horizontal.contains(&1) {
            return fail("1 ∈ H".into());
        }
        if self.vertical.contains(&self.n) {
            return fail("n ∈ V".into());
        }
        for &s in &self.subset {
            let h = self.horizontal.range(..s).count() as u32;
            let v = self.vertical.range(..s).count() as u32;
            if 2 * h + v > s - 1 {
                return fail(format!("2|H_s| + |V_s| > s - 1 at s = {s}"));
            }
        }
        Ok(())
    }
}

fn two_row_width(t: &DominoTableau) -> Result<u32> {
    t.shape()
        .two_row_width()
        .ok_or_else(|| Error::NotTwoRow(t.shape().to_string()))
}

fn check_subset(n: u32, subset: &BTreeSet<u32>) -> Result<()> {
    if let Some(&bad) = subset.iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::SubsetElement(bad, n));
    }
    let expected = (n / 2) as usize;
    if subset.len() != expected {
        return Err(Error::SubsetSize {
            n,
            subset: subset.iter().copied().collect(),
            expected,
        });
    }
    Ok(())
}

/// The subset encoding of a valid tableau of shape `(n, n)`.
pub fn phi(t: &DominoTableau) -> Result<SubsetState> {
    let n = two_row_width(t)?;
    let horizontal: BTreeSet<u32> = t
        .dominoes()
        .iter()
        .filter(|d| d.is_horizontal() && d.row == 2)
        .map(|d| d.label)
        .collect();
    let missing = ((n / 2) as usize)
        .checked_sub(horizontal.len())
        .ok_or_else(|| Error::Internal(format!("{} stacks exceed ⌊n/2⌋", horizontal.len())))?;
    let vertical: BTreeSet<u32> = t
        .dominoes()
        .iter()
        .filter(|d| !d.is_horizontal())
        .map(|d| d.label)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .take(missing)
        .collect();
    if vertical.len() != missing {
        return Err(Error::Internal(
            "not enough vertical dominoes to pad".into(),
        ));
    }
    let subset = horizontal.union(&vertical).copied().collect();
    Ok(SubsetState {
        n,
        subset,
        horizontal,
        vertical,
    })
}

/// Splits a `⌊n/2⌋`-subset into bottom-horizontal labels `H` and vertical
/// labels `V`: scanning `s` upward, `x_s = s - (2|H_s| + |V_s|)` equals 1
/// for a vertical label and exceeds 1 for a bottom-horizontal one.
pub fn hv_split(n: u32, subset: &BTreeSet<u32>) -> Result<(BTreeSet<u32>, BTreeSet<u32>)> {
    check_subset(n, subset)?;
    let mut horizontal = BTreeSet::new();
    let mut vertical = BTreeSet::new();
    for &s in subset {
        let used = 2 * horizontal.len() as u32 + vertical.len() as u32;
        match s.checked_sub(used) {
            Some(1) => {
                vertical.insert(s);
            }
            Some(x) if x > 1 => {
                horizontal.insert(s);
            }
            _ => {
                return Err(Error::Internal(format!(
                    "x_s < 1 at s = {s} for subset {subset:?}"
                )))
            }
        }
    }
    Ok((horizontal, vertical))
}

/// Rebuilds the unique tableau of shape `(n, n)` whose bottom horizontal
/// dominoes carry exactly the labels in `bottom`.
///
/// Labels are placed from `n` down to 1, filling both rows from the right.
/// A bottom label starts a stack, a non-bottom label either caps the
/// open stack above it or, when both rows are flush, is vertical.
pub fn tableau_from_bottom_labels(n: u32, bottom: &BTreeSet<u32>) -> Result<DominoTableau> {
    let mut top_fill = 0u32;
    let mut bottom_fill = 0u32;
    let mut dominoes = Vec::with_capacity(n as usize);
    let stuck = |label: u32| {
        Error::Internal(format!(
            "bottom labels {bottom:?} admit no tableau of width {n} (stuck at {label})"
        ))
    };
    for label in (1..=n).rev() {
        let placement = if bottom.contains(&label) {
            if bottom_fill + 2 > n {
                return Err(stuck(label));
            }
            bottom_fill += 2;
            Placement::new(2, n - bottom_fill + 1, Orientation::Horizontal)
        } else if top_fill < bottom_fill {
            top_fill += 2;
            Placement::new(1, n - top_fill + 1, Orientation::Horizontal)
        } else {
            if top_fill + 1 > n {
                return Err(stuck(label));
            }
            top_fill += 1;
            bottom_fill += 1;
            Placement::new(1, n - top_fill + 1, Orientation::Vertical)
        };
        dominoes.push(Domino::new(label, placement));
    }
    if top_fill != n || bottom_fill != n {
        return Err(stuck(0));
    }
    Ok(DominoTableau::new(Partition::two_row(n), dominoes))
}

pub fn phi_inverse(n: u32, subset: &BTreeSet<u32>) -> Result<DominoTableau> {
    let (horizontal, _) = hv_split(n, subset)?;
    tableau_from_bottom_labels(n, &horizontal)
}

/// Labels of the bottom horizontal dominoes (the `H` part of `phi`).
pub fn reduced_subset(t: &DominoTableau) -> Result<BTreeSet<u32>> {
    Ok(phi(t)?.horizontal)
}

/// Letter `i` is 0 exactly when `i ∈ phi(t)`.
pub fn to_word(t: &DominoTableau) -> Result<BinaryWord> {
    let state = phi(t)?;
    BinaryWord::from_zero_positions(state.n as usize, &state.subset)
}

pub fn from_word(w: &BinaryWord) -> Result<DominoTableau> {
    let n = w.len() as u32;
    let expected = (n / 2) as usize;
    if w.zeros() != expected {
        return Err(Error::ZeroCount {
            found: w.zeros(),
            expected,
        });
    }
    phi_inverse(n, &w.zero_positions())
}
