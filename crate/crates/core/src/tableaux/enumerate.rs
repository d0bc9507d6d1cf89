use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::domino::{DominoTableau, DominoTiling, Orientation, Placement};
use super::Partition;
use crate::{Error, Result, Strategy};

/// All domino tilings of `shape`, by backtracking that always covers the
/// first uncovered cell in row-major order, trying a horizontal domino
/// before a vertical one. Shapes of odd weight have no tilings.
pub fn enumerate_tilings(shape: &Partition) -> Vec<DominoTiling> {
    if shape.weight() % 2 == 1 {
        return Vec::new();
    }
    let cells: Vec<(u32, u32)> = shape.cells().collect();
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut covered: Vec<Vec<bool>> = rows.iter().map(|&len| vec![false; len]).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(cells.len() / 2);
    tile(shape, &cells, 0, &mut covered, &mut current, &mut out);
    out
}

fn tile(
    shape: &Partition,
    cells: &[(u32, u32)],
    mut cursor: usize,
    covered: &mut [Vec<bool>],
    current: &mut Vec<Placement>,
    out: &mut Vec<DominoTiling>,
) {
    let is_free = |covered: &[Vec<bool>], r: u32, c: u32| {
        shape.contains(r, c) && !covered[r as usize - 1][c as usize - 1]
    };
    while cursor < cells.len() {
        let (r, c) = cells[cursor];
        if !covered[r as usize - 1][c as usize - 1] {
            break;
        }
        cursor += 1;
    }
    let Some(&(r, c)) = cells.get(cursor) else {
        out.push(DominoTiling {
            shape: shape.clone(),
            placements: current.clone(),
        });
        return;
    };
    for orient in [Orientation::Horizontal, Orientation::Vertical] {
        let p = Placement::new(r, c, orient);
        let [a, b] = p.cells();
        if !is_free(covered, b.0, b.1) {
            continue;
        }
        for (rr, cc) in [a, b] {
            covered[rr as usize - 1][cc as usize - 1] = true;
        }
        current.push(p);
        tile(shape, cells, cursor + 1, covered, current, out);
        current.pop();
        for (rr, cc) in [a, b] {
            covered[rr as usize - 1][cc as usize - 1] = false;
        }
    }
}

/// For each placement, the indices of placements that must carry a smaller
/// label: `u` precedes `v` when a cell of `u` sits immediately left of, or
/// immediately above, a cell of `v`.
fn predecessors(tiling: &DominoTiling) -> Vec<Vec<usize>> {
    let shape = &tiling.shape;
    let mut owner: Vec<Vec<Option<usize>>> = shape
        .parts()
        .iter()
        .map(|&len| vec![None; len as usize])
        .collect();
    for (i, p) in tiling.placements.iter().enumerate() {
        for (r, c) in p.cells() {
            owner[r as usize - 1][c as usize - 1] = Some(i);
        }
    }
    let at = |r: u32, c: u32| -> Option<usize> {
        if shape.contains(r, c) {
            owner[r as usize - 1][c as usize - 1]
        } else {
            None
        }
    };
    let mut preds = vec![Vec::new(); tiling.placements.len()];
    for (r, c) in shape.cells() {
        let Some(u) = at(r, c) else { continue };
        for (rr, cc) in [(r, c + 1), (r + 1, c)] {
            if let Some(v) = at(rr, cc) {
                if v != u && !preds[v].contains(&u) {
                    preds[v].push(u);
                }
            }
        }
    }
    preds
}

/// All labelings of `tiling` that make it a domino tableau, i.e. the linear
/// extensions of the left-of / above precedence between dominoes. Output is
/// sorted lexicographically by the label sequence read in placement order.
pub fn linear_extensions(tiling: &DominoTiling) -> Vec<DominoTableau> {
    let preds = predecessors(tiling);
    let m = preds.len();
    let mut labels = vec![0u32; m];
    let mut all: Vec<Vec<u32>> = Vec::new();

    fn extend(next: u32, preds: &[Vec<usize>], labels: &mut [u32], all: &mut Vec<Vec<u32>>) {
        if next as usize > labels.len() {
            all.push(labels.to_vec());
            return;
        }
        for v in 0..labels.len() {
            if labels[v] == 0 && preds[v].iter().all(|&u| labels[u] != 0) {
                labels[v] = next;
                extend(next + 1, preds, labels, all);
                labels[v] = 0;
            }
        }
    }
    extend(1, &preds, &mut labels, &mut all);
    all.sort_unstable();
    all.into_iter()
        .map(|labels| DominoTableau::from_tiling(tiling, &labels))
        .collect()
}

/// Number of labelings of `tiling`, by dynamic programming over the
/// already-labeled sets (order ideals). Does not materialize tableaux.
pub fn count_linear_extensions(tiling: &DominoTiling) -> Result<BigInt> {
    let preds = predecessors(tiling);
    let m = preds.len();
    if m > 64 {
        return Err(Error::OutOfRange(format!(
            "{m} dominoes exceed the 64-domino counting limit"
        )));
    }
    let masks: Vec<u64> = preds
        .iter()
        .map(|ps| ps.iter().fold(0u64, |acc, &u| acc | (1 << u)))
        .collect();
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut memo: HashMap<u64, BigInt> = HashMap::new();

    fn count(done: u64, full: u64, masks: &[u64], memo: &mut HashMap<u64, BigInt>) -> BigInt {
        if done == full {
            return BigInt::one();
        }
        if let Some(v) = memo.get(&done) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (v, &need) in masks.iter().enumerate() {
            let bit = 1u64 << v;
            if done & bit == 0 && need & !done == 0 {
                total += count(done | bit, full, masks, memo);
            }
        }
        memo.insert(done, total.clone());
        total
    }
    Ok(count(0, full, &masks, &mut memo))
}

/// `#DT(shape)` by summing labeling counts over all tilings.
pub fn count_tableaux(shape: &Partition) -> Result<BigInt> {
    let tilings = enumerate_tilings(shape);
    Strategy::default()
        .map(&tilings, count_linear_extensions)
        .into_iter()
        .sum()
}

/// All domino tableaux of `shape`: tilings in generation order, each
/// followed by its labelings in lexicographic order.
pub fn enumerate_tableaux(shape: &Partition) -> Vec<DominoTableau> {
    enumerate_tableaux_with(shape, Strategy::default())
}

pub fn enumerate_tableaux_with(shape: &Partition, strategy: Strategy) -> Vec<DominoTableau> {
    let tilings = enumerate_tilings(shape);
    strategy
        .map(&tilings, linear_extensions)
        .into_iter()
        .flatten()
        .collect()
}
