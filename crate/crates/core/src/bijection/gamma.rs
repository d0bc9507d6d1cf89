//! The map from domino tableaux to pairs of increasing tableaux.
//!
//! Each domino covers exactly one cell of even content `col - row`. A domino
//! is Type I when that even cell is the top cell of a vertical domino or the
//! right cell of a horizontal one, and Type II otherwise. The dominoes of
//! each type are then slid up their diagonals: a domino whose even cell has
//! content `c` lands on diagonal `c / 2` of its type's tableau, and dominoes
//! sharing a diagonal keep the top-to-bottom order of their even cells.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::quotient::{two_quotient, QuotientPair};
use crate::tableaux::{Domino, DominoTableau, Orientation, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DominoType {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TypedDomino {
    pub domino: Domino,
    pub dtype: DominoType,
    pub even_cell_content: i64,
    /// Row of the even-content cell.
    pub even_cell_row: u32,
}

fn content(cell: (u32, u32)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// Classifies every domino of `t`, in label order.
pub fn classify_types(t: &DominoTableau) -> Vec<TypedDomino> {
    t.dominoes()
        .iter()
        .map(|&domino| {
            let [first, second] = domino.cells();
            // the cell that decides the type: top of a vertical, right of a horizontal
            let (key, other) = match domino.orient {
                Orientation::Vertical => (first, second),
                Orientation::Horizontal => (second, first),
            };
            let (dtype, even) = if content(key).rem_euclid(2) == 0 {
                (DominoType::TypeI, key)
            } else {
                (DominoType::TypeII, other)
            };
            TypedDomino {
                domino,
                dtype,
                even_cell_content: content(even),
                even_cell_row: even.0,
            }
        })
        .collect()
}

/// A filling of a Ferrers diagram by distinct positive integers, strictly
/// increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIncreasing")]
pub struct IncreasingTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawIncreasing {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawIncreasing> for IncreasingTableau {
    type Error = Error;

    fn try_from(raw: RawIncreasing) -> Result<Self> {
        let t = IncreasingTableau::new(raw.rows)?;
        if t.shape != raw.shape {
            return Err(Error::InvalidTableau(format!(
                "declared shape {} does not match rows of shape {}",
                raw.shape, t.shape
            )));
        }
        Ok(t)
    }
}

impl IncreasingTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        let Ok(shape) = Partition::new(rows.iter().map(|r| r.len() as u32).collect()) else {
            return bad("row lengths are not weakly decreasing".into());
        };
        let mut seen = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || !seen.insert(x) {
                    return bad(format!("entry {x} is zero or repeated"));
                }
                if j > 0 && row[j - 1] >= x {
                    return bad(format!("row {} is not increasing", i + 1));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return bad(format!("column {} is not increasing", j + 1));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entries(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GammaImage {
    #[serde(rename = "type_i")]
    pub type_one: IncreasingTableau,
    #[serde(rename = "type_ii")]
    pub type_two: IncreasingTableau,
}

impl GammaImage {
    pub fn shapes(&self) -> QuotientPair {
        QuotientPair::new(self.type_one.shape().clone(), self.type_two.shape().clone())
    }
}

fn slide(dominoes: &[&TypedDomino]) -> Result<IncreasingTableau> {
    let mut diagonals: BTreeMap<i64, Vec<&TypedDomino>> = BTreeMap::new();
    for d in dominoes {
        diagonals
            .entry(d.even_cell_content / 2)
            .or_default()
            .push(d);
    }
    let mut cells: BTreeMap<(i64, i64), u32> = BTreeMap::new();
    for (diag, mut members) in diagonals {
        members.sort_by_key(|d| d.even_cell_row);
        let start = 1.max(1 - diag);
        for (offset, d) in members.into_iter().enumerate() {
            let row = start + offset as i64;
            cells.insert((row, row + diag), d.domino.label);
        }
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for ((row, col), label) in cells {
        let r = row as usize;
        if r > rows.len() + 1 || (r == rows.len() + 1 && col != 1) {
            return Err(Error::Internal(format!(
                "sliding left a gap before cell ({row}, {col})"
            )));
        }
        if r == rows.len() + 1 {
            rows.push(Vec::new());
        }
        if rows[r - 1].len() as i64 + 1 != col {
            return Err(Error::Internal(format!(
                "sliding left a gap before cell ({row}, {col})"
            )));
        }
        rows[r - 1].push(label);
    }
    IncreasingTableau::new(rows).map_err(|e| Error::Internal(format!("slid filling: {e}")))
}

/// Sends a valid domino tableau to its pair of increasing tableaux, one for
/// each domino type. The output shapes are checked against the 2-quotient.
pub fn gamma(t: &DominoTableau) -> Result<GammaImage> {
    t.ensure_valid()?;
    let typed = classify_types(t);
    let of_type =
        |ty: DominoType| -> Vec<&TypedDomino> { typed.iter().filter(|d| d.dtype == ty).collect() };
    let image = GammaImage {
        type_one: slide(&of_type(DominoType::TypeI))?,
        type_two: slide(&of_type(DominoType::TypeII))?,
    };
    let expected = two_quotient(t.shape())?;
    if image.shapes() != expected {
        return Err(Error::Internal(format!(
            "output shapes {:?} differ from the 2-quotient {:?}",
            image.shapes(),
            expected
        )));
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_tableaux, Placement};
    use Orientation::{Horizontal as H, Vertical as V};

    fn tab(shape: &[u32], dominoes: &[(u32, u32, u32, Orientation)]) -> DominoTableau {
        DominoTableau::new(
            Partition::new(shape.to_vec()).unwrap(),
            dominoes
                .iter()
                .map(|&(l, r, c, o)| Domino::new(l, Placement::new(r, c, o)))
                .collect(),
        )
    }

    fn worked_example() -> DominoTableau {
        tab(
            &[5, 5, 3, 3, 2],
            &[
                (1, 1, 1, V),
                (2, 1, 2, V),
                (3, 3, 1, H),
                (4, 1, 3, H),
                (5, 4, 1, V),
                (6, 2, 3, H),
                (7, 4, 2, V),
                (8, 3, 3, V),
                (9, 1, 5, V),
            ],
        )
    }

    fn all_vertical_rect(rows: u32, cols: u32) -> DominoTableau {
        let mut dominoes = Vec::new();
        let mut label = 0;
        for band in 0..rows / 2 {
            for c in 1..=cols {
                label += 1;
                dominoes.push((label, 2 * band + 1, c, V));
            }
        }
        let shape = vec![cols; rows as usize];
        tab(&shape, &dominoes)
    }

    fn labels_of(typed: &[TypedDomino], ty: DominoType) -> BTreeSet<u32> {
        typed
            .iter()
            .filter(|d| d.dtype == ty)
            .map(|d| d.domino.label)
            .collect()
    }

    #[test]
    fn classification_of_worked_example() {
        let typed = classify_types(&worked_example());
        assert_eq!(
            labels_of(&typed, DominoType::TypeI),
            BTreeSet::from([1, 6, 7, 8, 9])
        );
        assert_eq!(
            labels_of(&typed, DominoType::TypeII),
            BTreeSet::from([2, 3, 4, 5])
        );
        assert!(typed.iter().all(|d| d.even_cell_content % 2 == 0));
    }

    #[test]
    fn gamma_of_worked_example() {
        let image = gamma(&worked_example()).unwrap();
        assert_eq!(image.type_one.rows(), &[vec![1, 6, 9], vec![7, 8]]);
        assert_eq!(image.type_two.rows(), &[vec![2, 4], vec![3], vec![5]]);
    }

    #[test]
    fn all_vertical_rectangles() {
        let five = all_vertical_rect(2, 5);
        let typed = classify_types(&five);
        assert_eq!(
            labels_of(&typed, DominoType::TypeI),
            BTreeSet::from([1, 3, 5])
        );

        let big = all_vertical_rect(6, 5);
        assert!(big.is_valid());
        let typed = classify_types(&big);
        assert_eq!(
            labels_of(&typed, DominoType::TypeI),
            BTreeSet::from([1, 3, 5, 6, 8, 10, 11, 13, 15])
        );
        let image = gamma(&big).unwrap();
        assert_eq!(
            image.type_one.rows(),
            &[vec![1, 3, 5], vec![6, 8, 10], vec![11, 13, 15]]
        );
        assert_eq!(
            image.type_two.rows(),
            &[vec![2, 4], vec![7, 9], vec![12, 14]]
        );
    }

    #[test]
    fn injective_on_small_shapes() {
        let mut shapes: Vec<Partition> = (1..=6).map(Partition::two_row).collect();
        shapes.push(Partition::rectangle(4, 2));
        shapes.push(Partition::rectangle(4, 3));
        shapes.push(Partition::new(vec![5, 5, 3, 3, 2]).unwrap());
        for shape in shapes {
            let all = enumerate_tableaux(&shape);
            let images: BTreeSet<GammaImage> = all.iter().map(|t| gamma(t).unwrap()).collect();
            assert_eq!(images.len(), all.len(), "shape {shape}");
            for image in &images {
                let mut labels = image.type_one.entries();
                labels.extend(image.type_two.entries());
                assert_eq!(labels, (1..=all[0].len() as u32).collect());
            }
        }
    }

    #[test]
    fn increasing_tableau_validation() {
        assert!(IncreasingTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(IncreasingTableau::new(vec![vec![2, 1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        let json = r#"{"shape":[2,1],"rows":[[1,3],[2]]}"#;
        let t: IncreasingTableau = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), json);
        assert!(
            serde_json::from_str::<IncreasingTableau>(r#"{"shape":[3],"rows":[[1,3],[2]]}"#)
                .is_err()
        );
    }

    #[test]
    fn rejects_invalid_input() {
        let broken = tab(&[2, 2], &[(1, 1, 1, V), (2, 1, 1, V)]);
        assert!(matches!(gamma(&broken), Err(Error::InvalidTableau(_))));
    }
}
