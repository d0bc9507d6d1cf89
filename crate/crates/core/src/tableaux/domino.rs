use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// An unlabeled domino anchored at its top-left cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub row: u32,
    pub col: u32,
    pub orient: Orientation,
}

impl Placement {
    pub fn new(row: u32, col: u32, orient: Orientation) -> Self {
        Self { row, col, orient }
    }

    pub fn cells(&self) -> [(u32, u32); 2] {
        match self.orient {
            Orientation::Horizontal => [(self.row, self.col), (self.row, self.col + 1)],
            Orientation::Vertical => [(self.row, self.col), (self.row + 1, self.col)],
        }
    }

    /// The north-east-most cell: the right cell of a horizontal domino, the
    /// top cell of a vertical one.
    pub fn ne_cell(&self) -> (u32, u32) {
        match self.orient {
            Orientation::Horizontal => (self.row, self.col + 1),
            Orientation::Vertical => (self.row, self.col),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Domino {
    pub label: u32,
    pub row: u32,
    pub col: u32,
    pub orient: Orientation,
}

impl Domino {
    pub fn new(label: u32, placement: Placement) -> Self {
        Self {
            label,
            row: placement.row,
            col: placement.col,
            orient: placement.orient,
        }
    }

    pub fn placement(&self) -> Placement {
        Placement::new(self.row, self.col, self.orient)
    }

    pub fn cells(&self) -> [(u32, u32); 2] {
        self.placement().cells()
    }

    pub fn ne_cell(&self) -> (u32, u32) {
        self.placement().ne_cell()
    }

    pub fn is_horizontal(&self) -> bool {
        self.orient == Orientation::Horizontal
    }
}

/// A tiling of a shape by unlabeled dominoes, kept in generation order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominoTiling {
    pub shape: Partition,
    pub placements: Vec<Placement>,
}

/// A labeled domino tiling. Dominoes are stored sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawTableau")]
pub struct DominoTableau {
    shape: Partition,
    dominoes: Vec<Domino>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Partition,
    dominoes: Vec<Domino>,
}

impl From<RawTableau> for DominoTableau {
    fn from(raw: RawTableau) -> Self {
        DominoTableau::new(raw.shape, raw.dominoes)
    }
}

impl DominoTableau {
    /// Wraps a candidate without validating it; see [`DominoTableau::validate`].
    pub fn new(shape: Partition, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort_by_key(|d| d.label);
        Self { shape, dominoes }
    }

    /// Labels the placements of `tiling` with `labels[i]` on placement `i`.
    pub fn from_tiling(tiling: &DominoTiling, labels: &[u32]) -> Self {
        let dominoes = tiling
            .placements
            .iter()
            .zip(labels)
            .map(|(&p, &l)| Domino::new(l, p))
            .collect();
        Self::new(tiling.shape.clone(), dominoes)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn domino(&self, label: u32) -> Option<&Domino> {
        let i = (label as usize).checked_sub(1)?;
        match self.dominoes.get(i) {
            Some(d) if d.label == label => Some(d),
            _ => self.dominoes.iter().find(|d| d.label == label),
        }
    }

    pub fn tiling(&self) -> DominoTiling {
        DominoTiling {
            shape: self.shape.clone(),
            placements: self.dominoes.iter().map(Domino::placement).collect(),
        }
    }

    pub fn validate(&self) -> Validity {
        validate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Converts a validation failure into an error.
    pub fn ensure_valid(&self) -> Result<(), Error> {
        match self.validate() {
            Validity::Valid => Ok(()),
            Validity::Invalid(v) => Err(Error::InvalidTableau(
                v.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            )),
        }
    }

    /// Transpose across the main diagonal.
    pub fn transpose(&self) -> DominoTableau {
        let dominoes = self
            .dominoes
            .iter()
            .map(|d| Domino {
                label: d.label,
                row: d.col,
                col: d.row,
                orient: match d.orient {
                    Orientation::Horizontal => Orientation::Vertical,
                    Orientation::Vertical => Orientation::Horizontal,
                },
            })
            .collect();
        DominoTableau::new(self.shape.conjugate(), dominoes)
    }
}

impl fmt::Display for DominoTableau {
    /// Renders each cell with the label of the domino covering it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid = label_grid(self);
        let width = self.dominoes.len().max(1).to_string().len();
        for (r, row) in grid.iter().enumerate() {
            let line: Vec<String> = row
                .iter()
                .map(|cell| match cell {
                    Some(l) => format!("{l:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn label_grid(t: &DominoTableau) -> Vec<Vec<Option<u32>>> {
    let mut grid: Vec<Vec<Option<u32>>> = t
        .shape
        .parts()
        .iter()
        .map(|&len| vec![None; len as usize])
        .collect();
    for d in &t.dominoes {
        for (r, c) in d.cells() {
            if t.shape.contains(r, c) {
                grid[r as usize - 1][c as usize - 1] = Some(d.label);
            }
        }
    }
    grid
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    OddWeight {
        weight: u64,
    },
    OutsideShape {
        label: u32,
        row: u32,
        col: u32,
    },
    Overlap {
        row: u32,
        col: u32,
        labels: [u32; 2],
    },
    Uncovered {
        row: u32,
        col: u32,
    },
    LabelOutOfRange {
        label: u32,
    },
    DuplicateLabel {
        label: u32,
    },
    MissingLabel {
        label: u32,
    },
    RowNotIncreasing {
        row: u32,
        col: u32,
        left: u32,
        right: u32,
    },
    ColumnNotIncreasing {
        row: u32,
        col: u32,
        upper: u32,
        lower: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OddWeight { weight } => write!(f, "shape has odd weight {weight}"),
            Violation::OutsideShape { label, row, col } => {
                write!(f, "domino {label} covers ({row},{col}) outside the shape")
            }
            Violation::Overlap { row, col, labels } => write!(
                f,
                "dominoes {} and {} overlap at ({row},{col})",
                labels[0], labels[1]
            ),
            Violation::Uncovered { row, col } => write!(f, "cell ({row},{col}) is uncovered"),
            Violation::LabelOutOfRange { label } => write!(f, "label {label} out of range"),
            Violation::DuplicateLabel { label } => write!(f, "label {label} is repeated"),
            Violation::MissingLabel { label } => write!(f, "label {label} is missing"),
            Violation::RowNotIncreasing {
                row,
                col,
                left,
                right,
            } => write!(
                f,
                "row {row}: {left} at column {col} is not below {right} to its right"
            ),
            Violation::ColumnNotIncreasing {
                row,
                col,
                upper,
                lower,
            } => write!(
                f,
                "column {col}: {upper} at row {row} is not below {lower} underneath"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Vec<Violation>),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Validity::Valid => &[],
            Validity::Invalid(v) => v,
        }
    }
}

/// Checks coverage, disjointness, that the labels are exactly `[n]`, and
/// that labels increase across every boundary between distinct dominoes,
/// both along rows and down columns. All violations are collected.
pub fn validate(t: &DominoTableau) -> Validity {
    let shape = &t.shape;
    let mut out = Vec::new();
    if shape.weight() % 2 == 1 {
        out.push(Violation::OddWeight {
            weight: shape.weight(),
        });
    }

    let mut grid: Vec<Vec<Option<u32>>> = shape
        .parts()
        .iter()
        .map(|&len| vec![None; len as usize])
        .collect();
    for d in &t.dominoes {
        for (r, c) in d.cells() {
            if !shape.contains(r, c) {
                out.push(Violation::OutsideShape {
                    label: d.label,
                    row: r,
                    col: c,
                });
                continue;
            }
            let slot = &mut grid[r as usize - 1][c as usize - 1];
            match slot {
                Some(prev) => out.push(Violation::Overlap {
                    row: r,
                    col: c,
                    labels: [*prev, d.label],
                }),
                None => *slot = Some(d.label),
            }
        }
    }
    for (r, c) in shape.cells() {
        if grid[r as usize - 1][c as usize - 1].is_none() {
            out.push(Violation::Uncovered { row: r, col: c });
        }
    }

    let n = t.dominoes.len() as u32;
    let mut seen = BTreeSet::new();
    for d in &t.dominoes {
        if d.label == 0 || d.label > n {
            out.push(Violation::LabelOutOfRange { label: d.label });
        } else if !seen.insert(d.label) {
            out.push(Violation::DuplicateLabel { label: d.label });
        }
    }
    for label in 1..=n {
        if !seen.contains(&label) {
            out.push(Violation::MissingLabel { label });
        }
    }

    let at = |r: u32, c: u32| -> Option<u32> {
        grid.get(r as usize - 1)?
            .get(c as usize - 1)
            .copied()
            .flatten()
    };
    for (r, c) in shape.cells() {
        let Some(here) = at(r, c) else { continue };
        if let Some(right) = at(r, c + 1) {
            if right < here {
                out.push(Violation::RowNotIncreasing {
                    row: r,
                    col: c,
                    left: here,
                    right,
                });
            }
        }
        if let Some(below) = at(r + 1, c) {
            if below < here {
                out.push(Violation::ColumnNotIncreasing {
                    row: r,
                    col: c,
                    upper: here,
                    lower: below,
                });
            }
        }
    }

    if out.is_empty() {
        Validity::Valid
    } else {
        Validity::Invalid(out)
    }
}
