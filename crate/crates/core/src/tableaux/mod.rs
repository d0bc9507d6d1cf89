//! Partitions, domino tilings and domino tableaux.
//!
//! Cells are 1-indexed `(row, col)` pairs in English notation: row 1 is the
//! top row and every row is left-justified.

mod domino;
mod enumerate;
mod partition;
mod stats;

pub use domino::{
    Domino, DominoTableau, DominoTiling, Orientation, Placement, Validity, Violation,
};
pub use enumerate::{
    count_linear_extensions, count_tableaux, enumerate_tableaux, enumerate_tableaux_with,
    enumerate_tilings, linear_extensions,
};
pub use partition::Partition;
pub use stats::{
    descent_set, maj, maj_polynomial, maj_polynomial_with, stackings, tiling_stackings, Stacking,
};
