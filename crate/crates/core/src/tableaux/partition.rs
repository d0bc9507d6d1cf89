use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition after sorting decreasingly and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The `rows x cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if rows == 0 || cols == 0 {
            return Self::empty();
        }
        Self {
            parts: vec![cols; rows as usize],
        }
    }

    /// The two-row shape `(n, n)`.
    pub fn two_row(n: u32) -> Self {
        Self::rectangle(2, n)
    }

    /// The hook `(n, 1^m)`.
    pub fn hook(n: u32, m: u32) -> Self {
        let mut parts = vec![n];
        parts.extend(std::iter::repeat_n(1, m as usize));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-indexed); zero past the last row.
    pub fn row_len(&self, r: u32) -> u32 {
        if r == 0 {
            return 0;
        }
        self.parts.get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: u32, col: u32) -> bool {
        col >= 1 && col <= self.row_len(row)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| (i as u32 + 1, c)))
    }

    /// `Some(n)` when the shape is `(n, n)` with `n >= 1`.
    pub fn two_row_width(&self) -> Option<u32> {
        match self.parts[..] {
            [a, b] if a == b => Some(a),
            _ => None,
        }
    }

    /// `Some((rows, cols))` for a nonempty rectangle.
    pub fn as_rectangle(&self) -> Option<(u32, u32)> {
        let first = *self.parts.first()?;
        self.parts
            .iter()
            .all(|&p| p == first)
            .then_some((self.parts.len() as u32, first))
    }

    /// `Some((n, m))` when the shape is the hook `(n, 1^m)`.
    pub fn as_hook(&self) -> Option<(u32, u32)> {
        let (&first, rest) = self.parts.split_first()?;
        rest.iter()
            .all(|&p| p == 1)
            .then_some((first, rest.len() as u32))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts such as `5,5,3,3,2`. The empty string
    /// is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidPartition(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
