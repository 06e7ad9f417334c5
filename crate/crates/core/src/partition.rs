//! Partitions, cells and box moves.
//!
//! Cells are 1-based `(row, column)` pairs with the row index growing
//! downward. A partition serializes as comma-separated parts (`"3,1,1"`);
//! the empty partition serializes as the empty string.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on the parts, which refines the
/// dominance order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Moving the box at `from` to the position `to`. The two rows must differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoxMove {
    from: Cell,
    to: Cell,
}

impl BoxMove {
    pub fn new(from: Cell, to: Cell) -> Result<Self> {
        if from.row == to.row {
            return Err(Error::InvalidMove(format!(
                "{from} -> {to} keeps the box in the same row"
            )));
        }
        Ok(Self { from, to })
    }

    pub fn from(&self) -> Cell {
        self.from
    }

    pub fn to(&self) -> Cell {
        self.to
    }

    /// True when the box moves to a lower row, which lowers the diagram in
    /// dominance order.
    pub fn is_downward(&self) -> bool {
        self.to.row > self.from.row
    }
}

impl fmt::Display for BoxMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::ParsePartition(
                parts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            ));
        }
        Ok(Self(parts))
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length `λ_i` for a 1-based row index; zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Column length `λ'_j` for a 1-based column index.
    pub fn column_length(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    /// Number of parts equal to `k` (k ≥ 1).
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(1);
        Self((1..=width).map(|j| self.column_length(j)).collect())
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row) >= cell.col
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.length())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.length() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    pub fn is_removable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && self.part(cell.row) == cell.col
            && self.part(cell.row + 1) < cell.col
    }

    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && self.part(cell.row) + 1 == cell.col
            && (cell.row == 1 || self.part(cell.row - 1) >= cell.col)
    }

    pub fn remove_box(&self, cell: Cell) -> Result<Self> {
        if !self.is_removable(cell) {
            return Err(Error::NotRemovable {
                cell,
                partition: self.to_string(),
            });
        }
        let mut parts = self.0.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn add_box(&self, cell: Cell) -> Result<Self> {
        if !self.is_addable(cell) {
            return Err(Error::NotAddable {
                cell,
                partition: self.to_string(),
            });
        }
        let mut parts = self.0.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Self(parts))
    }

    /// Removes `mv.from()` and then adds `mv.to()`.
    pub fn apply_move(&self, mv: &BoxMove) -> Result<Self> {
        self.remove_box(mv.from())?.add_box(mv.to())
    }

    /// Partial sums `λ_1 + … + λ_k` for `k = 1..=len`.
    pub fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (1..=len)
            .map(|k| {
                acc += self.part(k);
                acc
            })
            .collect()
    }
}

/// Dominance order `λ ≥ μ`, defined only for diagrams of the same size.
pub fn dominance_geq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(dominates_unchecked(lambda, mu))
}

pub(crate) fn dominates_unchecked(lambda: &Partition, mu: &Partition) -> bool {
    let rows = lambda.length().max(mu.length());
    let (mut a, mut b) = (0usize, 0usize);
    for k in 1..=rows {
        a += lambda.part(k);
        b += mu.part(k);
        if a < b {
            return false;
        }
    }
    true
}

/// All partitions of `n` in decreasing lexicographic order, starting at `(n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() || trimmed == "∅" {
            return Ok(Self::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Self::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
