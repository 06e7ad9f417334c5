//! Elementary box moves: dominance covers, the four-diagram configurations
//! `(λ, λ̂, μ, μ̂)` compared by the monotonicity inequalities, and the
//! corner classification used when projecting a pair of atoms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_partitions, BoxMove, Cell, Partition};

/// Position of the removed box row `r` relative to the move rows `i < î`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// `r < i`
    #[serde(rename = "r<i")]
    Above,
    /// `r > î`
    #[serde(rename = "r>i_hat")]
    Below,
    /// `i ≤ r ≤ î`; no inequality is asserted here.
    #[serde(rename = "between")]
    Between,
}

impl CaseTag {
    pub fn classify(r: usize, i: usize, i_hat: usize) -> Self {
        if r < i {
            CaseTag::Above
        } else if r > i_hat {
            CaseTag::Below
        } else {
            CaseTag::Between
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Above => "r<i",
            CaseTag::Below => "r>i_hat",
            CaseTag::Between => "between",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `λ, λ̂ ∈ Y_n` and `μ, μ̂ ∈ Y_{n-1}` where both pairs differ by the same
/// downward box move and `λ∖μ = λ̂∖μ̂` is the single cell `removed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveQuadruple {
    pub lambda: Partition,
    pub lambda_hat: Partition,
    pub mu: Partition,
    pub mu_hat: Partition,
    pub mv: BoxMove,
    pub removed: Cell,
    pub case: CaseTag,
}

impl MoveQuadruple {
    /// Builds the configuration from `λ`, the move and the removed cell,
    /// returning `None` if any of the four diagrams is invalid.
    pub fn build(lambda: &Partition, mv: BoxMove, removed: Cell) -> Option<Self> {
        if !mv.is_downward() || removed == mv.from() || removed == mv.to() {
            return None;
        }
        let lambda_hat = lambda.apply_move(&mv).ok()?;
        let mu = lambda.remove_box(removed).ok()?;
        let mu_hat = lambda_hat.remove_box(removed).ok()?;
        if mu.apply_move(&mv).ok()? != mu_hat {
            return None;
        }
        Some(Self {
            lambda: lambda.clone(),
            lambda_hat,
            mu,
            mu_hat,
            mv,
            removed,
            case: CaseTag::classify(removed.row, mv.from().row, mv.to().row),
        })
    }

    pub fn level(&self) -> usize {
        self.lambda.size()
    }

    /// Row `i` the box leaves.
    pub fn i(&self) -> usize {
        self.mv.from().row
    }

    /// Row `î` the box enters.
    pub fn i_hat(&self) -> usize {
        self.mv.to().row
    }

    pub fn r(&self) -> usize {
        self.removed.row
    }

    pub fn c(&self) -> usize {
        self.removed.col
    }
}

impl fmt::Display for MoveQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "λ=({}) λ̂=({}) μ=({}) μ̂=({}) move {} removed {} [{}]",
            self.lambda, self.lambda_hat, self.mu, self.mu_hat, self.mv, self.removed, self.case
        )
    }
}

/// All downward moves out of `λ`, with the resulting diagram, ordered by the
/// removed cell and then the target cell.
pub fn downward_moves(lambda: &Partition) -> Vec<(Partition, BoxMove)> {
    let mut out = Vec::new();
    for from in lambda.removable_corners() {
        let base = lambda.remove_box(from).expect("corner is removable");
        for to in base.addable_cells() {
            if to.row <= from.row {
                continue;
            }
            let mv = BoxMove::new(from, to).expect("rows differ");
            out.push((base.add_box(to).expect("cell is addable"), mv));
        }
    }
    out
}

/// Diagrams `λ̂` covered by `λ` in dominance order: the box moves one row
/// down or one column left.
pub fn covers(lambda: &Partition) -> Vec<(Partition, BoxMove)> {
    downward_moves(lambda)
        .into_iter()
        .filter(|(_, mv)| mv.to().row == mv.from().row + 1 || mv.to().col + 1 == mv.from().col)
        .collect()
}

/// Every configuration at level `n`, ordered by `λ` (decreasing lex), then
/// the move, then the removed cell. Includes the `between` cases.
pub fn enumerate_move_quadruples(n: usize) -> Vec<MoveQuadruple> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        for (_, mv) in downward_moves(&lambda) {
            for removed in lambda.removable_corners() {
                if let Some(q) = MoveQuadruple::build(&lambda, mv, removed) {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Splits the diagrams `μ ↗ λ` by the row `r` of the removed box into
/// `r < i`, `i ≤ r ≤ î` and `r > î`. Each entry carries the removed cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CornerClasses {
    pub up: Vec<(Partition, Cell)>,
    pub eq: Vec<(Partition, Cell)>,
    pub down: Vec<(Partition, Cell)>,
}

pub fn classify_corners(lambda: &Partition, i: usize, i_hat: usize) -> CornerClasses {
    debug_assert!(i < i_hat);
    let mut classes = CornerClasses::default();
    for cell in lambda.removable_corners() {
        let mu = lambda.remove_box(cell).expect("corner is removable");
        let bucket = match CaseTag::classify(cell.row, i, i_hat) {
            CaseTag::Above => &mut classes.up,
            CaseTag::Between => &mut classes.eq,
            CaseTag::Below => &mut classes.down,
        };
        bucket.push((mu, cell));
    }
    classes
}
