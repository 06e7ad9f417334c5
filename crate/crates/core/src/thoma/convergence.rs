use num_traits::Zero;

use crate::error::{Error, Result};
use crate::measure::{project_atom_direct, tv_distance};
use crate::partition::Partition;
use crate::Rat;

use super::params::ThomaParams;
use super::sampler::extreme_measure;

/// Deterministic `λ(k) ⊢ k` with `λ_i(k)/k → α_i` and `λ'_j(k)/k → β_j`:
/// rows `i ≥ 2` have exactly `⌊α_i k⌋` boxes, columns `j` have exactly
/// `⌊β_j k⌋` boxes whenever that exceeds `|α|`, and row 1 takes whatever
/// is left.
pub fn staircase_sequence(params: &ThomaParams, k: usize) -> Result<Partition> {
    if !params.gamma().is_zero() {
        return Err(Error::Hypothesis(format!(
            "staircase diagrams need Σα + Σβ = 1; got {params}"
        )));
    }
    let kk = Rat::from_integer(k.into());
    let floor = |x: &Rat| (x * &kk).floor().to_integer().try_into().unwrap_or(usize::MAX);
    let mut rows: Vec<usize> = params.alpha().iter().map(floor).collect();
    let top = rows.len();
    let heights: Vec<usize> = params.beta().iter().map(floor).collect();
    let hanging = heights.iter().filter(|&&h| h > top).count();
    if let Some(&last) = rows.last() {
        if last < hanging {
            return Err(Error::Infeasible {
                k,
                reason: format!(
                    "row {top} has {last} boxes but {hanging} columns hang below it; \
                     feasible once ⌊α_last k⌋ ≥ |β|"
                ),
            });
        }
    }
    let depth = heights.iter().copied().max().unwrap_or(0);
    for t in top + 1..=depth {
        rows.push(heights.iter().filter(|&&h| h >= t).count());
    }
    let used: usize = rows.iter().sum();
    if used > k {
        return Err(Error::Infeasible {
            k,
            reason: format!("rows and columns already use {used} boxes"),
        });
    }
    if rows.is_empty() {
        rows.push(0);
    }
    rows[0] += k - used;
    rows.retain(|&r| r > 0);
    Partition::new(rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub k: usize,
    pub r: usize,
    /// Exact total variation distance.
    pub tv: Rat,
}

/// `d_var(π^k_r δ_{λ(k)}, M_r^{(α,β)})` for each `k`.
pub fn convergence_experiment(
    params: &ThomaParams,
    r: usize,
    ks: &[usize],
) -> Result<Vec<ConvergenceRow>> {
    if let Some(&k) = ks.iter().find(|&&k| k < r) {
        return Err(Error::BadProjection { level: k, target: r });
    }
    let target = extreme_measure(r, params);
    ks.iter()
        .map(|&k| {
            let lambda = staircase_sequence(params, k)?;
            let projected = project_atom_direct(&lambda, r)?;
            Ok(ConvergenceRow {
                k,
                r,
                tv: tv_distance(&projected, &target)?,
            })
        })
        .collect()
}
