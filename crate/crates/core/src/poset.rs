//! Upper sets of `(Y_n, ≥)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::{dominates_unchecked, enumerate_partitions, Partition};

pub const DEFAULT_UPPER_SET_LIMIT: usize = 8;

/// All upward-closed subsets of `Y_n` under dominance, including `∅` and
/// `Y_n`. Refuses `n > limit`; the flow-based dominance checker does not
/// need this enumeration.
pub fn upper_sets(n: usize, limit: usize) -> Result<Vec<BTreeSet<Partition>>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "level for upper-set enumeration",
            value: n as u64,
            limit: limit as u64,
            hint: "; use the max-flow dominance checker instead",
        });
    }
    // Decreasing lex is a linear extension, so every element strictly above
    // `all[k]` has an index < k.
    let all = enumerate_partitions(n);
    let above: Vec<Vec<usize>> = (0..all.len())
        .map(|k| {
            (0..k)
                .filter(|&j| dominates_unchecked(&all[j], &all[k]))
                .collect()
        })
        .collect();
    let masks = upper_set_masks(&above);
    Ok(masks
        .into_iter()
        .map(|mask| {
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| all[k].clone())
                .collect()
        })
        .collect())
}

/// Membership vectors of the upper sets, indices following the order of
/// [`enumerate_partitions`].
pub(crate) fn upper_set_masks(above: &[Vec<usize>]) -> Vec<Vec<bool>> {
    fn rec(k: usize, above: &[Vec<usize>], cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if k == above.len() {
            out.push(cur.clone());
            return;
        }
        cur.push(false);
        rec(k + 1, above, cur, out);
        cur.pop();
        if above[k].iter().all(|&j| cur[j]) {
            cur.push(true);
            rec(k + 1, above, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, above, &mut Vec::with_capacity(above.len()), &mut out);
    out
}
