//! Dimensions in the Young graph.
//!
//! `dim(λ)` counts increasing paths `∅ → λ`. [`dim_hook`] is the hook-length
//! product and the workhorse; [`dim_paths`] is the path recursion kept as an
//! independent route. [`skew_dim`] counts paths `μ → λ`.

mod unipotent;

use std::collections::HashMap;

use num_traits::{One, Zero};

pub use unipotent::{
    check_conj14, conj14_from_table, dim_t_edge_enum, dim_t_enum, jordan_type, DimTTable, UnipotentMatrix,
    DEFAULT_DIM_T_LIMIT, DEFAULT_DIM_T_MAX_P,
};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::moves::{enumerate_move_quadruples, MoveQuadruple};
use crate::partition::Partition;
use crate::verdict::{InstanceVerdict, Verdict, VerdictReport};
use crate::{Nat, Rat};

pub const DEFAULT_PATH_LIMIT: usize = 12;

pub fn factorial(n: usize) -> Nat {
    (1..=n).fold(Nat::one(), |acc, k| acc * k)
}

/// `|λ|! / Π hooks`.
pub fn dim_hook(lambda: &Partition) -> Nat {
    let conj = lambda.conjugate();
    let mut hooks = Nat::one();
    for i in 1..=lambda.length() {
        for j in 1..=lambda.part(i) {
            let arm = lambda.part(i) - j;
            let leg = conj.part(j) - i;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.size()) / hooks
}

/// `dim(λ) = Σ_{μ ↗ λ} dim(μ)`, memoized. Refuses `|λ| > limit`.
pub fn dim_paths(lambda: &Partition, limit: usize) -> Result<Nat> {
    if lambda.size() > limit {
        return Err(Error::LimitExceeded {
            what: "|λ| for path enumeration",
            value: lambda.size() as u64,
            limit: limit as u64,
            hint: "",
        });
    }
    fn rec(l: &Partition, memo: &mut HashMap<Partition, Nat>) -> Nat {
        if l.is_empty() {
            return Nat::one();
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let v: Nat = l
            .removable_corners()
            .into_iter()
            .map(|c| rec(&l.remove_box(c).expect("corner"), memo))
            .sum();
        memo.insert(l.clone(), v.clone());
        v
    }
    Ok(rec(lambda, &mut HashMap::new()))
}

/// Number of standard fillings of `λ/μ`, from the determinant
/// `|λ/μ|! · det[1 / (λ_a − μ_b − a + b)!]`.
pub fn skew_dim(lambda: &Partition, mu: &Partition) -> Result<Nat> {
    check_containment(lambda, mu)?;
    let rows = lambda.length();
    if rows == 0 {
        return Ok(Nat::one());
    }
    let skew = lambda.size() - mu.size();
    let mut fact_cache: Vec<Nat> = vec![Nat::one()];
    let mut inv_fact = |k: i64| -> Rat {
        if k < 0 {
            return Rat::zero();
        }
        let k = k as usize;
        while fact_cache.len() <= k {
            let next = fact_cache.last().unwrap() * fact_cache.len();
            fact_cache.push(next);
        }
        Rat::new(1.into(), fact_cache[k].clone().into())
    };
    let matrix: Vec<Vec<Rat>> = (1..=rows)
        .map(|a| {
            (1..=rows)
                .map(|b| {
                    let k = lambda.part(a) as i64 - mu.part(b) as i64 - a as i64 + b as i64;
                    inv_fact(k)
                })
                .collect()
        })
        .collect();
    let value = determinant(matrix) * Rat::from_integer(factorial(skew).into());
    debug_assert!(value.is_integer());
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("skew dimension is nonnegative"))
}

pub(crate) fn check_containment(lambda: &Partition, mu: &Partition) -> Result<()> {
    for row in 1..=mu.length() {
        if mu.part(row) > lambda.part(row) {
            return Err(Error::NotContained {
                outer: lambda.to_string(),
                inner: mu.to_string(),
                row,
                inner_len: mu.part(row),
                outer_len: lambda.part(row),
            });
        }
    }
    Ok(())
}

pub fn dim_ratio(mu: &Partition, lambda: &Partition) -> Rat {
    Rat::new(dim_hook(mu).into(), dim_hook(lambda).into())
}

/// Compares `dim(μ̂)/dim(λ̂)` (lhs) against `dim(μ)/dim(λ)` (rhs).
pub fn check_cor23(q: &MoveQuadruple) -> InstanceVerdict {
    let lhs = dim_ratio(&q.mu_hat, &q.lambda_hat);
    let rhs = dim_ratio(&q.mu, &q.lambda);
    InstanceVerdict::new(q, &lhs, &rhs)
}

pub fn sweep_cor23(n_max: usize) -> VerdictReport {
    let rows: Vec<InstanceVerdict> = (1..=n_max)
        .flat_map(enumerate_move_quadruples)
        .map(|q| check_cor23(&q))
        .collect();
    debug_assert!(rows.iter().all(|r| r.verdict != Verdict::Fails));
    VerdictReport::new("verify cor23", rows).param("n_max", n_max)
}

/// Lead coefficient of the degree-`d` polynomial sampled at consecutive
/// integers: `Δ^d f / d!`.
pub fn leading_coefficient(samples: &[Rat]) -> Rat {
    let mut diffs = samples.to_vec();
    let d = samples.len() - 1;
    for _ in 0..d {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    &diffs[0] / Rat::from_integer(factorial(d).into())
}
