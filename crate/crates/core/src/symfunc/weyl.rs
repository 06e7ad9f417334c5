use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moves::{enumerate_move_quadruples, MoveQuadruple};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::verdict::{InstanceVerdict, VerdictReport};
use crate::Rat;

/// `s_λ(1^N) = Π_{a<b≤N} (λ_a − a − λ_b + b)/(b − a)`.
pub fn schur_ones<T: Scalar>(lambda: &Partition, n_vars: usize) -> Result<T> {
    if n_vars < lambda.length() {
        return Err(Error::TooFewVariables {
            n_vars,
            length: lambda.length(),
            partition: lambda.to_string(),
        });
    }
    let shifted: Vec<i64> = (1..=n_vars)
        .map(|a| lambda.part(a) as i64 - a as i64)
        .collect();
    let mut num = T::one();
    let mut den = T::one();
    for a in 0..n_vars {
        for b in a + 1..n_vars {
            num = num * T::from_int(shifted[a] - shifted[b]);
            den = den * T::from_int((b - a) as i64);
        }
    }
    Ok(num / den)
}

/// Compares `s_λ(1^N) s_μ̂(1^N)` (lhs) with `s_λ̂(1^N) s_μ(1^N)` (rhs).
pub fn check_prop22(q: &MoveQuadruple, n_vars: usize) -> Result<InstanceVerdict> {
    let s = |l: &Partition| schur_ones::<Rat>(l, n_vars);
    let lhs = s(&q.lambda)? * s(&q.mu_hat)?;
    let rhs = s(&q.lambda_hat)? * s(&q.mu)?;
    Ok(InstanceVerdict::new(q, &lhs, &rhs).with_detail("N", n_vars))
}

/// Sign of `x²(y²−1) − (x²−1)y²` with `x = λ_r−r−λ_i+i` and
/// `y = λ_r−r−λ_î+î−1`: the factors left after cancelling the Weyl products.
pub fn reduced_form_ordering(q: &MoveQuadruple) -> Ordering {
    let part = |row: usize| q.lambda.part(row) as i128;
    let (r, i, ih) = (q.r() as i128, q.i() as i128, q.i_hat() as i128);
    let x = part(q.r()) - r - part(q.i()) + i;
    let y = part(q.r()) - r - part(q.i_hat()) + ih - 1;
    (x * x * (y * y - 1)).cmp(&((x * x - 1) * y * y))
}

/// Sweeps all configurations with `n ≤ n_max` and every
/// `N ∈ {ℓ(λ̂), …, n_vars_max}`. Each row records whether the reduced
/// two-variable form orders the sides the same way as the direct products.
pub fn sweep_prop22(n_max: usize, n_vars_max: usize) -> VerdictReport {
    let quads: Vec<MoveQuadruple> = (1..=n_max).flat_map(enumerate_move_quadruples).collect();
    let rows: Vec<InstanceVerdict> = quads
        .par_iter()
        .flat_map_iter(|q| {
            let reduced = reduced_form_ordering(q);
            (q.lambda_hat.length()..=n_vars_max).map(move |nv| {
                let v = check_prop22(q, nv).expect("N ≥ ℓ(λ̂) ≥ every length involved");
                let direct = crate::parse_rat(&v.lhs)
                    .unwrap()
                    .cmp(&crate::parse_rat(&v.rhs).unwrap());
                v.with_detail("reduced_agrees", direct == reduced)
            })
        })
        .collect();
    VerdictReport::new("verify prop22", rows)
        .param("n_max", n_max)
        .param("N", n_vars_max)
}
