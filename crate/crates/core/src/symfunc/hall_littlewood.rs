use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moves::{enumerate_move_quadruples, MoveQuadruple};
use crate::partition::Partition;
use crate::poly::{eval_ratio, RationalPoly1};
use crate::scalar::Ring;
use crate::verdict::{InstanceVerdict, VerdictReport};
use crate::{fmt_rat, Rat};

use super::lr::remove_horizontal_strips;

/// Largest `N` accepted by the permutation-sum oracle.
pub const SYMMETRIZATION_MAX_VARS: usize = 8;

/// `ψ_{λ/μ}(t) = Π_{j∈J} (1 − t^{m_j(μ)})` where `J` collects the `j ≥ 1`
/// with `θ'_j = 0` and `θ'_{j+1} = 1`, `θ' = λ' − μ'`.
fn psi<R: Ring>(lambda: &Partition, mu: &Partition, t: &R) -> R {
    let mut out = R::one();
    for j in 1..=lambda.part(1) {
        let th_j = lambda.column_length(j) - mu.column_length(j);
        let th_next = lambda.column_length(j + 1) - mu.column_length(j + 1);
        if th_j == 0 && th_next == 1 {
            out = out * (R::one() - t.pow_u(mu.multiplicity(j) as u32));
        }
    }
    out
}

fn check_vars(lambda: &Partition, n_vars: usize) -> Result<()> {
    if n_vars < lambda.length() {
        return Err(Error::TooFewVariables {
            n_vars,
            length: lambda.length(),
            partition: lambda.to_string(),
        });
    }
    Ok(())
}

struct Branching<'a, R> {
    xs: &'a [R],
    t: &'a R,
    memo: HashMap<(Partition, usize), R>,
}

impl<R: Ring> Branching<'_, R> {
    /// `P_λ(x_1, …, x_m; t)`.
    fn p(&mut self, lambda: &Partition, m: usize) -> R {
        if lambda.length() > m {
            return R::zero();
        }
        if m == 0 {
            return R::one();
        }
        let key = (lambda.clone(), m);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let x = self.xs[m - 1].clone();
        let mut total = R::zero();
        for k in 0..=lambda.part(1) {
            for mu in remove_horizontal_strips(lambda, k) {
                if mu.length() > m - 1 {
                    continue;
                }
                let rest = self.p(&mu, m - 1);
                if rest.is_zero() {
                    continue;
                }
                total = total + psi(lambda, &mu, self.t) * x.pow_u(k as u32) * rest;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `P_λ(x_1, …, x_N; t)` by the branching rule over horizontal strips,
/// evaluated in any ring (numbers, or polynomials in `t`).
pub fn hl_p_at<R: Ring>(lambda: &Partition, xs: &[R], t: &R) -> Result<R> {
    check_vars(lambda, xs.len())?;
    let mut b = Branching {
        xs,
        t,
        memo: HashMap::new(),
    };
    Ok(b.p(lambda, xs.len()))
}

/// `b_λ(t) = Π_i Π_{j=1}^{m_i(λ)} (1 − t^j)`.
pub fn b_lambda<R: Ring>(lambda: &Partition, t: &R) -> R {
    let mut out = R::one();
    let mut k = 0;
    while k < lambda.length() {
        let part = lambda.parts()[k];
        let m = lambda.multiplicity(part);
        for j in 1..=m {
            out = out * (R::one() - t.pow_u(j as u32));
        }
        k += m;
    }
    out
}

fn warn_t(t: &Rat) {
    if t < &Rat::zero() || t > &Rat::one() {
        log::warn!("t = {} lies outside [0, 1]", fmt_rat(t));
    }
}

/// `P_λ(1^N; t)`.
pub fn hl_p(lambda: &Partition, n_vars: usize, t: &Rat) -> Result<Rat> {
    warn_t(t);
    hl_p_at(lambda, &vec![Rat::one(); n_vars], t)
}

/// `Q_λ(1^N; t) = b_λ(t) P_λ(1^N; t)`.
pub fn hl_q(lambda: &Partition, n_vars: usize, t: &Rat) -> Result<Rat> {
    Ok(b_lambda(lambda, t) * hl_p(lambda, n_vars, t)?)
}

/// `Q_λ(x_1, …, x_N; t)` at arbitrary points.
pub fn hl_q_at<R: Ring>(lambda: &Partition, xs: &[R], t: &R) -> Result<R> {
    Ok(b_lambda(lambda, t) * hl_p_at(lambda, xs, t)?)
}

/// `P_λ(1^N; t)` as a polynomial in `t`.
pub fn hl_p_poly(lambda: &Partition, n_vars: usize) -> Result<RationalPoly1> {
    hl_p_at(lambda, &vec![RationalPoly1::one(); n_vars], &RationalPoly1::t())
}

pub fn hl_q_poly(lambda: &Partition, n_vars: usize) -> Result<RationalPoly1> {
    Ok(b_lambda(lambda, &RationalPoly1::t()) * hl_p_poly(lambda, n_vars)?)
}

/// Literal permutation-sum definition of `Q_λ(x_1, …, x_N; t)`, summing
/// over the symmetric group on the `N` variables.
pub fn hl_q_symmetrization(lambda: &Partition, xs: &[Rat], t: &Rat) -> Result<Rat> {
    let n = xs.len();
    check_vars(lambda, n)?;
    if n > SYMMETRIZATION_MAX_VARS {
        return Err(Error::LimitExceeded {
            what: "N",
            value: n as u64,
            limit: SYMMETRIZATION_MAX_VARS as u64,
            hint: " (the sum has N! terms)",
        });
    }
    for a in 0..n {
        for b in a + 1..n {
            if xs[a] == xs[b] {
                return Err(Error::RepeatedPoints(a, b));
            }
        }
    }
    let mut prefactor = (Rat::one() - t).pow_u(n as u32);
    for i in 1..=n - lambda.length() {
        let d = Rat::one() - t.pow_u(i as u32);
        if d.is_zero() {
            return Err(Error::Precondition(format!(
                "1 - t^{i} vanishes at t = {}; the normalization is singular",
                fmt_rat(t)
            )));
        }
        prefactor /= d;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rat::zero();
    permute(&mut perm, 0, &mut |sigma| {
        let mut term = Rat::one();
        for (i, &s) in sigma.iter().enumerate() {
            term *= xs[s].pow_u(lambda.part(i + 1) as u32);
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&xs[sigma[i]], &xs[sigma[j]]);
                term *= (a - t * b) / (a - b);
            }
        }
        total += term;
    });
    Ok(prefactor * total)
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Memoized `P_λ(1^N; t)` polynomials for one `N`.
pub struct HlCache {
    n_vars: usize,
    polys: Mutex<HashMap<Partition, RationalPoly1>>,
}

impl HlCache {
    pub fn new(n_vars: usize) -> Self {
        Self {
            n_vars,
            polys: Mutex::new(HashMap::new()),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn p_poly(&self, lambda: &Partition) -> Result<RationalPoly1> {
        if let Some(p) = self.polys.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let p = hl_p_poly(lambda, self.n_vars)?;
        self.polys.lock().unwrap().insert(lambda.clone(), p.clone());
        Ok(p)
    }

    pub fn q_poly(&self, lambda: &Partition) -> Result<RationalPoly1> {
        Ok(b_lambda(lambda, &RationalPoly1::t()) * self.p_poly(lambda)?)
    }
}

/// `(1 − t^{λ'_c − λ'_{c+1}}) Q_μ(1^N; t) / Q_λ(1^N; t)` as a numerator and
/// denominator in `t`, together with the prefactor exponent.
fn side(
    cache: &HlCache,
    outer: &Partition,
    inner: &Partition,
    c: usize,
) -> Result<(RationalPoly1, RationalPoly1, usize)> {
    let a = outer.column_length(c) - outer.column_length(c + 1);
    let num = RationalPoly1::one_minus_t_pow(a as u32) * cache.q_poly(inner)?;
    Ok((num, cache.q_poly(outer)?, a))
}

fn conj24_with(q: &MoveQuadruple, cache: &HlCache, t: &Rat) -> Result<InstanceVerdict> {
    check_vars(&q.lambda_hat, cache.n_vars())?;
    let (nh, dh, ah) = side(cache, &q.lambda_hat, &q.mu_hat, q.c())?;
    let (np, dp, ap) = side(cache, &q.lambda, &q.mu, q.c())?;
    let eval = |n: &RationalPoly1, d: &RationalPoly1| {
        eval_ratio(n, d, t).ok_or_else(|| {
            Error::Precondition(format!("Q has a pole at t = {}", fmt_rat(t)))
        })
    };
    let lhs = eval(&nh, &dh)?;
    let rhs = eval(&np, &dp)?;
    let mut v = InstanceVerdict::new(q, &lhs, &rhs)
        .with_detail("N", cache.n_vars())
        .with_detail("t", fmt_rat(t));
    if ah == 0 || ap == 0 {
        v = v.with_detail("vanishing_prefactor", true);
    }
    Ok(v)
}

/// Compares the hatted side (lhs) with the plain side (rhs) at `t`. Both
/// sides are rational functions of `t`; common factors are cancelled before
/// substituting, so `t = 1` yields the limiting values.
pub fn check_conj24(q: &MoveQuadruple, n_vars: usize, t: &Rat) -> Result<InstanceVerdict> {
    warn_t(t);
    conj24_with(q, &HlCache::new(n_vars), t)
}

/// All configurations with `n ≤ n_max`, every `N` from `ℓ(λ̂)` to
/// `n_vars_max`, and every `t` in the grid.
pub fn sweep_conj24(n_max: usize, n_vars_max: usize, ts: &[Rat]) -> Result<VerdictReport> {
    ts.iter().for_each(warn_t);
    let caches: Vec<HlCache> = (0..=n_vars_max).map(HlCache::new).collect();
    let quads: Vec<MoveQuadruple> = (1..=n_max).flat_map(enumerate_move_quadruples).collect();
    let jobs: Vec<(&MoveQuadruple, usize, &Rat)> = quads
        .iter()
        .flat_map(|q| {
            (q.lambda_hat.length()..=n_vars_max)
                .flat_map(move |nv| ts.iter().map(move |t| (q, nv, t)))
        })
        .collect();
    let rows = jobs
        .par_iter()
        .map(|(q, nv, t)| conj24_with(q, &caches[*nv], t))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerdictReport::new("verify conj-hl", rows)
        .param("n_max", n_max)
        .param("N", n_vars_max)
        .param(
            "t",
            crate::verdict::serde_value::Value::List(
                ts.iter().map(|t| fmt_rat(t).into()).collect(),
            ),
        ))
}
