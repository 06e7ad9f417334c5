use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::scaled_determinant;
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::Rat;

use super::params::{power_sum, ThomaParams};

/// `h_0, …, h_d` from the power sums by Newton's identities
/// `k h_k = Σ_{i=1}^k p_i h_{k−i}`.
pub fn complete_newton<T: Scalar>(params: &ThomaParams, degree: usize) -> Vec<T> {
    let p: Vec<T> = (1..=degree)
        .map(|k| T::from_rational(&power_sum(params, k).expect("k ≥ 1")))
        .collect();
    let mut h = vec![T::one()];
    for k in 1..=degree {
        let mut acc = T::zero();
        for i in 1..=k {
            acc = acc + p[i - 1].clone() * h[k - i].clone();
        }
        h.push(acc / T::from_int(k as i64));
    }
    h
}

/// `h_0, …, h_d` as coefficients of `Π 1/(1−α_i z) · Π (1+β_j z) · e^{γz}`.
/// Every factor has nonnegative coefficients, so no cancellation occurs.
pub fn complete_product<T: Scalar>(params: &ThomaParams, degree: usize) -> Vec<T> {
    series(params.alpha(), params.beta(), &params.gamma(), degree)
}

fn series<T: Scalar>(poles: &[Rat], zeros: &[Rat], gamma: &Rat, degree: usize) -> Vec<T> {
    let mut c = vec![T::zero(); degree + 1];
    c[0] = T::one();
    for a in poles {
        let a = T::from_rational(a);
        for k in 1..=degree {
            c[k] = c[k].clone() + a.clone() * c[k - 1].clone();
        }
    }
    for b in zeros {
        let b = T::from_rational(b);
        for k in (1..=degree).rev() {
            c[k] = c[k].clone() + b.clone() * c[k - 1].clone();
        }
    }
    if !gamma.is_zero() {
        let g = T::from_rational(gamma);
        let mut exp = vec![T::one()];
        for k in 1..=degree {
            exp.push(exp[k - 1].clone() * g.clone() / T::from_int(k as i64));
        }
        let mut out = vec![T::zero(); degree + 1];
        for (i, ci) in c.iter().enumerate() {
            for (j, ej) in exp.iter().enumerate().take(degree + 1 - i) {
                out[i + j] = out[i + j].clone() + ci.clone() * ej.clone();
            }
        }
        c = out;
    }
    c
}

/// The specialization `s_λ ↦ s_λ(α, β)` up to a fixed degree, through
/// Jacobi–Trudi over the product-form `h_k` and `e_k` tables. Values are
/// cached per shape.
///
/// Floats are fast but Jacobi–Trudi cancels badly once diagrams have
/// hundreds of boxes (a two-row value can be 10^-150 of the terms it is
/// computed from); exact scalars have no such problem.
pub struct Specialization<T: Scalar> {
    params: ThomaParams,
    h: Vec<T>,
    e: Vec<T>,
    cache: Mutex<HashMap<Partition, (T, i64)>>,
}

impl<T: Scalar> Specialization<T> {
    pub fn new(params: &ThomaParams, degree: usize) -> Self {
        let h = complete_product(params, degree);
        let e = complete_product(&params.swapped(), degree);
        Self {
            params: params.clone(),
            h,
            e,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &ThomaParams {
        &self.params
    }

    pub fn degree(&self) -> usize {
        self.h.len() - 1
    }

    /// Recomputes the tables if `degree` exceeds the current one.
    pub fn ensure_degree(&mut self, degree: usize) {
        if degree > self.degree() {
            let cache = std::mem::take(self.cache.get_mut().unwrap());
            *self = Self::new(&self.params, degree);
            *self.cache.get_mut().unwrap() = cache;
        }
    }

    /// `h_k(α, β)`; zero for negative `k`.
    pub fn h(&self, k: i64) -> T {
        index(&self.h, k)
    }

    /// `e_k(α, β) = h_k(β, α)`.
    pub fn e(&self, k: i64) -> T {
        index(&self.e, k)
    }

    /// `s_λ(α, β)` as `mantissa · 2^exp`. Jacobi–Trudi in `h` or in `e`,
    /// whichever determinant is smaller.
    pub fn schur_scaled(&self, lambda: &Partition) -> Result<(T, i64)> {
        if lambda.size() > self.degree() {
            return Err(Error::Precondition(format!(
                "specialization tables reach degree {}, but |{lambda}| = {}",
                self.degree(),
                lambda.size()
            )));
        }
        if let Some(v) = self.cache.lock().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let value = if lambda.is_empty() {
            (T::one(), 0)
        } else {
            let (shape, table) = if lambda.length() <= lambda.part(1) {
                (lambda.clone(), &self.h)
            } else {
                (lambda.conjugate(), &self.e)
            };
            let l = shape.length();
            let m = (0..l)
                .map(|a| {
                    (0..l)
                        .map(|b| index(table, shape.parts()[a] as i64 - a as i64 + b as i64))
                        .collect()
                })
                .collect();
            scaled_determinant(m)
        };
        if T::EXACT {
            debug_assert!(value.0 >= T::zero(), "negative specialization at {lambda}");
        }
        self.cache.lock().unwrap().insert(lambda.clone(), value.clone());
        Ok(value)
    }

    pub fn schur(&self, lambda: &Partition) -> Result<T> {
        let (m, e) = self.schur_scaled(lambda)?;
        Ok(m.mul_pow2(e))
    }
}

fn index<T: Scalar>(table: &[T], k: i64) -> T {
    if k < 0 {
        T::zero()
    } else {
        table[k as usize].clone()
    }
}

/// Exact `s_λ(α, β)`.
pub fn super_schur(lambda: &Partition, params: &ThomaParams) -> Rat {
    Specialization::<Rat>::new(params, lambda.size())
        .schur(lambda)
        .expect("degree covers |λ|")
}
