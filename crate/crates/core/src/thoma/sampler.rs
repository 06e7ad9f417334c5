use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dimension::dim_hook;
use crate::error::{Error, Result};
use crate::measure::MeasureOnLevel;
use crate::partition::{enumerate_partitions, Partition};
use crate::scalar::Scalar;
use crate::Rat;

use super::params::ThomaParams;
use super::specialization::Specialization;

/// `M_n(λ) = dim(λ) · s_λ(α, β)`, exactly.
pub fn extreme_measure(n: usize, params: &ThomaParams) -> MeasureOnLevel {
    let spec = Specialization::<Rat>::new(params, n);
    extreme_measure_with(n, &spec)
}

pub(crate) fn extreme_measure_with(n: usize, spec: &Specialization<Rat>) -> MeasureOnLevel {
    let masses = enumerate_partitions(n).into_iter().map(|l| {
        let s = spec.schur(&l).expect("degree covers n");
        let d = Rat::from_integer(dim_hook(&l).into());
        (l, d * s)
    });
    let m = MeasureOnLevel::new(n, masses).expect("specializations are nonnegative");
    debug_assert!(m.total_mass().is_one());
    m
}

/// Position of the growth chain with its cached specialization value.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthState<T> {
    pub current: Partition,
    /// `s_λ(α, β)` as mantissa and binary exponent.
    pub value: (T, i64),
}

/// The Markov chain `λ → Λ = λ + □` with probability `s_Λ(α,β)/s_λ(α,β)`,
/// which carries `M_n` to `M_{n+1}`.
pub struct GrowthSampler<T: Scalar> {
    spec: Specialization<T>,
}

impl<T: Scalar> GrowthSampler<T> {
    /// Tables cover diagrams up to `max_n` boxes.
    pub fn new(params: &ThomaParams, max_n: usize) -> Self {
        Self {
            spec: Specialization::new(params, max_n),
        }
    }

    pub fn specialization(&self) -> &Specialization<T> {
        &self.spec
    }

    pub fn start(&self) -> GrowthState<T> {
        GrowthState {
            current: Partition::empty(),
            value: (T::one(), 0),
        }
    }

    pub fn state(&self, lambda: &Partition) -> Result<GrowthState<T>> {
        Ok(GrowthState {
            current: lambda.clone(),
            value: self.spec.schur_scaled(lambda)?,
        })
    }

    /// Successors of `λ` with their transition probabilities, in the order
    /// of the addable cells (top row first).
    pub fn transitions(&self, state: &GrowthState<T>) -> Result<Vec<(GrowthState<T>, T)>> {
        let (m0, e0) = &state.value;
        if m0 <= &T::zero() {
            return Err(Error::ZeroState(state.current.to_string()));
        }
        let mut out = Vec::new();
        let mut total = T::zero();
        for cell in state.current.addable_cells() {
            let next = state.current.add_box(cell)?;
            let value = self.spec.schur_scaled(&next)?;
            let mut prob = (value.0.clone() / m0.clone()).mul_pow2(value.1 - e0);
            if prob < T::zero() {
                // rounding noise in float mode
                prob = T::zero();
            }
            total = total + prob.clone();
            out.push((
                GrowthState {
                    current: next,
                    value,
                },
                prob,
            ));
        }
        if T::EXACT {
            assert!(total.is_one(), "transition probabilities must sum to 1");
        } else {
            let drift = (total.to_f64_lossy() - 1.0).abs();
            if drift > 1e-6 {
                log::warn!("transition probabilities from {} sum to 1{drift:+e}", state.current);
            }
            for (_, p) in &mut out {
                *p = p.clone() / total.clone();
            }
        }
        Ok(out)
    }

    pub fn growth_step<R: Rng>(&self, state: &GrowthState<T>, rng: &mut R) -> Result<GrowthState<T>> {
        let options = self.transitions(state)?;
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        let last = options.len() - 1;
        for (i, (next, p)) in options.into_iter().enumerate() {
            acc += p.to_f64_lossy();
            if u < acc || i == last {
                return Ok(next);
            }
        }
        unreachable!("a diagram always has an addable cell")
    }

    /// One draw of `λ(n)` by `n` growth steps from `∅`.
    pub fn sample_diagram(&self, n: usize, seed: u64) -> Result<Partition> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut state = self.start();
        for _ in 0..n {
            state = self.growth_step(&state, &mut rng)?;
        }
        Ok(state.current)
    }
}

impl GrowthSampler<Rat> {
    /// Exact image of a measure on `Y_n` under one growth step.
    pub fn pushforward(&self, rho: &MeasureOnLevel) -> Result<MeasureOnLevel> {
        let mut out = Vec::new();
        for (lambda, mass) in rho.iter() {
            for (next, p) in self.transitions(&self.state(lambda)?)? {
                out.push((next.current, mass * p));
            }
        }
        MeasureOnLevel::new(rho.level() + 1, out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LlnKind {
    Row,
    Col,
}

/// One CSV row: `λ_i(n)/n` (`row`) or `λ'_j(n)/n` (`col`) for one trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LlnRow {
    pub trial: usize,
    pub n: usize,
    pub kind: LlnKind,
    pub index: usize,
    pub value: f64,
}

/// Samples `trials` diagrams of size `n` (trial `t` uses seed `seed + t`)
/// and reports rows `i ≤ |α|` and columns `j ≤ |β|` scaled by `1/n`.
/// Requires strictly decreasing finite `α`, `β` with `Σα + Σβ = 1`.
pub fn lln_experiment<T: Scalar>(
    params: &ThomaParams,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<LlnRow>> {
    if !params.is_strict_and_full() {
        return Err(Error::Hypothesis(format!(
            "the law of large numbers for λ(n)/n is stated for strictly decreasing finite α, β \
             with Σα + Σβ = 1; got {params}"
        )));
    }
    let sampler = GrowthSampler::<T>::new(params, n + 1);
    let draws = (0..trials)
        .into_par_iter()
        .map(|t| sampler.sample_diagram(n, seed.wrapping_add(t as u64)))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for (trial, lambda) in draws.iter().enumerate() {
        let conj = lambda.conjugate();
        let scale = n.max(1) as f64;
        for i in 1..=params.alpha().len() {
            rows.push(LlnRow {
                trial,
                n,
                kind: LlnKind::Row,
                index: i,
                value: lambda.part(i) as f64 / scale,
            });
        }
        for j in 1..=params.beta().len() {
            rows.push(LlnRow {
                trial,
                n,
                kind: LlnKind::Col,
                index: j,
                value: conj.part(j) as f64 / scale,
            });
        }
    }
    Ok(rows)
}

/// Mean of `|value − target|` over the rows of one kind and index.
pub fn mean_abs_deviation(rows: &[LlnRow], kind: LlnKind, index: usize, target: f64) -> f64 {
    let sel: Vec<f64> = rows
        .iter()
        .filter(|r| r.kind == kind && r.index == index)
        .map(|r| (r.value - target).abs())
        .collect();
    if sel.is_empty() {
        return f64::NAN;
    }
    sel.iter().sum::<f64>() / sel.len() as f64
}
