//! Exact measures on a level `Y_n`, the projections `π^n_k`, total variation
//! distance and stochastic dominance.
//!
//! Dominance has two independent deciders: [`dominates_flow`] solves an
//! integer max-flow on the bipartite "moves mass downward" graph and returns
//! a witness [`Coupling`]; [`dominates_upperset`] compares the masses of all
//! upper sets. They are cross-checked in the tests.

mod flow;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use flow::FlowNetwork;

use crate::dimension::{dim_hook, skew_dim};
use crate::error::{Error, Result};
use crate::partition::{dominates_unchecked, enumerate_partitions, Partition};
use crate::poset::upper_set_masks;
use crate::{fmt_rat, parse_rat, Rat};

/// Nonnegative exact masses on `Y_level`. Only positive entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureOnLevel {
    level: usize,
    masses: BTreeMap<Partition, Rat>,
}

impl MeasureOnLevel {
    pub fn new(level: usize, masses: impl IntoIterator<Item = (Partition, Rat)>) -> Result<Self> {
        let mut out = Self::zero(level);
        for (lambda, mass) in masses {
            if lambda.size() != level {
                return Err(Error::WrongLevel {
                    partition: lambda.to_string(),
                    level,
                });
            }
            if mass.is_negative() {
                return Err(Error::NegativeMass(lambda.to_string()));
            }
            out.add_mass(lambda, mass);
        }
        Ok(out)
    }

    pub fn zero(level: usize) -> Self {
        Self {
            level,
            masses: BTreeMap::new(),
        }
    }

    /// The probability atom `δ_λ`.
    pub fn delta(lambda: &Partition) -> Self {
        Self::atom(lambda, Rat::one())
    }

    pub fn atom(lambda: &Partition, mass: Rat) -> Self {
        let mut m = Self::zero(lambda.size());
        m.add_mass(lambda.clone(), mass);
        m
    }

    pub(crate) fn add_mass(&mut self, lambda: Partition, mass: Rat) {
        if mass.is_zero() {
            return;
        }
        let entry = self.masses.entry(lambda).or_insert_with(Rat::zero);
        *entry += mass;
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn mass(&self, lambda: &Partition) -> Rat {
        self.masses.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_mass(&self) -> Rat {
        self.masses.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.masses.len()
    }

    /// Entries in decreasing lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.masses.iter().rev()
    }

    /// `(π^n_{n−1} M)(μ) = Σ_{μ↗λ} dim(μ)/dim(λ) · M(λ)`.
    pub fn project_one(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::BadProjection {
                level: 0,
                target: 0,
            });
        }
        let mut out = Self::zero(self.level - 1);
        for (lambda, mass) in &self.masses {
            let dim_lambda = dim_hook(lambda);
            for corner in lambda.removable_corners() {
                let mu = lambda.remove_box(corner).expect("corner");
                let ratio = Rat::new(dim_hook(&mu).into(), dim_lambda.clone().into());
                out.add_mass(mu, ratio * mass);
            }
        }
        Ok(out)
    }

    pub fn project_to(&self, target: usize) -> Result<Self> {
        if target > self.level {
            return Err(Error::BadProjection {
                level: self.level,
                target,
            });
        }
        let mut cur = self.clone();
        while cur.level > target {
            cur = cur.project_one()?;
        }
        Ok(cur)
    }
}

/// `π^{|λ|}_r δ_λ` in one step:
/// `(π δ_λ)(μ) = skew_dim(λ, μ) · dim(μ) / dim(λ)`.
pub fn project_atom_direct(lambda: &Partition, r: usize) -> Result<MeasureOnLevel> {
    if r > lambda.size() {
        return Err(Error::BadProjection {
            level: lambda.size(),
            target: r,
        });
    }
    let dim_lambda: BigInt = dim_hook(lambda).into();
    let mut out = MeasureOnLevel::zero(r);
    for mu in enumerate_partitions(r) {
        if !lambda.contains(&mu) {
            continue;
        }
        let paths: BigInt = skew_dim(lambda, &mu)?.into();
        let dim_mu: BigInt = dim_hook(&mu).into();
        out.add_mass(mu, Rat::new(paths * dim_mu, dim_lambda.clone()));
    }
    Ok(out)
}

/// `½ Σ |ρ(a) − ρ̂(a)|`.
pub fn tv_distance(rho: &MeasureOnLevel, rho_hat: &MeasureOnLevel) -> Result<Rat> {
    if rho.level != rho_hat.level {
        return Err(Error::LevelMismatch(rho.level, rho_hat.level));
    }
    let mut keys: Vec<&Partition> = rho.masses.keys().chain(rho_hat.masses.keys()).collect();
    keys.sort();
    keys.dedup();
    let sum: Rat = keys
        .into_iter()
        .map(|k| (rho.mass(k) - rho_hat.mass(k)).abs())
        .sum();
    Ok(sum / Rat::from_integer(2.into()))
}

/// Mass moved from `source` (dominating side) to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingEntry {
    pub source: Partition,
    pub target: Partition,
    pub mass: Rat,
}

/// A decomposition of two equal-mass measures into pairs of atoms of equal
/// mass with `source ≥ target` in dominance order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coupling {
    pub entries: Vec<CouplingEntry>,
}

impl Coupling {
    /// Checks both marginals and the dominance of every entry.
    pub fn is_valid_for(&self, rho: &MeasureOnLevel, rho_hat: &MeasureOnLevel) -> bool {
        let mut left = MeasureOnLevel::zero(rho.level);
        let mut right = MeasureOnLevel::zero(rho_hat.level);
        for e in &self.entries {
            if !e.mass.is_positive() || !dominates_unchecked(&e.source, &e.target) {
                return false;
            }
            left.add_mass(e.source.clone(), e.mass.clone());
            right.add_mass(e.target.clone(), e.mass.clone());
        }
        left == *rho && right == *rho_hat
    }

    /// Composes `self: ρ → σ` with `next: σ → τ` into `ρ → τ` by splitting
    /// mass proportionally through `σ`.
    pub fn compose(&self, next: &Coupling) -> Coupling {
        let mut through: BTreeMap<&Partition, Rat> = BTreeMap::new();
        for e in &next.entries {
            *through.entry(&e.source).or_insert_with(Rat::zero) += &e.mass;
        }
        let mut merged: BTreeMap<(Partition, Partition), Rat> = BTreeMap::new();
        for a in &self.entries {
            let Some(mid_total) = through.get(&a.target) else {
                continue;
            };
            for b in next.entries.iter().filter(|b| b.source == a.target) {
                let share = &a.mass * &b.mass / mid_total;
                *merged
                    .entry((a.source.clone(), b.target.clone()))
                    .or_insert_with(Rat::zero) += share;
            }
        }
        Coupling {
            entries: merged
                .into_iter()
                .map(|((source, target), mass)| CouplingEntry {
                    source,
                    target,
                    mass,
                })
                .collect(),
        }
    }
}

fn check_comparable(rho: &MeasureOnLevel, rho_hat: &MeasureOnLevel) -> Result<()> {
    if rho.level != rho_hat.level {
        return Err(Error::LevelMismatch(rho.level, rho_hat.level));
    }
    let (a, b) = (rho.total_mass(), rho_hat.total_mass());
    if a != b {
        return Err(Error::MassMismatch(fmt_rat(&a), fmt_rat(&b)));
    }
    Ok(())
}

/// Decides `ρ ≥ ρ̂` by max-flow after scaling all masses to integers by
/// their common denominator. Returns a witness coupling when it holds.
pub fn dominates_flow(
    rho: &MeasureOnLevel,
    rho_hat: &MeasureOnLevel,
) -> Result<(bool, Option<Coupling>)> {
    check_comparable(rho, rho_hat)?;
    if rho.masses.is_empty() {
        return Ok((true, Some(Coupling::default())));
    }
    let scale = rho
        .masses
        .values()
        .chain(rho_hat.masses.values())
        .fold(BigInt::one(), |acc, m| acc.lcm(m.denom()));
    let to_int = |m: &Rat| (m * Rat::from_integer(scale.clone())).to_integer();

    let left: Vec<(&Partition, &Rat)> = rho.masses.iter().collect();
    let right: Vec<(&Partition, &Rat)> = rho_hat.masses.iter().collect();
    let (source, sink) = (0, 1 + left.len() + right.len());
    let mut net = FlowNetwork::new(sink + 1);
    let total = to_int(&rho.total_mass());
    for (a, (_, m)) in left.iter().enumerate() {
        net.add_edge(source, 1 + a, to_int(m));
    }
    for (b, (_, m)) in right.iter().enumerate() {
        net.add_edge(1 + left.len() + b, sink, to_int(m));
    }
    let mut middle = Vec::new();
    for (a, (la, _)) in left.iter().enumerate() {
        for (b, (lb, _)) in right.iter().enumerate() {
            if dominates_unchecked(la, lb) {
                let id = net.add_edge(1 + a, 1 + left.len() + b, total.clone());
                middle.push((id, a, b));
            }
        }
    }
    if net.max_flow(source, sink) != total {
        return Ok((false, None));
    }
    let entries = middle
        .into_iter()
        .filter_map(|(id, a, b)| {
            let f = net.flow_on(id);
            (!f.is_zero()).then(|| CouplingEntry {
                source: left[a].0.clone(),
                target: right[b].0.clone(),
                mass: Rat::new(f, scale.clone()),
            })
        })
        .collect();
    Ok((true, Some(Coupling { entries })))
}

/// Decides `ρ ≥ ρ̂` by checking `ρ(U) ≥ ρ̂(U)` on every upper set `U` of
/// `Y_n`. Refuses levels above `limit`.
pub fn dominates_upperset(
    rho: &MeasureOnLevel,
    rho_hat: &MeasureOnLevel,
    limit: usize,
) -> Result<bool> {
    check_comparable(rho, rho_hat)?;
    if rho.level > limit {
        return Err(Error::LimitExceeded {
            what: "level for upper-set enumeration",
            value: rho.level as u64,
            limit: limit as u64,
            hint: "; use the max-flow dominance checker instead",
        });
    }
    let all = enumerate_partitions(rho.level);
    let above: Vec<Vec<usize>> = (0..all.len())
        .map(|k| {
            (0..k)
                .filter(|&j| dominates_unchecked(&all[j], &all[k]))
                .collect()
        })
        .collect();
    let diff: Vec<Rat> = all.iter().map(|l| rho.mass(l) - rho_hat.mass(l)).collect();
    Ok(upper_set_masks(&above).into_iter().all(|mask| {
        let s: Rat = mask
            .iter()
            .zip(&diff)
            .filter(|(&inside, _)| inside)
            .map(|(_, d)| d.clone())
            .sum();
        !s.is_negative()
    }))
}

#[derive(Clone, Debug)]
pub enum Thm12Outcome {
    /// The projections are in dominance; the witness coupling is included.
    Holds(Coupling),
    /// A counterexample: the projections are not in dominance.
    Fails {
        projected: MeasureOnLevel,
        projected_hat: MeasureOnLevel,
    },
}

/// Given `ρ ≥ ρ̂`, checks `π^n_k ρ ≥ π^n_k ρ̂`. A violated precondition is
/// reported as [`Error::Precondition`], distinct from a failing verdict.
pub fn check_thm12(
    rho: &MeasureOnLevel,
    rho_hat: &MeasureOnLevel,
    k: usize,
) -> Result<Thm12Outcome> {
    let (pre, _) = dominates_flow(rho, rho_hat)?;
    if !pre {
        return Err(Error::Precondition(
            "the input measures are not in stochastic dominance".into(),
        ));
    }
    let projected = rho.project_to(k)?;
    let projected_hat = rho_hat.project_to(k)?;
    match dominates_flow(&projected, &projected_hat)? {
        (true, Some(c)) => Ok(Thm12Outcome::Holds(c)),
        _ => Ok(Thm12Outcome::Fails {
            projected,
            projected_hat,
        }),
    }
}

/// Wire form: `{"level": n, "masses": [{"partition": "3,1", "mass": "1/2"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct MeasureWire {
    level: usize,
    masses: Vec<MassWire>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct MassWire {
    partition: Partition,
    mass: String,
}

impl Serialize for MeasureOnLevel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MeasureWire {
            level: self.level,
            masses: self
                .iter()
                .map(|(p, m)| MassWire {
                    partition: p.clone(),
                    mass: fmt_rat(m),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MeasureOnLevel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = MeasureWire::deserialize(d)?;
        let entries = wire
            .masses
            .into_iter()
            .map(|m| Ok((m.partition, parse_rat(&m.mass)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MeasureOnLevel::new(wire.level, entries).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MeasureOnLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (p, m)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p}): {}", fmt_rat(m))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests;
