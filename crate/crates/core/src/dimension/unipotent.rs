//! Unipotent upper-triangular matrices over `F_p` and the counts
//! `dim_t(λ)`, `dim_t(μ ↗ λ)` obtained by enumerating all of `U_n`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{matmul_mod_p, rank_mod_p};
use crate::moves::enumerate_move_quadruples;
use crate::partition::Partition;
use crate::verdict::{InstanceVerdict, VerdictReport};
use crate::{Nat, Rat};

pub const DEFAULT_DIM_T_LIMIT: usize = 6;
pub const DEFAULT_DIM_T_MAX_P: u64 = 3;

/// An element of `U_n(F_p)`: ones on the diagonal, zeros below, and
/// `n(n-1)/2` free entries above stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentMatrix {
    n: usize,
    p: u64,
    upper: Vec<u64>,
}

impl UnipotentMatrix {
    pub fn new(n: usize, p: u64, upper: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Precondition(format!(
                "U_{n} has {} free entries, got {}",
                n * n.saturating_sub(1) / 2,
                upper.len()
            )));
        }
        if let Some(bad) = upper.iter().find(|&&x| x >= p) {
            return Err(Error::Precondition(format!("entry {bad} is not reduced mod {p}")));
        }
        Ok(Self { n, p, upper })
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        Self::new(n, p, vec![0; n * n.saturating_sub(1) / 2])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(a, b)`, 0-based.
    pub fn entry(&self, a: usize, b: usize) -> u64 {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Greater => 0,
            std::cmp::Ordering::Less => self.upper[upper_index(self.n, a, b)],
        }
    }

    /// `u - I`.
    fn nilpotent_part(&self) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|a| {
                (0..self.n)
                    .map(|b| if a < b { self.entry(a, b) } else { 0 })
                    .collect()
            })
            .collect()
    }

    /// Top-left `(n-1) × (n-1)` corner.
    pub fn corner(&self) -> Self {
        let m = self.n.saturating_sub(1);
        let mut upper = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for a in 0..m {
            for b in a + 1..m {
                upper.push(self.entry(a, b));
            }
        }
        Self {
            n: m,
            p: self.p,
            upper,
        }
    }
}

fn upper_index(n: usize, a: usize, b: usize) -> usize {
    // rows 0..a contribute (n-1) + (n-2) + ... entries
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Jordan type: `λ'_k = rank((u−I)^{k−1}) − rank((u−I)^k)` over `F_p`.
pub fn jordan_type(u: &UnipotentMatrix) -> Partition {
    let n = u.n;
    let nil = u.nilpotent_part();
    let mut ranks = vec![n];
    let mut power = nil.clone();
    loop {
        let r = rank_mod_p(power.clone(), u.p);
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = matmul_mod_p(&power, &nil, u.p);
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::new(columns)
        .expect("rank drops of a nilpotent matrix are weakly decreasing")
        .conjugate()
}

/// Counts over all of `U_n(F_p)`: `dim_t(λ)` per Jordan type and
/// `dim_t(μ ↗ λ)` per pair (corner type, full type).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTTable {
    pub n: usize,
    pub p: u64,
    pub vertex: BTreeMap<Partition, u64>,
    pub edge: BTreeMap<(Partition, Partition), u64>,
}

impl DimTTable {
    /// Full enumeration of `p^{n(n-1)/2}` matrices in row-major odometer
    /// order, sharded across threads and merged by addition.
    pub fn compute(n: usize, p: u64, max_n: usize, max_p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let free = n * n.saturating_sub(1) / 2;
        let total = p.checked_pow(free as u32).unwrap_or(u64::MAX);
        if n > max_n || p > max_p {
            return Err(Error::LimitExceeded {
                what: "enumeration cost p^{n(n-1)/2}",
                value: total,
                limit: max_p.saturating_pow((max_n * max_n.saturating_sub(1) / 2) as u32),
                hint: "; raise the n/p limits explicitly",
            });
        }
        let shards = 64u64.min(total).max(1);
        let chunk = total.div_ceil(shards);
        let partials: Vec<(BTreeMap<Partition, u64>, BTreeMap<(Partition, Partition), u64>)> =
            (0..shards)
                .into_par_iter()
                .map(|s| {
                    let mut vertex = BTreeMap::new();
                    let mut edge = BTreeMap::new();
                    let start = s * chunk;
                    let end = ((s + 1) * chunk).min(total);
                    let mut digits = decode(start, free, p);
                    for _ in start..end {
                        let u = UnipotentMatrix {
                            n,
                            p,
                            upper: digits.clone(),
                        };
                        let lambda = jordan_type(&u);
                        let mu = if n == 0 {
                            Partition::empty()
                        } else {
                            jordan_type(&u.corner())
                        };
                        *vertex.entry(lambda.clone()).or_insert(0) += 1;
                        *edge.entry((mu, lambda)).or_insert(0) += 1;
                        increment(&mut digits, p);
                    }
                    (vertex, edge)
                })
                .collect();
        let mut vertex = BTreeMap::new();
        let mut edge = BTreeMap::new();
        for (v, e) in partials {
            for (k, c) in v {
                *vertex.entry(k).or_insert(0) += c;
            }
            for (k, c) in e {
                *edge.entry(k).or_insert(0) += c;
            }
        }
        Ok(Self { n, p, vertex, edge })
    }

    pub fn dim_t(&self, lambda: &Partition) -> u64 {
        self.vertex.get(lambda).copied().unwrap_or(0)
    }

    pub fn dim_t_edge(&self, mu: &Partition, lambda: &Partition) -> u64 {
        self.edge
            .get(&(mu.clone(), lambda.clone()))
            .copied()
            .unwrap_or(0)
    }
}

/// Most significant digit first: the last free entry varies fastest.
fn decode(mut index: u64, len: usize, p: u64) -> Vec<u64> {
    let mut digits = vec![0; len];
    for d in digits.iter_mut().rev() {
        *d = index % p;
        index /= p;
    }
    digits
}

fn increment(digits: &mut [u64], p: u64) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return;
        }
        *d = 0;
    }
}

pub fn dim_t_enum(lambda: &Partition, p: u64, max_n: usize, max_p: u64) -> Result<Nat> {
    let table = DimTTable::compute(lambda.size(), p, max_n, max_p)?;
    Ok(table.dim_t(lambda).into())
}

pub fn dim_t_edge_enum(
    mu: &Partition,
    lambda: &Partition,
    p: u64,
    max_n: usize,
    max_p: u64,
) -> Result<Nat> {
    let table = DimTTable::compute(lambda.size(), p, max_n, max_p)?;
    Ok(table.dim_t_edge(mu, lambda).into())
}

/// Compares `dim_t(μ̂↗λ̂)/dim_t(λ̂)` (lhs) against `dim_t(μ↗λ)/dim_t(λ)`
/// (rhs) for every configuration at level `n`.
pub fn check_conj14(n: usize, p: u64, max_n: usize, max_p: u64) -> Result<VerdictReport> {
    let table = DimTTable::compute(n, p, max_n, max_p)?;
    Ok(conj14_from_table(&table))
}

pub fn conj14_from_table(table: &DimTTable) -> VerdictReport {
    let ratio = |mu: &Partition, lambda: &Partition| {
        Rat::new(
            table.dim_t_edge(mu, lambda).into(),
            table.dim_t(lambda).into(),
        )
    };
    let rows = enumerate_move_quadruples(table.n)
        .iter()
        .map(|q| {
            let lhs = ratio(&q.mu_hat, &q.lambda_hat);
            let rhs = ratio(&q.mu, &q.lambda);
            InstanceVerdict::new(q, &lhs, &rhs)
        })
        .collect();
    VerdictReport::new("verify conj-jordan", rows)
        .param("n", table.n)
        .param("p", table.p)
}
