use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::moves::{enumerate_move_quadruples, CaseTag, MoveQuadruple};
use crate::partition::{enumerate_partitions, Partition};
use crate::verdict::{InstanceVerdict, VerdictReport};
use crate::Rat;

use super::kostka::kostka_column;
use super::lr::{schur_product, SchurExpansion};

/// Kostka columns `ν ↦ (κ ↦ K_{κν})` for one degree, `ν` in decreasing
/// lex order.
struct KostkaTable {
    columns: Vec<(Partition, BTreeMap<Partition, BigInt>)>,
}

impl KostkaTable {
    fn new(degree: usize) -> Self {
        let columns = enumerate_partitions(degree)
            .into_par_iter()
            .map(|nu| {
                let col = kostka_column(nu.parts());
                (nu, col)
            })
            .collect();
        Self { columns }
    }

    fn expand(&self, e: &SchurExpansion) -> Vec<(Partition, BigInt)> {
        self.columns
            .iter()
            .map(|(nu, col)| {
                let mut c = BigInt::zero();
                for (kappa, a) in e.iter() {
                    if let Some(k) = col.get(kappa) {
                        c += a * k;
                    }
                }
                (nu.clone(), c)
            })
            .collect()
    }
}

/// Coefficients on `m_ν` for every `ν` of the expansion's degree, listed in
/// decreasing lex order of `ν`. All terms must share one degree.
pub fn monomial_expansion(e: &SchurExpansion) -> Vec<(Partition, BigInt)> {
    let degree = e.iter().next().map_or(0, |(k, _)| k.size());
    debug_assert!(e.iter().all(|(k, _)| k.size() == degree));
    KostkaTable::new(degree).expand(e)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Conj22Outcome {
    pub instance: InstanceVerdict,
    /// First `ν` (decreasing lex) whose coefficient has the wrong sign.
    pub first_failing: Option<(Partition, BigInt)>,
}

type ProductCache = Mutex<HashMap<(Partition, Partition), SchurExpansion>>;

fn product_cached(cache: Option<&ProductCache>, a: &Partition, b: &Partition) -> SchurExpansion {
    let Some(cache) = cache else {
        return schur_product(a, b);
    };
    let key = (a.clone(), b.clone());
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return e.clone();
    }
    let e = schur_product(a, b);
    cache.lock().unwrap().insert(key, e.clone());
    e
}

fn conj22_with(q: &MoveQuadruple, table: &KostkaTable, cache: Option<&ProductCache>) -> Conj22Outcome {
    let diff = product_cached(cache, &q.lambda, &q.mu_hat)
        .sub(&product_cached(cache, &q.lambda_hat, &q.mu));
    let coeffs = table.expand(&diff);
    // orient so that the asserted direction is "≥ 0"
    let sign = match q.case {
        CaseTag::Below => -1,
        _ => 1,
    };
    let oriented = |c: &BigInt| if sign < 0 { -c } else { c.clone() };
    let extreme = coeffs
        .iter()
        .map(|(_, c)| oriented(c))
        .min()
        .unwrap_or_default();
    let first_failing = if q.case == CaseTag::Between {
        None
    } else {
        coeffs
            .iter()
            .find(|(_, c)| oriented(c).is_negative())
            .cloned()
    };
    // lhs carries the extreme raw coefficient: the minimum for r<i, the
    // maximum for r>î; rhs is 0
    let lhs = Rat::from_integer(BigInt::from(sign) * extreme);
    let mut instance = InstanceVerdict::new(q, &lhs, &Rat::zero())
        .with_detail("monomials", coeffs.len())
        .with_detail("schur_terms", diff.len());
    if let Some((nu, c)) = &first_failing {
        instance = instance
            .with_detail("first_failing_monomial", nu)
            .with_detail("first_failing_coefficient", c);
    }
    Conj22Outcome {
        instance,
        first_failing,
    }
}

/// Monomial expansion of `s_λ s_μ̂ − s_λ̂ s_μ`, checked for the sign the case
/// tag predicts. The verdict's lhs is the extreme coefficient (minimum for
/// `r < i`, maximum for `r > î`) and rhs is 0.
pub fn check_conj22(q: &MoveQuadruple) -> Conj22Outcome {
    let table = KostkaTable::new(2 * q.level() - 1);
    conj22_with(q, &table, None)
}

pub fn sweep_conj22(n_max: usize) -> VerdictReport {
    let cache: ProductCache = Mutex::new(HashMap::new());
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let quads = enumerate_move_quadruples(n);
        if quads.is_empty() {
            continue;
        }
        let table = KostkaTable::new(2 * n - 1);
        let level: Vec<InstanceVerdict> = quads
            .par_iter()
            .map(|q| conj22_with(q, &table, Some(&cache)).instance)
            .collect();
        rows.extend(level);
    }
    VerdictReport::new("verify conj-monomial", rows).param("n_max", n_max)
}
