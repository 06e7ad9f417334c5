use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

use super::lr::add_horizontal_strips;

/// `K_{κ,c}` for every shape `κ ⊢ Σc` at once: the number of semistandard
/// tableaux of shape `κ` and content `c`, built as chains of horizontal
/// strips. `c` may be any composition.
pub fn kostka_column(content: &[usize]) -> BTreeMap<Partition, BigInt> {
    let mut layer: BTreeMap<Partition, BigInt> = BTreeMap::new();
    layer.insert(Partition::empty(), BigInt::one());
    for &k in content {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (shape, count) in &layer {
            for grown in add_horizontal_strips(shape, k) {
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    layer
}

pub fn kostka_content(lambda: &Partition, content: &[usize]) -> BigInt {
    if lambda.size() != content.iter().sum::<usize>() {
        return BigInt::zero();
    }
    kostka_column(content).remove(lambda).unwrap_or_default()
}

/// Kostka number `K_{λν}`; zero unless `|λ| = |ν|` and `λ ⊵ ν`.
pub fn kostka(lambda: &Partition, nu: &Partition) -> BigInt {
    kostka_content(lambda, nu.parts())
}
