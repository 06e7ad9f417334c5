use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// A finite integer combination `Σ c_κ s_κ` of Schur functions of one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn single(kappa: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(kappa, BigInt::one());
        Self { terms }
    }

    pub fn coefficient(&self, kappa: &Partition) -> BigInt {
        self.terms.get(kappa).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, kappa: Partition, c: BigInt) {
        let entry = self.terms.entry(kappa).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*s[{k}]")?;
        }
        Ok(())
    }
}

/// All `σ ⊇ ρ` such that `σ/ρ` is a horizontal strip of `k` boxes.
pub fn add_horizontal_strips(rho: &Partition, k: usize) -> Vec<Partition> {
    let len = rho.length() + 1;
    let mut out = Vec::new();
    let mut parts = vec![0usize; len];
    fn rec(
        row: usize,
        left: usize,
        rho: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == parts.len() {
            if left == 0 {
                let mut v = parts.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(Partition::from_sorted(v));
            }
            return;
        }
        let base = rho.part(row + 1);
        let cap = if row == 0 { left } else { (rho.part(row) - base).min(left) };
        for extra in (0..=cap).rev() {
            parts[row] = base + extra;
            rec(row + 1, left - extra, rho, parts, out);
        }
    }
    rec(0, k, rho, &mut parts, &mut out);
    out
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip of `k` boxes.
pub(crate) fn remove_horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let len = lambda.length();
    let mut out = Vec::new();
    let mut parts = vec![0usize; len];
    fn rec(
        row: usize,
        left: usize,
        lambda: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == parts.len() {
            if left == 0 {
                let mut v = parts.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(Partition::from_sorted(v));
            }
            return;
        }
        let top = lambda.part(row + 1);
        let floor = lambda.part(row + 2);
        let cap = (top - floor).min(left);
        for cut in 0..=cap {
            parts[row] = top - cut;
            rec(row + 1, left - cut, lambda, parts, out);
        }
    }
    rec(0, k, lambda, &mut parts, &mut out);
    out
}

/// `s_λ s_μ` by Littlewood–Richardson tableaux of content `μ`: successive
/// horizontal strips labelled `1, 2, …`, kept when the reverse reading word
/// is a lattice word.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::default();
    // labels[k][row] = number of boxes labelled k+1 in that row
    let mut labels: Vec<Vec<usize>> = Vec::new();
    fn rec(
        shape: &Partition,
        mu: &Partition,
        labels: &mut Vec<Vec<usize>>,
        out: &mut SchurExpansion,
    ) {
        let k = labels.len();
        if k == mu.length() {
            if is_lattice(labels, shape.length()) {
                out.add_term(shape.clone(), BigInt::one());
            }
            return;
        }
        for next in add_horizontal_strips(shape, mu.part(k + 1)) {
            let rows = (0..next.length())
                .map(|r| next.part(r + 1) - shape.part(r + 1))
                .collect();
            labels.push(rows);
            // the first row can only hold label 1 in a lattice filling
            if k == 0 || labels[k][0] == 0 {
                rec(&next, mu, labels, out);
            }
            labels.pop();
        }
    }
    rec(lambda, mu, &mut labels, &mut out);
    out
}

fn is_lattice(labels: &[Vec<usize>], rows: usize) -> bool {
    let mut seen = vec![0usize; labels.len()];
    for r in 0..rows {
        for k in (0..labels.len()).rev() {
            let c = labels[k].get(r).copied().unwrap_or(0);
            if c == 0 {
                continue;
            }
            seen[k] += c;
            if k > 0 && seen[k] > seen[k - 1] {
                return false;
            }
        }
    }
    true
}

/// `c^κ_{λμ}`.
pub fn lr_coefficient(kappa: &Partition, lambda: &Partition, mu: &Partition) -> BigInt {
    if kappa.size() != lambda.size() + mu.size() || !kappa.contains(lambda) {
        return BigInt::zero();
    }
    schur_product(lambda, mu).coefficient(kappa)
}
