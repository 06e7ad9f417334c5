use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::{fmt_rat, parse_rat, Rat};

/// A point `(α, β)` of the Thoma simplex with finitely many nonzero
/// coordinates. `γ = 1 − Σα − Σβ` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ThomaParams {
    alpha: Vec<Rat>,
    beta: Vec<Rat>,
}

fn check_sequence(name: &str, seq: &mut Vec<Rat>) -> Result<()> {
    while seq.last().is_some_and(Zero::is_zero) {
        seq.pop();
    }
    if let Some(x) = seq.iter().find(|x| x.is_negative()) {
        return Err(Error::InvalidParams(format!(
            "{name} has a negative entry {}",
            fmt_rat(x)
        )));
    }
    if let Some(w) = seq.windows(2).find(|w| w[0] < w[1]) {
        return Err(Error::InvalidParams(format!(
            "{name} must be weakly decreasing, found {} before {}",
            fmt_rat(&w[0]),
            fmt_rat(&w[1])
        )));
    }
    Ok(())
}

impl ThomaParams {
    pub fn new(alpha: Vec<Rat>, beta: Vec<Rat>) -> Result<Self> {
        let (mut alpha, mut beta) = (alpha, beta);
        check_sequence("alpha", &mut alpha)?;
        check_sequence("beta", &mut beta)?;
        let total: Rat = alpha.iter().chain(&beta).sum();
        if total > Rat::one() {
            return Err(Error::InvalidParams(format!(
                "sum of alpha and beta is {} > 1",
                fmt_rat(&total)
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// The Plancherel point `α = β = 0`.
    pub fn plancherel() -> Self {
        Self::default()
    }

    /// Parses comma-separated rationals; an empty string is the empty
    /// sequence.
    pub fn parse(alpha: &str, beta: &str) -> Result<Self> {
        Self::new(parse_list(alpha)?, parse_list(beta)?)
    }

    pub fn alpha(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Rat] {
        &self.beta
    }

    pub fn gamma(&self) -> Rat {
        Rat::one() - self.alpha.iter().sum::<Rat>() - self.beta.iter().sum::<Rat>()
    }

    /// `(β, α)`; specializations satisfy `s_λ(α, β) = s_λ'(β, α)`.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// Strictly decreasing positive entries with `Σα + Σβ = 1`.
    pub fn is_strict_and_full(&self) -> bool {
        let strict = |s: &[Rat]| s.windows(2).all(|w| w[0] > w[1]);
        strict(&self.alpha) && strict(&self.beta) && self.gamma().is_zero()
    }

    /// `α_i` with `α_i = 0` past the stored entries; 1-based.
    pub fn alpha_at(&self, i: usize) -> Rat {
        self.alpha.get(i - 1).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn beta_at(&self, j: usize) -> Rat {
        self.beta.get(j - 1).cloned().unwrap_or_else(Rat::zero)
    }
}

fn parse_list(s: &str) -> Result<Vec<Rat>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_rat(x.trim())).collect()
}

impl fmt::Display for ThomaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &[Rat]| s.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
        write!(f, "alpha=({}) beta=({})", list(&self.alpha), list(&self.beta))
    }
}

impl FromStr for ThomaParams {
    type Err = Error;

    /// `"α;β"`, e.g. `"1/2,1/4;1/8,1/8"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once(';').unwrap_or((s, ""));
        Self::parse(a, b)
    }
}

/// `p_k(α, β) = Σ α_i^k + (−1)^{k−1} Σ β_i^k` for `k ≥ 2`, and `p_1 = 1`.
pub fn power_sum(params: &ThomaParams, k: usize) -> Result<Rat> {
    if k == 0 {
        return Err(Error::Precondition("power sums start at k = 1".into()));
    }
    if k == 1 {
        return Ok(Rat::one());
    }
    let a: Rat = params.alpha.iter().map(|x| x.pow_u(k as u32)).sum();
    let b: Rat = params.beta.iter().map(|x| x.pow_u(k as u32)).sum();
    Ok(if k % 2 == 0 { a - b } else { a + b })
}

/// `max(sup |α_i − α̂_i|, sup |β_i − β̂_i|)` with zero padding.
pub fn d_inf(a: &ThomaParams, b: &ThomaParams) -> Rat {
    let sup = |x: &[Rat], y: &[Rat]| {
        (0..x.len().max(y.len()))
            .map(|i| {
                let u = x.get(i).cloned().unwrap_or_else(Rat::zero);
                let v = y.get(i).cloned().unwrap_or_else(Rat::zero);
                (u - v).abs()
            })
            .max()
            .unwrap_or_else(Rat::zero)
    };
    sup(&a.alpha, &b.alpha).max(sup(&a.beta, &b.beta))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LipschitzOutcome {
    pub k: usize,
    /// `|p_k − p̂_k|`
    pub lhs: Rat,
    /// `4k · d_∞`
    pub rhs: Rat,
    pub holds: bool,
}

/// Checks `|p_k(α,β) − p_k(α̂,β̂)| ≤ 4k · d_∞`.
pub fn lipschitz_check(a: &ThomaParams, b: &ThomaParams, k: usize) -> Result<LipschitzOutcome> {
    let lhs = (power_sum(a, k)? - power_sum(b, k)?).abs();
    let rhs = Rat::from_integer((4 * k).into()) * d_inf(a, b);
    Ok(LipschitzOutcome {
        k,
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn validation() {
        let p = ThomaParams::parse("1/2,1/4", "1/8,0").unwrap();
        assert_eq!(p.beta().len(), 1);
        assert_eq!(p.gamma(), rat(1, 8));
        assert!(ThomaParams::parse("1/4,1/2", "").is_err());
        assert!(ThomaParams::parse("3/4", "1/2").is_err());
        assert!(ThomaParams::parse("-1/4", "").is_err());
        assert_eq!(ThomaParams::parse("", "").unwrap(), ThomaParams::plancherel());
        let q: ThomaParams = "1/2,1/4;1/8,1/8".parse().unwrap();
        assert_eq!(q.to_string(), "alpha=(1/2,1/4) beta=(1/8,1/8)");
        assert!(!q.is_strict_and_full());
        assert!(ThomaParams::parse("7/10,3/10", "").unwrap().is_strict_and_full());
    }

    #[test]
    fn power_sums() {
        let any = ThomaParams::parse("1/3", "1/5").unwrap();
        assert_eq!(power_sum(&any, 1).unwrap(), rat(1, 1));
        let half = ThomaParams::parse("1/2,1/2", "").unwrap();
        assert_eq!(power_sum(&half, 2).unwrap(), rat(1, 2));
        let b = ThomaParams::parse("", "1").unwrap();
        assert_eq!(power_sum(&b, 2).unwrap(), rat(-1, 1));
        assert_eq!(power_sum(&b, 3).unwrap(), rat(1, 1));
        assert!(power_sum(&b, 0).is_err());
        let m = ThomaParams::parse("1/2,1/4", "1/8,1/8").unwrap();
        assert_eq!(power_sum(&m, 2).unwrap(), rat(9, 32));
    }

    #[test]
    fn distances() {
        let a = ThomaParams::parse("1/2,3/10", "1/5").unwrap();
        let b = ThomaParams::parse("1/2,1/4", "1/5,1/20").unwrap();
        assert_eq!(d_inf(&a, &a), rat(0, 1));
        assert_eq!(d_inf(&a, &b), rat(1, 20));
        assert_eq!(d_inf(&b, &a), rat(1, 20));
        let out = lipschitz_check(&a, &b, 1).unwrap();
        assert!(out.lhs.is_zero() && out.holds);
        let same = lipschitz_check(&a, &a, 5).unwrap();
        assert!(same.lhs.is_zero() && same.rhs.is_zero() && same.holds);
    }
}
