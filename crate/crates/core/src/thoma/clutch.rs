use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::measure::{dominates_flow, tv_distance, MeasureOnLevel};
use crate::partition::{dominates_unchecked, Partition};
use crate::{fmt_rat, Rat};

use super::params::ThomaParams;
use super::sampler::extreme_measure;

/// Parameter pair bracketing a limit point `(α, β)`: `plus` pushes mass into
/// the rows, `minus` into the columns, and `d_∞(minus, plus) < ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct Clutch {
    pub minus: ThomaParams,
    pub plus: ThomaParams,
    /// Slack `V > 2` used for the plus side.
    pub slack_plus: Rat,
    pub slack_minus: Rat,
}

fn pow2(k: usize) -> Rat {
    Rat::from_integer(BigInt::one() << k)
}

/// First 1-based index with entry `< ε/2`; entries past the end count as 0.
fn threshold(at: impl Fn(usize) -> Rat, half: &Rat) -> usize {
    (1..).find(|&i| at(i) < *half).expect("entries vanish eventually")
}

/// Plus side. Big rows (`α_i ≥ ε/2`) gain a small, strictly decreasing
/// increment; big columns lose `ε/(V 2^{L_β+1−j})`; small columns are
/// dropped; the freed mass is spread over filler rows
/// `ε/2 − ε/V + ε/(V 2^i)` with a final remainder row, so the total is 1.
fn clutch_plus(params: &ThomaParams, eps: &Rat) -> (ThomaParams, Rat) {
    let half = eps / Rat::from_integer(2.into());
    let la = threshold(|i| params.alpha_at(i), &half);
    let lb = threshold(|j| params.beta_at(j), &half);
    let small = params.alpha_at(la).max(params.beta_at(lb));
    let gap = &half - small;
    // smallest integer V ≥ 3 with ε/V < gap, so small entries stay below ε/2 − ε/V
    let v = Rat::from_integer((eps / &gap).floor().to_integer() + 1).max(Rat::from_integer(3.into()));
    let ev = eps / &v;

    let beta: Vec<Rat> = (1..lb)
        .map(|j| params.beta_at(j) - &ev / pow2(lb + 1 - j))
        .collect();
    let nb = la - 1;
    let big: Rat = (1..la).map(|i| params.alpha_at(i)).sum();
    let free = Rat::one() - big - beta.iter().sum::<Rat>();
    let budget = if nb > 0 {
        free.clone().min(&ev / Rat::from_integer(4.into()))
    } else {
        Rat::zero()
    };

    let mut alpha = Vec::new();
    if nb > 0 {
        let norm = Rat::one() - Rat::one() / pow2(nb);
        let tau = &ev / Rat::from_integer(BigInt::from(16 * (nb + 1) * (nb + 1)));
        let centre = Rat::new(BigInt::from(nb + 1), BigInt::from(2));
        for i in 1..=nb {
            let share = &budget / pow2(i) / &norm;
            let tilt = &tau * (&centre - Rat::from_integer(BigInt::from(i)));
            alpha.push(params.alpha_at(i) + share + tilt);
        }
    }
    let mut rest = free - budget;
    let mut i = la;
    loop {
        let filler = &half - &ev + &ev / pow2(i);
        if filler > rest {
            break;
        }
        rest -= &filler;
        alpha.push(filler);
        i += 1;
    }
    if rest.is_positive() {
        alpha.push(rest);
    }
    let out = ThomaParams::new(alpha, beta).expect("construction stays inside the simplex");
    (out, v)
}

/// Builds `(α⁻, β⁻)` and `(α⁺, β⁺)`: both strictly decreasing, finite,
/// summing to 1, each within `ε/2` of `params` in `d_∞`. The minus side is
/// the plus side of `(β, α)`, swapped back.
pub fn clutch_params(params: &ThomaParams, eps: &Rat) -> Result<Clutch> {
    if !eps.is_positive() {
        return Err(Error::Precondition(format!(
            "ε must be positive, got {}",
            fmt_rat(eps)
        )));
    }
    let (plus, slack_plus) = clutch_plus(params, eps);
    let (minus_swapped, slack_minus) = clutch_plus(&params.swapped(), eps);
    Ok(Clutch {
        minus: minus_swapped.swapped(),
        plus,
        slack_plus,
        slack_minus,
    })
}

/// `ρ⁻ ≤ δ_λ ≤ ρ⁺` built from the extreme measures of a clutch.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket {
    pub rho_minus: MeasureOnLevel,
    pub rho_plus: MeasureOnLevel,
    /// `d_var(ρ⁻, M^{minus})`
    pub tv_minus: Rat,
    pub tv_plus: Rat,
    pub minus_below: bool,
    pub plus_above: bool,
}

/// Keeps the mass of `M` on diagrams strictly above (`above = true`) or
/// strictly below `λ` in dominance and moves the rest onto `λ`.
fn truncate(m: &MeasureOnLevel, lambda: &Partition, above: bool) -> MeasureOnLevel {
    let mut kept = Vec::new();
    let mut total = Rat::zero();
    for (mu, mass) in m.iter() {
        let strict = mu != lambda
            && if above {
                dominates_unchecked(mu, lambda)
            } else {
                dominates_unchecked(lambda, mu)
            };
        if strict {
            total += mass;
            kept.push((mu.clone(), mass.clone()));
        }
    }
    kept.push((lambda.clone(), Rat::one() - total));
    MeasureOnLevel::new(m.level(), kept).expect("masses stay nonnegative")
}

pub fn clutch_bracket(lambda: &Partition, clutch: &Clutch) -> Result<Bracket> {
    let k = lambda.size();
    let m_plus = extreme_measure(k, &clutch.plus);
    let m_minus = extreme_measure(k, &clutch.minus);
    let rho_plus = truncate(&m_plus, lambda, true);
    let rho_minus = truncate(&m_minus, lambda, false);
    let delta = MeasureOnLevel::delta(lambda);
    Ok(Bracket {
        tv_plus: tv_distance(&rho_plus, &m_plus)?,
        tv_minus: tv_distance(&rho_minus, &m_minus)?,
        plus_above: dominates_flow(&rho_plus, &delta)?.0,
        minus_below: dominates_flow(&delta, &rho_minus)?.0,
        rho_minus,
        rho_plus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use crate::thoma::d_inf;
    use crate::thoma::staircase_sequence;

    fn params(a: &str, b: &str) -> ThomaParams {
        ThomaParams::parse(a, b).unwrap()
    }

    fn check(ps: &ThomaParams, eps: &Rat) -> Clutch {
        let c = clutch_params(ps, eps).unwrap();
        for side in [&c.plus, &c.minus] {
            assert!(side.is_strict_and_full(), "{ps} → {side}");
            assert!(side.alpha().iter().chain(side.beta()).all(|x| x.is_positive()));
            assert!(d_inf(ps, side) < eps / rat(2, 1), "{ps} → {side}");
        }
        assert!(d_inf(&c.minus, &c.plus) < *eps);
        c
    }

    #[test]
    fn postconditions() {
        let eps_list = [rat(1, 10), rat(1, 100), rat(1, 3)];
        let cases = [
            params("1/2,1/2", ""),
            params("", ""),
            params("1/2,1/4", "1/8,1/8"),
            params("1/3,1/3,1/3", ""),
            params("", "1/2,1/2"),
            params("1/20", "1/20"),
            params("2/5,2/5", "1/5"),
            params("1", ""),
        ];
        for ps in &cases {
            for eps in &eps_list {
                check(ps, eps);
            }
        }
        assert!(clutch_params(&cases[0], &rat(0, 1)).is_err());
    }

    #[test]
    fn bracket_small_levels() {
        let ps = params("1/2,1/4", "1/8,1/8");
        let c = check(&ps, &rat(1, 10));
        for k in [4, 6, 7] {
            let lambda = staircase_sequence(&ps, k).unwrap();
            let b = clutch_bracket(&lambda, &c).unwrap();
            assert!(b.plus_above && b.minus_below, "k={k}");
            assert!(b.rho_plus.total_mass().is_one());
        }
    }
}
