//! Univariate polynomials in `t` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Ring;
use crate::Rat;

/// Coefficients are stored lowest degree first with trailing zeros trimmed,
/// so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoly1 {
    coeffs: Vec<Rat>,
}

impl RationalPoly1 {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u32) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let mut c = vec![Rat::zero(); k as usize + 1];
        c[0] = Rat::one();
        c[k as usize] = -Rat::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    /// Exact quotient by `(t - root)`; `None` unless `root` is a root.
    pub fn div_linear(&self, root: &Rat) -> Option<Self> {
        if self.coeffs.is_empty() {
            return Some(Self::zero());
        }
        // synthetic division, highest degree first
        let d = self.coeffs.len() - 1;
        let mut out = vec![Rat::zero(); d];
        let mut carry = Rat::zero();
        for k in (0..=d).rev() {
            let v = &self.coeffs[k] + &carry * root;
            if k == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                out[k - 1] = v.clone();
            }
            carry = v;
        }
        Some(Self::new(out))
    }
}

/// Evaluates `num / den` at `t`, cancelling common factors `(t - t0)` first,
/// so removable singularities get their limiting value.
pub fn eval_ratio(num: &RationalPoly1, den: &RationalPoly1, t: &Rat) -> Option<Rat> {
    let (mut num, mut den) = (num.clone(), den.clone());
    loop {
        let dv = den.eval(t);
        if !dv.is_zero() {
            return Some(num.eval(t) / dv);
        }
        if den.is_zero() || !num.eval(t).is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Rat::zero());
        }
        num = num.div_linear(t)?;
        den = den.div_linear(t)?;
    }
}

impl Zero for RationalPoly1 {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RationalPoly1 {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl Add for RationalPoly1 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Self::new(long)
    }
}

impl Neg for RationalPoly1 {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for RationalPoly1 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalPoly1 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl Ring for RationalPoly1 {
    fn from_int(v: i64) -> Self {
        Self::constant(BigRational::from_integer(v.into()))
    }
}

impl fmt::Display for RationalPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        Ok(())
    }
}
