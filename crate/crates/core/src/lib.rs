//! Exact combinatorics of the Young graph.
//!
//! The crate covers partitions and the dominance order ([`partition`],
//! [`moves`], [`poset`]), dimensions and their finite-field analogue
//! ([`dimension`]), measures on a level of the graph with projections and
//! stochastic dominance ([`measure`]), Schur and Hall–Littlewood evaluations
//! ([`symfunc`]) and the Thoma-simplex machinery: specializations, extreme
//! coherent measures, the growth sampler and the approximation experiments
//! ([`thoma`]).
//!
//! Evaluation code is generic over [`scalar::Scalar`] / [`scalar::Ring`];
//! everything that decides an inequality runs on [`Rat`].

pub mod dimension;
pub mod error;
pub mod linalg;
pub mod measure;
pub mod moves;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod scalar;
pub mod symfunc;
pub mod thoma;
pub mod verdict;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

pub use error::{Error, Result};
pub use measure::MeasureOnLevel;
pub use moves::{CaseTag, MoveQuadruple};
pub use partition::{BoxMove, Cell, Partition};
pub use poly::RationalPoly1;
pub use thoma::ThomaParams;
pub use verdict::{Verdict, VerdictReport};

/// Exact rational.
pub type Rat = BigRational;
/// Arbitrary-precision natural number.
pub type Nat = BigUint;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Specialization `s_λ(α, β)` evaluated exactly.
pub type ExactSpecialization = thoma::Specialization<Rat>;
/// Specialization evaluated in double precision with rescaled determinants.
pub type FloatSpecialization = thoma::Specialization<f64>;
/// Growth sampler with exact transition probabilities.
pub type ExactSampler = thoma::GrowthSampler<Rat>;
/// Growth sampler for large levels.
pub type FloatSampler = thoma::GrowthSampler<f64>;

/// Formats a rational as `"num/den"`, also for integers.
pub fn fmt_rat(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or an integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parsed = if s.contains('/') {
        s.parse::<Rat>().ok()
    } else {
        s.parse::<BigInt>().ok().map(Rat::from_integer)
    };
    parsed.ok_or_else(|| Error::ParseRational(s.to_string()))
}

/// `r(n, d)` shorthand used throughout tests and examples.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}
