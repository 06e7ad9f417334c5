//! Verdict records shared by the inequality sweeps.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::moves::{CaseTag, MoveQuadruple};
use crate::partition::Partition;
use crate::{fmt_rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

/// Checks the tagged inequality: `lhs ≥ rhs` for `r < i`, `lhs ≤ rhs` for
/// `r > î`; nothing is asserted in the `between` case.
pub fn judge(case: CaseTag, lhs: &Rat, rhs: &Rat) -> Verdict {
    judge_ordering(case, lhs.cmp(rhs))
}

pub fn judge_ordering(case: CaseTag, ord: Ordering) -> Verdict {
    match (case, ord) {
        (CaseTag::Between, _) => Verdict::NotApplicable,
        (CaseTag::Above, Ordering::Less) | (CaseTag::Below, Ordering::Greater) => Verdict::Fails,
        _ => Verdict::Holds,
    }
}

/// One checked configuration. Both sides are exact rationals in `"num/den"`
/// form; `detail` carries check-specific context (variable count, `t`, the
/// first failing monomial).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceVerdict {
    pub lambda: Partition,
    pub lambda_hat: Partition,
    pub mu: Partition,
    pub mu_hat: Partition,
    pub case: CaseTag,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
    pub equality: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub detail: BTreeMap<String, String>,
}

impl InstanceVerdict {
    pub fn new(q: &MoveQuadruple, lhs: &Rat, rhs: &Rat) -> Self {
        Self {
            lambda: q.lambda.clone(),
            lambda_hat: q.lambda_hat.clone(),
            mu: q.mu.clone(),
            mu_hat: q.mu_hat.clone(),
            case: q.case,
            lhs: fmt_rat(lhs),
            rhs: fmt_rat(rhs),
            verdict: judge(q.case, lhs, rhs),
            equality: lhs == rhs,
            detail: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: &str, value: impl ToString) -> Self {
        self.detail.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub equalities: usize,
}

/// Report of a sweep. `parameters` are flattened into the top level, so a
/// Jordan-type sweep serializes as `{"n": .., "p": .., "quadruples": [..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub command: String,
    #[serde(flatten)]
    pub parameters: BTreeMap<String, serde_value::Value>,
    pub quadruples: Vec<InstanceVerdict>,
    pub counterexamples: Vec<InstanceVerdict>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Minimal JSON-like parameter values, kept local so the core crate does not
/// depend on a JSON library.
pub mod serde_value {
    use serde::{Deserialize, Serialize};

    #[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
    #[serde(untagged)]
    pub enum Value {
        Int(i64),
        Text(String),
        List(Vec<Value>),
    }

    impl From<usize> for Value {
        fn from(v: usize) -> Self {
            Value::Int(v as i64)
        }
    }

    impl From<u64> for Value {
        fn from(v: u64) -> Self {
            Value::Int(v as i64)
        }
    }

    impl From<&str> for Value {
        fn from(v: &str) -> Self {
            Value::Text(v.to_string())
        }
    }

    impl From<String> for Value {
        fn from(v: String) -> Self {
            Value::Text(v)
        }
    }
}

impl VerdictReport {
    pub fn new(command: &str, quadruples: Vec<InstanceVerdict>) -> Self {
        let mut summary = Summary {
            total: quadruples.len(),
            ..Summary::default()
        };
        for q in &quadruples {
            match q.verdict {
                Verdict::Holds => summary.holds += 1,
                Verdict::Fails => summary.fails += 1,
                Verdict::NotApplicable => summary.not_applicable += 1,
            }
            if q.equality && q.verdict != Verdict::NotApplicable {
                summary.equalities += 1;
            }
        }
        let counterexamples = quadruples
            .iter()
            .filter(|q| q.verdict == Verdict::Fails)
            .cloned()
            .collect();
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            quadruples,
            counterexamples,
            summary,
            wall_time_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_value::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn all_hold(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn equality_cases(&self) -> impl Iterator<Item = &InstanceVerdict> {
        self.quadruples
            .iter()
            .filter(|q| q.equality && q.verdict != Verdict::NotApplicable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn judging() {
        assert_eq!(judge(CaseTag::Above, &rat(1, 2), &rat(1, 3)), Verdict::Holds);
        assert_eq!(judge(CaseTag::Above, &rat(1, 4), &rat(1, 3)), Verdict::Fails);
        assert_eq!(judge(CaseTag::Below, &rat(2, 5), &rat(1, 2)), Verdict::Holds);
        assert_eq!(judge(CaseTag::Below, &rat(1, 2), &rat(2, 5)), Verdict::Fails);
        assert_eq!(judge(CaseTag::Below, &rat(1, 2), &rat(1, 2)), Verdict::Holds);
        assert_eq!(
            judge(CaseTag::Between, &rat(0, 1), &rat(5, 1)),
            Verdict::NotApplicable
        );
    }
}
