//! JSON-serializable command results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::identity::IdentityProof;
use crate::rnc::RncVerdict;
use crate::rsb::RsbVerdict;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A named witness: one exact value, a list, or a matrix, all as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Value(String),
    List(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

impl Witness {
    pub fn value(x: &Scalar) -> Witness {
        Witness::Value(format_scalar(x))
    }

    pub fn list<'a, I: IntoIterator<Item = &'a Scalar>>(xs: I) -> Witness {
        Witness::List(xs.into_iter().map(format_scalar).collect())
    }

    pub fn matrix<R: AsRef<[Scalar]>>(rows: &[R]) -> Witness {
        Witness::Matrix(rows.iter().map(|r| r.as_ref().iter().map(format_scalar).collect()).collect())
    }

    /// Parses the witness back into exact values, row by row.
    pub fn scalars(&self) -> crate::Result<Vec<Vec<Scalar>>> {
        let parse = |v: &[String]| v.iter().map(|s| parse_scalar(s)).collect::<crate::Result<Vec<_>>>();
        match self {
            Witness::Value(s) => Ok(vec![vec![parse_scalar(s)?]]),
            Witness::List(v) => Ok(vec![parse(v)?]),
            Witness::Matrix(m) => m.iter().map(|r| parse(r)).collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proved: Option<bool>,
    #[serde(default)]
    pub witnesses: BTreeMap<String, Witness>,
    #[serde(default)]
    pub hypothesis_errors: Vec<String>,
    #[serde(default)]
    pub timing_ms: u64,
    /// Command-specific fields such as degrees, ranks and trial counts.
    #[serde(flatten)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl Verdict {
    pub fn new(command: &str) -> Verdict {
        Verdict { command: command.to_string(), ..Verdict::default() }
    }

    /// A verdict that records a violated hypothesis instead of an answer.
    pub fn hypothesis(command: &str, err: &Error) -> Verdict {
        Verdict { hypothesis_errors: vec![err.to_string()], ..Verdict::new(command) }
    }

    pub fn witness(mut self, name: &str, w: Witness) -> Verdict {
        self.witnesses.insert(name.to_string(), w);
        self
    }

    pub fn with<V: Into<serde_json::Value>>(mut self, key: &str, value: V) -> Verdict {
        self.extra.insert(key.to_string(), value.into());
        self
    }

    /// Process exit code: 0 true or proved, 1 false, 2 hypothesis error.
    pub fn exit_code(&self) -> i32 {
        if !self.hypothesis_errors.is_empty() {
            2
        } else if self.member.or(self.proved).unwrap_or(true) {
            0
        } else {
            1
        }
    }

    pub fn from_rnc(command: &str, v: &RncVerdict) -> Verdict {
        Verdict { member: Some(v.member), ..Verdict::new(command) }
            .witness("equations", Witness::list(&v.equations))
            .witness("projections", Witness::list(&v.projections))
            .with("witnesses_agree", v.witnesses_agree)
    }

    pub fn from_rsb(command: &str, v: &RsbVerdict) -> Verdict {
        Verdict { member: Some(v.quadric_exists && v.rsb_type), ..Verdict::new(command) }
            .witness("F", Witness::value(&v.f))
            .witness("G", Witness::value(&v.g))
            .witness("normalized_q", Witness::matrix(v.normalized.q()))
            .with("quadric_exists", v.quadric_exists)
            .with("rsb_type", v.rsb_type)
            .with("witnesses_agree", v.agree())
            .with("r_rank", v.r_rank as u64)
    }

    pub fn from_proof(command: &str, p: &IdentityProof) -> Verdict {
        let s = &p.stats;
        let mut v = Verdict { proved: Some(p.proved), ..Verdict::new(command) }.with("mode", p.mode.as_str());
        if let Some(d) = s.lhs_degree {
            v = v.with("degree", d as u64).with("lhs_degree", d as u64);
        }
        if let Some(d) = s.rhs_degree {
            v = v.with("rhs_degree", d as u64);
        }
        if !s.lhs_block_degrees.is_empty() {
            v = v.with("lhs_block_degrees", serde_json::json!(s.lhs_block_degrees));
            v = v.with("rhs_block_degrees", serde_json::json!(s.rhs_block_degrees));
        }
        if p.lhs.is_some() {
            v = v.with("lhs_terms", s.lhs_terms as u64).with("rhs_terms", s.rhs_terms as u64);
        }
        if let Some(diff) = &p.difference {
            v = v.with("difference_terms", diff.num_terms() as u64);
        }
        if s.trials > 0 {
            v = v.with("trials", s.trials as u64);
        }
        if let Some(b) = &s.failure_bound {
            v = v.witness("failure_bound", Witness::value(b));
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn witness_round_trip() {
        let v = Verdict::new("x")
            .witness("a", Witness::value(&ratio(-3, 7)))
            .witness("b", Witness::list(&[ratio(1, 2), ratio(4, 1)]))
            .with("degree", 12u64);
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.contains("\"-3/7\"") && text.contains("\"degree\":12"));
        let back: Verdict = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.witnesses["b"].scalars().unwrap(), vec![vec![ratio(1, 2), ratio(4, 1)]]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict { member: Some(true), ..Verdict::new("c") }.exit_code(), 0);
        assert_eq!(Verdict { proved: Some(false), ..Verdict::new("c") }.exit_code(), 1);
        let e = Error::Degeneracy("x".into());
        assert_eq!(Verdict::hypothesis("c", &e).exit_code(), 2);
    }
}
