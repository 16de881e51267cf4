//! Machine-readable verdicts. Keys are held in ordered maps so serialized
//! certificates are byte-stable.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Certificate {
    pub fn pass(claim: impl Into<String>) -> Self {
        Certificate {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    /// A failing certificate always carries its counterexample.
    pub fn fail(claim: impl Into<String>, witness: Value) -> Self {
        Certificate {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    /// Pass or fail on `ok`; `witness` is attached in both cases.
    pub fn from_check(claim: impl Into<String>, ok: bool, witness: Value) -> Self {
        let mut c = if ok {
            Certificate::pass(claim)
        } else {
            Certificate::fail(claim, Value::Null)
        };
        c.witness = Some(witness);
        c
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate is always serializable")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::parse(e.line(), e.to_string()))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        write!(f, "[{tag}] {}", self.claim)?;
        for (k, v) in &self.parameters {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fail_carries_witness() {
        let c = Certificate::fail("x", json!({"pair": [1, 2]}));
        assert!(!c.passed());
        assert!(c.witness.is_some());
    }

    #[test]
    fn json_is_key_ordered_and_round_trips() {
        let c = Certificate::pass("demo")
            .param("zeta", 1)
            .param("alpha", "a")
            .with_witness(json!({"b": 2, "a": 1}));
        let text = c.to_json();
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
    }
}
