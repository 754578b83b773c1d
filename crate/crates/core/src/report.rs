//! Outcomes of the axiom suites.

use std::fmt;

use serde::Serialize;

use crate::field::Field;
use crate::matrix::Matrix;

/// A named input to a failed identity, in the text grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub identity: String,
    pub inputs: Vec<Witness>,
    pub scalars: Vec<Witness>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub suite: String,
    /// Number of identity instances evaluated.
    pub checks: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn summary(&self) -> String {
        match &self.counterexample {
            None => format!("{}: pass ({} checks)", self.suite, self.checks),
            Some(c) => format!("{}: FAIL at `{}` after {} checks", self.suite, c.identity, self.checks),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

/// Accumulates identity checks for one suite and stops at the first failure.
pub(crate) struct Checker {
    suite: String,
    checks: usize,
    failure: Option<Counterexample>,
}

type Named<'a, T> = (&'a str, &'a T);

impl Checker {
    pub(crate) fn new(suite: impl Into<String>) -> Self {
        Checker { suite: suite.into(), checks: 0, failure: None }
    }

    pub(crate) fn failed(&self) -> bool {
        self.failure.is_some()
    }

    /// Record `lhs == rhs`. Returns `false` once the suite has failed.
    pub(crate) fn equal<F: Field>(
        &mut self,
        identity: &str,
        inputs: &[Named<'_, Matrix<F>>],
        scalars: &[Named<'_, F>],
        lhs: &Matrix<F>,
        rhs: &Matrix<F>,
    ) -> bool {
        if self.failed() {
            return false;
        }
        self.checks += 1;
        if lhs != rhs {
            self.fail(identity, inputs, scalars, lhs.to_string(), rhs.to_string());
            return false;
        }
        true
    }

    /// Record a boolean property; `expected` describes what should have held.
    pub(crate) fn holds<F: Field>(
        &mut self,
        identity: &str,
        inputs: &[Named<'_, Matrix<F>>],
        scalars: &[Named<'_, F>],
        ok: bool,
        value: &Matrix<F>,
        expected: &str,
    ) -> bool {
        if self.failed() {
            return false;
        }
        self.checks += 1;
        if !ok {
            self.fail(identity, inputs, scalars, value.to_string(), expected.to_string());
            return false;
        }
        true
    }

    fn fail<F: Field>(
        &mut self,
        identity: &str,
        inputs: &[Named<'_, Matrix<F>>],
        scalars: &[Named<'_, F>],
        lhs: String,
        rhs: String,
    ) {
        let w = |name: &str, value: String| Witness { name: name.to_string(), value };
        self.failure = Some(Counterexample {
            identity: identity.to_string(),
            inputs: inputs.iter().map(|(n, m)| w(n, m.to_string())).collect(),
            scalars: scalars.iter().map(|(n, x)| w(n, x.to_string())).collect(),
            lhs,
            rhs,
        });
    }

    pub(crate) fn finish(self) -> AxiomReport {
        AxiomReport { suite: self.suite, checks: self.checks, counterexample: self.failure }
    }
}

/// Deterministic index tuples over `len` samples.
///
/// Each sample appears once in every position via fixed offsets, followed by
/// repeated-argument tuples (all equal, and each adjacent pair equal) on a
/// prefix of the samples.
pub(crate) fn index_tuples(len: usize, arity: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return Vec::new();
    }
    let offsets: Vec<usize> = (0..arity).map(|k| k * (k + 1) / 2).collect();
    let mut out: Vec<Vec<usize>> = (0..len).map(|i| offsets.iter().map(|o| (i + o) % len).collect()).collect();
    for i in 0..len.min(16) {
        out.push(vec![i; arity]);
        for p in 0..arity.saturating_sub(1) {
            let mut t: Vec<usize> = offsets.iter().map(|o| (i + o) % len).collect();
            t[p + 1] = t[p];
            out.push(t);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn tuples_cover_every_position() {
        let ts = index_tuples(7, 3);
        for pos in 0..3 {
            for i in 0..7 {
                assert!(ts.iter().any(|t| t[pos] == i));
            }
        }
        assert!(ts.iter().any(|t| t[0] == t[1] && t[1] == t[2]));
        assert!(index_tuples(0, 3).is_empty());
    }

    #[test]
    fn checker_reports_first_failure_only() {
        let a = Matrix::<Rational>::identity(2);
        let b = Matrix::<Rational>::zeros(2, 2);
        let mut c = Checker::new("demo");
        assert!(c.equal::<Rational>("a = a", &[("a", &a)], &[], &a, &a));
        assert!(!c.equal::<Rational>("a = b", &[("a", &a), ("b", &b)], &[], &a, &b));
        assert!(!c.equal::<Rational>("b = a", &[], &[], &b, &a));
        let r = c.finish();
        assert_eq!(r.checks, 2);
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.identity, "a = b");
        assert_eq!(ce.lhs, "1,0;0,1");
        assert_eq!(ce.rhs, "0,0;0,0");
        assert_eq!(ce.inputs[1], Witness { name: "b".into(), value: "0,0;0,0".into() });
    }

    #[test]
    fn report_json_shape() {
        let r = AxiomReport { suite: "heap".into(), checks: 3, counterexample: None };
        assert_eq!(r.to_json(), serde_json::json!({"suite": "heap", "checks": 3, "counterexample": null}));
        assert!(r.passed());
    }
}
