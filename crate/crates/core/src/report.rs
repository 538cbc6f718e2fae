//! Verdict containers shared by every checker.

use serde::Serialize;

/// One failed instance of an axiom, with the element indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, witness: Vec<usize>) -> Self {
        Self {
            axiom: axiom.into(),
            witness,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of an exhaustive axiom scan. `passed` holds iff `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
    /// Set when the violation list reached the witness cap and may be incomplete.
    pub truncated: bool,
}

impl Default for AxiomReport {
    fn default() -> Self {
        Self::pass()
    }
}

impl AxiomReport {
    pub fn pass() -> Self {
        Self {
            passed: true,
            violations: Vec::new(),
            truncated: false,
        }
    }

    pub(crate) fn from_violations(violations: Vec<Violation>, cap: usize) -> Self {
        let truncated = violations.len() >= cap;
        Self {
            passed: violations.is_empty(),
            violations,
            truncated,
        }
    }

    /// Conjunction of two reports; the violation list stays within `cap`.
    pub fn and(mut self, other: AxiomReport, cap: usize) -> Self {
        self.violations.extend(other.violations);
        let over = self.violations.len() > cap;
        self.violations.truncate(cap);
        self.passed = self.violations.is_empty();
        self.truncated = self.truncated || other.truncated || over || self.violations.len() >= cap;
        self
    }

    pub fn axioms_violated(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.violations.iter().map(|v| v.axiom.as_str()).collect();
        names.dedup();
        names
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
}

/// An existential witness found for a pair `(a, x)`: elements `(y, z)` with
/// `x ∈ a+y` and `x ∈ z+a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistentialWitness {
    pub condition: String,
    pub a: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// Verdict of a submodule-level check or theorem instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmoduleCertificate {
    pub verdict: bool,
    pub direction: String,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<ExistentialWitness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
}

impl SubmoduleCertificate {
    pub(crate) fn new(direction: impl Into<String>) -> Self {
        Self {
            verdict: true,
            direction: direction.into(),
            violations: Vec::new(),
            witnesses: Vec::new(),
            facts: Vec::new(),
        }
    }

    pub(crate) fn fail(&mut self, v: Violation) {
        self.verdict = false;
        self.violations.push(v);
    }

    pub(crate) fn fact(&mut self, name: impl Into<String>, holds: bool) {
        self.facts.push(Fact {
            name: name.into(),
            holds,
        });
    }

    pub fn fact_value(&self, name: &str) -> Option<bool> {
        self.facts.iter().find(|f| f.name == name).map(|f| f.holds)
    }
}
