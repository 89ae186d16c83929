//! Pass/fail records shared by axiom verification and the property suites.

use serde::Serialize;

/// Outcome of one checked property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Stable identifier of the property, e.g. `adjointness` or `ext_composition`.
    pub id: String,
    /// Short statement of what was checked.
    pub statement: String,
    pub passed: bool,
    /// Number of instances examined.
    pub cases: u64,
    /// First violating instance in canonical enumeration order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            statement: statement.into(),
            passed: true,
            cases: 0,
            witness: None,
        }
    }

    /// Record one instance. Only the first failure is kept as witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness.into());
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => format!("all {} checks passed", self.checks.len()),
            Some(c) => format!(
                "{} failed ({}): {}",
                c.id,
                c.statement,
                c.witness.as_deref().unwrap_or("no witness")
            ),
        }
    }
}
