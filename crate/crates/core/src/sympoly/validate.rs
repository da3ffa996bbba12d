use serde::Serialize;

use crate::error::Error;

/// Whether constructors refuse parameters that fail their constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Validation {
    #[default]
    Enforce,
    /// Build anyway; used to probe parameters outside the orthogonality range.
    Override,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail per constraint. Never an error by itself.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ConstraintCheck>,
}

impl ValidationReport {
    pub fn check(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(ConstraintCheck { name, passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConstraintCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed(&self, name: &str) -> bool {
        self.failures().any(|c| c.name == name)
    }

    /// `Err(Constraint)` when something failed and validation is enforced.
    pub fn enforce(&self, mode: Validation) -> Result<(), Error> {
        if mode == Validation::Enforce && !self.passed() {
            let msg = self
                .failures()
                .map(|c| format!("{} ({})", c.name, c.detail))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::Constraint(msg));
        }
        Ok(())
    }
}

/// True when `2x` is an even integer, i.e. `(−1)^{2x} = 1`.
pub(crate) fn doubled_is_even(x: f64) -> bool {
    let two = 2.0 * x;
    two == two.round() && (two.round() as i64) % 2 == 0
}
