use std::fmt;

/// Outcome of one named identity or property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// Compare two values, recording both sides on failure.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Check::new(name, true, "")
        } else {
            Check::new(name, false, format!("lhs = {lhs}, rhs = {rhs}"))
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}
