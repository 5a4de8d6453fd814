use std::fmt;

/// Where a check failed and what was left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub at: String,
    pub residual: String,
}

/// Result of a verifier: pass, a failing witness, or not applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    NotApplicable(String),
}

impl Outcome {
    pub fn fail(at: impl Into<String>, residual: impl fmt::Display) -> Self {
        Outcome::Fail(Witness { at: at.into(), residual: residual.to_string() })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    /// First failure wins; `NotApplicable` only if nothing failed.
    pub fn and(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Fail(w), _) => Outcome::Fail(w),
            (_, Outcome::Fail(w)) => Outcome::Fail(w),
            (Outcome::NotApplicable(r), _) | (_, Outcome::NotApplicable(r)) => Outcome::NotApplicable(r),
            _ => Outcome::Pass,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => write!(f, "pass"),
            Outcome::Fail(w) => write!(f, "fail at {}: residual {}", w.at, w.residual),
            Outcome::NotApplicable(r) => write!(f, "not-applicable ({r})"),
        }
    }
}
