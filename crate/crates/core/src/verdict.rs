//! Three-valued monitor verdicts.

use serde::{Deserialize, Serialize};

/// Outcome of one property check.
///
/// `Unverified` means the check could not be carried out (typically because the
/// applicability condition `min N(s,a) > 0` fails, or a prerequisite estimate is
/// not yet trustworthy), not that the property is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    /// The method is not applicable yet; no statement about the property.
    Unverified,
    /// The property was evaluated and does not hold.
    Violated,
    /// The property was evaluated and holds.
    Satisfied,
}

impl VerdictStatus {
    /// Stable lowercase name used in CSV output and monitor logs.
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Unverified => "unverified",
            VerdictStatus::Violated => "violated",
            VerdictStatus::Satisfied => "satisfied",
        }
    }

    /// Process exit code for CLI gating: 0 satisfied, 2 violated, 3 unverified.
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictStatus::Satisfied => 0,
            VerdictStatus::Violated => 2,
            VerdictStatus::Unverified => 3,
        }
    }
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
