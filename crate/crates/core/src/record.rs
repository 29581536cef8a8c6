//! One checked identity instance.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Both sides of an identity, their residual and the absolute tolerance.
///
/// The verdict is `Pass` iff |residual| ≤ tol; a NaN residual fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tol: f64,
    pub verdict: Verdict,
    pub method: String,
    pub terms: u64,
    pub note: Option<String>,
    #[serde(skip)]
    inverted: bool,
}

impl VerificationRecord {
    /// Record with an absolute tolerance.
    pub fn absolute(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let mut r = Self {
            id: id.into(),
            lhs,
            rhs,
            residual: lhs - rhs,
            tol,
            verdict: Verdict::Fail,
            method: String::new(),
            terms: 0,
            note: None,
            inverted: false,
        };
        r.verdict = r.judge();
        r
    }

    /// Record whose tolerance is `rel` times |rhs|.
    pub fn relative(id: impl Into<String>, lhs: f64, rhs: f64, rel: f64) -> Self {
        Self::absolute(id, lhs, rhs, rel * rhs.abs())
    }

    /// Record whose tolerance is `rel` times max(1, |rhs|).
    pub fn scaled(id: impl Into<String>, lhs: f64, rhs: f64, rel: f64) -> Self {
        Self::absolute(id, lhs, rhs, rel * rhs.abs().max(1.0))
    }

    /// A record for an evaluation that could not be carried out.
    pub fn failed(id: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::absolute(id, f64::NAN, f64::NAN, 0.0);
        r.note = Some(reason.into());
        r
    }

    pub fn with_method(mut self, method: impl Into<String>) -> Self {
        self.method = method.into();
        self
    }

    pub fn with_terms(mut self, terms: u64) -> Self {
        self.terms = terms;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Reverses the verdict: used for records asserting that a printed
    /// formula does *not* hold.
    pub fn expect_mismatch(mut self) -> Self {
        self.inverted = !self.inverted;
        self.verdict = self.judge();
        self
    }

    /// Replaces the tolerance and recomputes the verdict.
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self.verdict = self.judge();
        self
    }

    fn judge(&self) -> Verdict {
        if self.residual.is_nan() {
            return Verdict::Fail;
        }
        if (self.residual.abs() <= self.tol) != self.inverted {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}
