use serde::{Deserialize, Serialize};

use crate::exactalg::{Monomial, ZARewrite};

/// Outcome of one machine check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Name of the check, e.g. `strong-integrality`.
    pub check: String,
    /// Human-readable description of the instance checked.
    pub instance: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending: Option<Monomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rewrite: Option<ZARewrite>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>, instance: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            instance: instance.into(),
            pass: true,
            detail: String::new(),
            offending: None,
            rewrite: None,
        }
    }

    pub fn fail(check: impl Into<String>, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            instance: instance.into(),
            pass: false,
            detail: detail.into(),
            offending: None,
            rewrite: None,
        }
    }

    /// Pass iff `ok`, with `detail` recorded on failure.
    pub fn from_bool(
        check: impl Into<String>,
        instance: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> Self {
        if ok {
            Self::pass(check, instance)
        } else {
            Self::fail(check, instance, detail)
        }
    }

    /// Turns a computation error into a failed verdict.
    pub fn from_error(check: impl Into<String>, instance: impl Into<String>, err: &crate::Error) -> Self {
        Self::fail(check, instance, format!("error: {err}"))
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn with_offending(mut self, m: Monomial) -> Self {
        self.offending = Some(m);
        self
    }

    pub fn with_rewrite(mut self, r: ZARewrite) -> Self {
        self.rewrite = Some(r);
        self
    }

    /// Renames the check and instance, keeping the outcome.
    pub fn relabel(mut self, check: impl Into<String>, instance: impl Into<String>) -> Self {
        self.check = check.into();
        self.instance = instance.into();
        self
    }
}

/// True when every verdict passed.
pub fn all_pass<'a>(vs: impl IntoIterator<Item = &'a Verdict>) -> bool {
    vs.into_iter().all(|v| v.pass)
}
