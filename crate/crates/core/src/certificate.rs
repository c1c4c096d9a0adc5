//! Structured verdicts.
//!
//! All numbers inside a certificate are rendered exactly: integers as
//! decimal strings, fractions as `p/q`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

#[cfg(feature = "serde")]
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize), serde(rename_all = "kebab-case"))]
pub enum Status {
    /// Every check passed and the statement holds.
    Verified,
    /// Every check passed and the hypothesis was driven to a contradiction.
    RefutedAsExpected,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::RefutedAsExpected => "refuted-as-expected",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }

    pub fn is_success(self) -> bool {
        matches!(self, Status::Verified | Status::RefutedAsExpected)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct Witness {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct Certificate {
    pub id: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
}

impl Certificate {
    /// Certificate for a run that could not be carried out.
    pub fn error(id: &str, message: impl Display) -> Self {
        Certificate {
            id: id.into(),
            status: Status::Error,
            checks: Vec::new(),
            witnesses: alloc::vec![Witness { name: "error".into(), value: message.to_string() }],
        }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn witness(&self, name: &str) -> Option<&str> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| w.value.as_str())
    }
}

/// Accumulates checks and witnesses, then settles the status.
#[derive(Debug)]
pub struct CertificateBuilder {
    id: String,
    refutation: bool,
    checks: Vec<Check>,
    witnesses: Vec<Witness>,
}

impl CertificateBuilder {
    /// `refutation` selects the success status: refuted-as-expected when set,
    /// verified otherwise.
    pub fn new(id: &str, refutation: bool) -> Self {
        CertificateBuilder { id: id.into(), refutation, checks: Vec::new(), witnesses: Vec::new() }
    }

    pub fn check_eq<T: PartialEq + Display>(&mut self, name: impl Into<String>, expected: T, got: T) -> bool {
        let pass = expected == got;
        self.check(name, expected.to_string(), got.to_string(), pass)
    }

    pub fn check_true(&mut self, name: impl Into<String>, got: bool) -> bool {
        self.check(name, "true".into(), got.to_string(), got)
    }

    pub fn check(&mut self, name: impl Into<String>, expected: String, got: String, pass: bool) -> bool {
        self.checks.push(Check { name: name.into(), expected, got, pass });
        pass
    }

    pub fn witness(&mut self, name: impl Into<String>, value: impl Display) {
        self.witnesses.push(Witness { name: name.into(), value: value.to_string() });
    }

    /// Copies the checks and witnesses of `other`. An errored `other` becomes
    /// a failed check.
    pub fn absorb(&mut self, other: &Certificate) {
        if other.status == Status::Error {
            let msg = other.witness("error").unwrap_or("error");
            self.check(format!("{} ran", other.id), "ok".into(), msg.into(), false);
        }
        self.checks.extend(other.checks.iter().cloned());
        self.witnesses.extend(other.witnesses.iter().cloned());
    }

    pub fn finish(self) -> Certificate {
        let status = if self.checks.iter().all(|c| c.pass) {
            if self.refutation {
                Status::RefutedAsExpected
            } else {
                Status::Verified
            }
        } else {
            Status::Mismatch
        };
        Certificate { id: self.id, status, checks: self.checks, witnesses: self.witnesses }
    }
}
