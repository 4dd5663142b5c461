//! Regression engine: census-versus-closed-form checks for every counting
//! identity, and exhaustive sweeps of every map over its domain.
//!
//! Failures carry the smallest counterexample in `(n, m, k, word)` order so
//! reports are stable across runs and thread schedules.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bijections::BijectionId;
use crate::enumeration::{build_census_with, Census, CensusConfig, EnumError};
use crate::path::StepWord;

mod identities;
mod suites;

pub use identities::{verify_identity, verify_identity_on};
pub use suites::{
    fprime_case_predicates, hat_du_predicate, verify_bijection, verify_bijection_with, MapFn,
    MapSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("DomainError: n_max must be at least 1")]
    EmptyRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    ChungFeller,
    Eq1,
    Eq2Symmetry,
    Eq3Sum,
    EqPuu,
    EqMixed,
    NarayanaBase,
    TauCount,
    PhiValleyDuality,
    ThetaDuality,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::ChungFeller,
        IdentityId::Eq1,
        IdentityId::Eq2Symmetry,
        IdentityId::Eq3Sum,
        IdentityId::EqPuu,
        IdentityId::EqMixed,
        IdentityId::NarayanaBase,
        IdentityId::TauCount,
        IdentityId::PhiValleyDuality,
        IdentityId::ThetaDuality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ChungFeller => "chung-feller",
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2Symmetry => "eq2",
            IdentityId::Eq3Sum => "eq3",
            IdentityId::EqPuu => "eq-puu",
            IdentityId::EqMixed => "eq-mixed",
            IdentityId::NarayanaBase => "narayana",
            IdentityId::TauCount => "tau-count",
            IdentityId::PhiValleyDuality => "phi-valley",
            IdentityId::ThetaDuality => "theta-duality",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Identity(IdentityId),
    Bijection(BijectionId),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity(id) => id.fmt(f),
            Target::Bijection(id) => id.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A failing parameter tuple, optionally with a witness path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<StepWord>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(w) = &self.word {
            write!(f, " word={w}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub target: Target,
    pub n_range: (usize, usize),
    pub status: Status,
    pub checked_cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub(crate) fn from_sweep(target: Target, n_max: usize, sweep: Sweep) -> Self {
        VerifyReport {
            target,
            n_range: (1, n_max),
            status: if sweep.worst.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checked_cases: sweep.checked,
            counterexample: sweep.worst,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let head = format!(
            "{} {} n={}..{} checked={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.target,
            self.n_range.0,
            self.n_range.1,
            self.checked_cases
        );
        match &self.counterexample {
            Some(cx) => format!("{head} counterexample {cx}"),
            None => head,
        }
    }
}

impl Serialize for VerifyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = if self.counterexample.is_some() { 5 } else { 4 };
        let mut st = serializer.serialize_struct("VerifyReport", fields)?;
        st.serialize_field("target", &self.target.to_string())?;
        st.serialize_field("n_range", &[self.n_range.0, self.n_range.1])?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("checked_cases", &self.checked_cases)?;
        if let Some(cx) = &self.counterexample {
            st.serialize_field("counterexample", cx)?;
        }
        st.end()
    }
}

/// Running tally of a sweep: cases checked and the least counterexample.
#[derive(Debug, Default, Clone)]
pub(crate) struct Sweep {
    pub checked: u64,
    pub worst: Option<Counterexample>,
}

impl Sweep {
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.fail(cx());
        }
    }

    pub fn fail(&mut self, cx: Counterexample) {
        if self.worst.as_ref().is_none_or(|w| cx < *w) {
            self.worst = Some(cx);
        }
    }

    pub fn merge(mut self, other: Sweep) -> Sweep {
        self.checked += other.checked;
        if let Some(cx) = other.worst {
            self.fail(cx);
        }
        self
    }
}

/// Censuses for every semilength `1..=n_max`.
#[derive(Debug, Clone)]
pub struct CensusTable {
    censuses: Vec<Census>,
}

impl CensusTable {
    pub fn build(n_max: usize, config: &CensusConfig) -> Result<Self, VerifyError> {
        if n_max == 0 {
            return Err(VerifyError::EmptyRange);
        }
        let censuses = (1..=n_max)
            .map(|n| build_census_with(n, config))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CensusTable { censuses })
    }

    pub fn from_censuses(censuses: Vec<Census>) -> Self {
        debug_assert!(censuses.iter().enumerate().all(|(i, c)| c.n() == i + 1));
        CensusTable { censuses }
    }

    pub fn n_max(&self) -> usize {
        self.censuses.len()
    }

    pub fn get(&self, n: usize) -> &Census {
        &self.censuses[n - 1]
    }

    pub fn get_mut(&mut self, n: usize) -> &mut Census {
        &mut self.censuses[n - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_json_shape() {
        let r = VerifyReport {
            target: Target::Identity(IdentityId::Eq2Symmetry),
            n_range: (1, 8),
            status: Status::Pass,
            checked_cases: 1234,
            counterexample: None,
        };
        assert_eq!(
            r.to_json(),
            r#"{"target":"eq2","n_range":[1,8],"status":"pass","checked_cases":1234}"#
        );
        assert_eq!(r.to_text(), "PASS eq2 n=1..8 checked=1234");
    }

    #[test]
    fn sweep_keeps_least_counterexample() {
        let cx = |n, m, word: &str| Counterexample {
            n,
            m: Some(m),
            k: None,
            word: Some(word.parse().unwrap()),
            detail: String::new(),
        };
        let mut s = Sweep::default();
        s.fail(cx(3, 1, "DU".repeat(3).as_str()));
        s.fail(cx(3, 1, "UDDUUD"));
        s.fail(cx(4, 0, "UUUUDDDD"));
        // U sorts before D
        assert_eq!(s.worst.unwrap().word.unwrap().to_string(), "UDDUUD");
    }

    #[test]
    fn identity_names() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
    }
}
