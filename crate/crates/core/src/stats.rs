//! Adjacent-pair statistics of a path and class filters over them.

use serde::Serialize;
use thiserror::Error;

use crate::path::{below_up_count, Step, StepWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("EmptyPath: the empty word has no first or last step")]
    EmptyPath,
}

/// Statistic vector of a nonempty path. Adjacent pairs are read over
/// positions `1..2n-1` without wraparound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct StatRecord {
    pub n: usize,
    pub m: usize,
    pub peaks: usize,
    pub valleys: usize,
    pub double_ascents: usize,
    pub double_descents: usize,
    pub first: Step,
    pub last: Step,
}

impl StatRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("flat record serializes")
    }
}

pub fn stat_record(path: &StepWord) -> Result<StatRecord, StatsError> {
    let steps = path.steps();
    let (first, last) = match (steps.first(), steps.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(StatsError::EmptyPath),
    };
    let mut rec = StatRecord {
        n: path.semilength(),
        m: below_up_count(steps),
        peaks: 0,
        valleys: 0,
        double_ascents: 0,
        double_descents: 0,
        first,
        last,
    };
    for pair in steps.windows(2) {
        match (pair[0], pair[1]) {
            (Step::Up, Step::Down) => rec.peaks += 1,
            (Step::Down, Step::Up) => rec.valleys += 1,
            (Step::Up, Step::Up) => rec.double_ascents += 1,
            (Step::Down, Step::Down) => rec.double_descents += 1,
        }
    }
    Ok(rec)
}

/// Optional constraints on `(m, k, first, last)`. The empty filter accepts
/// every path, including the empty one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassFilter {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub first: Option<Step>,
    pub last: Option<Step>,
}

impl ClassFilter {
    pub fn any() -> Self {
        ClassFilter::default()
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_first(mut self, first: Step) -> Self {
        self.first = Some(first);
        self
    }

    pub fn with_last(mut self, last: Step) -> Self {
        self.last = Some(last);
        self
    }

    /// `P^{XY}_{n,m,k}`.
    pub fn class(m: usize, k: usize, first: Step, last: Step) -> Self {
        ClassFilter {
            m: Some(m),
            k: Some(k),
            first: Some(first),
            last: Some(last),
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == ClassFilter::default()
    }

    pub fn accepts(&self, rec: &StatRecord) -> bool {
        self.m.is_none_or(|m| rec.m == m)
            && self.k.is_none_or(|k| rec.peaks == k)
            && self.first.is_none_or(|f| rec.first == f)
            && self.last.is_none_or(|l| rec.last == l)
    }
}

pub fn matches(path: &StepWord, filter: &ClassFilter) -> bool {
    if filter.is_empty() {
        return true;
    }
    match stat_record(path) {
        Ok(rec) => filter.accepts(&rec),
        Err(_) => {
            // the empty word only has m = 0 and k = 0, and no end steps
            filter.first.is_none()
                && filter.last.is_none()
                && filter.m.is_none_or(|m| m == 0)
                && filter.k.is_none_or(|k| k == 0)
        }
    }
}
