//! Exhaustive generation of balanced words and the exact census that every
//! closed form is checked against.

use std::collections::BTreeMap;
use std::io;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::path::{Step, StepWord};
use crate::stats::{matches, ClassFilter};

pub const DEFAULT_MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("ResourceBound: n = {n} exceeds the configured maximum {max}")]
    ResourceBound { n: usize, max: usize },
    #[error("DomainError: census requires n >= 1")]
    EmptySemilength,
}

/// All balanced words of semilength `n` in lexicographic order, `U < D`.
#[derive(Debug, Clone)]
pub struct PathIter {
    current: Option<Vec<Step>>,
}

impl PathIter {
    pub fn new(n: usize) -> Self {
        let mut start = vec![Step::Up; n];
        start.extend(std::iter::repeat_n(Step::Down, n));
        PathIter {
            current: Some(start),
        }
    }
}

fn advance(steps: &mut [Step]) -> bool {
    let len = steps.len();
    if len < 2 {
        return false;
    }
    let Some(i) = (0..len - 1).rev().find(|&i| steps[i] < steps[i + 1]) else {
        return false;
    };
    let j = (i + 1..len)
        .rev()
        .find(|&j| steps[j] > steps[i])
        .expect("steps[i+1] qualifies");
    steps.swap(i, j);
    steps[i + 1..].reverse();
    true
}

impl Iterator for PathIter {
    type Item = StepWord;

    fn next(&mut self) -> Option<StepWord> {
        let mut steps = self.current.take()?;
        let out = StepWord::from_steps_unchecked(steps.clone());
        if advance(&mut steps) {
            self.current = Some(steps);
        }
        Some(out)
    }
}

/// Every path of semilength `n` passing the filter, exactly once, in
/// lexicographic order.
pub fn enumerate_paths(n: usize, filter: ClassFilter) -> impl Iterator<Item = StepWord> {
    PathIter::new(n).filter(move |p| matches(p, &filter))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub max_n: usize,
    /// Length of the fixed prefixes the path space is split on.
    pub prefix_len: usize,
    pub parallel: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_n: DEFAULT_MAX_N,
            prefix_len: 8,
            parallel: true,
        }
    }
}

impl CensusConfig {
    pub fn serial() -> Self {
        CensusConfig {
            parallel: false,
            ..CensusConfig::default()
        }
    }
}

/// Key of a census cell; orders by `(m, k, first, last)` with `U < D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CellKey {
    pub m: usize,
    pub k: usize,
    pub first: Step,
    pub last: Step,
}

/// Exact path counts for one semilength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    n: usize,
    cells: BTreeMap<CellKey, u64>,
    double_ascents: BTreeMap<(usize, usize), u64>,
    double_descents: BTreeMap<(usize, usize), u64>,
    valleys: BTreeMap<(usize, usize), u64>,
}

/// Dense accumulator; merged by exact addition.
#[derive(Debug, Clone)]
struct Tally {
    n: usize,
    cells: Vec<u64>,
    double_ascents: Vec<u64>,
    double_descents: Vec<u64>,
    valleys: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Self {
        let side = n + 1;
        Tally {
            n,
            cells: vec![0; side * side * 4],
            double_ascents: vec![0; side * side],
            double_descents: vec![0; side * side],
            valleys: vec![0; side * side],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (dst, src) in [
            (&mut self.cells, &other.cells),
            (&mut self.double_ascents, &other.double_ascents),
            (&mut self.double_descents, &other.double_descents),
            (&mut self.valleys, &other.valleys),
        ] {
            for (a, b) in dst.iter_mut().zip(src) {
                *a += b;
            }
        }
        self
    }

    fn record(&mut self, w: &Walk) {
        let side = self.n + 1;
        let first = w.first.expect("n >= 1") as usize;
        let last = w.prev.expect("n >= 1") as usize;
        self.cells[((w.m * side + w.peaks) * 2 + first) * 2 + last] += 1;
        self.double_ascents[w.m * side + w.double_ascents] += 1;
        self.double_descents[w.m * side + w.double_descents] += 1;
        self.valleys[w.m * side + w.valleys] += 1;
    }

    fn into_census(self) -> Census {
        let side = self.n + 1;
        let steps = [Step::Up, Step::Down];
        let mut cells = BTreeMap::new();
        for m in 0..side {
            for k in 0..side {
                for (fi, &first) in steps.iter().enumerate() {
                    for (li, &last) in steps.iter().enumerate() {
                        let c = self.cells[((m * side + k) * 2 + fi) * 2 + li];
                        if c > 0 {
                            cells.insert(CellKey { m, k, first, last }, c);
                        }
                    }
                }
            }
        }
        let sparse = |dense: &[u64]| {
            let mut out = BTreeMap::new();
            for m in 0..side {
                for j in 0..side {
                    let c = dense[m * side + j];
                    if c > 0 {
                        out.insert((m, j), c);
                    }
                }
            }
            out
        };
        Census {
            n: self.n,
            double_ascents: sparse(&self.double_ascents),
            double_descents: sparse(&self.double_descents),
            valleys: sparse(&self.valleys),
            cells,
        }
    }
}

/// Incremental statistics of a path prefix.
#[derive(Debug, Clone, Copy, Default)]
struct Walk {
    ups: usize,
    downs: usize,
    m: usize,
    peaks: usize,
    valleys: usize,
    double_ascents: usize,
    double_descents: usize,
    first: Option<Step>,
    prev: Option<Step>,
}

impl Walk {
    fn push(mut self, s: Step) -> Walk {
        match (self.prev, s) {
            (Some(Step::Up), Step::Down) => self.peaks += 1,
            (Some(Step::Down), Step::Up) => self.valleys += 1,
            (Some(Step::Up), Step::Up) => self.double_ascents += 1,
            (Some(Step::Down), Step::Down) => self.double_descents += 1,
            (None, _) => self.first = Some(s),
        }
        match s {
            Step::Up => {
                if self.ups < self.downs {
                    self.m += 1;
                }
                self.ups += 1;
            }
            Step::Down => self.downs += 1,
        }
        self.prev = Some(s);
        self
    }
}

fn descend(n: usize, walk: Walk, tally: &mut Tally) {
    if walk.ups == n && walk.downs == n {
        tally.record(&walk);
        return;
    }
    if walk.ups < n {
        descend(n, walk.push(Step::Up), tally);
    }
    if walk.downs < n {
        descend(n, walk.push(Step::Down), tally);
    }
}

fn prefixes(n: usize, depth: usize, walk: Walk, out: &mut Vec<Walk>) {
    if walk.ups + walk.downs == depth {
        out.push(walk);
        return;
    }
    if walk.ups < n {
        prefixes(n, depth, walk.push(Step::Up), out);
    }
    if walk.downs < n {
        prefixes(n, depth, walk.push(Step::Down), out);
    }
}

pub fn build_census(n: usize) -> Result<Census, EnumError> {
    build_census_with(n, &CensusConfig::default())
}

pub fn build_census_with(n: usize, config: &CensusConfig) -> Result<Census, EnumError> {
    if n == 0 {
        return Err(EnumError::EmptySemilength);
    }
    if n > config.max_n {
        return Err(EnumError::ResourceBound {
            n,
            max: config.max_n,
        });
    }
    let mut starts = Vec::new();
    prefixes(
        n,
        config.prefix_len.min(2 * n),
        Walk::default(),
        &mut starts,
    );
    let run = |walk: &Walk| {
        let mut tally = Tally::new(n);
        descend(n, *walk, &mut tally);
        tally
    };
    let tally = if config.parallel {
        starts
            .par_iter()
            .map(run)
            .reduce(|| Tally::new(n), Tally::merge)
    } else {
        starts.iter().map(run).fold(Tally::new(n), Tally::merge)
    };
    Ok(tally.into_census())
}

#[derive(Serialize)]
struct CellRow {
    m: usize,
    k: usize,
    first: Step,
    last: Step,
    count: String,
}

#[derive(Serialize)]
struct CensusJson {
    n: usize,
    cells: Vec<CellRow>,
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    m: usize,
    k: usize,
    first: Step,
    last: Step,
    count: u64,
}

impl Census {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero cells in key order.
    pub fn cells(&self) -> impl Iterator<Item = (CellKey, u64)> + '_ {
        self.cells.iter().map(|(k, v)| (*k, *v))
    }

    /// `p^{XY}_{n,m,k}`.
    pub fn class_count(&self, m: usize, k: usize, first: Step, last: Step) -> u64 {
        self.cells
            .get(&CellKey { m, k, first, last })
            .copied()
            .unwrap_or(0)
    }

    /// `p_{n,m,k}`.
    pub fn peak_count(&self, m: usize, k: usize) -> u64 {
        [Step::Up, Step::Down]
            .iter()
            .flat_map(|&f| [(f, Step::Up), (f, Step::Down)])
            .map(|(f, l)| self.class_count(m, k, f, l))
            .sum()
    }

    /// `a_{n,m,j}`: paths with `j` double ascents.
    pub fn double_ascent_count(&self, m: usize, j: usize) -> u64 {
        self.double_ascents.get(&(m, j)).copied().unwrap_or(0)
    }

    pub fn double_descent_count(&self, m: usize, j: usize) -> u64 {
        self.double_descents.get(&(m, j)).copied().unwrap_or(0)
    }

    pub fn valley_count(&self, m: usize, j: usize) -> u64 {
        self.valleys.get(&(m, j)).copied().unwrap_or(0)
    }

    pub fn total_for_m(&self, m: usize) -> u64 {
        self.cells
            .iter()
            .filter(|(key, _)| key.m == m)
            .map(|(_, c)| *c)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// Mutable access for seeded-fault tests of the verifier.
    #[doc(hidden)]
    pub fn set_class_count(&mut self, key: CellKey, count: u64) {
        self.cells.insert(key, count);
    }

    pub fn to_json(&self) -> String {
        let doc = CensusJson {
            n: self.n,
            cells: self
                .cells()
                .map(|(key, count)| CellRow {
                    m: key.m,
                    k: key.k,
                    first: key.first,
                    last: key.last,
                    count: count.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("census serializes")
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(out);
        for (key, count) in self.cells() {
            wtr.serialize(CsvRow {
                n: self.n,
                m: key.m,
                k: key.k,
                first: key.first,
                last: key.last,
                count,
            })?;
        }
        if self.cells.is_empty() {
            wtr.write_record(["n", "m", "k", "first", "last", "count"])?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }
}
