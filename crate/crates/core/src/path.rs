//! Lattice paths from `(0,0)` to `(n,n)` built from unit up steps `(0,1)` and
//! down steps `(1,0)`, together with their geometry relative to the diagonal
//! `y = x`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("IllegalCharacter: {ch:?} at position {position}")]
    IllegalCharacter { ch: char, position: usize },
    #[error("Unbalanced: {ups} up steps and {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("InvalidPeakList: {0}")]
    InvalidPeakList(String),
}

impl PathError {
    pub fn name(&self) -> &'static str {
        match self {
            PathError::IllegalCharacter { .. } => "IllegalCharacter",
            PathError::Unbalanced { .. } => "Unbalanced",
            PathError::InvalidPeakList(_) => "InvalidPeakList",
        }
    }
}

/// A single unit step. `Up < Down` so that word order is lexicographic with
/// `U` before `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "U" | "u" => Ok(Step::Up),
            "D" | "d" => Ok(Step::Down),
            other => Err(format!("expected U or D, got {other:?}")),
        }
    }
}

impl Serialize for Step {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(if *self == Step::Up { "U" } else { "D" })
    }
}

impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        match s.as_str() {
            "U" => Ok(Step::Up),
            "D" => Ok(Step::Down),
            other => Err(serde::de::Error::custom(format!("invalid step {other:?}"))),
        }
    }
}

/// A balanced word over `{U, D}`: equal numbers of up and down steps, so it
/// always runs from `(0,0)` to `(n,n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StepWord {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: usize,
    pub y: usize,
}

impl LatticePoint {
    pub fn new(x: usize, y: usize) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Peak vertices of a path in path order. Both coordinates are strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeakList {
    peaks: Vec<LatticePoint>,
}

impl PeakList {
    /// Checks monotonicity and the ranges `0 <= x <= n-1`, `1 <= y <= n`.
    pub fn new(n: usize, peaks: Vec<LatticePoint>) -> Result<Self, PathError> {
        for (i, p) in peaks.iter().enumerate() {
            if n == 0 || p.x > n - 1 || p.y < 1 || p.y > n {
                return Err(PathError::InvalidPeakList(format!(
                    "peak {p} out of range for semilength {n}"
                )));
            }
            if i > 0 {
                let q = peaks[i - 1];
                if q.x >= p.x || q.y >= p.y {
                    return Err(PathError::InvalidPeakList(format!(
                        "peaks {q} and {p} are not strictly increasing"
                    )));
                }
            }
        }
        Ok(PeakList { peaks })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PathError> {
        PeakList::new(
            n,
            pairs
                .iter()
                .map(|&(x, y)| LatticePoint::new(x, y))
                .collect(),
        )
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.peaks
    }

    pub fn len(&self) -> usize {
        self.peaks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.peaks.is_empty()
    }

    pub fn xs(&self) -> impl Iterator<Item = usize> + '_ {
        self.peaks.iter().map(|p| p.x)
    }

    pub fn ys(&self) -> impl Iterator<Item = usize> + '_ {
        self.peaks.iter().map(|p| p.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeFlags {
    pub is_dyck: bool,
    pub is_negative_dyck: bool,
    pub is_prime_dyck: bool,
    pub is_prime_negative: bool,
}

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        let ups = steps.iter().filter(|&&s| s == Step::Up).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(PathError::Unbalanced { ups, downs });
        }
        Ok(StepWord { steps })
    }

    /// Callers guarantee balance; every part produced by the path
    /// decompositions in this crate is itself balanced.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert_eq!(
            steps.iter().filter(|&&s| s == Step::Up).count() * 2,
            steps.len()
        );
        StepWord { steps }
    }

    pub fn empty() -> Self {
        StepWord::default()
    }

    pub fn concat(parts: &[&[Step]]) -> Self {
        let len = parts.iter().map(|p| p.len()).sum();
        let mut steps = Vec::with_capacity(len);
        for part in parts {
            steps.extend_from_slice(part);
        }
        StepWord::from_steps_unchecked(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    pub fn vertices(&self) -> Vec<LatticePoint> {
        vertices(self.steps())
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl AsRef<[Step]> for StepWord {
    fn as_ref(&self) -> &[Step] {
        &self.steps
    }
}

impl Serialize for StepWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StepWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_path(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses an uppercase `U`/`D` word. No whitespace is accepted.
pub fn parse_path(text: &str) -> Result<StepWord, PathError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(position, ch)| {
            Step::from_char(ch).ok_or(PathError::IllegalCharacter { ch, position })
        })
        .collect::<Result<Vec<_>, _>>()?;
    StepWord::new(steps)
}

/// The `2n+1` vertices visited by a step sequence starting at the origin.
pub fn vertices(steps: &[Step]) -> Vec<LatticePoint> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let (mut x, mut y) = (0, 0);
    out.push(LatticePoint::new(0, 0));
    for s in steps {
        match s {
            Step::Up => y += 1,
            Step::Down => x += 1,
        }
        out.push(LatticePoint::new(x, y));
    }
    out
}

/// Number of up steps strictly below the diagonal: those whose start vertex
/// satisfies `y < x`.
pub fn below_up_count(steps: &[Step]) -> usize {
    let (mut x, mut y) = (0usize, 0usize);
    let mut m = 0;
    for s in steps {
        match s {
            Step::Up => {
                if y < x {
                    m += 1;
                }
                y += 1;
            }
            Step::Down => x += 1,
        }
    }
    m
}

pub fn peak_coordinates(path: &StepWord) -> PeakList {
    let steps = path.steps();
    let (mut x, mut y) = (0, 0);
    let mut peaks = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => y += 1,
            Step::Down => x += 1,
        }
        if *s == Step::Up && steps.get(i + 1) == Some(&Step::Down) {
            peaks.push(LatticePoint::new(x, y));
        }
    }
    PeakList { peaks }
}

/// Rebuilds `D^{x_1} U^{y_1} D^{x_2-x_1} U^{y_2-y_1} ... D^{n-x_k} U^{n-y_k}`.
pub fn path_from_peaks(n: usize, peaks: &PeakList) -> Result<StepWord, PathError> {
    let peaks = PeakList::new(n, peaks.points().to_vec())?;
    let mut steps = Vec::with_capacity(2 * n);
    let (mut px, mut py) = (0, 0);
    for p in peaks.points() {
        steps.extend(std::iter::repeat_n(Step::Down, p.x - px));
        steps.extend(std::iter::repeat_n(Step::Up, p.y - py));
        px = p.x;
        py = p.y;
    }
    steps.extend(std::iter::repeat_n(Step::Down, n - px));
    steps.extend(std::iter::repeat_n(Step::Up, n - py));
    Ok(StepWord::from_steps_unchecked(steps))
}

pub fn is_dyck(steps: &[Step]) -> bool {
    let mut height: i64 = 0;
    for s in steps {
        height += if *s == Step::Up { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

pub fn is_negative_dyck(steps: &[Step]) -> bool {
    let mut height: i64 = 0;
    for s in steps {
        height += if *s == Step::Up { 1 } else { -1 };
        if height > 0 {
            return false;
        }
    }
    height == 0
}

pub fn shape_flags(path: &StepWord) -> ShapeFlags {
    let steps = path.steps();
    let is_dyck = is_dyck(steps);
    let is_negative_dyck = is_negative_dyck(steps);
    let touches_inside = !diagonal_touches(path).is_empty();
    let prime = !steps.is_empty() && !touches_inside;
    ShapeFlags {
        is_dyck,
        is_negative_dyck,
        is_prime_dyck: is_dyck && prime,
        is_prime_negative: is_negative_dyck && prime,
    }
}

/// All `a` with `0 < a < n` such that `(a,a)` is a vertex of the path.
pub fn diagonal_touches(path: &StepWord) -> Vec<usize> {
    let n = path.semilength();
    vertices(path.steps())
        .into_iter()
        .filter(|p| p.x == p.y && p.x > 0 && p.x < n)
        .map(|p| p.x)
        .collect()
}

/// Interior diagonal vertices `(a,a)` where the path changes side: entered
/// by an up step and left by an up step, or the same with down steps.
pub fn diagonal_crossings(path: &StepWord) -> Vec<usize> {
    let s = path.steps();
    let (mut x, mut y) = (0usize, 0usize);
    let mut out = Vec::new();
    for i in 0..s.len().saturating_sub(1) {
        match s[i] {
            Step::Up => y += 1,
            Step::Down => x += 1,
        }
        if x == y && s[i] == s[i + 1] {
            out.push(x);
        }
    }
    out
}

/// Length of the longest prefix that is a Dyck path (possibly 0).
pub fn dyck_prefix_len(steps: &[Step]) -> usize {
    let mut height: i64 = 0;
    let mut best = 0;
    for (i, s) in steps.iter().enumerate() {
        height += if *s == Step::Up { 1 } else { -1 };
        if height < 0 {
            break;
        }
        if height == 0 {
            best = i + 1;
        }
    }
    best
}

/// Length of the longest prefix that is a negative Dyck path (possibly 0).
pub fn negative_prefix_len(steps: &[Step]) -> usize {
    let mut height: i64 = 0;
    let mut best = 0;
    for (i, s) in steps.iter().enumerate() {
        height += if *s == Step::Up { 1 } else { -1 };
        if height > 0 {
            break;
        }
        if height == 0 {
            best = i + 1;
        }
    }
    best
}

/// Length of the shortest nonempty prefix that returns to the diagonal, i.e.
/// the first prime factor. `None` for the empty word.
pub fn first_return_len(steps: &[Step]) -> Option<usize> {
    let mut height: i64 = 0;
    for (i, s) in steps.iter().enumerate() {
        height += if *s == Step::Up { 1 } else { -1 };
        if height == 0 {
            return Some(i + 1);
        }
    }
    None
}

/// Start offset of the last prime factor of a balanced nonempty word.
pub fn last_factor_start(steps: &[Step]) -> Option<usize> {
    if steps.is_empty() {
        return None;
    }
    let mut height: i64 = 0;
    let mut last_zero = 0;
    for (i, s) in steps[..steps.len() - 1].iter().enumerate() {
        height += if *s == Step::Up { 1 } else { -1 };
        if height == 0 {
            last_zero = i + 1;
        }
    }
    Some(last_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    const GOLDEN_PATH: &str = "UUDUUDDDDDUUDUUUDUDD";

    fn lp(pairs: &[(usize, usize)]) -> Vec<LatticePoint> {
        pairs
            .iter()
            .map(|&(x, y)| LatticePoint::new(x, y))
            .collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("UUDD").semilength(), 2);
        assert_eq!(w("").semilength(), 0);
        assert_eq!(
            parse_path("UUD"),
            Err(PathError::Unbalanced { ups: 2, downs: 1 })
        );
        assert!(matches!(
            parse_path("UxDD"),
            Err(PathError::IllegalCharacter {
                ch: 'x',
                position: 1
            })
        ));
        assert!(matches!(
            parse_path("UD "),
            Err(PathError::IllegalCharacter { ch: ' ', .. })
        ));
        assert_eq!(w("UDDU").to_string(), "UDDU");
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(w("UD").vertices(), lp(&[(0, 0), (0, 1), (1, 1)]));
        assert_eq!(w("DU").vertices(), lp(&[(0, 0), (1, 0), (1, 1)]));
        assert_eq!(
            w("UDDU").vertices(),
            lp(&[(0, 0), (0, 1), (1, 1), (2, 1), (2, 2)])
        );
    }

    #[test]
    fn below_up_examples() {
        assert_eq!(below_up_count(w(GOLDEN_PATH).steps()), 3);
        assert_eq!(below_up_count(w("UUDD").steps()), 0);
        assert_eq!(below_up_count(w("DDUU").steps()), 2);
        // ending on the diagonal counts, starting on it does not
        assert_eq!(below_up_count(w("DU").steps()), 1);
        assert_eq!(below_up_count(w("UD").steps()), 0);
    }

    #[test]
    fn peak_examples() {
        assert_eq!(
            peak_coordinates(&w(GOLDEN_PATH)).points(),
            lp(&[(0, 2), (1, 4), (6, 6), (7, 9), (8, 10)]).as_slice()
        );
        assert!(peak_coordinates(&w("DDUU")).is_empty());
        assert_eq!(
            peak_coordinates(&w("UDUD")).points(),
            lp(&[(0, 1), (1, 2)]).as_slice()
        );
    }

    #[test]
    fn path_from_peak_examples() {
        let pl = PeakList::from_pairs(10, &[(2, 1), (3, 3), (4, 5), (5, 7), (9, 8)]).unwrap();
        assert_eq!(
            path_from_peaks(10, &pl).unwrap().to_string(),
            "DDUDUUDUUDUUDDDDUDUU"
        );
        assert_eq!(
            path_from_peaks(3, &PeakList::default())
                .unwrap()
                .to_string(),
            "DDDUUU"
        );
        let pl = PeakList::from_pairs(2, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path_from_peaks(2, &pl).unwrap().to_string(), "UDUD");
    }

    #[test]
    fn invalid_peak_lists() {
        assert!(PeakList::from_pairs(3, &[(1, 2), (1, 3)]).is_err());
        assert!(PeakList::from_pairs(3, &[(0, 2), (1, 2)]).is_err());
        assert!(PeakList::from_pairs(3, &[(3, 2)]).is_err());
        assert!(PeakList::from_pairs(3, &[(0, 0)]).is_err());
        assert!(PeakList::from_pairs(3, &[(0, 4)]).is_err());
        // path_from_peaks revalidates against its own n
        let pl = PeakList::from_pairs(5, &[(4, 5)]).unwrap();
        assert!(matches!(
            path_from_peaks(3, &pl),
            Err(PathError::InvalidPeakList(_))
        ));
    }

    #[test]
    fn shape_examples() {
        let f = shape_flags(&w("UUDD"));
        assert!(f.is_dyck && f.is_prime_dyck && !f.is_negative_dyck);
        let f = shape_flags(&w("UDUD"));
        assert!(f.is_dyck && !f.is_prime_dyck);
        let f = shape_flags(&w("DU"));
        assert!(f.is_negative_dyck && f.is_prime_negative && !f.is_dyck);
        let f = shape_flags(&StepWord::empty());
        assert!(f.is_dyck && f.is_negative_dyck && !f.is_prime_dyck && !f.is_prime_negative);
    }

    #[test]
    fn diagonal_touch_examples() {
        assert_eq!(diagonal_touches(&w("UDUD")), vec![1]);
        assert!(diagonal_touches(&w("UUDD")).is_empty());
        assert_eq!(diagonal_touches(&w(GOLDEN_PATH)), vec![4, 6, 7]);
        assert_eq!(diagonal_crossings(&w(GOLDEN_PATH)), vec![4, 7]);
        assert!(diagonal_crossings(&w("UDUD")).is_empty());
        assert_eq!(diagonal_crossings(&w("UDDU")), vec![1]);
    }

    #[test]
    fn prefix_scans() {
        let s = w("UDUDDUUD");
        assert_eq!(dyck_prefix_len(s.steps()), 4);
        assert_eq!(negative_prefix_len(s.steps()), 0);
        let s = w("DUDUUD");
        assert_eq!(negative_prefix_len(s.steps()), 4);
        assert_eq!(first_return_len(s.steps()), Some(2));
        assert_eq!(last_factor_start(s.steps()), Some(4));
        assert_eq!(last_factor_start(w("DDUU").steps()), Some(0));
        assert_eq!(first_return_len(&[]), None);
    }
}
