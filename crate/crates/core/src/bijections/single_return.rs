use crate::path::{below_up_count, Step, StepWord};

use super::lowering::{decompose_sdnuq, decompose_usdq};
use super::BijectionError;

const U: &[Step] = &[Step::Up];
const D: &[Step] = &[Step::Down];

fn require_ud(path: &StepWord, name: &str) -> Result<(), BijectionError> {
    if path.first() == Some(Step::Up) && path.last() == Some(Step::Down) {
        Ok(())
    } else {
        Err(BijectionError::domain(format!(
            "{name} requires a path starting with U and ending with D"
        )))
    }
}

/// `S·D·U·Q -> U·S·D·Q` on UD paths with `m = 1`; the image is a Dyck path.
pub fn apply_tau(path: &StepWord) -> Result<StepWord, BijectionError> {
    require_ud(path, "tau")?;
    let m = below_up_count(path.steps());
    if m != 1 {
        return Err(BijectionError::domain(format!(
            "tau requires m = 1, got m = {m}"
        )));
    }
    let parts = decompose_sdnuq(path)?;
    // with m = 1 the only below-diagonal up step is the returning one
    debug_assert!(parts.middle.is_empty());
    Ok(StepWord::concat(&[
        U,
        parts.prefix.steps(),
        D,
        parts.suffix.steps(),
    ]))
}

/// `U·S·D·Q -> S·D·U·Q` on UD Dyck paths where both `S` and `Q` are
/// nonempty.
pub fn apply_tau_inverse(path: &StepWord) -> Result<StepWord, BijectionError> {
    require_ud(path, "tau-inv")?;
    let m = below_up_count(path.steps());
    if m != 0 {
        return Err(BijectionError::domain(format!(
            "tau-inv requires a Dyck path (m = 0), got m = {m}"
        )));
    }
    let parts = decompose_usdq(path)?;
    if parts.inner.is_empty() || parts.tail.is_empty() {
        return Err(BijectionError::domain(
            "tau-inv requires both S and Q nonempty in U S D Q",
        ));
    }
    Ok(StepWord::concat(&[
        parts.inner.steps(),
        D,
        U,
        parts.tail.steps(),
    ]))
}
