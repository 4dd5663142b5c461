use crate::path::{Step, StepWord};

/// Letterwise swap `U <-> D`.
pub fn complement_phi(path: &StepWord) -> StepWord {
    StepWord::from_steps_unchecked(path.steps().iter().map(|s| s.flip()).collect())
}

/// Word reversal; geometrically a half-turn about `(n/2, n/2)`.
pub fn reverse_theta(path: &StepWord) -> StepWord {
    let mut steps: Vec<Step> = path.steps().to_vec();
    steps.reverse();
    StepWord::from_steps_unchecked(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_phi(&w("UUDD")), w("DDUU"));
        assert_eq!(complement_phi(&w("")), w(""));
        assert_eq!(complement_phi(&w("UDDU")), w("DUUD"));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse_theta(&w("UUDD")), w("DDUU"));
        assert_eq!(reverse_theta(&w("UDDU")), w("UDDU"));
        assert_eq!(reverse_theta(&w("UDUDDU")), w("UDDUDU"));
    }
}
