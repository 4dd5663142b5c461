use crate::path::{is_dyck, negative_prefix_len, Step, StepWord};

use super::lowering::{classify_fprime_case, FPrimeCase};
use super::BijectionError;

/// `U·D·N·M -> N·M·D·U` on case-E paths. Sends `(n, m, k, U, D)` to
/// `(n, m+1, k-1, D, U)`.
pub fn apply_g(path: &StepWord) -> Result<StepWord, BijectionError> {
    match classify_fprime_case(path)? {
        FPrimeCase::CaseE { negative, dyck } => Ok(StepWord::concat(&[
            negative.steps(),
            dyck.steps(),
            &[Step::Down, Step::Up],
        ])),
        other => Err(BijectionError::domain(format!(
            "g is defined on case e only, path is in case {}",
            other.letter()
        ))),
    }
}

/// `N·M·D·U -> U·D·N·M`, where `N` is the maximal negative Dyck prefix and
/// both `N` and `M` are nonempty.
pub fn apply_g_inverse(path: &StepWord) -> Result<StepWord, BijectionError> {
    let steps = path.steps();
    let len = steps.len();
    if len < 2 || steps[len - 2..] != [Step::Down, Step::Up] {
        return Err(BijectionError::NotInHatDU);
    }
    let body = &steps[..len - 2];
    let nlen = negative_prefix_len(body);
    let rest = &body[nlen..];
    if nlen == 0 || rest.is_empty() || !is_dyck(rest) {
        return Err(BijectionError::NotInHatDU);
    }
    Ok(StepWord::concat(&[&[Step::Up, Step::Down], body]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;
    use crate::stats::stat_record;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    #[test]
    fn g_examples() {
        let p = w("UDDUUD");
        let q = apply_g(&p).unwrap();
        assert_eq!(q, w("DUUDDU"));
        let (a, b) = (stat_record(&p).unwrap(), stat_record(&q).unwrap());
        assert_eq!((a.m, a.peaks), (1, 2));
        assert_eq!(
            (b.m, b.peaks, b.first, b.last),
            (2, 1, Step::Down, Step::Up)
        );

        assert_eq!(apply_g(&w("UDDUUDUD")).unwrap(), w("DUUDUDDU"));
        assert!(matches!(
            apply_g(&w("UDUDDU")),
            Err(BijectionError::Domain(_))
        ));
    }

    #[test]
    fn g_inverse_examples() {
        assert_eq!(apply_g_inverse(&w("DUUDDU")).unwrap(), w("UDDUUD"));
        assert_eq!(apply_g_inverse(&w("DUUDUDDU")).unwrap(), w("UDDUUDUD"));
        assert_eq!(
            apply_g_inverse(&w("DUDUDU")),
            Err(BijectionError::NotInHatDU)
        );
        assert_eq!(
            apply_g_inverse(&w("DDUUDU")),
            Err(BijectionError::NotInHatDU)
        );
        assert_eq!(
            apply_g_inverse(&w("UDDUUD")),
            Err(BijectionError::NotInHatDU)
        );
        // remainder after the negative prefix dips again
        assert_eq!(
            apply_g_inverse(&w("DUUDDUDU")),
            Err(BijectionError::NotInHatDU)
        );
    }
}
