//! The bijection between `P^{DU}_{n,m+1,k} ∪ P^{UD}_{n,m+1,k+1}` and
//! `P^{DU}_{n,m,k} ∪ P^{UD}_{n,m,k+1}`, for `1 <= m <= n-2`.

use crate::path::{below_up_count, Step, StepWord};

use super::excursion::{apply_g, apply_g_inverse};
use super::involution::reverse_theta;
use super::lowering::{apply_f, apply_f_inverse, classify_fprime_case, FPrimeCase};
use super::BijectionError;

fn end_class(path: &StepWord) -> Option<(Step, Step)> {
    Some((path.first()?, path.last()?))
}

/// UD paths go through `f`, hat-DU paths through `g⁻¹`, and the remaining
/// DU paths through `θ∘f⁻¹∘θ`.
pub fn apply_cf_phi(path: &StepWord) -> Result<StepWord, BijectionError> {
    let n = path.semilength();
    let m = below_up_count(path.steps());
    if m < 2 || m + 1 > n {
        return Err(BijectionError::domain(format!(
            "cf-phi requires 2 <= m <= n-1, got m = {m}, n = {n}"
        )));
    }
    match end_class(path) {
        Some((Step::Up, Step::Down)) => apply_f(path),
        Some((Step::Down, Step::Up)) => match apply_g_inverse(path) {
            Ok(image) => Ok(image),
            Err(BijectionError::NotInHatDU) => {
                let pre = apply_f_inverse(&reverse_theta(path))?;
                Ok(reverse_theta(&pre))
            }
            Err(e) => Err(e),
        },
        _ => Err(BijectionError::domain(
            "cf-phi requires a path that starts and ends with different steps",
        )),
    }
}

pub fn apply_cf_phi_inverse(path: &StepWord) -> Result<StepWord, BijectionError> {
    let n = path.semilength();
    let m = below_up_count(path.steps());
    if m < 1 || m + 2 > n {
        return Err(BijectionError::domain(format!(
            "cf-phi-inv requires 1 <= m <= n-2, got m = {m}, n = {n}"
        )));
    }
    match end_class(path) {
        Some((Step::Up, Step::Down)) => match classify_fprime_case(path)? {
            FPrimeCase::CaseE { .. } => apply_g(path),
            _ => apply_f_inverse(path),
        },
        Some((Step::Down, Step::Up)) => {
            let img = apply_f(&reverse_theta(path))?;
            Ok(reverse_theta(&img))
        }
        _ => Err(BijectionError::domain(
            "cf-phi-inv requires a path that starts and ends with different steps",
        )),
    }
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
    fn three_cases() {
        // UD: f
        assert_eq!(
            apply_cf_phi(&w("UDDUDU")).unwrap_err().name(),
            "DomainError"
        );
        let ud = w("UDDDUDUUUD");
        assert_eq!(apply_cf_phi(&ud).unwrap(), w("UDDUUDDUUD"));
        // hat DU: g⁻¹
        assert_eq!(apply_cf_phi(&w("DUUDDU")).unwrap(), w("UDDUUD"));
        assert_eq!(apply_cf_phi(&w("DUDUUDDU")).unwrap(), w("UDDUDUUD"));
        // tilde DU: θ f⁻¹ θ
        let p = w("DUUDDUDU");
        let q = apply_cf_phi(&p).unwrap();
        assert_eq!(q, w("DUUDUDDU"));
        let (a, b) = (stat_record(&p).unwrap(), stat_record(&q).unwrap());
        assert_eq!((a.m, a.peaks), (3, 2));
        assert_eq!(
            (b.m, b.peaks, b.first, b.last),
            (2, 2, Step::Down, Step::Up)
        );
    }

    #[test]
    fn inverse_undoes_each_case() {
        for s in ["UDDDUDUUUD", "DUUDDU", "DUDUUDDU", "DUUDDUDU", "DUUDDDUU"] {
            let p = w(s);
            let q = apply_cf_phi(&p).unwrap();
            assert_eq!(apply_cf_phi_inverse(&q).unwrap(), p, "{s}");
        }
    }

    #[test]
    fn domain_checks() {
        assert!(apply_cf_phi(&w("UUDD")).is_err());
        assert!(apply_cf_phi(&w("UDDDUUDU")).is_err()); // UU class
        assert!(apply_cf_phi_inverse(&w("DDDUUU")).is_err());
    }
}
