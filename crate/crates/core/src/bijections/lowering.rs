//! The injection `f : P^U_{n,m+1,k} -> P^U_{n,m,k}` and its inverse on the
//! four image cases.
//!
//! `f` cuts a path as `S·D·N·U·Q` where `D` is the first down step below the
//! diagonal and `U` the first later up step ending on it. The inverse cuts
//! as `U·S·D·Q` where `D` is the first down step ending on the diagonal, and
//! sorts the result into cases A to E; case E has no preimage.

use crate::path::{
    below_up_count, dyck_prefix_len, first_return_len, last_factor_start, negative_prefix_len,
    Step, StepWord,
};

use super::BijectionError;

const U: &[Step] = &[Step::Up];
const D: &[Step] = &[Step::Down];

fn word(steps: &[Step]) -> StepWord {
    StepWord::from_steps_unchecked(steps.to_vec())
}

/// `P = S·D·N·U·Q`; the two singleton steps are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdnuqParts {
    /// Dyck prefix before the first below-diagonal down step.
    pub prefix: StepWord,
    /// Negative Dyck middle, possibly empty.
    pub middle: StepWord,
    pub suffix: StepWord,
}

impl SdnuqParts {
    pub fn reassemble(&self) -> StepWord {
        StepWord::concat(&[
            self.prefix.steps(),
            D,
            self.middle.steps(),
            U,
            self.suffix.steps(),
        ])
    }
}

/// Which rule `f` applies. `Case4` splits the middle as `head·last` where
/// `last` is its rightmost negative prime factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FCase {
    Case1,
    Case2,
    Case3,
    Case4 { head: StepWord, last: StepWord },
}

impl FCase {
    pub fn number(&self) -> u8 {
        match self {
            FCase::Case1 => 1,
            FCase::Case2 => 2,
            FCase::Case3 => 3,
            FCase::Case4 { .. } => 4,
        }
    }
}

pub fn decompose_sdnuq(path: &StepWord) -> Result<SdnuqParts, BijectionError> {
    let steps = path.steps();
    let mut height: i64 = 0;
    let mut down_at = None;
    for (i, s) in steps.iter().enumerate() {
        if *s == Step::Down && height <= 0 {
            down_at = Some(i);
            break;
        }
        height += if *s == Step::Up { 1 } else { -1 };
    }
    let down_at = down_at.ok_or(BijectionError::NoBelowStep)?;
    height -= 1;
    let mut up_at = None;
    for (j, s) in steps.iter().enumerate().skip(down_at + 1) {
        height += if *s == Step::Up { 1 } else { -1 };
        if *s == Step::Up && height == 0 {
            up_at = Some(j);
            break;
        }
    }
    let up_at = up_at.expect("a balanced path returns to the diagonal");
    Ok(SdnuqParts {
        prefix: word(&steps[..down_at]),
        middle: word(&steps[down_at + 1..up_at]),
        suffix: word(&steps[up_at + 1..]),
    })
}

pub fn classify_f_case(path: &StepWord) -> Result<(SdnuqParts, FCase), BijectionError> {
    if path.first() != Some(Step::Up) {
        return Err(BijectionError::domain(
            "f requires a path starting with an up step",
        ));
    }
    let parts = decompose_sdnuq(path)?;
    let case = if parts.middle.is_empty() {
        match parts.suffix.first() {
            Some(Step::Down) => FCase::Case1,
            Some(Step::Up) => FCase::Case2,
            None => {
                return Err(BijectionError::domain(
                    "f is undefined when both N and Q are empty (P = S D U, m = 1)",
                ))
            }
        }
    } else {
        let n = parts.middle.steps();
        let split = last_factor_start(n).expect("middle is nonempty");
        if split == 0 {
            FCase::Case3
        } else {
            FCase::Case4 {
                head: word(&n[..split]),
                last: word(&n[split..]),
            }
        }
    };
    Ok((parts, case))
}

/// Lowers `m` by one, keeping `n`, the peak count, the first step `U` and
/// the last step.
pub fn apply_f(path: &StepWord) -> Result<StepWord, BijectionError> {
    let (parts, case) = classify_f_case(path)?;
    let (s, n, q) = (
        parts.prefix.steps(),
        parts.middle.steps(),
        parts.suffix.steps(),
    );
    Ok(match &case {
        FCase::Case1 => StepWord::concat(&[U, D, s, q]),
        FCase::Case2 => StepWord::concat(&[U, s, D, q]),
        FCase::Case3 => StepWord::concat(&[U, s, D, n, q]),
        FCase::Case4 { head, last } => StepWord::concat(&[U, D, head.steps(), s, last.steps(), q]),
    })
}

/// `P' = U·S·D·Q` with `D` the first down step ending on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsdqParts {
    pub inner: StepWord,
    pub tail: StepWord,
}

pub fn decompose_usdq(path: &StepWord) -> Result<UsdqParts, BijectionError> {
    let steps = path.steps();
    if steps.first() != Some(&Step::Up) {
        return Err(BijectionError::domain(
            "expected a path starting with an up step",
        ));
    }
    let mut height: i64 = 0;
    for (j, s) in steps.iter().enumerate() {
        height += if *s == Step::Up { 1 } else { -1 };
        if *s == Step::Down && height == 0 {
            return Ok(UsdqParts {
                inner: word(&steps[1..j]),
                tail: word(&steps[j + 1..]),
            });
        }
    }
    unreachable!("a balanced word starting with U has a down step ending on the diagonal")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FPrimeCase {
    /// `S` nonempty, `Q` starts with `U`.
    CaseA { inner: StepWord, tail: StepWord },
    /// `S` nonempty, `Q = R·Q'` starts with `D`, `R` its first negative prime.
    CaseB {
        inner: StepWord,
        excursion: StepWord,
        tail: StepWord,
    },
    /// `S` empty, `Q = M·Q'` with `M` the maximal Dyck prefix.
    CaseC { dyck: StepWord, tail: StepWord },
    /// `S` empty, `Q = N·M·R·Q'`: maximal negative prefix, maximal Dyck
    /// prefix of the rest, then the next negative prime.
    CaseD {
        negative: StepWord,
        dyck: StepWord,
        excursion: StepWord,
        tail: StepWord,
    },
    /// `P' = U·D·N·M` exactly; not in the image of `f`.
    CaseE { negative: StepWord, dyck: StepWord },
}

impl FPrimeCase {
    pub fn letter(&self) -> char {
        match self {
            FPrimeCase::CaseA { .. } => 'a',
            FPrimeCase::CaseB { .. } => 'b',
            FPrimeCase::CaseC { .. } => 'c',
            FPrimeCase::CaseD { .. } => 'd',
            FPrimeCase::CaseE { .. } => 'e',
        }
    }

    pub fn index(&self) -> usize {
        (self.letter() as u8 - b'a') as usize
    }
}

/// Requires `P'` to start with `U` and `1 <= m(P') <= n-2`.
pub fn classify_fprime_case(path: &StepWord) -> Result<FPrimeCase, BijectionError> {
    let n = path.semilength();
    if path.first() != Some(Step::Up) {
        return Err(BijectionError::domain(
            "f-inv requires a path starting with an up step",
        ));
    }
    let m = below_up_count(path.steps());
    if m < 1 || m + 2 > n {
        return Err(BijectionError::domain(format!(
            "f-inv requires 1 <= m <= n-2, got m = {m}, n = {n}"
        )));
    }
    let UsdqParts { inner, tail } = decompose_usdq(path)?;
    let q = tail.steps();
    let starts_up = q.first() == Some(&Step::Up);
    // in range Q is never empty: U·S·D alone has m = 0
    debug_assert!(!q.is_empty());
    Ok(if !inner.is_empty() {
        if starts_up {
            FPrimeCase::CaseA { inner, tail }
        } else {
            let r = first_return_len(q).expect("Q is balanced and nonempty");
            FPrimeCase::CaseB {
                inner,
                excursion: word(&q[..r]),
                tail: word(&q[r..]),
            }
        }
    } else if starts_up {
        let mlen = dyck_prefix_len(q);
        FPrimeCase::CaseC {
            dyck: word(&q[..mlen]),
            tail: word(&q[mlen..]),
        }
    } else {
        let nlen = negative_prefix_len(q);
        let rest = &q[nlen..];
        let mlen = dyck_prefix_len(rest);
        let rest2 = &rest[mlen..];
        if rest2.is_empty() {
            FPrimeCase::CaseE {
                negative: word(&q[..nlen]),
                dyck: word(rest),
            }
        } else {
            // after a maximal negative prefix the rest opens with U, so the
            // Dyck part is nonempty
            debug_assert!(mlen > 0);
            let r = first_return_len(rest2).expect("balanced remainder");
            FPrimeCase::CaseD {
                negative: word(&q[..nlen]),
                dyck: word(&rest[..mlen]),
                excursion: word(&rest2[..r]),
                tail: word(&rest2[r..]),
            }
        }
    })
}

/// Inverse of `f` on cases A to D; `NotInImage` on case E.
pub fn apply_f_inverse(path: &StepWord) -> Result<StepWord, BijectionError> {
    Ok(match classify_fprime_case(path)? {
        FPrimeCase::CaseA { inner, tail } => StepWord::concat(&[inner.steps(), D, U, tail.steps()]),
        FPrimeCase::CaseB {
            inner,
            excursion,
            tail,
        } => StepWord::concat(&[inner.steps(), D, excursion.steps(), U, tail.steps()]),
        FPrimeCase::CaseC { dyck, tail } => StepWord::concat(&[dyck.steps(), D, U, tail.steps()]),
        FPrimeCase::CaseD {
            negative,
            dyck,
            excursion,
            tail,
        } => StepWord::concat(&[
            dyck.steps(),
            D,
            negative.steps(),
            excursion.steps(),
            U,
            tail.steps(),
        ]),
        FPrimeCase::CaseE { .. } => return Err(BijectionError::NotInImage),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;
    use crate::stats::stat_record;

    fn w(s: &str) -> StepWord {
        parse_path(s).unwrap()
    }

    fn class(p: &StepWord) -> (usize, usize, usize, Step, Step) {
        let r = stat_record(p).unwrap();
        (r.n, r.m, r.peaks, r.first, r.last)
    }

    #[test]
    fn sdnuq_examples() {
        let parts = decompose_sdnuq(&w("UDDUDU")).unwrap();
        assert_eq!(
            (parts.prefix, parts.middle, parts.suffix),
            (w("UD"), w(""), w("DU"))
        );
        let parts = decompose_sdnuq(&w("UDDDUUUD")).unwrap();
        assert_eq!(
            (parts.prefix, parts.middle, parts.suffix),
            (w("UD"), w("DU"), w("UD"))
        );
        let parts = decompose_sdnuq(&w("UDDDUDUUUD")).unwrap();
        assert_eq!(
            (&parts.prefix, &parts.middle, &parts.suffix),
            (&w("UD"), &w("DUDU"), &w("UD"))
        );
        assert_eq!(parts.reassemble(), w("UDDDUDUUUD"));
        assert_eq!(
            decompose_sdnuq(&w("UUDD")),
            Err(BijectionError::NoBelowStep)
        );
    }

    #[test]
    fn f_case_examples() {
        assert_eq!(classify_f_case(&w("UDDUDU")).unwrap().1, FCase::Case1);
        assert_eq!(classify_f_case(&w("UDDUUDDU")).unwrap().1, FCase::Case2);
        assert_eq!(classify_f_case(&w("UDDDUUUD")).unwrap().1, FCase::Case3);
        assert_eq!(
            classify_f_case(&w("UDDDUDUUUD")).unwrap().1,
            FCase::Case4 {
                head: w("DU"),
                last: w("DU")
            }
        );
        assert!(matches!(
            classify_f_case(&w("DUUD")),
            Err(BijectionError::Domain(_))
        ));
        assert!(matches!(
            classify_f_case(&w("UDDU")),
            Err(BijectionError::Domain(_))
        ));
    }

    #[test]
    fn f_examples() {
        let p = w("UDDUDU");
        let q = apply_f(&p).unwrap();
        assert_eq!(q, w("UDUDDU"));
        assert_eq!(class(&p), (3, 2, 2, Step::Up, Step::Up));
        assert_eq!(class(&q), (3, 1, 2, Step::Up, Step::Up));

        let p = w("UDDUUDDU");
        let q = apply_f(&p).unwrap();
        assert_eq!(q, w("UUDDUDDU"));
        assert_eq!(class(&p).1, 2);
        assert_eq!(class(&q).1, 1);

        let p = w("UDDDUDUUUD");
        let q = apply_f(&p).unwrap();
        assert_eq!(q, w("UDDUUDDUUD"));
        assert_eq!(class(&p), (5, 3, 3, Step::Up, Step::Down));
        assert_eq!(class(&q), (5, 2, 3, Step::Up, Step::Down));

        // Case3: N = DU is a single negative prime
        assert_eq!(apply_f(&w("UDDDUUUD")).unwrap(), w("UUDDDUUD"));
    }

    #[test]
    fn fprime_case_examples() {
        assert_eq!(
            classify_fprime_case(&w("UDUDDU")).unwrap(),
            FPrimeCase::CaseC {
                dyck: w("UD"),
                tail: w("DU")
            }
        );
        assert_eq!(
            classify_fprime_case(&w("UUDDUDDU")).unwrap(),
            FPrimeCase::CaseA {
                inner: w("UD"),
                tail: w("UDDU")
            }
        );
        assert_eq!(
            classify_fprime_case(&w("UDDUUDDUUD")).unwrap(),
            FPrimeCase::CaseD {
                negative: w("DU"),
                dyck: w("UD"),
                excursion: w("DU"),
                tail: w("UD")
            }
        );
        assert_eq!(
            classify_fprime_case(&w("UDDUUD")).unwrap(),
            FPrimeCase::CaseE {
                negative: w("DU"),
                dyck: w("UD")
            }
        );
        assert_eq!(
            classify_fprime_case(&w("UUDDDUUD")).unwrap(),
            FPrimeCase::CaseB {
                inner: w("UD"),
                excursion: w("DU"),
                tail: w("UD")
            }
        );
        // out of range: m = 0 and m = n - 1
        assert!(matches!(
            classify_fprime_case(&w("UUDD")),
            Err(BijectionError::Domain(_))
        ));
        assert!(matches!(
            classify_fprime_case(&w("UDDDUU")),
            Err(BijectionError::Domain(_))
        ));
        assert!(matches!(
            classify_fprime_case(&w("DUUD")),
            Err(BijectionError::Domain(_))
        ));
    }

    #[test]
    fn f_inverse_examples() {
        assert_eq!(apply_f_inverse(&w("UDUDDU")).unwrap(), w("UDDUDU"));
        assert_eq!(apply_f_inverse(&w("UDDUUDDUUD")).unwrap(), w("UDDDUDUUUD"));
        assert_eq!(apply_f_inverse(&w("UUDDUDDU")).unwrap(), w("UDDUUDDU"));
        assert_eq!(apply_f_inverse(&w("UUDDDUUD")).unwrap(), w("UDDDUUUD"));
        assert_eq!(
            apply_f_inverse(&w("UDDUUD")),
            Err(BijectionError::NotInImage)
        );
    }
}
