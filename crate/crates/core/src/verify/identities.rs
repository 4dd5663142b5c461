use num_bigint::BigUint;

use crate::enumeration::{Census, CensusConfig};
use crate::formulas::{evaluate_formula, FormulaId};
use crate::path::Step::{Down as D, Up as U};

use super::{CensusTable, Counterexample, IdentityId, Sweep, Target, VerifyError, VerifyReport};

pub fn verify_identity(id: IdentityId, n_max: usize) -> Result<VerifyReport, VerifyError> {
    let table = CensusTable::build(n_max, &CensusConfig::default())?;
    Ok(verify_identity_on(id, &table))
}

fn cx(n: usize, m: Option<usize>, k: Option<usize>, detail: String) -> Counterexample {
    Counterexample {
        n,
        m,
        k,
        word: None,
        detail,
    }
}

fn formula(id: FormulaId, params: &[usize]) -> Result<BigUint, String> {
    let params: Vec<i64> = params.iter().map(|&p| p as i64).collect();
    evaluate_formula(id, &params).map_err(|e| e.to_string())
}

/// Compares a census value against a closed form, recording a failure if
/// they differ or the formula itself errors.
fn against(
    sweep: &mut Sweep,
    (n, m, k): (usize, Option<usize>, Option<usize>),
    label: &str,
    census: u64,
    expected: Result<BigUint, String>,
) {
    let ok = matches!(&expected, Ok(v) if *v == BigUint::from(census));
    sweep.check(ok, || {
        let shown = match &expected {
            Ok(v) => v.to_string(),
            Err(e) => e.clone(),
        };
        cx(
            n,
            m,
            k,
            format!("{label}: census {census} != closed form {shown}"),
        )
    });
}

fn equal(
    sweep: &mut Sweep,
    (n, m, k): (usize, Option<usize>, Option<usize>),
    label: &str,
    lhs: u64,
    rhs: u64,
) {
    sweep.check(lhs == rhs, || {
        cx(n, m, k, format!("{label}: {lhs} != {rhs}"))
    });
}

/// Runs one identity over precomputed censuses `1..=table.n_max()`.
pub fn verify_identity_on(id: IdentityId, table: &CensusTable) -> VerifyReport {
    let mut sweep = Sweep::default();
    for n in 1..=table.n_max() {
        let c = table.get(n);
        let prev = (n >= 2).then(|| table.get(n - 1));
        check_n(id, n, c, prev, &mut sweep);
    }
    VerifyReport::from_sweep(Target::Identity(id), table.n_max(), sweep)
}

fn check_n(id: IdentityId, n: usize, c: &Census, prev: Option<&Census>, sweep: &mut Sweep) {
    match id {
        IdentityId::ChungFeller => {
            for m in 0..=n {
                against(
                    sweep,
                    (n, Some(m), None),
                    "paths with m below-diagonal up steps",
                    c.total_for_m(m),
                    formula(FormulaId::Catalan, &[n]),
                );
            }
        }
        IdentityId::Eq1 => {
            for m in 0..=n {
                for k in 0..n {
                    against(
                        sweep,
                        (n, Some(m), Some(k)),
                        "a_{n,m,k}",
                        c.double_ascent_count(m, k),
                        formula(FormulaId::Eq1, &[n, m, k]),
                    );
                }
                // n double ascents is impossible
                equal(
                    sweep,
                    (n, Some(m), Some(n)),
                    "a_{n,m,n}",
                    c.double_ascent_count(m, n),
                    0,
                );
            }
        }
        IdentityId::Eq2Symmetry => {
            for m in 0..=n {
                for k in 0..=n {
                    let at = (n, Some(m), Some(k));
                    let (m2, k2) = (n - m, n - k);
                    equal(
                        sweep,
                        at,
                        "p_{n,m,k} vs p_{n,n-m,n-k}",
                        c.peak_count(m, k),
                        c.peak_count(m2, k2),
                    );
                    equal(
                        sweep,
                        at,
                        "p^UU_{n,m,k} vs p^DD_{n,n-m,n-k}",
                        c.class_count(m, k, U, U),
                        c.class_count(m2, k2, D, D),
                    );
                    equal(
                        sweep,
                        at,
                        "p^UD_{n,m,k} vs p^DU_{n,n-m,n-k}",
                        c.class_count(m, k, U, D),
                        c.class_count(m2, k2, D, U),
                    );
                }
            }
        }
        IdentityId::Eq3Sum => {
            if n < 3 {
                return;
            }
            for m in 1..n {
                for k in 1..n {
                    let at = (n, Some(m), Some(k));
                    let sum = c.peak_count(m, k) + c.peak_count(m, n - k);
                    against(
                        sweep,
                        at,
                        "p_{n,m,k}+p_{n,m,n-k}",
                        sum,
                        formula(FormulaId::Eq3Sum, &[n, k]),
                    );
                    let sum2 = c.peak_count(m, k) + c.peak_count(n - m, k);
                    against(
                        sweep,
                        at,
                        "p_{n,m,k}+p_{n,n-m,k}",
                        sum2,
                        formula(FormulaId::Eq3Sum, &[n, k]),
                    );
                }
            }
        }
        IdentityId::EqPuu => {
            if n < 2 {
                return;
            }
            for m in 1..n {
                for k in 1..n {
                    let at = (n, Some(m), Some(k));
                    let expected = formula(FormulaId::EqPuu, &[n, k]);
                    against(
                        sweep,
                        at,
                        "p^UU_{n,m,k}",
                        c.class_count(m, k, U, U),
                        expected.clone(),
                    );
                    against(
                        sweep,
                        at,
                        "p^DD_{n,m,k}",
                        c.class_count(m, k, D, D),
                        expected,
                    );
                }
            }
        }
        IdentityId::EqMixed => {
            if n < 3 {
                return;
            }
            for m in 1..n {
                for k in 1..n {
                    let sum = c.class_count(m, k, D, U) + c.class_count(m, k + 1, U, D);
                    against(
                        sweep,
                        (n, Some(m), Some(k)),
                        "p^DU_{n,m,k}+p^UD_{n,m,k+1}",
                        sum,
                        formula(FormulaId::EqMixed, &[n, k]),
                    );
                }
            }
        }
        IdentityId::NarayanaBase => {
            for k in 0..=n {
                against(
                    sweep,
                    (n, Some(0), Some(k)),
                    "p_{n,0,k}",
                    c.peak_count(0, k),
                    formula(FormulaId::Narayana, &[n, k]),
                );
            }
        }
        IdentityId::TauCount => {
            let Some(prev) = prev else { return };
            for k in 0..n {
                let at = (n, Some(1), Some(k));
                let lhs = c.class_count(1, k + 1, U, D);
                let whole = c.peak_count(0, k + 1);
                let removed = prev.peak_count(0, k) + prev.peak_count(0, k + 1);
                let ok = whole >= removed && lhs == whole - removed;
                sweep.check(ok, || {
                    cx(
                        n,
                        Some(1),
                        Some(k),
                        format!("p^UD_{{n,1,k+1}} = {lhs} but p_{{n,0,k+1}} - p_{{n-1,0,k}} - p_{{n-1,0,k+1}} = {whole} - {removed}"),
                    )
                });
                against(
                    sweep,
                    at,
                    "p^UD_{n,1,k+1}",
                    lhs,
                    formula(FormulaId::TauCount, &[n, k]),
                );
            }
        }
        IdentityId::PhiValleyDuality => {
            for m in 0..=n {
                for k in 0..=n {
                    equal(
                        sweep,
                        (n, Some(m), Some(k)),
                        "p_{n,m,k} vs v_{n,n-m,k}",
                        c.peak_count(m, k),
                        c.valley_count(n - m, k),
                    );
                }
            }
        }
        IdentityId::ThetaDuality => {
            for m in 0..=n {
                for k in 0..n {
                    equal(
                        sweep,
                        (n, Some(m), Some(k)),
                        "p^DU_{n,m,k} vs p^UD_{n,n-m,k+1}",
                        c.class_count(m, k, D, U),
                        c.class_count(n - m, k + 1, U, D),
                    );
                    equal(
                        sweep,
                        (n, Some(m), Some(k)),
                        "a_{n,m,k} vs dd_{n,m,k}",
                        c.double_ascent_count(m, k),
                        c.double_descent_count(m, k),
                    );
                }
            }
        }
    }
}
