use dyck_peaks::enumeration::build_census;
use dyck_peaks::formulas::{binomial, evaluate_formula, FormulaId};
use num_bigint::BigUint;

fn eval(id: FormulaId, p: &[i64]) -> BigUint {
    evaluate_formula(id, p).unwrap()
}

#[test]
fn all_divisions_exact_to_60() {
    for n in 1..=60i64 {
        eval(FormulaId::Catalan, &[n]);
        for k in 0..=n {
            eval(FormulaId::Narayana, &[n, k]);
        }
        for k in 0..n {
            for m in [0, n / 2, n] {
                eval(FormulaId::Eq1, &[n, m, k]);
            }
        }
        for k in 1..n {
            if n >= 2 {
                eval(FormulaId::EqPuu, &[n, k]);
                eval(FormulaId::EqMixed, &[n, k]);
            }
            if n >= 3 {
                eval(FormulaId::Eq3Sum, &[n, k]);
            }
        }
        if n >= 2 {
            for k in 0..n {
                eval(FormulaId::TauCount, &[n, k]);
            }
        }
    }
}

#[test]
fn pascal_and_narayana_sums() {
    for n in 1..=60i64 {
        for k in 1..=n {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        let total: BigUint = (0..=n).map(|k| eval(FormulaId::Narayana, &[n, k])).sum();
        assert_eq!(total, eval(FormulaId::Catalan, &[n]));
        let eq1: BigUint = (0..n).map(|k| eval(FormulaId::Eq1, &[n, 0, k])).sum();
        assert_eq!(eq1, eval(FormulaId::Catalan, &[n]));
    }
}

/// The refined counts chain into the total: `p^UU + p^DD + p^UD + p^DU`
/// at fixed `(m, k)` equals `p_{n,m,k}`, and the closed forms for the pieces
/// agree with the census.
#[test]
fn refined_pieces_add_up() {
    use dyck_peaks::path::Step::{Down as D, Up as U};
    for n in 3..=9usize {
        let c = build_census(n).unwrap();
        for m in 1..n - 1 {
            for k in 1..n {
                let uu = u64::try_from(eval(FormulaId::EqPuu, &[n as i64, k as i64])).unwrap();
                let mixed = c.class_count(m, k, D, U) + c.class_count(m, k, U, D);
                assert_eq!(c.class_count(m, k, U, U), uu);
                assert_eq!(c.class_count(m, k, D, D), uu);
                assert_eq!(c.peak_count(m, k), 2 * uu + mixed);
            }
        }
    }
}
