//! Closed-form counts over arbitrary-precision integers. Every division is
//! checked to be exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("{id} takes {expected} parameter(s), got {got}")]
    Arity {
        id: FormulaId,
        expected: usize,
        got: usize,
    },
    #[error("InexactDivision: {numerator} is not divisible by {denominator}")]
    InexactDivision {
        numerator: BigUint,
        denominator: BigUint,
    },
    #[error("NegativeValue: {0}")]
    Negative(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// `C(n, k)`, zero outside `0 <= k <= n`. Params `(n, k)`.
    Binomial,
    /// `C(2n, n) / (n+1)`. Params `(n)`.
    Catalan,
    /// Dyck paths by peaks, `C(n,k) C(n,k-1) / n`. Params `(n, k)`.
    Narayana,
    /// Paths with `k` double ascents for any fixed `m`,
    /// `C(n-1,k) C(n,k) / (k+1)`. Params `(n, m, k)`.
    Eq1,
    /// `p_{n,m,k} + p_{n,m,n-k} = 2(n+2) C(n,k-1) C(n,k+1) / (n(n-1))`.
    /// Params `(n, k)`.
    Eq3Sum,
    /// `p^{UU}_{n,m,k} = C(n-1,k) C(n-1,k-1) / (n-1)`. Params `(n, k)`.
    EqPuu,
    /// `p^{DU}_{n,m,k} + p^{UD}_{n,m,k+1} = 2 C(n-1,k-1) C(n-1,k+1) / (n-1)`.
    /// Params `(n, k)`.
    EqMixed,
    /// `p^{UD}_{n,1,k+1} = N(n,k+1) - N(n-1,k) - N(n-1,k+1)`. Params `(n, k)`.
    TauCount,
}

impl FormulaId {
    pub const ALL: [FormulaId; 8] = [
        FormulaId::Binomial,
        FormulaId::Catalan,
        FormulaId::Narayana,
        FormulaId::Eq1,
        FormulaId::Eq3Sum,
        FormulaId::EqPuu,
        FormulaId::EqMixed,
        FormulaId::TauCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Binomial => "binomial",
            FormulaId::Catalan => "catalan",
            FormulaId::Narayana => "narayana",
            FormulaId::Eq1 => "eq1",
            FormulaId::Eq3Sum => "eq3-sum",
            FormulaId::EqPuu => "eq-puu",
            FormulaId::EqMixed => "eq-mixed",
            FormulaId::TauCount => "tau-count",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            FormulaId::Catalan => 1,
            FormulaId::Eq1 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown formula {s:?}"))
    }
}

fn big(v: i64) -> BigUint {
    BigUint::from(v.unsigned_abs())
}

/// `C(n, k)` for `n >= 0`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc * (n-k+i) is divisible by i since the running value is C(n-k+i, i)
        acc = acc * big(n - k + i) / big(i);
    }
    acc
}

pub fn exact_div(numerator: BigUint, denominator: BigUint) -> Result<BigUint, FormulaError> {
    if denominator.is_zero() || !(&numerator % &denominator).is_zero() {
        return Err(FormulaError::InexactDivision {
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

fn domain(id: FormulaId, params: &[i64], rule: &str) -> FormulaError {
    FormulaError::Domain(format!("{id}{params:?} requires {rule}"))
}

/// Evaluates a closed form at the given integer parameters.
pub fn evaluate_formula(id: FormulaId, params: &[i64]) -> Result<BigUint, FormulaError> {
    if params.len() != id.arity() {
        return Err(FormulaError::Arity {
            id,
            expected: id.arity(),
            got: params.len(),
        });
    }
    let n = params[0];
    match id {
        FormulaId::Binomial => {
            if n < 0 {
                return Err(domain(id, params, "n >= 0"));
            }
            Ok(binomial(n, params[1]))
        }
        FormulaId::Catalan => {
            if n < 0 {
                return Err(domain(id, params, "n >= 0"));
            }
            exact_div(binomial(2 * n, n), big(n + 1))
        }
        FormulaId::Narayana => {
            let k = params[1];
            if n < 1 || !(0..=n).contains(&k) {
                return Err(domain(id, params, "n >= 1 and 0 <= k <= n"));
            }
            narayana(n, k)
        }
        FormulaId::Eq1 => {
            let (m, k) = (params[1], params[2]);
            if n < 1 || !(0..=n).contains(&m) || !(0..n).contains(&k) {
                return Err(domain(id, params, "n >= 1, 0 <= m <= n and 0 <= k <= n-1"));
            }
            exact_div(binomial(n - 1, k) * binomial(n, k), big(k + 1))
        }
        FormulaId::Eq3Sum => {
            let k = params[1];
            if n < 3 || !(1..n).contains(&k) {
                return Err(domain(id, params, "n >= 3 and 1 <= k <= n-1"));
            }
            exact_div(
                big(2 * (n + 2)) * binomial(n, k - 1) * binomial(n, k + 1),
                big(n * (n - 1)),
            )
        }
        FormulaId::EqPuu => {
            let k = params[1];
            if n < 2 || !(1..n).contains(&k) {
                return Err(domain(id, params, "n >= 2 and 1 <= k <= n-1"));
            }
            exact_div(binomial(n - 1, k) * binomial(n - 1, k - 1), big(n - 1))
        }
        FormulaId::EqMixed => {
            let k = params[1];
            if n < 2 || !(1..n).contains(&k) {
                return Err(domain(id, params, "n >= 2 and 1 <= k <= n-1"));
            }
            exact_div(
                big(2) * binomial(n - 1, k - 1) * binomial(n - 1, k + 1),
                big(n - 1),
            )
        }
        FormulaId::TauCount => {
            let k = params[1];
            if n < 2 || !(0..n).contains(&k) {
                return Err(domain(id, params, "n >= 2 and 0 <= k <= n-1"));
            }
            let whole = narayana(n, k + 1)?;
            let removed = narayana(n - 1, k)? + narayana(n - 1, k + 1)?;
            if removed > whole {
                return Err(FormulaError::Negative(format!(
                    "{id}{params:?}: {whole} - {removed}"
                )));
            }
            Ok(whole - removed)
        }
    }
}

fn narayana(n: i64, k: i64) -> Result<BigUint, FormulaError> {
    exact_div(binomial(n, k) * binomial(n, k - 1), big(n))
}

pub fn catalan(n: usize) -> BigUint {
    evaluate_formula(FormulaId::Catalan, &[n as i64]).expect("catalan is total on n >= 0")
}
