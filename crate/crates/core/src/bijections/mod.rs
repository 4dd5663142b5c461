//! Every map between path classes: complement and reversal, the
//! peak-complement map, the `m`-lowering injection and its case inverse, the
//! excursion swap, the combined union bijection and the single-return map
//! for `m = 1`.
//!
//! All appliers check their domain and return a typed error instead of an
//! arbitrary word. The verifier relies on `NotInImage` / `NotInHatDU` to
//! split classes into their hat and tilde parts.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::StepWord;

mod excursion;
mod gamma;
mod involution;
mod lowering;
mod single_return;
mod union;

pub use excursion::{apply_g, apply_g_inverse};
pub use gamma::gamma;
pub use involution::{complement_phi, reverse_theta};
pub use lowering::{
    apply_f, apply_f_inverse, classify_f_case, classify_fprime_case, decompose_sdnuq,
    decompose_usdq, FCase, FPrimeCase, SdnuqParts, UsdqParts,
};
pub use single_return::{apply_tau, apply_tau_inverse};
pub use union::{apply_cf_phi, apply_cf_phi_inverse};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("EmptyPath: map requires semilength n >= 1")]
    EmptyPath,
    #[error("NoBelowStep: path never goes below the diagonal (m = 0)")]
    NoBelowStep,
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("NotInImage: path is of the form UDNM and has no preimage under f")]
    NotInImage,
    #[error("NotInHatDU: path is not of the form NMDU with N, M nonempty")]
    NotInHatDU,
}

impl BijectionError {
    pub fn name(&self) -> &'static str {
        match self {
            BijectionError::EmptyPath => "EmptyPath",
            BijectionError::NoBelowStep => "NoBelowStep",
            BijectionError::Domain(_) => "DomainError",
            BijectionError::NotInImage => "NotInImage",
            BijectionError::NotInHatDU => "NotInHatDU",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        BijectionError::Domain(msg.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BijectionId {
    Phi,
    Theta,
    Gamma,
    F,
    FInv,
    G,
    GInv,
    CfPhi,
    CfPhiInv,
    Tau,
    TauInv,
}

impl BijectionId {
    pub const ALL: [BijectionId; 11] = [
        BijectionId::Phi,
        BijectionId::Theta,
        BijectionId::Gamma,
        BijectionId::F,
        BijectionId::FInv,
        BijectionId::G,
        BijectionId::GInv,
        BijectionId::CfPhi,
        BijectionId::CfPhiInv,
        BijectionId::Tau,
        BijectionId::TauInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionId::Phi => "phi",
            BijectionId::Theta => "theta",
            BijectionId::Gamma => "gamma",
            BijectionId::F => "f",
            BijectionId::FInv => "f-inv",
            BijectionId::G => "g",
            BijectionId::GInv => "g-inv",
            BijectionId::CfPhi => "cf-phi",
            BijectionId::CfPhiInv => "cf-phi-inv",
            BijectionId::Tau => "tau",
            BijectionId::TauInv => "tau-inv",
        }
    }

    /// The declared inverse; involutions are their own inverse.
    pub fn inverse(self) -> BijectionId {
        match self {
            BijectionId::Phi => BijectionId::Phi,
            BijectionId::Theta => BijectionId::Theta,
            BijectionId::Gamma => BijectionId::Gamma,
            BijectionId::F => BijectionId::FInv,
            BijectionId::FInv => BijectionId::F,
            BijectionId::G => BijectionId::GInv,
            BijectionId::GInv => BijectionId::G,
            BijectionId::CfPhi => BijectionId::CfPhiInv,
            BijectionId::CfPhiInv => BijectionId::CfPhi,
            BijectionId::Tau => BijectionId::TauInv,
            BijectionId::TauInv => BijectionId::Tau,
        }
    }

    pub fn apply(self, path: &StepWord) -> Result<StepWord, BijectionError> {
        match self {
            BijectionId::Phi => Ok(complement_phi(path)),
            BijectionId::Theta => Ok(reverse_theta(path)),
            BijectionId::Gamma => gamma(path),
            BijectionId::F => apply_f(path),
            BijectionId::FInv => apply_f_inverse(path),
            BijectionId::G => apply_g(path),
            BijectionId::GInv => apply_g_inverse(path),
            BijectionId::CfPhi => apply_cf_phi(path),
            BijectionId::CfPhiInv => apply_cf_phi_inverse(path),
            BijectionId::Tau => apply_tau(path),
            BijectionId::TauInv => apply_tau_inverse(path),
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BijectionId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown bijection {s:?}"))
    }
}
