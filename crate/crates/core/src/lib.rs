//! Lattice paths from `(0,0)` to `(n,n)` classified by the number of up
//! steps below the diagonal, peaks, and first and last steps: path
//! primitives, statistics, the bijections between classes, exhaustive
//! enumeration, closed-form counts and a verifier that checks each against
//! the other.

pub mod bijections;
pub mod cli;
pub mod enumeration;
pub mod formulas;
pub mod path;
pub mod render;
pub mod stats;
pub mod verify;

pub use bijections::{BijectionError, BijectionId};
pub use enumeration::{build_census, enumerate_paths, Census, CensusConfig, EnumError};
pub use formulas::{evaluate_formula, FormulaError, FormulaId};
pub use path::{parse_path, PathError, Step, StepWord};
pub use stats::{stat_record, ClassFilter, StatRecord};
pub use verify::{verify_bijection, verify_identity, IdentityId, VerifyReport};
