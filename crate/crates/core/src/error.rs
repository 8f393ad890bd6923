use thiserror::Error;

use crate::root_core::{Gcm2, RootVec};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix entries must be positive integers, got a={a}, b={b}")]
    InvalidGcm { a: i64, b: i64 },

    #[error("{op} needs a non-finite Cartan matrix (ab >= 4), got {gcm}")]
    FiniteType { op: &'static str, gcm: Gcm2 },

    #[error("{op} needs a finite Cartan matrix (ab <= 3), got {gcm}")]
    NotFiniteType { op: &'static str, gcm: Gcm2 },

    #[error("{op} is not defined for {gcm}: {reason}")]
    Unsupported {
        op: &'static str,
        gcm: Gcm2,
        reason: &'static str,
    },

    #[error("{0} is not a real root, its coroot is undefined")]
    NonRealRoot(RootVec),

    #[error("{element} breaks the {mode} pi-system contract: {reason}")]
    ContractViolation {
        element: Box<RootVec>,
        mode: &'static str,
        reason: &'static str,
    },

    #[error("not a pi-system: {first} - {second} is a root")]
    NotPiSystem {
        first: Box<RootVec>,
        second: Box<RootVec>,
    },

    #[error("duplicate element {0} in pi-system")]
    DuplicateElement(RootVec),

    #[error("{check} does not apply to {target}: {reason}")]
    RegimeMismatch {
        check: String,
        target: String,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
