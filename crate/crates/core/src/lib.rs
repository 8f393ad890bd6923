//! Root combinatorics of rank-2 Kac-Moody algebras in exact arithmetic.
//!
//! The crate is split the same way the computations depend on each other:
//!
//! * [`root_core`] holds the integer primitives: Cartan matrices `(2 -a; -b 2)`,
//!   the `c`/`d` sequences that parameterize the positive real roots, the
//!   invariant bilinear form, root classification and Weyl reflections.
//! * [`pi_systems`] decides the pi-system property, enumerates pi-systems inside
//!   a finite window of roots and computes their derived Cartan matrices.
//! * [`classifier`] contains the closed-form answers: pair predicates, the
//!   `eta`/`xi`/`zeta` and `x`/`y` recurrences, isomorphism decisions and the
//!   summary table of root generated subalgebras.
//! * [`verifier`] runs named brute-force checks that confront each closed form
//!   with exhaustive computation.

pub mod classifier;
pub mod error;
pub mod pi_systems;
pub mod root_core;
pub mod serde_int;
pub mod verifier;

pub use error::{Error, Result};
pub use root_core::{
    beta, bilinear_scaled, cd_sequences, classify_root, enumerate_finite_roots, pairing,
    simple_reflection, weyl_word_apply, BetaIndex, BetaTable, CartanType, Family, Gcm2, Regime,
    RootClass, RootVec, SequenceTable, Simple,
};
