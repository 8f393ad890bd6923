//! Integer primitives for the rank-2 root lattice.

mod classify;
mod finite;
mod gcm;
mod lattice;
mod sequences;

pub use classify::{classify_root, RootClass};
pub use finite::enumerate_finite_roots;
pub use gcm::{CartanType, Gcm2, Regime};
pub use lattice::{
    bilinear_scaled, coroot_pairing, norm_scaled, pairing, simple_reflection, weyl_word_apply,
    RootVec, Simple, WeylWord,
};
pub use sequences::{beta, cd_sequences, BetaIndex, BetaTable, Family, SequenceTable};
