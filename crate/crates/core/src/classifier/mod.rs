//! Closed-form classification: which pairs of real roots form pi-systems, the
//! integer sequences that fill the derived matrices, isomorphism decisions and
//! the summary table.
//!
//! Everything here except the final cross-checks is formula evaluation; the
//! brute-force side lives in [`crate::pi_systems`] and [`crate::verifier`].

mod iso;
mod predicates;
mod recurrences;
mod table;

pub use iso::{equal_up_to_relabeling, iso_class_equal, sigma, sigma_matrix};
pub use predicates::{
    nthmab_pair_predicate, pair_predicate, thm41_predicate, thmab_pair_predicate, Thm41Query,
};
pub use recurrences::{
    converse_solutions, eta_sequences, linear_recurrence, xi_recurrence, zeta_recurrence,
    zeta_solution_index, ConverseMatch, ConverseSolutions, EtaOrdering, EtaSequences,
};
pub use table::{summary_table, TableRow};
