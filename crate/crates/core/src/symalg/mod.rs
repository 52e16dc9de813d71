//! Generic finite-dimensional symmetric algebras given by structure constants.

mod constructors;
mod kuelshammer;
mod table;

pub use constructors::{
    d2a_table, d2a_vertex_idempotents, d2a_word_count, direct_sum, group_algebra_table,
    group_algebra_table_with_guard, matrix_algebra_table, D2APresentation, DEFAULT_TABLE_GUARD,
};
pub use kuelshammer::{center, center_by_commutants, commutator_space, tn_perp, tn_space, KuelshammerTower};
pub use table::{AlgebraTable, ValidationReport, EXHAUSTIVE_VALIDATION_DIM, SAMPLED_TRIPLES, VALIDATION_SEED};
