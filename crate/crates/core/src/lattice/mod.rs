//! The five-vertex lattice model: R-matrix, row-to-row monodromy entries
//! acting on particle-number sectors, partition functions and exchange
//! relations.

pub mod relations;
pub mod rmatrix;
pub mod sector;

pub use relations::{
    check_commutation, check_d_layers_as_b, check_mixed_layers_as_b, commutation_failures, relation_terms,
    same_terms, LemmaReport, Relation, RelationTerms,
};
pub use rmatrix::{check_yang_baxter, r_elem, yang_baxter_failures, RElemFn, SpectralParam};
pub use sector::{
    apply_operator, matrix_element, partition_function, pf_word, sweep_paths, OpKind, OperatorWord, PfKind,
    SectorVector,
};
