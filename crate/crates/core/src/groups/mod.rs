//! Finite permutation groups, conjugacy classes, character tables and the
//! degree-n agreement bound for irreducible characters.

pub mod catalog;
pub mod chartable;
pub mod classes;
pub mod group;
pub mod lemma;
pub mod perm;
pub mod spec_file;

use thiserror::Error;

pub use catalog::{bundled_catalog, catalog, CatalogEntry};
pub use chartable::{character_table, Character, CharacterTable};
pub use classes::{conjugacy_classes, ConjugacyClassPartition};
pub use group::{build_group, direct_product, FiniteGroup, MAX_ORDER};
pub use lemma::{
    agreement_fraction, extremal_search, inner_product, lemma_check, lemma_proof_bound,
    lemma_threshold, Extremal, LemmaVerdict,
};
pub use perm::Permutation;
pub use spec_file::parse_group_spec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("closure exceeds the limit of {limit} elements")]
    ClosureExceedsLimit { limit: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),
    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} has no central involution")]
    NoCentralInvolution(String),
    #[error("eigenspaces not separated after {attempts} attempts (smallest gap {gap:e})")]
    NumericalDegeneracy { attempts: usize, gap: f64 },
    #[error("characters belong to different class structures")]
    ClassMismatch,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("distinct characters agree on a fraction {fraction} above the bound {threshold}")]
    LemmaViolation { fraction: String, threshold: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
