//! The affine symmetric group W̃_{k+1}, its extension by π, and the
//! Lapointe–Morse bijection with k-bounded partitions.

mod bruhat;
mod cyclic;
mod extended;
mod grassmannian;
mod perm;

pub use bruhat::{bruhat_leq, weak_leq_left, BruhatOracle};
pub use cyclic::{cyclic_word, cyclically_decreasing, cyclically_increasing, hecke_star, hecke_star_seq};
pub use extended::{
    dual_partition, grassmannian_perm, k_rectangle, sh, standard_tableau_word, translation_antifund, ExtAffinePerm,
};
pub use grassmannian::{
    k_bounded_partitions, k_bounded_up_to, lm_bijection, lm_inverse, lm_word, omega_k_partition,
    KBoundedPartition,
};
pub use perm::{format_word, parse_word, AffinePerm};

use thiserror::Error;

use crate::symfunc::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffineError {
    #[error("invalid window {0:?}: {1}")]
    BadWindow(Vec<i64>, String),
    #[error("cannot parse affine permutation: {0}")]
    Parse(String),
    #[error("{0} is not affine Grassmannian")]
    NotGrassmannian(AffinePerm),
    #[error("{0} is not {1}-bounded")]
    NotKBounded(Partition, usize),
    #[error("the residue set must be a proper subset of {{0,…,{0}}}")]
    NotProperSubset(usize),
    #[error("residue {0} out of range for k = {1}")]
    ResidueOutOfRange(usize, usize),
    #[error("{0} does not fit in the {1}×{2} rectangle")]
    DoesNotFit(Partition, usize, usize),
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("{0} is not in the finite symmetric group")]
    NotFinite(AffinePerm),
    #[error("normalization failed: {0}")]
    NormalizationFailed(String),
    #[error("shape {0} has λ_1+ℓ(λ) > k+1 = {1}")]
    ShapeTooLarge(Partition, usize),
    #[error("not a standard tableau of shape {0}")]
    NotStandard(Partition),
}
