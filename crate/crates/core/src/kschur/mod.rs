//! K-k-Schur functions and their relatives: g^{(k)}, the closed Katalan
//! functions 𝔤̃^{(k)}, the closed K-k-Schur functions g̃^{(k)}, and g°^{(k)},
//! with the 0-Hecke actions and Pieri rules relating them.

mod families;
mod hecke;
mod module_va;
mod pieri;

pub use families::{closed_katalan, closed_kkschur, gcirc, kkschur, Family, FamilyCache};
pub use hecke::{apply_t_seq, hecke_d, hecke_t, naito_formula, t_u_a, GcircVec};
pub use module_va::{hecke_module_check, CoxeterKind, ModuleReport};
pub use pieri::{
    k_rectangle_check, key_lemma_check, pieri_appc, pieri_closed_h_rhs, pieri_closed_terms, pieri_closed_v_rhs,
    pieri_h_rhs, pieri_h_terms, strip_partition, strips_h, strips_v, Direction,
};

use thiserror::Error;

use crate::affine::AffineError;
use crate::symfunc::{BasisError, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KSchurError {
    #[error("{0} is not {1}-bounded")]
    NotKBounded(Partition, usize),
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

pub(crate) fn check_r(r: usize, k: usize) -> Result<(), KSchurError> {
    if r > k {
        return Err(KSchurError::OutOfRange(format!("r = {r} outside 0..={k}")));
    }
    Ok(())
}
