//! Katalan functions K(Ψ; M; γ): root ideals, their bounce graphs, exact
//! evaluation in Λ, and the rewrite rules used for straightening.

mod eval;
mod render;
mod rewrite;
mod root_ideal;
mod sample;
mod straighten;
mod triple;

pub use eval::{evaluate, evaluate_factors, evaluate_lrkh, Factor};
pub use render::render_diagram;
pub use rewrite::{
    absorption, add_root_i, add_root_ii, alternating, bounce_up_1, bounce_up_2, cleaning, dot_i, dot_ii,
    vanish, Expansion,
};
pub use root_ideal::{residue_r, RootIdeal};
pub use sample::{expansion_value, sample_instance, RewriteRule};
pub use straighten::{straighten, StraightenCase, Straightened};
pub use triple::KatalanTriple;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KatalanError {
    #[error("invalid root ideal: {0}")]
    InvalidIdeal(String),
    #[error("invalid Katalan triple: {0}")]
    InvalidTriple(String),
    #[error("{lemma}: hypothesis violated: {clause}")]
    HypothesisViolated { lemma: &'static str, clause: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
