//! Two-qubit correlation measures for coherent-state superpositions sent
//! through an amplitude-damping (beam-splitter) channel.
//!
//! The crate builds the damped Bell cat-state family as two-qubit X-states,
//! computes quantum discord, classical correlation and concurrence both in
//! closed form and by direct numerical minimization, evolves the states under
//! a dephasing channel, and cross-checks everything against an independent
//! truncated-Fock-space construction.

pub mod cat;
pub mod correlations;
pub mod density;
pub mod dephasing;
pub mod fock;

pub use density::{BlochX, HermMatrix2, Spectrum, XMatrix4};

/// Errors surfaced by the numerical layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("invalid spectrum: {0}")]
    Spectrum(String),
    #[error("matrix is not a valid density: {0}")]
    Density(String),
    #[error("degenerate normalization: {0}")]
    Degenerate(String),
    #[error("Fock truncation insufficient: deficit {deficit:.3e} at dim {dim}")]
    Truncation { deficit: f64, dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
