//! Hecke algebras of finite Coxeter groups and Kazhdan–Lusztig polynomials.

pub mod coxeter;
pub mod kl;
pub mod laurent;

use thiserror::Error;

pub use coxeter::{coxeter_matrix, CoxeterGroup, CoxeterType};
pub use kl::{HeckeAlgebra, HeckeElement, KlTable};
pub use laurent::LaurentHalf;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("elements belong to different Coxeter systems")]
    SystemMismatch,
    #[error("Coxeter system exceeds the size limit {0}")]
    SystemTooLarge(usize),
    #[error("not a Coxeter matrix")]
    InvalidMatrix,
    #[error("generators must be involutions of a common degree")]
    InvalidGenerators,
    #[error("element index {0} out of range")]
    NoSuchElement(usize),
}
