//! The four-element truth lattice and finite Boolean algebras.

mod boolean;
mod four;

pub use boolean::{
    char_hom, ultrafilters, BaElem, BaOp, FiniteBooleanAlgebra, Ultrafilter, MAX_ATOMS,
};
pub use four::{bound4, BoundKind, TruthValue};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("empty bound")]
    EmptyBound,
    #[error("unknown truth value `{0}` (expected one of 1, b, n, 0)")]
    UnknownValue(String),
    #[error("atom count must be between 1 and {MAX_ATOMS}, got {0}")]
    AtomCount(u32),
    #[error("element {element} is not in the carrier of the {atoms}-atom algebra")]
    NotInCarrier { element: u32, atoms: u32 },
    #[error("operation expects {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("ultrafilter generated by atom {0} does not belong to this algebra")]
    ForeignUltrafilter(u32),
}
