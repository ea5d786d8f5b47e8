//! First-order formulas over a signature, four-valued structures and
//! bounded countermodel search.

mod search;
mod semantics;
mod syntax;

use thiserror::Error;

use crate::budget::BudgetError;
use crate::syntax::ParseError;

pub use search::{
    count_structures, fo_consequence_bounded, structures, FoOutcome, SearchOptions, Structures,
};
pub use semantics::{
    assignments, element_name, parse_element, Assignment, Countermodel, Structure4,
};
pub use syntax::{parse_fo, parse_term, FoFormula, Signature, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolError {
    #[error("{0}")]
    Signature(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{symbol}` expects {expected} arguments, found {found}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("variable `{0}` is not assigned")]
    Unassigned(String),
    #[error("term {term} is not free for {var} in {formula}")]
    NotFreeFor {
        term: String,
        var: String,
        formula: String,
    },
    #[error("domain must be nonempty")]
    EmptyDomain,
    #[error("element {element} is outside a domain of size {size}")]
    NotInDomain { element: usize, size: usize },
    #[error("cannot read structure: {0}")]
    Structure(String),
    #[error("signature has function symbols; enable function enumeration to search it")]
    FunctionsExcluded,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Budget(#[from] BudgetError),
}
