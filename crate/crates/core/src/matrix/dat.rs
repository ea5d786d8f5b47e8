use serde::Serialize;

use crate::budget::Budget;
use crate::syntax::{classicality, white_star, Formula};

use super::{atoms_of, bd2, cpl, lfi1, LogicMatrix, MatrixError};

/// The two sides of a derivability adjustment instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DatResult {
    pub target: String,
    pub target_holds: bool,
    pub bd2_holds: bool,
}

impl DatResult {
    pub fn agrees(&self) -> bool {
        self.target_holds == self.bd2_holds
    }
}

fn dat(
    target: &LogicMatrix,
    gamma: &[Formula],
    psi: &Formula,
    guard: fn(Formula) -> Formula,
    budget: &Budget,
) -> Result<DatResult, MatrixError> {
    let target_holds = target.consequence(gamma, psi, budget)?.holds();
    let mut premises = gamma.to_vec();
    premises.extend(
        atoms_of(gamma.iter().chain([psi]))
            .into_iter()
            .map(|a| guard(Formula::Atom(a))),
    );
    let bd2_holds = bd2().consequence(&premises, psi, budget)?.holds();
    Ok(DatResult {
        target: target.name().to_string(),
        target_holds,
        bd2_holds,
    })
}

/// Compares `Γ ⊨_LFI1 ψ` with `Γ, ☆p1, …, ☆pn ⊨_BD2 ψ`.
pub fn dat_lfi1(
    gamma: &[Formula],
    psi: &Formula,
    budget: &Budget,
) -> Result<DatResult, MatrixError> {
    dat(&lfi1(), gamma, psi, white_star, budget)
}

/// Compares `Γ ⊨_CPL ψ` with `Γ, ∘p1, …, ∘pn ⊨_BD2 ψ`.
pub fn dat_cpl(
    gamma: &[Formula],
    psi: &Formula,
    budget: &Budget,
) -> Result<DatResult, MatrixError> {
    dat(&cpl(), gamma, psi, classicality, budget)
}
