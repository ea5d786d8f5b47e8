use thiserror::Error;

use crate::fol::FoFormula;
use crate::syntax::Compound;

use super::{
    check_proof_hqbd2, dependents, macros, FoJustification, FoProof, ProofBuilder, ProofError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DmtError {
    #[error("input proof is invalid: {0}")]
    Invalid(#[from] ProofError),
    #[error("{0} is not a premise of the proof")]
    NotAPremise(String),
    #[error("line {line} quantifies {var}, which is free in the discharged premise")]
    SideCondition { line: usize, var: String },
}

/// Turns a proof of `ψ` from `Γ ∪ {φ}` into a proof of `φ → ψ` from `Γ`.
/// Every occurrence of `φ` among the premises is discharged.
pub fn dmt_transform(proof: &FoProof, phi: &FoFormula) -> Result<FoProof, DmtError> {
    check_proof_hqbd2(proof)?;
    if !proof.premises.contains(phi) {
        return Err(DmtError::NotAPremise(phi.to_string()));
    }
    let dependent = dependents(proof, phi);
    for (i, l) in proof.lines.iter().enumerate() {
        if let FoJustification::AllIn1(src, x) | FoJustification::AllIn2(src, x) = &l.justification
        {
            if dependent.contains(src) && phi.has_free(x) {
                return Err(DmtError::SideCondition {
                    line: i + 1,
                    var: x.clone(),
                });
            }
        }
    }

    let mut b = ProofBuilder::<FoFormula, FoJustification>::new();
    // plain[k]: output line holding ψ_k (independent lines only);
    // guarded[k]: output line holding φ → ψ_k.
    let mut plain = vec![0usize; proof.lines.len() + 1];
    let mut guarded = vec![0usize; proof.lines.len() + 1];
    for (i, l) in proof.lines.iter().enumerate() {
        let n = i + 1;
        if !dependent.contains(&n) {
            let justification = match &l.justification {
                FoJustification::Mp(a, c) => FoJustification::Mp(plain[*a], plain[*c]),
                FoJustification::AllIn1(a, x) => FoJustification::AllIn1(plain[*a], x.clone()),
                FoJustification::AllIn2(a, x) => FoJustification::AllIn2(plain[*a], x.clone()),
                other => other.clone(),
            };
            plain[n] = if l.justification == FoJustification::Premise {
                b.premise(l.formula.clone())
            } else {
                b.push(l.formula.clone(), justification)
            };
            guarded[n] = macros::lift(&mut b, phi.clone(), plain[n]);
            continue;
        }
        guarded[n] = match &l.justification {
            FoJustification::Premise => macros::identity(&mut b, phi.clone()),
            FoJustification::Mp(a, c) => macros::under(&mut b, guarded[*a], guarded[*c]),
            FoJustification::AllIn1(a, x) => {
                let imported = macros::import(&mut b, guarded[*a]);
                let (ante, body) = split(b.formula(imported));
                let quantified = b.push(
                    FoFormula::imp(ante, FoFormula::forall(x, body)),
                    FoJustification::AllIn1(imported, x.clone()),
                );
                macros::export(&mut b, quantified)
            }
            FoJustification::AllIn2(a, x) => {
                let swapped = macros::exchange(&mut b, guarded[*a]);
                let (beta, rest) = split(b.formula(swapped));
                let exists = FoFormula::neg(FoFormula::forall(x, FoFormula::neg(beta)));
                let quantified = b.push(
                    FoFormula::imp(exists, rest),
                    FoJustification::AllIn2(swapped, x.clone()),
                );
                macros::exchange(&mut b, quantified)
            }
            _ => unreachable!("axioms never depend on a premise"),
        };
    }
    debug_assert_eq!(guarded[proof.lines.len()], b.len());
    let mut out = b.finish();
    out.premises.retain(|p| p != phi);
    Ok(out)
}

fn split(f: &FoFormula) -> (FoFormula, FoFormula) {
    match f {
        FoFormula::Imp(a, b) => ((**a).clone(), (**b).clone()),
        _ => unreachable!("macro output is an implication"),
    }
}
