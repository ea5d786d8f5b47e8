use std::fmt;

use crate::fol::{FoFormula, Term};
use crate::syntax::{Bindings, Compound};

use super::prop::write_bindings;
use super::{check_axiom, check_mp, check_premise, earlier, Proof, ProofError, Rules};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoJustification {
    Premise,
    Axiom {
        name: String,
        bindings: Bindings<FoFormula>,
    },
    Mp(usize, usize),
    /// `∀xφ → φ[x/t]`
    AxA {
        x: String,
        t: Term,
        phi: FoFormula,
    },
    /// `¬∀xφ → ¬∀x¬¬φ`
    AxB {
        x: String,
        phi: FoFormula,
    },
    /// `¬φ[x/t] → ¬∀xφ`
    AxC {
        x: String,
        t: Term,
        phi: FoFormula,
    },
    /// From `α → β` infer `α → ∀xβ`, `x` not free in `α`.
    AllIn1(usize, String),
    /// From `β → α` infer `¬∀x¬β → α`, `x` not free in `α`.
    AllIn2(usize, String),
}

pub type FoProof = Proof<FoFormula, FoJustification>;

impl Rules<FoFormula> for FoJustification {
    fn premise() -> Self {
        FoJustification::Premise
    }

    fn axiom(name: &str, bindings: Bindings<FoFormula>) -> Self {
        FoJustification::Axiom {
            name: name.to_string(),
            bindings,
        }
    }

    fn mp(imp: usize, ant: usize) -> Self {
        FoJustification::Mp(imp, ant)
    }

    fn is_premise(&self) -> bool {
        matches!(self, FoJustification::Premise)
    }

    fn sources(&self) -> Vec<usize> {
        match self {
            FoJustification::Mp(i, j) => vec![*i, *j],
            FoJustification::AllIn1(i, _) | FoJustification::AllIn2(i, _) => vec![*i],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for FoJustification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoJustification::Premise => f.write_str("premise"),
            FoJustification::Axiom { name, bindings } => {
                write!(f, "ax {name}")?;
                write_bindings(f, bindings)
            }
            FoJustification::Mp(i, j) => write!(f, "mp {i} {j}"),
            FoJustification::AxA { x, t, phi } => write!(f, "axA x={x} t={t} phi={phi}"),
            FoJustification::AxB { x, phi } => write!(f, "axB x={x} phi={phi}"),
            FoJustification::AxC { x, t, phi } => write!(f, "axC x={x} t={t} phi={phi}"),
            FoJustification::AllIn1(i, x) => write!(f, "all1 {i} x={x}"),
            FoJustification::AllIn2(i, x) => write!(f, "all2 {i} x={x}"),
        }
    }
}

fn forall(x: &str, phi: FoFormula) -> FoFormula {
    FoFormula::forall(x, phi)
}

fn expect_shape(formula: &FoFormula, expected: FoFormula, rule: &str) -> Result<(), String> {
    if *formula == expected {
        Ok(())
    } else {
        Err(format!("{rule} yields {expected}, not {formula}"))
    }
}

fn substituted(phi: &FoFormula, x: &str, t: &Term) -> Result<FoFormula, String> {
    if !phi.free_for(t, x) {
        return Err(format!("term {t} is not free for {x} in {phi}"));
    }
    phi.substitute(x, t).map_err(|e| e.to_string())
}

fn side_condition(x: &str, alpha: &FoFormula) -> Result<(), String> {
    if alpha.has_free(x) {
        return Err(format!(
            "side condition {x} ∉ FV(α) violated: {x} is free in {alpha}"
        ));
    }
    Ok(())
}

fn check_line(proof: &FoProof, n: usize) -> Result<(), String> {
    let line = &proof.lines[n - 1];
    let formula = &line.formula;
    match &line.justification {
        FoJustification::Premise => check_premise(&proof.premises, formula),
        FoJustification::Axiom { name, bindings } => check_axiom(name, bindings, formula),
        FoJustification::Mp(i, j) => check_mp(&proof.lines, n, *i, *j, formula),
        FoJustification::AxA { x, t, phi } => {
            let inst = substituted(phi, x, t)?;
            expect_shape(
                formula,
                FoFormula::imp(forall(x, phi.clone()), inst),
                "axiom A",
            )
        }
        FoJustification::AxB { x, phi } => {
            let lhs = FoFormula::neg(forall(x, phi.clone()));
            let rhs = FoFormula::neg(forall(x, FoFormula::neg(FoFormula::neg(phi.clone()))));
            expect_shape(formula, FoFormula::imp(lhs, rhs), "axiom B")
        }
        FoJustification::AxC { x, t, phi } => {
            let inst = substituted(phi, x, t)?;
            let expected =
                FoFormula::imp(FoFormula::neg(inst), FoFormula::neg(forall(x, phi.clone())));
            expect_shape(formula, expected, "axiom C")
        }
        FoJustification::AllIn1(i, x) => {
            let source = earlier(&proof.lines, n, *i)?;
            let (alpha, beta) = source
                .as_imp()
                .ok_or_else(|| format!("line {i} is not an implication"))?;
            side_condition(x, alpha)?;
            let expected = FoFormula::imp(alpha.clone(), forall(x, beta.clone()));
            expect_shape(formula, expected, &format!("all1 on line {i}"))
        }
        FoJustification::AllIn2(i, x) => {
            let source = earlier(&proof.lines, n, *i)?;
            let (beta, alpha) = source
                .as_imp()
                .ok_or_else(|| format!("line {i} is not an implication"))?;
            side_condition(x, alpha)?;
            let exists = FoFormula::neg(forall(x, FoFormula::neg(beta.clone())));
            expect_shape(
                formula,
                FoFormula::imp(exists, alpha.clone()),
                &format!("all2 on line {i}"),
            )
        }
    }
}

/// Checks every line and returns the formula of the last one.
pub fn check_proof_hqbd2(proof: &FoProof) -> Result<FoFormula, ProofError> {
    if proof.lines.is_empty() {
        return Err(ProofError::new(0, "proof has no lines"));
    }
    for n in 1..=proof.lines.len() {
        check_line(proof, n).map_err(|reason| ProofError::new(n, reason))?;
    }
    Ok(proof.lines.last().expect("nonempty").formula.clone())
}
