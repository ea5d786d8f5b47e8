use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::matrix::bd2;
use crate::syntax::{Bindings, Formula};

use super::{axioms, check_axiom, check_mp, check_premise, Proof, ProofError, Rules};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Premise,
    Axiom {
        name: String,
        bindings: Bindings<Formula>,
    },
    /// `Mp(i, j)`: line `i` is `α → β`, line `j` is `α`.
    Mp(usize, usize),
}

pub type PropProof = Proof<Formula, Justification>;

impl Rules<Formula> for Justification {
    fn premise() -> Self {
        Justification::Premise
    }

    fn axiom(name: &str, bindings: Bindings<Formula>) -> Self {
        Justification::Axiom {
            name: name.to_string(),
            bindings,
        }
    }

    fn mp(imp: usize, ant: usize) -> Self {
        Justification::Mp(imp, ant)
    }

    fn is_premise(&self) -> bool {
        matches!(self, Justification::Premise)
    }

    fn sources(&self) -> Vec<usize> {
        match self {
            Justification::Mp(i, j) => vec![*i, *j],
            _ => Vec::new(),
        }
    }
}

pub(crate) fn write_bindings<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    bindings: &Bindings<T>,
) -> fmt::Result {
    for (k, v) in bindings {
        write!(f, " {k}={v}")?;
    }
    Ok(())
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Premise => f.write_str("premise"),
            Justification::Axiom { name, bindings } => {
                write!(f, "ax {name}")?;
                write_bindings(f, bindings)
            }
            Justification::Mp(i, j) => write!(f, "mp {i} {j}"),
        }
    }
}

/// Checks every line and returns the formula of the last one.
pub fn check_proof_hbd2(proof: &PropProof) -> Result<Formula, ProofError> {
    if proof.lines.is_empty() {
        return Err(ProofError::new(0, "proof has no lines"));
    }
    for (i, line) in proof.lines.iter().enumerate() {
        let n = i + 1;
        let verdict = match &line.justification {
            Justification::Premise => check_premise(&proof.premises, &line.formula),
            Justification::Axiom { name, bindings } => check_axiom(name, bindings, &line.formula),
            Justification::Mp(a, b) => check_mp(&proof.lines, n, *a, *b, &line.formula),
        };
        verdict.map_err(|reason| ProofError::new(n, reason))?;
    }
    Ok(proof.lines.last().expect("nonempty").formula.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub checked: Vec<String>,
    /// Axiom name, instance and a refuting valuation.
    pub failures: Vec<(String, String, BTreeMap<String, String>)>,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Instantiates each schema at `A = p`, `B = q`, `C = r` and checks it is a
/// tautology of the four-valued matrix.
pub fn verify_axiom_soundness() -> SoundnessReport {
    let m = bd2();
    let budget = Budget::default();
    let bindings: Bindings<Formula> = [("A", "p"), ("B", "q"), ("C", "r")]
        .into_iter()
        .map(|(k, v)| (k.to_string(), Formula::atom(v)))
        .collect();
    let mut report = SoundnessReport {
        checked: Vec::new(),
        failures: Vec::new(),
    };
    for (name, schema) in axioms() {
        let used: Bindings<Formula> = bindings
            .iter()
            .filter(|(k, _)| schema.metavariables().contains(k))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        let instance = schema
            .instantiate(&used)
            .expect("three metavariables suffice");
        let outcome = m
            .tautology(&instance, &budget)
            .expect("three atoms are within budget");
        report.checked.push(name.to_string());
        if let Some(v) = outcome.countermodel() {
            report
                .failures
                .push((name.to_string(), instance.to_string(), m.describe(v)));
        }
    }
    report
}
