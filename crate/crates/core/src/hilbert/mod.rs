//! Hilbert-style proof checking for the propositional calculus and its
//! first-order extension, plus the deduction-metatheorem transformer.

mod catalog;
mod dmt;
mod fol;
pub mod macros;
mod prop;
mod text;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{Bindings, Compound, Node};

pub use catalog::{axiom, axioms, provable_schemes, PROVABLE_SCHEMES};
pub use dmt::{dmt_transform, DmtError};
pub use fol::{check_proof_hqbd2, FoJustification, FoProof};
pub use prop::{
    check_proof_hbd2, verify_axiom_soundness, Justification, PropProof, SoundnessReport,
};
pub use text::{parse_fo_proof, parse_prop_proof};

/// A checker rejection. `line` is 1-based; 0 refers to the proof as a whole.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("line {line}: {reason}")]
pub struct ProofError {
    pub line: usize,
    pub reason: String,
}

impl ProofError {
    pub fn new(line: usize, reason: impl Into<String>) -> Self {
        Self {
            line,
            reason: reason.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line<T, J> {
    pub formula: T,
    pub justification: J,
}

/// Premises and numbered lines; line `n` is `lines[n - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof<T, J> {
    pub premises: Vec<T>,
    pub lines: Vec<Line<T, J>>,
}

impl<T, J> Default for Proof<T, J> {
    fn default() -> Self {
        Self {
            premises: Vec::new(),
            lines: Vec::new(),
        }
    }
}

impl<T, J> Proof<T, J> {
    pub fn conclusion(&self) -> Option<&T> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn line(&self, n: usize) -> Option<&Line<T, J>> {
        n.checked_sub(1).and_then(|i| self.lines.get(i))
    }
}

impl<T: fmt::Display, J: fmt::Display> fmt::Display for Proof<T, J> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, l.formula, l.justification)?;
        }
        Ok(())
    }
}

/// Justification kinds shared by both calculi.
pub trait Rules<T>: Clone {
    fn premise() -> Self;
    fn axiom(name: &str, bindings: Bindings<T>) -> Self;
    fn mp(imp: usize, ant: usize) -> Self;
    fn is_premise(&self) -> bool;
    /// Earlier lines this step is inferred from.
    fn sources(&self) -> Vec<usize>;
}

/// JSON shape of a checker verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub valid: bool,
    pub derives: Option<String>,
    pub error: Option<ProofError>,
}

impl<T: fmt::Display> From<Result<T, ProofError>> for CheckReport {
    fn from(r: Result<T, ProofError>) -> Self {
        match r {
            Ok(f) => CheckReport {
                valid: true,
                derives: Some(f.to_string()),
                error: None,
            },
            Err(e) => CheckReport {
                valid: false,
                derives: None,
                error: Some(e),
            },
        }
    }
}

pub(crate) fn check_premise<T: Compound + fmt::Display>(
    premises: &[T],
    formula: &T,
) -> Result<(), String> {
    if premises.contains(formula) {
        Ok(())
    } else {
        Err(format!("{formula} is not among the premises"))
    }
}

/// The line must be an instance of the named schema; explicit bindings must
/// agree with the instance.
pub(crate) fn check_axiom<T: Compound + fmt::Display>(
    name: &str,
    bindings: &Bindings<T>,
    formula: &T,
) -> Result<(), String> {
    let schema = axiom(name).ok_or_else(|| format!("unknown axiom {name}"))?;
    let found = schema
        .match_formula(formula)
        .ok_or_else(|| format!("{formula} is not an instance of {name}: {schema}"))?;
    for (meta, value) in bindings {
        match found.get(meta) {
            None => return Err(format!("{name} has no metavariable {meta}")),
            Some(actual) if actual != value => {
                return Err(format!(
                    "binding {meta}={value} does not match the line, which has {meta}={actual}"
                ))
            }
            Some(_) => {}
        }
    }
    Ok(())
}

pub(crate) fn earlier<T, J>(
    lines: &[Line<T, J>],
    current: usize,
    target: usize,
) -> Result<&T, String> {
    if target == 0 || target > lines.len() {
        return Err(format!("reference to line {target}, which does not exist"));
    }
    if target >= current {
        return Err(format!("forward reference to line {target}"));
    }
    Ok(&lines[target - 1].formula)
}

pub(crate) fn check_mp<T: Compound + fmt::Display, J>(
    lines: &[Line<T, J>],
    current: usize,
    imp: usize,
    ant: usize,
    formula: &T,
) -> Result<(), String> {
    let major = earlier(lines, current, imp)?;
    let minor = earlier(lines, current, ant)?;
    let (a, b) = major
        .as_imp()
        .ok_or_else(|| format!("line {imp} is not an implication"))?;
    if a != minor {
        return Err(format!(
            "antecedent of line {imp} is {a}, but line {ant} is {minor}"
        ));
    }
    if b != formula {
        return Err(format!(
            "modus ponens on lines {imp} and {ant} yields {b}, not {formula}"
        ));
    }
    Ok(())
}

/// Lines depending on the premise stated at line `premise_line`: every
/// premise line with the same formula, and every inference from a
/// dependent line.
pub fn depends_on<T: PartialEq, J: Rules<T>>(
    proof: &Proof<T, J>,
    premise_line: usize,
) -> Result<BTreeSet<usize>, ProofError> {
    let line = proof
        .line(premise_line)
        .ok_or_else(|| ProofError::new(premise_line, "no such line"))?;
    if !line.justification.is_premise() {
        return Err(ProofError::new(premise_line, "line is not a premise"));
    }
    Ok(dependents(proof, &line.formula))
}

/// Lines depending on any premise line whose formula is `phi`.
pub fn dependents<T: PartialEq, J: Rules<T>>(proof: &Proof<T, J>, phi: &T) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (i, l) in proof.lines.iter().enumerate() {
        let n = i + 1;
        let dependent = if l.justification.is_premise() {
            l.formula == *phi
        } else {
            l.justification.sources().iter().any(|s| out.contains(s))
        };
        if dependent {
            out.insert(n);
        }
    }
    out
}

/// Incrementally builds a proof; each step computes its own formula.
pub struct ProofBuilder<T, J> {
    proof: Proof<T, J>,
}

impl<T: Compound, J: Rules<T>> Default for ProofBuilder<T, J> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Compound, J: Rules<T>> ProofBuilder<T, J> {
    pub fn new() -> Self {
        Self {
            proof: Proof::default(),
        }
    }

    pub fn formula(&self, n: usize) -> &T {
        &self.proof.lines[n - 1].formula
    }

    pub fn len(&self) -> usize {
        self.proof.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.proof.lines.is_empty()
    }

    pub fn push(&mut self, formula: T, justification: J) -> usize {
        self.proof.lines.push(Line {
            formula,
            justification,
        });
        self.proof.lines.len()
    }

    pub fn premise(&mut self, formula: T) -> usize {
        if !self.proof.premises.contains(&formula) {
            self.proof.premises.push(formula.clone());
        }
        self.push(formula, J::premise())
    }

    /// Adds an instance of a catalog axiom.
    pub fn axiom(&mut self, name: &str, bindings: &[(&str, T)]) -> usize {
        let bindings: Bindings<T> = bindings
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let formula = axiom(name)
            .unwrap_or_else(|| panic!("unknown axiom {name}"))
            .instantiate(&bindings)
            .unwrap_or_else(|e| panic!("{e}"));
        self.push(formula, J::axiom(name, bindings))
    }

    /// Adds the consequent of line `imp`; the checker validates the step.
    pub fn mp(&mut self, imp: usize, ant: usize) -> usize {
        let consequent = match self.formula(imp).node() {
            Node::Imp(_, b) => b.clone(),
            _ => panic!("line {imp} is not an implication"),
        };
        self.push(consequent, J::mp(imp, ant))
    }

    pub fn finish(self) -> Proof<T, J> {
        self.proof
    }
}
