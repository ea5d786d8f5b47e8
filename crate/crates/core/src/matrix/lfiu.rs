use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::syntax::Formula;

use super::{LogicMatrix, MatrixError, Outcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LfiuCondition {
    pub label: char,
    pub statement: String,
    /// `true` when the condition requires the consequence to hold.
    pub requires_validity: bool,
    pub satisfied: bool,
    pub witness: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LfiuReport {
    pub matrix: String,
    pub consistency: String,
    pub undeterminedness: String,
    pub explosion_witness: Option<BTreeMap<String, String>>,
    pub excluded_middle_witness: Option<BTreeMap<String, String>>,
    pub conditions: Vec<LfiuCondition>,
}

impl LfiuReport {
    pub fn paranormal(&self) -> bool {
        self.explosion_witness.is_some() && self.excluded_middle_witness.is_some()
    }

    pub fn all_hold(&self) -> bool {
        self.paranormal() && self.conditions.iter().all(|c| c.satisfied)
    }
}

fn unary_template(t: &Formula) -> Result<(), MatrixError> {
    if t.variables() != ["p"] {
        return Err(MatrixError::NotUnary {
            formula: t.to_string(),
        });
    }
    Ok(())
}

/// Checks the six conditions for a logic of formal inconsistency and
/// undeterminedness at `α = p`, `β = q`. `consistency` and `undeterminedness`
/// are formulas in the single atom `p` defining `∘p` and `⋆p`.
pub fn check_lfiu(
    m: &LogicMatrix,
    consistency: &Formula,
    undeterminedness: &Formula,
    budget: &Budget,
) -> Result<LfiuReport, MatrixError> {
    unary_template(consistency)?;
    unary_template(undeterminedness)?;
    let p = Formula::atom("p");
    let q = Formula::atom("q");
    let np = Formula::Neg(Box::new(p.clone()));
    let witness = |o: &Outcome| o.countermodel().map(|v| m.describe(v));

    let explosion = m.consequence(&[p.clone(), np.clone()], &q, budget)?;
    let excluded_middle = m.tautology(
        &Formula::Or(Box::new(p.clone()), Box::new(np.clone())),
        budget,
    )?;

    let circ = consistency.clone();
    let star = undeterminedness.clone();
    let or = |a: Formula, b: Formula| Formula::Or(Box::new(a), Box::new(b));
    let cases: [(char, Vec<Formula>, Formula, bool); 6] = [
        ('a', vec![p.clone(), circ.clone()], q.clone(), false),
        ('b', vec![np.clone(), circ.clone()], q.clone(), false),
        ('c', vec![p.clone(), np.clone(), circ], q.clone(), true),
        ('d', vec![], or(p.clone(), star.clone()), false),
        ('e', vec![], or(np.clone(), star.clone()), false),
        ('f', vec![], or(or(p, np), star), true),
    ];
    let mut conditions = Vec::new();
    for (label, gamma, psi, requires_validity) in cases {
        let outcome = m.consequence(&gamma, &psi, budget)?;
        let premises: Vec<String> = gamma.iter().map(ToString::to_string).collect();
        let turnstile = if requires_validity { "⊨" } else { "⊭" };
        conditions.push(LfiuCondition {
            label,
            statement: format!("{} {turnstile} {psi}", premises.join(", "))
                .trim_start()
                .to_string(),
            requires_validity,
            satisfied: outcome.holds() == requires_validity,
            witness: witness(&outcome),
        });
    }
    Ok(LfiuReport {
        matrix: m.name().to_string(),
        consistency: consistency.to_string(),
        undeterminedness: undeterminedness.to_string(),
        explosion_witness: witness(&explosion),
        excluded_middle_witness: witness(&excluded_middle),
        conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{bd, bd2, bs4, cpl};
    use crate::syntax::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn bd2_is_lfiu() {
        let r = check_lfiu(&bd2(), &f("#p"), &f("!##p"), &Budget::default()).unwrap();
        assert!(r.paranormal());
        assert!(r.all_hold(), "{r:#?}");
        assert_eq!(r.conditions.len(), 6);
    }

    #[test]
    fn bs4_is_lfiu() {
        let r = check_lfiu(&bs4(), &f("#p"), &f("!#p"), &Budget::default()).unwrap();
        assert!(r.all_hold(), "{r:#?}");
    }

    #[test]
    fn cpl_is_not_paranormal() {
        let r = check_lfiu(&cpl(), &f("#p"), &f("!##p"), &Budget::default()).unwrap();
        assert!(!r.paranormal());
        assert!(!r.all_hold());
    }

    #[test]
    fn wrong_undeterminedness_fails_f() {
        let r = check_lfiu(&bd2(), &f("#p"), &f("p & !p"), &Budget::default()).unwrap();
        let failed: Vec<char> = r
            .conditions
            .iter()
            .filter(|c| !c.satisfied)
            .map(|c| c.label)
            .collect();
        assert!(failed.contains(&'f'));
    }

    #[test]
    fn templates_must_be_unary() {
        assert!(check_lfiu(&bd2(), &f("#q"), &f("!##p"), &Budget::default()).is_err());
        assert!(check_lfiu(&bd(), &f("#p"), &f("!##p"), &Budget::default()).is_err());
    }
}
