use serde::Serialize;

use crate::syntax::Formula;

use super::{Connective, LogicMatrix, MatrixError, Valuation};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub passed: bool,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn from_failures(failures: Vec<String>) -> Self {
        Self {
            passed: failures.is_empty(),
            failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    /// Subalgebra, designated restriction and classical subalgebra.
    pub structure: CheckResult,
    /// Constant top and bottom formulas.
    pub constants: CheckResult,
    /// Every extra value is sent to every other non-classical value.
    pub transfer: CheckResult,
}

impl MaximalityReport {
    pub fn all_pass(&self) -> bool {
        self.structure.passed && self.constants.passed && self.transfer.passed
    }
}

fn unary(t: &Formula) -> Result<(), MatrixError> {
    if t.variables().iter().any(|a| a != "p") {
        return Err(MatrixError::NotUnary {
            formula: t.to_string(),
        });
    }
    Ok(())
}

fn at(m: &LogicMatrix, f: &Formula, value: usize) -> Result<usize, MatrixError> {
    let v: Valuation = [("p".to_string(), value)].into_iter().collect();
    m.eval(f, &v)
}

fn structure_failures(m1: &LogicMatrix, m2: &LogicMatrix) -> Vec<String> {
    let mut out = Vec::new();
    let embed: Vec<Option<usize>> = m2.values().iter().map(|v| m1.value_index(v)).collect();
    for (i, e) in embed.iter().enumerate() {
        if e.is_none() {
            out.push(format!(
                "value {} of {} is not in {}",
                m2.value_name(i),
                m2.name(),
                m1.name()
            ));
        }
    }
    if !out.is_empty() {
        return out;
    }
    let embed: Vec<usize> = embed.into_iter().flatten().collect();
    let n2 = m2.size();
    for c in Connective::ALL {
        match (m1.table(c), m2.table(c)) {
            (None, None) => continue,
            (Some(_), Some(_)) => {}
            _ => {
                out.push(format!("`{c}` is interpreted in only one of the matrices"));
                continue;
            }
        }
        let tuples: Vec<Vec<usize>> = if c.arity() == 1 {
            (0..n2).map(|a| vec![a]).collect()
        } else {
            (0..n2 * n2).map(|i| vec![i / n2, i % n2]).collect()
        };
        for args in tuples {
            let small = if c.arity() == 1 {
                m2.apply_unary(c, args[0])
            } else {
                m2.apply_binary(c, args[0], args[1])
            }
            .expect("table present");
            let big = if c.arity() == 1 {
                m1.apply_unary(c, embed[args[0]])
            } else {
                m1.apply_binary(c, embed[args[0]], embed[args[1]])
            }
            .expect("table present");
            if embed[small] != big {
                let names: Vec<&str> = args.iter().map(|&a| m2.value_name(a)).collect();
                out.push(format!(
                    "`{c}` on ({}) gives {} in {} but {} in {}",
                    names.join(", "),
                    m2.value_name(small),
                    m2.name(),
                    m1.value_name(big),
                    m1.name()
                ));
            }
        }
    }
    for i in 0..n2 {
        if m2.is_designated(i) != m1.is_designated(embed[i]) {
            out.push(format!(
                "designation of {} differs between the matrices",
                m2.value_name(i)
            ));
        }
    }
    match (
        m1.value_index("0"),
        m2.value_index("1"),
        m2.value_index("0"),
    ) {
        (Some(zero1), Some(one2), Some(_)) => {
            if m1.is_designated(zero1) {
                out.push(format!("0 is designated in {}", m1.name()));
            }
            if !m2.is_designated(one2) {
                out.push(format!("1 is not designated in {}", m2.name()));
            }
            if let Err(e) = m2.restrict("classical", &["0", "1"]) {
                out.push(format!(
                    "{{0, 1}} is not a subalgebra of {}: {e}",
                    m2.name()
                ));
            }
        }
        _ => out.push("both matrices must contain the values 0 and 1".to_string()),
    }
    out
}

/// Checks the sufficient conditions for the logic of `m1` to be maximal
/// relative to that of its submatrix `m2`. Failed conditions are reported,
/// not returned as errors; errors are reserved for malformed formulas.
pub fn check_maximality_conditions(
    m1: &LogicMatrix,
    m2: &LogicMatrix,
    top: &Formula,
    bot: &Formula,
    transfers: &[Formula],
) -> Result<MaximalityReport, MatrixError> {
    unary(top)?;
    unary(bot)?;
    for t in transfers {
        unary(t)?;
    }
    let structure = CheckResult::from_failures(structure_failures(m1, m2));

    let mut constants = Vec::new();
    for (f, want) in [(top, "1"), (bot, "0")] {
        for a in 0..m1.size() {
            let got = m1.value_name(at(m1, f, a)?);
            if got != want {
                constants.push(format!("{f} takes {got} at p = {}", m1.value_name(a)));
            }
        }
    }

    let mut transfer = Vec::new();
    let extras: Vec<usize> = (0..m1.size())
        .filter(|&i| m2.value_index(m1.value_name(i)).is_none())
        .collect();
    let targets: Vec<usize> = (0..m1.size())
        .filter(|&i| !matches!(m1.value_name(i), "0" | "1"))
        .collect();
    for &i in &extras {
        for &j in targets.iter().filter(|&&j| j != i) {
            let mut found = false;
            for t in transfers {
                if at(m1, t, i)? == j {
                    found = true;
                    break;
                }
            }
            if !found {
                transfer.push(format!(
                    "no transfer formula sends {} to {}",
                    m1.value_name(i),
                    m1.value_name(j)
                ));
            }
        }
    }

    Ok(MaximalityReport {
        structure,
        constants: CheckResult::from_failures(constants),
        transfer: CheckResult::from_failures(transfer),
    })
}
