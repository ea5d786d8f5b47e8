use serde_json::json;

use crate::budget::Budget;
use crate::lattice::TruthValue;

use super::{Assignment, FoFormula, FolError, Signature, Structure4};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_size: usize,
    /// Enumerate interpretations of function symbols as well.
    pub include_functions: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            max_size: 3,
            include_functions: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoOutcome {
    /// No countermodel among structures of size at most the bound. This is
    /// not a proof of consequence.
    NoCountermodelUpTo(usize),
    Countermodel {
        structure: Structure4,
        assignment: Assignment,
    },
}

impl FoOutcome {
    pub fn refuted(&self) -> bool {
        matches!(self, FoOutcome::Countermodel { .. })
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FoOutcome::NoCountermodelUpTo(k) => json!({
                "refuted": false,
                "no_countermodel_up_to": k,
                "countermodel": null,
            }),
            FoOutcome::Countermodel {
                structure,
                assignment,
            } => json!({
                "refuted": true,
                "countermodel": structure.with_assignment(assignment),
            }),
        }
    }
}

#[derive(Clone, Debug)]
enum Slot {
    Predicate { name: String, arity: usize },
    Function { name: String, arity: usize },
    Constant(String),
}

/// Lays out the interpretation digits of a signature at one domain size.
#[derive(Clone, Debug)]
struct Layout {
    size: usize,
    slots: Vec<Slot>,
    /// Per digit: number of values it ranges over.
    radices: Vec<usize>,
}

impl Layout {
    fn new(sig: &Signature, size: usize, include_functions: bool) -> Result<Self, FolError> {
        if !include_functions && !sig.functions().is_empty() {
            return Err(FolError::FunctionsExcluded);
        }
        let mut slots = Vec::new();
        let mut radices = Vec::new();
        for (p, &n) in sig.predicates() {
            slots.push(Slot::Predicate {
                name: p.clone(),
                arity: n,
            });
            radices.extend(std::iter::repeat_n(4, size.pow(n as u32)));
        }
        for (g, &n) in sig.functions() {
            slots.push(Slot::Function {
                name: g.clone(),
                arity: n,
            });
            radices.extend(std::iter::repeat_n(size, size.pow(n as u32)));
        }
        for c in sig.constants() {
            slots.push(Slot::Constant(c.clone()));
            radices.push(size);
        }
        Ok(Self {
            size,
            slots,
            radices,
        })
    }

    fn count(&self) -> u128 {
        self.radices
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }

    fn build(&self, digits: &[usize]) -> Structure4 {
        let mut m = Structure4::new(self.size).expect("positive size");
        let mut pos = 0;
        for slot in &self.slots {
            match slot {
                Slot::Predicate { name, arity } => {
                    let len = self.size.pow(*arity as u32);
                    let values = digits[pos..pos + len]
                        .iter()
                        .map(|&d| TruthValue::from_index(d).expect("digit below 4"))
                        .collect();
                    m.set_predicate(name, *arity, values)
                        .expect("table length matches");
                    pos += len;
                }
                Slot::Function { name, arity } => {
                    let len = self.size.pow(*arity as u32);
                    m.set_function(name, *arity, digits[pos..pos + len].to_vec())
                        .expect("table length matches");
                    pos += len;
                }
                Slot::Constant(c) => {
                    m.set_constant(c, digits[pos]).expect("digit below size");
                    pos += 1;
                }
            }
        }
        m
    }
}

/// Iterates all structures of one size; tables vary in lexicographic order
/// with the last digit fastest, values ordered 1, b, n, 0.
pub struct Structures {
    layout: Layout,
    digits: Option<Vec<usize>>,
}

impl Iterator for Structures {
    type Item = Structure4;

    fn next(&mut self) -> Option<Structure4> {
        let digits = self.digits.as_mut()?;
        let out = self.layout.build(digits);
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.layout.radices[i] {
                break;
            }
            digits[i] = 0;
        }
        Some(out)
    }
}

pub fn structures(
    sig: &Signature,
    size: usize,
    include_functions: bool,
) -> Result<Structures, FolError> {
    if size == 0 {
        return Err(FolError::EmptyDomain);
    }
    let layout = Layout::new(sig, size, include_functions)?;
    let digits = vec![0; layout.radices.len()];
    Ok(Structures {
        layout,
        digits: Some(digits),
    })
}

pub fn count_structures(
    sig: &Signature,
    size: usize,
    include_functions: bool,
) -> Result<u128, FolError> {
    Ok(Layout::new(sig, size, include_functions)?.count())
}

/// Searches structures of size `1..=max_size` for a model of every premise
/// in which some assignment falsifies `psi`.
pub fn fo_consequence_bounded(
    gamma: &[FoFormula],
    psi: &FoFormula,
    sig: &Signature,
    options: SearchOptions,
    budget: &Budget,
) -> Result<FoOutcome, FolError> {
    for f in gamma.iter().chain([psi]) {
        f.check_signature(sig)?;
    }
    let mut total: u128 = 0;
    for size in 1..=options.max_size {
        total = total.saturating_add(count_structures(sig, size, options.include_functions)?);
    }
    budget.check_structures(total)?;
    for size in 1..=options.max_size {
        for (k, m) in structures(sig, size, options.include_functions)?.enumerate() {
            if k % 1024 == 1023 {
                budget.check_time()?;
            }
            let mut is_model = true;
            for g in gamma {
                if !m.is_model(g)? {
                    is_model = false;
                    break;
                }
            }
            if !is_model {
                continue;
            }
            if let Some(assignment) = m.refuting_assignment(psi)? {
                return Ok(FoOutcome::Countermodel {
                    structure: m,
                    assignment,
                });
            }
        }
    }
    Ok(FoOutcome::NoCountermodelUpTo(options.max_size))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::BudgetError;
    use crate::fol::parse_fo;

    fn unary() -> Signature {
        Signature::parse("pred P/1; const c").unwrap()
    }

    fn fo(s: &str) -> FoFormula {
        parse_fo(s, &unary()).unwrap()
    }

    #[test]
    fn enumeration_size_and_order() {
        let sig = unary();
        assert_eq!(count_structures(&sig, 3, false).unwrap(), 64 * 3);
        let all: Vec<Structure4> = structures(&sig, 2, false).unwrap().collect();
        assert_eq!(all.len(), 16 * 2);
        assert_eq!(all[0].predicate_value("P", &[1]).unwrap(), TruthValue::One);
        assert_eq!(all[2].predicate_value("P", &[1]).unwrap(), TruthValue::B);
        assert_eq!(all[2].predicate_value("P", &[0]).unwrap(), TruthValue::One);
    }

    #[test]
    fn excluded_middle_fails_at_size_one() {
        let sig = Signature::parse("pred P/1").unwrap();
        let phi = parse_fo("P(x) | !P(x)", &sig).unwrap();
        let out = fo_consequence_bounded(
            &[],
            &phi,
            &sig,
            SearchOptions::default(),
            &Budget::default(),
        )
        .unwrap();
        let FoOutcome::Countermodel {
            structure,
            assignment,
        } = out
        else {
            panic!("expected a countermodel");
        };
        assert_eq!(structure.domain_size(), 1);
        assert_eq!(structure.predicate_value("P", &[0]).unwrap(), TruthValue::N);
        assert_eq!(assignment["x"], 0);
    }

    #[test]
    fn instantiation_axioms_survive() {
        let b = Budget::default();
        for s in ["forall x. P(x) -> P(c)", "!P(c) -> !forall x. P(x)"] {
            let out = fo_consequence_bounded(&[], &fo(s), &unary(), SearchOptions::default(), &b)
                .unwrap();
            assert_eq!(out, FoOutcome::NoCountermodelUpTo(3), "{s}");
        }
    }

    #[test]
    fn premises_are_global() {
        let b = Budget::default();
        let out = fo_consequence_bounded(
            &[fo("P(x)")],
            &fo("forall x. P(x)"),
            &unary(),
            SearchOptions::default(),
            &b,
        )
        .unwrap();
        assert!(!out.refuted());
        let out = fo_consequence_bounded(
            &[fo("P(c)")],
            &fo("P(x)"),
            &unary(),
            SearchOptions::default(),
            &b,
        )
        .unwrap();
        assert!(out.refuted());
        let json = out.to_json();
        assert_eq!(json["refuted"], true);
        assert_eq!(json["countermodel"]["domain_size"], 2);
    }

    #[test]
    fn functions_need_opt_in() {
        let sig = Signature::parse("pred P/1; fun f/1").unwrap();
        let phi = parse_fo("P(f(x)) -> P(x)", &sig).unwrap();
        let err = fo_consequence_bounded(
            &[],
            &phi,
            &sig,
            SearchOptions::default(),
            &Budget::default(),
        )
        .unwrap_err();
        assert_eq!(err, FolError::FunctionsExcluded);
        let opts = SearchOptions {
            max_size: 2,
            include_functions: true,
        };
        assert!(
            fo_consequence_bounded(&[], &phi, &sig, opts, &Budget::default())
                .unwrap()
                .refuted()
        );
    }

    #[test]
    fn structure_cap() {
        let sig = Signature::parse("pred Q/2").unwrap();
        let mut b = Budget::default();
        b.structure_cap = 1000;
        let phi = parse_fo("Q(x, y)", &sig).unwrap();
        let err =
            fo_consequence_bounded(&[], &phi, &sig, SearchOptions::default(), &b).unwrap_err();
        assert!(matches!(
            err,
            FolError::Budget(BudgetError::TooManyStructures { .. })
        ));
    }
}
