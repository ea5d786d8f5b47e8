//! Finite logical matrices: evaluation, consequence by exhaustive valuation
//! enumeration, and the checks built on top of it.

mod builtin;
mod dat;
mod lfiu;
mod maximality;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::budget::{Budget, BudgetError};
use crate::syntax::Formula;

pub use builtin::{bd, bd2, bs4, builtin, cpl, lfi1, BUILTIN_NAMES};
pub use dat::{dat_cpl, dat_lfi1, DatResult};
pub use lfiu::{check_lfiu, LfiuCondition, LfiuReport};
pub use maximality::{check_maximality_conditions, CheckResult, MaximalityReport};

/// The connectives a matrix may interpret.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connective {
    Neg,
    Con,
    And,
    Or,
    Imp,
}

impl Connective {
    pub const ALL: [Connective; 5] = [
        Connective::Neg,
        Connective::Con,
        Connective::And,
        Connective::Or,
        Connective::Imp,
    ];

    pub fn arity(self) -> usize {
        match self {
            Connective::Neg | Connective::Con => 1,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Neg => "!",
            Connective::Con => "#",
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Imp => "->",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Connective::Neg => "neg",
            Connective::Con => "con",
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Imp => "imp",
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix carrier must be nonempty")]
    EmptyCarrier,
    #[error("designated set must be a nonempty subset of the carrier")]
    BadDesignated,
    #[error("table for `{connective}` has {found} entries, expected {expected}")]
    TableSize {
        connective: Connective,
        expected: usize,
        found: usize,
    },
    #[error("table for `{connective}` maps into value index {value}, outside the carrier")]
    OutOfCarrier {
        connective: Connective,
        value: usize,
    },
    #[error("duplicate value name `{0}`")]
    DuplicateValue(String),
    #[error("unknown value `{value}` in matrix {matrix}")]
    UnknownValue { value: String, matrix: String },
    #[error("matrix {matrix} does not interpret `{connective}`")]
    Unsupported {
        connective: Connective,
        matrix: String,
    },
    #[error("no value assigned to atom `{0}`")]
    MissingAtom(String),
    #[error("values {values:?} are not closed under `{connective}`")]
    NotClosed {
        connective: Connective,
        values: Vec<String>,
    },
    #[error("formula `{formula}` must use only the atom `p`")]
    NotUnary { formula: String },
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

/// Assignment of carrier indices to atoms.
pub type Valuation = BTreeMap<String, usize>;

/// A finite algebra over (part of) the signature plus a designated set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicMatrix {
    name: String,
    values: Vec<String>,
    tables: BTreeMap<Connective, Vec<usize>>,
    extra_unary: BTreeMap<String, Vec<usize>>,
    designated: Vec<bool>,
}

pub struct MatrixBuilder {
    name: String,
    values: Vec<String>,
    tables: BTreeMap<Connective, Vec<usize>>,
    extra_unary: BTreeMap<String, Vec<usize>>,
    designated: Vec<usize>,
}

impl MatrixBuilder {
    pub fn table(mut self, c: Connective, table: Vec<usize>) -> Self {
        self.tables.insert(c, table);
        self
    }

    /// Fills the table for `c` from a function on carrier indices.
    pub fn unary_fn(self, c: Connective, f: impl Fn(usize) -> usize) -> Self {
        let n = self.values.len();
        self.table(c, (0..n).map(f).collect())
    }

    pub fn binary_fn(self, c: Connective, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = self.values.len();
        let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
        self.table(c, table)
    }

    /// An additional named unary operation kept alongside the signature tables.
    pub fn extra_unary(mut self, name: &str, table: Vec<usize>) -> Self {
        self.extra_unary.insert(name.to_string(), table);
        self
    }

    pub fn designated(mut self, designated: &[usize]) -> Self {
        self.designated = designated.to_vec();
        self
    }

    pub fn build(self) -> Result<LogicMatrix, MatrixError> {
        let n = self.values.len();
        if n == 0 {
            return Err(MatrixError::EmptyCarrier);
        }
        for (i, v) in self.values.iter().enumerate() {
            if self.values[..i].contains(v) {
                return Err(MatrixError::DuplicateValue(v.clone()));
            }
        }
        if self.designated.is_empty() || self.designated.iter().any(|&d| d >= n) {
            return Err(MatrixError::BadDesignated);
        }
        for (&c, table) in &self.tables {
            let expected = n.pow(c.arity() as u32);
            if table.len() != expected {
                return Err(MatrixError::TableSize {
                    connective: c,
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= n) {
                return Err(MatrixError::OutOfCarrier {
                    connective: c,
                    value,
                });
            }
        }
        for table in self.extra_unary.values() {
            if table.len() != n || table.iter().any(|&v| v >= n) {
                return Err(MatrixError::TableSize {
                    connective: Connective::Neg,
                    expected: n,
                    found: table.len(),
                });
            }
        }
        let mut designated = vec![false; n];
        for d in self.designated {
            designated[d] = true;
        }
        Ok(LogicMatrix {
            name: self.name,
            values: self.values,
            tables: self.tables,
            extra_unary: self.extra_unary,
            designated,
        })
    }
}

/// Either the consequence holds or the first countermodel in lexicographic
/// valuation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Countermodel(Valuation),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    pub fn countermodel(&self) -> Option<&Valuation> {
        match self {
            Outcome::Holds => None,
            Outcome::Countermodel(v) => Some(v),
        }
    }
}

/// JSON shape for consequence results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsequenceReport {
    pub holds: bool,
    pub countermodel: Option<BTreeMap<String, String>>,
    pub matrix: String,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Load(usize),
    Apply(Connective),
}

/// A formula flattened to postfix over a fixed atom ordering.
#[derive(Clone, Debug)]
pub struct Compiled {
    ops: Vec<Op>,
}

impl Compiled {
    pub fn new(f: &Formula, atoms: &[String]) -> Result<Self, MatrixError> {
        let mut ops = Vec::new();
        compile_into(f, atoms, &mut ops)?;
        Ok(Self { ops })
    }

    pub fn eval(&self, m: &LogicMatrix, values: &[usize]) -> Result<usize, MatrixError> {
        let mut stack: Vec<usize> = Vec::with_capacity(8);
        for op in &self.ops {
            match *op {
                Op::Load(i) => stack.push(values[i]),
                Op::Apply(c) if c.arity() == 1 => {
                    let a = stack.pop().expect("compiled stack underflow");
                    stack.push(m.apply_unary(c, a)?);
                }
                Op::Apply(c) => {
                    let b = stack.pop().expect("compiled stack underflow");
                    let a = stack.pop().expect("compiled stack underflow");
                    stack.push(m.apply_binary(c, a, b)?);
                }
            }
        }
        Ok(stack.pop().expect("empty compiled formula"))
    }
}

fn compile_into(f: &Formula, atoms: &[String], ops: &mut Vec<Op>) -> Result<(), MatrixError> {
    match f {
        Formula::Atom(a) => {
            let i = atoms
                .iter()
                .position(|x| x == a)
                .ok_or_else(|| MatrixError::MissingAtom(a.clone()))?;
            ops.push(Op::Load(i));
        }
        Formula::Neg(a) => {
            compile_into(a, atoms, ops)?;
            ops.push(Op::Apply(Connective::Neg));
        }
        Formula::Con(a) => {
            compile_into(a, atoms, ops)?;
            ops.push(Op::Apply(Connective::Con));
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            compile_into(a, atoms, ops)?;
            compile_into(b, atoms, ops)?;
            ops.push(Op::Apply(match f {
                Formula::And(..) => Connective::And,
                Formula::Or(..) => Connective::Or,
                _ => Connective::Imp,
            }));
        }
    }
    Ok(())
}

/// Iterates all assignments of `n` slots over `size` values, first slot most
/// significant (lexicographic order).
pub struct Valuations {
    size: usize,
    current: Option<Vec<usize>>,
}

impl Valuations {
    pub fn new(n: usize, size: usize) -> Self {
        Self {
            size,
            current: (size > 0).then(|| vec![0; n]),
        }
    }
}

impl Iterator for Valuations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.size {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

impl LogicMatrix {
    pub fn builder(name: &str, values: &[&str]) -> MatrixBuilder {
        MatrixBuilder {
            name: name.to_string(),
            values: values.iter().map(|s| s.to_string()).collect(),
            tables: BTreeMap::new(),
            extra_unary: BTreeMap::new(),
            designated: Vec::new(),
        }
    }

    pub(crate) fn builder_owned(name: String, values: Vec<String>) -> MatrixBuilder {
        MatrixBuilder {
            name,
            values,
            tables: BTreeMap::new(),
            extra_unary: BTreeMap::new(),
            designated: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn value_name(&self, i: usize) -> &str {
        &self.values[i]
    }

    pub fn value_index(&self, name: &str) -> Option<usize> {
        self.values.iter().position(|v| v == name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize, MatrixError> {
        self.value_index(name)
            .ok_or_else(|| MatrixError::UnknownValue {
                value: name.to_string(),
                matrix: self.name.clone(),
            })
    }

    pub fn is_designated(&self, i: usize) -> bool {
        self.designated[i]
    }

    pub fn designated_names(&self) -> Vec<&str> {
        (0..self.size())
            .filter(|&i| self.designated[i])
            .map(|i| self.value_name(i))
            .collect()
    }

    pub fn interprets(&self, c: Connective) -> bool {
        self.tables.contains_key(&c)
    }

    pub fn table(&self, c: Connective) -> Option<&[usize]> {
        self.tables.get(&c).map(Vec::as_slice)
    }

    pub fn extra_unary(&self, name: &str) -> Option<&[usize]> {
        self.extra_unary.get(name).map(Vec::as_slice)
    }

    fn table_or_err(&self, c: Connective) -> Result<&[usize], MatrixError> {
        self.table(c).ok_or_else(|| MatrixError::Unsupported {
            connective: c,
            matrix: self.name.clone(),
        })
    }

    pub fn apply_unary(&self, c: Connective, a: usize) -> Result<usize, MatrixError> {
        Ok(self.table_or_err(c)?[a])
    }

    pub fn apply_binary(&self, c: Connective, a: usize, b: usize) -> Result<usize, MatrixError> {
        Ok(self.table_or_err(c)?[a * self.size() + b])
    }

    /// Overwrites one table entry.
    pub fn set_entry(
        &mut self,
        c: Connective,
        args: &[usize],
        value: usize,
    ) -> Result<(), MatrixError> {
        let n = self.size();
        if args.len() != c.arity() || args.iter().chain([&value]).any(|&x| x >= n) {
            return Err(MatrixError::OutOfCarrier {
                connective: c,
                value,
            });
        }
        let idx = args.iter().fold(0, |acc, &a| acc * n + a);
        let name = self.name.clone();
        let table = self.tables.get_mut(&c).ok_or(MatrixError::Unsupported {
            connective: c,
            matrix: name,
        })?;
        table[idx] = value;
        Ok(())
    }

    /// The submatrix on `keep`, designated set `D ∩ keep`.
    pub fn restrict(&self, name: &str, keep: &[&str]) -> Result<LogicMatrix, MatrixError> {
        let idx: Vec<usize> = keep
            .iter()
            .map(|v| self.index_of(v))
            .collect::<Result<_, _>>()?;
        let local = |g: usize| idx.iter().position(|&x| x == g);
        let mut b = LogicMatrix::builder(name, keep);
        for &c in self.tables.keys() {
            let mut table = Vec::new();
            let not_closed = || MatrixError::NotClosed {
                connective: c,
                values: keep.iter().map(|s| s.to_string()).collect(),
            };
            if c.arity() == 1 {
                for &a in &idx {
                    table.push(local(self.apply_unary(c, a)?).ok_or_else(not_closed)?);
                }
            } else {
                for &a in &idx {
                    for &bb in &idx {
                        table.push(local(self.apply_binary(c, a, bb)?).ok_or_else(not_closed)?);
                    }
                }
            }
            b = b.table(c, table);
        }
        let designated: Vec<usize> = (0..idx.len())
            .filter(|&i| self.designated[idx[i]])
            .collect();
        b.designated(&designated).build()
    }

    /// Returns a copy with a different name and designated set.
    pub fn with_designated(
        &self,
        name: &str,
        designated: &[&str],
    ) -> Result<LogicMatrix, MatrixError> {
        let mut out = self.clone();
        out.name = name.to_string();
        let idx: Vec<usize> = designated
            .iter()
            .map(|v| self.index_of(v))
            .collect::<Result<_, _>>()?;
        if idx.is_empty() {
            return Err(MatrixError::BadDesignated);
        }
        out.designated = vec![false; self.size()];
        for i in idx {
            out.designated[i] = true;
        }
        Ok(out)
    }

    /// Homomorphic evaluation under `v`.
    pub fn eval(&self, f: &Formula, v: &Valuation) -> Result<usize, MatrixError> {
        Ok(match f {
            Formula::Atom(a) => {
                let x = *v
                    .get(a)
                    .ok_or_else(|| MatrixError::MissingAtom(a.clone()))?;
                if x >= self.size() {
                    return Err(MatrixError::UnknownValue {
                        value: x.to_string(),
                        matrix: self.name.clone(),
                    });
                }
                x
            }
            Formula::Neg(a) => self.apply_unary(Connective::Neg, self.eval(a, v)?)?,
            Formula::Con(a) => self.apply_unary(Connective::Con, self.eval(a, v)?)?,
            Formula::And(a, b) => {
                self.apply_binary(Connective::And, self.eval(a, v)?, self.eval(b, v)?)?
            }
            Formula::Or(a, b) => {
                self.apply_binary(Connective::Or, self.eval(a, v)?, self.eval(b, v)?)?
            }
            Formula::Imp(a, b) => {
                self.apply_binary(Connective::Imp, self.eval(a, v)?, self.eval(b, v)?)?
            }
        })
    }

    /// Evaluation with value names on both sides.
    pub fn eval_named(
        &self,
        f: &Formula,
        v: &BTreeMap<String, String>,
    ) -> Result<&str, MatrixError> {
        let mut idx = Valuation::new();
        for (atom, value) in v {
            idx.insert(atom.clone(), self.index_of(value)?);
        }
        Ok(self.value_name(self.eval(f, &idx)?))
    }

    /// Values of `f` under every valuation of `atoms`, in lexicographic order.
    pub fn truth_vector(&self, f: &Formula, atoms: &[String]) -> Result<Vec<usize>, MatrixError> {
        let compiled = Compiled::new(f, atoms)?;
        Valuations::new(atoms.len(), self.size())
            .map(|vals| compiled.eval(self, &vals))
            .collect()
    }

    /// Decides `gamma ⊨ psi` by enumerating all valuations of the atoms that occur.
    pub fn consequence(
        &self,
        gamma: &[Formula],
        psi: &Formula,
        budget: &Budget,
    ) -> Result<Outcome, MatrixError> {
        let atoms = atoms_of(gamma.iter().chain([psi]));
        budget.check_atoms(atoms.len())?;
        let premises: Vec<Compiled> = gamma
            .iter()
            .map(|g| Compiled::new(g, &atoms))
            .collect::<Result<_, _>>()?;
        let goal = Compiled::new(psi, &atoms)?;
        'vals: for (count, vals) in Valuations::new(atoms.len(), self.size()).enumerate() {
            if count % 4096 == 4095 {
                budget.check_time()?;
            }
            for p in &premises {
                if !self.designated[p.eval(self, &vals)?] {
                    continue 'vals;
                }
            }
            if !self.designated[goal.eval(self, &vals)?] {
                return Ok(Outcome::Countermodel(
                    atoms.iter().cloned().zip(vals).collect(),
                ));
            }
        }
        Ok(Outcome::Holds)
    }

    pub fn tautology(&self, f: &Formula, budget: &Budget) -> Result<Outcome, MatrixError> {
        self.consequence(&[], f, budget)
    }

    pub fn describe(&self, v: &Valuation) -> BTreeMap<String, String> {
        v.iter()
            .map(|(a, &x)| (a.clone(), self.value_name(x).to_string()))
            .collect()
    }

    pub fn report(&self, outcome: &Outcome) -> ConsequenceReport {
        ConsequenceReport {
            holds: outcome.holds(),
            countermodel: outcome.countermodel().map(|v| self.describe(v)),
            matrix: self.name.clone(),
        }
    }

    /// Carrier, designated values and every table, keyed by value names.
    pub fn to_json(&self) -> serde_json::Value {
        let mut tables = serde_json::Map::new();
        for (&c, table) in &self.tables {
            let entry = if c.arity() == 1 {
                let m: serde_json::Map<_, _> = (0..self.size())
                    .map(|a| (self.values[a].clone(), json!(self.values[table[a]])))
                    .collect();
                serde_json::Value::Object(m)
            } else {
                let n = self.size();
                let rows: serde_json::Map<_, _> = (0..n)
                    .map(|a| {
                        let row: serde_json::Map<_, _> = (0..n)
                            .map(|b| (self.values[b].clone(), json!(self.values[table[a * n + b]])))
                            .collect();
                        (self.values[a].clone(), serde_json::Value::Object(row))
                    })
                    .collect();
                serde_json::Value::Object(rows)
            };
            tables.insert(c.name().to_string(), entry);
        }
        json!({
            "name": self.name,
            "values": self.values,
            "designated": self.designated_names(),
            "tables": tables,
        })
    }
}

/// Distinct atoms of the formulas in first-occurrence order.
pub fn atoms_of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Vec<String> {
    let mut atoms: Vec<String> = Vec::new();
    for f in formulas {
        for a in f.variables() {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    }
    atoms
}
