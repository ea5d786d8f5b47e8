use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::lattice::{bound4, BoundKind, TruthValue};

use super::{FoFormula, FolError, Signature, Term};

/// Variable assignment into domain indices.
pub type Assignment = BTreeMap<String, usize>;

/// Display name of a domain element: `a1`, `a2`, ...
pub fn element_name(i: usize) -> String {
    format!("a{}", i + 1)
}

/// Inverse of [`element_name`].
pub fn parse_element(name: &str) -> Option<usize> {
    let k: usize = name.strip_prefix('a')?.parse().ok()?;
    k.checked_sub(1)
}

fn tuple_index(args: &[usize], size: usize) -> usize {
    args.iter().fold(0, |acc, &a| acc * size + a)
}

fn tuple_name(index: usize, arity: usize, size: usize) -> String {
    let mut digits = vec![0; arity];
    let mut rest = index;
    for d in digits.iter_mut().rev() {
        *d = rest % size;
        rest /= size;
    }
    let names: Vec<String> = digits.into_iter().map(element_name).collect();
    format!("({})", names.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Table<V> {
    arity: usize,
    values: Vec<V>,
}

/// A first-order structure whose predicates take values in the four-element
/// lattice. Domain elements are `0..domain_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure4 {
    domain_size: usize,
    predicates: BTreeMap<String, Table<TruthValue>>,
    functions: BTreeMap<String, Table<usize>>,
    constants: BTreeMap<String, usize>,
}

impl Structure4 {
    pub fn new(domain_size: usize) -> Result<Self, FolError> {
        if domain_size == 0 {
            return Err(FolError::EmptyDomain);
        }
        Ok(Self {
            domain_size,
            predicates: BTreeMap::new(),
            functions: BTreeMap::new(),
            constants: BTreeMap::new(),
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    fn check_element(&self, a: usize) -> Result<(), FolError> {
        if a >= self.domain_size {
            return Err(FolError::NotInDomain {
                element: a,
                size: self.domain_size,
            });
        }
        Ok(())
    }

    /// Sets the whole table of `name`; entries follow tuple order with the
    /// first argument most significant.
    pub fn set_predicate(
        &mut self,
        name: &str,
        arity: usize,
        values: Vec<TruthValue>,
    ) -> Result<(), FolError> {
        let expected = self.domain_size.pow(arity as u32);
        if values.len() != expected {
            return Err(FolError::Arity {
                symbol: name.to_string(),
                expected,
                found: values.len(),
            });
        }
        self.predicates
            .insert(name.to_string(), Table { arity, values });
        Ok(())
    }

    pub fn set_predicate_value(
        &mut self,
        name: &str,
        args: &[usize],
        value: TruthValue,
    ) -> Result<(), FolError> {
        for &a in args {
            self.check_element(a)?;
        }
        let size = self.domain_size;
        let table = self
            .predicates
            .get_mut(name)
            .ok_or_else(|| FolError::UnknownSymbol(name.to_string()))?;
        if table.arity != args.len() {
            return Err(FolError::Arity {
                symbol: name.to_string(),
                expected: table.arity,
                found: args.len(),
            });
        }
        table.values[tuple_index(args, size)] = value;
        Ok(())
    }

    pub fn set_function(
        &mut self,
        name: &str,
        arity: usize,
        values: Vec<usize>,
    ) -> Result<(), FolError> {
        let expected = self.domain_size.pow(arity as u32);
        if values.len() != expected {
            return Err(FolError::Arity {
                symbol: name.to_string(),
                expected,
                found: values.len(),
            });
        }
        for &v in &values {
            self.check_element(v)?;
        }
        self.functions
            .insert(name.to_string(), Table { arity, values });
        Ok(())
    }

    pub fn set_constant(&mut self, name: &str, element: usize) -> Result<(), FolError> {
        self.check_element(element)?;
        self.constants.insert(name.to_string(), element);
        Ok(())
    }

    pub fn predicate_value(&self, name: &str, args: &[usize]) -> Result<TruthValue, FolError> {
        let table = self
            .predicates
            .get(name)
            .ok_or_else(|| FolError::UnknownSymbol(name.to_string()))?;
        if table.arity != args.len() {
            return Err(FolError::Arity {
                symbol: name.to_string(),
                expected: table.arity,
                found: args.len(),
            });
        }
        Ok(table.values[tuple_index(args, self.domain_size)])
    }

    /// Whether every symbol of `sig` is interpreted.
    pub fn interprets(&self, sig: &Signature) -> bool {
        sig.predicates()
            .iter()
            .all(|(p, &n)| self.predicates.get(p).is_some_and(|t| t.arity == n))
            && sig
                .functions()
                .iter()
                .all(|(g, &n)| self.functions.get(g).is_some_and(|t| t.arity == n))
            && sig
                .constants()
                .iter()
                .all(|c| self.constants.contains_key(c))
    }

    pub fn eval_term(&self, t: &Term, s: &Assignment) -> Result<usize, FolError> {
        match t {
            Term::Var(x) => s
                .get(x)
                .copied()
                .ok_or_else(|| FolError::Unassigned(x.clone())),
            Term::Const(c) => self
                .constants
                .get(c)
                .copied()
                .ok_or_else(|| FolError::UnknownSymbol(c.clone())),
            Term::App(g, args) => {
                let table = self
                    .functions
                    .get(g)
                    .ok_or_else(|| FolError::UnknownSymbol(g.clone()))?;
                if table.arity != args.len() {
                    return Err(FolError::Arity {
                        symbol: g.clone(),
                        expected: table.arity,
                        found: args.len(),
                    });
                }
                let vals: Vec<usize> = args
                    .iter()
                    .map(|a| self.eval_term(a, s))
                    .collect::<Result<_, _>>()?;
                Ok(table.values[tuple_index(&vals, self.domain_size)])
            }
        }
    }

    /// Value of `φ` under `s`; `∀` is the infimum over all updates of `s`.
    pub fn eval_formula(&self, phi: &FoFormula, s: &Assignment) -> Result<TruthValue, FolError> {
        let mut s = s.clone();
        self.eval_in(phi, &mut s)
    }

    fn eval_in(&self, phi: &FoFormula, s: &mut Assignment) -> Result<TruthValue, FolError> {
        Ok(match phi {
            FoFormula::Pred(p, args) => {
                let vals: Vec<usize> = args
                    .iter()
                    .map(|a| self.eval_term(a, s))
                    .collect::<Result<_, _>>()?;
                self.predicate_value(p, &vals)?
            }
            FoFormula::Neg(a) => self.eval_in(a, s)?.neg(),
            FoFormula::Con(a) => self.eval_in(a, s)?.weak_consistency(),
            FoFormula::And(a, b) => self.eval_in(a, s)?.meet(self.eval_in(b, s)?),
            FoFormula::Or(a, b) => self.eval_in(a, s)?.join(self.eval_in(b, s)?),
            FoFormula::Imp(a, b) => self.eval_in(a, s)?.imp(self.eval_in(b, s)?),
            FoFormula::Forall(x, a) => {
                let saved = s.get(x).copied();
                let mut values = Vec::with_capacity(self.domain_size);
                for e in 0..self.domain_size {
                    s.insert(x.clone(), e);
                    values.push(self.eval_in(a, s)?);
                }
                match saved {
                    Some(v) => s.insert(x.clone(), v),
                    None => s.remove(x),
                };
                bound4(BoundKind::Inf, values).expect("domain is nonempty")
            }
        })
    }

    pub fn satisfies(&self, phi: &FoFormula, s: &Assignment) -> Result<bool, FolError> {
        Ok(self.eval_formula(phi, s)?.is_designated())
    }

    /// First assignment to the free variables of `phi` (in lexicographic
    /// order) that does not satisfy it.
    pub fn refuting_assignment(&self, phi: &FoFormula) -> Result<Option<Assignment>, FolError> {
        let vars = phi.free_vars();
        for s in assignments(&vars, self.domain_size) {
            if !self.satisfies(phi, &s)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Every assignment satisfies `phi`.
    pub fn is_model(&self, phi: &FoFormula) -> Result<bool, FolError> {
        Ok(self.refuting_assignment(phi)?.is_none())
    }

    /// Serializable view with an assignment attached.
    pub fn with_assignment<'a>(&'a self, s: &'a Assignment) -> Countermodel<'a> {
        Countermodel {
            structure: self,
            assignment: s,
        }
    }
}

/// All assignments of `vars` into a domain of `size`, first variable most
/// significant.
pub fn assignments(vars: &[String], size: usize) -> impl Iterator<Item = Assignment> + '_ {
    crate::matrix::Valuations::new(vars.len(), size)
        .map(move |vals| vars.iter().cloned().zip(vals).collect())
}

struct Tables<'a, V> {
    tables: &'a BTreeMap<String, Table<V>>,
    size: usize,
    show: fn(&V) -> String,
}

impl<V> Serialize for Tables<'_, V> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.tables.len()))?;
        for (name, table) in self.tables {
            let entries: BTreeMap<String, String> = table
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| (tuple_name(i, table.arity, self.size), (self.show)(v)))
                .collect();
            map.serialize_entry(name, &entries)?;
        }
        map.end()
    }
}

impl Serialize for Structure4 {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(None)?;
        self.serialize_fields(&mut map)?;
        map.end()
    }
}

impl Structure4 {
    fn serialize_fields<M: SerializeMap>(&self, map: &mut M) -> Result<(), M::Error> {
        map.serialize_entry("domain_size", &self.domain_size)?;
        map.serialize_entry(
            "predicates",
            &Tables {
                tables: &self.predicates,
                size: self.domain_size,
                show: |v: &TruthValue| v.name().to_string(),
            },
        )?;
        if !self.functions.is_empty() {
            map.serialize_entry(
                "functions",
                &Tables {
                    tables: &self.functions,
                    size: self.domain_size,
                    show: |v: &usize| element_name(*v),
                },
            )?;
        }
        if !self.constants.is_empty() {
            let constants: BTreeMap<&str, String> = self
                .constants
                .iter()
                .map(|(c, &e)| (c.as_str(), element_name(e)))
                .collect();
            map.serialize_entry("constants", &constants)?;
        }
        Ok(())
    }
}

fn structure_error(msg: impl Into<String>) -> FolError {
    FolError::Structure(msg.into())
}

fn read_table<V>(
    entries: Option<&serde_json::Value>,
    name: &str,
    arity: usize,
    size: usize,
    read: impl Fn(&str) -> Option<V>,
) -> Result<Vec<V>, FolError> {
    let entries = entries
        .and_then(|e| e.get(name))
        .and_then(|e| e.as_object())
        .ok_or_else(|| structure_error(format!("no table for `{name}`")))?;
    let count = size.pow(arity as u32);
    if entries.len() != count {
        return Err(structure_error(format!(
            "`{name}` needs {count} entries, found {}",
            entries.len()
        )));
    }
    (0..count)
        .map(|i| {
            let key = tuple_name(i, arity, size);
            let raw = entries
                .get(&key)
                .and_then(|v| v.as_str())
                .ok_or_else(|| structure_error(format!("`{name}` has no entry {key}")))?;
            read(raw).ok_or_else(|| {
                structure_error(format!("`{name}{key}` has unreadable value `{raw}`"))
            })
        })
        .collect()
}

impl Structure4 {
    /// Reads the JSON shape produced by serialization, interpreting exactly
    /// the symbols of `sig`. An `assignment` field, if present, is ignored.
    pub fn from_json(value: &serde_json::Value, sig: &Signature) -> Result<Structure4, FolError> {
        let size = value
            .get("domain_size")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| structure_error("missing `domain_size`"))? as usize;
        let mut m = Structure4::new(size)?;
        for (p, &n) in sig.predicates() {
            let values = read_table(value.get("predicates"), p, n, size, |v| {
                v.parse::<TruthValue>().ok()
            })?;
            m.set_predicate(p, n, values)?;
        }
        let element = |v: &str| parse_element(v).filter(|&e| e < size);
        for (g, &n) in sig.functions() {
            let values = read_table(value.get("functions"), g, n, size, element)?;
            m.set_function(g, n, values)?;
        }
        for c in sig.constants() {
            let raw = value
                .get("constants")
                .and_then(|e| e.get(c))
                .and_then(|v| v.as_str())
                .ok_or_else(|| structure_error(format!("no value for constant `{c}`")))?;
            let e = element(raw)
                .ok_or_else(|| structure_error(format!("`{raw}` is not an element")))?;
            m.set_constant(c, e)?;
        }
        Ok(m)
    }
}

/// A structure together with the assignment under which it refutes a formula.
pub struct Countermodel<'a> {
    pub structure: &'a Structure4,
    pub assignment: &'a Assignment,
}

impl Serialize for Countermodel<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(None)?;
        self.structure.serialize_fields(&mut map)?;
        let assignment: BTreeMap<&str, String> = self
            .assignment
            .iter()
            .map(|(x, &e)| (x.as_str(), element_name(e)))
            .collect();
        map.serialize_entry("assignment", &assignment)?;
        map.end()
    }
}
