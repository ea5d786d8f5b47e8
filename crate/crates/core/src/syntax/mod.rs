//! Propositional formulas over `{∧, ∨, →, ¬, ⊙}`: AST, parser, printer,
//! uniform substitution, schema matching and expansion of derived connectives.

mod parser;
mod schema;

use std::collections::BTreeMap;
use std::convert::Infallible;
use std::fmt;
use std::str::FromStr;

pub(crate) use parser::{LeafSyntax, Parser, Token};
pub use parser::{ParseError, Tree};
pub use schema::{parse_schema_file, Bindings, Schema};

/// A propositional formula over the primitive signature.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Neg(Box<Formula>),
    Con(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// Surface syntax before derived connectives are expanded.
pub type SugaredFormula = Tree<String, Infallible>;

/// Borrowed view of the outermost connective of a formula-like tree.
#[derive(Clone, Copy, Debug)]
pub enum Node<'a, T> {
    Leaf,
    Neg(&'a T),
    Con(&'a T),
    And(&'a T, &'a T),
    Or(&'a T, &'a T),
    Imp(&'a T, &'a T),
    Forall(&'a str, &'a T),
}

/// Trees built from the propositional connectives.
///
/// Both propositional and first-order formulas implement this, which lets
/// schema matching, derived connectives and the proof-macro library work
/// over either object language.
pub trait Compound: Clone + Eq + fmt::Debug + Sized {
    fn node(&self) -> Node<'_, Self>;
    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn neg(a: Self) -> Self;
    fn con(a: Self) -> Self;
    fn and(a: Self, b: Self) -> Self;
    fn or(a: Self, b: Self) -> Self;
    fn imp(a: Self, b: Self) -> Self;

    /// Splits `a → b` into its parts.
    fn as_imp(&self) -> Option<(&Self, &Self)> {
        match self.node() {
            Node::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

/// `∼x := ⊙x ∧ ¬(x ∧ ⊙x)`
pub fn strong_neg<T: Compound>(x: T) -> T {
    T::and(T::con(x.clone()), T::neg(T::and(x.clone(), T::con(x))))
}

/// `☆x := ⊙⊙x`
pub fn white_star<T: Compound>(x: T) -> T {
    T::con(T::con(x))
}

/// `★x := ¬⊙⊙x`
pub fn black_star<T: Compound>(x: T) -> T {
    T::neg(white_star(x))
}

/// `∘x := ⊙x ∧ ☆x`
pub fn classicality<T: Compound>(x: T) -> T {
    T::and(T::con(x.clone()), white_star(x))
}

/// `x ↔ y := (x → y) ∧ (y → x)`
pub fn iff<T: Compound>(a: T, b: T) -> T {
    T::and(T::imp(a.clone(), b.clone()), T::imp(b, a))
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        parse(text)
    }

    /// Distinct atoms in left-to-right order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            Formula::Neg(a) | Formula::Con(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Simultaneous uniform substitution; unmapped atoms are left alone.
    pub fn substitute_props(&self, sigma: &BTreeMap<String, Formula>) -> Formula {
        match self {
            Formula::Atom(a) => sigma.get(a).cloned().unwrap_or_else(|| self.clone()),
            Formula::Neg(a) => Formula::Neg(Box::new(a.substitute_props(sigma))),
            Formula::Con(a) => Formula::Con(Box::new(a.substitute_props(sigma))),
            Formula::And(a, b) => Formula::And(
                Box::new(a.substitute_props(sigma)),
                Box::new(b.substitute_props(sigma)),
            ),
            Formula::Or(a, b) => Formula::Or(
                Box::new(a.substitute_props(sigma)),
                Box::new(b.substitute_props(sigma)),
            ),
            Formula::Imp(a, b) => Formula::Imp(
                Box::new(a.substitute_props(sigma)),
                Box::new(b.substitute_props(sigma)),
            ),
        }
    }

    /// Nesting depth of connectives; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Neg(a) | Formula::Con(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}

impl Compound for Formula {
    fn node(&self) -> Node<'_, Self> {
        match self {
            Formula::Atom(_) => Node::Leaf,
            Formula::Neg(a) => Node::Neg(a),
            Formula::Con(a) => Node::Con(a),
            Formula::And(a, b) => Node::And(a, b),
            Formula::Or(a, b) => Node::Or(a, b),
            Formula::Imp(a, b) => Node::Imp(a, b),
        }
    }

    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => f.write_str(a),
            _ => unreachable!("fmt_leaf called on a compound formula"),
        }
    }

    fn neg(a: Self) -> Self {
        Formula::Neg(Box::new(a))
    }
    fn con(a: Self) -> Self {
        Formula::Con(Box::new(a))
    }
    fn and(a: Self, b: Self) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }
    fn or(a: Self, b: Self) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }
    fn imp(a: Self, b: Self) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }
}

fn precedence<T: Compound>(t: &T) -> u8 {
    match t.node() {
        Node::Leaf => 5,
        Node::Neg(_) | Node::Con(_) | Node::Forall(..) => 4,
        Node::And(..) => 3,
        Node::Or(..) => 2,
        Node::Imp(..) => 1,
    }
}

fn write_at<T: Compound>(t: &T, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(t) < min {
        f.write_str("(")?;
        write_compound(t, f)?;
        f.write_str(")")
    } else {
        write_compound(t, f)
    }
}

/// Prints with the fewest parentheses the parser needs to rebuild the tree.
pub(crate) fn write_compound<T: Compound>(t: &T, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match t.node() {
        Node::Leaf => t.fmt_leaf(f),
        Node::Neg(a) => {
            f.write_str("!")?;
            write_at(a, 4, f)
        }
        Node::Con(a) => {
            f.write_str("#")?;
            write_at(a, 4, f)
        }
        Node::Forall(x, a) => {
            write!(f, "forall {x}. ")?;
            write_at(a, 4, f)
        }
        Node::And(a, b) => {
            write_at(a, 3, f)?;
            f.write_str(" & ")?;
            write_at(b, 4, f)
        }
        Node::Or(a, b) => {
            write_at(a, 2, f)?;
            f.write_str(" | ")?;
            write_at(b, 3, f)
        }
        Node::Imp(a, b) => {
            write_at(a, 2, f)?;
            f.write_str(" -> ")?;
            write_at(b, 1, f)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_compound(self, f)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

struct ObjectAtoms;

impl LeafSyntax for ObjectAtoms {
    type Leaf = String;
    type Var = Infallible;

    fn leaf(&self, p: &mut Parser<'_>) -> Result<String, ParseError> {
        let (name, pos) = p.expect_ident()?;
        if !name.starts_with(|c: char| c.is_ascii_lowercase()) {
            return Err(ParseError::new(
                pos,
                format!("atom `{name}` must start with a lowercase letter"),
            ));
        }
        Ok(name)
    }

    fn variable(&self, _name: String, pos: usize) -> Result<Infallible, ParseError> {
        Err(ParseError::new(
            pos,
            "quantifiers are not allowed in propositional formulas",
        ))
    }
}

/// Parses surface syntax without expanding derived connectives.
pub fn parse_sugared(text: &str) -> Result<SugaredFormula, ParseError> {
    Parser::new(text)?.parse_all(&ObjectAtoms)
}

/// Parses and expands derived connectives.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    Ok(expand_derived(&parse_sugared(text)?))
}

/// Replaces `∼ ∘ ★ ☆ ↔` by their definitions over the primitive connectives.
pub fn expand_derived(s: &SugaredFormula) -> Formula {
    s.expand_with(
        &|a: &String| Formula::Atom(a.clone()),
        &|_, v, _| match *v {},
    )
}

impl From<&Formula> for SugaredFormula {
    fn from(f: &Formula) -> Self {
        match f {
            Formula::Atom(a) => Tree::Leaf(a.clone()),
            Formula::Neg(a) => Tree::Neg(Box::new(a.as_ref().into())),
            Formula::Con(a) => Tree::Con(Box::new(a.as_ref().into())),
            Formula::And(a, b) => {
                Tree::And(Box::new(a.as_ref().into()), Box::new(b.as_ref().into()))
            }
            Formula::Or(a, b) => Tree::Or(Box::new(a.as_ref().into()), Box::new(b.as_ref().into())),
            Formula::Imp(a, b) => {
                Tree::Imp(Box::new(a.as_ref().into()), Box::new(b.as_ref().into()))
            }
        }
    }
}

/// Splits a comma-separated list at top-level commas (commas inside
/// parentheses belong to term argument lists).
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    parts
}

/// Every formula over `atoms` of depth at most `max_depth`, shallower
/// formulas first.
pub fn enumerate_formulas(atoms: &[&str], max_depth: usize) -> Vec<Formula> {
    let mut all: Vec<Formula> = atoms.iter().map(|a| Formula::atom(*a)).collect();
    let mut previous = 0;
    for _ in 0..max_depth {
        let below = all.clone();
        let frontier = &below[previous..];
        let mut next = Vec::new();
        for a in frontier {
            next.push(Formula::Neg(Box::new(a.clone())));
            next.push(Formula::Con(Box::new(a.clone())));
        }
        for (i, a) in below.iter().enumerate() {
            for (j, b) in below.iter().enumerate() {
                if i < previous && j < previous {
                    continue;
                }
                next.push(Formula::And(Box::new(a.clone()), Box::new(b.clone())));
                next.push(Formula::Or(Box::new(a.clone()), Box::new(b.clone())));
                next.push(Formula::Imp(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
        previous = below.len();
        all.extend(next);
    }
    all
}
