use std::collections::BTreeMap;
use std::convert::Infallible;
use std::fmt;

use super::{Compound, Formula, LeafSyntax, Node, ParseError, Parser};

/// Metavariable bindings produced by [`Schema::match_formula`].
pub type Bindings<T> = BTreeMap<String, T>;

/// A formula whose atoms are metavariables (uppercase names such as `A`, `B`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pattern: Formula,
}

struct MetaAtoms;

impl LeafSyntax for MetaAtoms {
    type Leaf = String;
    type Var = Infallible;

    fn leaf(&self, p: &mut Parser<'_>) -> Result<String, ParseError> {
        let (name, pos) = p.expect_ident()?;
        if !name.starts_with(|c: char| c.is_ascii_uppercase()) {
            return Err(ParseError::new(
                pos,
                format!("metavariable `{name}` must start with an uppercase letter"),
            ));
        }
        Ok(name)
    }

    fn variable(&self, _name: String, pos: usize) -> Result<Infallible, ParseError> {
        Err(ParseError::new(
            pos,
            "quantifiers are not allowed in schemas",
        ))
    }
}

impl Schema {
    pub fn parse(text: &str) -> Result<Schema, ParseError> {
        let tree = Parser::new(text)?.parse_all(&MetaAtoms)?;
        let pattern = tree.expand_with(
            &|a: &String| Formula::Atom(a.clone()),
            &|_, v, _| match *v {},
        );
        Ok(Schema { pattern })
    }

    pub fn pattern(&self) -> &Formula {
        &self.pattern
    }

    pub fn metavariables(&self) -> Vec<String> {
        self.pattern.variables()
    }

    /// Structural match, left to right; the first inconsistent binding fails.
    pub fn match_formula<T: Compound>(&self, target: &T) -> Option<Bindings<T>> {
        let mut bindings = Bindings::new();
        match_into(&self.pattern, target, &mut bindings).then_some(bindings)
    }

    /// Substitutes the bindings for the metavariables.
    pub fn instantiate<T: Compound>(&self, bindings: &Bindings<T>) -> Result<T, String> {
        instantiate(&self.pattern, bindings)
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pattern.fmt(f)
    }
}

fn match_into<T: Compound>(pattern: &Formula, target: &T, bindings: &mut Bindings<T>) -> bool {
    match (pattern, target.node()) {
        (Formula::Atom(meta), _) => match bindings.get(meta) {
            Some(bound) => bound == target,
            None => {
                bindings.insert(meta.clone(), target.clone());
                true
            }
        },
        (Formula::Neg(p), Node::Neg(t)) | (Formula::Con(p), Node::Con(t)) => {
            match_into(p, t, bindings)
        }
        (Formula::And(p1, p2), Node::And(t1, t2))
        | (Formula::Or(p1, p2), Node::Or(t1, t2))
        | (Formula::Imp(p1, p2), Node::Imp(t1, t2)) => {
            match_into(p1, t1, bindings) && match_into(p2, t2, bindings)
        }
        _ => false,
    }
}

fn instantiate<T: Compound>(pattern: &Formula, bindings: &Bindings<T>) -> Result<T, String> {
    Ok(match pattern {
        Formula::Atom(meta) => bindings
            .get(meta)
            .cloned()
            .ok_or_else(|| format!("no binding for metavariable {meta}"))?,
        Formula::Neg(a) => T::neg(instantiate(a, bindings)?),
        Formula::Con(a) => T::con(instantiate(a, bindings)?),
        Formula::And(a, b) => T::and(instantiate(a, bindings)?, instantiate(b, bindings)?),
        Formula::Or(a, b) => T::or(instantiate(a, bindings)?, instantiate(b, bindings)?),
        Formula::Imp(a, b) => T::imp(instantiate(a, bindings)?, instantiate(b, bindings)?),
    })
}

/// Reads `NAME: schema` lines; blank lines and `//` comments are skipped.
pub fn parse_schema_file(text: &str) -> Result<Vec<(String, Schema)>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let (name, body) = line.split_once(':').ok_or_else(|| {
            ParseError::new(0, format!("line {}: expected `NAME: schema`", lineno + 1))
        })?;
        let schema = Schema::parse(body).map_err(|e| {
            ParseError::new(e.position, format!("line {}: {}", lineno + 1, e.message))
        })?;
        out.push((name.trim().to_string(), schema));
    }
    Ok(out)
}
