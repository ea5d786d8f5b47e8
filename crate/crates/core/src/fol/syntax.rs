use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::syntax::{Compound, LeafSyntax, Node, ParseError, Parser, Token};

use super::FolError;

/// Predicate, function and constant symbols with their arities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    predicates: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
    constants: BTreeSet<String>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    fn check_fresh(&self, name: &str) -> Result<(), FolError> {
        let valid = name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(FolError::Signature(format!(
                "`{name}` is not a valid symbol name"
            )));
        }
        if self.declares(name) {
            return Err(FolError::Signature(format!("`{name}` is declared twice")));
        }
        Ok(())
    }

    pub fn declares(&self, name: &str) -> bool {
        self.predicates.contains_key(name)
            || self.functions.contains_key(name)
            || self.constants.contains(name)
    }

    pub fn add_predicate(&mut self, name: &str, arity: usize) -> Result<(), FolError> {
        self.check_fresh(name)?;
        self.predicates.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<(), FolError> {
        self.check_fresh(name)?;
        if arity == 0 {
            return Err(FolError::Signature(format!(
                "function `{name}` needs arity at least 1"
            )));
        }
        self.functions.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_constant(&mut self, name: &str) -> Result<(), FolError> {
        self.check_fresh(name)?;
        self.constants.insert(name.to_string());
        Ok(())
    }

    pub fn with_predicate(mut self, name: &str, arity: usize) -> Result<Self, FolError> {
        self.add_predicate(name, arity)?;
        Ok(self)
    }

    pub fn with_constant(mut self, name: &str) -> Result<Self, FolError> {
        self.add_constant(name)?;
        Ok(self)
    }

    pub fn with_function(mut self, name: &str, arity: usize) -> Result<Self, FolError> {
        self.add_function(name, arity)?;
        Ok(self)
    }

    pub fn predicates(&self) -> &BTreeMap<String, usize> {
        &self.predicates
    }

    pub fn functions(&self) -> &BTreeMap<String, usize> {
        &self.functions
    }

    pub fn constants(&self) -> &BTreeSet<String> {
        &self.constants
    }

    pub fn predicate_arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn function_arity(&self, name: &str) -> Option<usize> {
        self.functions.get(name).copied()
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    /// Reads declarations `pred P/2`, `fun f/1`, `const c`, separated by
    /// newlines, `;` or `,`. Lines starting with `//` are comments.
    pub fn parse(text: &str) -> Result<Signature, FolError> {
        let mut sig = Signature::new();
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with("//") {
                continue;
            }
            for decl in line
                .split([';', ','])
                .map(str::trim)
                .filter(|d| !d.is_empty())
            {
                sig.add_declaration(decl)?;
            }
        }
        Ok(sig)
    }

    /// Adds a single `pred P/n`, `fun f/n` or `const c` declaration.
    pub fn add_declaration(&mut self, decl: &str) -> Result<(), FolError> {
        let bad = || FolError::Signature(format!("cannot read declaration `{decl}`"));
        let (kind, rest) = decl.split_once(char::is_whitespace).ok_or_else(bad)?;
        let rest = rest.trim();
        let with_arity = || -> Result<(&str, usize), FolError> {
            let (name, arity) = rest.split_once('/').ok_or_else(bad)?;
            Ok((name.trim(), arity.trim().parse().map_err(|_| bad())?))
        };
        match kind {
            "pred" => {
                let (name, arity) = with_arity()?;
                self.add_predicate(name, arity)
            }
            "fun" => {
                let (name, arity) = with_arity()?;
                self.add_function(name, arity)
            }
            "const" => self.add_constant(rest),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (p, n) in &self.predicates {
            parts.push(format!("pred {p}/{n}"));
        }
        for (g, n) in &self.functions {
            parts.push(format!("fun {g}/{n}"));
        }
        for c in &self.constants {
            parts.push(format!("const {c}"));
        }
        f.write_str(&parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(x: &str) -> Term {
        Term::Var(x.to_string())
    }

    pub fn constant(c: &str) -> Term {
        Term::Const(c.to_string())
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    fn first_vars(&self, out: &mut Vec<String>, bound: &[String]) {
        match self {
            Term::Var(x) => {
                if !bound.contains(x) && !out.contains(x) {
                    out.push(x.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(_, args) => args.iter().for_each(|a| a.first_vars(out, bound)),
        }
    }

    pub fn contains_var(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => x == y,
            Term::Const(_) => false,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(x)),
        }
    }

    pub fn substitute(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => t.clone(),
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::App(g, args) => {
                Term::App(g.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Const(x) => f.write_str(x),
            Term::App(g, args) => {
                write!(f, "{g}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// First-order formulas; `∃x φ` is represented as `¬∀x¬φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FoFormula {
    Pred(String, Vec<Term>),
    Neg(Box<FoFormula>),
    Con(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Imp(Box<FoFormula>, Box<FoFormula>),
    Forall(String, Box<FoFormula>),
}

impl Compound for FoFormula {
    fn node(&self) -> Node<'_, Self> {
        match self {
            FoFormula::Pred(..) => Node::Leaf,
            FoFormula::Neg(a) => Node::Neg(a),
            FoFormula::Con(a) => Node::Con(a),
            FoFormula::And(a, b) => Node::And(a, b),
            FoFormula::Or(a, b) => Node::Or(a, b),
            FoFormula::Imp(a, b) => Node::Imp(a, b),
            FoFormula::Forall(x, a) => Node::Forall(x, a),
        }
    }

    fn fmt_leaf(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoFormula::Pred(p, args) if args.is_empty() => f.write_str(p),
            FoFormula::Pred(p, args) => write!(f, "{}", Term::App(p.clone(), args.clone())),
            _ => unreachable!("fmt_leaf called on a compound formula"),
        }
    }

    fn neg(a: Self) -> Self {
        FoFormula::Neg(Box::new(a))
    }
    fn con(a: Self) -> Self {
        FoFormula::Con(Box::new(a))
    }
    fn and(a: Self, b: Self) -> Self {
        FoFormula::And(Box::new(a), Box::new(b))
    }
    fn or(a: Self, b: Self) -> Self {
        FoFormula::Or(Box::new(a), Box::new(b))
    }
    fn imp(a: Self, b: Self) -> Self {
        FoFormula::Imp(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::syntax::write_compound(self, f)
    }
}

impl FoFormula {
    pub fn pred(p: &str, args: Vec<Term>) -> FoFormula {
        FoFormula::Pred(p.to_string(), args)
    }

    pub fn forall(x: &str, body: FoFormula) -> FoFormula {
        FoFormula::Forall(x.to_string(), Box::new(body))
    }

    /// `∃x φ := ¬∀x¬φ`
    pub fn exists(x: &str, body: FoFormula) -> FoFormula {
        FoFormula::neg(FoFormula::forall(x, FoFormula::neg(body)))
    }

    /// Free variables in order of first free occurrence.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match self {
            FoFormula::Pred(_, args) => args.iter().for_each(|a| a.first_vars(out, bound)),
            FoFormula::Neg(a) | FoFormula::Con(a) => a.collect_free(bound, out),
            FoFormula::And(a, b) | FoFormula::Or(a, b) | FoFormula::Imp(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FoFormula::Forall(x, a) => {
                bound.push(x.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        self.free_vars().iter().any(|v| v == x)
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// `∀x1 … ∀xn φ` over the free variables in order of first occurrence.
    pub fn universal_closure(&self) -> FoFormula {
        self.free_vars()
            .iter()
            .rev()
            .fold(self.clone(), |body, x| FoFormula::forall(x, body))
    }

    /// No variable of `t` is captured at a free occurrence of `x`.
    pub fn free_for(&self, t: &Term, x: &str) -> bool {
        let tvars = t.variables();
        self.free_for_under(&tvars, x, &mut Vec::new())
    }

    fn free_for_under(&self, tvars: &BTreeSet<String>, x: &str, bound: &mut Vec<String>) -> bool {
        match self {
            FoFormula::Pred(_, args) => {
                !args.iter().any(|a| a.contains_var(x)) || !bound.iter().any(|b| tvars.contains(b))
            }
            FoFormula::Neg(a) | FoFormula::Con(a) => a.free_for_under(tvars, x, bound),
            FoFormula::And(a, b) | FoFormula::Or(a, b) | FoFormula::Imp(a, b) => {
                a.free_for_under(tvars, x, bound) && b.free_for_under(tvars, x, bound)
            }
            FoFormula::Forall(y, a) => {
                if y == x {
                    return true;
                }
                bound.push(y.clone());
                let ok = a.free_for_under(tvars, x, bound);
                bound.pop();
                ok
            }
        }
    }

    /// `φ[x/t]`: replaces the free occurrences of `x`. Refuses capture.
    pub fn substitute(&self, x: &str, t: &Term) -> Result<FoFormula, FolError> {
        if !self.free_for(t, x) {
            return Err(FolError::NotFreeFor {
                term: t.to_string(),
                var: x.to_string(),
                formula: self.to_string(),
            });
        }
        Ok(self.substitute_unchecked(x, t))
    }

    fn substitute_unchecked(&self, x: &str, t: &Term) -> FoFormula {
        let go = |a: &FoFormula| Box::new(a.substitute_unchecked(x, t));
        match self {
            FoFormula::Pred(p, args) => {
                FoFormula::Pred(p.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            FoFormula::Neg(a) => FoFormula::Neg(go(a)),
            FoFormula::Con(a) => FoFormula::Con(go(a)),
            FoFormula::And(a, b) => FoFormula::And(go(a), go(b)),
            FoFormula::Or(a, b) => FoFormula::Or(go(a), go(b)),
            FoFormula::Imp(a, b) => FoFormula::Imp(go(a), go(b)),
            FoFormula::Forall(y, _) if y == x => self.clone(),
            FoFormula::Forall(y, a) => FoFormula::Forall(y.clone(), go(a)),
        }
    }

    /// Checks every symbol against `sig`.
    pub fn check_signature(&self, sig: &Signature) -> Result<(), FolError> {
        match self {
            FoFormula::Pred(p, args) => {
                let arity = sig
                    .predicate_arity(p)
                    .ok_or_else(|| FolError::UnknownSymbol(p.clone()))?;
                if arity != args.len() {
                    return Err(FolError::Arity {
                        symbol: p.clone(),
                        expected: arity,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| check_term(a, sig))
            }
            FoFormula::Neg(a) | FoFormula::Con(a) | FoFormula::Forall(_, a) => {
                a.check_signature(sig)
            }
            FoFormula::And(a, b) | FoFormula::Or(a, b) | FoFormula::Imp(a, b) => {
                a.check_signature(sig)?;
                b.check_signature(sig)
            }
        }
    }
}

fn check_term(t: &Term, sig: &Signature) -> Result<(), FolError> {
    match t {
        Term::Var(x) if sig.declares(x) => Err(FolError::Signature(format!(
            "`{x}` is declared and cannot be a variable"
        ))),
        Term::Var(_) => Ok(()),
        Term::Const(c) if sig.is_constant(c) => Ok(()),
        Term::Const(c) => Err(FolError::UnknownSymbol(c.clone())),
        Term::App(g, args) => {
            let arity = sig
                .function_arity(g)
                .ok_or_else(|| FolError::UnknownSymbol(g.clone()))?;
            if arity != args.len() {
                return Err(FolError::Arity {
                    symbol: g.clone(),
                    expected: arity,
                    found: args.len(),
                });
            }
            args.iter().try_for_each(|a| check_term(a, sig))
        }
    }
}

struct SigLeaves<'s> {
    sig: &'s Signature,
}

fn parse_args(p: &mut Parser<'_>, sig: &Signature) -> Result<Vec<Term>, ParseError> {
    p.expect(Token::LParen)?;
    let mut args = vec![parse_term_at(p, sig)?];
    while *p.peek() == Token::Comma {
        p.advance();
        args.push(parse_term_at(p, sig)?);
    }
    p.expect(Token::RParen)?;
    Ok(args)
}

fn arity_error(name: &str, pos: usize, expected: usize, found: usize) -> ParseError {
    ParseError::new(
        pos,
        format!("`{name}` takes {expected} arguments, found {found}"),
    )
}

fn parse_term_at(p: &mut Parser<'_>, sig: &Signature) -> Result<Term, ParseError> {
    let (name, pos) = p.expect_ident()?;
    if let Some(arity) = sig.function_arity(&name) {
        let args = parse_args(p, sig)?;
        if args.len() != arity {
            return Err(arity_error(&name, pos, arity, args.len()));
        }
        return Ok(Term::App(name, args));
    }
    if sig.is_constant(&name) {
        return Ok(Term::Const(name));
    }
    if sig.predicate_arity(&name).is_some() {
        return Err(ParseError::new(
            pos,
            format!("predicate `{name}` used as a term"),
        ));
    }
    if *p.peek() == Token::LParen {
        return Err(ParseError::new(pos, format!("unknown function `{name}`")));
    }
    Ok(Term::Var(name))
}

impl LeafSyntax for SigLeaves<'_> {
    type Leaf = FoFormula;
    type Var = String;

    fn leaf(&self, p: &mut Parser<'_>) -> Result<FoFormula, ParseError> {
        let (name, pos) = p.expect_ident()?;
        let arity = self
            .sig
            .predicate_arity(&name)
            .ok_or_else(|| ParseError::new(pos, format!("unknown predicate `{name}`")))?;
        let args = if *p.peek() == Token::LParen {
            parse_args(p, self.sig)?
        } else {
            Vec::new()
        };
        if args.len() != arity {
            return Err(arity_error(&name, pos, arity, args.len()));
        }
        Ok(FoFormula::Pred(name, args))
    }

    fn variable(&self, name: String, pos: usize) -> Result<String, ParseError> {
        if self.sig.declares(&name) {
            return Err(ParseError::new(
                pos,
                format!("`{name}` is a declared symbol, not a variable"),
            ));
        }
        Ok(name)
    }
}

/// Parses a first-order formula; identifiers in term position that the
/// signature does not declare are variables.
pub fn parse_fo(text: &str, sig: &Signature) -> Result<FoFormula, ParseError> {
    let tree = Parser::new(text)?.parse_all(&SigLeaves { sig })?;
    Ok(
        tree.expand_with(&|a: &FoFormula| a.clone(), &|forall, x: &String, body| {
            if forall {
                FoFormula::forall(x, body)
            } else {
                FoFormula::exists(x, body)
            }
        }),
    )
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = parse_term_at(&mut p, sig)?;
    if *p.peek() != Token::Eof {
        return Err(p.unexpected("end of term"));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::parse("pred P/1; pred Q/2; pred R/0\nfun f/1\nconst c, const d").unwrap()
    }

    fn fo(s: &str) -> FoFormula {
        parse_fo(s, &sig()).unwrap()
    }

    fn t(s: &str) -> Term {
        parse_term(s, &sig()).unwrap()
    }

    #[test]
    fn signature_declarations() {
        let s = sig();
        assert_eq!(s.predicate_arity("Q"), Some(2));
        assert_eq!(s.function_arity("f"), Some(1));
        assert!(s.is_constant("d"));
        assert!(Signature::parse("pred P/1; const P").is_err());
        assert!(Signature::parse("fun g/0").is_err());
        assert!(Signature::parse("relation P/1").is_err());
        assert_eq!(Signature::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn parses_terms_and_atoms() {
        assert_eq!(t("f(c)"), Term::App("f".into(), vec![Term::constant("c")]));
        assert_eq!(t("x"), Term::var("x"));
        assert_eq!(
            fo("Q(x, f(c))"),
            FoFormula::pred("Q", vec![Term::var("x"), t("f(c)")])
        );
        assert_eq!(fo("R"), FoFormula::pred("R", vec![]));
        assert!(parse_fo("P(x, y)", &sig()).is_err());
        assert!(parse_fo("S(x)", &sig()).is_err());
        assert!(parse_fo("P(g(x))", &sig()).is_err());
        assert!(parse_fo("forall c. P(c)", &sig()).is_err());
    }

    #[test]
    fn quantifier_scope_is_prefix() {
        let f = fo("forall x. P(x) -> P(c)");
        assert!(matches!(f, FoFormula::Imp(..)));
        let g = fo("forall x. (P(x) -> P(c))");
        assert!(matches!(g, FoFormula::Forall(..)));
        assert_eq!(fo("exists x. P(x)"), fo("!forall x. !P(x)"));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "forall x. P(x) -> P(c)",
            "forall x. (P(x) -> P(c))",
            "!forall x. !!P(x)",
            "Q(x, f(f(y))) & #R | forall y. Q(y, x)",
            "exists x. (P(x) & snot(P(x)))",
        ] {
            let f = fo(s);
            assert_eq!(fo(&f.to_string()), f, "{s}");
        }
    }

    #[test]
    fn free_variables() {
        assert_eq!(fo("forall x. Q(x, y)").free_vars(), vec!["y"]);
        assert_eq!(fo("Q(y, x) & P(y)").free_vars(), vec!["y", "x"]);
        assert!(fo("forall x. P(x)").is_sentence());
    }

    #[test]
    fn closure() {
        let s = fo("forall x. P(x)");
        assert_eq!(s.universal_closure(), s);
        assert_eq!(
            fo("Q(x, y)").universal_closure(),
            fo("forall x. forall y. Q(x, y)")
        );
    }

    #[test]
    fn free_for_examples() {
        let f = fo("forall y. Q(x, y)");
        assert!(f.free_for(&t("c"), "x"));
        assert!(!f.free_for(&t("y"), "x"));
        assert!(!f.free_for(&t("f(y)"), "x"));
        assert!(f.free_for(&t("x"), "x"));
        assert!(!fo("forall x. Q(x, y)").free_for(&t("x"), "y"));
        assert!(fo("forall y. P(y)").free_for(&t("y"), "x"));
    }

    #[test]
    fn substitution() {
        let f = fo("forall x. P(x) -> P(x)");
        assert_eq!(
            f.substitute("x", &t("c")).unwrap(),
            fo("forall x. P(x) -> P(c)")
        );
        assert_eq!(f.substitute("x", &t("x")).unwrap(), f);
        let err = fo("forall y. Q(x, y)")
            .substitute("x", &t("y"))
            .unwrap_err();
        assert!(matches!(err, FolError::NotFreeFor { .. }));
    }

    #[test]
    fn signature_check() {
        assert!(fo("Q(x, f(c))").check_signature(&sig()).is_ok());
        let other = Signature::new().with_predicate("P", 2).unwrap();
        assert!(fo("P(x)").check_signature(&other).is_err());
    }
}
