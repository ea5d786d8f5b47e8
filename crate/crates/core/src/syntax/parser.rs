use std::fmt;

use thiserror::Error;

use super::{black_star, classicality, iff, strong_neg, white_star, Compound};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Bang,
    Hash,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Dot => f.write_str("`.`"),
            Token::Bang => f.write_str("`!`"),
            Token::Hash => f.write_str("`#`"),
            Token::Amp => f.write_str("`&`"),
            Token::Pipe => f.write_str("`|`"),
            Token::Arrow => f.write_str("`->`"),
            Token::DArrow => f.write_str("`<->`"),
            Token::Eof => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            '.' => Token::Dot,
            '!' => Token::Bang,
            '#' => Token::Hash,
            '&' => Token::Amp,
            '|' => Token::Pipe,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Token::Arrow
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Token::DArrow
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(ParseError::new(start, format!("unknown token `{other}`"))),
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::Eof, chars.len()));
    Ok(out)
}

/// Surface syntax tree: primitive connectives, derived connectives and
/// quantifiers, over leaves `L` and bound variables `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree<L, V> {
    Leaf(L),
    Neg(Box<Tree<L, V>>),
    Con(Box<Tree<L, V>>),
    And(Box<Tree<L, V>>, Box<Tree<L, V>>),
    Or(Box<Tree<L, V>>, Box<Tree<L, V>>),
    Imp(Box<Tree<L, V>>, Box<Tree<L, V>>),
    Iff(Box<Tree<L, V>>, Box<Tree<L, V>>),
    StrongNeg(Box<Tree<L, V>>),
    Classicality(Box<Tree<L, V>>),
    BlackStar(Box<Tree<L, V>>),
    WhiteStar(Box<Tree<L, V>>),
    Forall(V, Box<Tree<L, V>>),
    Exists(V, Box<Tree<L, V>>),
}

impl<L, V> Tree<L, V> {
    /// Rebuilds the tree over `T`, expanding every derived connective.
    /// `quant(true, x, body)` builds `∀x body`; `quant(false, ..)` builds `∃`.
    pub(crate) fn expand_with<T, FL, FQ>(&self, leaf: &FL, quant: &FQ) -> T
    where
        T: Compound,
        FL: Fn(&L) -> T,
        FQ: Fn(bool, &V, T) -> T,
    {
        let go = |t: &Tree<L, V>| t.expand_with(leaf, quant);
        match self {
            Tree::Leaf(l) => leaf(l),
            Tree::Neg(a) => T::neg(go(a)),
            Tree::Con(a) => T::con(go(a)),
            Tree::And(a, b) => T::and(go(a), go(b)),
            Tree::Or(a, b) => T::or(go(a), go(b)),
            Tree::Imp(a, b) => T::imp(go(a), go(b)),
            Tree::Iff(a, b) => iff(go(a), go(b)),
            Tree::StrongNeg(a) => strong_neg(go(a)),
            Tree::Classicality(a) => classicality(go(a)),
            Tree::BlackStar(a) => black_star(go(a)),
            Tree::WhiteStar(a) => white_star(go(a)),
            Tree::Forall(x, a) => quant(true, x, go(a)),
            Tree::Exists(x, a) => quant(false, x, go(a)),
        }
    }
}

/// How leaves and bound variables are read for one object language.
pub(crate) trait LeafSyntax {
    type Leaf;
    type Var;

    fn leaf(&self, p: &mut Parser<'_>) -> Result<Self::Leaf, ParseError>;
    fn variable(&self, name: String, pos: usize) -> Result<Self::Var, ParseError>;
}

pub(crate) struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    _text: &'a str,
}

const SUGAR_KEYWORDS: [&str; 4] = ["snot", "cls", "star", "wstar"];

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Self {
            tokens: tokenize(text)?,
            cursor: 0,
            _text: text,
        })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    pub(crate) fn peek_at(&self, ahead: usize) -> &Token {
        let i = (self.cursor + ahead).min(self.tokens.len() - 1);
        &self.tokens[i].0
    }

    pub(crate) fn position(&self) -> usize {
        self.tokens[self.cursor].1
    }

    pub(crate) fn advance(&mut self) -> (Token, usize) {
        let t = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    pub(crate) fn expect(&mut self, tok: Token) -> Result<usize, ParseError> {
        if *self.peek() == tok {
            Ok(self.advance().1)
        } else {
            Err(self.unexpected(&format!("{tok}")))
        }
    }

    pub(crate) fn expect_ident(&mut self) -> Result<(String, usize), ParseError> {
        match self.peek().clone() {
            Token::Ident(name) => {
                let pos = self.advance().1;
                Ok((name, pos))
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            self.position(),
            format!("expected {wanted}, found {}", self.peek()),
        )
    }

    pub(crate) fn parse_all<S: LeafSyntax>(
        mut self,
        syn: &S,
    ) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        let t = self.parse_iff(syn)?;
        if *self.peek() != Token::Eof {
            return Err(self.unexpected("a connective or end of input"));
        }
        Ok(t)
    }

    fn parse_iff<S: LeafSyntax>(&mut self, syn: &S) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        let lhs = self.parse_imp(syn)?;
        if *self.peek() == Token::DArrow {
            self.advance();
            let rhs = self.parse_iff(syn)?;
            return Ok(Tree::Iff(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn parse_imp<S: LeafSyntax>(&mut self, syn: &S) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        let lhs = self.parse_or(syn)?;
        if *self.peek() == Token::Arrow {
            self.advance();
            let rhs = self.parse_imp(syn)?;
            return Ok(Tree::Imp(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn parse_or<S: LeafSyntax>(&mut self, syn: &S) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        let mut lhs = self.parse_and(syn)?;
        while *self.peek() == Token::Pipe {
            self.advance();
            let rhs = self.parse_and(syn)?;
            lhs = Tree::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_and<S: LeafSyntax>(&mut self, syn: &S) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        let mut lhs = self.parse_unary(syn)?;
        while *self.peek() == Token::Amp {
            self.advance();
            let rhs = self.parse_unary(syn)?;
            lhs = Tree::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn parse_unary<S: LeafSyntax>(&mut self, syn: &S) -> Result<Tree<S::Leaf, S::Var>, ParseError> {
        match self.peek().clone() {
            Token::Bang => {
                self.advance();
                Ok(Tree::Neg(Box::new(self.parse_unary(syn)?)))
            }
            Token::Hash => {
                self.advance();
                Ok(Tree::Con(Box::new(self.parse_unary(syn)?)))
            }
            Token::LParen => {
                self.advance();
                let inner = self.parse_iff(syn)?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name)
                if SUGAR_KEYWORDS.contains(&name.as_str()) && *self.peek_at(1) == Token::LParen =>
            {
                self.advance();
                self.advance();
                let inner = Box::new(self.parse_iff(syn)?);
                self.expect(Token::RParen)?;
                Ok(match name.as_str() {
                    "snot" => Tree::StrongNeg(inner),
                    "cls" => Tree::Classicality(inner),
                    "star" => Tree::BlackStar(inner),
                    _ => Tree::WhiteStar(inner),
                })
            }
            Token::Ident(name) if name == "forall" || name == "exists" => {
                let kw_pos = self.advance().1;
                let (var, pos) = self.expect_ident().map_err(|e| {
                    ParseError::new(
                        e.position,
                        format!("`{name}` at position {kw_pos} needs a variable"),
                    )
                })?;
                let var = syn.variable(var, pos)?;
                self.expect(Token::Dot)?;
                let body = Box::new(self.parse_unary(syn)?);
                Ok(if name == "forall" {
                    Tree::Forall(var, body)
                } else {
                    Tree::Exists(var, body)
                })
            }
            Token::Ident(_) => Ok(Tree::Leaf(syn.leaf(self)?)),
            _ => Err(self.unexpected("a formula")),
        }
    }
}
