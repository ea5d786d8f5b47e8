//! Plain-text proof files.
//!
//! Each proof line reads `N. formula ; justification`, numbered from 1 with
//! no gaps. Justifications are `premise`, `ax NAME [A=..]..`, `mp I J`,
//! and for the first-order calculus also `axA x=v t=term phi=formula`,
//! `axB x=v phi=formula`, `axC x=v t=term phi=formula`, `all1 I x=v` and
//! `all2 I x=v`. Blank lines and lines starting with `//` are ignored.
//! First-order files may open with `pred`, `fun` and `const` declarations.

use crate::fol::{parse_fo, parse_term, FoFormula, Signature};
use crate::syntax::{parse, Bindings};

use super::{FoJustification, Justification, Line, Proof, ProofError, PropProof};

struct RawLine<'a> {
    number: usize,
    formula: &'a str,
    rule: &'a str,
    args: Vec<&'a str>,
    bindings: Vec<(&'a str, &'a str)>,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

/// Splits `all1 3 x=y` into the rule, positional arguments and `key=value`
/// pairs. A key is an identifier preceded by whitespace; its value runs up to
/// the next key.
fn split_justification(text: &str) -> (&str, Vec<&str>, Vec<(&str, &str)>) {
    let text = text.trim();
    let bytes = text.as_bytes();
    let mut keys = Vec::new();
    for (i, c) in text.char_indices() {
        if i > 0 && bytes[i - 1].is_ascii_whitespace() && is_ident_start(c) {
            let end = text[i..]
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .map_or(text.len(), |k| i + k);
            if text[end..].starts_with('=') {
                keys.push((i, end));
            }
        }
    }
    let head_end = keys.first().map_or(text.len(), |k| k.0);
    let mut head = text[..head_end].split_whitespace();
    let rule = head.next().unwrap_or("");
    let args = head.collect();
    let bindings = keys
        .iter()
        .enumerate()
        .map(|(n, &(start, end))| {
            let stop = keys.get(n + 1).map_or(text.len(), |k| k.0);
            (&text[start..end], text[end + 1..stop].trim())
        })
        .collect();
    (rule, args, bindings)
}

fn raw_lines(
    text: &str,
    mut header: impl FnMut(&str) -> Result<(), String>,
) -> Result<Vec<RawLine<'_>>, ProofError> {
    let mut out = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        let expected = out.len() + 1;
        let Some((number, rest)) = line
            .split_once('.')
            .filter(|(n, _)| n.trim().chars().all(|c| c.is_ascii_digit()) && !n.trim().is_empty())
        else {
            if out.is_empty() {
                header(line).map_err(|e| ProofError::new(0, e))?;
                continue;
            }
            return Err(ProofError::new(expected, format!("cannot read `{line}`")));
        };
        let number: usize = number
            .trim()
            .parse()
            .map_err(|_| ProofError::new(expected, "bad line number"))?;
        if number != expected {
            return Err(ProofError::new(
                expected,
                format!("line numbered {number}, expected {expected}"),
            ));
        }
        let (formula, justification) = rest
            .split_once(';')
            .ok_or_else(|| ProofError::new(number, "missing `;` before the justification"))?;
        let (rule, args, bindings) = split_justification(justification);
        out.push(RawLine {
            number,
            formula: formula.trim(),
            rule,
            args,
            bindings,
        });
    }
    Ok(out)
}

impl RawLine<'_> {
    fn err(&self, reason: impl Into<String>) -> ProofError {
        ProofError::new(self.number, reason)
    }

    fn index(&self, k: usize) -> Result<usize, ProofError> {
        let a = self
            .args
            .get(k)
            .ok_or_else(|| self.err(format!("`{}` needs a line reference", self.rule)))?;
        a.parse()
            .map_err(|_| self.err(format!("`{a}` is not a line number")))
    }

    fn arity(&self, n: usize) -> Result<(), ProofError> {
        if self.args.len() != n {
            return Err(self.err(format!("`{}` takes {n} line references", self.rule)));
        }
        Ok(())
    }

    fn binding(&self, key: &str) -> Result<&str, ProofError> {
        self.bindings
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| self.err(format!("`{}` needs {key}=..", self.rule)))
    }

    fn only_keys(&self, allowed: &[&str]) -> Result<(), ProofError> {
        match self.bindings.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(self.err(format!("unexpected binding {k}= for `{}`", self.rule))),
            None => Ok(()),
        }
    }

    fn axiom_parts<T>(
        &self,
        mut read: impl FnMut(&str) -> Result<T, String>,
    ) -> Result<(String, Bindings<T>), ProofError> {
        self.arity(1)?;
        let name = self.args[0].to_string();
        let mut bindings = Bindings::new();
        for (k, v) in &self.bindings {
            let value = read(v).map_err(|e| self.err(format!("binding {k}: {e}")))?;
            bindings.insert(k.to_string(), value);
        }
        Ok((name, bindings))
    }
}

fn collect_premises<T: Clone + PartialEq, J>(
    lines: Vec<Line<T, J>>,
    is_premise: impl Fn(&J) -> bool,
) -> Proof<T, J> {
    let mut premises = Vec::new();
    for l in &lines {
        if is_premise(&l.justification) && !premises.contains(&l.formula) {
            premises.push(l.formula.clone());
        }
    }
    Proof { premises, lines }
}

/// Reads a propositional proof; premises are the formulas on `premise` lines.
pub fn parse_prop_proof(text: &str) -> Result<PropProof, ProofError> {
    let raw = raw_lines(text, |h| Err(format!("unexpected header `{h}`")))?;
    let mut lines = Vec::new();
    for r in &raw {
        let formula = parse(r.formula).map_err(|e| r.err(format!("formula: {e}")))?;
        let justification = match r.rule {
            "premise" => {
                r.arity(0)?;
                r.only_keys(&[])?;
                Justification::Premise
            }
            "ax" => {
                let (name, bindings) = r.axiom_parts(|v| parse(v).map_err(|e| e.to_string()))?;
                Justification::Axiom { name, bindings }
            }
            "mp" => {
                r.arity(2)?;
                r.only_keys(&[])?;
                Justification::Mp(r.index(0)?, r.index(1)?)
            }
            other => return Err(r.err(format!("unknown rule `{other}`"))),
        };
        lines.push(Line {
            formula,
            justification,
        });
    }
    Ok(collect_premises(lines, |j| *j == Justification::Premise))
}

/// Reads a first-order proof. Declarations at the top of the file extend
/// `signature`.
pub fn parse_fo_proof(
    text: &str,
    signature: Option<&Signature>,
) -> Result<(Proof<FoFormula, FoJustification>, Signature), ProofError> {
    let mut sig = signature.cloned().unwrap_or_default();
    let raw = raw_lines(text, |h| {
        for decl in h.split(';').map(str::trim).filter(|d| !d.is_empty()) {
            sig.add_declaration(decl).map_err(|e| e.to_string())?;
        }
        Ok(())
    })?;
    let mut lines = Vec::new();
    for r in &raw {
        let fo = |s: &str| parse_fo(s, &sig).map_err(|e| r.err(format!("formula: {e}")));
        let var = |r: &RawLine<'_>| -> Result<String, ProofError> {
            let x = r.binding("x")?;
            if x.is_empty()
                || sig.declares(x)
                || !x.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(r.err(format!("`{x}` is not a variable")));
            }
            Ok(x.to_string())
        };
        let term = |r: &RawLine<'_>| {
            parse_term(r.binding("t")?, &sig).map_err(|e| r.err(format!("term: {e}")))
        };
        let formula = fo(r.formula)?;
        let justification = match r.rule {
            "premise" => {
                r.arity(0)?;
                r.only_keys(&[])?;
                FoJustification::Premise
            }
            "ax" => {
                let (name, bindings) =
                    r.axiom_parts(|v| parse_fo(v, &sig).map_err(|e| e.to_string()))?;
                FoJustification::Axiom { name, bindings }
            }
            "mp" => {
                r.arity(2)?;
                r.only_keys(&[])?;
                FoJustification::Mp(r.index(0)?, r.index(1)?)
            }
            "axA" | "axC" => {
                r.arity(0)?;
                r.only_keys(&["x", "t", "phi"])?;
                let (x, t, phi) = (var(r)?, term(r)?, fo(r.binding("phi")?)?);
                if r.rule == "axA" {
                    FoJustification::AxA { x, t, phi }
                } else {
                    FoJustification::AxC { x, t, phi }
                }
            }
            "axB" => {
                r.arity(0)?;
                r.only_keys(&["x", "phi"])?;
                FoJustification::AxB {
                    x: var(r)?,
                    phi: fo(r.binding("phi")?)?,
                }
            }
            "all1" | "all2" => {
                r.arity(1)?;
                r.only_keys(&["x"])?;
                let (i, x) = (r.index(0)?, var(r)?);
                if r.rule == "all1" {
                    FoJustification::AllIn1(i, x)
                } else {
                    FoJustification::AllIn2(i, x)
                }
            }
            other => return Err(r.err(format!("unknown rule `{other}`"))),
        };
        lines.push(Line {
            formula,
            justification,
        });
    }
    Ok((
        collect_premises(lines, |j| *j == FoJustification::Premise),
        sig,
    ))
}
