//! Command-line front end. Results go to standard output as JSON, or as
//! aligned text with `--pretty`. Exit status: 0 when the queried property
//! holds, 1 when it is refuted, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::budget::{Budget, DEFAULT_ATOM_CAP, DEFAULT_TWIST_ATOM_CAP};
use crate::fol::{
    fo_consequence_bounded, parse_element, parse_fo, Assignment, FoFormula, SearchOptions,
    Signature, Structure4,
};
use crate::hilbert::{
    check_proof_hbd2, check_proof_hqbd2, parse_fo_proof, parse_prop_proof, CheckReport,
};
use crate::lattice::FiniteBooleanAlgebra;
use crate::matrix::{
    atoms_of, builtin, check_lfiu, check_maximality_conditions, dat_cpl, dat_lfi1, LogicMatrix,
    Valuation, Valuations,
};
use crate::syntax::{parse, split_top_level, Formula};
use crate::twist::{build_twist, iso_check_twist2_bd2, twist_consequence};

#[derive(Parser, Debug)]
#[command(
    name = "bd2kit",
    version,
    about = "Four-valued matrices, twist structures, proofs and finite models"
)]
struct Cli {
    /// Render tables and countermodels as aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Largest number of distinct atoms an exhaustive check may enumerate.
    #[arg(long, global = true, value_name = "N")]
    atoms_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixName {
    Bd,
    Bs4,
    Bd2,
    Lfi1,
    Cpl,
}

impl MatrixName {
    fn load(self) -> LogicMatrix {
        let name = self.to_possible_value().expect("no skipped variants");
        builtin(name.get_name()).expect("every variant is built in")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DatTarget {
    Lfi1,
    Cpl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Calculus {
    Hbd2,
    Hqbd2,
}

#[derive(Args, Debug)]
struct MatrixArg {
    #[arg(long, value_enum, default_value = "bd2")]
    matrix: MatrixName,
}

#[derive(Args, Debug)]
struct Query {
    /// Comma-separated premises.
    #[arg(long, default_value = "")]
    premises: String,
    #[arg(long)]
    goal: String,
}

#[derive(Args, Debug)]
struct SignatureArg {
    /// Declarations such as "pred P/1; const c", or a file holding them.
    #[arg(long)]
    signature: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of a formula under a valuation, or its whole truth table.
    Eval {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        formula: String,
        /// Atom values such as `p=b`; repeatable or comma-separated.
        #[arg(long = "val")]
        vals: Vec<String>,
    },
    /// Whether a formula takes a designated value under every valuation.
    Taut {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        formula: String,
    },
    /// Whether the premises entail the goal; prints a countermodel if not.
    Conseq {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        query: Query,
    },
    /// The first countermodel to premises and goal in enumeration order.
    Countermodel {
        #[command(flatten)]
        matrix: MatrixArg,
        #[command(flatten)]
        query: Query,
    },
    /// Compares consequence in the target logic with guarded consequence in BD2.
    Dat {
        #[arg(long, value_enum)]
        target: DatTarget,
        #[command(flatten)]
        query: Query,
    },
    /// The six conditions for a logic of formal inconsistency and undeterminedness.
    LfiuCheck {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Consistency operator as a formula in `p`.
        #[arg(long)]
        consistency: Option<String>,
        /// Undeterminedness operator as a formula in `p`.
        #[arg(long)]
        undeterminedness: Option<String>,
    },
    /// Sufficient conditions for maximality relative to a submatrix.
    MaximalityCheck {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value = "lfi1")]
        sub: MatrixName,
        #[arg(long, default_value = "star(p) | wstar(p)")]
        top: String,
        #[arg(long, default_value = "p & !p & #p")]
        bottom: String,
        /// Repeatable.
        #[arg(long = "transfer", default_values_t = vec!["#p".to_string()])]
        transfers: Vec<String>,
    },
    /// Twist structures over finite Boolean algebras.
    #[command(subcommand)]
    Twist(TwistCommand),
    /// Checks a Hilbert proof file.
    CheckProof {
        #[arg(long, value_enum, default_value = "hbd2")]
        calculus: Calculus,
        /// Extra declarations for first-order proof files.
        #[arg(long)]
        signature: Option<String>,
        file: PathBuf,
    },
    /// Value of a first-order formula in a structure given as JSON.
    FoEval {
        #[command(flatten)]
        signature: SignatureArg,
        /// Structure JSON, inline or as a file path.
        #[arg(long)]
        structure: String,
        #[arg(long)]
        formula: String,
        /// Variable values such as `x=a1`; repeatable or comma-separated.
        #[arg(long = "assign")]
        assign: Vec<String>,
    },
    /// Bounded search for a first-order countermodel.
    FoCountermodel {
        #[command(flatten)]
        signature: SignatureArg,
        #[command(flatten)]
        query: Query,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Enumerate interpretations of function symbols too.
        #[arg(long)]
        include_functions: bool,
    },
    /// Universal closure of a first-order formula.
    Closure {
        #[command(flatten)]
        signature: SignatureArg,
        #[arg(long)]
        formula: String,
    },
}

#[derive(Subcommand, Debug)]
enum TwistCommand {
    /// Operation tables of the twist matrix.
    Build {
        #[arg(long, default_value_t = 1)]
        ba_atoms: u32,
    },
    /// Compares the two-element twist matrix with BD2.
    Verify,
    /// Consequence over the twist matrices of every algebra with 1..=N atoms.
    Conseq {
        #[arg(long, default_value_t = 2)]
        ba_atoms: u32,
        #[command(flatten)]
        query: Query,
    },
}

const MAX_BA_ATOMS: u32 = 3;

struct Verdict {
    code: i32,
    json: Value,
    text: Option<String>,
}

impl Verdict {
    fn new(ok: bool, json: Value) -> Self {
        Self {
            code: if ok { 0 } else { 1 },
            json,
            text: None,
        }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let shown = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{shown}")
            } else {
                write!(err, "{shown}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(v) => {
            let body = match (&v.text, cli.pretty) {
                (Some(text), true) => text.clone(),
                (None, true) => {
                    serde_json::to_string_pretty(&v.json).expect("json values serialize")
                }
                _ => v.json.to_string(),
            };
            let _ = writeln!(out, "{}", body.trim_end());
            v.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn formula(text: &str) -> Result<Formula> {
    parse(text).map_err(|e| anyhow!("cannot parse `{text}`: {e}"))
}

fn formulas(list: &str) -> Result<Vec<Formula>> {
    split_top_level(list).into_iter().map(formula).collect()
}

fn fo_formula(text: &str, sig: &Signature) -> Result<FoFormula> {
    parse_fo(text, sig).map_err(|e| anyhow!("cannot parse `{text}`: {e}"))
}

fn fo_formulas(list: &str, sig: &Signature) -> Result<Vec<FoFormula>> {
    split_top_level(list)
        .into_iter()
        .map(|t| fo_formula(t, sig))
        .collect()
}

/// Reads `text` from a file when it names one, otherwise uses it verbatim.
fn inline_or_file(text: &str) -> Result<String> {
    let path = Path::new(text);
    if !text.contains('\n') && path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {text}"));
    }
    Ok(text.to_string())
}

fn signature(text: &str) -> Result<Signature> {
    Ok(Signature::parse(&inline_or_file(text)?)?)
}

fn pairs(items: &[String]) -> Result<Vec<(String, String)>> {
    items
        .iter()
        .flat_map(|s| s.split(','))
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| anyhow!("expected name=value, found `{s}`"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn align(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn valuation_text(cm: &BTreeMap<String, String>) -> String {
    let rows: Vec<Vec<String>> = cm
        .iter()
        .map(|(a, v)| vec![format!("  {a}"), "=".into(), v.clone()])
        .collect();
    align(&rows)
}

fn consequence_verdict(
    m: &LogicMatrix,
    gamma: &[Formula],
    psi: &Formula,
    budget: &Budget,
) -> Result<Verdict> {
    let outcome = m.consequence(gamma, psi, budget)?;
    let report = m.report(&outcome);
    let text = match &report.countermodel {
        None => format!("holds in {}", m.name()),
        Some(cm) => format!("refuted in {}\n{}", m.name(), valuation_text(cm)),
    };
    Ok(Verdict::new(report.holds, serde_json::to_value(&report)?).with_text(text))
}

fn truth_table(m: &LogicMatrix, f: &Formula) -> Result<Verdict> {
    let atoms = atoms_of([f]);
    let mut rows = Vec::new();
    let mut text = vec![atoms
        .iter()
        .cloned()
        .chain([f.to_string()])
        .collect::<Vec<_>>()];
    for values in Valuations::new(atoms.len(), m.size()) {
        let v: Valuation = atoms.iter().cloned().zip(values.iter().copied()).collect();
        let value = m.value_name(m.eval(f, &v)?).to_string();
        text.push(
            values
                .iter()
                .map(|&i| m.value_name(i).to_string())
                .chain([value.clone()])
                .collect(),
        );
        rows.push(json!({"valuation": m.describe(&v), "value": value}));
    }
    Ok(Verdict::new(
        true,
        json!({"matrix": m.name(), "atoms": atoms, "rows": rows}),
    )
    .with_text(align(&text)))
}

fn default_operators(m: MatrixName) -> Option<(&'static str, &'static str)> {
    match m {
        MatrixName::Bd2 => Some(("#p", "!##p")),
        MatrixName::Bs4 => Some(("#p", "!#p")),
        _ => None,
    }
}

fn check_report_text(report: &CheckReport) -> String {
    match (&report.derives, &report.error) {
        (Some(f), _) => format!("valid, derives {f}"),
        (_, Some(e)) => format!("invalid at line {}: {}", e.line, e.reason),
        _ => "invalid".to_string(),
    }
}

fn structure_text(json: &Value) -> String {
    let mut rows = vec![vec![
        "domain size".to_string(),
        json["domain_size"].to_string(),
    ]];
    for section in ["predicates", "functions"] {
        if let Some(tables) = json.get(section).and_then(Value::as_object) {
            for (name, entries) in tables {
                for (args, v) in entries.as_object().into_iter().flatten() {
                    rows.push(vec![
                        format!("{name}{args}"),
                        v.as_str().unwrap_or_default().to_string(),
                    ]);
                }
            }
        }
    }
    for section in ["constants", "assignment"] {
        if let Some(map) = json.get(section).and_then(Value::as_object) {
            for (name, v) in map {
                rows.push(vec![
                    name.clone(),
                    v.as_str().unwrap_or_default().to_string(),
                ]);
            }
        }
    }
    align(&rows)
}

fn ba(atoms: u32) -> Result<FiniteBooleanAlgebra> {
    if !(1..=MAX_BA_ATOMS).contains(&atoms) {
        bail!("--ba-atoms must be between 1 and {MAX_BA_ATOMS}");
    }
    Ok(FiniteBooleanAlgebra::new(atoms)?)
}

fn execute(cli: &Cli) -> Result<Verdict> {
    let budget = Budget::from_env(cli.atoms_cap.unwrap_or(DEFAULT_ATOM_CAP));
    match &cli.command {
        Command::Eval {
            matrix,
            formula: text,
            vals,
        } => {
            let m = matrix.matrix.load();
            let f = formula(text)?;
            if vals.is_empty() && !f.variables().is_empty() {
                return truth_table(&m, &f);
            }
            let named: BTreeMap<String, String> = pairs(vals)?.into_iter().collect();
            let value = m.eval_named(&f, &named)?;
            Ok(Verdict::new(true, json!(value)).with_text(value.to_string()))
        }
        Command::Taut {
            matrix,
            formula: text,
        } => consequence_verdict(&matrix.matrix.load(), &[], &formula(text)?, &budget),
        Command::Conseq { matrix, query } => consequence_verdict(
            &matrix.matrix.load(),
            &formulas(&query.premises)?,
            &formula(&query.goal)?,
            &budget,
        ),
        Command::Countermodel { matrix, query } => {
            let m = matrix.matrix.load();
            let outcome =
                m.consequence(&formulas(&query.premises)?, &formula(&query.goal)?, &budget)?;
            let cm = outcome.countermodel().map(|v| m.describe(v));
            let text = match &cm {
                Some(cm) => valuation_text(cm),
                None => format!("no countermodel in {}", m.name()),
            };
            Ok(Verdict::new(cm.is_none(), json!(cm)).with_text(text))
        }
        Command::Dat { target, query } => {
            let (gamma, psi) = (formulas(&query.premises)?, formula(&query.goal)?);
            let r = match target {
                DatTarget::Lfi1 => dat_lfi1(&gamma, &psi, &budget)?,
                DatTarget::Cpl => dat_cpl(&gamma, &psi, &budget)?,
            };
            let text = format!(
                "{}: {}\nguarded bd2: {}\n{}",
                r.target,
                r.target_holds,
                r.bd2_holds,
                if r.agrees() { "agree" } else { "DISAGREE" }
            );
            Ok(Verdict::new(r.agrees(), serde_json::to_value(&r)?).with_text(text))
        }
        Command::LfiuCheck {
            matrix,
            consistency,
            undeterminedness,
        } => {
            let defaults = default_operators(matrix.matrix);
            let pick =
                |given: &Option<String>, fallback: Option<&str>, flag: &str| -> Result<Formula> {
                    match (given, fallback) {
                        (Some(t), _) => formula(t),
                        (None, Some(t)) => formula(t),
                        (None, None) => bail!("--{flag} is required for this matrix"),
                    }
                };
            let c = pick(consistency, defaults.map(|d| d.0), "consistency")?;
            let u = pick(undeterminedness, defaults.map(|d| d.1), "undeterminedness")?;
            let r = check_lfiu(&matrix.matrix.load(), &c, &u, &budget)?;
            let mut rows = vec![vec![
                "".to_string(),
                "condition".into(),
                "satisfied".into(),
                "witness".into(),
            ]];
            for c in &r.conditions {
                let witness = c.witness.as_ref().map_or(String::new(), |w| {
                    w.iter()
                        .map(|(a, v)| format!("{a}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                });
                rows.push(vec![
                    format!("({})", c.label),
                    c.statement.clone(),
                    c.satisfied.to_string(),
                    witness,
                ]);
            }
            Ok(Verdict::new(r.all_hold(), serde_json::to_value(&r)?).with_text(align(&rows)))
        }
        Command::MaximalityCheck {
            matrix,
            sub,
            top,
            bottom,
            transfers,
        } => {
            let transfers = transfers
                .iter()
                .map(|t| formula(t))
                .collect::<Result<Vec<_>>>()?;
            let r = check_maximality_conditions(
                &matrix.matrix.load(),
                &sub.load(),
                &formula(top)?,
                &formula(bottom)?,
                &transfers,
            )?;
            let mut text = String::new();
            for (label, c) in [
                ("structure", &r.structure),
                ("constants", &r.constants),
                ("transfer", &r.transfer),
            ] {
                text.push_str(&format!(
                    "{label}: {}\n",
                    if c.passed { "pass" } else { "FAIL" }
                ));
                for f in &c.failures {
                    text.push_str(&format!("  {f}\n"));
                }
            }
            Ok(Verdict::new(r.all_pass(), serde_json::to_value(&r)?).with_text(text))
        }
        Command::Twist(t) => twist(t, cli.atoms_cap),
        Command::CheckProof {
            calculus,
            signature: sig,
            file,
        } => {
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("reading {}", file.display()))?;
            let report: CheckReport = match calculus {
                Calculus::Hbd2 => {
                    let proof =
                        parse_prop_proof(&text).map_err(|e| anyhow!("{}: {e}", file.display()))?;
                    check_proof_hbd2(&proof).into()
                }
                Calculus::Hqbd2 => {
                    let extra = sig.as_deref().map(signature).transpose()?;
                    let (proof, _) = parse_fo_proof(&text, extra.as_ref())
                        .map_err(|e| anyhow!("{}: {e}", file.display()))?;
                    check_proof_hqbd2(&proof).into()
                }
            };
            let text = check_report_text(&report);
            Ok(Verdict::new(report.valid, serde_json::to_value(&report)?).with_text(text))
        }
        Command::FoEval {
            signature: sig,
            structure,
            formula: text,
            assign,
        } => {
            let sig = signature(&sig.signature)?;
            let raw = inline_or_file(structure)?;
            let value: Value = serde_json::from_str(&raw).context("structure is not valid JSON")?;
            let m = Structure4::from_json(&value, &sig)?;
            let f = fo_formula(text, &sig)?;
            let mut s = Assignment::new();
            for (x, a) in pairs(assign)? {
                let e = parse_element(&a)
                    .filter(|&e| e < m.domain_size())
                    .ok_or_else(|| anyhow!("`{a}` is not an element of the domain"))?;
                s.insert(x, e);
            }
            let v = m.eval_formula(&f, &s)?;
            Ok(Verdict::new(true, json!(v.name())).with_text(v.name().to_string()))
        }
        Command::FoCountermodel {
            signature: sig,
            query,
            max_size,
            include_functions,
        } => {
            let sig = signature(&sig.signature)?;
            let gamma = if query.premises.trim().is_empty() {
                Vec::new()
            } else {
                fo_formulas(&query.premises, &sig)?
            };
            let psi = fo_formula(&query.goal, &sig)?;
            let options = SearchOptions {
                max_size: *max_size,
                include_functions: *include_functions,
            };
            let outcome = fo_consequence_bounded(&gamma, &psi, &sig, options, &budget)?;
            let json = outcome.to_json();
            let text = match json.get("countermodel").filter(|c| !c.is_null()) {
                Some(cm) => format!("countermodel found\n{}", structure_text(cm)),
                None => {
                    format!("no countermodel up to size {max_size} (not a proof of consequence)")
                }
            };
            Ok(Verdict::new(!outcome.refuted(), json).with_text(text))
        }
        Command::Closure {
            signature: sig,
            formula: text,
        } => {
            let sig = signature(&sig.signature)?;
            let closed = fo_formula(text, &sig)?.universal_closure().to_string();
            Ok(Verdict::new(true, json!(closed)).with_text(closed))
        }
    }
}

fn twist(cmd: &TwistCommand, atoms_cap: Option<usize>) -> Result<Verdict> {
    let budget = Budget::from_env(atoms_cap.unwrap_or(DEFAULT_TWIST_ATOM_CAP));
    match cmd {
        TwistCommand::Build { ba_atoms } => {
            let m = build_twist(ba(*ba_atoms)?);
            Ok(Verdict::new(true, m.to_json()))
        }
        TwistCommand::Verify => {
            let r = iso_check_twist2_bd2();
            let mut text = format!(
                "{} entries checked, {} mismatches\n",
                r.entries_checked,
                r.mismatches.len()
            );
            for m in &r.mismatches {
                text.push_str(&format!("  {m}\n"));
            }
            let mut json = serde_json::to_value(&r)?;
            json["passed"] = json!(r.passed());
            Ok(Verdict::new(r.passed(), json).with_text(text))
        }
        TwistCommand::Conseq { ba_atoms, query } => {
            let (gamma, psi) = (formulas(&query.premises)?, formula(&query.goal)?);
            ba(*ba_atoms)?;
            let mut checked = Vec::new();
            for k in 1..=*ba_atoms {
                let report = twist_consequence(&gamma, &psi, ba(k)?, &budget)?;
                checked.push(report.matrix.clone());
                if !report.holds {
                    let text = format!(
                        "refuted in {}\n{}",
                        report.matrix,
                        valuation_text(
                            report
                                .countermodel
                                .as_ref()
                                .expect("refuted reports carry a countermodel")
                        )
                    );
                    let mut json = serde_json::to_value(&report)?;
                    json["checked"] = json!(checked);
                    return Ok(Verdict::new(false, json).with_text(text));
                }
            }
            let text = format!("holds in {}", checked.join(", "));
            let json = json!({"holds": true, "countermodel": null, "matrix": checked.last(), "checked": checked});
            Ok(Verdict::new(true, json).with_text(text))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bd2kit").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_weak_consistency() {
        let (code, out, _) = call(&["eval", "--matrix", "bd2", "--formula", "#p", "--val", "p=b"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "\"0\"");
    }

    #[test]
    fn conseq_refuted_with_countermodel() {
        let (code, out, _) = call(&[
            "conseq",
            "--matrix",
            "bd2",
            "--premises",
            "p,!p",
            "--goal",
            "q",
        ]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["holds"], false);
        assert_eq!(v["countermodel"]["p"], "b");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["eval", "--matrix", "nope", "--formula", "p"]).0, 2);
        let (code, _, err) = call(&["taut", "--formula", "p &"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot parse"), "{err}");
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn budget_cap_is_reported() {
        let (code, _, err) = call(&["--atoms-cap", "1", "taut", "--formula", "p | q"]);
        assert_eq!(code, 2);
        assert!(err.contains("cap is 1"), "{err}");
    }

    #[test]
    fn pretty_truth_table() {
        let (code, out, _) = call(&["--pretty", "eval", "--formula", "#p"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[2].split_whitespace().collect::<Vec<_>>(), ["b", "0"]);
    }
}
