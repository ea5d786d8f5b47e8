#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use bd2kit::fol::{FoFormula, Signature};
use bd2kit::hilbert::{
    parse_fo_proof, parse_prop_proof, FoJustification, FoProof, Justification, PropProof,
};
use bd2kit::syntax::Compound;

pub fn corpus(dir: &str) -> Vec<(PathBuf, String)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(dir);
    let mut files: Vec<_> = fs::read_dir(&root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "proof"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.clone(), fs::read_to_string(p).unwrap()))
        .collect()
}

pub fn prop_corpus() -> Vec<(PathBuf, PropProof)> {
    corpus("hbd2")
        .into_iter()
        .map(|(p, t)| {
            let proof = parse_prop_proof(&t).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (p, proof)
        })
        .collect()
}

pub fn fo_corpus() -> Vec<(PathBuf, FoProof, Signature)> {
    corpus("hqbd2")
        .into_iter()
        .map(|(p, t)| {
            let (proof, sig) =
                parse_fo_proof(&t, None).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            (p, proof, sig)
        })
        .collect()
}

/// Negates `f`, repeatedly if needed, so the result is not a premise.
pub fn mutate_formula<T: Compound>(f: &T, premises: &[T]) -> T {
    let mut m = T::neg(f.clone());
    while premises.contains(&m) {
        m = T::neg(m);
    }
    m
}

pub fn prop_mutations(proof: &PropProof) -> Vec<(usize, PropProof)> {
    let mut out = Vec::new();
    for (i, line) in proof.lines.iter().enumerate() {
        let mut changed = proof.clone();
        changed.lines[i].formula = mutate_formula(&line.formula, &proof.premises);
        out.push((i + 1, changed));
        if let Justification::Mp(a, b) = line.justification {
            let mut swapped = proof.clone();
            swapped.lines[i].justification = Justification::Mp(b, a);
            out.push((i + 1, swapped));
        }
    }
    out
}

/// A variable free in `alpha`, if any.
pub fn free_in(alpha: &FoFormula) -> Option<String> {
    alpha.free_vars().into_iter().next()
}

pub fn fo_mutations(proof: &FoProof) -> Vec<(usize, FoProof, &'static str)> {
    let mut out = Vec::new();
    for (i, line) in proof.lines.iter().enumerate() {
        let n = i + 1;
        let mut changed = proof.clone();
        changed.lines[i].formula = mutate_formula(&line.formula, &proof.premises);
        out.push((n, changed, ""));
        match &line.justification {
            FoJustification::Mp(a, b) => {
                let mut swapped = proof.clone();
                swapped.lines[i].justification = FoJustification::Mp(*b, *a);
                out.push((n, swapped, ""));
            }
            FoJustification::AllIn1(src, _) => {
                let (alpha, beta) = proof.lines[src - 1].formula.as_imp().unwrap();
                if let Some(y) = free_in(alpha) {
                    let mut bad = proof.clone();
                    bad.lines[i].formula =
                        FoFormula::imp(alpha.clone(), FoFormula::forall(&y, beta.clone()));
                    bad.lines[i].justification = FoJustification::AllIn1(*src, y);
                    out.push((n, bad, "side condition"));
                }
            }
            FoJustification::AllIn2(src, _) => {
                let (beta, alpha) = proof.lines[src - 1].formula.as_imp().unwrap();
                if let Some(y) = free_in(alpha) {
                    let mut bad = proof.clone();
                    let exists =
                        FoFormula::neg(FoFormula::forall(&y, FoFormula::neg(beta.clone())));
                    bad.lines[i].formula = FoFormula::imp(exists, alpha.clone());
                    bad.lines[i].justification = FoJustification::AllIn2(*src, y);
                    out.push((n, bad, "side condition"));
                }
            }
            _ => {}
        }
    }
    out
}
