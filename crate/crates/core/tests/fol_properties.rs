use bd2kit::budget::Budget;
use bd2kit::fol::{
    assignments, fo_consequence_bounded, parse_fo, structures, Assignment, FoFormula,
    SearchOptions, Signature, Structure4, Term,
};
use bd2kit::lattice::TruthValue;
use bd2kit::syntax::Compound;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(VARS.to_vec()).prop_map(Term::var),
        Just(Term::constant("c")),
    ];
    leaf.prop_recursive(2, 4, 1, |inner| {
        inner.prop_map(|t| Term::App("f".into(), vec![t]))
    })
}

fn arb_formula() -> impl Strategy<Value = FoFormula> {
    let atom = prop_oneof![
        arb_term().prop_map(|t| FoFormula::pred("P", vec![t])),
        (arb_term(), arb_term()).prop_map(|(a, b)| FoFormula::pred("Q", vec![a, b])),
    ];
    atom.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(FoFormula::neg),
            inner.clone().prop_map(FoFormula::con),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FoFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FoFormula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| FoFormula::imp(a, b)),
            (prop::sample::select(VARS.to_vec()), inner).prop_map(|(x, a)| FoFormula::forall(x, a)),
        ]
    })
}

fn truth() -> impl Strategy<Value = TruthValue> {
    prop::sample::select(TruthValue::ALL.to_vec())
}

fn arb_structure() -> impl Strategy<Value = Structure4> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(truth(), n),
            prop::collection::vec(truth(), n * n),
            prop::collection::vec(0..n, n),
            0..n,
        )
            .prop_map(move |(p, q, f, c)| {
                let mut m = Structure4::new(n).unwrap();
                m.set_predicate("P", 1, p).unwrap();
                m.set_predicate("Q", 2, q).unwrap();
                m.set_function("f", 1, f).unwrap();
                m.set_constant("c", c).unwrap();
                m
            })
    })
}

fn arb_assignment(size: usize) -> impl Strategy<Value = Assignment> {
    prop::collection::vec(0..size, VARS.len())
        .prop_map(|v| VARS.iter().map(|x| x.to_string()).zip(v).collect())
}

fn with_assignments() -> impl Strategy<Value = (Structure4, Assignment, Assignment)> {
    arb_structure().prop_flat_map(|m| {
        let n = m.domain_size();
        (Just(m), arb_assignment(n), arb_assignment(n))
    })
}

proptest! {
    #[test]
    fn unused_variables_are_irrelevant((m, s, t) in with_assignments(), phi in arb_formula()) {
        let free = phi.free_vars();
        let mut t = t;
        for x in &free {
            t.insert(x.clone(), s[x]);
        }
        prop_assert_eq!(m.eval_formula(&phi, &s).unwrap(), m.eval_formula(&phi, &t).unwrap());
    }

    #[test]
    fn substitution_commutes_with_evaluation((m, s, _) in with_assignments(), phi in arb_formula(), t in arb_term(), x in prop::sample::select(VARS.to_vec())) {
        prop_assume!(phi.free_for(&t, x));
        let substituted = phi.substitute(x, &t).unwrap();
        let a = m.eval_term(&t, &s).unwrap();
        let mut updated = s.clone();
        updated.insert(x.to_string(), a);
        prop_assert_eq!(m.eval_formula(&substituted, &s).unwrap(), m.eval_formula(&phi, &updated).unwrap());
    }

    #[test]
    fn capture_is_refused(phi in arb_formula(), t in arb_term(), x in prop::sample::select(VARS.to_vec())) {
        prop_assert_eq!(phi.substitute(x, &t).is_ok(), phi.free_for(&t, x));
    }

    #[test]
    fn double_negation_is_transparent((m, s, _) in with_assignments(), phi in arb_formula()) {
        let nn = FoFormula::neg(FoFormula::neg(phi.clone()));
        prop_assert_eq!(m.eval_formula(&nn, &s).unwrap(), m.eval_formula(&phi, &s).unwrap());
    }

    #[test]
    fn existential_is_the_supremum((m, s, _) in with_assignments(), phi in arb_formula(), x in prop::sample::select(VARS.to_vec())) {
        let ex = m.eval_formula(&FoFormula::exists(x, phi.clone()), &s).unwrap();
        let mut sup = TruthValue::Zero;
        let mut witness = false;
        for a in 0..m.domain_size() {
            let mut u = s.clone();
            u.insert(x.to_string(), a);
            let v = m.eval_formula(&phi, &u).unwrap();
            sup = sup.join(v);
            witness |= v.is_designated();
        }
        prop_assert_eq!(ex, sup);
        if ex.is_designated() {
            prop_assert!(witness);
        }
    }

    #[test]
    fn closure_preserves_models(m in arb_structure(), phi in arb_formula()) {
        let closed = phi.universal_closure();
        prop_assert!(closed.is_sentence());
        prop_assert_eq!(m.is_model(&phi).unwrap(), m.is_model(&closed).unwrap());
    }
}

fn unary_sig() -> Signature {
    Signature::parse("pred P/1; const c").unwrap()
}

fn fo(s: &str) -> FoFormula {
    parse_fo(s, &unary_sig()).unwrap()
}

/// Every structure of size at most 3 over `pred P/1; const c`.
fn small_structures() -> Vec<Structure4> {
    (1..=3)
        .flat_map(|n| structures(&unary_sig(), n, false).unwrap())
        .collect()
}

#[test]
fn exhaustive_witness_extraction() {
    let bodies = [
        "P(x)",
        "!P(x)",
        "#P(x)",
        "P(x) -> P(c)",
        "snot(P(x)) | P(c)",
    ];
    for m in small_structures() {
        for body in bodies {
            let phi = fo(body);
            let ex = FoFormula::exists("x", phi.clone());
            for s in assignments(&["x".to_string()], m.domain_size()) {
                if m.eval_formula(&ex, &s).unwrap().is_designated() {
                    let found = (0..m.domain_size()).any(|a| {
                        let u: Assignment = [("x".to_string(), a)].into_iter().collect();
                        m.eval_formula(&phi, &u).unwrap().is_designated()
                    });
                    assert!(found, "{body}");
                }
            }
        }
    }
}

#[test]
fn exhaustive_substitution_check() {
    let bodies = [
        "P(x)",
        "forall y. (P(y) -> P(x))",
        "!#P(x) & P(c)",
        "forall x. P(x) -> P(x)",
    ];
    let terms = [Term::constant("c"), Term::var("y"), Term::var("x")];
    let vars: Vec<String> = ["x", "y"].iter().map(|v| v.to_string()).collect();
    for m in small_structures() {
        for body in bodies {
            let phi = fo(body);
            for t in &terms {
                if !phi.free_for(t, "x") {
                    assert!(phi.substitute("x", t).is_err());
                    continue;
                }
                let sub = phi.substitute("x", t).unwrap();
                for s in assignments(&vars, m.domain_size()) {
                    let mut u = s.clone();
                    u.insert("x".into(), m.eval_term(t, &s).unwrap());
                    assert_eq!(
                        m.eval_formula(&sub, &s).unwrap(),
                        m.eval_formula(&phi, &u).unwrap()
                    );
                }
            }
        }
    }
}

fn holds(premises: &[&str], goal: &str) -> bool {
    let sig = unary_sig();
    let gamma: Vec<FoFormula> = premises
        .iter()
        .map(|p| parse_fo(p, &sig).unwrap())
        .collect();
    let psi = parse_fo(goal, &sig).unwrap();
    !fo_consequence_bounded(
        &gamma,
        &psi,
        &sig,
        SearchOptions::default(),
        &Budget::default(),
    )
    .unwrap()
    .refuted()
}

#[test]
fn derivability_claims_hold_on_small_structures() {
    // Instances at α = P(x), β = P(x) and sentences built from the constant.
    let claims: [(&[&str], &str); 11] = [
        (&["P(c)"], "exists x. P(x)"),
        (&[], "P(c) -> exists x. P(x)"),
        (&[], "P(y) -> exists x. P(x)"),
        (&["snot(forall x. P(x))"], "exists x. snot(P(x))"),
        (&["!P(x) -> P(c)"], "!forall x. P(x) -> P(c)"),
        (&[], "forall x. snot(P(x)) -> snot(exists x. P(x))"),
        (&["snot(!P(x))"], "snot(!forall x. P(x))"),
        (&[], "snot(forall x. snot(P(x))) -> exists x. P(x)"),
        (
            &[],
            "(P(c) -> !forall x. P(x)) -> exists x. (P(c) -> !P(x))",
        ),
        (
            &["(P(c) -> !P(x)) -> P(c)"],
            "(P(c) -> !forall x. P(x)) -> P(c)",
        ),
        (
            &["(P(c) -> !P(x)) -> P(y)"],
            "(P(c) -> !forall x. P(x)) -> P(y)",
        ),
    ];
    for (premises, goal) in claims {
        assert!(holds(premises, goal), "{premises:?} ⊨ {goal}");
    }
}

#[test]
fn side_conditions_are_needed() {
    // x free in β
    assert!(!holds(&["!P(x) -> P(x)"], "!forall x. P(x) -> P(x)"));
    // x free in ψ
    assert!(!holds(
        &["(P(c) -> !P(x)) -> P(x)"],
        "(P(c) -> !forall x. P(x)) -> P(x)"
    ));
}

#[test]
fn split_structure_regression() {
    let sig = Signature::parse("pred P/1").unwrap();
    let mut m = Structure4::new(2).unwrap();
    m.set_predicate("P", 1, vec![TruthValue::Zero, TruthValue::B])
        .unwrap();
    let s = Assignment::new();
    let ex = parse_fo("exists x. P(x)", &sig).unwrap();
    let strong = parse_fo("snot(forall x. snot(P(x)))", &sig).unwrap();
    assert_eq!(m.eval_formula(&ex, &s).unwrap(), TruthValue::B);
    assert_eq!(m.eval_formula(&strong, &s).unwrap(), TruthValue::One);
}
