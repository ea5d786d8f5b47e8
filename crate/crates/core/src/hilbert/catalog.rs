use std::sync::OnceLock;

use crate::syntax::Schema;

const AXIOMS: [(&str, &str); 16] = [
    ("Pos1", "A -> (B -> A)"),
    ("Pos2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"),
    ("Pos3", "A & B -> A"),
    ("Pos4", "A & B -> B"),
    ("Pos5", "A -> (B -> A & B)"),
    ("Pos6", "A -> A | B"),
    ("Pos7", "A -> B | A"),
    ("Pos8", "(A -> C) -> ((B -> C) -> (A | B -> C))"),
    ("Pos9", "A | (A -> B)"),
    ("DNeg", "!!A <-> A"),
    ("DM1", "!(A | B) <-> !A & !B"),
    ("DM2", "!(A & B) <-> !A | !B"),
    ("DM3", "!(A -> B) <-> (!A -> A) & !B"),
    ("C1", "#A & (A & !A) -> B"),
    ("C2", "#A | A & !A"),
    ("C3", "!#A <-> (A <-> !A)"),
];

/// Schemes derivable in the propositional calculus, labelled (i) to (xv).
pub const PROVABLE_SCHEMES: [(&str, &str); 15] = [
    ("i", "(#A -> A) -> A"),
    ("ii", "(!A -> A) & (!#A -> A) -> A"),
    ("iii", "A & #A & !#A -> B"),
    ("iv", "(!#A -> #A) -> #A"),
    ("v", "(#A -> !A) -> !A"),
    ("vi", "#A <-> #!A"),
    ("vii", "!#A <-> !#!A"),
    ("viii", "(A -> ##A) & (!A -> ##A)"),
    ("ix", "A & !A <-> !#A & ##A"),
    ("x", "!A -> !(A & B)"),
    ("xi", "!A & #A -> #(A & B)"),
    ("xii", "#A & !#A -> #(A & B)"),
    ("xiii", "#A & #B -> #(A & B)"),
    ("xiv", "A & #A & !#B -> !#(A & B)"),
    ("xv", "#A & !#A & (#B & !#B) -> !#(A & B)"),
];

/// The sixteen axiom schemas of the propositional calculus, in order.
pub fn axioms() -> &'static [(&'static str, Schema)] {
    static CATALOG: OnceLock<Vec<(&'static str, Schema)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        AXIOMS
            .iter()
            .map(|&(name, text)| (name, Schema::parse(text).expect("catalog schema parses")))
            .collect()
    })
}

pub fn axiom(name: &str) -> Option<&'static Schema> {
    axioms().iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

pub fn provable_schemes() -> Vec<(&'static str, Schema)> {
    PROVABLE_SCHEMES
        .iter()
        .map(|&(label, text)| (label, Schema::parse(text).expect("scheme parses")))
        .collect()
}
