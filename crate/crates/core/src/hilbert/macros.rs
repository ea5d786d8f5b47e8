//! Canned derivations in the positive fragment (Pos1, Pos2, Pos3–Pos5 and
//! MP). Each function appends lines to a builder and returns the number of
//! the line holding its conclusion.

use crate::syntax::{Compound, Node};

use super::{ProofBuilder, Rules};

fn split_imp<T: Compound>(t: &T) -> (T, T) {
    match t.node() {
        Node::Imp(a, b) => (a.clone(), b.clone()),
        _ => panic!("expected an implication, found {t:?}"),
    }
}

fn split_and<T: Compound>(t: &T) -> (T, T) {
    match t.node() {
        Node::And(a, b) => (a.clone(), b.clone()),
        _ => panic!("expected a conjunction, found {t:?}"),
    }
}

/// `a → a`, in five lines.
pub fn identity<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, a: T) -> usize {
    let aa = T::imp(a.clone(), a.clone());
    let s = b.axiom(
        "Pos2",
        &[("A", a.clone()), ("B", aa.clone()), ("C", a.clone())],
    );
    let k1 = b.axiom("Pos1", &[("A", a.clone()), ("B", aa)]);
    let m1 = b.mp(s, k1);
    let k2 = b.axiom("Pos1", &[("A", a.clone()), ("B", a)]);
    b.mp(m1, k2)
}

/// From line `i: ψ`, derives `a → ψ`.
pub fn lift<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, a: T, i: usize) -> usize {
    let psi = b.formula(i).clone();
    let k = b.axiom("Pos1", &[("A", psi), ("B", a)]);
    b.mp(k, i)
}

/// From `i: a → (x → y)` and `j: a → x`, derives `a → y`.
pub fn under<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, i: usize, j: usize) -> usize {
    let (a, xy) = split_imp(b.formula(i));
    let (x, y) = split_imp(&xy);
    let s = b.axiom("Pos2", &[("A", a), ("B", x), ("C", y)]);
    let m = b.mp(s, i);
    b.mp(m, j)
}

/// From `i: a → x` and `j: x → y`, derives `a → y`.
pub fn syllogism<T: Compound, J: Rules<T>>(
    b: &mut ProofBuilder<T, J>,
    i: usize,
    j: usize,
) -> usize {
    let (a, _) = split_imp(b.formula(i));
    let lifted = lift(b, a, j);
    under(b, lifted, i)
}

/// `(y → z) → ((x → y) → (x → z))`
pub fn compose<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, x: T, y: T, z: T) -> usize {
    let yz = T::imp(y.clone(), z.clone());
    let k = b.axiom("Pos1", &[("A", yz), ("B", x.clone())]);
    let s = b.axiom("Pos2", &[("A", x), ("B", y), ("C", z)]);
    syllogism(b, k, s)
}

/// From `i: a → (x → y)`, derives `x → (a → y)`.
pub fn exchange<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, i: usize) -> usize {
    let (a, xy) = split_imp(b.formula(i));
    let (x, y) = split_imp(&xy);
    let s = b.axiom("Pos2", &[("A", a.clone()), ("B", x.clone()), ("C", y)]);
    let m = b.mp(s, i);
    let k = b.axiom("Pos1", &[("A", x), ("B", a)]);
    syllogism(b, k, m)
}

/// From `i: a → (x → y)`, derives `a ∧ x → y`.
pub fn import<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, i: usize) -> usize {
    let (a, xy) = split_imp(b.formula(i));
    let (x, _) = split_imp(&xy);
    let left = b.axiom("Pos3", &[("A", a.clone()), ("B", x.clone())]);
    let right = b.axiom("Pos4", &[("A", a), ("B", x)]);
    let chained = syllogism(b, left, i);
    under(b, chained, right)
}

/// From `i: a ∧ x → y`, derives `a → (x → y)`.
pub fn export<T: Compound, J: Rules<T>>(b: &mut ProofBuilder<T, J>, i: usize) -> usize {
    let (ax, y) = split_imp(b.formula(i));
    let (a, x) = split_and(&ax);
    let pair = b.axiom("Pos5", &[("A", a.clone()), ("B", x.clone())]);
    let lifted = lift(b, a, i);
    let c = compose(b, x, ax, y);
    let chained = syllogism(b, lifted, c);
    under(b, chained, pair)
}
