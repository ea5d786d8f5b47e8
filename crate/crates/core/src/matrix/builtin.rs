use crate::lattice::TruthValue;

use super::{Connective, LogicMatrix};

pub const BUILTIN_NAMES: [&str; 5] = ["bd", "bs4", "bd2", "lfi1", "cpl"];

const NAMES: [&str; 4] = ["1", "b", "n", "0"];

fn tv(i: usize) -> TruthValue {
    TruthValue::from_index(i).expect("four-valued index")
}

fn designated_four() -> Vec<usize> {
    TruthValue::ALL
        .iter()
        .filter(|v| v.is_designated())
        .map(|v| v.index())
        .collect()
}

/// Belnap–Dunn: negation, conjunction, disjunction only.
pub fn bd() -> LogicMatrix {
    LogicMatrix::builder("bd", &NAMES)
        .unary_fn(Connective::Neg, |a| tv(a).neg().index())
        .binary_fn(Connective::And, |a, b| tv(a).meet(tv(b)).index())
        .binary_fn(Connective::Or, |a, b| tv(a).join(tv(b)).index())
        .designated(&designated_four())
        .build()
        .expect("bd tables are well formed")
}

pub fn bd2() -> LogicMatrix {
    LogicMatrix::builder("bd2", &NAMES)
        .unary_fn(Connective::Neg, |a| tv(a).neg().index())
        .unary_fn(Connective::Con, |a| tv(a).weak_consistency().index())
        .binary_fn(Connective::And, |a, b| tv(a).meet(tv(b)).index())
        .binary_fn(Connective::Or, |a, b| tv(a).join(tv(b)).index())
        .binary_fn(Connective::Imp, |a, b| tv(a).imp(tv(b)).index())
        .designated(&designated_four())
        .build()
        .expect("bd2 tables are well formed")
}

/// The `#` slot is read by the consistency operator `∘`; the strong negation
/// `∼` is kept as the extra table `"~"`.
pub fn bs4() -> LogicMatrix {
    use TruthValue::*;
    let imp = |a: usize, b: usize| match tv(a) {
        One | B => b,
        N | Zero => One.index(),
    };
    let circ = |a: usize| match tv(a) {
        One | Zero => One.index(),
        B | N => Zero.index(),
    };
    let tilde = [Zero, Zero, One, One].map(TruthValue::index).to_vec();
    LogicMatrix::builder("bs4", &NAMES)
        .unary_fn(Connective::Neg, |a| tv(a).neg().index())
        .unary_fn(Connective::Con, circ)
        .binary_fn(Connective::And, |a, b| tv(a).meet(tv(b)).index())
        .binary_fn(Connective::Or, |a, b| tv(a).join(tv(b)).index())
        .binary_fn(Connective::Imp, imp)
        .extra_unary("~", tilde)
        .designated(&designated_four())
        .build()
        .expect("bs4 tables are well formed")
}

pub fn lfi1() -> LogicMatrix {
    bd2()
        .restrict("lfi1", &["1", "b", "0"])
        .expect("{1, b, 0} is a subalgebra of bd2")
}

pub fn cpl() -> LogicMatrix {
    bd2()
        .restrict("cpl", &["1", "0"])
        .expect("{1, 0} is a subalgebra of bd2")
}

pub fn builtin(name: &str) -> Option<LogicMatrix> {
    Some(match name.to_ascii_lowercase().as_str() {
        "bd" => bd(),
        "bs4" => bs4(),
        "bd2" => bd2(),
        "lfi1" => lfi1(),
        "cpl" => cpl(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Tables transcribed cell by cell, rows and columns in carrier order 1, b, n, 0.
    const AND: [[&str; 4]; 4] = [
        ["1", "b", "n", "0"],
        ["b", "b", "0", "0"],
        ["n", "0", "n", "0"],
        ["0", "0", "0", "0"],
    ];
    const OR: [[&str; 4]; 4] = [
        ["1", "1", "1", "1"],
        ["1", "b", "1", "b"],
        ["1", "1", "n", "n"],
        ["1", "b", "n", "0"],
    ];
    const BD2_IMP: [[&str; 4]; 4] = [
        ["1", "b", "n", "0"],
        ["1", "b", "n", "0"],
        ["1", "b", "1", "b"],
        ["1", "1", "1", "1"],
    ];
    const BS4_IMP: [[&str; 4]; 4] = [
        ["1", "b", "n", "0"],
        ["1", "b", "n", "0"],
        ["1", "1", "1", "1"],
        ["1", "1", "1", "1"],
    ];

    fn check_binary(m: &LogicMatrix, c: Connective, expected: &[[&str; 4]; 4]) -> usize {
        for a in 0..4 {
            for b in 0..4 {
                let got = m.value_name(m.apply_binary(c, a, b).unwrap());
                assert_eq!(got, expected[a][b], "{} {c} at ({a},{b})", m.name());
            }
        }
        16
    }

    fn check_unary(m: &LogicMatrix, c: Connective, expected: [&str; 4]) -> usize {
        for a in 0..4 {
            assert_eq!(m.value_name(m.apply_unary(c, a).unwrap()), expected[a]);
        }
        4
    }

    #[test]
    fn bd2_tables() {
        let m = bd2();
        let mut cells = 0;
        cells += check_unary(&m, Connective::Neg, ["0", "b", "n", "1"]);
        cells += check_unary(&m, Connective::Con, ["1", "0", "b", "1"]);
        cells += check_binary(&m, Connective::And, &AND);
        cells += check_binary(&m, Connective::Or, &OR);
        cells += check_binary(&m, Connective::Imp, &BD2_IMP);
        assert_eq!(cells, 56);
        assert_eq!(m.designated_names(), vec!["1", "b"]);
    }

    #[test]
    fn bs4_tables() {
        let m = bs4();
        check_unary(&m, Connective::Neg, ["0", "b", "n", "1"]);
        check_unary(&m, Connective::Con, ["1", "0", "0", "1"]);
        check_binary(&m, Connective::And, &AND);
        check_binary(&m, Connective::Or, &OR);
        check_binary(&m, Connective::Imp, &BS4_IMP);
        let tilde: Vec<&str> = m
            .extra_unary("~")
            .unwrap()
            .iter()
            .map(|&i| m.value_name(i))
            .collect();
        assert_eq!(tilde, vec!["0", "0", "1", "1"]);
    }

    #[test]
    fn bd_has_no_implication() {
        let m = bd();
        assert!(!m.interprets(Connective::Imp));
        assert!(!m.interprets(Connective::Con));
        check_binary(&m, Connective::And, &AND);
    }

    #[test]
    fn restrictions() {
        let l = lfi1();
        assert_eq!(l.values(), &["1", "b", "0"]);
        assert_eq!(l.designated_names(), vec!["1", "b"]);
        let c = cpl();
        assert_eq!(c.values(), &["1", "0"]);
        assert_eq!(c.designated_names(), vec!["1"]);
        assert_eq!(
            c.value_name(c.apply_unary(Connective::Con, 0).unwrap()),
            "1"
        );
    }

    #[test]
    fn lookup_by_name() {
        for name in BUILTIN_NAMES {
            assert_eq!(builtin(name).unwrap().name(), name);
        }
        assert!(builtin("k3").is_none());
    }
}
