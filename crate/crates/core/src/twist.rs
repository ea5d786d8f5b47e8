//! Twist structures over finite Boolean algebras.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::lattice::{char_hom, BaElem, FiniteBooleanAlgebra, LatticeError, Ultrafilter};
use crate::matrix::{bd2, Connective, ConsequenceReport, LogicMatrix, MatrixError};
use crate::syntax::Formula;

pub type Pair = (BaElem, BaElem);

/// Assignment of twist pairs to atoms.
pub type TwistValuation = BTreeMap<String, Pair>;

/// The twist algebra over `A × A` with its designated set `{(1, a)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistAlgebra {
    base: FiniteBooleanAlgebra,
}

impl TwistAlgebra {
    pub fn new(base: FiniteBooleanAlgebra) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &FiniteBooleanAlgebra {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.base.size() * self.base.size()
    }

    /// Pairs are indexed first-component-major over the bitmask encoding.
    pub fn pair_at(&self, i: usize) -> Pair {
        let n = self.base.size();
        (BaElem((i / n) as u32), BaElem((i % n) as u32))
    }

    pub fn index_of(&self, (a, b): Pair) -> usize {
        a.0 as usize * self.base.size() + b.0 as usize
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        (0..self.size()).map(|i| self.pair_at(i))
    }

    pub fn pair_name((a, b): Pair) -> String {
        format!("({a},{b})")
    }

    pub fn neg(&self, (a, b): Pair) -> Pair {
        (b, a)
    }

    pub fn and(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        (self.base.meet(a, c), self.base.join(b, d))
    }

    pub fn or(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        (self.base.join(a, c), self.base.meet(b, d))
    }

    pub fn imp(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        let ba = &self.base;
        (ba.imp(a, c), ba.meet(ba.imp(b, a), d))
    }

    pub fn con(&self, (a, b): Pair) -> Pair {
        let ba = &self.base;
        (ba.compl(ba.meet(a, b)), ba.iff(a, b))
    }

    pub fn is_designated(&self, (a, _): Pair) -> bool {
        a == self.base.top()
    }

    /// Direct evaluation on pairs, independent of the materialized tables.
    pub fn eval(&self, f: &Formula, v: &TwistValuation) -> Result<Pair, MatrixError> {
        Ok(match f {
            Formula::Atom(x) => *v
                .get(x)
                .ok_or_else(|| MatrixError::MissingAtom(x.clone()))?,
            Formula::Neg(a) => self.neg(self.eval(a, v)?),
            Formula::Con(a) => self.con(self.eval(a, v)?),
            Formula::And(a, b) => self.and(self.eval(a, v)?, self.eval(b, v)?),
            Formula::Or(a, b) => self.or(self.eval(a, v)?, self.eval(b, v)?),
            Formula::Imp(a, b) => self.imp(self.eval(a, v)?, self.eval(b, v)?),
        })
    }

    pub fn to_matrix(&self) -> LogicMatrix {
        let names: Vec<String> = self.pairs().map(Self::pair_name).collect();
        let un = |op: fn(&Self, Pair) -> Pair| -> Vec<usize> {
            self.pairs().map(|x| self.index_of(op(self, x))).collect()
        };
        let bin = |op: fn(&Self, Pair, Pair) -> Pair| -> Vec<usize> {
            self.pairs()
                .flat_map(|x| self.pairs().map(move |y| (x, y)))
                .map(|(x, y)| self.index_of(op(self, x, y)))
                .collect()
        };
        let designated: Vec<usize> = (0..self.size())
            .filter(|&i| self.is_designated(self.pair_at(i)))
            .collect();
        LogicMatrix::builder_owned(format!("twist{}", self.base.size()), names)
            .table(Connective::Neg, un(Self::neg))
            .table(Connective::Con, un(Self::con))
            .table(Connective::And, bin(Self::and))
            .table(Connective::Or, bin(Self::or))
            .table(Connective::Imp, bin(Self::imp))
            .designated(&designated)
            .build()
            .expect("twist tables are well formed")
    }
}

pub fn build_twist(ba: FiniteBooleanAlgebra) -> LogicMatrix {
    TwistAlgebra::new(ba).to_matrix()
}

/// Value names of the two-element twist matrix paired with the four values.
pub const TWIST2_IDENTIFICATION: [(&str, &str); 4] = [
    ("(1,0)", "1"),
    ("(1,1)", "b"),
    ("(0,0)", "n"),
    ("(0,1)", "0"),
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub entries_checked: usize,
    pub mismatches: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every table of `left` with `right` under the value renaming `map`.
pub fn compare_under(
    left: &LogicMatrix,
    right: &LogicMatrix,
    map: &[(&str, &str)],
) -> Result<IsoReport, MatrixError> {
    let mut to_right = vec![usize::MAX; left.size()];
    for (l, r) in map {
        to_right[left.index_of(l)?] = right.index_of(r)?;
    }
    let mut report = IsoReport::default();
    if to_right.contains(&usize::MAX) || left.size() != right.size() {
        report
            .mismatches
            .push("the renaming is not a bijection between the carriers".into());
        return Ok(report);
    }
    let n = left.size();
    for c in Connective::ALL {
        let (Some(_), Some(_)) = (left.table(c), right.table(c)) else {
            if left.interprets(c) != right.interprets(c) {
                report
                    .mismatches
                    .push(format!("`{c}` is interpreted in only one matrix"));
            }
            continue;
        };
        for args in 0..n.pow(c.arity() as u32) {
            let (l, r, shown) = if c.arity() == 1 {
                (
                    left.apply_unary(c, args)?,
                    right.apply_unary(c, to_right[args])?,
                    left.value_name(args).to_string(),
                )
            } else {
                let (a, b) = (args / n, args % n);
                (
                    left.apply_binary(c, a, b)?,
                    right.apply_binary(c, to_right[a], to_right[b])?,
                    format!("{}, {}", left.value_name(a), left.value_name(b)),
                )
            };
            report.entries_checked += 1;
            if to_right[l] != r {
                report.mismatches.push(format!(
                    "`{c}` on ({shown}): {} maps to {} but {} has {}",
                    left.value_name(l),
                    right.value_name(to_right[l]),
                    right.name(),
                    right.value_name(r)
                ));
            }
        }
    }
    for i in 0..n {
        if left.is_designated(i) != right.is_designated(to_right[i]) {
            report
                .mismatches
                .push(format!("designation of {} differs", left.value_name(i)));
        }
    }
    Ok(report)
}

/// Checks that the twist matrix over the two-element algebra is the BD2
/// matrix up to the renaming [`TWIST2_IDENTIFICATION`].
pub fn iso_check_twist2_bd2() -> IsoReport {
    compare_under(
        &build_twist(FiniteBooleanAlgebra::two()),
        &bd2(),
        &TWIST2_IDENTIFICATION,
    )
    .expect("identification names exist in both matrices")
}

pub fn twist_consequence(
    gamma: &[Formula],
    psi: &Formula,
    ba: FiniteBooleanAlgebra,
    budget: &Budget,
) -> Result<ConsequenceReport, MatrixError> {
    let m = build_twist(ba);
    let outcome = m.consequence(gamma, psi, budget)?;
    Ok(m.report(&outcome))
}

/// Pushes a valuation over the twist structure of `ba` through the
/// characteristic map of `f`, landing in the two-element twist structure.
pub fn collapse_valuation(
    ba: &FiniteBooleanAlgebra,
    f: Ultrafilter,
    v: &TwistValuation,
) -> Result<TwistValuation, LatticeError> {
    v.iter()
        .map(|(x, &(a, b))| Ok((x.clone(), (char_hom(ba, f, a)?, char_hom(ba, f, b)?))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ultrafilters;
    use crate::matrix::Valuations;
    use crate::syntax::{enumerate_formulas, parse};

    fn two() -> TwistAlgebra {
        TwistAlgebra::new(FiniteBooleanAlgebra::two())
    }

    fn e(x: u32) -> BaElem {
        BaElem(x)
    }

    #[test]
    fn pair_operation_examples() {
        let t = two();
        assert_eq!(t.con((e(1), e(1))), (e(0), e(1)));
        assert_eq!(t.imp((e(0), e(0)), (e(0), e(1))), (e(1), e(1)));
        assert_eq!(t.neg((e(1), e(1))), (e(1), e(1)));
    }

    #[test]
    fn consistency_column_matches_four_values() {
        let t = two();
        for (x, y) in [
            ((1, 0), (1, 0)),
            ((1, 1), (0, 1)),
            ((0, 0), (1, 1)),
            ((0, 1), (1, 0)),
        ] {
            assert_eq!(t.con((e(x.0), e(x.1))), (e(y.0), e(y.1)));
        }
    }

    #[test]
    fn indexing_round_trips() {
        let t = TwistAlgebra::new(FiniteBooleanAlgebra::new(2).unwrap());
        assert_eq!(t.size(), 16);
        for i in 0..16 {
            assert_eq!(t.index_of(t.pair_at(i)), i);
        }
    }

    #[test]
    fn two_element_twist_is_bd2() {
        let r = iso_check_twist2_bd2();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.entries_checked, 4 + 4 + 16 + 16 + 16);
    }

    #[test]
    fn corrupted_entry_is_detected() {
        let mut m = build_twist(FiniteBooleanAlgebra::two());
        let a = m.index_of("(0,0)").unwrap();
        let z = m.index_of("(0,1)").unwrap();
        m.set_entry(Connective::Imp, &[a, z], z).unwrap();
        let r = compare_under(&m, &bd2(), &TWIST2_IDENTIFICATION).unwrap();
        assert_eq!(r.mismatches.len(), 1);
        assert!(r.mismatches[0].contains("(0,0), (0,1)"));
    }

    #[test]
    fn consequence_examples() {
        let b = Budget::with_atom_cap(4);
        let four = FiniteBooleanAlgebra::new(2).unwrap();
        let r = twist_consequence(&[], &parse("p | !p").unwrap(), four, &b).unwrap();
        assert!(!r.holds);
        assert_eq!(r.countermodel.unwrap()["p"], "(0,0)");
        for atoms in 1..=2 {
            let ba = FiniteBooleanAlgebra::new(atoms).unwrap();
            let gamma = [parse("p").unwrap(), parse("snot(p)").unwrap()];
            assert!(
                twist_consequence(&gamma, &parse("q").unwrap(), ba, &b)
                    .unwrap()
                    .holds
            );
            assert!(
                twist_consequence(&[], &parse("#p | (p & !p)").unwrap(), ba, &b)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn matrix_tables_agree_with_direct_evaluation() {
        let t = TwistAlgebra::new(FiniteBooleanAlgebra::new(2).unwrap());
        let m = t.to_matrix();
        let atoms = ["p".to_string(), "q".to_string()];
        for f in enumerate_formulas(&["p", "q"], 1) {
            let vector = m.truth_vector(&f, &atoms).unwrap();
            for (k, vals) in Valuations::new(2, t.size()).enumerate() {
                let v: TwistValuation = atoms
                    .iter()
                    .cloned()
                    .zip(vals.iter().map(|&i| t.pair_at(i)))
                    .collect();
                assert_eq!(t.index_of(t.eval(&f, &v).unwrap()), vector[k], "{f}");
            }
        }
    }

    #[test]
    fn collapse_is_a_homomorphism() {
        let ba = FiniteBooleanAlgebra::new(2).unwrap();
        let t = TwistAlgebra::new(ba);
        let t2 = two();
        let formulas = enumerate_formulas(&["p", "q"], 2);
        for vals in Valuations::new(2, t.size()) {
            let v: TwistValuation = [
                ("p".to_string(), t.pair_at(vals[0])),
                ("q".to_string(), t.pair_at(vals[1])),
            ]
            .into_iter()
            .collect();
            for uf in ultrafilters(&ba) {
                let collapsed = collapse_valuation(&ba, uf, &v).unwrap();
                for f in &formulas {
                    let (a, b) = t.eval(f, &v).unwrap();
                    let expected = (char_hom(&ba, uf, a).unwrap(), char_hom(&ba, uf, b).unwrap());
                    assert_eq!(t2.eval(f, &collapsed).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn collapse_preserves_and_separates_designation() {
        let ba = FiniteBooleanAlgebra::new(2).unwrap();
        let t = TwistAlgebra::new(ba);
        let t2 = two();
        let phi = parse("p | !p").unwrap();
        for i in 0..t.size() {
            let v: TwistValuation = [("p".to_string(), t.pair_at(i))].into_iter().collect();
            let value = t.eval(&phi, &v).unwrap();
            let collapsed: Vec<bool> = ultrafilters(&ba)
                .into_iter()
                .map(|uf| {
                    t2.is_designated(
                        t2.eval(&phi, &collapse_valuation(&ba, uf, &v).unwrap())
                            .unwrap(),
                    )
                })
                .collect();
            if t.is_designated(value) {
                assert!(collapsed.iter().all(|&d| d));
            } else {
                assert!(collapsed.iter().any(|&d| !d));
            }
        }
        let top = ba.top();
        let v: TwistValuation = [("p".to_string(), (top, e(1)))].into_iter().collect();
        let c = collapse_valuation(&ba, ultrafilters(&ba)[0], &v).unwrap();
        assert_eq!(c["p"], (e(1), e(1)));
    }

    #[test]
    fn first_component_modus_ponens() {
        for atoms in 1..=2 {
            let t = TwistAlgebra::new(FiniteBooleanAlgebra::new(atoms).unwrap());
            let top = t.base().top();
            for x in t.pairs() {
                for y in t.pairs() {
                    if t.imp(x, y).0 == top && x.0 == top {
                        assert_eq!(y.0, top);
                    }
                }
            }
        }
    }

    #[test]
    fn one_atom_twist_consequence_matches_bd2() {
        let b = Budget::default();
        let m = bd2();
        let ba = FiniteBooleanAlgebra::two();
        for f in enumerate_formulas(&["p", "q"], 2) {
            let direct = m.tautology(&f, &b).unwrap().holds();
            assert_eq!(
                twist_consequence(&[], &f, ba, &b).unwrap().holds,
                direct,
                "{f}"
            );
        }
    }
}
