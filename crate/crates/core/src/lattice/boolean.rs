use std::fmt;

use super::LatticeError;

/// Largest supported atom count; the carrier is a `u32` bitmask.
pub const MAX_ATOMS: u32 = 16;

/// An element of a finite Boolean algebra, encoded as the set of atoms below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaElem(pub u32);

impl fmt::Display for BaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaOp {
    Meet,
    Join,
    Compl,
    Imp,
    Iff,
}

impl BaOp {
    pub fn arity(self) -> usize {
        match self {
            BaOp::Compl => 1,
            _ => 2,
        }
    }
}

/// The powerset algebra of `atom_count` atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBooleanAlgebra {
    atom_count: u32,
}

impl FiniteBooleanAlgebra {
    pub fn new(atom_count: u32) -> Result<Self, LatticeError> {
        if atom_count == 0 || atom_count > MAX_ATOMS {
            return Err(LatticeError::AtomCount(atom_count));
        }
        Ok(Self { atom_count })
    }

    /// The two-element algebra.
    pub fn two() -> Self {
        Self { atom_count: 1 }
    }

    pub fn atom_count(&self) -> u32 {
        self.atom_count
    }

    pub fn size(&self) -> usize {
        1usize << self.atom_count
    }

    pub fn top(&self) -> BaElem {
        BaElem(((1u64 << self.atom_count) - 1) as u32)
    }

    pub fn bottom(&self) -> BaElem {
        BaElem(0)
    }

    pub fn atom(&self, i: u32) -> Option<BaElem> {
        (i < self.atom_count).then(|| BaElem(1 << i))
    }

    pub fn contains(&self, x: BaElem) -> bool {
        x.0 & !self.top().0 == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = BaElem> {
        (0..=self.top().0).map(BaElem)
    }

    pub fn meet(&self, x: BaElem, y: BaElem) -> BaElem {
        BaElem(x.0 & y.0)
    }

    pub fn join(&self, x: BaElem, y: BaElem) -> BaElem {
        BaElem(x.0 | y.0)
    }

    pub fn compl(&self, x: BaElem) -> BaElem {
        BaElem(!x.0 & self.top().0)
    }

    pub fn imp(&self, x: BaElem, y: BaElem) -> BaElem {
        self.join(self.compl(x), y)
    }

    pub fn iff(&self, x: BaElem, y: BaElem) -> BaElem {
        self.meet(self.imp(x, y), self.imp(y, x))
    }

    pub fn leq(&self, x: BaElem, y: BaElem) -> bool {
        x.0 & !y.0 == 0
    }

    /// Checked evaluation of a Boolean operation on carrier elements.
    pub fn eval(&self, op: BaOp, args: &[BaElem]) -> Result<BaElem, LatticeError> {
        if args.len() != op.arity() {
            return Err(LatticeError::Arity {
                expected: op.arity(),
                found: args.len(),
            });
        }
        if let Some(bad) = args.iter().find(|x| !self.contains(**x)) {
            return Err(LatticeError::NotInCarrier {
                element: bad.0,
                atoms: self.atom_count,
            });
        }
        Ok(match op {
            BaOp::Meet => self.meet(args[0], args[1]),
            BaOp::Join => self.join(args[0], args[1]),
            BaOp::Compl => self.compl(args[0]),
            BaOp::Imp => self.imp(args[0], args[1]),
            BaOp::Iff => self.iff(args[0], args[1]),
        })
    }
}

/// A principal ultrafilter, identified by the atom generating it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ultrafilter {
    pub generator_atom: u32,
}

impl Ultrafilter {
    pub fn contains(&self, x: BaElem) -> bool {
        x.0 & (1 << self.generator_atom) != 0
    }
}

/// All ultrafilters of a finite Boolean algebra, one per atom.
pub fn ultrafilters(ba: &FiniteBooleanAlgebra) -> Vec<Ultrafilter> {
    (0..ba.atom_count())
        .map(|generator_atom| Ultrafilter { generator_atom })
        .collect()
}

/// Characteristic map of `f` into the two-element algebra: top iff `x ∈ f`.
pub fn char_hom(
    ba: &FiniteBooleanAlgebra,
    f: Ultrafilter,
    x: BaElem,
) -> Result<BaElem, LatticeError> {
    if !ba.contains(x) {
        return Err(LatticeError::NotInCarrier {
            element: x.0,
            atoms: ba.atom_count(),
        });
    }
    if f.generator_atom >= ba.atom_count() {
        return Err(LatticeError::ForeignUltrafilter(f.generator_atom));
    }
    Ok(BaElem(f.contains(x) as u32))
}
