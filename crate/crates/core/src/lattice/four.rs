use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// One of the four Belnap–Dunn truth values.
///
/// The discriminants fix the canonical carrier order `1, b, n, 0` used by
/// every enumeration in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
#[repr(u8)]
pub enum TruthValue {
    One = 0,
    B = 1,
    N = 2,
    Zero = 3,
}

use TruthValue::*;

/// Which lattice bound to take in [`bound4`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Inf,
    Sup,
}

impl TruthValue {
    pub const ALL: [TruthValue; 4] = [One, B, N, Zero];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<TruthValue> {
        Self::ALL.get(i).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            One => "1",
            B => "b",
            N => "n",
            Zero => "0",
        }
    }

    /// Truth order: `0 ≤ b, n ≤ 1` with `b` and `n` incomparable.
    pub fn leq(self, other: TruthValue) -> bool {
        self == other || self == Zero || other == One
    }

    pub fn meet(self, other: TruthValue) -> TruthValue {
        match (self, other) {
            (x, y) if x == y => x,
            (One, y) | (y, One) => y,
            _ => Zero,
        }
    }

    pub fn join(self, other: TruthValue) -> TruthValue {
        match (self, other) {
            (x, y) if x == y => x,
            (Zero, y) | (y, Zero) => y,
            _ => One,
        }
    }

    /// De Morgan negation: swaps 1 and 0, fixes b and n.
    pub fn neg(self) -> TruthValue {
        match self {
            One => Zero,
            Zero => One,
            x => x,
        }
    }

    /// The BD2 implication: `x → y` is `y` when `x` is designated, otherwise
    /// `1` except that `n → b` and `n → 0` give `b`.
    pub fn imp(self, other: TruthValue) -> TruthValue {
        match (self, other) {
            (One | B, y) => y,
            (N, B | Zero) => B,
            _ => One,
        }
    }

    /// The weak consistency operator `⊙`.
    pub fn weak_consistency(self) -> TruthValue {
        match self {
            One | Zero => One,
            B => Zero,
            N => B,
        }
    }

    pub fn is_designated(self) -> bool {
        matches!(self, One | B)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TruthValue {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" => Ok(One),
            "b" => Ok(B),
            "n" => Ok(N),
            "0" => Ok(Zero),
            other => Err(LatticeError::UnknownValue(other.to_string())),
        }
    }
}

impl From<TruthValue> for String {
    fn from(v: TruthValue) -> String {
        v.name().to_string()
    }
}

impl TryFrom<String> for TruthValue {
    type Error = LatticeError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Infimum or supremum of a nonempty collection of truth values.
pub fn bound4<I>(kind: BoundKind, values: I) -> Result<TruthValue, LatticeError>
where
    I: IntoIterator<Item = TruthValue>,
{
    let mut iter = values.into_iter();
    let first = iter.next().ok_or(LatticeError::EmptyBound)?;
    Ok(match kind {
        BoundKind::Inf => iter.fold(first, TruthValue::meet),
        BoundKind::Sup => iter.fold(first, TruthValue::join),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_of_b_and_n() {
        assert_eq!(bound4(BoundKind::Inf, [B, N]).unwrap(), Zero);
        assert_eq!(bound4(BoundKind::Sup, [B, N]).unwrap(), One);
        assert_eq!(bound4(BoundKind::Inf, [One]).unwrap(), One);
    }

    #[test]
    fn empty_bound_is_an_error() {
        assert_eq!(bound4(BoundKind::Inf, []), Err(LatticeError::EmptyBound));
        assert_eq!(bound4(BoundKind::Sup, []), Err(LatticeError::EmptyBound));
    }

    #[test]
    fn meet_and_join_agree_with_order() {
        for x in TruthValue::ALL {
            for y in TruthValue::ALL {
                let m = x.meet(y);
                let j = x.join(y);
                assert!(m.leq(x) && m.leq(y));
                assert!(x.leq(j) && y.leq(j));
                for z in TruthValue::ALL {
                    if z.leq(x) && z.leq(y) {
                        assert!(z.leq(m));
                    }
                    if x.leq(z) && y.leq(z) {
                        assert!(j.leq(z));
                    }
                }
            }
        }
        assert!(!B.leq(N) && !N.leq(B));
    }

    #[test]
    fn de_morgan_duality_for_all_nonempty_subsets() {
        for mask in 1u8..16 {
            let set: Vec<_> = TruthValue::ALL
                .into_iter()
                .filter(|v| mask & (1 << v.index()) != 0)
                .collect();
            let negs: Vec<_> = set.iter().map(|v| v.neg()).collect();
            let inf = bound4(BoundKind::Inf, set.clone()).unwrap();
            let sup = bound4(BoundKind::Sup, set.clone()).unwrap();
            assert_eq!(inf.neg(), bound4(BoundKind::Sup, negs.clone()).unwrap());
            assert_eq!(sup.neg(), bound4(BoundKind::Inf, negs).unwrap());
        }
    }

    #[test]
    fn names_round_trip() {
        for v in TruthValue::ALL {
            assert_eq!(v.name().parse::<TruthValue>().unwrap(), v);
            assert_eq!(TruthValue::from_index(v.index()), Some(v));
        }
        assert!("x".parse::<TruthValue>().is_err());
    }
}
