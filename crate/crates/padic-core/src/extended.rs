use std::cmp::Ordering;
use std::fmt;

/// An integer extended with `+infinity`, the codomain of p-adic valuations.
///
/// `PlusInfinity` compares greater than every finite value; it is the
/// valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtendedInt {
    Finite(i64),
    PlusInfinity,
}

impl ExtendedInt {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedInt::PlusInfinity)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedInt::Finite(v) => Some(v),
            ExtendedInt::PlusInfinity => None,
        }
    }

    /// Addition with the absorbing rule `+infinity + e = +infinity`.
    pub fn saturating_add(self, other: ExtendedInt) -> ExtendedInt {
        match (self, other) {
            (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => ExtendedInt::Finite(a + b),
            _ => ExtendedInt::PlusInfinity,
        }
    }
}

impl PartialOrd for ExtendedInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedInt::PlusInfinity, ExtendedInt::PlusInfinity) => Ordering::Equal,
            (ExtendedInt::PlusInfinity, _) => Ordering::Greater,
            (_, ExtendedInt::PlusInfinity) => Ordering::Less,
            (ExtendedInt::Finite(a), ExtendedInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<i64> for ExtendedInt {
    fn from(v: i64) -> Self {
        ExtendedInt::Finite(v)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(v) => write!(f, "{v}"),
            ExtendedInt::PlusInfinity => write!(f, "+inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_greatest() {
        assert!(ExtendedInt::PlusInfinity > ExtendedInt::Finite(i64::MAX));
        assert!(ExtendedInt::Finite(-3) < ExtendedInt::Finite(0));
        assert_eq!(ExtendedInt::PlusInfinity, ExtendedInt::PlusInfinity);
    }

    #[test]
    fn saturating_add_absorbs() {
        let inf = ExtendedInt::PlusInfinity;
        assert_eq!(inf.saturating_add(ExtendedInt::Finite(5)), inf);
        assert_eq!(
            ExtendedInt::Finite(2).saturating_add(ExtendedInt::Finite(-7)),
            ExtendedInt::Finite(-5)
        );
    }
}
