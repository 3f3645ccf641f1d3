//! The real line extended by `±∞`.
//!
//! Divergences leave the reals whenever a support condition fails, so every
//! divergence-valued quantity in the crate is an [`ExtendedReal`].  The type
//! never holds `NaN`: construction from a float rejects it, and the one
//! indeterminate form that can arise in this crate (`∞ − ∞`) is handled
//! explicitly by the callers that can meet it.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A value in `[−∞, +∞]`.
#[derive(Clone, Copy, Debug)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

pub use ExtendedReal::{NegInf, PosInf};

impl ExtendedReal {
    pub const ZERO: ExtendedReal = ExtendedReal::Finite(0.0);

    /// Converts a float, mapping the IEEE infinities to the infinite variants.
    ///
    /// # Panics
    /// Panics on `NaN`.
    pub fn from_f64(x: f64) -> Self {
        assert!(!x.is_nan(), "ExtendedReal cannot hold NaN");
        if x == f64::INFINITY {
            PosInf
        } else if x == f64::NEG_INFINITY {
            NegInf
        } else {
            ExtendedReal::Finite(x)
        }
    }

    /// Natural logarithm of a non-negative float: `log 0 = −∞`, `log ∞ = ∞`.
    pub fn ln_of(x: f64) -> Self {
        assert!(x >= 0.0, "logarithm of a negative number");
        Self::from_f64(x.ln())
    }

    /// The quotient `a / b` of non-negative numbers under the conventions
    /// `0/0 = 0` and `a/0 = ∞`.
    pub fn ratio(a: f64, b: f64) -> Self {
        if b == 0.0 {
            if a == 0.0 {
                Self::ZERO
            } else {
                PosInf
            }
        } else {
            Self::from_f64(a / b)
        }
    }

    /// Logarithm of an extended value: `log 0 = −∞`, `log ∞ = ∞`.
    pub fn ln(self) -> Self {
        match self {
            PosInf => PosInf,
            NegInf => panic!("logarithm of −∞"),
            ExtendedReal::Finite(x) => Self::ln_of(x),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// The value as an IEEE float (infinities map to `±f64::INFINITY`).
    pub fn to_f64(self) -> f64 {
        match self {
            NegInf => f64::NEG_INFINITY,
            PosInf => f64::INFINITY,
            ExtendedReal::Finite(x) => x,
        }
    }

    /// Multiplication by a finite real, with `0 · (±∞) = 0`.
    pub fn scale(self, c: f64) -> Self {
        assert!(c.is_finite(), "scale factor must be finite");
        match self {
            ExtendedReal::Finite(x) => ExtendedReal::Finite(x * c),
            _ if c == 0.0 => Self::ZERO,
            PosInf if c > 0.0 => PosInf,
            NegInf if c < 0.0 => PosInf,
            _ => NegInf,
        }
    }

    /// Sum that reports the indeterminate form `∞ + (−∞)` as `None`.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        match (self, other) {
            (PosInf, NegInf) | (NegInf, PosInf) => None,
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (NegInf, _) | (_, NegInf) => Some(NegInf),
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => Some(Self::from_f64(a + b)),
        }
    }

    pub fn checked_sub(self, other: Self) -> Option<Self> {
        self.checked_add(-other)
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// `|a − b| ≤ tol` for finite values; infinities must match exactly.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        match (self, other) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => (a - b).abs() <= tol,
            (PosInf, PosInf) | (NegInf, NegInf) => true,
            _ => false,
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl PartialEq for ExtendedReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedReal::Finite;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            // Treat −0.0 and 0.0 as equal, unlike `total_cmp`.
            (Finite(a), Finite(b)) => a.partial_cmp(b).expect("NaN in ExtendedReal"),
        }
    }
}

impl Neg for ExtendedReal {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            NegInf => PosInf,
            PosInf => NegInf,
            ExtendedReal::Finite(x) => ExtendedReal::Finite(-x),
        }
    }
}

impl Add for ExtendedReal {
    type Output = Self;
    /// # Panics
    /// Panics on the indeterminate form `∞ + (−∞)`; use
    /// [`ExtendedReal::checked_add`] where it can occur.
    fn add(self, other: Self) -> Self {
        self.checked_add(other)
            .expect("indeterminate form ∞ − ∞ in ExtendedReal arithmetic")
    }
}

impl Sub for ExtendedReal {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl Add<f64> for ExtendedReal {
    type Output = Self;
    fn add(self, other: f64) -> Self {
        self + ExtendedReal::from_f64(other)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => write!(f, "-inf"),
            PosInf => write!(f, "inf"),
            ExtendedReal::Finite(x) => write!(f, "{x}"),
        }
    }
}

/// Finite values serialize as JSON numbers, infinities as the strings
/// `"inf"` and `"-inf"`.
impl Serialize for ExtendedReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedReal::Finite(x) => s.serialize_f64(*x),
            PosInf => s.serialize_str("inf"),
            NegInf => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(ExtendedReal::Finite(x)),
            Repr::Text(t) => match t.as_str() {
                "inf" | "+inf" => Ok(PosInf),
                "-inf" => Ok(NegInf),
                other => Err(serde::de::Error::custom(format!(
                    "expected a number, \"inf\" or \"-inf\", found {other:?}"
                ))),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtendedReal::Finite;

    #[test]
    fn operation_table() {
        let values = [NegInf, Finite(-1.5), Finite(0.0), Finite(2.0), PosInf];
        for &a in &values {
            for &b in &values {
                let sum = a.checked_add(b);
                match (a, b) {
                    (PosInf, NegInf) | (NegInf, PosInf) => assert!(sum.is_none()),
                    (PosInf, _) | (_, PosInf) => assert_eq!(sum, Some(PosInf)),
                    (NegInf, _) | (_, NegInf) => assert_eq!(sum, Some(NegInf)),
                    (Finite(x), Finite(y)) => assert_eq!(sum, Some(Finite(x + y))),
                }
            }
        }
        assert_eq!(Finite(3.0) + PosInf, PosInf);
        assert_eq!(Finite(3.0) - PosInf, NegInf);
        assert_eq!(ExtendedReal::ln_of(0.0), NegInf);
        assert_eq!(PosInf.ln(), PosInf);
        assert_eq!(ExtendedReal::ratio(0.0, 0.0), Finite(0.0));
        assert_eq!(ExtendedReal::ratio(1.0, 0.0), PosInf);
        assert_eq!(PosInf.scale(-2.0), NegInf);
        assert_eq!(NegInf.scale(0.0), Finite(0.0));
    }

    #[test]
    fn total_order() {
        let mut v = vec![PosInf, Finite(1.0), NegInf, Finite(-3.0), Finite(0.0)];
        v.sort();
        assert_eq!(v, vec![NegInf, Finite(-3.0), Finite(0.0), Finite(1.0), PosInf]);
        assert_eq!(Finite(0.0), Finite(-0.0));
    }

    #[test]
    fn json_round_trip() {
        for x in [NegInf, Finite(0.25), PosInf] {
            let s = serde_json::to_string(&x).unwrap();
            let back: ExtendedReal = serde_json::from_str(&s).unwrap();
            assert_eq!(back, x);
        }
        assert_eq!(serde_json::to_string(&PosInf).unwrap(), "\"inf\"");
    }
}
