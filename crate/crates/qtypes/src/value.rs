//! Extended values for contact orders and type invariants.
//!
//! Truncated computation cannot always distinguish a huge vanishing order
//! from an infinite one, so every order-valued quantity in this crate is an
//! [`ExtendedRational`]: an exact nonnegative rational, infinity, or an
//! honest one-sided witness `AtLeast(b)` produced when a series vanishes up
//! to its truncation bound.

use num::rational::BigRational;
use num::{BigInt, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A contact/type value: finite, infinite, or a truncation-limited lower
/// witness.
///
/// Total order convention: finite values compare by magnitude;
/// `Finite(x) < AtLeast(x)` at equal magnitude (the witness may still grow);
/// `AtLeast(_) < Infinite`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtendedRational {
    Finite(BigRational),
    AtLeast(BigRational),
    Infinite,
}

impl ExtendedRational {
    pub fn finite_int(n: u64) -> Self {
        ExtendedRational::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn finite_ratio(num: i64, den: i64) -> Self {
        ExtendedRational::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn at_least_int(n: u64) -> Self {
        ExtendedRational::AtLeast(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinite)
    }

    /// The finite value, if this is `Finite`.
    pub fn as_ratio(&self) -> Option<&BigRational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// Divide by a positive rational. `AtLeast` bounds scale, preserving the
    /// one-sided information; infinity is absorbing.
    pub fn div_rational(&self, d: &BigRational) -> Self {
        assert!(d > &BigRational::zero(), "division by non-positive scalar");
        match self {
            ExtendedRational::Finite(r) => ExtendedRational::Finite(r / d),
            ExtendedRational::AtLeast(r) => ExtendedRational::AtLeast(r / d),
            ExtendedRational::Infinite => ExtendedRational::Infinite,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        use ExtendedRational::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (AtLeast(a), AtLeast(b))
            | (AtLeast(a), Finite(b))
            | (Finite(a), AtLeast(b)) => AtLeast(a + b),
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    /// Integer power. For `AtLeast(b)` with `b >= 1` the bound is raised
    /// honestly; infinity stays infinite.
    pub fn pow(&self, e: u32) -> Self {
        fn rat_pow(r: &BigRational, e: u32) -> BigRational {
            let mut acc = BigRational::from_integer(BigInt::from(1));
            for _ in 0..e {
                acc *= r;
            }
            acc
        }
        match self {
            ExtendedRational::Finite(r) => ExtendedRational::Finite(rat_pow(r, e)),
            ExtendedRational::AtLeast(r) => ExtendedRational::AtLeast(rat_pow(r, e)),
            ExtendedRational::Infinite => ExtendedRational::Infinite,
        }
    }

    fn tier(&self) -> u8 {
        match self {
            ExtendedRational::Finite(_) => 0,
            ExtendedRational::AtLeast(_) => 1,
            ExtendedRational::Infinite => 2,
        }
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, _) => Ordering::Greater,
            (_, Infinite) => Ordering::Less,
            (a, b) => {
                let (ra, rb) = match (a, b) {
                    (Finite(x) | AtLeast(x), Finite(y) | AtLeast(y)) => (x, y),
                    _ => unreachable!(),
                };
                ra.cmp(rb).then_with(|| a.tier().cmp(&b.tier()))
            }
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => write!(f, "{}", r),
            ExtendedRational::AtLeast(r) => write!(f, ">={}", r),
            ExtendedRational::Infinite => write!(f, "inf"),
        }
    }
}

fn ratio_parts(r: &BigRational) -> (i64, i64) {
    let num = r.numer().to_i64().expect("numerator exceeds i64 in report");
    let den = r
        .denom()
        .to_i64()
        .expect("denominator exceeds i64 in report");
    (num, den)
}

/// Structured-output encoding: every value carries its tag, no bare numbers.
/// `{"kind":"finite","num":3,"den":1}`, `{"kind":"at_least",...}`,
/// `{"kind":"infinite"}`.
impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            ExtendedRational::Finite(r) => {
                let (num, den) = ratio_parts(r);
                map.serialize_entry("kind", "finite")?;
                map.serialize_entry("num", &num)?;
                map.serialize_entry("den", &den)?;
            }
            ExtendedRational::AtLeast(r) => {
                let (num, den) = ratio_parts(r);
                map.serialize_entry("kind", "at_least")?;
                map.serialize_entry("num", &num)?;
                map.serialize_entry("den", &den)?;
            }
            ExtendedRational::Infinite => {
                map.serialize_entry("kind", "infinite")?;
            }
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_convention() {
        let f3 = ExtendedRational::finite_int(3);
        let f5 = ExtendedRational::finite_int(5);
        let al5 = ExtendedRational::at_least_int(5);
        let inf = ExtendedRational::Infinite;
        assert!(f3 < f5);
        assert!(f3 < al5);
        assert!(f5 < al5);
        assert!(al5 < inf);
        assert!(ExtendedRational::at_least_int(4) < f5);
    }

    #[test]
    fn division_keeps_tags() {
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(
            ExtendedRational::finite_int(6).div_rational(&two),
            ExtendedRational::finite_int(3)
        );
        assert_eq!(
            ExtendedRational::at_least_int(64).div_rational(&two),
            ExtendedRational::at_least_int(32)
        );
        assert_eq!(
            ExtendedRational::Infinite.div_rational(&two),
            ExtendedRational::Infinite
        );
    }

    #[test]
    fn powers() {
        assert_eq!(
            ExtendedRational::finite_int(3).pow(2),
            ExtendedRational::finite_int(9)
        );
        assert_eq!(ExtendedRational::Infinite.pow(4), ExtendedRational::Infinite);
    }

    #[test]
    fn json_tags() {
        let v = serde_json::to_string(&ExtendedRational::finite_ratio(3, 2)).unwrap();
        assert_eq!(v, r#"{"kind":"finite","num":3,"den":2}"#);
        let v = serde_json::to_string(&ExtendedRational::Infinite).unwrap();
        assert_eq!(v, r#"{"kind":"infinite"}"#);
    }
}
