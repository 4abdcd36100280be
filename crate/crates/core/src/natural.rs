//! Positive integers of arbitrary size.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A natural number `n ≥ 1`.
///
/// Zero is rejected at construction with [`Error::ZeroNotNatural`]; it only
/// ever appears as an exponent, never as a lattice element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(BigUint);

impl Natural {
    pub fn new(value: BigUint) -> Result<Self> {
        if value.is_zero() {
            Err(Error::ZeroNotNatural)
        } else {
            Ok(Natural(value))
        }
    }

    pub fn one() -> Self {
        Natural(BigUint::one())
    }

    /// Callers must guarantee `value != 0`.
    pub(crate) fn from_nonzero(value: BigUint) -> Self {
        debug_assert!(!value.is_zero());
        Natural(value)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Natural) -> bool {
        (&other.0 % &self.0).is_zero()
    }

    pub(crate) fn mul(&self, other: &Natural) -> Natural {
        Natural(&self.0 * &other.0)
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    pub(crate) fn checked_div_exact(&self, divisor: &Natural) -> Option<Natural> {
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(Natural(q))
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Natural::new(BigUint::from(value))
    }
}

impl TryFrom<BigUint> for Natural {
    type Error = Error;

    fn try_from(value: BigUint) -> Result<Self> {
        Natural::new(value)
    }
}

impl From<std::num::NonZeroU64> for Natural {
    fn from(value: std::num::NonZeroU64) -> Self {
        Natural(BigUint::from(value.get()))
    }
}

impl FromStr for Natural {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidNatural {
                input: s.to_string(),
            });
        }
        let value = BigUint::from_str(trimmed).map_err(|_| Error::InvalidNatural {
            input: s.to_string(),
        })?;
        Natural::new(value)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

// Values that fit in a u64 serialize as plain numbers, larger ones as
// decimal strings. Deserialization accepts both.
impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => serializer.serialize_u64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Natural {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct NaturalVisitor;

        impl Visitor<'_> for NaturalVisitor {
            type Value = Natural;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive integer or its decimal string")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Natural, E> {
                Natural::try_from(v).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Natural, E> {
                let v = u64::try_from(v).map_err(E::custom)?;
                Natural::try_from(v).map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Natural, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(NaturalVisitor)
    }
}

/// Shorthand used throughout tests and sweeps. Panics on 0.
pub fn nat(value: u64) -> Natural {
    Natural::try_from(value).expect("nat(0)")
}
