//! Closed divisibility intervals `Q[y,x] = { a : y | a and a | x }` and their
//! Heyting algebra structure.
//!
//! Every member of `Q[y,x]` divides `x`, so only the primes of `x` can carry
//! a nonzero exponent. An interval therefore fixes a coordinate system, the
//! primes of its top, and each member is a vector of exponents `a_p` with
//! `y_p ≤ a_p ≤ x_p`. In these coordinates:
//!
//! * meet and join are the componentwise min and max;
//! * `¬a` takes `x_p` where `a_p = y_p` and `y_p` where `a_p > y_p`;
//! * `a → b` takes `x_p` where `a_p ≤ b_p` and `b_p` where `a_p > b_p`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::Factorizer;
use crate::natural::Natural;

/// Default enumeration cap.
pub const DEFAULT_ENUM_CAP: u64 = 100_000;

/// Exponent vector of a member, aligned with [`Interval::primes`].
pub type Coords = Vec<u32>;

/// The interval algebra `Q[bottom, top]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    bottom: Natural,
    top: Natural,
    primes: Vec<u64>,
    low: Coords,
    high: Coords,
}

/// A member of some interval.
///
/// Only the value is stored; operations re-check membership against the
/// interval they are given.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalElement(Natural);

impl IntervalElement {
    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_value(self) -> Natural {
        self.0
    }
}

impl fmt::Display for IntervalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for IntervalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{},{}]", self.bottom, self.top)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{},{}]", self.bottom, self.top)
    }
}

/// Builds `Q[bottom, top]`, failing with [`Error::InvalidInterval`] unless
/// `bottom | top`.
pub fn make_interval(bottom: &Natural, top: &Natural) -> Result<Interval> {
    Interval::new(bottom.clone(), top.clone())
}

impl Interval {
    pub fn new(bottom: Natural, top: Natural) -> Result<Self> {
        Self::with_factorizer(bottom, top, &Factorizer::default())
    }

    /// Like [`Interval::new`], factorizing `top` with a custom ceiling.
    pub fn with_factorizer(bottom: Natural, top: Natural, factorizer: &Factorizer) -> Result<Self> {
        if !bottom.divides(&top) {
            return Err(Error::InvalidInterval {
                bottom: bottom.to_string(),
                top: top.to_string(),
            });
        }
        let factored = factorizer.factorize(&top)?;
        let primes: Vec<u64> = factored.support().collect();
        let high: Coords = factored.iter().map(|(_, e)| e).collect();
        let low = exponents_over(&primes, &bottom)
            .ok_or_else(|| Error::Internal(format!("{bottom} | {top} but has a foreign prime")))?;
        Ok(Interval {
            bottom,
            top,
            primes,
            low,
            high,
        })
    }

    pub fn bottom(&self) -> &Natural {
        &self.bottom
    }

    pub fn top(&self) -> &Natural {
        &self.top
    }

    /// The primes of `top`, ascending. Coordinates are aligned with this.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn bottom_coords(&self) -> &[u32] {
        &self.low
    }

    pub fn top_coords(&self) -> &[u32] {
        &self.high
    }

    /// `true` iff `bottom | a` and `a | top`.
    pub fn contains(&self, a: &Natural) -> bool {
        self.coords(a).is_some()
    }

    /// Wraps `a` as a member, or fails with [`Error::NotMember`].
    pub fn element(&self, a: &Natural) -> Result<IntervalElement> {
        if self.contains(a) {
            Ok(IntervalElement(a.clone()))
        } else {
            Err(self.not_member(a))
        }
    }

    pub fn bottom_element(&self) -> IntervalElement {
        IntervalElement(self.bottom.clone())
    }

    pub fn top_element(&self) -> IntervalElement {
        IntervalElement(self.top.clone())
    }

    /// Coordinates of `a`, or `None` when `a` is not a member.
    pub fn coords(&self, a: &Natural) -> Option<Coords> {
        let c = exponents_over(&self.primes, a)?;
        let inside = c
            .iter()
            .zip(self.low.iter().zip(&self.high))
            .all(|(e, (lo, hi))| lo <= e && e <= hi);
        inside.then_some(c)
    }

    fn member_coords(&self, a: &IntervalElement) -> Result<Coords> {
        self.coords(a.value())
            .ok_or_else(|| self.not_member(a.value()))
    }

    /// The member with the given coordinates. Coordinates must lie between
    /// the bottom's and the top's.
    pub fn value_of(&self, coords: &[u32]) -> Natural {
        debug_assert_eq!(coords.len(), self.primes.len());
        if self.top.to_u64().is_some() {
            // Every member divides top, so u64 arithmetic cannot overflow.
            let mut acc = 1u64;
            for (&p, &e) in self.primes.iter().zip(coords) {
                acc *= p.pow(e);
            }
            return Natural::from_nonzero(BigUint::from(acc));
        }
        let mut acc = BigUint::one();
        for (&p, &e) in self.primes.iter().zip(coords) {
            acc *= BigUint::from(p).pow(e);
        }
        Natural::from_nonzero(acc)
    }

    /// Number of members, `∏ (x_p − y_p + 1)`, saturating at `u64::MAX`.
    pub fn size(&self) -> u64 {
        self.low
            .iter()
            .zip(&self.high)
            .try_fold(1u64, |acc, (lo, hi)| {
                acc.checked_mul(u64::from(hi - lo) + 1)
            })
            .unwrap_or(u64::MAX)
    }

    /// All members in ascending numeric order, with the default cap.
    pub fn enumerate(&self) -> Result<Vec<IntervalElement>> {
        self.enumerate_with_cap(DEFAULT_ENUM_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: u64) -> Result<Vec<IntervalElement>> {
        Ok(self
            .members_with_coords(cap)?
            .into_iter()
            .map(|(v, _)| IntervalElement(v))
            .collect())
    }

    /// Members paired with their coordinates, ascending by value.
    pub fn members_with_coords(&self, cap: u64) -> Result<Vec<(Natural, Coords)>> {
        let count = self.size();
        if count > cap {
            return Err(Error::EnumerationLimit { count, cap });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut current = self.low.clone();
        loop {
            out.push((self.value_of(&current), current.clone()));
            // Odometer step over the box [low, high].
            let mut j = 0;
            loop {
                if j == current.len() {
                    out.sort();
                    return Ok(out);
                }
                if current[j] < self.high[j] {
                    current[j] += 1;
                    break;
                }
                current[j] = self.low[j];
                j += 1;
            }
        }
    }

    /// Pseudocomplement `¬a`: the greatest member whose meet with `a` is
    /// the bottom.
    pub fn neg(&self, a: &IntervalElement) -> Result<IntervalElement> {
        let ca = self.member_coords(a)?;
        Ok(IntervalElement(self.value_of(&self.neg_coords(&ca))))
    }

    /// Relative pseudocomplement `a → b`: the greatest member `c` with
    /// `gcd(a, c) | b`.
    pub fn imp(&self, a: &IntervalElement, b: &IntervalElement) -> Result<IntervalElement> {
        let ca = self.member_coords(a)?;
        let cb = self.member_coords(b)?;
        Ok(IntervalElement(self.value_of(&self.imp_coords(&ca, &cb))))
    }

    pub fn meet_coords(&self, a: &[u32], b: &[u32]) -> Coords {
        a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
    }

    pub fn join_coords(&self, a: &[u32], b: &[u32]) -> Coords {
        a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
    }

    pub fn neg_coords(&self, a: &[u32]) -> Coords {
        a.iter()
            .zip(self.low.iter().zip(&self.high))
            .map(|(&e, (&lo, &hi))| if e > lo { lo } else { hi })
            .collect()
    }

    pub fn imp_coords(&self, a: &[u32], b: &[u32]) -> Coords {
        a.iter()
            .zip(b)
            .zip(&self.high)
            .map(|((&ea, &eb), &hi)| if ea > eb { eb } else { hi })
            .collect()
    }

    /// `true` iff every prime gap `x_p − y_p` is at most one.
    pub fn is_boolean(&self) -> bool {
        self.low.iter().zip(&self.high).all(|(lo, hi)| hi - lo <= 1)
    }

    /// Complement in a Boolean interval by the closed form `x · y / a`.
    pub fn boolean_complement(&self, a: &IntervalElement) -> Result<IntervalElement> {
        if !self.is_boolean() {
            return Err(Error::NotBoolean {
                bottom: self.bottom.to_string(),
                top: self.top.to_string(),
            });
        }
        if !self.contains(a.value()) {
            return Err(self.not_member(a.value()));
        }
        let product = self.top.mul(&self.bottom);
        product
            .checked_div_exact(a.value())
            .map(IntervalElement)
            .ok_or_else(|| {
                Error::Internal(format!(
                    "{} does not divide {} in Boolean {self}",
                    a.value(),
                    product
                ))
            })
    }

    fn not_member(&self, a: &Natural) -> Error {
        Error::NotMember {
            value: a.to_string(),
            bottom: self.bottom.to_string(),
            top: self.top.to_string(),
        }
    }
}

/// Exponents of `n` over `primes`, or `None` if `n` has any other prime
/// factor.
fn exponents_over(primes: &[u64], n: &Natural) -> Option<Coords> {
    if let Some(mut m) = n.to_u64() {
        let mut out = Vec::with_capacity(primes.len());
        for &p in primes {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push(e);
        }
        return (m == 1).then_some(out);
    }
    let mut m = n.as_biguint().clone();
    let mut out = Vec::with_capacity(primes.len());
    for &p in primes {
        let bp = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = num_integer::Integer::div_rem(&m, &bp);
            if r != BigUint::ZERO {
                break;
            }
            m = q;
            e += 1;
        }
        out.push(e);
    }
    m.is_one().then_some(out)
}
