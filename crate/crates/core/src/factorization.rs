//! Prime factorization: the correspondence between natural numbers and
//! finitely supported sequences of prime exponents.
//!
//! A number `n` corresponds to the exponent vector `(n_p)` with
//! `n = ∏ p^(n_p)`. Divisibility becomes the componentwise order on
//! exponents, so the whole lattice structure can be read off these vectors.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::natural::Natural;

/// Primes below this bound are kept in a shared table; trial division
/// continues past it with a 6k±1 wheel.
const SIEVE_BOUND: u64 = 1 << 16;

/// Default largest input accepted by [`factorize`]: `2^63 - 1`.
pub const DEFAULT_CEILING: u64 = i64::MAX as u64;

/// All primes `≤ limit`, ascending. Empty for `limit < 2`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = usize::try_from(limit).expect("sieve limit exceeds address space");
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(SIEVE_BOUND))
}

/// Ascending trial divisors: every prime below [`SIEVE_BOUND`], then all
/// numbers `6k ± 1` above it. Non-primes in the tail are harmless, since
/// their prime factors have already been divided out.
struct TrialDivisors {
    index: usize,
    next_wheel: u64,
    wheel_step_two: bool,
}

impl TrialDivisors {
    fn new() -> Self {
        // SIEVE_BOUND = 65536 = 6·10922 + 4, so the first wheel value above
        // it is 6·10923 − 1 = 65537.
        TrialDivisors {
            index: 0,
            next_wheel: 65537,
            wheel_step_two: true,
        }
    }
}

impl Iterator for TrialDivisors {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let table = small_primes();
        if self.index < table.len() {
            self.index += 1;
            return Some(table[self.index - 1]);
        }
        let d = self.next_wheel;
        // Alternate +2 (6k−1 → 6k+1) and +4 (6k+1 → 6k+5).
        let step = if self.wheel_step_two { 2 } else { 4 };
        self.wheel_step_two = !self.wheel_step_two;
        self.next_wheel = d.checked_add(step)?;
        Some(d)
    }
}

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in TrialDivisors::new() {
        if d.saturating_mul(d) > n {
            return true;
        }
        if n.is_multiple_of(d) {
            return n == d;
        }
    }
    true
}

/// Finitely supported map from primes to positive exponents.
///
/// Absent primes have exponent 0; a stored exponent is never 0 and every key
/// is prime.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u64, u32>", into = "BTreeMap<u64, u32>")]
pub struct ExponentVector {
    entries: BTreeMap<u64, u32>,
}

impl ExponentVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from `(prime, exponent)` pairs. Zero exponents are
    /// dropped and repeated primes accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(Error::NotPrime { key: p });
            }
            if e > 0 {
                *entries.entry(p).or_insert(0) += e;
            }
        }
        Ok(ExponentVector { entries })
    }

    /// Exponent of `p`, 0 when `p` is outside the support.
    pub fn get(&self, p: u64) -> u32 {
        self.entries.get(&p).copied().unwrap_or(0)
    }

    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.entries.iter().map(|(&p, &e)| (p, e))
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Componentwise `≤`, i.e. divisibility of the represented numbers.
    pub fn le(&self, other: &ExponentVector) -> bool {
        self.iter().all(|(p, e)| e <= other.get(p))
    }

    /// Componentwise minimum (the gcd of the represented numbers).
    pub fn min(&self, other: &ExponentVector) -> ExponentVector {
        let entries = self
            .iter()
            .filter_map(|(p, e)| {
                let m = e.min(other.get(p));
                (m > 0).then_some((p, m))
            })
            .collect();
        ExponentVector { entries }
    }

    /// Componentwise maximum (the lcm of the represented numbers).
    pub fn max(&self, other: &ExponentVector) -> ExponentVector {
        let mut entries = self.entries.clone();
        for (p, e) in other.iter() {
            let slot = entries.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        ExponentVector { entries }
    }

    fn insert_unchecked(&mut self, p: u64, e: u32) {
        if e > 0 {
            self.entries.insert(p, e);
        }
    }
}

impl TryFrom<BTreeMap<u64, u32>> for ExponentVector {
    type Error = Error;

    fn try_from(map: BTreeMap<u64, u32>) -> Result<Self> {
        ExponentVector::from_pairs(map)
    }
}

impl From<ExponentVector> for BTreeMap<u64, u32> {
    fn from(v: ExponentVector) -> Self {
        v.entries
    }
}

impl std::fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (p, e) in self.iter() {
            if !first {
                f.write_str(" * ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial-division factorizer with an input ceiling.
#[derive(Debug, Clone)]
pub struct Factorizer {
    ceiling: BigUint,
}

impl Default for Factorizer {
    fn default() -> Self {
        Factorizer {
            ceiling: BigUint::from(DEFAULT_CEILING),
        }
    }
}

impl Factorizer {
    pub fn with_ceiling(ceiling: BigUint) -> Self {
        Factorizer { ceiling }
    }

    pub fn ceiling(&self) -> &BigUint {
        &self.ceiling
    }

    pub fn factorize(&self, n: &Natural) -> Result<ExponentVector> {
        let value = n.as_biguint();
        if value > &self.ceiling {
            return Err(Error::FactorizationLimit {
                value: value.to_string(),
                ceiling: self.ceiling.to_string(),
            });
        }
        match value.to_u64() {
            Some(small) => Ok(factorize_u64(small)),
            None => factorize_big(value.clone()).ok_or_else(|| Error::FactorizationLimit {
                value: value.to_string(),
                ceiling: self.ceiling.to_string(),
            }),
        }
    }
}

fn factorize_u64(mut n: u64) -> ExponentVector {
    let mut out = ExponentVector::new();
    for d in TrialDivisors::new() {
        if d.saturating_mul(d) > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        out.insert_unchecked(d, e);
    }
    if n > 1 {
        out.insert_unchecked(n, 1);
    }
    out
}

fn factorize_big(mut n: BigUint) -> Option<ExponentVector> {
    let mut out = ExponentVector::new();
    let mut divisors = TrialDivisors::new();
    while n.to_u64().is_none() {
        let d = divisors.next()?;
        let big_d = BigUint::from(d);
        if &big_d * &big_d > n {
            // The cofactor is a prime above 2^64; keys are u64.
            return None;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&big_d);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        out.insert_unchecked(d, e);
    }
    let rest = n.to_u64().expect("fits after loop");
    // The remaining cofactor has no prime factor below the divisors already
    // tried, so re-running from 2 only costs time, not correctness.
    for (p, e) in factorize_u64(rest).iter() {
        *out.entries.entry(p).or_insert(0) += e;
    }
    Some(out)
}

/// Factorizes `n` with the default ceiling of `2^63 − 1`.
pub fn factorize(n: &Natural) -> Result<ExponentVector> {
    Factorizer::default().factorize(n)
}

/// Inverse of [`factorize`]: the product `∏ p^e`.
pub fn reconstruct(v: &ExponentVector) -> Natural {
    let mut acc = BigUint::one();
    for (p, e) in v.iter() {
        acc *= BigUint::from(p).pow(e);
    }
    Natural::from_nonzero(acc)
}

/// `a | b`, decided by remainder.
pub fn divides(a: &Natural, b: &Natural) -> bool {
    a.divides(b)
}
