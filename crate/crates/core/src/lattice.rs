//! The divisibility lattice on the positive integers: meet is the gcd, join
//! the lcm.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::natural::Natural;

/// Greatest common divisor.
pub fn meet(a: &Natural, b: &Natural) -> Natural {
    if let (Some(x), Some(y)) = (a.to_u64(), b.to_u64()) {
        return Natural::from_nonzero(BigUint::from(x.gcd(&y)));
    }
    Natural::from_nonzero(a.as_biguint().gcd(b.as_biguint()))
}

/// Least common multiple, `a · b / gcd(a, b)`.
pub fn join(a: &Natural, b: &Natural) -> Natural {
    if let (Some(x), Some(y)) = (a.to_u64(), b.to_u64()) {
        let g = x.gcd(&y);
        if let Some(l) = (x / g).checked_mul(y) {
            return Natural::from_nonzero(BigUint::from(l));
        }
    }
    let g = a.as_biguint().gcd(b.as_biguint());
    Natural::from_nonzero(a.as_biguint() / g * b.as_biguint())
}

/// Greatest common divisor by the remainder form of Euclid's algorithm.
///
/// Kept separate from [`meet`] (binary gcd) so each can check the other.
pub fn meet_euclid(a: &Natural, b: &Natural) -> Natural {
    let mut x = a.as_biguint().clone();
    let mut y = b.as_biguint().clone();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    Natural::from_nonzero(x)
}

/// Checks `x ∧ (z ∨ y) = (x ∧ z) ∨ y`, which requires `y | x`.
pub fn projective_identity_holds(x: &Natural, y: &Natural, z: &Natural) -> Result<bool> {
    if !y.divides(x) {
        return Err(Error::PreconditionViolated(format!(
            "{y} does not divide {x}"
        )));
    }
    let (lhs, rhs) = projective_sides(x, y, z);
    Ok(lhs == rhs)
}

/// Both sides of the projective identity, `(x ∧ (z ∨ y), (x ∧ z) ∨ y)`.
pub fn projective_sides(x: &Natural, y: &Natural, z: &Natural) -> (Natural, Natural) {
    let lhs = meet(x, &join(z, y));
    let rhs = join(&meet(x, z), y);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::factorize;
    use crate::natural::nat;
    use proptest::prelude::*;

    #[test]
    fn meet_join_examples() {
        assert_eq!(meet(&nat(12), &nat(18)), nat(6));
        assert_eq!(join(&nat(12), &nat(18)), nat(36));
        for a in 1..40 {
            assert_eq!(meet(&nat(a), &nat(a)), nat(a));
            assert_eq!(join(&nat(a), &nat(a)), nat(a));
            assert_eq!(meet(&nat(1), &nat(a)), nat(1));
            assert_eq!(join(&nat(1), &nat(a)), nat(a));
        }
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(meet_euclid(&nat(48), &nat(36)), nat(12));
        assert_eq!(meet_euclid(&nat(7), &nat(13)), nat(1));
        assert_eq!(meet_euclid(&nat(91), &nat(91)), nat(91));
    }

    #[test]
    fn projective_examples() {
        assert_eq!(
            projective_sides(&nat(24), &nat(2), &nat(9)),
            (nat(6), nat(6))
        );
        assert!(projective_identity_holds(&nat(24), &nat(2), &nat(9)).unwrap());
        assert!(projective_identity_holds(&nat(30), &nat(30), &nat(7)).unwrap());
        assert!(projective_identity_holds(&nat(30), &nat(1), &nat(12)).unwrap());
        assert!(matches!(
            projective_identity_holds(&nat(24), &nat(5), &nat(1)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn big_operands() {
        let a: Natural = "340282366920938463463374607431768211456".parse().unwrap(); // 2^128
        let b: Natural = "12".parse().unwrap();
        assert_eq!(meet(&a, &b), nat(4));
        assert_eq!(meet_euclid(&a, &b), nat(4));
        assert_eq!(join(&a, &b), a.mul(&nat(3)));
        // u64 operands whose lcm overflows u64
        let p = nat(u64::MAX);
        let q = nat(u64::MAX - 1);
        assert_eq!(join(&p, &q), p.mul(&q));
    }

    proptest! {
        #[test]
        fn exponentwise_agreement(a in 1u64..5000, b in 1u64..5000) {
            let (na, nb) = (nat(a), nat(b));
            let (fa, fb) = (factorize(&na).unwrap(), factorize(&nb).unwrap());
            prop_assert_eq!(factorize(&meet(&na, &nb)).unwrap(), fa.min(&fb));
            prop_assert_eq!(factorize(&join(&na, &nb)).unwrap(), fa.max(&fb));
        }

        #[test]
        fn absorption(a in 1u64..100_000, b in 1u64..100_000) {
            let (na, nb) = (nat(a), nat(b));
            prop_assert_eq!(meet(&na, &join(&na, &nb)), na.clone());
            prop_assert_eq!(join(&na, &meet(&na, &nb)), na);
        }
    }
}
