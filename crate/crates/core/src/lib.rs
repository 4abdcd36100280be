//! The divisibility lattice of the positive integers, read as a many-valued
//! logic.
//!
//! Meet is the gcd and join the lcm. Every closed interval `Q[y,x]` (all `a`
//! with `y | a | x`) is a finite Heyting algebra whose negation and
//! implication have closed forms on prime exponents; the interval is Boolean
//! exactly when no prime exponent of `x` exceeds that of `y` by more than one.
//!
//! * [`factorization`]: numbers as prime-exponent vectors.
//! * [`lattice`]: gcd/lcm and the projective identity.
//! * [`interval`]: the interval algebras.
//! * [`oracle`]: brute-force search and exhaustive law sweeps.
//! * [`logic`]: formula parsing, evaluation and validity checking.
//! * [`cli`]: the `divlog` command-line surface.

pub mod cli;
pub mod error;
pub mod factorization;
pub mod interval;
pub mod lattice;
pub mod logic;
pub mod natural;
pub mod oracle;

pub use error::{Error, Result};
pub use factorization::{
    divides, factorize, primes_up_to, reconstruct, ExponentVector, Factorizer,
};
pub use interval::{make_interval, Interval, IntervalElement};
pub use lattice::{join, meet, meet_euclid, projective_identity_holds};
pub use logic::{check_valid, eval, parse, Assignment, Formula, Validity};
pub use natural::{nat, Natural};
pub use oracle::{
    oracle_imp, oracle_neg, verify_heyting, verify_lattice_laws, verify_projective, LawReport,
};
