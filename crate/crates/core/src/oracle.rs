//! Brute-force semantics and exhaustive law sweeps.
//!
//! The oracle never uses the coordinate formulas of [`crate::interval`]: it
//! enumerates an interval and searches it with gcd/lcm arithmetic only. The
//! sweeps run both routes over every small interval and record any
//! disagreement as a counterexample.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalElement};
use crate::lattice::{join, meet, projective_sides};
use crate::natural::{nat, Natural};

/// A value on one side of a checked law.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Side {
    Bool(bool),
    Number(Natural),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Bool(b) => write!(f, "{b}"),
            Side::Number(n) => write!(f, "{n}"),
        }
    }
}

impl From<Natural> for Side {
    fn from(n: Natural) -> Self {
        Side::Number(n)
    }
}

impl From<bool> for Side {
    fn from(b: bool) -> Self {
        Side::Bool(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    /// Values of the law's variables, in the order of
    /// [`LawReport::variables`].
    pub inputs: Vec<Natural>,
    pub lhs: Side,
    pub rhs: Side,
}

/// Interval left out of a sweep because it exceeds the size cap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkippedInterval {
    pub bottom: Natural,
    pub top: Natural,
    pub size: u64,
}

/// Outcome of checking one law over a finite domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law_name: String,
    pub parameters: String,
    pub variables: Vec<String>,
    pub cases_checked: u64,
    pub skipped: Vec<SkippedInterval>,
    pub counterexamples: Vec<Counterexample>,
}

impl LawReport {
    pub fn new(law_name: &str, parameters: impl Into<String>, variables: &[&str]) -> Self {
        LawReport {
            law_name: law_name.to_string(),
            parameters: parameters.into(),
            variables: variables.iter().map(|v| v.to_string()).collect(),
            cases_checked: 0,
            skipped: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Records one case, adding a counterexample when the sides differ.
    pub fn check(&mut self, inputs: &[&Natural], lhs: impl Into<Side>, rhs: impl Into<Side>) {
        self.cases_checked += 1;
        let (lhs, rhs) = (lhs.into(), rhs.into());
        if lhs != rhs {
            self.counterexamples.push(Counterexample {
                inputs: inputs.iter().map(|&n| n.clone()).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Combines partial reports of the same law over disjoint parts of the
    /// domain. The result does not depend on merge order.
    pub fn merge(mut self, other: LawReport) -> LawReport {
        debug_assert_eq!(self.law_name, other.law_name);
        self.cases_checked += other.cases_checked;
        self.skipped.extend(other.skipped);
        self.counterexamples.extend(other.counterexamples);
        self.skipped.sort();
        self.counterexamples.sort();
        self
    }
}

fn merge_all(parts: Vec<Vec<LawReport>>) -> Vec<LawReport> {
    let mut iter = parts.into_iter();
    let Some(first) = iter.next() else {
        return Vec::new();
    };
    iter.fold(first, |acc, part| {
        acc.into_iter().zip(part).map(|(a, b)| a.merge(b)).collect()
    })
}

/// Join of all members satisfying `qualifies`, checked to qualify itself:
/// this both finds the greatest qualifying member and proves it exists.
fn greatest_qualifying(
    q: &Interval,
    members: &[IntervalElement],
    qualifies: impl Fn(&Natural) -> bool,
) -> Result<IntervalElement> {
    let folded = members
        .iter()
        .map(IntervalElement::value)
        .filter(|c| qualifies(c))
        .fold(None::<Natural>, |acc, c| {
            Some(match acc {
                None => c.clone(),
                Some(m) => join(&m, c),
            })
        });
    let no_max = || Error::NoGreatestElement {
        bottom: q.bottom().to_string(),
        top: q.top().to_string(),
    };
    let candidate = folded.ok_or_else(no_max)?;
    if qualifies(&candidate) && q.contains(&candidate) {
        q.element(&candidate)
    } else {
        Err(no_max())
    }
}

fn require_member(q: &Interval, a: &IntervalElement) -> Result<()> {
    q.element(a.value()).map(|_| ())
}

/// `¬a` by exhaustive search: the greatest `c` in `q` with `a ∧ c = bottom`.
pub fn oracle_neg(q: &Interval, a: &IntervalElement) -> Result<IntervalElement> {
    oracle_neg_with_cap(q, a, crate::interval::DEFAULT_ENUM_CAP)
}

pub fn oracle_neg_with_cap(q: &Interval, a: &IntervalElement, cap: u64) -> Result<IntervalElement> {
    require_member(q, a)?;
    let members = q.enumerate_with_cap(cap)?;
    neg_by_search(q, &members, a)
}

/// `a → b` by exhaustive search: the greatest `c` in `q` with `(a ∧ c) | b`.
pub fn oracle_imp(
    q: &Interval,
    a: &IntervalElement,
    b: &IntervalElement,
) -> Result<IntervalElement> {
    oracle_imp_with_cap(q, a, b, crate::interval::DEFAULT_ENUM_CAP)
}

pub fn oracle_imp_with_cap(
    q: &Interval,
    a: &IntervalElement,
    b: &IntervalElement,
    cap: u64,
) -> Result<IntervalElement> {
    require_member(q, a)?;
    require_member(q, b)?;
    let members = q.enumerate_with_cap(cap)?;
    imp_by_search(q, &members, a, b)
}

fn neg_by_search(
    q: &Interval,
    members: &[IntervalElement],
    a: &IntervalElement,
) -> Result<IntervalElement> {
    greatest_qualifying(q, members, |c| &meet(a.value(), c) == q.bottom())
}

fn imp_by_search(
    q: &Interval,
    members: &[IntervalElement],
    a: &IntervalElement,
    b: &IntervalElement,
) -> Result<IntervalElement> {
    greatest_qualifying(q, members, |c| meet(a.value(), c).divides(b.value()))
}

fn naturals(max: u64) -> Vec<Natural> {
    (1..=max).map(nat).collect()
}

/// Idempotency, commutativity, associativity and mutual distributivity of
/// gcd/lcm over `[1, max]`.
///
/// Each law is two equations (one for meet, one for join) and every
/// equation instance counts as a case: `2·max`, `2·max²`, `2·max³` and
/// `2·max³` cases respectively.
pub fn verify_lattice_laws(max: u64) -> Vec<LawReport> {
    let params = format!("[1,{max}]");
    let values = naturals(max);
    let blank = || {
        vec![
            LawReport::new("idempotency", params.clone(), &["a"]),
            LawReport::new("commutativity", params.clone(), &["a", "b"]),
            LawReport::new("associativity", params.clone(), &["a", "b", "c"]),
            LawReport::new("mutual_distributivity", params.clone(), &["a", "b", "c"]),
        ]
    };
    let parts: Vec<Vec<LawReport>> = values
        .par_iter()
        .map(|a| {
            let mut r = blank();
            r[0].check(&[a], meet(a, a), a.clone());
            r[0].check(&[a], join(a, a), a.clone());
            for b in &values {
                r[1].check(&[a, b], meet(a, b), meet(b, a));
                r[1].check(&[a, b], join(a, b), join(b, a));
                let ab_meet = meet(a, b);
                let ab_join = join(a, b);
                for c in &values {
                    r[2].check(&[a, b, c], meet(&ab_meet, c), meet(a, &meet(b, c)));
                    r[2].check(&[a, b, c], join(&ab_join, c), join(a, &join(b, c)));
                    r[3].check(
                        &[a, b, c],
                        meet(a, &join(b, c)),
                        join(&ab_meet, &meet(a, c)),
                    );
                    r[3].check(
                        &[a, b, c],
                        join(a, &meet(b, c)),
                        meet(&ab_join, &join(a, c)),
                    );
                }
            }
            r
        })
        .collect();
    if parts.is_empty() {
        return blank();
    }
    merge_all(parts)
}

/// `x ∧ (z ∨ y) = (x ∧ z) ∨ y` for all `(x, y, z)` in `[1, max]³` with
/// `y | x`.
pub fn verify_projective(max: u64) -> LawReport {
    let params = format!("[1,{max}]");
    let values = naturals(max);
    let blank = || LawReport::new("projective_identity", params.clone(), &["x", "y", "z"]);
    values
        .par_iter()
        .map(|x| {
            let mut r = blank();
            for y in values.iter().filter(|y| y.divides(x)) {
                for z in &values {
                    let (lhs, rhs) = projective_sides(x, y, z);
                    r.check(&[x, y, z], lhs, rhs);
                }
            }
            r
        })
        .reduce(blank, LawReport::merge)
}

/// Every interval `Q[y,x]` with `x ≤ top_max`, ordered by top then bottom.
pub fn intervals_up_to(top_max: u64) -> Vec<Interval> {
    (1..=top_max)
        .flat_map(|x| {
            (1..=x)
                .filter(move |y| x % y == 0)
                .map(move |y| Interval::new(nat(y), nat(x)).expect("y | x"))
        })
        .collect()
}

/// Names of the reports produced by [`verify_heyting`], in order.
pub const HEYTING_LAWS: [&str; 8] = [
    "neg_matches_oracle",
    "imp_matches_oracle",
    "residuation",
    "neg_is_imp_to_bottom",
    "triple_negation",
    "boolean_iff_excluded_middle",
    "boolean_iff_complement_formula",
    "imp_bottom_independence",
];

/// Checks the coordinate formulas for `¬` and `→` against the oracle on
/// every interval with top `≤ top_max` and at most `size_cap` members,
/// together with residuation, the Boolean characterizations, and
/// independence of `→` from the bottom.
pub fn verify_heyting(top_max: u64, size_cap: u64) -> Vec<LawReport> {
    let tops: Vec<u64> = (1..=top_max).collect();
    verify_heyting_over(
        &tops,
        size_cap,
        &format!("top<={top_max}, size<={size_cap}"),
    )
}

/// [`verify_heyting`] restricted to the given tops.
pub fn verify_heyting_over(tops: &[u64], size_cap: u64, params: &str) -> Vec<LawReport> {
    let vars: [&[&str]; 8] = [
        &["bottom", "top", "a"],
        &["bottom", "top", "a", "b"],
        &["bottom", "top", "a", "b", "c"],
        &["bottom", "top", "a"],
        &["bottom", "top", "a"],
        &["bottom", "top"],
        &["bottom", "top"],
        &["coarse_bottom", "bottom", "top", "a", "b"],
    ];
    let blank = || -> Vec<LawReport> {
        HEYTING_LAWS
            .iter()
            .zip(vars)
            .map(|(name, v)| LawReport::new(name, params, v))
            .collect()
    };
    let parts: Vec<Vec<LawReport>> = tops
        .par_iter()
        .map(|&x| {
            let mut reports = blank();
            let intervals: Vec<Interval> = (1..=x)
                .filter(|y| x % y == 0)
                .map(|y| Interval::new(nat(y), nat(x)).expect("y | x"))
                .collect();
            for q in &intervals {
                check_interval(q, &intervals, size_cap, &mut reports);
            }
            reports
        })
        .collect();
    if parts.is_empty() {
        return blank();
    }
    merge_all(parts)
}

fn check_interval(q: &Interval, same_top: &[Interval], size_cap: u64, r: &mut [LawReport]) {
    let (y, x) = (q.bottom(), q.top());
    let members = match q.enumerate_with_cap(size_cap) {
        Ok(m) => m,
        Err(_) => {
            let skipped = SkippedInterval {
                bottom: y.clone(),
                top: x.clone(),
                size: q.size(),
            };
            for report in r.iter_mut() {
                report.skipped.push(skipped.clone());
            }
            return;
        }
    };
    let values: Vec<&Natural> = members.iter().map(IntervalElement::value).collect();
    let negs: Vec<IntervalElement> = members.iter().map(|a| q.neg(a).expect("member")).collect();
    let imps: Vec<Vec<IntervalElement>> = members
        .iter()
        .map(|a| {
            members
                .iter()
                .map(|b| q.imp(a, b).expect("members"))
                .collect()
        })
        .collect();

    let oracle_value = |res: Result<IntervalElement>| -> Side {
        match res {
            Ok(e) => Side::Number(e.into_value()),
            // Surfaces as a mismatch against the formula result.
            Err(_) => Side::Bool(false),
        }
    };

    let mut all_excluded_middle = true;
    let mut all_complement_formula = true;
    let product = x.mul(y);
    for (i, a) in members.iter().enumerate() {
        let na = &negs[i];
        r[0].check(
            &[y, x, a.value()],
            na.value().clone(),
            oracle_value(neg_by_search(q, &members, a)),
        );
        r[3].check(
            &[y, x, a.value()],
            na.value().clone(),
            imps[i][0].value().clone(),
        );
        let nnn = q.neg(&q.neg(na).expect("member")).expect("member");
        r[4].check(&[y, x, a.value()], nnn.into_value(), na.value().clone());

        if &join(a.value(), na.value()) != x {
            all_excluded_middle = false;
        }
        if product.checked_div_exact(a.value()).as_ref() != Some(na.value()) {
            all_complement_formula = false;
        }

        for (j, b) in members.iter().enumerate() {
            r[1].check(
                &[y, x, a.value(), b.value()],
                imps[i][j].value().clone(),
                oracle_value(imp_by_search(q, &members, a, b)),
            );
            let ab = meet(a.value(), b.value());
            for (k, c) in values.iter().enumerate() {
                let lhs = ab.divides(c);
                let rhs = a.value().divides(imps[j][k].value());
                r[2].check(&[y, x, a.value(), b.value(), c], lhs, rhs);
            }
        }
    }
    r[5].check(&[y, x], q.is_boolean(), all_excluded_middle);
    r[6].check(&[y, x], q.is_boolean(), all_complement_formula);

    // Implication in every coarser interval Q[y',x] (y' | y), searched by
    // the oracle, agrees with the formula in Q[y,x].
    for coarse in same_top.iter().filter(|c| c.bottom().divides(y)) {
        let Ok(coarse_members) = coarse.enumerate_with_cap(size_cap) else {
            continue;
        };
        for (i, a) in members.iter().enumerate() {
            for (j, b) in members.iter().enumerate() {
                r[7].check(
                    &[coarse.bottom(), y, x, a.value(), b.value()],
                    imps[i][j].value().clone(),
                    oracle_value(imp_by_search(coarse, &coarse_members, a, b)),
                );
            }
        }
    }
}
