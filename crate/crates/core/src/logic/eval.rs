use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::interval::{Coords, Interval, IntervalElement};
use crate::logic::Formula;

/// Default bound on `|Q|^(number of variables)` for [`check_valid`].
pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

/// Values of the free variables.
pub type Assignment = BTreeMap<String, IntervalElement>;

/// Outcome of an exhaustive validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// First failing assignment, variables by name and values ascending.
    Counterexample {
        assignment: Vec<(String, IntervalElement)>,
        value: IntervalElement,
    },
}

/// The formula with variables resolved to slot indices and literals to
/// coordinates.
enum Compiled {
    Slot(usize),
    Const(Coords),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
    Imp(Box<Compiled>, Box<Compiled>),
    Not(Box<Compiled>),
}

fn compile(q: &Interval, f: &Formula, slots: &[String]) -> Result<Compiled> {
    let both = |l: &Formula, r: &Formula| -> Result<(Box<Compiled>, Box<Compiled>)> {
        Ok((
            Box::new(compile(q, l, slots)?),
            Box::new(compile(q, r, slots)?),
        ))
    };
    Ok(match f {
        Formula::Var(name) => match slots.iter().position(|s| s == name) {
            Some(i) => Compiled::Slot(i),
            None => return Err(Error::UnboundVariable(name.clone())),
        },
        Formula::Lit(n) => Compiled::Const(q.coords(n).ok_or_else(|| Error::NotMember {
            value: n.to_string(),
            bottom: q.bottom().to_string(),
            top: q.top().to_string(),
        })?),
        Formula::Top => Compiled::Const(q.top_coords().to_vec()),
        Formula::Bottom => Compiled::Const(q.bottom_coords().to_vec()),
        Formula::And(l, r) => {
            let (l, r) = both(l, r)?;
            Compiled::And(l, r)
        }
        Formula::Or(l, r) => {
            let (l, r) = both(l, r)?;
            Compiled::Or(l, r)
        }
        Formula::Imp(l, r) => {
            let (l, r) = both(l, r)?;
            Compiled::Imp(l, r)
        }
        Formula::Not(c) => Compiled::Not(Box::new(compile(q, c, slots)?)),
    })
}

impl Compiled {
    fn run(&self, q: &Interval, env: &[&[u32]]) -> Coords {
        match self {
            Compiled::Slot(i) => env[*i].to_vec(),
            Compiled::Const(c) => c.clone(),
            Compiled::And(l, r) => q.meet_coords(&l.run(q, env), &r.run(q, env)),
            Compiled::Or(l, r) => q.join_coords(&l.run(q, env), &r.run(q, env)),
            Compiled::Imp(l, r) => q.imp_coords(&l.run(q, env), &r.run(q, env)),
            Compiled::Not(c) => q.neg_coords(&c.run(q, env)),
        }
    }
}

/// Evaluates `f` in `q`: `&` is gcd, `|` is lcm, `->` and `~` are the
/// interval's implication and pseudocomplement, `T`/`F` its top/bottom.
pub fn eval(q: &Interval, f: &Formula, env: &Assignment) -> Result<IntervalElement> {
    let slots: Vec<String> = f.variables().into_iter().collect();
    let compiled = compile(q, f, &slots)?;
    let mut values = Vec::with_capacity(slots.len());
    for name in &slots {
        let element = env
            .get(name)
            .ok_or_else(|| Error::UnboundVariable(name.clone()))?;
        let coords = q.coords(element.value()).ok_or_else(|| Error::NotMember {
            value: element.to_string(),
            bottom: q.bottom().to_string(),
            top: q.top().to_string(),
        })?;
        values.push(coords);
    }
    let env: Vec<&[u32]> = values.iter().map(Vec::as_slice).collect();
    q.element(&q.value_of(&compiled.run(q, &env)))
}

pub fn check_valid(q: &Interval, f: &Formula) -> Result<Validity> {
    check_valid_with_cap(q, f, DEFAULT_SEARCH_CAP)
}

/// Checks that `f` evaluates to the top under every assignment of members
/// to its variables.
pub fn check_valid_with_cap(q: &Interval, f: &Formula, cap: u64) -> Result<Validity> {
    let slots: Vec<String> = f.variables().into_iter().collect();
    let size = u128::from(q.size())
        .checked_pow(slots.len() as u32)
        .unwrap_or(u128::MAX);
    if size > u128::from(cap) {
        return Err(Error::SearchLimit { size, cap });
    }
    let compiled = compile(q, f, &slots)?;
    let members = if slots.is_empty() {
        Vec::new()
    } else {
        q.members_with_coords(cap)?
    };
    let top = q.top_coords();
    // Odometer over member indices, last variable fastest, so assignments
    // come out in lexicographic order.
    let mut idx = vec![0usize; slots.len()];
    loop {
        let env: Vec<&[u32]> = idx.iter().map(|&i| members[i].1.as_slice()).collect();
        let result = compiled.run(q, &env);
        if result != top {
            let assignment = slots
                .iter()
                .zip(&idx)
                .map(|(name, &i)| (name.clone(), q.element(&members[i].0).expect("member")))
                .collect();
            let value = q.element(&q.value_of(&result))?;
            return Ok(Validity::Counterexample { assignment, value });
        }
        let mut j = slots.len();
        loop {
            if j == 0 {
                return Ok(Validity::Valid);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < members.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse;
    use crate::natural::nat;

    fn q(y: u64, x: u64) -> Interval {
        Interval::new(nat(y), nat(x)).unwrap()
    }

    fn eval_str(iv: &Interval, text: &str) -> Result<u64> {
        eval(iv, &parse(text).unwrap(), &Assignment::new()).map(|e| e.value().to_u64().unwrap())
    }

    #[test]
    fn eval_examples() {
        let q112 = q(1, 12);
        assert_eq!(eval_str(&q112, "~2").unwrap(), 3);
        assert_eq!(eval_str(&q112, "2 | ~2").unwrap(), 6);
        assert_eq!(eval_str(&q(2, 24), "T & F").unwrap(), 2);
        assert_eq!(eval_str(&q(2, 24), "6 -> 4").unwrap(), 8);
    }

    #[test]
    fn eval_errors() {
        let q112 = q(1, 12);
        assert_eq!(
            eval_str(&q112, "p"),
            Err(Error::UnboundVariable("p".into()))
        );
        assert!(matches!(
            eval_str(&q112, "5 | 1"),
            Err(Error::NotMember { .. })
        ));
        let mut env = Assignment::new();
        env.insert("p".into(), q(1, 5).element(&nat(5)).unwrap());
        assert!(matches!(
            eval(&q112, &parse("p").unwrap(), &env),
            Err(Error::NotMember { .. })
        ));
    }

    #[test]
    fn validity_examples() {
        assert_eq!(
            check_valid(&q(1, 12), &parse("p -> p").unwrap()).unwrap(),
            Validity::Valid
        );
        let q14 = q(1, 4);
        let peirce = parse("((p->q)->p)->p").unwrap();
        assert_eq!(
            check_valid(&q14, &peirce).unwrap(),
            Validity::Counterexample {
                assignment: vec![
                    ("p".into(), q14.element(&nat(2)).unwrap()),
                    ("q".into(), q14.element(&nat(1)).unwrap()),
                ],
                value: q14.element(&nat(2)).unwrap(),
            }
        );
        assert_eq!(
            check_valid(&q(6, 12), &parse("p | ~p").unwrap()).unwrap(),
            Validity::Valid
        );
        // Closed formulas are checked once.
        assert_eq!(
            check_valid(&q(1, 12), &parse("2 | ~2").unwrap()).unwrap(),
            Validity::Counterexample {
                assignment: vec![],
                value: q(1, 12).element(&nat(6)).unwrap()
            }
        );
    }

    #[test]
    fn search_cap() {
        let f = parse("p & q & r").unwrap();
        assert_eq!(
            check_valid_with_cap(&q(1, 12), &f, 100),
            Err(Error::SearchLimit {
                size: 216,
                cap: 100
            })
        );
        assert!(check_valid_with_cap(&q(1, 12), &f, 216).is_ok());
    }

    /// Independent reference: evaluation through the public Natural-level
    /// operations rather than coordinates.
    fn reference_eval(iv: &Interval, f: &Formula, env: &Assignment) -> IntervalElement {
        use crate::lattice::{join, meet};
        let rec = |g: &Formula| reference_eval(iv, g, env);
        match f {
            Formula::Var(n) => env[n].clone(),
            Formula::Lit(n) => iv.element(n).unwrap(),
            Formula::Top => iv.top_element(),
            Formula::Bottom => iv.bottom_element(),
            Formula::And(l, r) => iv.element(&meet(rec(l).value(), rec(r).value())).unwrap(),
            Formula::Or(l, r) => iv.element(&join(rec(l).value(), rec(r).value())).unwrap(),
            Formula::Imp(l, r) => iv.imp(&rec(l), &rec(r)).unwrap(),
            Formula::Not(c) => iv.neg(&rec(c)).unwrap(),
        }
    }

    #[test]
    fn matches_reference_and_not_desugaring() {
        let texts = [
            "~(p & ~q) -> (p -> q)",
            "~~p -> p",
            "(p | q) & ~p -> q",
            "~p | ~~p",
        ];
        let iv = q(2, 72);
        let members = iv.enumerate().unwrap();
        for text in texts {
            let f = parse(text).unwrap();
            let g = f.without_not();
            for a in &members {
                for b in &members {
                    let env: Assignment =
                        [("p".to_string(), a.clone()), ("q".to_string(), b.clone())].into();
                    let v = eval(&iv, &f, &env).unwrap();
                    assert_eq!(v, reference_eval(&iv, &f, &env), "{text}");
                    assert_eq!(v, eval(&iv, &g, &env).unwrap(), "{text}");
                }
            }
        }
    }
}
