//! Propositional formulas evaluated in an interval algebra.
//!
//! Surface syntax (ASCII), loosest binding first:
//!
//! ```text
//! formula := or ('->' formula)?        right associative
//! or      := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := '~' unary | atom
//! atom    := identifier | integer | 'T' | 'F' | '(' formula ')'
//! ```

mod eval;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

use crate::natural::Natural;

pub use eval::{check_valid, check_valid_with_cap, eval, Assignment, Validity, DEFAULT_SEARCH_CAP};
pub use parser::parse;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Lit(Natural),
    Top,
    Bottom,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    /// Distinct variable names, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Lit(_) | Formula::Top | Formula::Bottom => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Formula::Not(c) => c.collect_vars(out),
        }
    }

    /// Rewrites every `~p` as `p -> F`.
    pub fn without_not(&self) -> Formula {
        match self {
            Formula::Var(_) | Formula::Lit(_) | Formula::Top | Formula::Bottom => self.clone(),
            Formula::And(l, r) => Formula::and(l.without_not(), r.without_not()),
            Formula::Or(l, r) => Formula::or(l.without_not(), r.without_not()),
            Formula::Imp(l, r) => Formula::imp(l.without_not(), r.without_not()),
            Formula::Not(c) => Formula::imp(c.without_not(), Formula::Bottom),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            _ => 5,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Prints with the minimal parentheses that parse back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Lit(n) => write!(f, "{n}"),
            Formula::Top => f.write_str("T"),
            Formula::Bottom => f.write_str("F"),
            Formula::Not(c) => {
                f.write_str("~")?;
                write_operand(f, c, c.precedence() < 4)
            }
            Formula::Imp(l, r) => {
                write_operand(f, l, l.precedence() <= 1)?;
                f.write_str(" -> ")?;
                write_operand(f, r, r.precedence() < 1)
            }
            Formula::Or(l, r) | Formula::And(l, r) => {
                let (prec, op) = if matches!(self, Formula::Or(..)) {
                    (2, " | ")
                } else {
                    (3, " & ")
                };
                write_operand(f, l, l.precedence() < prec)?;
                f.write_str(op)?;
                write_operand(f, r, r.precedence() <= prec)
            }
        }
    }
}
