use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RecordKind {
    TypeI,
    TypeII,
    FullV,
    Theta,
    Unitary,
    Biswas,
    DegreeBound,
    Tail,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::TypeI => "TypeI",
            RecordKind::TypeII => "TypeII",
            RecordKind::FullV => "FullV",
            RecordKind::Theta => "Theta",
            RecordKind::Unitary => "Unitary",
            RecordKind::Biswas => "Biswas",
            RecordKind::DegreeBound => "DegreeBound",
            RecordKind::Tail => "Tail",
        }
    }
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One weight variable, e.g. `beta3` at point `0`, together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coef: Q,
    pub name: String,
    pub point: String,
    pub value: Q,
}

/// `constant + sum coef * weight`, kept symbolic for display and evaluated
/// exactly for the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    pub constant: Q,
    pub terms: Vec<Term>,
}

impl LinearForm {
    pub fn constant(c: Q) -> Self {
        LinearForm { constant: c, terms: Vec::new() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Q::from_integer(c.into()))
    }

    pub fn push(&mut self, coef: Q, name: impl Into<String>, point: impl Into<String>, value: &Q) {
        self.terms.push(Term { coef, name: name.into(), point: point.into(), value: value.clone() });
    }

    pub fn plus(&mut self, name: impl Into<String>, point: impl Into<String>, value: &Q) {
        self.push(Q::one(), name, point, value);
    }

    pub fn value(&self) -> Q {
        self.terms.iter().fold(self.constant.clone(), |acc, t| acc + &t.coef * &t.value)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for t in &self.terms {
            let neg = t.coef.is_negative();
            let a = t.coef.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{}({})", t.name, t.point)?;
            first = false;
        }
        Ok(())
    }
}

/// A single inequality `form / divisor <= rhs` (or `<` in strict mode) with
/// the data that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityRecord {
    pub kind: RecordKind,
    pub r: usize,
    /// Degree fed to the Gromov-Witten count (or the chosen subbundle degree).
    pub delta: Option<i64>,
    /// Integer part of the numerator: the degree of the destabilizing piece.
    pub degree: i64,
    pub subsets: Vec<Vec<usize>>,
    pub gw: Option<BigInt>,
    pub form: LinearForm,
    pub divisor: i64,
    pub lhs: Q,
    pub rhs: Q,
    pub strict: bool,
    pub satisfied: bool,
    /// False when another record of the same report implies this one.
    pub essential: bool,
}

impl InequalityRecord {
    pub fn new(kind: RecordKind, r: usize, form: LinearForm, divisor: i64, rhs: Q, strict: bool) -> Self {
        let lhs = form.value() / Q::from_integer(divisor.into());
        let satisfied = if strict { lhs < rhs } else { lhs <= rhs };
        let degree = form.constant.to_integer().try_into().unwrap_or(i64::MAX);
        InequalityRecord {
            kind,
            r,
            delta: None,
            degree,
            subsets: Vec::new(),
            gw: None,
            form,
            divisor,
            lhs,
            rhs,
            strict,
            satisfied,
            essential: true,
        }
    }

    pub fn with_delta(mut self, delta: i64) -> Self {
        self.delta = Some(delta);
        self
    }

    pub fn with_subsets(mut self, subsets: Vec<Vec<usize>>) -> Self {
        self.subsets = subsets;
        self
    }

    pub fn with_gw(mut self, gw: BigInt) -> Self {
        self.gw = Some(gw);
        self
    }

    pub fn gap(&self) -> Q {
        &self.lhs - &self.rhs
    }

    /// The inequality as text, e.g. `(-2 + beta4(0))/2 <= 0`.
    pub fn inequality(&self) -> String {
        let op = if self.strict { "<" } else { "<=" };
        if self.divisor == 1 {
            format!("{} {op} {}", self.form, self.rhs)
        } else {
            format!("({})/{} {op} {}", self.form, self.divisor, self.rhs)
        }
    }
}

/// A pair of degrees (or a longer degree vector) that passes every check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub k: Option<i64>,
    pub degrees: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    pub check: String,
    pub strict: bool,
    pub exists: bool,
    pub records: Vec<InequalityRecord>,
    pub solutions: Vec<Solution>,
    pub notes: Vec<String>,
}

impl ExistenceReport {
    /// Verdict from a full ledger: exists iff nothing is violated. Violations
    /// move to the front ordered by decreasing gap; the rest keep their order.
    pub fn from_records(check: &str, strict: bool, records: Vec<InequalityRecord>) -> Self {
        let exists = records.iter().all(|r| r.satisfied);
        ExistenceReport {
            check: check.to_string(),
            strict,
            exists,
            records: violations_first(records),
            solutions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &InequalityRecord> {
        self.records.iter().filter(|r| !r.satisfied)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }
}

fn violations_first(records: Vec<InequalityRecord>) -> Vec<InequalityRecord> {
    let (mut bad, good): (Vec<_>, Vec<_>) = records.into_iter().partition(|r| !r.satisfied);
    bad.sort_by(|a, b| b.gap().cmp(&a.gap()));
    bad.extend(good);
    bad
}
