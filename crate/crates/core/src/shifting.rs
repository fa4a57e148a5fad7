use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{base_degree, subset_to_partition, Partition, SchubertSubset};
use crate::error::{Error, Result};
use crate::quantum::gw_number;
use crate::Q;

/// A Schubert condition paired with the degree of the subbundle it constrains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedCondition {
    pub subset: SchubertSubset,
    pub d: i64,
}

pub fn shift_condition_down(c: &ShiftedCondition) -> ShiftedCondition {
    let (subset, dropped) = c.subset.rotate_down();
    ShiftedCondition { subset, d: c.d - dropped as i64 }
}

pub fn shift_condition_up(c: &ShiftedCondition) -> ShiftedCondition {
    let (subset, raised) = c.subset.rotate_up();
    ShiftedCondition { subset, d: c.d + raised as i64 }
}

/// Number of degree `-d` rank `r` subbundles of a generic degree `-D` bundle
/// of rank `n` meeting the given conditions. Shifts the first condition until
/// `D = 0` and then counts ordinary stable maps.
pub fn generalized_gw(subsets: &[SchubertSubset], d: i64, big_d: i64, r: usize, n: usize) -> Result<BigInt> {
    let first = subsets.first().ok_or(Error::TooFewClasses(1))?;
    if subsets.iter().any(|s| s.r() != r || s.n() != n) {
        return Err(Error::RingMismatch);
    }
    let mut cond = ShiftedCondition { subset: first.clone(), d };
    for _ in 0..big_d.max(0) {
        cond = shift_condition_down(&cond);
    }
    for _ in 0..(-big_d).max(0) {
        cond = shift_condition_up(&cond);
    }
    debug_assert_eq!(cond.d, base_degree(first, d, big_d));
    if cond.d < 0 {
        return Ok(BigInt::zero());
    }
    let mut classes: Vec<Partition> = Vec::with_capacity(subsets.len().max(2));
    classes.push(subset_to_partition(&cond.subset));
    classes.extend(subsets[1..].iter().map(subset_to_partition));
    if classes.len() == 1 {
        classes.push(Partition::empty());
    }
    gw_number(&classes, cond.d, r, n)
}

/// Weights at one marked point for a system of type (1, n): `alpha` on the
/// line and the increasing list `betas` on the rank-n piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoint1N {
    pub alpha: Q,
    pub betas: Vec<Q>,
}

impl WeightedPoint1N {
    pub fn validate(&self, label: &str) -> Result<()> {
        if self.betas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Order(label.to_string()));
        }
        if self.betas.windows(2).any(|w| w[0] == w[1]) || self.betas.contains(&self.alpha) {
            return Err(Error::Tie(label.to_string()));
        }
        let all = || std::iter::once(&self.alpha).chain(self.betas.iter());
        let hi = all().max().expect("alpha is present");
        let lo = all().min().expect("alpha is present");
        if hi - lo >= Q::one() {
            return Err(Error::Window(label.to_string()));
        }
        Ok(())
    }

    pub fn is_normalized(&self) -> bool {
        self.betas.first().map_or(true, |b| self.alpha < *b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Moved {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftStep {
    pub point: usize,
    pub moved: Moved,
    pub from: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized1N {
    pub points: Vec<WeightedPoint1N>,
    pub deg_l: i64,
    pub deg_v: i64,
    pub log: Vec<ShiftStep>,
}

/// Moves the largest weight at each point down by one, raising the matching
/// degree, until alpha is the smallest weight everywhere.
pub fn normalize_weights_1n(points: &[WeightedPoint1N], deg_l: i64, deg_v: i64) -> Result<Normalized1N> {
    let mut out = Normalized1N { points: Vec::with_capacity(points.len()), deg_l, deg_v, log: Vec::new() };
    for (idx, p) in points.iter().enumerate() {
        p.validate(&idx.to_string())?;
        let mut p = p.clone();
        while !p.is_normalized() {
            let top = p.betas.last().expect("normalization needs a beta").clone();
            if p.alpha > top {
                out.log.push(ShiftStep { point: idx, moved: Moved::Alpha, from: p.alpha.clone() });
                p.alpha -= Q::one();
                out.deg_l += 1;
            } else {
                out.log.push(ShiftStep { point: idx, moved: Moved::Beta, from: top.clone() });
                p.betas.pop();
                p.betas.insert(0, top - Q::one());
                out.deg_v += 1;
            }
        }
        out.points.push(p);
    }
    Ok(out)
}
