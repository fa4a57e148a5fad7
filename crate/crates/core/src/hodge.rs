use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{solve_degree, subset_to_partition, SchubertSubset};
use crate::error::{Error, Result};
use crate::quantum::gw_number;
use crate::report::{ExistenceReport, InequalityRecord, LinearForm, RecordKind};
use crate::shifting::{generalized_gw, WeightedPoint1N};
use crate::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoint1N {
    pub label: String,
    pub weights: WeightedPoint1N,
}

/// A system of Hodge bundles `L + V` with `rank V = n`, weights at the marked
/// points and the two fixed degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProblem1N {
    pub n: usize,
    pub points: Vec<LabeledPoint1N>,
    pub deg_l: i64,
    pub deg_v: i64,
}

impl HodgeProblem1N {
    pub fn s(&self) -> usize {
        self.points.len()
    }

    pub fn parabolic_degree(&self) -> Q {
        let mut total = Q::from_integer((self.deg_l + self.deg_v).into());
        for p in &self.points {
            total += &p.weights.alpha;
            for b in &p.weights.betas {
                total += b;
            }
        }
        total
    }

    fn validate(&self) -> Result<()> {
        if self.s() < 3 {
            return Err(Error::TooFewPoints(self.s()));
        }
        for p in &self.points {
            if p.weights.betas.len() != self.n {
                return Err(Error::Arity(p.label.clone(), self.n + 1, p.weights.betas.len() + 1));
            }
            p.weights.validate(&p.label)?;
            if !p.weights.is_normalized() {
                return Err(Error::Unnormalized(p.label.clone()));
            }
        }
        Ok(())
    }

    /// Shifts weights so that alpha is the smallest weight at every point.
    pub fn normalized(&self) -> Result<(HodgeProblem1N, usize)> {
        let ws: Vec<_> = self.points.iter().map(|p| p.weights.clone()).collect();
        for p in &self.points {
            p.weights.validate(&p.label)?;
        }
        let out = crate::shifting::normalize_weights_1n(&ws, self.deg_l, self.deg_v)?;
        let points = self
            .points
            .iter()
            .zip(out.points)
            .map(|(p, weights)| LabeledPoint1N { label: p.label.clone(), weights })
            .collect();
        Ok((HodgeProblem1N { n: self.n, points, deg_l: out.deg_l, deg_v: out.deg_v }, out.log.len()))
    }
}

fn tuples(r: usize, n: usize, s: usize) -> Vec<Vec<SchubertSubset>> {
    (0..s).map(|_| SchubertSubset::all(r, n)).multi_cartesian_product().collect()
}

fn beta_name(i: usize) -> String {
    format!("beta{i}")
}

/// Every semistability inequality for a normalized type (1, n) problem, in the
/// order TypeI, TypeII, FullV (then DegreeBound for n = 1), each block sorted
/// by rank, degree and subsets.
pub fn enumerate_inequalities_1n(prob: &HodgeProblem1N, strict: bool) -> Result<Vec<InequalityRecord>> {
    prob.validate()?;
    let n = prob.n;
    let s = prob.s() as i64;
    let w = prob.deg_v + n as i64 * (s - 2);
    let rhs = prob.parabolic_degree() / Q::from_integer(((n + 1) as i64).into());
    let mut out = Vec::new();

    let mut type_one = Vec::new();
    for r in 1..n {
        for t in tuples(r, n, prob.points.len()) {
            let Some(delta) = solve_degree(&t, r, n, -w)? else { continue };
            let gw = generalized_gw(&t, delta, -w, r, n)?;
            if gw.is_zero() {
                continue;
            }
            let degree = -delta + r as i64 * (2 - s);
            let mut form = LinearForm::int(degree);
            for (p, sub) in prob.points.iter().zip(&t) {
                for &i in sub.elems() {
                    form.plus(beta_name(n - i + 1), &p.label, &p.weights.betas[n - i]);
                }
            }
            let rec = InequalityRecord::new(RecordKind::TypeI, r, form, r as i64, rhs.clone(), strict)
                .with_delta(delta)
                .with_subsets(t.iter().map(|x| x.elems().to_vec()).collect())
                .with_gw(gw);
            type_one.push(rec);
        }
    }
    sort_block(&mut type_one);
    out.extend(type_one);

    let mut type_two = Vec::new();
    let big_d = prob.deg_l - w;
    for r in 1..n {
        let candidates: Vec<(Vec<SchubertSubset>, i64, BigInt)> = if r == 1 {
            vec![(Vec::new(), 0, BigInt::one())]
        } else {
            let mut v = Vec::new();
            for t in tuples(r - 1, n - 1, prob.points.len()) {
                let Some(delta) = solve_degree(&t, r - 1, n - 1, big_d)? else { continue };
                let gw = generalized_gw(&t, delta, big_d, r - 1, n - 1)?;
                if !gw.is_zero() {
                    v.push((t, delta, gw));
                }
            }
            v
        };
        for (t, delta, gw) in candidates {
            let degree = 2 * prob.deg_l - delta + r as i64 * (2 - s);
            let mut form = LinearForm::int(degree);
            for (idx, p) in prob.points.iter().enumerate() {
                form.plus("alpha", &p.label, &p.weights.alpha);
                form.plus(beta_name(1), &p.label, &p.weights.betas[0]);
                if let Some(sub) = t.get(idx) {
                    for &j in sub.elems() {
                        form.plus(beta_name(n - j + 1), &p.label, &p.weights.betas[n - j]);
                    }
                }
            }
            let subsets = if t.is_empty() {
                vec![Vec::new(); prob.points.len()]
            } else {
                t.iter().map(|x| x.elems().to_vec()).collect()
            };
            let rec = InequalityRecord::new(RecordKind::TypeII, r, form, r as i64 + 1, rhs.clone(), strict)
                .with_delta(delta)
                .with_subsets(subsets)
                .with_gw(gw);
            type_two.push(rec);
        }
    }
    sort_block(&mut type_two);
    out.extend(type_two);

    let mut form = LinearForm::int(prob.deg_v);
    for p in &prob.points {
        for (i, b) in p.weights.betas.iter().enumerate() {
            form.plus(beta_name(i + 1), &p.label, b);
        }
    }
    out.push(InequalityRecord::new(RecordKind::FullV, n, form, n as i64, rhs.clone(), strict));

    if n == 1 {
        // theta: L -> V(S - 2) has a pole allowed at every normalized point
        let form = LinearForm::int(prob.deg_l - prob.deg_v - (s - 2));
        out.push(InequalityRecord::new(RecordKind::DegreeBound, 1, form, 1, Q::zero(), false));
    }
    Ok(out)
}

fn sort_block(block: &mut [InequalityRecord]) {
    block.sort_by(|a, b| (a.r, a.delta, &a.subsets).cmp(&(b.r, b.delta, &b.subsets)));
}

pub fn check_1n(prob: &HodgeProblem1N, strict: bool) -> Result<ExistenceReport> {
    let records = enumerate_inequalities_1n(prob, strict)?;
    Ok(ExistenceReport::from_records("check-1n", strict, records))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryPoint {
    pub label: String,
    /// Weakly increasing weights `alpha_1 <= ... <= alpha_n`.
    pub weights: Vec<Q>,
}

/// The unitary (theta = 0) existence test: every nonzero Gromov-Witten number
/// gives the inequality `-d + sum alpha_{n-i+1}(p) <= 0`.
pub fn check_unitary(points: &[UnitaryPoint], n: usize, strict: bool) -> Result<ExistenceReport> {
    let mut total = Q::zero();
    for p in points {
        if p.weights.len() != n {
            return Err(Error::Arity(p.label.clone(), n, p.weights.len()));
        }
        if p.weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Order(p.label.clone()));
        }
        if let (Some(lo), Some(hi)) = (p.weights.first(), p.weights.last()) {
            if hi - lo >= Q::one() {
                return Err(Error::Window(p.label.clone()));
            }
        }
        for w in &p.weights {
            total += w;
        }
    }
    if !total.is_zero() {
        return Err(Error::NonzeroSum(total.to_string()));
    }
    let mut records = Vec::new();
    for r in 1..n {
        for t in tuples(r, n, points.len()) {
            let codim: usize = t.iter().map(crate::combinat::codim_of_subset).sum();
            let excess = codim as i64 - (r * (n - r)) as i64;
            if excess < 0 || excess % n as i64 != 0 {
                continue;
            }
            let d = excess / n as i64;
            let classes: Vec<_> = t.iter().map(subset_to_partition).collect();
            let gw = if classes.len() >= 2 {
                gw_number(&classes, d, r, n)?
            } else {
                generalized_gw(&t, d, 0, r, n)?
            };
            if gw.is_zero() {
                continue;
            }
            let mut form = LinearForm::int(-d);
            for (p, sub) in points.iter().zip(&t) {
                for &i in sub.elems() {
                    form.plus(format!("alpha{}", n - i + 1), &p.label, &p.weights[n - i]);
                }
            }
            records.push(
                InequalityRecord::new(RecordKind::Unitary, r, form, 1, Q::zero(), strict)
                    .with_delta(d)
                    .with_subsets(t.iter().map(|x| x.elems().to_vec()).collect())
                    .with_gw(gw),
            );
        }
    }
    sort_block(&mut records);
    Ok(ExistenceReport::from_records("check-unitary", strict, records))
}
