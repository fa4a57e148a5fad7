use itertools::Itertools;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::report::{ExistenceReport, InequalityRecord, LinearForm, RecordKind, Solution};
use crate::Q;

fn window_ok(ws: &[&Q]) -> bool {
    match (ws.iter().max(), ws.iter().min()) {
        (Some(hi), Some(lo)) => *hi - *lo < Q::one(),
        _ => true,
    }
}

fn ceil_q(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("degree bound fits in i64")
}

fn floor_q(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("degree bound fits in i64")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point12 {
    pub label: String,
    pub alpha: Q,
    pub beta1: Q,
    pub beta2: Q,
}

/// A system of type (1, 2): a line `L` and a rank-two `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProblem12 {
    pub points: Vec<Point12>,
    pub deg_l: i64,
    pub deg_v: i64,
}

impl HodgeProblem12 {
    pub fn parabolic_degree(&self) -> Q {
        self.points
            .iter()
            .fold(Q::from_integer((self.deg_l + self.deg_v).into()), |acc, p| acc + &p.alpha + &p.beta1 + &p.beta2)
    }

    fn validate(&self) -> Result<()> {
        for p in &self.points {
            if p.beta1 > p.beta2 {
                return Err(Error::Order(p.label.clone()));
            }
            if !window_ok(&[&p.alpha, &p.beta1, &p.beta2]) {
                return Err(Error::Window(p.label.clone()));
            }
        }
        Ok(())
    }
}

/// Degrees `hi >= lo` of the two summands of a rank-two bundle on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingType {
    pub hi: i64,
    pub lo: i64,
}

impl SplittingType {
    pub fn new(a: i64, b: i64) -> Self {
        SplittingType { hi: a.max(b), lo: a.min(b) }
    }

    pub fn degree(&self) -> i64 {
        self.hi + self.lo
    }

    pub fn twist(&self, k: i64) -> Self {
        SplittingType { hi: self.hi + k, lo: self.lo + k }
    }
}

/// Whether a generic line of degree `a` sits in the bundle as a subbundle.
pub fn valid_line_degrees(split: SplittingType, a: i64) -> bool {
    a <= split.lo || a == split.hi
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification12 {
    /// Points with alpha < beta2, where theta may have a pole.
    pub poles: Vec<usize>,
    /// Poles with beta1 <= alpha, where the flag of V is forced by L.
    pub special: Vec<usize>,
}

impl Classification12 {
    pub fn l(&self) -> usize {
        self.poles.len()
    }

    pub fn m(&self) -> usize {
        self.special.len()
    }
}

pub fn classify_points_12(prob: &HodgeProblem12) -> Classification12 {
    let poles = (0..prob.points.len()).filter(|&i| prob.points[i].alpha < prob.points[i].beta2).collect();
    let special = (0..prob.points.len())
        .filter(|&i| {
            let p = &prob.points[i];
            p.beta1 <= p.alpha && p.alpha < p.beta2
        })
        .collect();
    Classification12 { poles, special }
}

/// The bundles of the (1, 2) analysis, all on the V side except `w_tilde`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splittings12 {
    pub correction: i64,
    pub v: SplittingType,
    pub w_tilde: SplittingType,
    pub l_tilde: i64,
    pub v_tilde: SplittingType,
}

/// Splitting type of `W = V(l-2)` after shifting at every point, with `L`
/// gaining one degree at each special point.
pub fn shifted_splitting_12(prob: &HodgeProblem12) -> Result<Splittings12> {
    let cls = classify_points_12(prob);
    if cls.l() == 0 {
        return Err(Error::NoPoles);
    }
    let s = prob.points.len() as i64;
    let correction = cls.l() as i64 - 2;
    let w = prob.deg_v + 2 * correction;
    let a = prob.deg_l;
    let hi = a.max(Integer::div_ceil(&w, &2));
    let base = SplittingType { hi, lo: w - hi };
    let l_tilde = a + cls.m() as i64;
    let hi_t = l_tilde.max(Integer::div_ceil(&(w + s), &2));
    let w_tilde = SplittingType { hi: hi_t, lo: w + s - hi_t };
    Ok(Splittings12 {
        correction,
        v: base.twist(-correction),
        w_tilde,
        l_tilde,
        v_tilde: w_tilde.twist(-correction),
    })
}

/// Largest V-side degree `d` with `O(d)` valid in `v` and `O(d + shift)` valid in `v_tilde`.
fn best_degree(v: SplittingType, v_tilde: SplittingType, shift: i64) -> i64 {
    [v.hi, v.lo, v_tilde.hi - shift, v_tilde.lo - shift]
        .into_iter()
        .filter(|&d| valid_line_degrees(v, d) && valid_line_degrees(v_tilde, d + shift))
        .max()
        .unwrap_or_else(|| v.lo.min(v_tilde.lo - shift))
}

pub fn check_12(prob: &HodgeProblem12, strict: bool) -> Result<ExistenceReport> {
    prob.validate()?;
    let cls = classify_points_12(prob);
    let sp = shifted_splitting_12(prob)?;
    let rhs = prob.parabolic_degree() / Q::from_integer(3.into());
    let mut records = Vec::new();

    let mut form = LinearForm::int(2 * prob.deg_l - sp.correction);
    for (i, p) in prob.points.iter().enumerate() {
        form.plus("alpha", &p.label, &p.alpha);
        if cls.special.contains(&i) {
            form.plus("beta2", &p.label, &p.beta2);
        } else {
            form.plus("beta1", &p.label, &p.beta1);
        }
    }
    records.push(InequalityRecord::new(RecordKind::Theta, 2, form, 2, rhs.clone(), strict));

    let mut type_one = Vec::new();
    for choice in (0..prob.points.len()).map(|_| [1usize, 2]).multi_cartesian_product() {
        let shift = choice.iter().filter(|&&i| i == 2).count() as i64;
        let delta = best_degree(sp.v, sp.v_tilde, shift);
        let mut form = LinearForm::int(delta);
        for (p, &i) in prob.points.iter().zip(&choice) {
            form.plus(format!("beta{i}"), &p.label, if i == 1 { &p.beta1 } else { &p.beta2 });
        }
        let rec = InequalityRecord::new(RecordKind::TypeI, 1, form, 1, rhs.clone(), strict)
            .with_delta(delta)
            .with_subsets(choice.iter().map(|&i| vec![i]).collect());
        type_one.push((choice, delta, rec));
    }
    mark_dominated(&mut type_one);
    records.extend(type_one.into_iter().map(|(_, _, r)| r));

    let mut report = ExistenceReport::from_records("check-12", strict, records);
    report.notes.push(format!(
        "l={} m={} V=O({})+O({}) Wtilde=O({})+O({}) Vtilde=O({})+O({})",
        cls.l(),
        cls.m(),
        sp.v.hi,
        sp.v.lo,
        sp.w_tilde.hi,
        sp.w_tilde.lo,
        sp.v_tilde.hi,
        sp.v_tilde.lo
    ));
    Ok(report)
}

/// A record is implied by another when it picks beta1 at a superset of the
/// other's beta1 points with no larger degree, or when it picks beta2 at k
/// extra points but the other's degree exceeds it by at least k (each
/// beta2 - beta1 is below one).
fn mark_dominated(recs: &mut [(Vec<usize>, i64, InequalityRecord)]) {
    let n = recs.len();
    let mut dominated = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (ci, di, _) = &recs[i];
            let (cj, dj, _) = &recs[j];
            let below = ci.iter().zip(cj).all(|(a, b)| a <= b);
            let above = ci.iter().zip(cj).all(|(a, b)| a >= b);
            let k = ci.iter().zip(cj).filter(|(a, b)| a != b).count() as i64;
            if (below && di <= dj) || (above && di + k <= *dj) {
                dominated[i] = true;
            }
        }
    }
    for (rec, d) in recs.iter_mut().zip(dominated) {
        rec.2.essential = !d;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point11 {
    pub label: String,
    /// Weight on `L`, the source of theta.
    pub alpha: Q,
    /// Weight on `L'`, the target of theta.
    pub alpha_prime: Q,
}

fn pole_count_11(points: &[Point11]) -> i64 {
    points.iter().filter(|p| p.alpha_prime > p.alpha).count() as i64
}

/// Existence of a (semi)stable system `L + L'` with parabolic degree zero.
/// Lists every admissible `k` and the resulting degrees `(deg L, deg L')`.
pub fn check_11(points: &[Point11], strict: bool) -> Result<ExistenceReport> {
    for p in points {
        if !window_ok(&[&p.alpha, &p.alpha_prime]) {
            return Err(Error::Window(p.label.clone()));
        }
    }
    let total = points.iter().fold(Q::zero(), |acc, p| acc + &p.alpha + &p.alpha_prime);
    if !total.is_integer() {
        return Err(Error::NonIntegerSum(total.to_string()));
    }
    let sum = total.to_integer().to_i64().expect("weight sum fits in i64");
    let (big_n, odd) = (Integer::div_floor(&sum, &2), Integer::mod_floor(&sum, &2) == 1);
    let ell = pole_count_11(points);
    let sum_prime = points.iter().fold(Q::zero(), |acc, p| acc + &p.alpha_prime);
    let (lower, upper) = if odd {
        (Integer::div_ceil(&(3 - ell), &2), Q::from_integer((big_n + 1).into()) - &sum_prime)
    } else {
        (Integer::div_ceil(&(2 - ell), &2), Q::from_integer(big_n.into()) - &sum_prime)
    };
    let top = if strict { ceil_q(&upper) - 1 } else { floor_q(&upper) };
    let degrees = |k: i64| if odd { vec![-big_n - k, -big_n - 1 + k] } else { vec![-big_n - k, -big_n + k] };

    let solutions: Vec<Solution> = (lower..=top).map(|k| Solution { k: Some(k), degrees: degrees(k) }).collect();
    // the smallest k is the witness when one exists and the closest miss otherwise
    let columns = [
        points.iter().map(|p| p.alpha.clone()).collect(),
        points.iter().map(|p| p.alpha_prime.clone()).collect(),
    ];
    let labels: Vec<String> = points.iter().map(|p| p.label.clone()).collect();
    let records = chain_records(&degrees(lower), &columns, &labels, strict);
    let mut report = ExistenceReport::from_records("check-11", strict, records);
    report.exists = !solutions.is_empty();
    report.solutions = solutions;
    report.notes.push(format!("sum={sum} N={big_n} ell={ell} k>={lower} k{}{}", if strict { "<" } else { "<=" }, upper));
    Ok(report)
}

/// Rank-two Biswas criterion: for every odd `A` with `|A| = 2j + 1`,
/// `-j + sum_A alpha + sum_{S \ A} beta < 0`.
pub fn biswas_report(points: &[(String, Q, Q)]) -> Result<ExistenceReport> {
    let mut total = Q::zero();
    for (label, a, b) in points {
        if a < b {
            return Err(Error::Order(label.clone()));
        }
        total += a + b;
    }
    if !total.is_zero() {
        return Err(Error::NonzeroSum(total.to_string()));
    }
    let s = points.len();
    let mut records = Vec::new();
    for size in (1..=s).step_by(2) {
        for subset in (0..s).combinations(size) {
            let j = (size as i64 - 1) / 2;
            let mut form = LinearForm::int(-j);
            for (i, (label, a, b)) in points.iter().enumerate() {
                if subset.contains(&i) {
                    form.plus("alpha", label, a);
                } else {
                    form.plus("beta", label, b);
                }
            }
            let picked = subset.iter().map(|&i| vec![i + 1]).collect();
            records.push(InequalityRecord::new(RecordKind::Biswas, 2, form, 1, Q::zero(), true).with_subsets(picked));
        }
    }
    Ok(ExistenceReport::from_records("biswas", true, records))
}

pub fn biswas_check(points: &[(String, Q, Q)]) -> Result<bool> {
    Ok(biswas_report(points)?.exists)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoint {
    pub label: String,
    pub weights: Vec<Q>,
}

/// A system `E_1 + ... + E_N` of line bundles with `theta_i: E_i -> E_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProblem {
    pub points: Vec<ChainPoint>,
    pub degrees: Vec<i64>,
}

/// `l_i`: the number of points where `theta_i` may have a pole.
fn chain_poles(weights: &[Vec<Q>]) -> Vec<i64> {
    (0..weights.len().saturating_sub(1))
        .map(|i| weights[i].iter().zip(&weights[i + 1]).filter(|(a, b)| b > a).count() as i64)
        .collect()
}

/// Records for a chain: `d_i <= d_{i+1} - 2 + l_i` so that theta_i is nonzero,
/// and the tail inequalities `sum_{i>=m} (d_i + sum_p alpha_i(p)) <= 0`.
/// `weights[i][p]` is the weight of `E_{i+1}` at point `p`.
fn chain_records(degrees: &[i64], weights: &[Vec<Q>], labels: &[String], strict: bool) -> Vec<InequalityRecord> {
    let n = degrees.len();
    let ell = chain_poles(weights);
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let form = LinearForm::int(degrees[i] - degrees[i + 1] + 2 - ell[i]);
        out.push(InequalityRecord::new(RecordKind::DegreeBound, i + 1, form, 1, Q::zero(), false));
    }
    for m in 1..n {
        let mut form = LinearForm::int(degrees[m..].iter().sum());
        for (i, row) in weights.iter().enumerate().skip(m) {
            for (label, w) in labels.iter().zip(row) {
                form.plus(format!("alpha{}", i + 1), label, w);
            }
        }
        out.push(InequalityRecord::new(RecordKind::Tail, n - m, form, 1, Q::zero(), strict));
    }
    out
}

fn chain_columns(points: &[ChainPoint], n: usize) -> Result<Vec<Vec<Q>>> {
    for p in points {
        if p.weights.len() != n {
            return Err(Error::Arity(p.label.clone(), n, p.weights.len()));
        }
        if !window_ok(&p.weights.iter().collect::<Vec<_>>()) {
            return Err(Error::Window(p.label.clone()));
        }
    }
    Ok((0..n).map(|i| points.iter().map(|p| p.weights[i].clone()).collect()).collect())
}

pub fn check_chain(prob: &ChainProblem, strict: bool) -> Result<ExistenceReport> {
    let n = prob.degrees.len();
    let columns = chain_columns(&prob.points, n)?;
    let pardeg = columns.iter().flatten().fold(Q::from_integer(prob.degrees.iter().sum::<i64>().into()), |a, w| a + w);
    if !pardeg.is_zero() {
        return Err(Error::NonzeroSum(pardeg.to_string()));
    }
    let labels: Vec<String> = prob.points.iter().map(|p| p.label.clone()).collect();
    let records = chain_records(&prob.degrees, &columns, &labels, strict);
    Ok(ExistenceReport::from_records("check-chain", strict, records))
}

fn check_111_at(columns: &[Vec<Q>], degrees: [i64; 3], strict: bool) -> bool {
    let ell = chain_poles(columns);
    let sum = |i: usize| columns[i].iter().fold(Q::zero(), |a, w| a + w);
    let d = |i: usize| Q::from_integer(degrees[i].into());
    let lead = sum(1) + sum(2);
    let last = -sum(2) - Q::from_integer((4 - ell[0] - ell[1]).into());
    let c1 = d(0);
    let c2 = d(1) - Q::from_integer((2 - ell[0]).into());
    let c3 = d(2) - Q::from_integer((4 - ell[0] - ell[1]).into());
    let outer = if strict { lead < c1 && c3 < last } else { lead <= c1 && c3 <= last };
    outer && c1 <= c2 && c2 <= c3
}

/// The three-step chain criterion. With `degrees = None` every admissible
/// degree triple is searched for.
pub fn check_111(points: &[ChainPoint], degrees: Option<[i64; 3]>, strict: bool) -> Result<ExistenceReport> {
    let columns = chain_columns(points, 3)?;
    let total = columns.iter().flatten().fold(Q::zero(), |a, w| a + w);
    if !total.is_zero() {
        return Err(Error::NonzeroSum(total.to_string()));
    }
    let labels: Vec<String> = points.iter().map(|p| p.label.clone()).collect();
    match degrees {
        Some(ds) => {
            let sum: i64 = ds.iter().sum();
            if sum != 0 {
                return Err(Error::DegreeSum(sum.to_string(), "0".into()));
            }
            let records = chain_records(&ds, &columns, &labels, strict);
            let mut report = ExistenceReport::from_records("check-111", strict, records);
            debug_assert_eq!(report.exists, check_111_at(&columns, ds, strict));
            report.exists = check_111_at(&columns, ds, strict);
            Ok(report)
        }
        None => {
            let ell = chain_poles(&columns);
            let sum = |i: usize| columns[i].iter().fold(Q::zero(), |a, w| a + w);
            let lo = ceil_q(&(sum(1) + sum(2)));
            let hi = floor_q(&(-sum(2))) - 4 + ell[0] + ell[1];
            let mut solutions = Vec::new();
            for d1 in lo..=hi {
                // d2 >= d1 + 2 - l1 and 2*d2 <= -d1 - 2 + l2
                for d2 in d1 + 2 - ell[0]..=Integer::div_floor(&(-d1 - 2 + ell[1]), &2) {
                    let ds = [d1, d2, -d1 - d2];
                    if check_111_at(&columns, ds, strict) {
                        solutions.push(Solution { k: None, degrees: ds.to_vec() });
                    }
                }
            }
            let records = match solutions.first() {
                Some(sol) => chain_records(&sol.degrees, &columns, &labels, strict),
                None => Vec::new(),
            };
            let mut report = ExistenceReport::from_records("check-111", strict, records);
            report.exists = !solutions.is_empty();
            if solutions.is_empty() {
                report.notes.push(format!("no degree triple in the window d1 in [{lo}, {hi}]"));
            }
            report.solutions = solutions;
            Ok(report)
        }
    }
}
