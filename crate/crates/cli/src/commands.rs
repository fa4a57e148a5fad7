use hodge_core::{
    biswas_report, check_11, check_111, check_12, check_1n, check_chain, check_unitary, generalized_gw, gw_number,
    quantum_product, solve_degree, ChainPoint, ChainProblem, ExistenceReport, HodgeProblem12, HodgeProblem1N,
    LabeledPoint1N, Partition, Point11, Point12, QuantumClass, SchubertSubset, UnitaryPoint, WeightedPoint1N,
};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::problem::{core_diagnostic, locate, Code, Diagnostic, ProblemFile, Schema};

type Run<T> = std::result::Result<T, Diagnostic>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    OneN,
    OneTwo,
    OneOne,
    OneOneOne { search: bool },
    Chain,
    Unitary,
    Biswas,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::OneN => "check-1n",
            Check::OneTwo => "check-12",
            Check::OneOne => "check-11",
            Check::OneOneOne { .. } => "check-111",
            Check::Chain => "check-chain",
            Check::Unitary => "check-unitary",
            Check::Biswas => "biswas",
        }
    }

    pub fn schema(self) -> Schema {
        match self {
            Check::OneN => Schema::Hodge1N,
            Check::OneTwo => Schema::Hodge12,
            Check::OneOne => Schema::Hodge11,
            Check::OneOneOne { .. } => Schema::Hodge111,
            Check::Chain => Schema::Chain,
            Check::Unitary | Check::Biswas => Schema::Unitary,
        }
    }
}

/// Accepts `2,1`, `(2,1)`, `[2,1]`; the empty partition is `()`, `[]`, `0`
/// or the empty string.
pub fn parse_partition(s: &str) -> Run<Partition> {
    let bad = |msg: String| Diagnostic::new(Code::BadPartition, "argv", msg);
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .or_else(|| t.strip_prefix('[').and_then(|x| x.strip_suffix(']')))
        .unwrap_or(t)
        .trim();
    if inner.is_empty() || inner == "0" {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad(format!("{s:?} is not a comma separated list of parts")))?;
    Partition::new(parts).map_err(|e| bad(e.to_string()))
}

fn parse_classes(classes: &[String], r: usize, n: usize) -> Run<Vec<Partition>> {
    if r == 0 || r >= n {
        return Err(Diagnostic::new(Code::BadArgument, "argv", format!("Gr({r}, {n}) needs 0 < r < n")));
    }
    classes
        .iter()
        .map(|c| {
            let p = parse_partition(c)?;
            p.check_box(r, n).map_err(|e| core_diagnostic(&e, "argv"))?;
            Ok(p)
        })
        .collect()
}

pub fn qprod(r: usize, n: usize, lambda: &str, mu: &str) -> Run<QuantumClass> {
    let ps = parse_classes(&[lambda.to_string(), mu.to_string()], r, n)?;
    let a = QuantumClass::schubert(ps[0].clone(), r, n).map_err(|e| core_diagnostic(&e, "argv"))?;
    let b = QuantumClass::schubert(ps[1].clone(), r, n).map_err(|e| core_diagnostic(&e, "argv"))?;
    quantum_product(&a, &b).map_err(|e| core_diagnostic(&e, "argv"))
}

/// The invariant together with the degree used. Without `d` the degree comes
/// from the dimension count, and an unbalanced count gives 0.
pub fn gw(r: usize, n: usize, classes: &[String], d: Option<i64>) -> Run<(BigInt, Option<i64>)> {
    let ps = parse_classes(classes, r, n)?;
    let d = d.or_else(|| {
        let excess = ps.iter().map(|p| p.weight() as i64).sum::<i64>() - (r * (n - r)) as i64;
        (excess >= 0 && excess % n as i64 == 0).then(|| excess / n as i64)
    });
    let value = match d {
        Some(d) => gw_number(&ps, d, r, n).map_err(|e| core_diagnostic(&e, "argv"))?,
        None => BigInt::zero(),
    };
    Ok((value, d))
}

pub fn ggw(r: usize, n: usize, classes: &[String], d: Option<i64>, big_d: i64) -> Run<(BigInt, Option<i64>)> {
    let ps = parse_classes(classes, r, n)?;
    let subsets = ps
        .iter()
        .map(|p| SchubertSubset::from_partition(p, r, n))
        .collect::<hodge_core::Result<Vec<_>>>()
        .map_err(|e| core_diagnostic(&e, "argv"))?;
    let d = match d {
        Some(d) => Some(d),
        None => solve_degree(&subsets, r, n, big_d).map_err(|e| core_diagnostic(&e, "argv"))?,
    };
    let value = match d {
        Some(d) => generalized_gw(&subsets, d, big_d, r, n).map_err(|e| core_diagnostic(&e, "argv"))?,
        None => BigInt::zero(),
    };
    Ok((value, d))
}

pub fn run_check(check: Check, file: &ProblemFile, strict_flag: bool) -> Run<ExistenceReport> {
    if file.schema != check.schema() {
        return Err(Diagnostic::new(
            Code::SchemaMismatch,
            "/schema",
            format!("{} expects schema {}, got {}", check.name(), check.schema(), file.schema),
        ));
    }
    let strict = strict_flag || file.strict.unwrap_or(false);
    let deg = |k: &str| file.degree(k).expect("degrees are checked at parse time");
    let at = |e: hodge_core::Error| locate(&e, file);
    let mut report = match check {
        Check::OneN => {
            let prob = HodgeProblem1N {
                n: file.n.expect("hodge1n carries n"),
                points: file
                    .points
                    .iter()
                    .map(|p| LabeledPoint1N {
                        label: p.label.clone(),
                        weights: WeightedPoint1N { alpha: p.weights[0].clone(), betas: p.weights[1..].to_vec() },
                    })
                    .collect(),
                deg_l: deg("L"),
                deg_v: deg("V"),
            };
            let (norm, shifts) = prob.normalized().map_err(at)?;
            let mut rep = check_1n(&norm, strict).map_err(at)?;
            if shifts > 0 {
                rep.notes.push(format!(
                    "normalized by {shifts} parabolic shift(s): deg L = {}, deg V = {}",
                    norm.deg_l, norm.deg_v
                ));
            }
            rep
        }
        Check::OneTwo => {
            let prob = HodgeProblem12 {
                points: file
                    .points
                    .iter()
                    .map(|p| Point12 {
                        label: p.label.clone(),
                        alpha: p.weights[0].clone(),
                        beta1: p.weights[1].clone(),
                        beta2: p.weights[2].clone(),
                    })
                    .collect(),
                deg_l: deg("L"),
                deg_v: deg("V"),
            };
            check_12(&prob, strict).map_err(at)?
        }
        Check::OneOne => {
            let pts: Vec<Point11> = file
                .points
                .iter()
                .map(|p| Point11 { label: p.label.clone(), alpha: p.weights[0].clone(), alpha_prime: p.weights[1].clone() })
                .collect();
            check_11(&pts, strict).map_err(at)?
        }
        Check::OneOneOne { search } => {
            let degrees = if search {
                None
            } else if file.degrees.is_empty() {
                return Err(Diagnostic::new(
                    Code::MissingField,
                    "/degrees",
                    "no degrees given; pass --search-degrees to search for them",
                ));
            } else {
                Some([deg("d1"), deg("d2"), deg("d3")])
            };
            check_111(&chain_points(file), degrees, strict).map_err(at)?
        }
        Check::Chain => {
            let n = file.n.expect("chain carries n");
            let degrees = (1..=n).map(|i| deg(&format!("d{i}"))).collect();
            check_chain(&ChainProblem { points: chain_points(file), degrees }, strict).map_err(at)?
        }
        Check::Unitary => {
            let pts: Vec<UnitaryPoint> =
                file.points.iter().map(|p| UnitaryPoint { label: p.label.clone(), weights: p.weights.clone() }).collect();
            check_unitary(&pts, file.n.expect("unitary carries n"), strict).map_err(at)?
        }
        Check::Biswas => {
            if file.n != Some(2) {
                return Err(Diagnostic::new(Code::BadArity, "/n", "biswas needs a rank two unitary problem"));
            }
            let pts: Vec<_> =
                file.points.iter().map(|p| (p.label.clone(), p.weights[1].clone(), p.weights[0].clone())).collect();
            biswas_report(&pts).map_err(at)?
        }
    };
    report.check = check.name().to_string();
    Ok(report)
}

fn chain_points(file: &ProblemFile) -> Vec<ChainPoint> {
    file.points.iter().map(|p| ChainPoint { label: p.label.clone(), weights: p.weights.clone() }).collect()
}
