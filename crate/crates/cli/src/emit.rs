use hodge_core::{ExistenceReport, InequalityRecord, QuantumClass, Solution};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::problem::Diagnostic;

fn join<I: IntoIterator<Item = String>>(it: I, sep: &str) -> String {
    it.into_iter().collect::<Vec<_>>().join(sep)
}

fn subset_text(s: &[usize]) -> String {
    format!("{{{}}}", join(s.iter().map(|x| x.to_string()), ","))
}

fn degrees_text(ds: &[i64]) -> String {
    format!("({})", join(ds.iter().map(|d| d.to_string()), ","))
}

fn solution_text(s: &Solution) -> String {
    match s.k {
        Some(k) => format!("k={k}; degrees {}", degrees_text(&s.degrees)),
        None => format!("degrees {}", degrees_text(&s.degrees)),
    }
}

pub fn verdict(report: &ExistenceReport) -> &'static str {
    if report.exists {
        "exists"
    } else {
        "not-exists"
    }
}

/// One ledger line: kind, the data that produced the record, the inequality
/// and its evaluated left hand side.
pub fn record_line(r: &InequalityRecord) -> String {
    let mut head = vec![r.kind.to_string(), format!("r={}", r.r)];
    if let Some(d) = r.delta {
        head.push(format!("delta={d}"));
    }
    if let Some(g) = &r.gw {
        head.push(format!("gw={g}"));
    }
    if !r.subsets.is_empty() {
        head.push(format!("subsets ({})", join(r.subsets.iter().map(|s| subset_text(s)), ",")));
    }
    format!("[{}] {}   (lhs = {})", head.join(" "), r.inequality(), r.lhs)
}

pub fn report_text(report: &ExistenceReport) -> String {
    let mut out = String::from(verdict(report));
    if let Some(first) = report.solutions.first() {
        out.push_str("; ");
        out.push_str(&solution_text(first));
    }
    out.push('\n');
    if report.records.is_empty() && report.notes.is_empty() && report.solutions.len() <= 1 {
        return out;
    }
    let mode = if report.strict { "strict" } else { "non-strict" };
    out.push_str(&format!(
        "{} ({mode}): {} of {} inequalities violated\n",
        report.check,
        report.violation_count(),
        report.records.len()
    ));
    for r in report.violations() {
        out.push_str("  ");
        out.push_str(&record_line(r));
        out.push('\n');
    }
    for s in report.solutions.iter().skip(1) {
        out.push_str(&format!("  also {}\n", solution_text(s)));
    }
    for n in &report.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    out
}

fn record_value(r: &InequalityRecord) -> Value {
    json!({
        "kind": r.kind.as_str(),
        "r": r.r,
        "delta": r.delta,
        "degree": r.degree,
        "subsets": r.subsets,
        "gw": r.gw.as_ref().map(BigInt::to_string),
        "form": {
            "constant": r.form.constant.to_string(),
            "terms": r.form.terms.iter().map(|t| json!({
                "coef": t.coef.to_string(),
                "name": t.name,
                "point": t.point,
                "value": t.value.to_string(),
            })).collect::<Vec<_>>(),
        },
        "divisor": r.divisor,
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "gap": r.gap().to_string(),
        "strict": r.strict,
        "satisfied": r.satisfied,
        "essential": r.essential,
        "inequality": r.inequality(),
    })
}

pub fn report_value(report: &ExistenceReport) -> Value {
    json!({
        "check": report.check,
        "verdict": verdict(report),
        "strict": report.strict,
        "summary": {
            "records": report.records.len(),
            "violations": report.violation_count(),
            "solutions": report.solutions.len(),
        },
        "records": report.records.iter().map(record_value).collect::<Vec<_>>(),
        "solutions": report.solutions.iter().map(|s| json!({"k": s.k, "degrees": s.degrees})).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

pub fn report_json(report: &ExistenceReport) -> String {
    pretty(&report_value(report))
}

pub fn quantum_json(c: &QuantumClass) -> String {
    let (r, n) = c.ring();
    let terms: Vec<Value> = c
        .terms()
        .map(|(d, p, coef)| json!({"q": d, "partition": p.parts(), "coef": coef.to_string()}))
        .collect();
    pretty(&json!({"r": r, "n": n, "product": c.to_string(), "terms": terms}))
}

pub fn number_json(value: &BigInt, d: Option<i64>, big_d: Option<i64>) -> String {
    let mut v = json!({"value": value.to_string(), "d": d});
    if let Some(big_d) = big_d {
        v["D"] = json!(big_d);
    }
    pretty(&v)
}

pub fn diagnostic_json(d: &Diagnostic) -> String {
    pretty(&json!({"error": {"code": d.code.as_str(), "location": d.location, "message": d.message}}))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}
