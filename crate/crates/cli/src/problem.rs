use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use hodge_core::{Error, WeightedPoint1N, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Code {
    BadJson,
    BadType,
    MissingField,
    UnknownField,
    UnknownSchema,
    SchemaMismatch,
    BadRational,
    DenZero,
    DuplicateLabel,
    BadArity,
    Window,
    Order,
    Tie,
    NonIntegerSum,
    NonzeroDegree,
    DegreeSum,
    NoPoles,
    TooFewPoints,
    BadPartition,
    BadArgument,
    Io,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::BadJson => "BAD_JSON",
            Code::BadType => "BAD_TYPE",
            Code::MissingField => "MISSING_FIELD",
            Code::UnknownField => "UNKNOWN_FIELD",
            Code::UnknownSchema => "UNKNOWN_SCHEMA",
            Code::SchemaMismatch => "SCHEMA_MISMATCH",
            Code::BadRational => "BAD_RATIONAL",
            Code::DenZero => "DEN_ZERO",
            Code::DuplicateLabel => "DUPLICATE_LABEL",
            Code::BadArity => "BAD_ARITY",
            Code::Window => "WINDOW",
            Code::Order => "ORDER",
            Code::Tie => "TIE",
            Code::NonIntegerSum => "NON_INTEGER_SUM",
            Code::NonzeroDegree => "NONZERO_DEGREE",
            Code::DegreeSum => "DEGREE_SUM",
            Code::NoPoles => "NO_POLES",
            Code::TooFewPoints => "TOO_FEW_POINTS",
            Code::BadPartition => "BAD_PARTITION",
            Code::BadArgument => "BAD_ARGUMENT",
            Code::Io => "IO",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An input error: a code, a JSON pointer into the problem file (empty for
/// the whole document, `argv` for command line arguments) and a message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub location: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: Code, location: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic { code, location: location.into(), message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.location.is_empty() {
            write!(f, "error[{}]: {}", self.code, self.message)
        } else {
            write!(f, "error[{}] at {}: {}", self.code, self.location, self.message)
        }
    }
}

impl std::error::Error for Diagnostic {}

type Parsed<T> = std::result::Result<T, Diagnostic>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Schema {
    Unitary,
    Hodge1N,
    Hodge12,
    Hodge11,
    Hodge111,
    Chain,
}

impl Schema {
    pub const ALL: [Schema; 6] =
        [Schema::Unitary, Schema::Hodge1N, Schema::Hodge12, Schema::Hodge11, Schema::Hodge111, Schema::Chain];

    pub fn as_str(self) -> &'static str {
        match self {
            Schema::Unitary => "unitary",
            Schema::Hodge1N => "hodge1n",
            Schema::Hodge12 => "hodge12",
            Schema::Hodge11 => "hodge11",
            Schema::Hodge111 => "hodge111",
            Schema::Chain => "chain",
        }
    }

    fn takes_n(self) -> bool {
        matches!(self, Schema::Unitary | Schema::Hodge1N | Schema::Chain)
    }

    fn width(self, n: usize) -> usize {
        match self {
            Schema::Unitary | Schema::Chain => n,
            Schema::Hodge1N => n + 1,
            Schema::Hodge12 | Schema::Hodge111 => 3,
            Schema::Hodge11 => 2,
        }
    }

    fn degree_keys(self, n: usize) -> Vec<String> {
        match self {
            Schema::Unitary | Schema::Hodge11 => vec![],
            Schema::Hodge1N | Schema::Hodge12 => vec!["L".into(), "V".into()],
            Schema::Hodge111 => (1..=3).map(|i| format!("d{i}")).collect(),
            Schema::Chain => (1..=n).map(|i| format!("d{i}")).collect(),
        }
    }
}

impl FromStr for Schema {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Schema::ALL.into_iter().find(|x| x.as_str() == s).ok_or(())
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointEntry {
    pub label: String,
    pub weights: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub schema: Schema,
    pub n: Option<usize>,
    pub points: Vec<PointEntry>,
    /// In file order.
    pub degrees: Vec<(String, i64)>,
    pub strict: Option<bool>,
}

impl ProblemFile {
    pub fn degree(&self, key: &str) -> Option<i64> {
        self.degrees.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(self.schema.as_str()));
        if let Some(n) = self.n {
            m.insert("n".into(), json!(n));
        }
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|p| json!({"label": p.label, "weights": p.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>()}))
            .collect();
        m.insert("points".into(), Value::Array(points));
        if !self.degrees.is_empty() {
            let ds: Map<String, Value> = self.degrees.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            m.insert("degrees".into(), Value::Object(ds));
        }
        if let Some(s) = self.strict {
            m.insert("options".into(), json!({ "strict": s }));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("problem serializes");
        s.push('\n');
        s
    }
}

/// `"p/q"` with `q > 0`, or a plain integer `"p"`. Signs go on the numerator.
pub fn parse_rational(s: &str) -> std::result::Result<Q, Code> {
    fn digits(x: &str) -> bool {
        !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit())
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(Code::BadRational);
    }
    let num = BigInt::from_str(num).map_err(|_| Code::BadRational)?;
    let den = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| Code::BadRational)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Code::DenZero);
    }
    Ok(Q::new(num, den))
}

fn get_object<'a>(v: &'a Value, at: &str) -> Parsed<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Diagnostic::new(Code::BadType, at, "expected an object"))
}

fn check_keys(m: &Map<String, Value>, allowed: &[&str], at: &str) -> Parsed<()> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Diagnostic::new(Code::UnknownField, format!("{at}/{k}"), format!("unexpected field {k:?}"))),
        None => Ok(()),
    }
}

fn require<'a>(m: &'a Map<String, Value>, key: &str, at: &str) -> Parsed<&'a Value> {
    m.get(key).ok_or_else(|| Diagnostic::new(Code::MissingField, format!("{at}/{key}"), format!("missing field {key:?}")))
}

pub fn parse_problem_file(text: &str) -> Parsed<ProblemFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| Diagnostic::new(Code::BadJson, "", e.to_string()))?;
    let top = get_object(&root, "")?;
    check_keys(top, &["schema", "n", "points", "degrees", "options"], "")?;

    let schema = match require(top, "schema", "")? {
        Value::String(s) => {
            s.parse::<Schema>().map_err(|_| Diagnostic::new(Code::UnknownSchema, "/schema", format!("unknown schema {s:?}")))?
        }
        _ => return Err(Diagnostic::new(Code::BadType, "/schema", "expected a string")),
    };

    let n = match top.get("n") {
        None if schema.takes_n() => return Err(Diagnostic::new(Code::MissingField, "/n", "missing field \"n\"")),
        None => None,
        Some(_) if !schema.takes_n() => {
            return Err(Diagnostic::new(Code::UnknownField, "/n", format!("schema {schema} has a fixed rank")))
        }
        Some(v) => match v.as_u64() {
            Some(k) if k >= 1 => Some(k as usize),
            _ => return Err(Diagnostic::new(Code::BadType, "/n", "expected a positive integer")),
        },
    };
    let width = schema.width(n.unwrap_or(0));

    let raw_points = require(top, "points", "")?
        .as_array()
        .ok_or_else(|| Diagnostic::new(Code::BadType, "/points", "expected an array"))?;
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(raw_points.len());
    for (i, rp) in raw_points.iter().enumerate() {
        let at = format!("/points/{i}");
        let obj = get_object(rp, &at)?;
        check_keys(obj, &["label", "weights"], &at)?;
        let label = require(obj, "label", &at)?
            .as_str()
            .ok_or_else(|| Diagnostic::new(Code::BadType, format!("{at}/label"), "expected a string"))?
            .to_string();
        if !seen.insert(label.clone()) {
            return Err(Diagnostic::new(Code::DuplicateLabel, format!("{at}/label"), format!("label {label:?} is used twice")));
        }
        let wat = format!("{at}/weights");
        let raw = require(obj, "weights", &at)?
            .as_array()
            .ok_or_else(|| Diagnostic::new(Code::BadType, &wat, "expected an array of strings"))?;
        let mut weights = Vec::with_capacity(raw.len());
        for (j, w) in raw.iter().enumerate() {
            let s = w
                .as_str()
                .ok_or_else(|| Diagnostic::new(Code::BadRational, format!("{wat}/{j}"), "rationals are written as strings"))?;
            let q = parse_rational(s).map_err(|code| {
                let msg = if code == Code::DenZero { format!("{s:?} has denominator zero") } else { format!("{s:?} is not p/q") };
                Diagnostic::new(code, format!("{wat}/{j}"), msg)
            })?;
            weights.push(q);
        }
        if weights.len() != width {
            return Err(Diagnostic::new(
                Code::BadArity,
                &wat,
                format!("schema {schema} expects {width} weights, got {}", weights.len()),
            ));
        }
        validate_point(schema, &label, &weights).map_err(|d| Diagnostic { location: wat.clone(), ..d })?;
        points.push(PointEntry { label, weights });
    }

    let keys = schema.degree_keys(n.unwrap_or(0));
    let mut degrees = Vec::new();
    if let Some(v) = top.get("degrees") {
        let m = get_object(v, "/degrees")?;
        let allowed: Vec<&str> = keys.iter().map(String::as_str).collect();
        check_keys(m, &allowed, "/degrees")?;
        for (k, v) in m {
            let d = v
                .as_i64()
                .ok_or_else(|| Diagnostic::new(Code::BadType, format!("/degrees/{k}"), "expected an integer"))?;
            degrees.push((k.clone(), d));
        }
    }
    // the three-step schema may leave every degree out and ask for a search
    let optional = schema == Schema::Hodge111 && degrees.is_empty();
    if !optional {
        if let Some(k) = keys.iter().find(|k| !degrees.iter().any(|(d, _)| d == *k)) {
            return Err(Diagnostic::new(Code::MissingField, format!("/degrees/{k}"), format!("missing degree {k:?}")));
        }
    }

    let strict = match top.get("options") {
        None => None,
        Some(v) => {
            let m = get_object(v, "/options")?;
            check_keys(m, &["strict"], "/options")?;
            match m.get("strict") {
                None => None,
                Some(Value::Bool(b)) => Some(*b),
                Some(_) => return Err(Diagnostic::new(Code::BadType, "/options/strict", "expected a boolean")),
            }
        }
    };

    Ok(ProblemFile { schema, n, points, degrees, strict })
}

fn validate_point(schema: Schema, label: &str, w: &[Q]) -> Parsed<()> {
    let spread = |ws: &[Q]| match (ws.iter().max(), ws.iter().min()) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => Q::zero(),
    };
    match schema {
        Schema::Hodge1N => {
            let p = WeightedPoint1N { alpha: w[0].clone(), betas: w[1..].to_vec() };
            p.validate(label).map_err(|e| core_diagnostic(&e, ""))
        }
        _ => {
            let ordered = match schema {
                Schema::Unitary => w.windows(2).all(|x| x[0] <= x[1]),
                Schema::Hodge12 => w[1] <= w[2],
                _ => true,
            };
            if !ordered {
                let what = if schema == Schema::Unitary { "weights" } else { "beta1 <= beta2" };
                return Err(Diagnostic::new(Code::Order, "", format!("point {label}: {what} must be weakly increasing")));
            }
            if spread(w) >= Q::one() {
                return Err(Diagnostic::new(Code::Window, "", format!("point {label}: weights must span less than 1")));
            }
            Ok(())
        }
    }
}

/// Maps a checker error to a diagnostic. Point-level errors are located at
/// the weights of the named point when the file is known.
pub fn core_diagnostic(e: &Error, at: &str) -> Diagnostic {
    let code = match e {
        Error::Window(_) => Code::Window,
        Error::Tie(_) => Code::Tie,
        Error::Order(_) | Error::Unnormalized(_) => Code::Order,
        Error::Arity(..) | Error::DegreeCount(..) => Code::BadArity,
        Error::NonIntegerSum(_) => Code::NonIntegerSum,
        Error::NonzeroSum(_) => Code::NonzeroDegree,
        Error::DegreeSum(..) => Code::DegreeSum,
        Error::NoPoles => Code::NoPoles,
        Error::TooFewPoints(_) | Error::TooFewClasses(_) => Code::TooFewPoints,
        Error::BadSubset(..) | Error::BoxViolation(..) | Error::BadPartition(_) | Error::RingMismatch => {
            Code::BadPartition
        }
    };
    Diagnostic::new(code, at, e.to_string())
}

pub fn locate(e: &Error, file: &ProblemFile) -> Diagnostic {
    let label = match e {
        Error::Window(l) | Error::Tie(l) | Error::Order(l) | Error::Unnormalized(l) | Error::Arity(l, ..) => Some(l),
        _ => None,
    };
    let at = match (label.and_then(|l| file.point_index(l)), e) {
        (Some(i), _) => format!("/points/{i}/weights"),
        (None, Error::DegreeSum(..) | Error::DegreeCount(..)) => "/degrees".into(),
        (None, _) => "/points".into(),
    };
    core_diagnostic(e, &at)
}
