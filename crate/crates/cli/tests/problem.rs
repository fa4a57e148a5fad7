use hodge_cli::{parse_problem_file, parse_rational, Code, PointEntry, ProblemFile, Schema};
use hodge_core::Q;
use proptest::prelude::*;

fn q(a: i64, b: i64) -> Q {
    Q::new(a.into(), b.into())
}

const MINIMAL: &str = r#"{
  "schema": "hodge1n",
  "n": 2,
  "points": [
    {"label": "0", "weights": ["-1/3", "-1/6", "1/6"]},
    {"label": "1", "weights": ["-1/3", "-1/6", "1/6"]},
    {"label": "inf", "weights": ["-1/3", "-1/6", "1/6"]}
  ],
  "degrees": {"L": 0, "V": 1}
}"#;

fn code_at(text: &str) -> (Code, String) {
    let d = parse_problem_file(text).unwrap_err();
    (d.code, d.location)
}

fn with_weights(schema: &str, extra: &str, weights: &[&str]) -> String {
    let w: Vec<String> = weights.iter().map(|x| format!("\"{x}\"")).collect();
    format!(
        r#"{{"schema": "{schema}", {extra} "points": [{{"label": "a", "weights": [{}]}}]}}"#,
        w.join(", ")
    )
}

#[test]
fn minimal_file_parses() {
    let p = parse_problem_file(MINIMAL).unwrap();
    assert_eq!(p.schema, Schema::Hodge1N);
    assert_eq!(p.n, Some(2));
    assert_eq!(p.points.len(), 3);
    assert_eq!(p.points[2].label, "inf");
    assert_eq!(p.points[0].weights, vec![q(-1, 3), q(-1, 6), q(1, 6)]);
    assert_eq!((p.degree("L"), p.degree("V")), (Some(0), Some(1)));
    assert_eq!(p.strict, None);
}

#[test]
fn rationals() {
    assert_eq!(parse_rational("3"), Ok(q(3, 1)));
    assert_eq!(parse_rational("-2/4"), Ok(q(-1, 2)));
    assert_eq!(parse_rational("+5/10"), Ok(q(1, 2)));
    assert_eq!(parse_rational("1/0"), Err(Code::DenZero));
    assert_eq!(parse_rational("-7/00"), Err(Code::DenZero));
    for bad in ["", "/", "1/", "/2", "1/-2", "1.5", " 1", "1 /2", "a", "1/2/3", "--1", "1_0"] {
        assert_eq!(parse_rational(bad), Err(Code::BadRational), "{bad:?}");
    }
}

#[test]
fn zero_denominator_is_located() {
    let text = MINIMAL.replacen("\"-1/6\"", "\"1/0\"", 1);
    assert_eq!(code_at(&text), (Code::DenZero, "/points/0/weights/1".into()));
}

#[test]
fn wide_window_is_rejected() {
    let text = MINIMAL.replacen("[\"-1/3\", \"-1/6\", \"1/6\"]", "[\"-1/3\", \"-1/6\", \"2/3\"]", 2);
    assert_eq!(code_at(&text), (Code::Window, "/points/0/weights".into()));
}

#[test]
fn diagnostics_have_distinct_codes() {
    let cases: Vec<(String, Code, &str)> = vec![
        ("[1, 2]".into(), Code::BadType, ""),
        ("{".into(), Code::BadJson, ""),
        (r#"{"points": []}"#.into(), Code::MissingField, "/schema"),
        (r#"{"schema": "rank3", "points": []}"#.into(), Code::UnknownSchema, "/schema"),
        (r#"{"schema": "hodge1n", "points": []}"#.into(), Code::MissingField, "/n"),
        (r#"{"schema": "hodge12", "n": 2, "points": []}"#.into(), Code::UnknownField, "/n"),
        (r#"{"schema": "hodge11", "points": [], "extra": 1}"#.into(), Code::UnknownField, "/extra"),
        (with_weights("hodge11", "", &["1/2", "x"]), Code::BadRational, "/points/0/weights/1"),
        (with_weights("hodge11", "", &["1/2"]), Code::BadArity, "/points/0/weights"),
        (with_weights("hodge12", r#""degrees": {"L": 0, "V": 0},"#, &["0", "1/2", "1/3"]), Code::Order, "/points/0/weights"),
        (with_weights("unitary", r#""n": 2,"#, &["1/2", "1/3"]), Code::Order, "/points/0/weights"),
        (with_weights("hodge1n", r#""n": 2, "degrees": {"L": 0, "V": 0},"#, &["0", "1/2", "1/3"]), Code::Order, "/points/0/weights"),
        (with_weights("hodge1n", r#""n": 2, "degrees": {"L": 0, "V": 0},"#, &["1/3", "1/3", "1/2"]), Code::Tie, "/points/0/weights"),
        (with_weights("hodge12", r#""degrees": {"L": 0},"#, &["0", "1/3", "1/2"]), Code::MissingField, "/degrees/V"),
        (with_weights("hodge12", r#""degrees": {"L": 0, "V": 0, "W": 1},"#, &["0", "1/3", "1/2"]), Code::UnknownField, "/degrees/W"),
        (with_weights("hodge12", r#""degrees": {"L": 0, "V": "1"},"#, &["0", "1/3", "1/2"]), Code::BadType, "/degrees/V"),
        (with_weights("hodge11", r#""options": {"strict": 1},"#, &["0", "1/2"]), Code::BadType, "/options/strict"),
        (
            r#"{"schema": "hodge11", "points": [{"label": "a", "weights": ["0", "0"]}, {"label": "a", "weights": ["0", "0"]}]}"#.into(),
            Code::DuplicateLabel,
            "/points/1/label",
        ),
        (r#"{"schema": "hodge11", "points": [{"label": "a", "weights": [0, "0"]}]}"#.into(), Code::BadRational, "/points/0/weights/0"),
    ];
    for (text, code, at) in cases {
        assert_eq!(code_at(&text), (code, at.to_string()), "{text}");
    }
}

#[test]
fn three_step_degrees_may_be_omitted_together() {
    let base = r#"{"schema": "hodge111", "points": [{"label": "a", "weights": ["-1/4", "0", "1/4"]}]"#;
    assert!(parse_problem_file(&format!("{base}}}")).unwrap().degrees.is_empty());
    assert_eq!(code_at(&format!(r#"{base}, "degrees": {{"d1": 1, "d2": 0}}}}"#)), (Code::MissingField, "/degrees/d3".into()));
}

#[test]
fn shipped_problems_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../problems");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let p = parse_problem_file(&text).unwrap();
        assert_eq!(p.to_json(), text);
        assert_eq!(parse_problem_file(&p.to_json()).unwrap(), p);
        seen += 1;
    }
    assert!(seen >= 5);
}

fn arb_q() -> impl Strategy<Value = Q> {
    (-200i64..200, 1i64..60).prop_map(|(a, b)| q(a, b))
}

fn arb_problem() -> impl Strategy<Value = ProblemFile> {
    let schema = prop::sample::select(Schema::ALL.to_vec());
    (schema, 1usize..5, 1usize..5, any::<Option<bool>>(), prop::collection::vec(-9i64..9, 8)).prop_flat_map(
        |(schema, n, s, strict, degs)| {
            let (width, n, keys): (usize, Option<usize>, Vec<String>) = match schema {
                Schema::Unitary => (n, Some(n), vec![]),
                Schema::Hodge1N => (n + 1, Some(n), vec!["L".into(), "V".into()]),
                Schema::Hodge12 => (3, None, vec!["L".into(), "V".into()]),
                Schema::Hodge11 => (2, None, vec![]),
                Schema::Hodge111 => (3, None, (1..=3).map(|i| format!("d{i}")).collect()),
                Schema::Chain => (n, Some(n), (1..=n).map(|i| format!("d{i}")).collect()),
            };
            let degrees: Vec<(String, i64)> = keys.into_iter().zip(degs).collect();
            // strictly increasing weights inside a window of width 1 satisfy every schema
            let point = prop::collection::btree_set(0i64..97, width).prop_map(|set| set.into_iter().map(|x| q(x - 48, 97)).collect::<Vec<_>>());
            prop::collection::vec(point, s).prop_map(move |ws| ProblemFile {
                schema,
                n,
                points: ws.into_iter().enumerate().map(|(i, weights)| PointEntry { label: format!("p{i}"), weights }).collect(),
                degrees: degrees.clone(),
                strict,
            })
        },
    )
}

proptest! {
    #[test]
    fn rational_display_parses_back(x in arb_q()) {
        prop_assert_eq!(parse_rational(&x.to_string()), Ok(x));
    }

    #[test]
    fn problems_round_trip(p in arb_problem()) {
        let text = p.to_json();
        let back = parse_problem_file(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_json(), text);
    }
}
