mod common;

use std::process::Command as Process;

use clap::Parser;
use proptest::prelude::*;
use skewgentle_cli::report::Status;
use skewgentle_cli::{load_presentation, parse_presentation, run_on_text, Cli, ParseError, PresentationDocument};
use skewgentle_core::presets;
use skewgentle_core::random::random_triple;

const EXAMPLE: &str = include_str!("fixtures/example.json");
const SPECIAL_LOOP: &str = include_str!("fixtures/special_loop.json");
const SPECIAL_LOOP_REPORT: &str = include_str!("fixtures/special_loop_report.txt");

fn cli(args: &[&str]) -> Cli {
    Cli::parse_from(std::iter::once("skewgentle").chain(args.iter().copied()))
}

#[test]
fn parses_the_example() {
    let doc = parse_presentation(EXAMPLE).unwrap();
    assert_eq!(doc.vertices.len(), 3);
    assert_eq!(doc.arrows.len(), 5);
    assert_eq!(doc.relations, [["b", "a"], ["c", "b"]]);
    assert_eq!(doc.special, ["eps2", "eps3"]);
    let t = doc.validate().unwrap();
    // ["b", "a"] is "first a, then b".
    let q = t.quiver();
    let (a, b) = (q.arrow_index("a").unwrap(), q.arrow_index("b").unwrap());
    assert!(t.in_r(a, b));
    assert!(!t.in_r(b, a));
}

#[test]
fn schema_errors() {
    let long = EXAMPLE.replace(r#"["b", "a"]"#, r#"["c", "b", "a"]"#);
    assert!(matches!(parse_presentation(&long), Err(ParseError::Schema { location: None, .. })));
    let empty = r#"{"field": {"char": 0}, "vertices": [], "arrows": []}"#;
    assert!(matches!(parse_presentation(empty), Err(ParseError::Schema { .. })));
    let unknown = EXAMPLE.replace(r#""special""#, r#""specials""#);
    match parse_presentation(&unknown) {
        Err(ParseError::Schema { location: Some((line, _)), message }) => {
            assert_eq!(line, 12);
            assert!(message.contains("specials"), "{message}");
        }
        other => panic!("{other:?}"),
    }
    let typed = EXAMPLE.replace(r#""degree": 1"#, r#""degree": "one""#);
    assert!(matches!(parse_presentation(&typed), Err(ParseError::Schema { location: Some((5, _)), .. })));
}

#[test]
fn syntax_errors_carry_positions() {
    let broken = EXAMPLE.replace(r#""target": "3","#, r#""target": "3""#);
    match parse_presentation(&broken) {
        Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (6, 46)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_presentation("{"), Err(ParseError::Syntax { line: 1, .. })));
}

#[test]
fn duplicate_ids() {
    let dup = EXAMPLE.replace(r#"{"id": "c","#, r#"{"id": "b","#);
    assert_eq!(
        parse_presentation(&dup),
        Err(ParseError::DuplicateId {
            kind: "arrow",
            id: "b".into()
        })
    );
    let dup = EXAMPLE.replace(r#"["1", "2", "3"]"#, r#"["1", "2", "2"]"#);
    assert!(matches!(parse_presentation(&dup), Err(ParseError::DuplicateId { kind: "vertex", .. })));
}

#[test]
fn semantic_errors_come_from_validation() {
    let bad = EXAMPLE.replace(r#""eps2", "source": "2", "target": "2", "degree": 0"#, r#""eps2", "source": "2", "target": "2", "degree": 1"#);
    let err = load_presentation(&bad).unwrap_err();
    assert!(err.to_string().contains("eps2"), "{err}");
    let o = run_on_text(&cli(&["validate", "x.json"]), &bad);
    assert_eq!(o.code, 1);
    assert!(o.stdout.is_empty());
}

#[test]
fn example_generators_in_json() {
    let o = run_on_text(&cli(&["report", "x.json", "--format", "json"]), EXAMPLE);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let classes: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g["class"].as_str().unwrap()).collect();
    assert_eq!(classes, ["c2", "c3", "c4"]);
    assert_eq!(v["generators"][2]["element"], "(c.b.a, e_1)");
    assert_eq!((v["generators"][2]["n"].as_u64(), v["generators"][2]["j"].as_i64()), (Some(3), Some(-1)));
    assert_eq!(v["geometry"]["orbifold_points"], 2);
    for verdict in v["verdicts"].as_array().unwrap() {
        assert_ne!(verdict["status"], "FAIL", "{verdict}");
    }
    // Keys are sorted.
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(o.stdout.find("\"bracket\"").unwrap() < o.stdout.find("\"window\"").unwrap());
}

#[test]
fn special_loop_golden_text() {
    let o = run_on_text(&cli(&["report", "x.json", "--format", "text"]), SPECIAL_LOOP);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, SPECIAL_LOOP_REPORT);
}

#[test]
fn empty_window_skips_everything() {
    let c = cli(&["report", "x.json", "--j-min", "1", "--j-max", "0"]);
    let o = run_on_text(&c, EXAMPLE);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(v["dimensions"].as_array().unwrap().is_empty());
    assert!(v["cup"].as_array().unwrap().is_empty());
    assert!(v["bracket"].as_array().unwrap().is_empty());
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["status"] == "SKIPPED"));
}

#[test]
fn hh_and_strict_mode() {
    let grid = run_on_text(&cli(&["hh", "x.json", "--n-max", "2", "--j-min", "-1", "--j-max", "1"]), SPECIAL_LOOP);
    assert_eq!(grid.code, 0);
    assert_eq!(
        grid.stdout,
        "dimensions of HH^(n,j), variant d (? = not certified)\n  n\\j   -1    0    1\n    0    0    2    0\n    1    0    0    0\n    2    0    0    0\n"
    );
    let delta = run_on_text(&cli(&["hh", "x.json", "--n-max", "1", "--j-min", "0", "--j-max", "0", "--variant", "delta"]), SPECIAL_LOOP);
    assert!(delta.stdout.contains("variant delta"));
    // Grading (0,0,0): the length bound cannot certify j = 0.
    let flat = PresentationDocument::from_triple(&presets::three_cycle((0, 0, 0), 0)).to_json();
    let args = ["hh", "x.json", "--n-max", "2", "--j-min", "0", "--j-max", "0", "--len-max", "6"];
    assert_eq!(run_on_text(&cli(&args), &flat).code, 0);
    let strict: Vec<&str> = args.iter().copied().chain(["--strict"]).collect();
    let o = run_on_text(&cli(&strict), &flat);
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains('?'));
}

#[test]
fn subcommands_print_their_tables() {
    let g = run_on_text(&cli(&["generators", "x.json"]), EXAMPLE);
    assert!(g.stdout.contains("  c3:\n    (c, c)  (n, j) = (1, 0), total 1\n"), "{}", g.stdout);
    let r = run_on_text(&cli(&["relations", "x.json"]), EXAMPLE);
    assert!(r.stdout.starts_with("{c2⌣c4, c3⌣c3, c3⌣c4, c4⌣c4}\n"));
    let b = run_on_text(&cli(&["bracket", "x.json", "--n-max", "4"]), EXAMPLE);
    assert!(b.stdout.contains("[c3: (c, c), c4: (c.b.a, e_1)] = -1·(H_VI: (c.b.a, e_1))"), "{}", b.stdout);
    let p = run_on_text(&cli(&["products", "x.json", "--n-max", "4"]), EXAMPLE);
    assert!(p.stdout.contains("c3: (c, c) ⌣ c3: (c, c) = 0"), "{}", p.stdout);
    let geo = run_on_text(&cli(&["geometry", "x.json"]), EXAMPLE);
    assert_eq!(geo.code, 0);
    assert!(geo.stdout.contains("(b, marks, G-punctures, G*-punctures, orbifold, genus) = (1, 1, 1, 0, 2, 0)"));
    assert!(geo.stdout.contains("correspondence: PASS"));
    let check = run_on_text(&cli(&["check", "x.json"]), EXAMPLE);
    assert_eq!(check.code, 0);
    assert_eq!(check.stdout.lines().count(), 17);
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let bin = env!("CARGO_BIN_EXE_skewgentle");
    let dir = std::env::temp_dir().join(format!("skewgentle-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("example.json");
    std::fs::write(&file, EXAMPLE).unwrap();
    let run = |threads: &str| {
        let out = Process::new(bin)
            .args(["report", file.to_str().unwrap(), "--format", "json", "--n-max", "4"])
            .env("SKEWGENTLE_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("4"));
    let missing = Process::new(bin).args(["validate", dir.join("absent.json").to_str().unwrap()]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn report_status_flags() {
    let t = presets::kronecker(0, 0, 0);
    let r = skewgentle_cli::build_report(
        &t,
        skewgentle_cli::ReportOptions {
            bounds: skewgentle_structure::Bounds::new(3, -2, 2, 8),
            verify: Default::default(),
        },
    );
    assert!(!r.failed());
    assert!(!r.has_unsound_blocks());
    assert_eq!(r.verdict("correspondence").unwrap().status, Status::Pass);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(seed in 0u64..100_000, ch in prop::sample::select(vec![0u64, 2, 3])) {
        let t = random_triple(seed, 6, ch);
        let doc = PresentationDocument::from_triple(&t);
        let parsed = parse_presentation(&doc.to_json()).unwrap();
        prop_assert_eq!(&parsed, &doc);
        let again = parse_presentation(&parsed.to_json()).unwrap();
        prop_assert_eq!(&again, &parsed);
        let back = PresentationDocument::from_triple(&parsed.validate().unwrap());
        prop_assert_eq!(back, doc);
    }
}
