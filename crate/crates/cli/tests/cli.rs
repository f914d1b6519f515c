use std::path::Path;

use hocolim_cli::app::{run, Output};
use hocolim_cli::docs::Env;
use hocolim_cli::syntax::{is_keyword, parse, print, Code, Expr, ExprKind, KEYWORDS, WITH_METHOD};
use hocolim_core::Budget;
use proptest::prelude::*;
use serde_json::Value;

const MANIFEST: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/manifest.txt");
const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");

fn hocolim(args: &[&str]) -> Output {
    let mut v = vec!["hocolim".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run(&v)
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn betti(result: &Value) -> Vec<u64> {
    result["degrees"].as_array().unwrap().iter().map(|d| d["betti"].as_u64().unwrap()).collect()
}

#[test]
fn homology_of_a_sphere() {
    let o = hocolim(&["--deterministic", "homology", "boundary(3)"]);
    assert_eq!(o.exit_code, 0, "{}", o.stderr);
    let j = json(&o);
    assert_eq!(j["result"]["summary"], "H0=Z H1=0 H2=Z");
    assert_eq!(betti(&j["result"]["homology"]), vec![1, 0, 1]);
}

#[test]
fn hocolim_of_the_pushout_fixture_is_a_circle() {
    for method in ["srep", "bk"] {
        let o = hocolim(&["--deterministic", "--manifest", MANIFEST, "--method", method, "hocolim", "pushout"]);
        assert_eq!(o.exit_code, 0, "{}", o.stderr);
        let j = json(&o);
        assert_eq!(j["method"], method);
        assert_eq!(betti(&j["result"]["comparison"]["source"]), vec![1, 1, 0]);
        assert_eq!(j["result"]["comparison"]["iso"], false);
    }
}

#[test]
fn check_we_exit_codes() {
    let o = hocolim(&["--manifest", MANIFEST, "check-we", "identity(circle)"]);
    assert_eq!(o.exit_code, 0);
    assert_eq!(json(&o)["result"]["verdict"]["iso"], true);
    let o = hocolim(&["--manifest", MANIFEST, "check-we", "collapse"]);
    assert_eq!(o.exit_code, 1);
    assert_eq!(json(&o)["result"]["verdict"]["failing_degree"], 0);
}

#[test]
fn hocored_instances() {
    assert_eq!(hocolim(&["hocored-check", "relabelling"]).exit_code, 0);
    let o = hocolim(&["hocored-check", "negative"]);
    assert_eq!(o.exit_code, 2);
    assert!(json(&o)["result"]["verdict"]["conclusion"].is_null());
}

#[test]
fn diagnostics_carry_codes_and_positions() {
    let cases = [
        ("simplex(@)", "E-LEX at 1:9"),
        ("product(simplex(1)", "E-SYN at 1:19"),
        ("horn(2)", "E-ARITY at 1:1"),
        ("product(simplex(1), nowhere)", "E-UNBOUND at 1:21"),
    ];
    for (text, prefix) in cases {
        let o = hocolim(&["homology", text]);
        assert_eq!(o.exit_code, 64, "{text}");
        assert!(o.stderr.contains(prefix), "{text}: {}", o.stderr);
    }
    assert_eq!(parse("\"open").unwrap_err().code, Code::Lex);
    assert_eq!(parse("simplex[bk](1)").unwrap_err().code, Code::Syntax);
    let d = parse("product(simplex(1)").unwrap_err();
    assert!(d.expected.iter().any(|e| e.contains(')')));
}

#[test]
fn usage_errors() {
    assert_eq!(hocolim(&["verify", "--suite", "bogus"]).exit_code, 64);
    assert_eq!(hocolim(&["frobnicate"]).exit_code, 64);
    assert_eq!(hocolim(&["--method", "cubical", "homology", "point()"]).exit_code, 64);
    assert_eq!(hocolim(&["--help"]).exit_code, 0);
}

#[test]
fn fmt_of_the_shipped_fixtures_is_bit_exact() {
    for file in ["basic.txt", "shapes.txt", "diagrams.txt"] {
        let path = Path::new(FIXTURES).join(file);
        let o = hocolim(&["--manifest", MANIFEST, "fmt", path.to_str().unwrap()]);
        assert_eq!(o.exit_code, 0, "{file}: {}", o.stderr);
        assert_eq!(o.stdout, std::fs::read_to_string(&path).unwrap(), "{file}");
    }
}

#[test]
fn save_then_load_is_stable() {
    let env = Env::load_manifest(Path::new(MANIFEST), Budget::default()).unwrap();
    let names: Vec<String> = env.names().map(String::from).collect();
    let saved = env.save(&names);
    let mut again = Env::default();
    let loaded = again.load_text(&saved, Budget::default()).unwrap();
    assert_eq!(loaded, names);
    assert_eq!(again.save(&loaded), saved);
}

#[test]
fn deterministic_runs_are_byte_identical() {
    let args = ["--deterministic", "--manifest", MANIFEST, "hocolim", "swapping"];
    let a = hocolim(&args);
    let b = hocolim(&args);
    assert_eq!(a.exit_code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains("elapsed"));
}

fn ident() -> impl Strategy<Value = String> {
    "[a-z_][a-z0-9_']{0,5}".prop_filter("keyword", |s| !is_keyword(s))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        any::<u64>().prop_map(ExprKind::Number),
        "[a-z \"\\\\#,()]{0,6}".prop_map(ExprKind::Str),
        ident().prop_map(ExprKind::Ident),
    ]
    .prop_map(Expr::new);
    leaf.prop_recursive(4, 32, 3, |inner| {
        prop_oneof![
            (0..KEYWORDS.len(), proptest::option::of(ident()), prop::collection::vec(inner.clone(), 0..3)).prop_map(|(k, method, mut args)| {
                let (op, arities) = KEYWORDS[k];
                let method = method.filter(|_| WITH_METHOD.contains(&op));
                args.resize(arities[0], Expr::new(ExprKind::Number(0)));
                Expr::new(ExprKind::Call { op: op.into(), method, args })
            }),
            prop::collection::vec(("[a-z:\" ]{1,4}", inner), 0..3).prop_map(|entries| Expr::new(ExprKind::Record(entries))),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(e in expr()) {
        let text = print(&e);
        let back = parse(&text).unwrap_or_else(|d| panic!("{d}: {text}"));
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(print(&back), text);
    }
}
