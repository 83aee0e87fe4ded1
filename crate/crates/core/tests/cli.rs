use pentaflow::cli::{run_from, verify, Suite, VerifyArgs};
use pentaflow::golden::GoldenNum;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_from(std::iter::once("pentaflow").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn verify_args(depth: usize, suites: Vec<Suite>, jobs: usize) -> VerifyArgs {
    VerifyArgs {
        depth,
        suites,
        jobs,
        conjectures_advisory: false,
        max_crossings: 20_000,
        radius: 2,
        max_depth: 8,
        json: true,
    }
}

#[test]
fn direction_json_is_exact() {
    let (code, out, _) = run(&["direction", "0", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let x: GoldenNum = serde_json::from_value(v["coordinate"].clone()).unwrap();
    assert_eq!(x.to_string(), v["coordinate_text"].as_str().unwrap());
    assert_eq!(v["periods"], serde_json::json!([3, 5]));
}

#[test]
fn direction_rejects_bad_digits() {
    let (code, _, err) = run(&["direction", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad index"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn orbit_words() {
    assert_eq!(run(&["orbit", "--long"]).1.trim(), "4 3");
    assert_eq!(run(&["orbit"]).1.trim(), "2 5");
    assert_eq!(run(&["orbit", "BOTTOM", "--long"]).1.trim(), "2 3");
    assert_eq!(run(&["orbit", "2", "--roman"]).1.trim(), "I IV");
    let w: pentaflow::orbits::CyclicWord = run(&["orbit", "3", "1", "--short", "--arabic"]).1.trim().parse().unwrap();
    assert_eq!(w, "4 3 2 3 4 1 4 1".parse().unwrap());
    let w: pentaflow::orbits::CyclicWord = run(&["orbit", "2", "3", "--short", "--roman"]).1.trim().parse().unwrap();
    assert_eq!(w, "IV I IV II I".parse().unwrap());
    assert_eq!(run(&["orbit", "--short", "--long"]).0, 2);
}

#[test]
fn verify_counts_and_exit_codes() {
    let (code, out, _) = run(&["verify", "--depth", "3", "--suite", "periods"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("periods: 65 checked, 0 failures"), "{out}");
    assert_eq!(run(&["verify", "--depth", "0"]).0, 2);
    assert_eq!(run(&["verify", "--depth", "9"]).0, 2);
    let (code, out, _) = run(&["verify", "--depth", "1", "--suite", "conjectures"]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = run(&["verify", "--depth", "1", "--suite", "conjectures", "--conjectures-advisory"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(advisory)"));
}

#[test]
fn verify_budget_exhaustion_exits_three() {
    let (code, out, _) = run(&["verify", "--depth", "1", "--suite", "orbits", "--max-crossings", "3"]);
    assert_eq!(code, 3, "{out}");
}

#[test]
fn verify_ledger_does_not_depend_on_workers() {
    let suites = vec![Suite::Periods, Suite::Orbits, Suite::MRelation, Suite::Reduction];
    let one = serde_json::to_string(&verify(&verify_args(2, suites.clone(), 1)).unwrap()).unwrap();
    let three = serde_json::to_string(&verify(&verify_args(2, suites.clone(), 3)).unwrap()).unwrap();
    let again = serde_json::to_string(&verify(&verify_args(2, suites, 2)).unwrap()).unwrap();
    assert_eq!(one, three);
    assert_eq!(one, again);
}

#[test]
fn render_surface_and_billiard() {
    let (code, svg, _) = run(&["render", "2", "--surface"]);
    assert_eq!(code, 0);
    assert!(svg.starts_with("<?xml") && svg.contains("version=\"1.1\""));
    assert_eq!(svg.matches("<polygon").count(), 2);
    assert!(svg.contains("<polyline"));
    assert!(!svg.contains("warning"));

    let (code, svg, _) = run(&["render", "2", "--billiard"]);
    assert_eq!(code, 0);
    assert_eq!(svg.matches("<polygon").count(), 1);

    let (code, svg, _) = run(&["render", "--u", "0"]);
    assert_eq!(code, 0);
    assert!(svg.contains("#1f5fbf") && svg.contains("#c0392b"), "both strips drawn");

    let (code, svg, _) = run(&["render", "--vector", "1,0,0,1"]);
    assert_eq!(code, 0);
    assert!(svg.contains("<polyline"));
}

#[test]
fn render_partial_trace_has_banner() {
    let (code, svg, _) = run(&["render", "1", "2", "3", "--max-crossings", "5"]);
    assert_eq!(code, 3);
    assert!(svg.contains("warning: the Short trajectory did not close"), "{svg}");
}

#[test]
fn render_writes_file() {
    let path = std::env::temp_dir().join(format!("pentaflow-render-{}.svg", std::process::id()));
    let (code, out, _) = run(&["render", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(svg.ends_with("</svg>\n"));
}

#[test]
fn render_numbers_have_at_most_fifteen_significant_digits() {
    let (_, svg, _) = run(&["render", "1", "1"]);
    for tok in svg.split(|c: char| !(c.is_ascii_digit() || c == '.' || c == '-')) {
        let digits = tok.chars().filter(|c| c.is_ascii_digit()).collect::<String>();
        let significant = digits.trim_start_matches('0');
        assert!(significant.len() <= 15, "{tok}");
    }
}
