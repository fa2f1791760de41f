use std::path::PathBuf;

use polyopt::{main_with, ResultDocument, ValueDoc};
use polyopt_core::rational::int;

fn problem(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../problems");
    p.push(name);
    p.display().to_string()
}

fn run(args: &[&str]) -> (i32, Vec<ResultDocument>) {
    let argv = std::iter::once("polyopt").chain(args.iter().copied());
    let (code, out, _) = main_with(argv);
    let docs = serde_json::Deserializer::from_str(&out)
        .into_iter::<ResultDocument>()
        .collect::<Result<Vec<_>, _>>()
        .unwrap_or_else(|e| panic!("bad output {out}: {e}"));
    (code, docs)
}

fn exact(s: &str) -> ValueDoc {
    ValueDoc::Exact(s.into())
}

#[test]
fn example1_fritz_john() {
    let (code, docs) = run(&[&problem("example1.json")]);
    assert_eq!(code, 0);
    let d = &docs[0];
    assert_eq!(d.status, "exact-optimal");
    assert_eq!(d.system.as_deref(), Some("fj"));
    assert_eq!(d.value, Some(exact("0")));
    assert_eq!(d.minimizers, vec![vec![exact("0"), exact("0")]]);
    assert_eq!(d.provenance.as_deref(), Some("radical-applied"));
}

#[test]
fn example2_kkt_and_dimension() {
    let (code, docs) = run(&["--system", "kkt", &problem("example2.json")]);
    assert_eq!(code, 0);
    assert_eq!(docs[0].value, Some(exact("-7")));
    assert_eq!(docs[0].minimizers, vec![vec![exact("-2"), exact("1")]]);

    let (code, docs) = run(&["--task", "dim-critical", &problem("example2.json")]);
    assert_eq!(code, 0);
    assert_eq!(docs[0].dimension, Some(0));
}

#[test]
fn closure_task_reports_eliminants() {
    // over the raw constraints the complex image of x2 is the whole line
    let (code, docs) = run(&["--task", "closure", &problem("example1.json")]);
    assert_eq!(code, 0);
    assert_eq!(docs[0].dimension, Some(1));
    assert!(docs[0].eliminants.is_empty());

    // x1 + x2 on the circle x1² + x2² = 2 meeting the line x1 = x2
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("circle.json");
    let text = r#"{
      "variables": ["x1", "x2"],
      "objective": [{ "coef": "1", "mono": { "x1": 1 } }, { "coef": "1", "mono": { "x2": 1 } }],
      "equalities": [
        [{ "coef": "1", "mono": { "x1": 2 } }, { "coef": "1", "mono": { "x2": 2 } }, { "coef": "-2", "mono": {} }],
        [{ "coef": "1", "mono": { "x1": 1 } }, { "coef": "-1", "mono": { "x2": 1 } }]
      ]
    }"#;
    std::fs::write(&path, text).unwrap();
    let (code, docs) = run(&["--task", "closure", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let d = &docs[0];
    assert_eq!(d.dimension, Some(0));
    let polys: Vec<_> = d.eliminants.iter().map(|p| p.to_poly().unwrap()).collect();
    assert_eq!(polys.len(), 1);
    for t in [-2, 2] {
        assert_eq!(polys[0].eval(&int(t)), int(0));
    }
    assert_eq!(polys[0].degree(), 2);
}

#[test]
fn sentinels_are_inconclusive_or_complete() {
    let (code, docs) = run(&[&problem("sentinel-minus.json")]);
    assert_eq!(code, 2);
    assert_eq!(docs[0].status, "minus-infinity-inconclusive");
    assert_eq!(docs[0].value, Some(exact("-inf")));

    let (code, docs) = run(&["--system", "kkt", &problem("sentinel-plus.json")]);
    assert_eq!(docs[0].status, "plus-infinity-no-solution");
    assert_eq!(docs[0].value, Some(exact("+inf")));
    assert_eq!(code, 2);
}

#[test]
fn batch_keeps_argument_order_and_worst_code() {
    let files = [
        problem("example2.json"),
        problem("example1.json"),
        problem("missing.json"),
    ];
    let args: Vec<&str> = files.iter().map(String::as_str).collect();
    let (code, docs) = run(&args);
    assert_eq!(code, 1);
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0].value, Some(exact("-7")));
    assert_eq!(docs[1].value, Some(exact("0")));
    assert_eq!(docs[2].status, "error");
    assert!(docs[2].file.as_deref().unwrap().ends_with("missing.json"));
}

#[test]
fn decimal_coefficients_are_rejected() {
    let dir = std::env::temp_dir().join(format!("polyopt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("decimal.json");
    std::fs::write(
        &path,
        r#"{"variables": ["x"], "objective": [{"coef": "0.5", "mono": {"x": 2}}]}"#,
    )
    .unwrap();
    let (code, docs) = run(&[path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(code, 1);
    let err = docs[0].error.as_deref().unwrap();
    assert!(err.contains("0.5") && err.contains("line 1"), "{err}");
}

#[test]
fn misplaced_flags_fail() {
    let (code, docs) = run(&[
        "--task",
        "closure",
        "--system",
        "kkt",
        &problem("example1.json"),
    ]);
    assert_eq!(code, 1);
    assert!(docs[0].error.as_deref().unwrap().contains("--system"));

    let (code, docs) = run(&["--plus", &problem("example1.json")]);
    assert_eq!(code, 1);
    assert_eq!(docs[0].status, "error");

    let (code, docs) = run(&["--system", "sing", &problem("example1.json")]);
    assert_eq!(code, 1);
    assert_eq!(docs[0].status, "error");
}

#[test]
fn unfiltered_run_is_inconclusive() {
    let (code, docs) = run(&["--filter", "off", &problem("example2.json")]);
    assert_eq!(code, 2);
    assert_eq!(docs[0].status, "candidate-min-unfiltered");
    assert!(docs[0].minimizers.is_empty());
}

#[test]
fn text_output() {
    let (code, out, _) = main_with(["polyopt", "--output", "text", &problem("example1.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("value:       0\n"), "{out}");
    assert!(out.contains("minimizer:   (0, 0)\n"), "{out}");
}

#[test]
fn documents_round_trip() {
    let (_, docs) = run(&["--critical-dimension", &problem("example2.json")]);
    let text = serde_json::to_string(&docs[0]).unwrap();
    let back: ResultDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(back, docs[0]);
    assert_eq!(back.critical_dimension, Some(0));
}
