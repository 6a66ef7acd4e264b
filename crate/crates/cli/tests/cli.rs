use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use precedent_logic::gen::{random_case_base, random_signature, rng};
use precedent_logic::io::case_base_to_json;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_precedent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let ok = run(&["check", path(&data("running.json"))]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).starts_with("consistent"));

    let bad = run(&[
        "--format",
        "json",
        "check",
        path(&data("running_with_c3.json")),
    ]);
    assert_eq!(code(&bad), 1);
    let v = json(&bad);
    assert_eq!(v["consistent"], false);
    assert_eq!(
        v["witness"]["state"],
        serde_json::json!(["pi1", "pi2", "delta1"])
    );
    assert_eq!(v["witness"]["plaintiff_case"], "c1");
    assert_eq!(v["witness"]["defendant_case"], "c3");

    let invalid = run(&["check", path(&data("reason_not_in_facts.json"))]);
    assert_eq!(code(&invalid), 2);
    assert!(String::from_utf8_lossy(&invalid.stderr).contains("reason not contained in facts"));

    assert_eq!(code(&run(&["check", "/nonexistent/base.json"])), 2);
}

#[test]
fn malformed_and_unknown_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"signature\": ").unwrap();
    assert_eq!(code(&run(&["check", path(&broken)])), 2);

    let unknown = dir.path().join("unknown.json");
    std::fs::write(
        &unknown,
        r#"{"signature": {"plaintiff": ["p"], "defendant": []},
            "cases": [{"id": "a", "facts": ["q"], "reason": [], "outcome": "plaintiff"}]}"#,
    )
    .unwrap();
    let out = run(&["check", path(&unknown)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown factor `q`"));

    let out = run(&["decide", path(&data("running.json")), "--facts", "pi9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn decide_forced_outcomes() {
    let base = data("running.json");
    let out = run(&["decide", path(&base), "--facts", "pi1,pi3,delta1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("1"));
    assert!(text.contains("c1"));

    let out = run(&["decide", path(&base), "--facts", "pi2,delta2"]);
    assert_eq!(stdout(&out).trim(), "?");
    let out = run(&["decide", path(&base)]);
    assert_eq!(stdout(&out).trim(), "?");

    let out = run(&[
        "--format",
        "json",
        "decide",
        path(&base),
        "--facts",
        "π1, π3, δ1",
    ]);
    let v = json(&out);
    assert_eq!(v["outcome"], "1");
    assert_eq!(v["forcing"]["1"], serde_json::json!(["c1"]));

    let out = run(&[
        "decide",
        path(&data("running_with_c3.json")),
        "--facts",
        "pi1,pi2,delta1",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).lines().next(), Some("conflict"));
}

#[test]
fn update_verdicts() {
    let base = data("running.json");
    let accept1 = r#"{"facts": ["pi2", "delta2"], "reason": ["pi2"], "outcome": "plaintiff"}"#;
    let accept2 = r#"{"facts": ["pi2", "delta2"], "reason": ["delta2"], "outcome": "defendant"}"#;
    let reject = r#"{"id": "c3", "facts": ["pi1", "pi2", "delta1"], "reason": ["delta1"], "outcome": "defendant"}"#;
    for case in [accept1, accept2] {
        let out = run(&["update", path(&base), "--case", case]);
        assert_eq!(code(&out), 0, "{case}");
        assert_eq!(stdout(&out).trim(), "accept");
    }
    let out = run(&["--format", "json", "update", path(&base), "--case", reject]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["accept"], false);
    assert_eq!(
        v["witness"]["state"],
        serde_json::json!(["pi1", "pi2", "delta1"])
    );

    assert_eq!(code(&run(&["update", path(&base), "--case", "{"])), 2);
    let polarity = r#"{"facts": ["pi2"], "reason": ["pi2"], "outcome": "defendant"}"#;
    assert_eq!(code(&run(&["update", path(&base), "--case", polarity])), 2);
}

#[test]
fn translations() {
    let out = run(&["translate", path(&data("running.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "<>(pi1 & delta1 & delta3 & ~pi2 & ~pi3 & ~delta2 & t(1))\n\
         <>(pi2 & delta3 & ~pi1 & ~pi3 & ~delta1 & ~delta2 & t(0))\n"
    );
    let out = run(&[
        "translate",
        path(&data("result_case.json")),
        "--model",
        "result",
    ]);
    assert_eq!(
        stdout(&out).trim(),
        "<>(pi1 & pi2 & delta1 & ~pi3 & ~delta2 & ~delta3 & t(1))"
    );
    let out = run(&[
        "translate",
        path(&data("running.json")),
        "--model",
        "result",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&["translate", path(&data("empty.json"))]);
    assert_eq!(stdout(&out).trim(), "true");
}

#[test]
fn emitted_model_evaluates() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("canonical.json");
    let out = run(&[
        "translate",
        path(&data("running.json")),
        "--emit-model",
        path(&model),
    ]);
    assert_eq!(code(&out), 0);
    let s1 = "pi1,pi3,delta1,delta3";
    let eval = |state: &str, formula: &str| {
        run(&["eval", path(&model), "--state", state, "--formula", formula])
    };
    let out = eval(s1, "t(1)");
    assert_eq!(
        (code(&out), stdout(&out).trim().to_string()),
        (0, "true".to_string())
    );
    let out = eval(s1, "t(0)");
    assert_eq!(
        (code(&out), stdout(&out).trim().to_string()),
        (1, "false".to_string())
    );
    for state in ["", s1, "pi2,delta2"] {
        assert_eq!(
            code(&eval(state, "[] t(1) -> t(1)")),
            0,
            "axiom T at {state}"
        );
    }
    let out = eval(s1, "t(1) &");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("column"));

    let refused = dir.path().join("refused.json");
    let out = run(&[
        "translate",
        path(&data("running_with_c3.json")),
        "--emit-model",
        path(&refused),
    ]);
    assert_eq!(code(&out), 1);
    assert!(!refused.exists());
}

#[test]
fn eval_rejects_foreign_state() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.json");
    std::fs::write(
        &model,
        r#"{"signature": {"plaintiff": ["p"], "defendant": []}, "states": [["p"]], "decisions": ["1"]}"#,
    )
    .unwrap();
    assert_eq!(
        code(&run(&[
            "eval",
            path(&model),
            "--state",
            "p",
            "--formula",
            "t(1)"
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "eval",
            path(&model),
            "--state",
            "",
            "--formula",
            "t(1)"
        ])),
        2
    );
}

#[test]
fn explanations() {
    let base = data("running.json");
    let out = run(&[
        "--format",
        "json",
        "explain",
        path(&base),
        "--facts",
        "pi1,pi3,delta1,delta3",
        "--kind",
        "axp",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["kind"], "axp");
    assert_eq!(v["target"], "1");
    assert_eq!(
        v["terms"],
        serde_json::json!([{"positive": ["pi1"], "negative": ["delta2"]}])
    );

    let out = run(&[
        "explain",
        path(&base),
        "--facts",
        "pi2,delta1,delta3",
        "--kind",
        "wcxp",
    ]);
    assert!(stdout(&out).lines().any(|l| l.trim() == "~pi1"));

    let out = run(&["explain", path(&base), "--kind", "pimp", "--outcome", "0"]);
    let terms: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("  "))
        .map(|l| l.trim().to_string())
        .collect();
    assert_eq!(terms, ["delta3 & ~pi1 & ~pi3"]);

    assert_eq!(code(&run(&["explain", path(&base), "--kind", "pimp"])), 2);
    assert_eq!(
        code(&run(&[
            "explain",
            path(&base),
            "--kind",
            "axp",
            "--all-models"
        ])),
        2
    );
    let out = run(&[
        "explain",
        path(&data("running_with_c3.json")),
        "--kind",
        "axp",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("{pi1, pi2, delta1}"));
}

#[test]
fn explanations_in_all_models_on_a_small_base() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("small.json");
    std::fs::write(
        &base,
        r#"{"signature": {"plaintiff": ["p"], "defendant": ["d"]},
            "cases": [{"id": "a", "facts": ["p", "d"], "reason": ["p"], "outcome": "plaintiff"}]}"#,
    )
    .unwrap();
    let all = |kind: &str| {
        run(&[
            "--format",
            "json",
            "explain",
            path(&base),
            "--facts",
            "p,d",
            "--kind",
            kind,
            "--all-models",
        ])
    };
    // the constant-1 model also satisfies the translation, and its only AXp is the empty term
    let out = all("axp");
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["terms"], serde_json::json!([]));
    assert_eq!(
        json(&all("waxp"))["terms"],
        serde_json::json!([
            {"positive": ["p"], "negative": []},
            {"positive": ["p", "d"], "negative": []}
        ])
    );
    let out = run(&[
        "--bound",
        "1",
        "explain",
        path(&base),
        "--kind",
        "axp",
        "--all-models",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn satisfiability() {
    let sig = r#"{"plaintiff": ["p"], "defendant": []}"#;
    let out = run(&["sat", "--signature", sig, "--formula", "t(1) & t(0)"]);
    assert_eq!((code(&out), stdout(&out).trim()), (1, "unsatisfiable"));
    let out = run(&[
        "--format",
        "json",
        "sat",
        "--signature",
        sig,
        "--formula",
        "p & t(1)",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["state"], serde_json::json!(["p"]));
    assert!(v["model"]["decisions"].is_array());

    // without 2Mon a model may decide p for 0 and the empty state for 1
    let mixed = "<>(p & t(0)) & <>(~p & t(1))";
    assert_eq!(
        code(&run(&["sat", "--signature", sig, "--formula", mixed])),
        0
    );
    assert_eq!(
        code(&run(&[
            "sat",
            "--signature",
            sig,
            "--formula",
            mixed,
            "--prec"
        ])),
        1
    );

    let big = r#"{"plaintiff": ["a", "b"], "defendant": ["c", "d"]}"#;
    assert_eq!(
        code(&run(&["sat", "--signature", big, "--formula", "a"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "--bound",
            "1",
            "sat",
            "--signature",
            r#"{"plaintiff": ["a", "b"]}"#,
            "--formula",
            "a"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "--bound",
            "4",
            "sat",
            "--signature",
            sig,
            "--formula",
            "p"
        ])),
        2
    );
    assert_eq!(
        code(&run(&["sat", "--signature", sig, "--formula", "t(2)"])),
        2
    );
}

#[test]
fn check_agrees_with_translation_and_sat() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = rng(11);
    for i in 0..12 {
        let sig = random_signature(&mut rng, 2 + i % 2);
        let cb = random_case_base(&mut rng, &sig, 3);
        let file = dir.path().join(format!("cb{i}.json"));
        std::fs::write(&file, case_base_to_json(&cb).unwrap()).unwrap();
        let check = code(&run(&["check", path(&file)]));
        let translation = stdout(&run(&["translate", path(&file)]));
        let formula = translation.lines().collect::<Vec<_>>().join(" & ");
        let sig_json = serde_json::json!({
            "plaintiff": sig.plaintiff_names(),
            "defendant": sig.defendant_names(),
        })
        .to_string();
        let sat = code(&run(&[
            "sat",
            "--signature",
            &sig_json,
            "--formula",
            &formula,
            "--prec",
        ]));
        assert_eq!(
            check,
            sat,
            "case base {i}: {}",
            case_base_to_json(&cb).unwrap()
        );
    }
}

#[test]
fn selftest_is_deterministic() {
    let args = [
        "--format",
        "json",
        "--seed",
        "42",
        "selftest",
        "--samples",
        "4",
    ];
    let first = run(&args);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    assert_eq!(first.stdout, run(&args).stdout);
    let v = json(&first);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["suites"].as_array().unwrap().len(), 7);
}
