use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spechtlab"))
        .args(args)
        .env_remove("SPECHTLAB_FORMAT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&run(&all))).unwrap()
}

#[test]
fn classify_exit_codes() {
    let o = run(&["classify", "young", "48", "21"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha + 2^nu ≡ 0 mod 2^L"));
    assert!(stdout(&o).contains("alpha=28 nu=2 L=5"));

    let o = run(&["classify", "hook", "25", "12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("nu=1 bound 11 violated"));

    assert_eq!(run(&["classify", "specht", "5", "0"]).status.code(), Some(0));
    assert_eq!(run(&["classify", "young", "2", "2"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "young", "3", "4"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "young", "x", "4"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "young", "-3", "4"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "hook", "4", "4"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "bogus", "4", "4"]).status.code(), Some(2));
}

#[test]
fn classify_json_report() {
    let v = json(&["classify", "specht", "48,21"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["clause"], "POWER_OF_TWO_OR_PLUS_ZERO");
    assert_eq!((v["alpha"].as_u64(), v["nu"].as_u64(), v["L"].as_u64()), (Some(28), Some(2), Some(5)));

    let v = json(&["classify", "hook", "48,1^25"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["hook_verdict"]["bound"], 25);
}

#[test]
fn decompose_reports() {
    let o = run(&["decompose", "48", "21"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("7 summands"));
    assert!(text.contains("delta=6 Y^(54,15) uniserial [14, 6, 14]"));

    let v = json(&["decompose", "48", "21"]);
    assert_eq!(v["deltas"], serde_json::json!([0, 2, 6, 8, 10, 16, 18]));
    assert!(v["summands"].as_array().unwrap().iter().all(|s| s["uniserial"] == true));

    // a conjugate hook is normalized first: (22, 1^47) ~ (48, 1^21)
    let v = json(&["decompose", "22", "47"]);
    assert_eq!(v["base"], serde_json::json!([48, 21]));

    let o = run(&["decompose", "6", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("even hook Specht module is indecomposable"));
}

#[test]
fn series_and_filtration() {
    let o = run(&["series", "2", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("module has no unique composition series"));

    let v = json(&["series", "48", "21"]);
    let labels: Vec<u64> = v["edges"].as_array().unwrap().iter().map(|e| e["label"].as_u64().unwrap()).collect();
    assert_eq!(labels, [4, 8, 16, 0, 16, 8, 4]);

    let o = run(&["filtration", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("shifts: 0, 1"));
    assert!(stdout(&o).contains("S^(1,1), S^(2,0)"));
}

#[test]
fn factors_report() {
    let v = json(&["factors", "young", "48", "21"]);
    assert_eq!(v["total"], 7);
    let o = run(&["factors", "specht", "1", "1"]);
    assert!(stdout(&o).contains("shift 1: D^(2,0) x1"));
}

#[test]
fn render_formats() {
    let o = run(&["render", "series", "48", "25", "--format", "dot"]);
    assert!(stdout(&o).contains("n2 -> n3 [label=\"0\"];"));
    let o = run(&["render", "hook", "25", "12"]);
    assert!(stdout(&o).contains("non-uniserial"));
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_spechtlab"))
        .args(["classify", "young", "1", "1"])
        .env("SPECHTLAB_FORMAT", "json")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], true);
}

#[test]
fn scan_and_verify() {
    let o = run(&["scan", "60", "hooks-ds-uniserial"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("n arm leg"));
    assert!(text.lines().skip(1).all(|l| l.split(' ').nth(6) == Some("true")));
    assert!(text.contains("\n59 41 18 24 3 5 true false 7\n"));
    assert_eq!(run(&["scan", "2"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--max-n", "10", "young-uniserial"]).status.code(), Some(0));

    let o = run(&["verify", "closed-form", "512"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS closed-form"));
    assert_eq!(run(&["verify", "--suite", "classification", "100"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}
