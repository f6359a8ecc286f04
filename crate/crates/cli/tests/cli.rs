use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dncluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

const EXAMPLE: &str = "1-3,3|+,3-1,1|+";

#[test]
fn verify_suites() {
    let v = json(&["--n", "5", "--format", "json", "verify", "--suite", "theorem2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["checked"], 625);

    let o = run(&["--n", "6", "verify", "--suite", "tau-period"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("tau^6 = id"));

    let v = json(&["--n", "4", "--format", "json", "verify", "--suite", "lemma3"]);
    assert_eq!(v["suites"][0]["checked"], 50);

    let v = json(&["--n", "4", "--format", "json", "verify"]);
    assert_eq!(v["suites"].as_array().unwrap().len(), 6);

    let o = run(&["--n", "4", "verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_on_the_example() {
    let v = json(&["--n", "4", "--format", "json", "report", "--T", EXAMPLE]);
    assert_eq!(v["quiver"]["arrows"].as_array().unwrap().len(), 4);
    assert_eq!(v["quiver"]["opposite"], true);
    let vanishing = v["vanishing"].as_array().unwrap();
    assert!(vanishing.iter().all(|p| p["vertices"].as_array().unwrap().len() >= 4));
    assert_eq!(v["modules"]["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(v["modules"]["T"].as_array().unwrap().len(), 4);
    assert!(v["modules"]["vertices"][0]["dimvec"].is_array());

    // --no-op reverses every arrow
    let w = json(&["--n", "4", "--format", "json", "--no-op", "report", "--T", EXAMPLE]);
    let arrows = |v: &Value| {
        let mut a: Vec<(u64, u64)> = v["quiver"]["arrows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|a| (a["from"].as_u64().unwrap(), a["to"].as_u64().unwrap()))
            .collect();
        a.sort();
        a
    };
    let mut reversed: Vec<_> = arrows(&v).into_iter().map(|(a, b)| (b, a)).collect();
    reversed.sort();
    assert_eq!(arrows(&w), reversed);
}

#[test]
fn fan_report_is_relation_free() {
    let v = json(&["--n", "5", "--format", "json", "report", "--T", "0-2,0-3,0-4,0|+,0|-"]);
    assert_eq!(v["quiver"]["arrows"].as_array().unwrap().len(), 4);
    assert!(v["vanishing"].as_array().unwrap().is_empty());
}

#[test]
fn report_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r");
    let o = run(&["--n", "4", "report", "--T", EXAMPLE, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    for f in ["quiver.dot", "modules.dot", "report.txt", "report.json", "modules.json"] {
        assert!(out.join(f).exists(), "{f}");
    }
    let dot = std::fs::read_to_string(out.join("modules.dot")).unwrap();
    assert!(dot.starts_with("digraph"));
    let modules: Value = serde_json::from_str(&std::fs::read_to_string(out.join("modules.json")).unwrap()).unwrap();
    for key in ["n", "T", "vertices", "arrows", "tau"] {
        assert!(modules.get(key).is_some(), "{key}");
    }
}

#[test]
fn invalid_input_is_rejected() {
    let o = run(&["--n", "4", "report", "--T", "0-1,1|+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("E4"));

    let o = run(&["--n", "4", "report", "--T", "0-2,1-3,0|+,1|+"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("0-2") && err.contains("1-3"), "{err}");
}

#[test]
fn flipwalk_script_and_random_walk() {
    let v = json(&["--n", "4", "--format", "json", "flipwalk", "--T", EXAMPLE, "--script", "1-3,1-3"]);
    assert_eq!(v["final"], v["start"]);
    for s in v["steps"].as_array().unwrap() {
        assert_eq!(s["exchange"]["crossing"], 1);
    }

    let walk = |seed: &str| json(&["--n", "5", "--seed", seed, "--format", "json", "flipwalk", "--T", "0-2,0-3,0-4,0|+,0|-", "--steps", "100"]);
    let a = walk("7");
    let steps = a["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 100);
    assert!(steps.iter().all(|s| s["result"].as_array().unwrap().len() == 5));
    assert_eq!(a, walk("7"));

    let o = run(&["--n", "4", "flipwalk", "--T", EXAMPLE, "--script", "0|-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1-3,3-1,1|+,3|+"));
}

#[test]
fn tables_and_exports() {
    let v = json(&["--n", "4", "--format", "json", "edges"]);
    assert_eq!(v.as_array().unwrap().len(), 16);

    let v = json(&["--n", "4", "--format", "json", "triangulations"]);
    assert_eq!(v["count"], 50);
    let o = run(&["--n", "8", "--max-enum", "6", "triangulations"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["--n", "5", "crossings"]);
    assert!(o.status.success());
    let v = json(&["--n", "5", "--format", "json", "crossings"]);
    assert!(v.is_object() || v.is_array());

    let v = json(&["--n", "6", "--format", "json", "hom", "0-4", "0-4"]);
    assert_eq!(v["dim"], v["closed_form"]);
    let v = json(&["--n", "6", "--format", "json", "ext", "0-3", "1-4"]);
    assert_eq!(v["ext1"], v["crossing"]);

    let o = run(&["--n", "5", "--format", "dot", "ar-quiver"]);
    let dot = stdout(&o);
    assert!(o.status.success() && dot.starts_with("digraph"));
    assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    let o = run(&["--n", "4", "--format", "dot", "ar-quiver", "--T", EXAMPLE]);
    assert!(o.status.success() && stdout(&o).contains("->"));
}
