use std::path::{Path, PathBuf};
use std::process::Command;

use simlab::simcheck::Verdict;
use simlab_cli::{execute, load_scenario, parse_scenario, render_output, Check, Format, RunOutput, ScenarioError};

fn scenarios() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios")
}

fn scenario(name: &str) -> PathBuf {
    scenarios().join(format!("{name}.json"))
}

fn simlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_simlab")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn bundled_scenarios_load() {
    let mut count = 0;
    for entry in std::fs::read_dir(scenarios()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "json") {
            load_scenario(&p).unwrap_or_else(|e| panic!("{e}"));
            count += 1;
        }
    }
    assert!(count >= 12);
}

#[test]
fn example_r2_shape() {
    let s = load_scenario(&scenario("example_r2")).unwrap();
    let Check::Simulation { simulator, simulated, encoding } = &s.check else { panic!("{:?}", s.check) };
    assert_eq!(simulated.members().len(), 16);
    assert_eq!(simulator.members().len(), 16);
    assert_eq!(encoding.to_string(), "stripe(2,0)");
    let plan = s.plan.as_ref().unwrap().build().unwrap();
    assert_eq!(plan.inputs.len(), 65);
    assert_eq!(plan.fuel, 1_000_000);
}

#[test]
fn triangular_anomaly_shape_and_note() {
    let s = load_scenario(&scenario("triangular_anomaly")).unwrap();
    let Check::Simulation { simulator, simulated, encoding } = &s.check else { panic!() };
    assert!(simulator.is_subset_of(simulated) && !simulated.is_subset_of(simulator));
    assert_eq!(encoding.to_string(), "tri_pi");
    let out = execute(&s).unwrap();
    assert_eq!(out.verdict(), Verdict::Verified);
    let report = out.report().unwrap();
    assert!(report.notes.iter().any(|n| n.starts_with(simlab_cli::STRICT_SUBSET)));
}

#[test]
fn undefined_names_are_reported() {
    let text = r#"{
  "name": "dangling",
  "models": [{"name": "Rec", "kind": "dsl-terms", "library": "rec-suite"}],
  "encodings": [{"name": "even", "scheme": "stripe", "d": 2}],
  "check": {"kind": "simulation", "simulator": "Missing", "simulated": "Rec", "encoding": "even"},
  "plan": {"inputs": "0..=4", "fuel": 10}
}"#;
    let err = parse_scenario(Path::new("dangling.json"), text).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("`Missing`"), "{msg}");
    assert!(msg.starts_with("dangling.json:5:"), "{msg}");

    let text = text.replace("\"Missing\"", "\"Rec\"").replace("\"encoding\": \"even\"", "\"encoding\": \"odd\"");
    let msg = parse_scenario(Path::new("d.json"), &text).unwrap_err().to_string();
    assert!(msg.contains("unknown encoding `odd`"), "{msg}");
}

#[test]
fn validation_errors() {
    let bad = [
        (
            r#"{"name": "x", "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 1}, "extra": 1}"#,
            "unknown field",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms", "members": [{"name": "f", "term": "(C S"}]}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 1}}"#,
            "models[0]",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms", "members": []}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 0}}"#,
            "fuel",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms"}],
             "check": {"kind": "closure", "model": "M"}}"#,
            "needs a `plan`",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "fortran"}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 1}}"#,
            "unknown model kind",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms"}, {"name": "M", "kind": "dsl-terms"}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 1}}"#,
            "duplicate model",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms", "members": [{"name": "a", "term": "ACK"}]}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..3", "fuel": 1}}"#,
            "models[0]",
        ),
        (
            r#"{"name": "x", "models": [{"name": "M", "kind": "dsl-terms"}],
             "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "4..2", "fuel": 1}}"#,
            "empty range",
        ),
        (
            r#"{"name": "x", "encodings": [{"name": "e", "scheme": "stripe", "d": 0}],
             "check": {"kind": "narrowness", "encoding": "e", "prefix": 3}}"#,
            "encodings[0]",
        ),
        (
            r#"{"name": "x", "models": [{"name": "T", "kind": "tm-program", "members": [{"name": "t", "file": "nowhere.tm"}]}],
             "check": {"kind": "closure", "model": "T"}, "plan": {"inputs": "0..3", "fuel": 1}}"#,
            "nowhere.tm",
        ),
    ];
    for (text, needle) in bad {
        let err = parse_scenario(Path::new("bad.json"), text).unwrap_err();
        assert!(err.to_string().contains(needle), "{needle}: {err}");
        assert!(!matches!(err, ScenarioError::Io { .. }));
    }
}

#[test]
fn exit_codes_follow_verdicts() {
    let cases = [("example_r2", 0), ("closure_succ", 1), ("low_fuel", 2), ("narrowness_tri", 0)];
    for (name, code) in cases {
        let p = scenario(name);
        let (got, stdout, _) = simlab(&["run", p.to_str().unwrap()]);
        assert_eq!(got, code, "{name}: {stdout}");
    }
    let (code, stdout, _) = simlab(&["run", scenario("closure_succ").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("succ at 0: expected 2, got 1"), "{stdout}");
    let (code, stdout, _) = simlab(&["run", scenario("low_fuel").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stdout.contains("fuel spent:"), "{stdout}");
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(simlab(&["frobnicate"]).0, 3);
    assert_eq!(simlab(&["run"]).0, 3);
    assert_eq!(simlab(&["run", "/nonexistent/scenario.json"]).0, 3);
    assert_eq!(simlab(&["tri", "--op", "f"]).0, 3);
    assert_eq!(simlab(&["--help"]).0, 0);
    let (code, _, stderr) = simlab(&["run", scenario("example_r2").to_str().unwrap(), "--inputs", "9..3"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("empty range"), "{stderr}");
}

#[test]
fn global_overrides_apply() {
    let p = scenario("example_r2");
    let (code, stdout, _) = simlab(&["run", p.to_str().unwrap(), "--fuel", "20", "--inputs", "0..=10"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("inputs: 11 "), "{stdout}");
    let (code, stdout, _) =
        simlab(&["run", p.to_str().unwrap(), "--sample", "5", "--seed", "7", "--format", "structured"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["report"]["stats"]["inputs_tested"], 5);
}

#[test]
fn structured_output_is_byte_identical() {
    for name in ["triangular_anomaly", "probe_stripes", "closure_f", "narrowness_tri", "isomorphism_tri"] {
        let p = scenario(name);
        let a = simlab(&["run", p.to_str().unwrap(), "--format", "structured"]);
        let b = simlab(&["run", p.to_str().unwrap(), "--format", "structured"]);
        assert_eq!(a, b, "{name}");
        serde_json::from_str::<serde_json::Value>(&a.1).unwrap();
    }
}

#[test]
fn text_and_structured_agree() {
    let s = load_scenario(&scenario("triangular_anomaly")).unwrap();
    let out = execute(&s).unwrap();
    let text = render_output(&out, Format::Text);
    let v: serde_json::Value = serde_json::from_str(&render_output(&out, Format::Structured)).unwrap();
    let RunOutput::Report { report, .. } = &out else { panic!() };
    for (i, m) in report.members.iter().enumerate() {
        assert_eq!(v["report"]["members"][i]["member"], m.member.as_str());
        let w = m.witness.as_deref().unwrap();
        assert_eq!(v["report"]["members"][i]["witness"], w);
        assert!(text.contains(&format!("witness {w}")));
    }
}

#[test]
fn subcommands() {
    let (code, out, _) = simlab(&["tri", "--op", "cycles", "--prefix", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(0)\n(1 2 3)\n(4 5 6 7 8)\n");
    let (_, out, _) = simlab(&["tri", "--op", "pi", "--inputs", "0..4"]);
    assert_eq!(out, "0 0\n1 2\n2 3\n3 1\n");
    let (_, out, _) = simlab(&["encode", "--scheme", "bits", "--inputs", "0..=7"]);
    let words: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(words, ["ε", "0", "1", "00", "01", "10", "11", "000"]);
    let (_, out, _) = simlab(&["encode", "--scheme", "stripe", "--d", "2", "--r", "0", "--value", "7", "--decode"]);
    assert_eq!(out, "7 ⊥\n");
    let (code, out, _) = simlab(&["compile", "--term", "(C S S)", "--target", "cm"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("registers"), "{out}");

    let machines = scenarios().join("machines");
    let cm = machines.join("double.cm");
    assert_eq!(simlab(&["exec", "--machine", cm.to_str().unwrap(), "--input", "21"]).1, "42\n");
    let forever = machines.join("forever.cm");
    let (code, out, _) = simlab(&["exec", "--machine", forever.to_str().unwrap(), "--input", "0", "--fuel", "50"]);
    assert_eq!((code, out.as_str()), (2, "?fuel\n"));
    let tm = machines.join("successor.tm");
    assert_eq!(simlab(&["exec", "--machine", tm.to_str().unwrap(), "--input", "011"]).1, "100\n");
}
