use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use cpw_cli::config::parse_config;
use cpw_cli::suites::replay_detail;

const SWAP: &str = r#"{"model":"finite","permutation":[1,0]}"#;
const SWAP3: &str = r#"{"model":"finite","permutation":[1,0,2]}"#;
const CYCLE3: &str = r#"{"model":"finite","permutation":[1,2,0]}"#;
const SHIFT: &str = r#"{"model":"shift"}"#;
const CIRCLE_I: &str = r#"{"model":"circle","q":"i"}"#;
const CIRCLE_Q: &str = r#"{"model":"circle","q":"3/5+4/5i"}"#;

struct Env {
    dir: TempDir,
}

impl Env {
    fn new() -> Self {
        Env {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn config(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(format!("{name}.json"));
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn cpw(args: &[&str], config: &Path) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cpw"));
    // `cpw <subcommand> -c <config> ...`, as documented.
    cmd.arg(args[0]).arg("-c").arg(config).args(&args[1..]);
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

/// Every object holding a `certificate` key, depth first.
fn certificate_details(v: &Value, out: &mut Vec<Value>) {
    match v {
        Value::Object(m) => {
            if m.contains_key("certificate") {
                out.push(v.clone());
            }
            m.values().for_each(|x| certificate_details(x, out));
        }
        Value::Array(xs) => xs.iter().for_each(|x| certificate_details(x, out)),
        _ => {}
    }
}

#[test]
fn eval_prints_canonical_forms() {
    let env = Env::new();
    let cases = [
        (SWAP, ["e_0*d^1", "mul", "e_0*d^1"], "0"),
        (CIRCLE_I, ["d^1", "mul", "t"], "(i)*t*d^1"),
        (SHIFT, ["e_0", "add", "e_0"], "2*e_0"),
    ];
    for (i, (cfg, exprs, want)) in cases.iter().enumerate() {
        let c = env.config(&format!("c{i}"), cfg);
        let mut args = vec!["eval"];
        args.extend(exprs);
        let o = cpw(&args, &c);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), *want);
    }
    let c = env.config("swap", SWAP);
    let o = cpw(&["eval", "1 + d^1", "mul", "1 - d^1", "add", "d^2"], &c);
    // The unit of a finite model prints as the sum of indicators.
    assert_eq!(stdout(&o).trim(), "e_0 + e_1");
}

#[test]
fn eval_reports_parse_positions() {
    let env = Env::new();
    let c = env.config("shift", SHIFT);
    let o = cpw(&["eval", "e_0 + e_1*", "add", "e_0"], &c);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 10"));
}

#[test]
fn witness_examples_replay() {
    let env = Env::new();
    let shift = env.config("shift", SHIFT);
    let swap = env.config("swap", SWAP);

    let o = cpw(&["witness", "in-a", "e_0 + e_1*d^1"], &shift);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["element"], "e_0");
    assert_eq!(v["certificate"]["kind"], "chain");
    let model = parse_config(SHIFT).unwrap().model;
    assert_eq!(replay_detail(&model, &v), Ok(true));

    let o = cpw(&["witness", "in-commutant", "1 + d^1"], &swap);
    let v = json_of(&o);
    assert_eq!((o.status.code(), v["element"].as_str()), (Some(0), Some("e_0")));
    assert_eq!(replay_detail(&parse_config(SWAP).unwrap().model, &v), Ok(true));

    let o = cpw(&["witness", "in-a", "e_0"], &swap);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_of(&o)["status"], "unsupported");
}

#[test]
fn analyze_examples() {
    let env = Env::new();
    let all = |b: bool| serde_json::json!({"aperiodic_dense": b, "minimal": b, "transitive": b, "maximal_abelian": b});
    let swap = serde_json::json!({"aperiodic_dense": false, "minimal": true, "transitive": true, "maximal_abelian": false});
    for (name, cfg, want) in [("swap", SWAP, swap), ("swap3", SWAP3, all(false)), ("shift", SHIFT, all(true)), ("circle", CIRCLE_I, all(false))] {
        let o = cpw(&["analyze", "--per-bound", "4"], &env.config(name, cfg));
        assert_eq!(o.status.code(), Some(0));
        let v = json_of(&o);
        assert_eq!(v["properties"], want, "{name}");
        assert_eq!(v["consistency"]["status"], "pass");
        assert_eq!(v["per_n"].as_array().unwrap().len(), 8);
    }
    let o = cpw(&["analyze"], &env.config("circle", CIRCLE_I));
    let v = json_of(&o);
    let set_at = |n: i64| v["per_n"].as_array().unwrap().iter().find(|r| r["n"] == n).unwrap()["set"].clone();
    assert_eq!(set_at(4), "All");
    assert_eq!(set_at(-2), "{}");
}

#[test]
fn same_seed_gives_identical_reports() {
    let env = Env::new();
    let runs = [("commint", SWAP), ("triquiv", SHIFT), ("primeness", CYCLE3), ("algebra", CIRCLE_Q)];
    for (suite, cfg) in runs {
        let c = env.config(suite, cfg);
        let mut outputs = Vec::new();
        for k in 0..2 {
            let out = env.path(&format!("{suite}{k}.json"));
            let o = cpw(
                &["check", suite, "--samples", "6", "--seed", "11", "--json", out.to_str().unwrap()],
                &c,
            );
            assert_eq!(o.status.code(), Some(0), "{suite}");
            outputs.push(std::fs::read(out).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "{suite}");
        let other = env.path(&format!("{suite}-other.json"));
        cpw(&["check", suite, "--samples", "6", "--seed", "12", "--json", other.to_str().unwrap()], &c);
        if suite != "algebra" {
            assert_ne!(std::fs::read(other).unwrap(), outputs[0], "{suite} ignores the seed");
        }
    }
}

#[test]
fn every_report_certificate_replays() {
    let env = Env::new();
    let runs = [
        ("triquiv", "shift", SHIFT),
        ("commint", "swap", SWAP),
        ("commint", "swap3", SWAP3),
        ("simplicity", "shift", SHIFT),
        ("simplicity", "circle", CIRCLE_Q),
        ("primeness", "shift", SHIFT),
        ("primeness", "cycle3", CYCLE3),
    ];
    for (suite, name, cfg) in runs {
        let o = cpw(&["check", suite, "--samples", "5", "--seed", "3", "--json", "-"], &env.config(name, cfg));
        assert_eq!(o.status.code(), Some(0), "{suite} on {name}");
        let report = json_of(&o);
        assert_eq!(report["schema_version"], 1);
        let mut details = Vec::new();
        certificate_details(&report, &mut details);
        assert!(!details.is_empty(), "{suite} on {name} carries no certificates");
        let model = parse_config(cfg).unwrap().model;
        for d in details {
            assert_eq!(replay_detail(&model, &d), Ok(true), "{suite} on {name}: {d}");
        }
    }
}

#[test]
fn suite_examples() {
    let env = Env::new();
    let swap = env.config("swap", SWAP);
    let o = cpw(&["check", "triquiv", "--json", "-"], &swap);
    let v = json_of(&o);
    let item = |name: &str| v["items"].as_array().unwrap().iter().find(|i| i["name"] == name).unwrap().clone();
    let zi = item("zero_intersection_ideal");
    assert_eq!(zi["status"], "pass");
    let model = parse_config(SWAP).unwrap().model;
    let one_plus = cpw_core::parse_element(&model, "1 + d^2").unwrap();
    assert_eq!(zi["detail"]["generator"], one_plus.to_string());
    assert_eq!(item("commutant_exceeds_coefficients")["status"], "pass");

    let o = cpw(&["check", "commint", "--samples", "100"], &swap);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("commint: pass (100 pass, 0 fail, 0 unsupported)"));

    let o = cpw(&["check", "primeness", "--json", "-"], &env.config("swap3", SWAP3));
    let v = json_of(&o);
    let refutation = &v["items"][1];
    assert_eq!(refutation["name"], "prime_refutation");
    assert_eq!(refutation["status"], "pass");
    assert_eq!(refutation["detail"]["common_element"], Value::Null);
}

#[test]
fn capability_gaps_are_unsupported() {
    let env = Env::new();
    let circle = env.config("circle", CIRCLE_Q);
    let o = cpw(&["check", "commint", "--json", "-"], &circle);
    assert_eq!(o.status.code(), Some(3));
    let v = json_of(&o);
    assert_eq!(v["status"], "unsupported");
    assert_eq!(v["items"][0]["detail"]["capability"], "regular_bumps");

    let o = cpw(&["check", "algebra", "--samples", "3", "--json", "-"], &env.config("shift", SHIFT));
    assert_eq!(o.status.code(), Some(3));
    let v = json_of(&o);
    let unit = v["items"].as_array().unwrap().iter().find(|i| i["name"] == "unit").unwrap().clone();
    assert_eq!(unit["detail"]["capability"], "unital");
}

#[test]
fn timings_only_with_flag() {
    let env = Env::new();
    let c = env.config("swap", SWAP);
    let plain = json_of(&cpw(&["check", "baire", "--json", "-"], &c));
    assert!(plain["items"][0].get("elapsed_ms").is_none());
    let timed = json_of(&cpw(&["check", "baire", "--json", "-", "--timings"], &c));
    assert!(timed["items"][0]["elapsed_ms"].is_number());
}

#[test]
fn usage_errors_exit_64() {
    let env = Env::new();
    let bad = [
        r#"{"model":"finite","permutation":[0,0]}"#,
        r#"{"model":"circle","q":"1+i"}"#,
        r#"{"model":"shift","extra":1}"#,
        "not json",
    ];
    for (i, text) in bad.iter().enumerate() {
        let o = cpw(&["analyze"], &env.config(&format!("bad{i}"), text));
        assert_eq!(o.status.code(), Some(64), "{text}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("config error at $"));
    }
    let o = cpw(&["analyze"], &env.path("missing.json"));
    assert_eq!(o.status.code(), Some(64));
    let swap = env.config("swap", SWAP);
    assert_eq!(cpw(&["check", "nonsense"], &swap).status.code(), Some(64));
    assert_eq!(cpw(&["check", "algebra", "--samples", "0"], &swap).status.code(), Some(64));
    assert_eq!(cpw(&["witness", "in-a", "0"], &swap).status.code(), Some(64));
    assert_eq!(cpw(&["eval", "e_0", "pow", "e_1"], &swap).status.code(), Some(64));
}
