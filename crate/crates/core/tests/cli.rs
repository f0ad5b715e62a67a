use std::process::{Command, Output};

use serde_json::Value;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .env_remove("RINGLAB_MAX_SIZE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn classify_m2_z3() {
    let o = ringlab(&["classify", "M2(Z3)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["size"], 81);
    let holds = |name: &str| {
        doc["predicates"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["name"] == name)
            .map(|p| p["holds"].as_bool().unwrap())
            .unwrap()
    };
    assert!(holds("gswnc"));
    assert!(!holds("gsnc"));
    assert!(!holds("swnc"));
    assert_eq!(doc["axioms"]["exhaustive"], true);
}

#[test]
fn classify_table_lists_predicates() {
    let o = ringlab(&["classify", "Z1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("Z1 (1 elements)"));
    assert!(out.lines().skip(1).all(|l| l.trim_end().ends_with("true")), "{out}");
}

#[test]
fn decompose_three_in_z4() {
    let o = ringlab(&["decompose", "Z4", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SWNC: +, e=1, q=2"), "{}", stdout(&o));

    let doc = json(&ringlab(&["decompose", "Z4", "3", "--format", "json"]));
    let swnc = &doc["decompositions"]["SWNC"];
    assert_eq!(swnc["sign"], 1);
    assert_eq!(swnc["first_part"], 1);
    assert_eq!(swnc["nil_or_idem_part"], 2);
}

#[test]
fn decompose_reports_none() {
    let o = ringlab(&["decompose", "M2(Z2)", "[1,1,1,0]"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("SNC: none"));
    assert!(out.contains("SWNC: none"));

    let doc = json(&ringlab(&["decompose", "M2(Z2)", "[1,1,1,0]", "--format", "json"]));
    assert!(doc["decompositions"]["SWNC"].is_null());
    assert!(!doc["decompositions"]["SWC"].is_null());
}

#[test]
fn decompose_rejects_bad_element() {
    assert_eq!(ringlab(&["decompose", "Z4", "9"]).status.code(), Some(2));
    assert_eq!(ringlab(&["decompose", "Z4", "[1,2]"]).status.code(), Some(2));
    assert_eq!(ringlab(&["decompose", "Z4", "x"]).status.code(), Some(2));
}

#[test]
fn subsets_elide_large_sets() {
    let doc = json(&ringlab(&["subsets", "M2(Z4)", "--format", "json", "--print-cap", "40"]));
    let sets = doc["subsets"].as_array().unwrap();
    let units = sets.iter().find(|s| s["name"] == "units").unwrap();
    assert_eq!(units["size"], 96);
    assert_eq!(units["elided"], true);
    assert!(units["members"].is_null());
    let center = sets.iter().find(|s| s["name"] == "center").unwrap();
    assert_eq!(center["size"], 4);
    assert_eq!(center["members"].as_array().unwrap().len(), 4);
}

#[test]
fn parse_error_exits_2() {
    let o = ringlab(&["classify", "M2(Z2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at column"));
}

#[test]
fn size_cap_exits_2() {
    assert_eq!(ringlab(&["classify", "M2(Z3)", "--max-size", "50"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(["subsets", "M2(Z3)"])
        .env("RINGLAB_MAX_SIZE", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size cap"));
}

#[test]
fn unknown_format_and_check_exit_2() {
    assert_eq!(ringlab(&["catalog", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(ringlab(&["verify", "--check", "Thm-9.99"]).status.code(), Some(2));
}

#[test]
fn verify_selected_checks() {
    let o = ringlab(&["verify", "--check", "Thm-2.25,Prop-2.11", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["id"], "Thm-2.25");
    assert_eq!(checks[0]["status"], "PASS");
    assert!(checks[0]["wall_time_ms"].is_null());
    assert_eq!(checks[1]["id"], "Prop-2.11");
}

#[test]
fn verify_timings_are_opt_in() {
    let doc = json(&ringlab(&["verify", "--check", "Ex-2.24", "--timings", "--format", "json"]));
    assert!(doc["checks"][0]["wall_time_ms"].is_number());
}

#[test]
fn catalog_lists_entries() {
    let o = ringlab(&["catalog", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let entries = doc["entries"].as_array().unwrap();
    let find = |label: &str| entries.iter().find(|e| e["label"] == label).map(|e| e["size"].clone());
    assert_eq!(find("M2(Z2)"), Some(16.into()));
    assert_eq!(find("T3(Z3)"), Some(729.into()));
    assert_eq!(find("GR(Z2, C2 x C2)"), Some(16.into()));
}
