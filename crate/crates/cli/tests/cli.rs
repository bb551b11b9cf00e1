use std::process::{Command, Output};

fn picard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picard")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_the_matrix_of_rp() {
    let o = picard(&["eval", "R*P"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.starts_with("[0, 0, 1]"), "{text}");
}

#[test]
fn order_of_the_w4_generator_is_four() {
    let o = picard(&["order", "R1*R2*R3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4");

    let o = picard(&["--format", "json", "order", "P*Q^-1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 6);
}

#[test]
fn malformed_words_are_usage_errors() {
    for bad in ["Xq", "R^", "(R*P"] {
        let o = picard(&["eval", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(picard(&["isotropy", "nowhere"]).status.code(), Some(2));
    assert_eq!(picard(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn classify_reports_fixed_point_for_elliptics() {
    let o = picard(&["--format", "json", "classify", "J"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "regular-elliptic");
    assert!(v["fixed_point"].is_string());
}

#[test]
fn relations_report_is_well_formed_and_clean() {
    let o = picard(&["--format", "json", "verify", "relations"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["version", "config", "checks", "summary"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["summary"]["fail"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() > 30);
    for c in checks {
        assert!(c["id"].is_string() && c["detail"].is_string());
        assert!(["pass", "fail", "skipped", "info"].contains(&c["status"].as_str().unwrap()));
    }
}

#[test]
fn geometry_section_exits_nonzero_on_its_failing_check() {
    let o = picard(&["--format", "json", "verify", "geometry"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["geometry.isometric-sphere.RP.z3"]);
}

#[test]
fn handles_validate_passes_with_an_info_note() {
    let o = picard(&["handles", "validate", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let statuses: Vec<&str> = v.as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.contains(&"pass") && statuses.contains(&"info"));
    assert!(!statuses.contains(&"fail"));
}

#[test]
fn isotropy_and_dstar_outputs() {
    let o = picard(&["--format", "json", "isotropy", "w12"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 12);
    assert_eq!(v["abelian"], true);

    let o = picard(&["--format", "json", "dstar", "export"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}
