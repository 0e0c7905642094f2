use std::process::{Command, Output};

fn realflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realflag"))
        .args(args)
        .env("REALFLAG_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = realflag(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn fl4_cohomology_table() {
    let o = realflag(&["cohomology", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "H^0   = Z",
        "H^1   = 0",
        "H^2   = Z2^3",
        "H^3   = Z^2 + Z2^2",
        "H^4   = Z2^2",
        "H^5   = Z2^3",
        "H^6   = Z",
    ] {
        assert!(text.contains(line), "missing {:?} in\n{}", line, text);
    }
}

#[test]
fn point_and_json_cohomology() {
    let text = stdout(&realflag(&["cohomology", "4"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("H^") && l.contains(" = ")).count(), 1);
    assert!(text.contains("H^0   = Z"));
    let v = json(&["cohomology", "2,2", "--format", "json"]);
    assert_eq!(v["coefficients"], "Z");
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 5);
    assert_eq!(groups[0]["rank"], 1);
    assert_eq!(groups[4]["rank"], 1);
    let q = json(&["cohomology", "1,1,1", "-c", "Q", "-f", "json"]);
    assert_eq!(q["coefficients"], "Q");
}

#[test]
fn output_is_deterministic() {
    let a = realflag(&["cohomology", "1,2,2", "-f", "json"]);
    let b = realflag(&["cohomology", "1,2,2", "-f", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = realflag(&["graph", "1,1,1,1"]);
    let b = realflag(&["graph", "1,1,1,1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn graph_has_sixteen_edges() {
    let dot = stdout(&realflag(&["graph", "1,1,1,1"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 16);
    assert!(dot.contains("\"3421\" -> \"2431\" [color=red"));
    let table = stdout(&realflag(&["graph", "1,1,1,1", "-f", "table"]));
    assert_eq!(table.lines().count(), 16);
    let v = json(&["graph", "1,1,1,1", "-f", "json"]);
    assert!(v.is_object());
}

#[test]
fn incidence_queries() {
    let v = json(&["incidence", "456123", "426153", "-f", "json"]);
    assert_eq!(v["c"], serde_json::json!([3, 2, 1, 2]));
    assert_eq!(v["s"], 8);
    assert_eq!(v["signed_value"], 2);
    assert_eq!(v["N"], 2);
    assert_eq!(v["m"], 3);
    assert_eq!(v["value"], 0);
    let v = json(&["incidence", "3 6|1 4|2 5", "2 6|1 4|3 5", "-f", "json"]);
    assert_eq!(v["N"], 3);
    assert_eq!(v["m"], 4);
    assert_eq!(v["value"].as_i64().unwrap().abs(), 2);
    let text = stdout(&realflag(&["incidence", "3421", "2431"]));
    assert!(text.starts_with("[3421, 2431] = -2"), "{}", text);
    let o = realflag(&["incidence", "4321", "1234"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not adjacent"));
}

#[test]
fn torsion_check_reports_polynomials() {
    let o = realflag(&["torsion-check", "2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: true"));
    for key in ["P_0", "P_2", "P_beta", "P_Tor"] {
        assert!(text.contains(key), "{}", key);
    }
    let v = json(&["torsion-check", "1,1,1", "-f", "json"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["bockstein"], v["rational"]);
    assert_eq!(v["snf_torsion"], v["predicted_torsion"]);
}

#[test]
fn poincare_degrees() {
    let text = stdout(&realflag(&["poincare", "3,3,3"]));
    assert!(text.contains("rational generators in degrees 0 4 4 8 8 12 15 19 19 23 23 27"), "{}", text);
    let v = json(&["poincare", "1,1,1,1", "-f", "json"]);
    assert_eq!(v["rational"], serde_json::json!([1, 0, 0, 2, 0, 0, 1]));
    assert_eq!(v["mod2"], serde_json::json!([1, 3, 5, 6, 5, 3, 1]));
}

#[test]
fn schubert_products() {
    let text = stdout(&realflag(&["schubert-mult", "1", "1", "--grassmannian", "2,4"]));
    assert_eq!(text.trim(), "σ(1,1) + σ(2)");
    let text = stdout(&realflag(&["schubert-mult", "2,2", "2,2", "--real", "4,8"]));
    assert_eq!(text.trim(), "σR(2,2,2,2) + σR(4,4)");
    let v = json(&["schubert-mult", "2,1", "1", "--grassmannian", "3,6", "-f", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    let o = realflag(&["schubert-mult", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = realflag(&["schubert-mult", "1", "1", "--real", "4,8"]);
    assert_eq!(o.status.code(), Some(2), "(1) is not a doubled class");
}

#[test]
fn lower_bounds() {
    let text = stdout(&realflag(&["lower-bound", "6", "12", "2,2^9"]));
    assert_eq!(text.lines().next(), Some("42"));
    // six doubled columns in Gr_8(R^14); the half-size count is 16
    let v = json(&["lower-bound", "8", "14", "2,2,2,2^6", "-f", "json"]);
    assert_eq!(v["lower_bound"], 16);
    assert_eq!(v["half_problem"], "Gr_4(C^7)");
    let o = realflag(&["lower-bound", "6", "12", "2,2^8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("codimension mismatch"));
}

#[test]
fn tables_pass_and_unknown_tables_are_rejected() {
    let o = realflag(&["tables", "fl4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS deg  3: 2341 + 4123") || text.contains("PASS deg  3: 2341 - 4123"), "{}", text);
    assert!(!text.contains("FAIL"));
    let v = json(&["tables", "fl333", "-f", "json"]);
    assert_eq!(v[0]["name"], "fl333");
    let o = realflag(&["tables", "fl9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    let o = realflag(&["cohomology", "1,x,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 3"), "{}", stderr(&o));
    let o = realflag(&["cohomology", "1,1", "-f", "dot"]);
    assert_eq!(o.status.code(), Some(2));
    let o = realflag(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
    let o = realflag(&["cohomology", "1,1", "--coeffs", "Z3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn size_guard() {
    let o = realflag(&["cohomology", "1,1,1,1,1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("362880 cells") && err.contains("--max-n"), "{}", err);
    let o = realflag(&["--max-n", "9", "cohomology", "4,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    let o = realflag(&["--max-n", "3", "graph", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("realflag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fl3.dot");
    let o = realflag(&["graph", "1,1,1", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_variable_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_realflag"))
        .args(["cohomology", "1,1,1"])
        .env("REALFLAG_THREADS", "abc")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("REALFLAG_THREADS"));
}
