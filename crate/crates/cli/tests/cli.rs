use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn tautile(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tautile"));
    cmd.args(args).env_remove("TAUTILE_CAP").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let input = stdin.unwrap_or("").to_string();
    let mut pipe = child.stdin.take().unwrap();
    let writer = std::thread::spawn(move || {
        let _ = pipe.write_all(input.as_bytes());
    });
    let out = child.wait_with_output().unwrap();
    writer.join().unwrap();
    out
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn family(args: &[&str]) -> String {
    let mut all = vec!["family", "build"];
    all.extend_from_slice(args);
    let o = tautile(&all, None, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn gamma_cartan_from_stdin() {
    let gamma = family(&["Gamma", "--n", "1"]);
    let o = tautile(&["alg", "cartan", "--det", "-"], Some(&gamma), &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..4], ["2 0 1", "0 2 1", "1 1 3", "det = 8"]);
}

#[test]
fn hecke_and_schur_verdicts() {
    let o = tautile(&["hecke", "verdict", "A2"], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("finite"));

    let o = tautile(&["schur", "verdict", "-n", "3", "-r", "4"], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("infinite: Delta2 on "));
    let vertices = text.lines().next().unwrap().rsplit(' ').next().unwrap();
    assert_eq!(vertices.split(',').filter(|v| v.starts_with("v{")).count(), 6);
    assert!(text.contains("\"kind\":\"delta_subquiver\""));
}

#[test]
fn cap_flag_beats_environment() {
    let apq = family(&["Apq", "--p", "1", "--q", "2"]);
    let o = tautile(&["alg", "enum", "-"], Some(&apq), &[("TAUTILE_CAP", "3")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("inconclusive"));
    let o = tautile(&["alg", "enum", "--cap", "1000", "-"], Some(&apq), &[("TAUTILE_CAP", "3")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("finite: 8"));
}

#[test]
fn exit_codes_for_bad_and_unsupported_input() {
    assert_eq!(tautile(&["alg", "build", "-"], Some("{"), &[]).status.code(), Some(2));
    assert_eq!(tautile(&["alg", "build", "/nonexistent/algebra.json"], None, &[]).status.code(), Some(2));
    assert_eq!(tautile(&["hecke", "verdict", "Z9"], None, &[]).status.code(), Some(2));
    assert_eq!(tautile(&["alg", "enum", "--cap", "0", "-"], Some("{}"), &[]).status.code(), Some(2));
    let over_f3 = family(&["Gamma", "--n", "1", "--prime", "3"]);
    let o = tautile(&["alg", "enum", "-"], Some(&over_f3), &[]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("characteristic zero"));
    assert_eq!(tautile(&["hecke", "algebra", "B3"], None, &[]).status.code(), Some(4));
}

#[test]
fn reports_are_byte_identical() {
    let gamma = family(&["Gamma", "--n", "1"]);
    let one = tautile(&["alg", "verdict", "--json", "-"], Some(&gamma), &[]);
    let two = tautile(&["alg", "verdict", "--json", "-"], Some(&gamma), &[]);
    assert_eq!(one.stdout, two.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["verdict"], "finite");
    assert_eq!(v["count"], 20);
}

#[test]
fn export_dot_and_json() {
    let a = family(&["Preproj", "--rank", "2"]);
    let path = scratch("preproj2.json");
    std::fs::write(&path, &a).unwrap();
    let o = tautile(&["export", path.to_str().unwrap(), "--format", "dot"], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 6);
    assert_eq!(dot.matches("->").count(), 6);

    let report = scratch("preproj2.report.json");
    let o = tautile(&["export", path.to_str().unwrap(), "-o", report.to_str().unwrap()], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn supplied_certificates_are_replayed() {
    let t = family(&["Tpq", "--p", "1", "--q", "1"]);
    let o = tautile(&["alg", "verdict", "--json", "-"], Some(&t), &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "infinite");
    let cert = scratch("t11.cert.json");
    std::fs::write(&cert, v["certificate"].to_string()).unwrap();
    let o = tautile(&["alg", "verdict", "--certificate", cert.to_str().unwrap(), "-"], Some(&t), &[]);
    assert_eq!(o.status.code(), Some(0));

    let forged = scratch("forged.cert.json");
    std::fs::write(&forged, r#"{"kind":"hereditary_quotient","kill_vertices":[],"kill_arrows":[],"graph_type":"~A1"}"#).unwrap();
    let a2 = family(&["Preproj", "--rank", "2"]);
    let o = tautile(&["alg", "verdict", "--certificate", forged.to_str().unwrap(), "-"], Some(&a2), &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hecke_quiver_json_and_algebra_round_trip() {
    let o = tautile(&["hecke", "quiver", "A3", "--json"], None, &[]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 10);

    let h = tautile(&["hecke", "algebra", "A2"], None, &[]);
    assert_eq!(h.status.code(), Some(0));
    let o = tautile(&["alg", "enum", "-"], Some(&stdout(&h)), &[]);
    assert!(stdout(&o).contains("finite: 24"));

    let s = tautile(&["schur", "build", "-n", "2", "-r", "3"], None, &[]);
    let o = tautile(&["alg", "build", "-"], Some(&stdout(&s)), &[]);
    assert!(stdout(&o).starts_with("3 vertices"));
}
