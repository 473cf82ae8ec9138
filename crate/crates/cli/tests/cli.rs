use std::io::Write;
use std::process::{Command, Stdio};

use tanvar_cli::mesh::parse_obj;
use tanvar_cli::{run, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};

fn example(name: &str) -> String {
    format!("{}/../../docs/examples/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tanvar(args: &[&str]) -> tanvar_cli::Outcome {
    let mut v = vec!["tanvar"];
    v.extend_from_slice(args);
    run(v)
}

#[test]
fn exit_codes() {
    assert_eq!(tanvar(&["classify", "--type", "1,2,4,5"]).code, EXIT_OK);
    assert_eq!(tanvar(&["classify", "--type", "1,3,5,7"]).code, EXIT_INCONCLUSIVE);
    assert_eq!(tanvar(&["classify", "--type", "3,2"]).code, EXIT_INVALID);
    assert_eq!(tanvar(&["classify", "--type", "1,2,3", "--N", "4"]).code, EXIT_INVALID);
    assert_eq!(tanvar(&["tangent", "/does/not/exist.toml"]).code, EXIT_INVALID);
    assert_eq!(tanvar(&["normal-form", "swallowtail", "--dim", "4"]).code, EXIT_INVALID);
    assert_eq!(tanvar(&["veronese", "--diag", "0,0,0"]).code, EXIT_INVALID);
    assert_eq!(tanvar(&["no-such-command"]).code, EXIT_INVALID);
}

#[test]
fn example_documents() {
    let out = tanvar(&["type", &example("folded_umbrella_curve.toml")]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("(1,2,4)"), "{}", out.stdout);

    let out = tanvar(&["surface", &example("hyperbolic_surface.toml")]);
    assert!(out.stdout.starts_with("hyperbolic, H=-1, D4+"), "{}", out.stdout);
    let out = tanvar(&["surface", &example("elliptic_surface.toml")]);
    assert!(out.stdout.starts_with("elliptic, H=4, D4-"), "{}", out.stdout);

    let out = tanvar(&["veronese", &example("secant_matrix.toml")]);
    assert_eq!(out.stdout.lines().next(), Some("in Sec(S) \\ Tan(S)"));
    let out = tanvar(&["veronese", "--diag", "1,-1,0"]);
    assert_eq!(out.stdout.lines().next(), Some("in Tan(S)"));
}

#[test]
fn structured_output_is_json() {
    let out = tanvar(&["--format", "structured", "codim", "--type", "1,2,3,5", "--class", "tpn"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["command"], "codim");
}

#[test]
fn batch_keeps_order_and_reports_worst_status() {
    let bad = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(bad.path(), "kind = \"curve\"\nbogus = 1\n").unwrap();
    let files = [example("secant_matrix.toml"), bad.path().to_str().unwrap().to_string(), example("hyperbolic_surface.toml")];
    let out = tanvar(&["batch", &files[0], &files[1], &files[2]]);
    assert_eq!(out.code, EXIT_INVALID);
    let headers: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with("== ")).collect();
    assert_eq!(headers, files.iter().map(|f| format!("== {f}")).collect::<Vec<_>>());
}

#[test]
fn obj_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("st.obj");
    let p = path.to_str().unwrap();
    let out = tanvar(&["normal-form", "swallowtail", "--mesh", p, "--grid", "7", "--range", "-2,2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# "));
    let (v, f) = parse_obj(&text).unwrap();
    assert_eq!(v.len(), 49);
    assert_eq!(f.len(), 36);
    assert!(f.iter().all(|face| face.len() == 4));
    // corner (s, t) = (-2, -2) of (t^2 + 2s, t^3 + 3st, t^4 + 4st^2)
    assert_eq!(v[0], [0.0, 4.0, -16.0]);
}

#[test]
fn reads_documents_from_stdin() {
    let text = std::fs::read_to_string(example("cuspidal_edge_curve.toml")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_tanvar"))
        .args(["type", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("(1,2,3)"));
}
