use std::io::Write;
use std::process::{Command, Output, Stdio};

fn brittle(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_brittle"))
        .args(args)
        .env_remove("BRITTLE_LIMITS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_all_on_k23() {
    let out = brittle(&["compute", "--class", "forests", "--graph6", "D]o", "--all"], None);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let values: Vec<(String, u64)> =
        lines.iter().map(|v| (v["parameter"].as_str().unwrap().to_string(), v["value"].as_u64().unwrap())).collect();
    assert_eq!(values, [("e".into(), 2), ("eta".into(), 3), ("kappa".into(), 2), ("nu".into(), 1)]);
    assert!(lines.iter().all(|v| v["elapsed_ms"].is_null()));
}

#[test]
fn output_is_byte_stable() {
    let args = ["compute", "--class", "outerplanar", "--family", "w-plus", "--k", "4", "--all"];
    let a = brittle(&args, None);
    let b = brittle(&args, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stdin_edge_list_and_class_files() {
    let out = brittle(&["compute", "--class", "diamond-free", "--param", "e"], Some("C~\nBw\n"));
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = brittle(
        &["compute", "--class", "forests", "--edge-list", "-", "--param", "nu"],
        Some("4 4\n0 1\n1 2\n2 3\n3 0\n"),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"value\":1"));

    let dir = std::env::temp_dir().join(format!("brittle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.g6");
    std::fs::write(&path, "C~\n").unwrap();
    let class = format!("file:{}", path.display());
    let out = brittle(&["compute", "--class", &class, "--graph6", "D~{", "--param", "eta", "--format", "table"], None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("eta"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(brittle(&["compute", "--class", "forests", "--graph6", "C", "--all"], None).status.code(), Some(2));
    assert_eq!(brittle(&["compute", "--class", "planar", "--graph6", "Bw", "--all"], None).status.code(), Some(2));
    let big =
        brittle(&["compute", "--class", "outerplanar", "--family", "prop-example", "--l", "4", "--param", "eta"], None);
    assert_eq!(big.status.code(), Some(3));
    assert_eq!(brittle(&["traps", "--h", "k3", "--max-n", "10"], None).status.code(), Some(3));
}

#[test]
fn limits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_brittle"))
        .args(["compute", "--class", "forests", "--graph6", "D]o", "--param", "eta"])
        .env("BRITTLE_LIMITS", "max_vertices=4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_brittle"))
        .args(["compute", "--class", "forests", "--graph6", "Bw", "--param", "eta"])
        .env("BRITTLE_LIMITS", "bogus=1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_families() {
    let out = brittle(&["construct", "w-plus", "--k", "5", "--format", "edge-list"], None);
    assert!(stdout(&out).starts_with("11 "));
    let out = brittle(&["construct", "fan", "--base", "K3", "--s", "v", "--k", "5"], None);
    let g = brittle::format::from_graph6(stdout(&out).trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (11, 15));
    let out = brittle(&["construct", "fig3"], None);
    let g = brittle::format::from_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g, brittle_core::constructions::named::theta_fig3());
}

#[test]
fn traps_lines() {
    let out = brittle(&["traps", "--h", "k23", "--max-n", "7"], None);
    assert!(out.status.success());
    let lines: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|v| v["status"] == "trap" && v["h_name"] == "k23"));

    // the same from a supplied stream holding only K3 and K4
    let out = brittle(&["traps", "--h", "k3", "--max-n", "4", "--source", "-"], Some("Bw\nC~\n"));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn verify_prop_example() {
    let out = brittle(&["verify", "--suite", "prop-example", "--l-max", "3", "--format", "json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "prop-example");
}
