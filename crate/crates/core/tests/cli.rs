use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn twalex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twalex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classical_text() {
    let o = twalex(&["classical", "--link", path(&corpus("trefoil.pd"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "trefoil: Δ = t1^2 - t1 + 1\n");
}

#[test]
fn classical_json() {
    let o = twalex(&["classical", "--link", path(&corpus("whitehead.pd")), "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["kind"], "classical");
    assert_eq!(v["components"], 2);
    assert_eq!(v["polynomial"], "t1*t2 - t1 - t2 + 1");
}

#[test]
fn torres_json_lines_keep_key_order() {
    let o = twalex(&["torres", "--link", path(&corpus("torus_2_4.pd")), "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let keys = [
        "kind",
        "link",
        "check",
        "verdict",
        "deleted_component",
        "linking_numbers",
        "degree",
        "field",
        "lhs",
        "rhs",
        "quotient",
        "epsilons",
        "epsilon_rho",
        "bracket_constant",
        "predicted",
    ];
    for line in &lines {
        let mut at = 0;
        for k in keys {
            let pos = line[at..].find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("{k} out of order in {line}"));
            at += pos;
        }
    }
    let checks: Vec<serde_json::Value> = lines.iter().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = checks.iter().map(|c| c["check"].as_str().unwrap()).collect();
    assert_eq!(names, ["divisibility", "bracket", "prediction", "block-structure"]);
    assert_eq!(checks[0]["verdict"], "pass");
    assert_eq!(checks[0]["linking_numbers"], serde_json::json!([2]));
    assert_eq!(checks[1]["epsilons"], serde_json::json!(["-2"]));
    assert_eq!(checks[1]["epsilon_rho"], "2");
}

#[test]
fn torres_with_representation_file_and_classical() {
    let rep = tempfile::NamedTempFile::new().unwrap();
    // reduced link of torus_2_4 is an unknot with a single generator
    std::fs::write(rep.path(), "Fp 7\ndegree 2\ngen x1_1\n3 1\n0 5\n").unwrap();
    let o = twalex(&[
        "torres",
        "--link",
        path(&corpus("torus_2_4.pd")),
        "--rep",
        path(rep.path()),
        "--classical",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS"), "{text}");
    assert!(text.contains("DIVISIBLE"), "{text}");
    assert!(text.contains("BRACKET-PASS"), "{text}");
}

#[test]
fn degenerate_torres_exits_zero_with_notice() {
    let o = twalex(&["torres", "--link", path(&corpus("borromean.pd"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("DEGENERATE"));
    assert!(stderr(&o).contains("notice"));
}

#[test]
fn compute_with_representation_file() {
    let o = twalex(&[
        "compute",
        "--link",
        path(&corpus("trefoil.pd")),
        "--rep",
        path(&corpus("reps/trefoil_f13.rep")),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("quotient:    t1^2 + 1"), "{}", stdout(&o));
}

#[test]
fn field_mismatch_is_rejected() {
    let o = twalex(&[
        "compute",
        "--link",
        path(&corpus("trefoil.pd")),
        "--rep",
        path(&corpus("reps/trefoil_f13.rep")),
        "--field",
        "Fp:7",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn missing_file_exits_two() {
    let o = twalex(&["classical", "--link", "/definitely/not/here.pd"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("file not found"), "{}", stderr(&o));
}

#[test]
fn invalid_representation_names_the_relator() {
    let rep = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(
        rep.path(),
        "Fp 7\ndegree 2\ngen x1_1\n1 1\n0 1\ngen x1_2\n1 0\n1 1\ngen x1_3\n1 0\n0 1\n",
    )
    .unwrap();
    let o = twalex(&["compute", "--link", path(&corpus("trefoil.pd")), "--rep", path(rep.path())]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(err.contains("relator 1 (crossing 1)"), "{err}");
}

#[test]
fn malformed_pd_exits_three_with_line() {
    let pd = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(pd.path(), "X[1,2,3]\n").unwrap();
    let o = twalex(&["classical", "--link", path(pd.path())]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn presentation_subcommand() {
    let o = twalex(&["presentation", "--link", path(&corpus("hopf.pd"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "gen x1_1 component 1\ngen x2_1 component 2\nrel x2_1 x1_1 x2_1^-1 x1_1^-1\n"
    );
    let o = twalex(&["presentation", "--link", path(&corpus("whitehead.pd")), "--drop", "2"]);
    assert_eq!(stdout(&o), "gen x1_1 component 1\n");
    let o = twalex(&["presentation", "--link", path(&corpus("whitehead.pd")), "--drop", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn selftest_on_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["trefoil.pd", "hopf.pd"] {
        std::fs::copy(corpus(name), dir.path().join(name)).unwrap();
    }
    std::fs::write(dir.path().join("goldens.txt"), "trefoil t1^2 - t1 + 1\nhopf 1\n").unwrap();
    let o = twalex(&["selftest", "--corpus", path(dir.path()), "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 6);

    std::fs::write(dir.path().join("goldens.txt"), "trefoil t1^2 + 1\n").unwrap();
    let o = twalex(&["selftest", "--corpus", path(dir.path())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL classical-goldens"));
}
