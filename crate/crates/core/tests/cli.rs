use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn trirev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trirev")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = trirev(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, text).unwrap();
    path
}

fn assert_usage_error(args: &[&str]) {
    let out = trirev(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty(), "{args:?}");
    assert!(!out.stderr.is_empty(), "{args:?}");
}

#[test]
fn table_and_c() {
    assert_eq!(
        stdout(&["table", "AND_C"]),
        "0 0 -> 0 0\n0 1 -> 0 1\n0 2 -> 2 2\n1 0 -> 0 2\n1 1 -> 1 0\n1 2 -> 1 1\n2 0 -> 2 1\n2 1 -> 1 2\n2 2 -> 2 0\n"
    );
}

#[test]
fn table_cnot_and_inverse_names() {
    let t = stdout(&["table", "CNOT"]);
    assert_eq!(t.lines().count(), 4);
    assert!(t.contains("1 0 -> 1 1\n"));
    assert!(stdout(&["table", "OR_C_INV"]).contains("0 0 -> 0 0\n"));
}

#[test]
fn unknown_gate_is_a_usage_error() {
    assert_usage_error(&["table", "NOSUCH"]);
    assert_usage_error(&["matrix", "NOSUCH"]);
    assert_usage_error(&["order", "NOSUCH"]);
}

#[test]
fn matrices() {
    assert_eq!(stdout(&["matrix", "X3"]), "0+0i 0+0i 1+0i\n1+0i 0+0i 0+0i\n0+0i 1+0i 0+0i\n");
    assert_eq!(stdout(&["matrix", "X3_INV"]), "0+0i 1+0i 0+0i\n0+0i 0+0i 1+0i\n1+0i 0+0i 0+0i\n");
    let cnot = stdout(&["matrix", "CNOT"]);
    assert_eq!(cnot.lines().nth(2).unwrap(), "0+0i 0+0i 0+0i 1+0i");
    let toffoli = stdout(&["matrix", "TOFFOLI"]);
    let rows: Vec<&str> = toffoli.lines().collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[6], "0+0i 0+0i 0+0i 0+0i 0+0i 0+0i 0+0i 1+0i");
    assert_eq!(rows[7], "0+0i 0+0i 0+0i 0+0i 0+0i 0+0i 1+0i 0+0i");
}

#[test]
fn orders() {
    assert_eq!(stdout(&["order", "AND_C"]), "7\n");
    assert_eq!(stdout(&["order", "OR_C"]), "7\n");
    assert_eq!(stdout(&["order", "TOFFOLI"]), "2\n");
    assert_eq!(stdout(&["order", "X3"]), "3\n");
}

#[test]
fn run_classical_circuits() {
    let and = fixture(
        "and_c.circ",
        "wires: 3 3\n# b -> b - a, then a -> a - 1 if b = 2\ngate CX_STAR 0 1\ngate C2_STAR 0 1\n",
    );
    assert_eq!(stdout(&["run", and.to_str().unwrap(), "2", "1"]), "1 2\n");
    let empty = fixture("empty.circ", "wires: 3 3\n\n");
    assert_eq!(stdout(&["run", empty.to_str().unwrap(), "0", "0"]), "0 0\n");
}

#[test]
fn run_state_vector() {
    let cnot = fixture("cnot.circ", "wires: 2 2\ngate CNOT 0 1\n");
    let p = cnot.to_str().unwrap();
    assert_eq!(stdout(&["run", p, "--state", "0.707107", "0", "0.707107", "0"]), "0.707107+0i 0+0i 0+0i 0.707107+0i\n");
    assert_eq!(stdout(&["run", p, "--state", "0", "0", "-i", "0"]), "0+0i 0+0i 0+0i 0-1i\n");
}

#[test]
fn run_errors() {
    let cnot = fixture("cnot_err.circ", "wires: 2 2\ngate CNOT 0 1\n");
    let p = cnot.to_str().unwrap();
    assert_usage_error(&["run", p, "1"]);
    assert_usage_error(&["run", p, "2", "0"]);
    assert_usage_error(&["run", p, "--state", "1", "0"]);
    assert_usage_error(&["run", p, "--state", "0", "0", "0", "0"]);
    let bad = fixture("bad.circ", "wires: 2 2\ngate NOSUCH 0 1\n");
    assert_usage_error(&["run", bad.to_str().unwrap(), "0", "0"]);
    let mismatch = fixture("mismatch.circ", "wires: 2 2\ngate AND_C 0 1\n");
    assert_usage_error(&["run", mismatch.to_str().unwrap(), "0", "0"]);
    assert_usage_error(&["run", "/nonexistent/file.circ", "0"]);
}

#[test]
fn embed_boolean_and_gives_toffoli() {
    let and = fixture("and.tt", "in: 2 2\nout: 2\n0\n0\n0\n1\n");
    let out = stdout(&["embed", and.to_str().unwrap()]);
    let mut expected = stdout(&["table", "TOFFOLI"]);
    expected.push_str("ancilla=1 garbage=2\n");
    assert_eq!(out, expected);
}

#[test]
fn embed_identity_gives_cnot() {
    let id = fixture("id.tt", "in: 2\nout: 2\n0\n1\n");
    let out = stdout(&["embed", id.to_str().unwrap()]);
    let mut expected = stdout(&["table", "CNOT"]);
    expected.push_str("ancilla=1 garbage=1\n");
    assert_eq!(out, expected);
}

#[test]
fn embed_rejects_malformed_tables() {
    for (name, text) in [
        ("short.tt", "in: 2\nout: 2\n0\n"),
        ("digit.tt", "in: 2\nout: 2\n0\n2\n"),
        ("header.tt", "out: 2\nin: 2\n0\n1\n"),
        ("word.tt", "in: 2\nout: 2\n0 0\n1\n"),
    ] {
        assert_usage_error(&["embed", fixture(name, text).to_str().unwrap()]);
    }
}

#[test]
fn enumerate_balanced_and_symmetric() {
    let balanced = stdout(&["enumerate", "balanced", "AND"]);
    let lines: Vec<&str> = balanced.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(*lines.last().unwrap(), "count=10");
    let mut sorted = lines[..10].to_vec();
    sorted.sort();
    assert_eq!(sorted, lines[..10]);

    let symmetric = stdout(&["enumerate", "symmetric", "AND"]);
    assert!(symmetric.lines().any(|l| l == "002/011/212"));
    assert!(symmetric.ends_with("count=2\n"));
    assert!(stdout(&["enumerate", "symmetric", "OR"]).lines().any(|l| l == "010/112/022"));
}

#[test]
fn enumerate_extensions_counts() {
    let ext = stdout(&["enumerate", "extensions", "AND"]);
    assert!(ext.ends_with("count=2160\n"));
    assert_eq!(ext.lines().count(), 2161);
    assert_eq!(stdout(&["enumerate", "extensions", "OR", "--full-scan"]), stdout(&["enumerate", "extensions", "OR"]));
    let bit_trit = stdout(&["enumerate", "extensions", "AND", "--ambient", "23"]);
    assert!(bit_trit.ends_with("relabel_count=6\ncount=36\n"));
}

#[test]
fn enumerate_counterexamples() {
    let out = stdout(&["enumerate", "counterexamples", "AND"]);
    let count: usize = out.lines().last().unwrap().strip_prefix("count=").unwrap().parse().unwrap();
    assert!(count >= 1);
    assert!(out.lines().any(|l| l.starts_with("associativity ")));
    assert_eq!(out.lines().count(), count + 1);
}

#[test]
fn enumerate_bad_arguments() {
    assert_usage_error(&["enumerate", "balanced", "XOR"]);
    assert_usage_error(&["enumerate", "nothing", "AND"]);
    assert_usage_error(&["enumerate", "balanced", "AND", "--ambient", "23"]);
    assert_usage_error(&["enumerate", "symmetric", "AND", "--full-scan"]);
}

#[test]
fn verify_single_claims() {
    assert_eq!(stdout(&["verify", "count-2160"]), "PASS count-2160 expected=2160 got=2160\n");
    assert_eq!(stdout(&["verify", "order-7"]), "PASS order-7 AND_C=7 OR_C=7\n");
    assert_usage_error(&["verify", "no-such-claim"]);
}

#[test]
fn verify_all_covers_every_listed_claim() {
    let ids: Vec<String> =
        stdout(&["verify", "--list"]).lines().map(|l| l.split(' ').next().unwrap().to_string()).collect();
    let report = stdout(&["verify", "all"]);
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), ids.len());
    for (line, id) in lines.iter().zip(&ids) {
        assert!(line.starts_with(&format!("PASS {id} ")) || *line == format!("PASS {id}"), "{line}");
    }
    for required in [
        "tritri-tables",
        "and-decomposition",
        "order-7",
        "demorgan",
        "count-2160",
        "balanced-10",
        "symmetric-2",
        "fanout",
        "x3-laws",
        "toffoli-projector",
        "luklog-unbalanced",
        "embed-roundtrip",
        "quantum-classical-agreement",
    ] {
        assert!(ids.iter().any(|id| id == required), "{required}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [&["table", "AND_C"][..], &["enumerate", "balanced", "AND"], &["verify", "all"]] {
        assert_eq!(trirev(args).stdout, trirev(args).stdout, "{args:?}");
    }
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(trirev(&[]).status.code(), Some(2));
    assert_eq!(trirev(&["--help"]).status.code(), Some(0));
}
