use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nccumulants::functionals::{random_family, MultilinearFamily};

fn nccum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nccum")).args(args).output().expect("run nccum")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn enumerate_four_lists_fourteen_partitions() {
    let o = nccum(&["nc", "enumerate", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "{1}{2}{3}{4}");
    assert!(lines.contains(&"{1,2,3,4}"));
}

#[test]
fn kreweras_and_moebius() {
    let o = nccum(&["nc", "kreweras", "--partition", "{1,5,6}{2,4}{3}{7}{8,10}{9}"]);
    assert_eq!(stdout(&o).trim(), "{1,4}{2,3}{5}{6,7,10}{8,9}");
    // mu(0_3, 1_3) = Cat_2 with sign (-1)^2.
    let o = nccum(&["nc", "moebius", "--partition", "{1}{2}{3}"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn typeb_counts() {
    for flavor in ["b", "b-opp"] {
        let o = nccum(&["typeb", "enumerate", "--n", "3", "--flavor", flavor]);
        assert_eq!(stdout(&o).lines().count(), 20, "flavor {flavor}");
    }
}

#[test]
fn verify_theorem_14_reports_ok() {
    let o = nccum(&["--json", "verify", "--theorem", "14", "--seed", "7", "--k", "2", "--N", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], true);
    assert!(v["counterexample"].is_null());
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--theorem", "17", "--seed", "3", "--N", "3", "--json"];
    assert_eq!(nccum(&args).stdout, nccum(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nccum(&["nc", "enumerate"]).status.code(), Some(2));
    assert_eq!(nccum(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nccum(&["nc", "kreweras", "--partition", "{1,3}{2,4}"]).status.code(), Some(2));
    assert_eq!(nccum(&["nc", "enumerate", "--n", "13"]).status.code(), Some(2));
    let o = nccum(&["transform", "--brand", "free", "--direction", "to-cumulants", "--input", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn transform_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let phi = random_family(2, 4, 11);
    let original = phi.to_json();
    let input = write(dir.path(), "phi.json", &original);
    for brand in ["free", "boolean"] {
        let o = nccum(&["--json", "transform", "--brand", brand, "--direction", "to-cumulants", "--input", input.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let cumulants = write(dir.path(), "k.json", &stdout(&o));
        let o = nccum(&["--json", "transform", "--brand", brand, "--direction", "to-moments", "--input", cumulants.to_str().unwrap()]);
        assert_eq!(stdout(&o).trim_end(), original, "brand {brand}");
    }
}

#[test]
fn two_input_transforms_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let phi = write(dir.path(), "phi.json", &random_family(2, 3, 1).to_json());
    let chi = write(dir.path(), "chi.json", &random_family(2, 3, 2).to_json());
    for brand in ["cfree", "cc", "infinitesimal"] {
        let o = nccum(&["--json", "transform", "--brand", brand, "--direction", "to-cumulants", "--input", phi.to_str().unwrap(), chi.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let k = write(dir.path(), "k.json", &stdout(&o));
        let o = nccum(&["--json", "transform", "--brand", brand, "--direction", "to-moments", "--input", phi.to_str().unwrap(), k.to_str().unwrap()]);
        let back = MultilinearFamily::from_json(&stdout(&o)).unwrap();
        let chi_family = MultilinearFamily::from_json(&fs::read_to_string(&chi).unwrap()).unwrap();
        assert_eq!(back.first_difference(&chi_family), None, "brand {brand}");
    }
}

#[test]
fn products_and_psi_run() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &random_family(1, 4, 1).to_json());
    let b = write(dir.path(), "b.json", &random_family(1, 4, 2).to_json());
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let o = nccum(&["--json", "product", "--kind", "free", "--input", a, b]);
    assert_eq!(MultilinearFamily::from_json(&stdout(&o)).unwrap().k(), 2);
    let o = nccum(&["--json", "convolve", "--kind", "cfree", "--input", a, b, b, a]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["mu"].is_object() && v["nu"].is_object());
    let o = nccum(&["--json", "psi", "--k", "1", "--input", a]);
    assert_eq!(MultilinearFamily::from_json(&stdout(&o)).unwrap().degree(), 3);
    // Wrong arity is an input error.
    assert_eq!(nccum(&["product", "--kind", "cfree", "--input", a, b]).status.code(), Some(2));
}
