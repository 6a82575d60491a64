//! Runs the `snalab` binary on the sample files in `data/`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use snalab::format::{load, Loaded};
use snalab_core::algebra::hom::is_isomorphic;
use snalab_core::FiniteAlgebra;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

/// Exit code and standard output plus standard error.
fn snalab(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_snalab"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().expect("exit code"), text)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_and_exit_codes() {
    let (code, out) = snalab(&["check", path(&data("s1.txt")), "--kind", "srl"]);
    assert_eq!((code, out.trim()), (0, "srl: PASS"));

    let (code, out) = snalab(&["check", path(&data("k_s1.txt")), "--kind", "sna"]);
    assert_eq!((code, out.trim()), (0, "sna: PASS"));

    let (code, out) = snalab(&["check", path(&data("k_s1.txt")), "--kind", "nelson", "--full-report"]);
    assert_eq!(code, 1);
    assert!(
        out.contains("Ne6: x^(x->y) = x^(~x v y) fails at x=(1,0), y=(a,0)"),
        "{out}"
    );

    let (code, out) = snalab(&["check", path(&data("k_s1.txt")), "--kind", "nelson"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().count(), 2, "{out}");

    let (code, _) = snalab(&["check", path(&data("b4h.txt")), "--kind", "nelson-lattice"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("cyclic.txt");
    fs::write(&cyclic, "kind: lattice\nelements: 0 a 1\ncovers: 0 a; a 1; 1 0\n").unwrap();
    let (code, out) = snalab(&["dot", path(&cyclic)]);
    assert_eq!(code, 2);
    assert!(out.contains("cycle"), "{out}");

    let unknown = dir.path().join("unknown.txt");
    fs::write(&unknown, "kind: srl\nelements: 0 1\nshape: round\n").unwrap();
    let (code, out) = snalab(&["check", path(&unknown)]);
    assert_eq!(code, 2);
    assert!(out.contains("line 3"), "{out}");

    assert_eq!(snalab(&["check", "does-not-exist.txt"]).0, 2);
    assert_eq!(snalab(&["check", path(&data("s1.txt")), "--kind", "sna"]).0, 2);
    assert_eq!(snalab(&["frobnicate"]).0, 2);
    assert_eq!(snalab(&["twist", path(&data("s1.txt")), "--filter", "z"]).0, 2);
}

#[test]
fn non_subresiduated_filter_is_a_mathematical_failure() {
    let (code, out) = snalab(&["twist", path(&data("s1.txt")), "--filter", "a"]);
    assert_eq!(code, 1);
    assert!(out.contains("subresiduated"), "{out}");
}

#[test]
fn twist_then_quotient_recovers_s1() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.json");
    let q = dir.path().join("q.txt");
    assert_eq!(snalab(&["twist", path(&data("s1.txt")), "--json", "-o", path(&k)]).0, 0);
    assert!(fs::read_to_string(&k).unwrap().starts_with('{'));
    assert_eq!(snalab(&["check", path(&k), "--kind", "sna"]).0, 0);
    assert_eq!(snalab(&["quotient", path(&k), "-o", path(&q)]).0, 0);
    let (Loaded::Srl(original), Loaded::Srl(recovered)) = (load(&data("s1.txt")).unwrap(), load(&q).unwrap()) else {
        panic!("expected sr-lattices");
    };
    assert!(is_isomorphic(&original.signature(), &recovered.signature()));
}

#[test]
fn text_and_json_files_agree() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t7.json");
    let text = fs::read_to_string(data("t7.txt")).unwrap();
    let file = snalab::format::parse_str(&text).unwrap();
    fs::write(&json, snalab::format::render_json(&file)).unwrap();
    let a = snalab(&["center", path(&data("t7.txt"))]);
    let b = snalab(&["center", path(&json)]);
    assert_eq!(a, b);
}

#[test]
fn dot_of_t7_has_seven_nodes() {
    let (code, out) = snalab(&["dot", path(&data("t7.txt"))]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[label=").count(), 7);
    assert_eq!(out.matches(" -> ").count(), 8);
    assert!(out.contains("{ rank=min; n3; }"), "{out}");
    assert!(out.contains("n3 [label=\"(0,1)\"]"));
}

#[test]
fn congruences_of_k_s1() {
    let (code, out) = snalab(&["congruences", path(&data("k_s1.txt"))]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2, "{out}");
}

#[test]
fn variety_center_and_residuated_reports() {
    let (code, out) = snalab(&["variety", path(&data("k_s1.txt"))]);
    assert_eq!(code, 1);
    assert!(
        out.contains("box(x v y) = box(x) v box(y): fails at x=(a,0), y=(b,0)"),
        "{out}"
    );
    assert_eq!(snalab(&["variety", path(&data("chain3.txt"))]).0, 0);

    let (code, out) = snalab(&["center", path(&data("t7.txt"))]);
    assert_eq!(code, 0);
    assert!(out.contains("center: (0,0)"));
    assert!(out.contains("(CK): fails at x=(a,0), y=(b,0)"), "{out}");
    assert!(out.contains("rho surjective: no"));
    let (_, out) = snalab(&["center", path(&data("u.json"))]);
    assert!(out.contains("not a twist: no center"), "{out}");

    let (code, out) = snalab(&["residuated", path(&data("s2.txt"))]);
    assert_eq!(code, 0);
    assert!(
        out.contains("translation gap: a=a, b=0, c=a, d=b: a->c = 1 is not below d->(a->b) = a"),
        "{out}"
    );
    let (_, out) = snalab(&["residuated", path(&data("b4h.txt"))]);
    assert!(
        out.contains("nelson-lattice: PASS") && out.contains("translation gap: none"),
        "{out}"
    );
}

#[test]
fn filtered_twist_directive() {
    let (code, out) = snalab(&["check", path(&data("k_b4h_top.json"))]);
    assert_eq!((code, out.trim()), (0, "sna: PASS"));
}
