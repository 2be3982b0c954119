//! The invocations covered by golden files, one per command.

use std::path::PathBuf;
use std::process::Command;

pub const ALPHA2: &str = "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3";

pub fn invocations() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("build", vec!["build", ALPHA2]),
        ("resdisc", vec!["resdisc", "X^3 - X*Y^2"]),
        ("affine", vec!["affine", ALPHA2]),
        ("fixed", vec!["fixed", "X^2 - Y^2"]),
        ("iterate", vec!["iterate", ALPHA2, "--n", "2"]),
        ("orbit", vec!["orbit", ALPHA2, "--point", "3/5", "--n", "3"]),
        ("psi", vec!["psi", ALPHA2, "--n", "2"]),
        ("periodic", vec!["periodic", ALPHA2, "--n", "2"]),
        ("newton", vec!["newton", "x^2 - 1", "--r", "1"]),
        ("reconstruct", vec!["reconstruct", "--points", "0,1,2,inf", "--r", "4"]),
        ("conjugate", vec!["conjugate", ALPHA2, "--gamma", "0,2,-1,2"]),
        ("normal-form", vec!["normal-form", "X^3*Y - 3/2*X^2*Y^2 + 1/2*X*Y^3"]),
        ("alpha", vec!["alpha", "--value", "9/25"]),
        ("pythagorean", vec!["pythagorean", "--bound", "13"]),
        ("aut", vec!["aut", "X^3 + 2*X*Y^2", "--gamma", "-1,0,0,1"]),
        ("lattes", vec!["lattes", "--curve", "0,-1,0", "--m", "2"]),
        ("experiment-resdisc", vec!["experiment", "resdisc", "--curve", "0,-1,0", "--random", "2", "--seed", "7", "--m", "2"]),
        ("check", vec!["check", "multipliers", "--seed", "3", "--trials", "4"]),
        ("build-fp", vec!["--field", "fp:3", "build", "X^3 + X*Y^2 + 2*Y^3"]),
    ]
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Runs `pdyn --json <args>` and returns (stdout, exit status).
pub fn run_json(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_pdyn")).arg("--json").args(args).output().expect("pdyn runs");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().unwrap_or(-1))
}
