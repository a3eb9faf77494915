use std::process::{Command, Output};

use serde_json::Value;
use symplectic_hecke::algebra::json::{vseries_from_json, xpoly_from_json};
use symplectic_hecke::series::{p_numerator, q3_in_generators, QCoefficients};
use symplectic_hecke::spherical::omega_hl;
use symplectic_hecke::Signature;

fn sphecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = sphecke(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn omega_text() {
    let o = sphecke(&["omega", "--lambda", "2,1,0", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(2*p^2-p-1)/p^6 * sym[1,1,1] + 1/p^4 * sym[2,1,0]\n");
    assert_eq!(stdout(&sphecke(&["omega", "--lambda", "0,0,0"])), "1\n");
    assert_eq!(stdout(&sphecke(&["omega", "--lambda", "0,1,2"])), stdout(&o));
}

#[test]
fn omega_oracle_agrees_at_a_prime() {
    let a = sphecke(&["omega", "--lambda", "2,1,1", "--prime", "3"]);
    let b = sphecke(&["omega", "--lambda", "2,1,1", "--prime", "3", "--oracle"]);
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["omega", "--lambda", "1,0,0", "--bogus"][..],
        &["frobnicate"],
        &[],
        &["omega"],
        &["omega", "--lambda", "1,0,0", "--oracle"],
        &["omega", "--lambda", "1,0,0", "--prime", "4"],
        &["omega", "--lambda", "1,0,0", "--method", "guess"],
        &["series", "--genus", "4"],
        &["numerator", "--genus", "2", "--order", "3"],
        &["numerator", "--genus", "2", "--route", "closed-form"],
        &["table", "--format", "yaml"],
    ] {
        assert_eq!(sphecke(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(sphecke(&["--help"]).status.code(), Some(0));
}

#[test]
fn omega_json_round_trips() {
    let v = json(&["omega", "--lambda", "3,1,0", "--format", "json"]);
    let w = xpoly_from_json(&v["omega"]).unwrap();
    assert_eq!(w, omega_hl(&Signature::new(vec![3, 1, 0]).unwrap(), 3).unwrap());
}

#[test]
fn numerator_json_round_trips() {
    let v = json(&["numerator", "--genus", "2", "--format", "json"]);
    assert_eq!(vseries_from_json(&v).unwrap(), p_numerator(2, 12).unwrap());
}

#[test]
fn theorem2_json_round_trips() {
    let v = json(&["theorem2", "--format", "json"]);
    assert_eq!(QCoefficients::from_json(&v["t"]).unwrap(), q3_in_generators().unwrap());
    assert_eq!(v["K"].as_object().unwrap().len(), 18);
    assert!(v["verdicts"].as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn table_is_deterministic_and_complete() {
    let a = stdout(&sphecke(&["table"]));
    assert_eq!(a.lines().count(), 28);
    assert_eq!(a, stdout(&sphecke(&["table"])));
    let latex = stdout(&sphecke(&["table", "--format", "latex"]));
    assert!(latex.contains(r"\mathit{sym}_{1,1,1}"));
}

#[test]
fn out_writes_the_rendering() {
    let path = std::env::temp_dir().join(format!("sphecke-images-{}.txt", std::process::id()));
    let o = sphecke(&["images", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&sphecke(&["images"])));
    assert!(written.starts_with("Omega(T(p)) = x0 + x0*sym[1,0,0]"));
}

#[test]
fn verify_all_passes() {
    let o = sphecke(&["verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains(" PASS ")).count(), 10);
}
