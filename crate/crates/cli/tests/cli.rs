use std::io::Write as _;

use qroot_cli::commands::{load, Any};
use qroot_cli::json;
use qroot_core::funalg;
use qroot_core::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("qroot").chain(args.iter().copied()).collect();
    let code = qroot_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    assert!(err.is_empty(), "stderr: {}", err);
    (code, serde_json::from_str(&out).unwrap())
}

fn temp_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn eta_minus_eta_plus_normal_form() {
    let f = Field::Root(3);
    let (code, v) = run_json(&["normal-form", "--expr", "eta- * eta+"]);
    assert_eq!(code, 0);
    let want = funalg::eta_plus(f).mul(&funalg::eta_minus(f)).scale(&f.q_pow(2));
    assert_eq!(json::fun_from(&v).unwrap(), want);
}

#[test]
fn k_inverse_is_k_to_p_minus_one() {
    let (code, out, _) = run(&["normal-form", "--expr", "K^-1", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "K^2");
    let (_, out, _) = run(&["normal-form", "--p", "7", "--expr", "K^-1", "--format", "text"]);
    assert_eq!(out.trim(), "K^6");
}

#[test]
fn nilpotent_inverse_is_rejected() {
    let (code, out, err) = run(&["normal-form", "--expr", "eta+^-1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("negative power of a nilpotent generator"), "{}", err);
    assert!(err.contains("at byte 0"), "{}", err);
}

#[test]
fn parse_errors_carry_offsets() {
    let (code, _, err) = run(&["normal-form", "--expr", "eta+ + foo"]);
    assert_eq!(code, 2);
    assert!(err.contains("at byte 7") && err.contains("undefined atom `foo`"), "{}", err);
    let (code, _, err) = run(&["normal-form", "--expr", "E+ * (K"]);
    assert_eq!(code, 2);
    assert!(err.contains("at byte 7") && err.contains("`)`"), "{}", err);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["normal-form"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["normal-form", "--p", "4", "--expr", "eta+"]).0, 2);
    assert_eq!(run(&["rep", "--a", "1"]).0, 2);
    assert_eq!(run(&["rep", "--l", "2"]).0, 2);
    assert_eq!(run(&["act", "--expr", "E+"]).0, 2);
}

#[test]
fn schema_violation_has_pointer() {
    let file = temp_file(r#"{"p":4,"terms":[]}"#);
    let arg = format!("@{}", file.path().display());
    let (code, _, err) = run(&["normal-form", "--expr", &arg]);
    assert_eq!(code, 2);
    assert!(err.contains("at /p") && err.contains("odd"), "{}", err);
    let file = temp_file(r#"{"p":3,"terms":[{"np":1,"nm":0,"kd":"x","coeff":{}}]}"#);
    let arg = format!("@{}", file.path().display());
    let (_, _, err) = run(&["normal-form", "--expr", &arg]);
    assert!(err.contains("/terms/0/kd"), "{}", err);
}

#[test]
fn fun_element_round_trips_through_json() {
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        let mut rng = ChaCha8Rng::seed_from_u64(p as u64);
        let mut e = funalg::random_finite(&mut rng, f, 100);
        e = e.add(&funalg::exp_token(f, f.frac(1, 2), f.q_pow(1)).mul(&funalg::z_plus(f)));
        let v = json::fun_to(&e);
        let back = json::fun_from(&serde_json::from_str(&v.to_string()).unwrap()).unwrap();
        assert_eq!(back, e);
    }
}

#[test]
fn generic_scalar_round_trips() {
    let f = Field::Generic;
    let x = (&f.q_half(5) - &f.frac(2, 3)).inv().unwrap();
    let x = &x * &(&f.i() + &f.q_half(1));
    assert_eq!(json::scalar_standalone(&json::scalar_to(&x)).unwrap(), x);
}

#[test]
fn json_output_feeds_back_in() {
    let (_, v) = run_json(&["antipode", "--p", "5", "--expr", "eta+ delta^2 + 1/2 eta- z+"]);
    let file = temp_file(&v.to_string());
    let arg = format!("@{}", file.path().display());
    let (_, again) = run_json(&["normal-form", "--p", "5", "--expr", &arg]);
    assert_eq!(v, again);
    let (_, out, _) = run(&["antipode", "--p", "5", "--expr", "eta+ delta^2 + 1/2 eta- z+", "--format", "text"]);
    let f = Field::Root(5);
    assert_eq!(load(out.trim(), f).unwrap(), Any::Fun(json::fun_from(&v).unwrap()));
}

#[test]
fn text_file_input() {
    let file = temp_file("E+ K + Ecal-\n");
    let arg = format!("@{}", file.path().display());
    let (code, v) = run_json(&["counit", "--expr", &arg]);
    assert_eq!(code, 0);
    let f = Field::Root(3);
    assert_eq!(json::scalar_standalone(&v).unwrap(), f.zero());
}

#[test]
fn counit_and_pairing_values() {
    let f = Field::Root(3);
    let (_, v) = run_json(&["counit", "--expr", "2 + eta+ + delta"]);
    assert_eq!(json::scalar_standalone(&v).unwrap(), f.int(3));
    let (_, v) = run_json(&["pair", "--expr", "K", "--expr", "delta"]);
    let want = qroot_core::duality::pair(
        &qroot_core::envalg::k_pow(f, 1),
        &funalg::delta_pow(f, 1),
    )
    .unwrap();
    assert_eq!(json::scalar_standalone(&v).unwrap(), want);
}

#[test]
fn action_matches_library() {
    let f = Field::Root(5);
    let (_, v) = run_json(&["act", "--p", "5", "--side", "left", "--expr", "E-", "--expr", "eta+^2 delta"]);
    let want = qroot_core::duality::regular_action(
        &qroot_core::envalg::e_minus(f),
        &funalg::eta_plus(f).pow(2).mul(&funalg::delta_pow(f, 1)),
        qroot_core::duality::Side::Left,
    );
    assert_eq!(json::fun_from(&v).unwrap(), want);
}

#[test]
fn cyclic_rep_dump() {
    let (code, v) = run_json(&["rep", "--lambda-plus", "2", "--a", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["K"].as_array().unwrap().len(), 3);
    let f = Field::Root(3);
    let r = qroot_core::reps::cyclic_rep(f, f.int(2), f.int(1)).unwrap();
    assert_eq!(json::scalar_standalone(&v["lambda_minus"]).unwrap(), r.lambda_minus);
    let (code, v) = run_json(&["rep", "--p", "5", "--l", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["E+"].as_array().unwrap().len(), 5);
}

#[test]
fn tmatrix_reports_form_agreement() {
    let (code, v) = run_json(&["tmatrix"]);
    assert_eq!(code, 0);
    assert_eq!(v["forms_agree"], Value::Bool(false));
    assert!(!v["sum"]["terms"].as_array().unwrap().is_empty());
}

#[test]
fn dmatrix_entry_and_table() {
    let (code, v) = run_json(&["dmatrix", "--lambda-plus", "2", "--a", "1", "--m", "0", "--n", "0"]);
    assert_eq!(code, 0);
    let f = Field::Root(3);
    let r = qroot_core::reps::cyclic_rep(f, f.int(2), f.int(1)).unwrap();
    assert_eq!(json::fun_from(&v).unwrap(), qroot_core::reps::d00_closed_form(&r));
    let (_, v) = run_json(&["dmatrix", "--lambda-plus", "2", "--a", "1"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(run(&["dmatrix", "--lambda-plus", "2", "--a", "1", "--m", "3", "--n", "0"]).0, 2);
}

#[test]
fn integrals() {
    let f = Field::Root(3);
    let (_, v) = run_json(&["integral", "--side", "t", "--expr", "delta^3"]);
    assert_eq!(json::scalar_standalone(&v).unwrap(), f.one());
    let (_, v) = run_json(&["integral", "--side", "c", "--expr", "z+^2 z- + 3"]);
    let want = qroot_core::integral::i_c(&funalg::z_plus(f).pow(2).mul(&funalg::z_minus(f)).add(&qroot_core::Elem::scalar(f, f.int(3)))).unwrap();
    assert_eq!(want.tokens.len(), 2);
    assert_eq!(json::dist_from(&v, f).unwrap(), want);
    let (code, _, err) = run(&["integral", "--side", "c", "--expr", "z+ exp(1, 0)"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonzero frequency"), "{}", err);
}

#[test]
fn signatures() {
    let (_, v) = run_json(&["signature", "--p", "5"]);
    assert_eq!((v["pos"].as_u64(), v["neg"].as_u64()), (Some(13), Some(12)));
    let (_, v) = run_json(&["signature", "--p", "5", "--side", "torus"]);
    assert_eq!((v["pos"].as_u64(), v["neg"].as_u64()), (Some(3), Some(2)));
}

#[test]
fn verify_hopf_passes_at_p3() {
    let (code, v) = run_json(&["verify", "hopf", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().len() >= 12);
    assert_eq!(v["suite"], "hopf");
    assert_eq!(v["p"], 3);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn verify_invariance_passes_at_p3() {
    let (code, v) = run_json(&["verify", "invariance", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["failed_count"], 0);
    let checks = v["checks"].as_array().unwrap();
    let ip: u64 = checks
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("I_p-right"))
        .map(|c| c["checked"].as_u64().unwrap())
        .sum();
    // 27 monomials against the 12 generators and products
    assert_eq!(ip, 27 * 12);
}

#[test]
fn failing_suite_exits_one() {
    let (code, v) = run_json(&["verify", "regular", "--p", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], Value::Bool(false));
    assert!(!v["failed"].as_array().unwrap().is_empty());
}

#[test]
fn verify_all_is_reproducible() {
    let a = run(&["verify", "all", "--p", "3", "--seed", "42"]);
    let b = run(&["verify", "all", "--p", "3", "--seed", "42"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["seed"], 42);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn generic_mode() {
    let (code, out, _) = run(&["normal-form", "--mode", "generic", "--expr", "eta- eta+", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(s^4) eta+ eta-");
    assert_eq!(run(&["verify", "hopf", "--mode", "generic"]).0, 2);
    let (code, v) = run_json(&["pair", "--mode", "generic", "--expr", "E+", "--expr", "eta+"]);
    assert_eq!(code, 0);
    assert_eq!(v["mode"], "generic");
}
