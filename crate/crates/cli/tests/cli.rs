use std::process::{Command, Output};

fn recalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recalg"))
        .args(args)
        .env_remove("RECALG_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = recalg(args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn sigma_of_three_one_two() {
    let s = stdout(&["sigma", "--composition", "3,1,2"]);
    assert!(
        s.starts_with("sigma(3,1,2) = (1 - q^-2)·(1 - q^-4)·(1 - q^-10)\n"),
        "{s}"
    );
}

#[test]
fn sigma_tuples_at_k_four() {
    let s = stdout(&["sigma", "--composition", "3,1,2", "--k", "4"]);
    assert!(s.contains("V^4(3,1,2): 27 tuple(s)"), "{s}");
    assert!(s.contains("(4,3,3,4,4,3,4)"));
}

#[test]
fn braided_det_of_size_three_has_six_terms() {
    let s = stdout(&["det", "--n", "3", "--braided"]);
    assert_eq!(s.trim().matches("u[3,").count(), 6, "{s}");
}

#[test]
fn small_gl1_is_the_cube_root_relation() {
    let s = stdout(&["present", "--family", "small-gln", "--n", "1", "--ell", "3"]);
    assert!(s.lines().any(|l| l.ends_with("u[1,1]^3 = 1")), "{s}");
}

#[test]
fn presentation_json_round_trips() {
    let s = stdout(&["present", "--family", "gln", "--n", "2", "--format", "json"]);
    let doc = recalg::presentations::PresentationDoc::from_json_str(&s).unwrap();
    assert_eq!(doc.to_json_string(), s);
}

#[test]
fn twist_json_round_trips() {
    let s = stdout(&["twist", "--word", "x[1,2]*x[2,1]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    let out: recalg::frt::ElementJson = serde_json::from_value(v["output"].clone()).unwrap();
    let e = recalg::braided::BraidedElement::from_json(&out).unwrap();
    assert_eq!(e.n(), 2);
    assert!(!e.is_zero());
    assert_eq!(serde_json::to_value(e.to_json()).unwrap(), v["output"]);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("recalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("det.txt");
    let s = stdout(&["det", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(s.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "x[1,1]·x[2,2] - q^-1·x[1,2]·x[2,1]\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn counts_report_disagreement_at_k_three() {
    let s = stdout(&["count", "--n", "3", "--ell", "3", "--k", "3"]);
    assert!(s.contains("enumerated 9"), "{s}");
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["sigma", "--composition", "3,0"][..],
        &["twist", "--word", "x[1,"],
        &["present", "--family", "small-gln", "--n", "2", "--ell", "4"],
        &["verify", "--suite", "nope"],
        &["count", "--n", "2", "--ell", "3", "--format", "latex"],
    ] {
        let o = recalg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn verify_exit_codes_follow_the_report() {
    let ok = recalg(&["verify", "--suite", "ring", "--n", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let red = recalg(&[
        "verify", "--suite", "counts", "--n", "3", "--ell", "5", "--k", "3",
    ]);
    assert_eq!(red.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&red.stdout).contains("FAIL counts/closed-form-ell5-k3"));
}

#[test]
fn verify_json_is_reproducible() {
    let args = [
        "verify",
        "--suite",
        "theorem",
        "--n",
        "2",
        "--ell",
        "3",
        "--format",
        "json",
        "--workers",
        "2",
    ];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], true);
}
