use std::fs;
use std::process::{Command, Output};

fn mzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzeta"))
        .args(args)
        .env_remove("MZETA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

#[test]
fn word_stats_worked_example() {
    let o = mzeta(&[
        "stats",
        "--eta",
        "3,2,2,3",
        "--word",
        "4232314141",
        "--verbose",
    ]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "denh"), Some("27"));
    assert_eq!(field(&s, "exc_sum"), Some("18"));
    assert_eq!(field(&s, "imv(E)"), Some("5"));
    assert_eq!(field(&s, "inv(N)"), Some("4"));
    assert_eq!(field(&s, "Exc"), Some("{1, 2, 3, 5, 7}"));
}

#[test]
fn permutation_stats_worked_example() {
    let o = mzeta(&[
        "stats",
        "--eta",
        "3,2,2,3",
        "--perm",
        "6,8,10,2,4,3,5,1,7,9",
    ]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "den"), Some("27"));
    assert_eq!(field(&s, "iexc"), Some("5"));
    assert_eq!(field(&s, "|N+|"), Some("17"));
    assert_eq!(field(&s, "|N-|"), Some("3"));
    assert_eq!(field(&s, "I_sum"), Some("18"));

    let o = mzeta(&[
        "stats",
        "--eta",
        "3,2,2,3",
        "--perm",
        "6,8,10,4,2,3,5,1,7,9",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not (3,2,2,3)-admissible"));
}

#[test]
fn trivial_word_has_zero_statistics() {
    let s = stdout(&mzeta(&["stats", "--eta", "2,1", "--word", "112"]));
    for key in ["des", "maj", "exc", "inv", "denh"] {
        assert_eq!(field(&s, key), Some("0"), "{key}");
    }
}

#[test]
fn signed_stats() {
    let o = mzeta(&[
        "stats", "--signed", "-2,-1,3", "--type", "D", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dneg"], 1);
    assert_eq!(v["nsp"], 1);
    assert_eq!(v["dden"], 2);
    // odd number of negatives is not in D_n
    assert_eq!(
        code(&mzeta(&["stats", "--signed", "-1,2", "--type", "D"])),
        2
    );
    let s = stdout(&mzeta(&["stats", "--signed", "-1,2", "--type", "B"]));
    assert_eq!(field(&s, "fdes"), Some("1"));
}

#[test]
fn distributions() {
    let s = stdout(&mzeta(&[
        "dist", "--domain", "words", "--eta", "2,1", "--pair", "denh,exc",
    ]));
    assert_eq!(s.trim(), "1 + x*y + x^2*y");
    let s = stdout(&mzeta(&[
        "dist", "--domain", "words", "--eta", "3", "--pair", "maj,des",
    ]));
    assert_eq!(s.trim(), "1");
    let o = mzeta(&[
        "dist",
        "--domain",
        "D",
        "--n",
        "2",
        "--pair",
        "dden,dexc",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vars"], serde_json::json!(["x", "y"]));
    let total: i64 = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t[2].as_str().unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 4);
    // the emitted JSON is accepted back
    mzeta_core::BiPoly::from_json(stdout(&o).trim()).unwrap();
}

#[test]
fn dist_input_errors_exit_two() {
    assert_eq!(
        code(&mzeta(&[
            "dist", "--domain", "words", "--eta", "2,0", "--pair", "maj,des"
        ])),
        2
    );
    assert_eq!(
        code(&mzeta(&[
            "dist", "--domain", "words", "--eta", "2,1", "--pair", "foo"
        ])),
        2
    );
    assert_eq!(
        code(&mzeta(&[
            "dist",
            "--domain",
            "B",
            "--n",
            "3",
            "--pair",
            "dden,dexc"
        ])),
        2
    );
    assert_eq!(
        code(&mzeta(&[
            "dist", "--domain", "words", "--n", "3", "--pair", "maj,des"
        ])),
        2
    );
    assert_eq!(code(&mzeta(&["nonsense"])), 2);
}

#[test]
fn budget_exceeded_exits_three() {
    let o = mzeta(&[
        "--budget",
        "100",
        "dist",
        "--domain",
        "B",
        "--n",
        "4",
        "--pair",
        "fmaj,fdes",
    ]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_mzeta"))
        .args([
            "dist",
            "--domain",
            "words",
            "--eta",
            "1,1,1,1,1",
            "--pair",
            "maj,des",
        ])
        .env("MZETA_BUDGET", "119")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    // the flag wins over the environment
    let o = Command::new(env!("CARGO_BIN_EXE_mzeta"))
        .args([
            "dist",
            "--domain",
            "words",
            "--eta",
            "1,1,1,1,1",
            "--pair",
            "maj,des",
        ])
        .args(["--budget", "120"])
        .env("MZETA_BUDGET", "119")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_sweeps() {
    let o = mzeta(&["verify", "--check", "lemma43", "--eta", "3,2,2,3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pass (25200 cases)"));

    let o = mzeta(&["verify", "--check", "reciprocity", "--eta", "2,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("fails (expected: non-rectangle)"));

    let o = mzeta(&[
        "verify",
        "--check",
        "euler-mahonian-den",
        "--all-eta-up-to",
        "6",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("(63 subjects,"));

    let o = mzeta(&[
        "verify",
        "--check",
        "d-equidistribution",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);

    assert_eq!(
        code(&mzeta(&["verify", "--check", "lemma43", "--n", "3"])),
        2
    );
    assert_eq!(
        code(&mzeta(&["verify", "--check", "nope", "--eta", "2"])),
        2
    );
}

#[test]
fn zeta_values_and_series() {
    assert_eq!(
        stdout(&mzeta(&["zeta", "--eta", "3", "--q", "2", "--t", "0"])).trim(),
        "1"
    );
    assert_eq!(
        stdout(&mzeta(&["zeta", "--eta", "2,1", "--q", "2", "--t", "1/8"])).trim(),
        "16/3"
    );
    assert_eq!(
        code(&mzeta(&["zeta", "--eta", "2,1", "--q", "2", "--t", "1/2"])),
        2
    );

    let s = stdout(&mzeta(&["zeta", "--eta", "1,1", "--series-terms", "3"]));
    assert_eq!(s, "y^0: 1\ny^1: 1 + 2*x\ny^2: 1 + 2*x + 2*x^2\n");
    let s = stdout(&mzeta(&[
        "zeta",
        "--eta",
        "1,1",
        "--series-terms",
        "2",
        "--hadamard",
    ]));
    assert_eq!(s, "y^0: 1\ny^1: 1 + 2*x + x^2\n");
}

#[test]
fn conjecture_reports() {
    let o = mzeta(&["conjecture", "--rect", "2,1"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "candidate"), Some("1 + x*y"));
    assert_eq!(field(&s, "divisible"), Some("yes"));
    assert_eq!(field(&s, "verdict"), Some("CONSISTENT"));

    let s = stdout(&mzeta(&["conjecture", "--eta", "2,1"]));
    assert_eq!(field(&s, "divisible"), Some("no"));
    assert_eq!(field(&s, "verdict"), Some("CONSISTENT"));

    let s = stdout(&mzeta(&["conjecture", "--rect", "4,1"]));
    assert_eq!(field(&s, "candidate"), Some("1 + x^2*y"));
    assert_eq!(field(&s, "divisible"), Some("yes"));
    assert_eq!(field(&s, "verdict"), Some("CONSISTENT"));

    assert_eq!(code(&mzeta(&["conjecture", "--rect", "2"])), 2);
}

#[test]
fn out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poly.json");
    let p = path.to_str().unwrap();
    let args = [
        "dist",
        "--domain",
        "admissible",
        "--eta",
        "2,2,1",
        "--pair",
        "den,iexc",
    ];
    let o = mzeta(&[&args[..], &["--format", "json", "--out", p]].concat());
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let first = fs::read_to_string(&path).unwrap();
    mzeta(&[&args[..], &["--format", "json", "--out", p]].concat());
    assert_eq!(fs::read_to_string(&path).unwrap(), first);

    // the written polynomial feeds the scanner
    let o = mzeta(&["scan", "--poly", p]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        field(&stdout(&o), "unitary_factors"),
        Some("none found within bounds")
    );
}

#[test]
fn scan_finds_factor_and_rejects_bad_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    fs::write(&path, r#"{"vars":["x","y"],"terms":[[0,0,"1"],[1,1,"1"]]}"#).unwrap();
    let s = stdout(&mzeta(&["scan", "--poly", path.to_str().unwrap()]));
    assert_eq!(
        field(&s, "unitary_factors"),
        Some("Phi_2(x^1*y^1) = 1 + x*y")
    );

    fs::write(&path, r#"{"vars":["x","y"],"terms":[[1,1,"1"],[0,0,"1"]]}"#).unwrap();
    assert_eq!(code(&mzeta(&["scan", "--poly", path.to_str().unwrap()])), 2);
}
