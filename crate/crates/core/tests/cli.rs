use std::process::{Command, Output};

use serde_json::Value;

fn sigma_prime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-prime")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn conv_brute_example() {
    let out = sigma_prime(&["conv", "--r", "1", "--s", "1", "--n", "3", "--set", "Bprime", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "conv");
    assert_eq!(v["result"], "6");
    assert_eq!(v["inputs"]["n"], "3");
}

#[test]
fn powersum_example() {
    let out = sigma_prime(&["powersum", "--k", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], "5");
    for method in ["direct", "moebius", "closed"] {
        let out = sigma_prime(&["powersum", "--k", "7", "--n", "360", "--method", method]);
        assert_eq!(json(&out)["result"], json(&sigma_prime(&["powersum", "--k", "7", "--n", "360"]))["result"]);
    }
}

#[test]
fn printed_weight_6_form_fails_with_ratio_8() {
    let out = sigma_prime(&["verify", "--theorem", "t13:printed", "--range", "2..10"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "failed");
    let checks = v["result"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    for c in checks {
        assert_eq!(c["pass"], false);
        assert_eq!(c["ratio"]["num"], "8");
        assert_eq!(c["ratio"]["den"], "1");
    }
    assert!(v["erratum_notes"][0].as_str().unwrap().contains('8'));

    let out = sigma_prime(&["verify", "--theorem", "t13", "--range", "2..10", "--jobs", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "verified");
}

#[test]
fn closed_and_brute_conv_agree() {
    for (r, s) in [(1, 1), (1, 3), (3, 1), (1, 5), (3, 3), (1, 7), (3, 5), (1, 11), (3, 9), (5, 7)] {
        for n in [2, 7, 12, 30] {
            let (r, s, n) = (r.to_string(), s.to_string(), n.to_string());
            let brute = sigma_prime(&["conv", "--r", &r, "--s", &s, "--n", &n, "--method", "brute"]);
            let closed = sigma_prime(&["conv", "--r", &r, "--s", &s, "--n", &n, "--method", "closed"]);
            assert_eq!(closed.status.code(), Some(0));
            assert_eq!(json(&brute)["result"], json(&closed)["result"], "(r,s)=({r},{s}) n={n}");
        }
    }
    let out = sigma_prime(&["conv", "--r", "2", "--s", "2", "--n", "5", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--theorem", "t57", "--range", "2..25", "--jobs", "4"];
    let first = sigma_prime(&args);
    for _ in 0..3 {
        assert_eq!(sigma_prime(&args).stdout, first.stdout);
    }
    let single = sigma_prime(&["verify", "--theorem", "t57", "--range", "2..25"]);
    assert_eq!(single.stdout, first.stdout);
}

#[test]
fn check_main_reports_both_sides() {
    let out = sigma_prime(&["check-main", "--poly", "1 x^1 y^5 - 10 x^3 y^3", "--n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["result"]["lhs"], v["result"]["rhs"]);
}

#[test]
fn fit_recovers_weight_6() {
    let out = sigma_prime(&["fit", "--r", "1", "--s", "3", "--train", "2,3,4,5,7,9", "--test", "11,13,16,25,30"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "consistent");
    assert_eq!(v["result"]["coefficients"]["A"]["num"], "7");
    assert_eq!(v["result"]["coefficients"]["A"]["den"], "80");
    assert_eq!(v["residuals"].as_array().unwrap().len(), 5);
}

#[test]
fn probe_is_evidence_only() {
    let out = sigma_prime(&["probe10", "--pair", "5,5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["verdict"].as_str().unwrap().starts_with("numerical evidence"));
    assert_eq!(v["result"]["degenerate"], true);
}

#[test]
fn count_budget_and_values() {
    let out = sigma_prime(&["count", "--which", "Mp", "--r", "3", "--s", "3", "--n", "3"]);
    assert_eq!(json(&out)["result"], "18");
    let out = sigma_prime(&["count", "--which", "M", "--r", "1", "--s", "1", "--n", "3", "--raw"]);
    assert_eq!(json(&out)["result"], "6");
    let out = sigma_prime(&["count", "--which", "M", "--r", "3", "--s", "3", "--n", "40", "--raw", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors() {
    for args in [
        &["conv", "--r", "1", "--s", "1"][..],
        &["psi", "--s", "1", "--n", "6", "--frobnicate"],
        &["check-main", "--poly", "3 q^2", "--n", "5"],
        &["verify", "--theorem", "t11", "--range", "1..5"],
        &["verify", "--theorem", "t11", "--range", "5"],
        &["verify", "--theorem", "t99", "--range", "2..5"],
        &["powersum", "--k", "13", "--n", "5", "--method", "closed"],
        &["psi", "--s", "0", "--n", "6"],
        &[],
    ] {
        let out = sigma_prime(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
    assert_eq!(sigma_prime(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_switch() {
    let out = sigma_prime(&["--csv", "fit", "--r", "1", "--s", "1", "--train", "2,3,4,5,7,9", "--test", "11,13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,residual,zero\n11,0,true\n13,0,true\n");
}

#[test]
fn quick_selftest_passes() {
    let out = sigma_prime(&["selftest", "--quick", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["result"].as_array().unwrap().len(), 11);
}
