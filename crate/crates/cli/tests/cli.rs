use std::process::{Command, Output};

use serde_json::Value;

fn bsgrowth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsgrowth")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = bsgrowth(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    bsgrowth(args).status.code().unwrap()
}

#[test]
fn count_csv_for_klein_bottle_group() {
    let out = bsgrowth(&["count", "--p", "1", "--q", "-1", "--kind", "normal", "--max-n", "6", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,count\n1,1\n2,3\n3,1\n4,3\n5,1\n6,4\n");
}

#[test]
fn csv_and_json_agree() {
    for kind in ["normal", "all"] {
        let base = ["count", "--p", "-2", "--q", "5", "--kind", kind, "--max-n", "50"];
        let v = json(&base);
        assert_eq!(v["schema"], 1);
        assert_eq!((v["p"].as_i64(), v["q"].as_i64()), (Some(-2), Some(5)));
        assert_eq!(v["kind"], kind);
        let counts: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();

        let mut args = base.to_vec();
        args.extend(["--format", "csv"]);
        let csv = String::from_utf8(bsgrowth(&args).stdout).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,count"));
        let from_csv: Vec<u64> = lines
            .enumerate()
            .map(|(i, l)| {
                let (n, c) = l.split_once(',').unwrap();
                assert_eq!(n.parse::<usize>().unwrap(), i + 1);
                c.parse().unwrap()
            })
            .collect();
        assert_eq!(counts, from_csv);
    }
}

#[test]
fn invalid_parameters_exit_2() {
    assert_eq!(code(&["count", "--p", "2", "--q", "4", "--kind", "normal", "--max-n", "5"]), 2);
    assert_eq!(code(&["count", "--p", "0", "--q", "3", "--kind", "all", "--max-n", "5"]), 2);
    let out = bsgrowth(&["count", "--p", "6", "--q", "-9", "--kind", "all", "--max-n", "5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime"));
    assert_eq!(code(&["witness-nonnilpotent", "--p", "1", "--q", "4", "--prime", "3"]), 2);
}

#[test]
fn isomorphic_parameters_exit_3() {
    assert_eq!(code(&["distinguish", "--p1", "2", "--q1", "3", "--p2", "-3", "--q2", "-2"]), 3);
}

#[test]
fn oracle_cap_exit_4() {
    assert_eq!(code(&["oracle", "--p", "1", "--q", "2", "--n", "9", "--kind", "normal"]), 4);
}

#[test]
fn overflow_exit_5() {
    // (i64::MAX - 1) - (i64::MIN + 1) overflows q - p.
    let args = ["count", "--p", "-9223372036854775807", "--q", "9223372036854775806", "--kind", "normal", "--max-n", "2"];
    assert_eq!(code(&args), 5);
}

#[test]
fn oracle_matches_formula() {
    let v = json(&["oracle", "--p", "1", "--q", "-1", "--n", "6", "--kind", "normal"]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["source"], "oracle");
    let v = json(&["oracle", "--p", "1", "--q", "2", "--n", "3", "--kind", "all"]);
    assert_eq!(v["count"], 4);
}

#[test]
fn verify_reports_agreement() {
    let v = json(&["verify", "--p", "2", "--q", "3", "--max-n", "12"]);
    assert_eq!(v["agree"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[7]["oracle_normal"], rows[7]["normal"]);
    assert!(rows[8]["oracle_normal"].is_null());
}

#[test]
fn distinguish_certificate() {
    let v = json(&["distinguish", "--p1", "1", "--q1", "2", "--p2", "1", "--q2", "4"]);
    let cert = &v["certificate"];
    assert_eq!(cert["n"], 3);
    assert_eq!((cert["left_count"].as_u64(), cert["right_count"].as_u64()), (Some(1), Some(4)));
    assert_eq!(v["schema"], 1);

    let v = json(&["distinguish", "--p1", "1", "--q1", "4", "--p2", "2", "--q2", "5"]);
    assert_eq!(v["certificate"]["n"], 10);
    assert_eq!(v["certificate"]["branch"]["type"], "odd_prime_power");
    assert_eq!(v["certificate"]["branch"]["prime"], 5);
}

#[test]
fn quotients_with_tables() {
    let v = json(&["quotients", "--p", "1", "--q", "2", "--n", "6", "--tables"]);
    assert_eq!(v["count"], 2);
    let q = &v["quotients"][1];
    assert_eq!((q["d"].as_u64(), q["c"].as_u64(), q["s"].as_u64(), q["r"].as_u64()), (Some(3), Some(2), Some(3), Some(2)));
    assert_eq!(q["table"]["order"], 6);
    assert_eq!(q["table"]["abelian"], false);
    assert_eq!(q["table"]["rows"].as_array().unwrap().len(), 6);
    let v = json(&["quotients", "--p", "1", "--q", "4", "--n", "3"]);
    assert_eq!(v["count"], 4);
    assert!(v["quotients"][0].get("table").is_none());
}

#[test]
fn mult_and_euler() {
    let v = json(&["mult", "--p", "1", "--q", "2", "--kind", "normal", "--max-n", "20"]);
    assert_eq!(v["multiplicative"], false);
    assert_eq!(v["report"]["counterexample"]["a_mn"], 2);
    let v = json(&["mult", "--p", "2", "--q", "3", "--kind", "all", "--max-n", "100"]);
    assert_eq!(v["multiplicative"], true);

    let v = json(&["euler", "--p", "1", "--q", "2", "--max-n", "1000", "--prime", "3", "--terms", "3"]);
    assert_eq!(v["euler_product"], true);
    assert_eq!(v["counts"], serde_json::json!([1, 4, 13, 40]));
}

#[test]
fn nonnilpotent_witness_summary() {
    let v = json(&["witness-nonnilpotent", "--p", "1", "--q", "2", "--prime", "7"]);
    assert_eq!(v["quotient"]["n"], 21);
    assert_eq!(v["table"]["center_order"], 1);
    assert_eq!(v["table"]["center_meets_a_trivially"], true);
    assert_eq!(v["table"]["dedekind"], false);
}
