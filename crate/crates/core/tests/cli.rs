use std::process::Command;

use fibsum::catalog::{enumerate_catalog, mutants, IdentityDescriptor};
use fibsum::cli::report::{from_json, from_tsv, to_json};
use fibsum::cli::run;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fibsum")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn in_process(args: &[&str], catalog: &[IdentityDescriptor]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fibsum").chain(args.iter().copied());
    let code = run(argv, catalog, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_single_entry_json() {
    let (code, out, _) = bin(&["verify", "--id", "COR1-F", "--n", "0..5", "--t", "0..0", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reports"][0]["tuples_tested"], 6);
    assert_eq!(v["reports"][0]["failures"], serde_json::json!([]));
    assert_eq!(v["total_failures"], 0);
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["verify", "--id", "NOPE"][..],
        &["verify", "--n", "3..1"],
        &["verify", "--n", "-2..1"],
        &["verify", "--t", "a..b"],
        &["verify", "--all", "--id", "COR1-F"],
        &["poly", "--id", "dat9", "--n-max", "3"],
        &["poly", "--id", "dat1", "--n-max", "257"],
        &["eval", "--seq", "fib", "--index", "2147483649"],
        &["frobnicate"],
    ] {
        let (code, out, err) = bin(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn eval_poly_list() {
    assert_eq!(bin(&["eval", "--seq", "fib", "--index", "-4"]).1, "-3\n");
    assert_eq!(bin(&["eval", "--seq", "lucas", "--index", "0"]).1, "2\n");
    assert_eq!(bin(&["eval", "--seq", "fib", "--index", "100"]).1, "354224848179261915075\n");

    let (code, out, _) = bin(&["poly", "--id", "dat1", "--n-max", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().all(|l| l.ends_with("pass")));

    let (code, out, _) = bin(&["list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), enumerate_catalog().len());
    assert!(out.lines().any(|l| l.starts_with("THM2-F") && l.contains("s even")));
    assert!(out.lines().any(|l| l.starts_with("REL1-F") && l.contains("r nonzero")));
}

#[test]
fn bench_prints_ladder() {
    let (code, out, _) = in_process(&["bench"], enumerate_catalog());
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.contains("100000"));
}

#[test]
fn corrupted_catalog_exits_1() {
    let mut catalog = enumerate_catalog().to_vec();
    let m = mutants().into_iter().find(|m| m.original == "COR1-F").unwrap();
    let pos = catalog.iter().position(|d| d.id == "COR1-F").unwrap();
    catalog[pos] = m.descriptor;
    let (code, out, _) = in_process(&["verify", "--id", "COR1-F~swap-rhs", "--n", "0..4", "--format", "human"], &catalog);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
    let (code, _, _) = in_process(&["verify", "--id", "COR2-F", "--n", "0..4"], &catalog);
    assert_eq!(code, 0);
}

#[test]
fn json_round_trips_and_tsv_matches() {
    let mut catalog = enumerate_catalog()[..6].to_vec();
    catalog.extend(mutants().into_iter().map(|m| m.descriptor).filter(|d| d.id.starts_with("REL") || d.id.starts_with("THM1")));
    for extra in [&[][..], &["--seed", "3", "--samples", "40"]] {
        let args = |fmt| {
            let mut a = vec!["verify", "--n", "0..3", "--r", "-2..2", "--s", "-2..2", "--t", "-1..1", "--format", fmt, "--jobs", "2"];
            a.extend_from_slice(extra);
            a
        };
        let (code, json, _) = in_process(&args("json"), &catalog);
        assert_eq!(code, 1);
        let parsed = from_json(&json).unwrap();
        assert!(parsed.total_failures > 0);
        assert_eq!(to_json(&parsed), json);
        let (_, tsv, _) = in_process(&args("tsv"), &catalog);
        assert_eq!(from_tsv(&tsv).unwrap(), parsed);
    }
}

#[test]
fn random_cli_is_reproducible() {
    let args = ["verify", "--id", "THM3-L", "--seed", "1", "--samples", "100", "--format", "json"];
    let a = bin(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a, bin(&args));
    assert!(a.1.contains("\"seed\": 1"));
}
