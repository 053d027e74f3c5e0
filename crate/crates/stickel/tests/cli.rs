use std::path::Path;
use std::process::{Command, Output};

use num_rational::Ratio;
use stickel::cache::{AP_MAGIC, PERIOD_MAGIC};
use stickel::fixtures::parse_curve_file;
use stickel_core::curve::fixtures;
use stickel_core::maninsym;

fn stickel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stickel"))
        .args(args)
        .env_remove("STICKEL_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn without_timestamp(s: &str) -> String {
    s.lines().filter(|l| !l.contains("generated")).collect::<Vec<_>>().join("\n")
}

#[test]
fn theta_prints_the_group_ring_dump() {
    let o = stickel(&["theta", "--curve", "11a1", "--modulus", "5"]);
    assert!(o.status.success());
    let e11 = fixtures::e11();
    let map = maninsym::cut_eigenspace(&maninsym::build_space(11), &e11).unwrap();
    let (v1, v2) = (map.symbol_value(Ratio::new(1, 5)), map.symbol_value(Ratio::new(2, 5)));
    assert_eq!(stdout(&o), format!("5; 1:{v1}, 2:{v2}\n"));
}

#[test]
fn ord_reports_the_split_prime_bound() {
    let o = stickel(&["ord", "--curve", "11a1", "--modulus", "33"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "ord>=1: PASS (|S_M|=1)"), "{}", stdout(&o));
}

#[test]
fn full_battery_passes_and_is_deterministic() {
    let a = stickel(&["verify", "--all", "--moduli", "3..30"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = stickel(&["verify", "--all", "--moduli", "3..30"]);
    assert_eq!(without_timestamp(&stdout(&a)), without_timestamp(&stdout(&b)));
    assert!(stdout(&a).contains("summary: 0 hard failure(s)"));

    let j1 = stickel(&["verify", "--all", "--moduli", "3..12", "--format", "json"]);
    let j2 = stickel(&["verify", "--all", "--moduli", "3..12", "--format", "json"]);
    assert_eq!(without_timestamp(&stdout(&j1)), without_timestamp(&stdout(&j2)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&j1)).unwrap();
    assert_eq!(v["hard_failures"], 0);
    assert_eq!(v["curves"].as_array().unwrap().len(), 3);
}

#[test]
fn cold_and_warm_caches_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["verify", "--all", "--moduli", "5..13", "--format", "json", "--cache", d];
    let cold = stickel(&args);
    let names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert!(names.iter().filter(|n| n.starts_with("period-")).count() >= 3, "{names:?}");
    assert!(names.iter().any(|n| n.starts_with("ap-")));
    for n in &names {
        let text = std::fs::read_to_string(dir.path().join(n)).unwrap();
        let magic = if n.starts_with("ap-") { AP_MAGIC } else { PERIOD_MAGIC };
        assert_eq!(text.lines().next(), Some(magic));
    }
    let warm = stickel(&args);
    assert_eq!(without_timestamp(&stdout(&cold)), without_timestamp(&stdout(&warm)));

    // A damaged entry is ignored and rewritten.
    let victim = names.iter().find(|n| n.starts_with("period-")).unwrap();
    std::fs::write(dir.path().join(victim), "stickel-period-cache v0\ngarbage\n").unwrap();
    let again = stickel(&args);
    assert_eq!(without_timestamp(&stdout(&cold)), without_timestamp(&stdout(&again)));
    let text = std::fs::read_to_string(dir.path().join(victim)).unwrap();
    assert!(text.starts_with(PERIOD_MAGIC));
}

#[test]
fn environment_overrides_cache_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_stickel"))
        .args(["theta", "--curve", "37a1", "--modulus", "7", "--cache", flag_dir.path().to_str().unwrap()])
        .env("STICKEL_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 0);
}

#[test]
fn fixture_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# battery\n11a1;0,-1,1,-10,-20;11;0\n\n37a1;0,0,1,-1,0;37;1\nx;0,1,1,-2,0;389;?\n").unwrap();
    let curves = parse_curve_file(&good).unwrap();
    assert_eq!(curves.len(), 3);
    assert_eq!(curves[0].coefficients(), fixtures::e11().coefficients());
    assert_eq!(curves[1].rank_hint(), Some(1));
    assert_eq!(curves[2].rank_hint(), None);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "11a1;0,-1,1,-10,-20;11;0\nbad;0,0,0,0,0;1;0\n").unwrap();
    let err = parse_curve_file(&bad).unwrap_err().to_string();
    assert!(err.contains("bad.txt"), "{err}");
    assert!(err.to_lowercase().contains("discriminant"), "{err}");

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "11a1;0,-1,1,-10;11;0\n").unwrap();
    let o = stickel(&["theta", "--curves", broken.to_str().unwrap(), "--modulus", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    assert!(parse_curve_file(Path::new("/nonexistent/curves.txt")).is_err());
    let o = stickel(&["theta", "--curves", good.to_str().unwrap(), "--curve", "x", "--modulus", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("5; "));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(stickel(&["theta", "--curve", "11a1", "--modulus", "2"]).status.code(), Some(2));
    assert_eq!(stickel(&["theta", "--modulus", "5"]).status.code(), Some(2));
    assert_eq!(stickel(&["theta", "--curve", "99z9", "--modulus", "5"]).status.code(), Some(2));
    assert_eq!(stickel(&["verify", "--all", "--modulus", "5", "--checks", "nope"]).status.code(), Some(2));
    assert_eq!(stickel(&["ord", "--curve", "11a1", "--modulus", "5", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn special_values_table() {
    let o = stickel(&["special", "--curve", "11a1", "--moduli", "5,7,9,13", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("label; M; char_id; A_chi; B_chi; rel"));
    let rows: Vec<&str> = lines.collect();
    // Primitive characters: 1 mod 5, 2 mod 7, 2 mod 9, 5 mod 13.
    assert_eq!(rows.len(), 10);
    for r in rows {
        let rel: f64 = r.rsplit("; ").next().unwrap().parse().unwrap();
        assert!(rel < 1e-6, "{r}");
    }
}

#[test]
fn lvalue_and_dump_space() {
    let o = stickel(&["lvalue", "--curve", "11a1"]);
    assert_eq!(stdout(&o), "L(11a1, 1) = 0.25384186\n");
    let o = stickel(&["lvalue", "--curve", "37a1", "--digits", "10"]);
    let v: f64 = stdout(&o).trim().rsplit(' ').next().unwrap().parse().unwrap();
    assert!(v.abs() < 1e-8);

    let o = stickel(&["dump-space", "--curve", "11a1"]);
    let out = stdout(&o);
    assert!(out.starts_with("# 11a1 level=11 generators=12"));
    assert_eq!(out.lines().count(), 13);
    assert!(out.lines().skip(1).all(|l| l.split(';').count() == 4));
}
