use std::process::{Command, Output};

use gpiq_core::PiMonomial;

fn gpiq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpiq"))
        .args(args)
        .env_remove("GPIQ_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn eval_g_prints_exact_and_float() {
    let out = gpiq(&["eval-g", "--j", "1", "--k", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/4 * pi^2 = 2.46740e0\n");
}

#[test]
fn prob_prints_table_row() {
    let out = gpiq(&["prob", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row, ["6", "64011585/2^36 * pi^3", "2.88821e-2", "1.00229"]);
}

#[test]
fn table_csv_round_trips() {
    let out = gpiq(&["table", "--nmax", "11"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["N", "exact", "float", "ratio"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 11);
    for row in &rows {
        let value: PiMonomial = row[1].parse().unwrap();
        assert_eq!(value.to_string(), row[1]);
    }
    assert_eq!(&rows[6][1], "31625532537/140737488355328 * pi^3");
    assert_eq!(&rows[10][2], "2.13636e-6");
    assert_eq!(&rows[9][3], "1.00098");
    assert_eq!(&rows[0][3], "");
}

#[test]
fn mc_seed_from_env_and_flag() {
    let run = |args: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_gpiq"));
        cmd.args(args).env_remove("GPIQ_SEED");
        if let Some(seed) = env {
            cmd.env("GPIQ_SEED", seed);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let base = ["mc", "--n", "3", "--trials", "5000"];
    let from_env = run(&base, Some("17"));
    let from_flag = run(&[&base[..], &["--seed", "17"]].concat(), None);
    let flag_wins = run(&[&base[..], &["--seed", "17"]].concat(), Some("99"));
    assert_eq!(from_env, from_flag);
    assert_eq!(from_flag, flag_wins);
    assert_ne!(from_env, run(&base, Some("99")));

    let mut reader = csv::Reader::from_reader(from_env.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec![
            "dim",
            "trials",
            "successes",
            "estimate",
            "std_error",
            "discards",
            "seed"
        ]
    );
    let row = reader.records().next().unwrap().unwrap();
    assert_eq!(&row[0], "3");
    assert_eq!(&row[6], "17");
}

#[test]
fn mc_is_independent_of_workers() {
    let one = gpiq(&[
        "mc",
        "--n",
        "4",
        "--trials",
        "3000",
        "--seed",
        "5",
        "--workers",
        "1",
    ]);
    let many = gpiq(&[
        "mc",
        "--n",
        "4",
        "--trials",
        "3000",
        "--seed",
        "5",
        "--workers",
        "8",
    ]);
    assert_eq!(stdout(&one), stdout(&many));
}

#[test]
fn identities_pass_and_strict_tolerance_is_numeric_failure() {
    let out = gpiq(&["check-identities", "--j", "2", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);

    let out = gpiq(&[
        "check-identities",
        "--j",
        "2",
        "--k",
        "2",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAIL\t3F2"));
}

#[test]
fn plot_csv_has_one_row_per_n() {
    let out = gpiq(&["plot", "--nmax", "30"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["N", "log10_exact", "log10_asymptotic"]
    );
    let rows: Vec<(f64, f64)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[1].parse().unwrap(), r[2].parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|(exact, asym)| exact > asym));
}

#[test]
fn plot_svg_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let out = gpiq(&[
        "plot",
        "--nmax",
        "20",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert_eq!(svg.matches("<polyline").count(), 2);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["table", "--nmax", "8"][..],
        &["plot", "--nmax", "12", "--format", "svg"],
    ] {
        assert_eq!(gpiq(args).stdout, gpiq(args).stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        gpiq(&["eval-g", "--j", "0", "--k", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(gpiq(&["prob"]).status.code(), Some(1));
    assert_eq!(
        gpiq(&["table", "--nmax", "3", "--format", "svg"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(gpiq(&["bogus"]).status.code(), Some(1));
    assert_eq!(
        gpiq(&["check-identities", "--tol", "-1"]).status.code(),
        Some(1)
    );
    assert_eq!(gpiq(&["--help"]).status.code(), Some(0));
    let missing = gpiq(&["table", "--nmax", "2", "--out", "/nonexistent/dir/t.csv"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot create"));
}
