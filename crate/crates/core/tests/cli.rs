use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycauchy"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_small_values() {
    let o = run(&["compute", "--n", "0", "--r", "5", "--k", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    assert_eq!(
        stdout(&run(&[
            "compute", "--n", "1", "--r", "1", "--k", "1", "--x", "0"
        ])),
        "-1\n"
    );
    assert_eq!(
        stdout(&run(&[
            "compute", "--n", "1", "--r", "0", "--k", "2", "--x", "0"
        ])),
        "-1/4\n"
    );
    assert_eq!(
        stdout(&run(&["compute", "--n", "1", "--r", "1", "--k", "1"])),
        "-1 1\n"
    );
}

#[test]
fn compute_rejects_bad_flags() {
    assert_eq!(
        run(&["compute", "--n", "1", "--r", "1", "--k", "1", "--x", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["compute", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn table_csv_and_json_agree() {
    let csv = stdout(&run(&[
        "table", "--n-max", "0", "--r", "2", "--k", "1", "--format", "csv",
    ]));
    assert_eq!(csv, "n,value\n0,1\n");

    let csv = stdout(&run(&[
        "table", "--n-max", "5", "--r", "0", "--k", "1", "--format", "csv",
    ]));
    let json = stdout(&run(&[
        "table", "--n-max", "5", "--r", "0", "--k", "1", "--format", "json",
    ]));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    let from_json: Vec<String> = rows
        .iter()
        .map(|r| format!("{},{}", r["n"], r["value"].as_str().unwrap()))
        .collect();
    let from_csv: Vec<String> = csv.lines().skip(1).map(str::to_owned).collect();
    assert_eq!(from_json, from_csv);

    let expected = polycauchy::sequences::poly_cauchy2_numbers(5, 1);
    for (line, v) in from_csv.iter().zip(&expected) {
        assert_eq!(line.split(',').nth(1).unwrap(), v.to_string());
    }
}

#[test]
fn series_output() {
    let o = stdout(&run(&["series", "log1p", "--order", "3"]));
    let plain: Vec<&str> = o.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(plain, ["0", "1", "-1/2", "1/3"]);

    let o = stdout(&run(&[
        "series",
        "cauchy2_prefactor",
        "--r",
        "1",
        "--order",
        "3",
    ]));
    let egf: Vec<&str> = o.lines().map(|l| l.split(' ').nth(2).unwrap()).collect();
    assert_eq!(egf, ["1", "-1/2", "5/6", "-9/4"]);

    let o = stdout(&run(&[
        "series", "lif", "--k", "1", "--order", "2", "--format", "csv",
    ]));
    assert_eq!(o, "n,coeff,egf\n0,1,1\n1,1/2,1/2\n2,1/6,1/3\n");

    assert_eq!(
        run(&["series", "zeta", "--order", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "mixed_gf", "--r", "-1", "--order", "2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_exit_codes_and_skips() {
    let o = run(&[
        "verify",
        "--identities",
        "double_evaluation",
        "--n-max",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = polycauchy::verify::report_from_json(&stdout(&o)).unwrap();
    assert_eq!(report.fail, 0);
    assert!(report.skipped > 0);
    assert!(report
        .identities
        .iter()
        .filter(|e| e.skipped)
        .all(|e| e.params.m.unwrap() + 1 > e.params.n));

    assert_eq!(run(&["verify", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--identities", "unknown"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--n-max", "0"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = run(&[
        "table",
        "--n-max",
        "2",
        "--r",
        "1",
        "--k",
        "0",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,value\n0,1\n"));
    let again = run(&[
        "table", "--n-max", "2", "--r", "1", "--k", "0", "--format", "csv",
    ]);
    assert_eq!(again.stdout, text.as_bytes());
}
