use std::process::{Command, Output};

fn hyperalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn cell(table: &str, row: &str, col: &str) -> String {
    let mut lines = table.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let c = header.iter().position(|h| *h == col).unwrap();
    lines
        .map(|l| l.split(',').collect::<Vec<_>>())
        .find(|cells| cells[0] == row)
        .map(|cells| cells[c].to_string())
        .unwrap()
}

#[test]
fn table_cells() {
    let o = hyperalg(&["tables", "--algebra", "quaternion", "--format", "csv"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert_eq!(cell(&t, "i1", "i2"), "i3");
    assert_eq!(cell(&t, "i2", "i1"), "-i3");
    let t = stdout(&hyperalg(&[
        "tables",
        "--algebra",
        "bicomplex_oblique",
        "--format",
        "csv",
    ]));
    assert_eq!(cell(&t, "j", "j"), "-k");
    for label in ["1", "i", "j", "k"] {
        assert_eq!(cell(&t, "1", label), label);
    }
}

#[test]
fn ascii_table_uses_signed_labels() {
    let t = stdout(&hyperalg(&["tables", "--algebra", "quaternion"]));
    assert!(t
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["i2", "|", "i2", "-i3", "-1", "i1"]));
}

#[test]
fn classification_lines() {
    let t = stdout(&hyperalg(&["classify", "--algebra", "biquaternion"]));
    assert!(t.starts_with("# algebra=biquaternion seed=42\n"));
    assert!(t.contains("reversible=no\n"));
    let t = stdout(&hyperalg(&["classify", "--algebra", "dual", "--seed", "7"]));
    assert!(t.starts_with("# algebra=dual seed=7\n"));
    assert!(t.contains("commutative=yes\n"));
    let t = stdout(&hyperalg(&["classify", "--algebra", "complex"]));
    assert_eq!(t.lines().filter(|l| l.ends_with("=yes")).count(), 7);
}

#[test]
fn spec_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.txt");
    std::fs::write(&path, "algebra hyperbolic\ndim 2\nbasis 1 h\nh*h = 1\n").unwrap();
    let arg = format!("@{}", path.display());
    let o = hyperalg(&["tables", "--algebra", &arg, "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "*,1,h\n1,1,h\nh,h,1\n");
    let o = hyperalg(&["classify", "--algebra", &arg]);
    assert!(stdout(&o).contains("reversible=no\n"));

    std::fs::write(&path, "algebra bad\ndim 2\nbasis 1 h\nh*h = 2h\n").unwrap();
    let o = hyperalg(&["classify", "--algebra", &arg]);
    assert_eq!(o.status.code(), Some(2));
    let o = hyperalg(&["tables", "--algebra", "@/no/such/file"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["tables", "--algebra", "octonion"],
        vec!["tables", "--algebra", "complex", "--format", "html"],
        vec!["check", "--suite", "everything"],
        vec![
            "fourier", "--wave", "J", "--kernel", "J", "--p", "2", "--n", "1", "--out", "x.csv",
        ],
        vec![
            "simulate", "--wave", "C", "--p", "1", "--m", "0", "--x0", "0", "--x1", "1", "--n",
            "4", "--out", "x.csv",
        ],
        vec![
            "simulate", "--wave", "Q", "--p", "1", "--m", "1", "--x0", "0", "--x1", "1", "--n",
            "4", "--out", "x.csv",
        ],
        vec![
            "simulate", "--wave", "C", "--p", "nan", "--m", "1", "--x0", "0", "--x1", "1", "--n",
            "4", "--out", "x.csv",
        ],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = hyperalg(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    assert_eq!(hyperalg(&["--help"]).status.code(), Some(0));
}

#[test]
fn simulate_writes_csv_and_reports_the_residual() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = hyperalg(&[
        "simulate",
        "--wave",
        "C",
        "--p",
        "1",
        "--m",
        "1",
        "--x0",
        "0",
        "--x1",
        "6",
        "--n",
        "7",
        "--t",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let residual: f64 = stdout(&o)
        .trim()
        .strip_prefix("schroedinger_residual=")
        .unwrap()
        .parse()
        .unwrap();
    assert!(residual < 1e-9);
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,t,c0,c1,c2,c3"));
    assert_eq!(lines.next(), Some("0,0,1,0,0,0"));

    let out = dir.path().join("j.csv");
    let o = hyperalg(&[
        "simulate",
        "--wave",
        "J",
        "--p",
        "1.5",
        "--m",
        "2",
        "--x0",
        "-3",
        "--x1",
        "3",
        "--n",
        "25",
        "--t",
        "0.5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let energy = 1.5 * 1.5 / 4.0;
    for row in std::fs::read_to_string(&out).unwrap().lines().skip(1) {
        let v: Vec<f64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        let theta = 1.5 * v[0] - energy * v[1];
        // k cos(theta) + j sin(theta), with k the last oblique unit
        assert!(v[2].abs() < 1e-12 && v[3].abs() < 1e-12);
        assert!((v[4] - theta.sin()).abs() < 1e-9);
        assert!((v[5] - theta.cos()).abs() < 1e-9);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = hyperalg(&[
            "fourier",
            "--wave",
            "C",
            "--kernel",
            "C",
            "--p",
            "1",
            "--L",
            "30",
            "--n",
            "512",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        (stdout(&o), std::fs::read(out).unwrap())
    };
    assert_eq!(run("a.csv"), run("b.csv"));
    let a = stdout(&hyperalg(&["classify", "--algebra", "biquaternion"]));
    let b = stdout(&hyperalg(&["classify", "--algebra", "biquaternion"]));
    assert_eq!(a, b);
}

#[test]
fn fourier_spectrum_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("spec.csv");
    let o = hyperalg(&[
        "fourier",
        "--wave",
        "J",
        "--kernel",
        "J",
        "--p",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let ratio: f64 = stdout(&o)
        .trim()
        .strip_prefix("concentration_ratio=")
        .unwrap()
        .parse()
        .unwrap();
    assert!(ratio > 1.8);
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("p,c0,c1,c2,c3\n"));
    // the largest coefficient norm sits at the wavenumber
    let peak = csv
        .lines()
        .skip(1)
        .map(|l| {
            l.split(',')
                .map(|c| c.parse::<f64>().unwrap())
                .collect::<Vec<_>>()
        })
        .max_by(|a, b| {
            let n = |v: &Vec<f64>| v[1..].iter().map(|c| c * c).sum::<f64>();
            n(a).total_cmp(&n(b))
        })
        .unwrap();
    assert!((peak[0] - 2.0).abs() < 1e-9);
}

#[test]
fn check_suites() {
    let o = hyperalg(&["check", "--suite", "clifford"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert_eq!(t.lines().count(), 16);
    assert!(t.lines().all(|l| l.ends_with(": ok")));
    assert!(t.starts_with("gamma[0,0]: ok\n"));

    let t = stdout(&hyperalg(&["check", "--suite", "prefactors"]));
    assert_eq!(t.lines().filter(|l| l.ends_with(": ok")).count(), 6);

    let t = stdout(&hyperalg(&["check", "--suite", "modulus"]));
    assert!(t.lines().any(|l| l == "phiJ_modulus: ok"));

    let o = hyperalg(&["check", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
