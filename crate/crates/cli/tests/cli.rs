use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn brachisto(args: &[&str], out_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brachisto"))
        .args(args)
        .env("BRACHISTO_OUT_DIR", out_dir)
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn entries(dir: &Path) -> usize {
    std::fs::read_dir(dir).unwrap().count()
}

const MP: [&str; 8] = ["--m", "1", "--px", "1", "--py", "1", "--pz", "1"];

#[test]
fn classify_mass_dirac_is_constant() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["classify-mass", "--rep", "dirac"];
    args.extend(MP);
    args.extend(["--t-end", "3", "--samples", "300"]);
    let out = brachisto(&args, dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&dir.path().join("report.json"));
    assert_eq!(report["schema_version"], "1");
    assert_eq!(report["verdict"], "CONSTANT");
    assert_eq!(report["modulus_series"].as_array().unwrap().len(), 300);
    for key in ["phase_rate", "expected_rate", "residuals"] {
        assert!(report.get(key).is_some(), "{key}");
    }
}

#[test]
fn classify_mass_majorana_is_rotating() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/report.json");
    let mut args = vec!["classify-mass", "--rep", "majorana"];
    args.extend(MP);
    args.extend(["--out", path.to_str().unwrap()]);
    let out = brachisto(&args, dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&path);
    assert_eq!(report["verdict"], "ROTATING");
    let rate = report["phase_rate"].as_f64().unwrap();
    assert!((rate - 4.0).abs() < 1e-6, "{rate}");
}

#[test]
fn missing_mass_is_input_error_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(&["classify-mass", "--rep", "majorana", "--px", "1"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
    assert_eq!(entries(dir.path()), 0);
}

#[test]
fn invalid_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["no-such-command"],
        &["classify-mass", "--rep", "gamma", "--m", "1"],
        &["classify-mass", "--rep", "dirac", "--m", "0"],
        &["classify-mass", "--rep", "dirac", "--m", "nan"],
        &["classify-mass", "--rep", "dirac", "--m", "1", "--samples", "1"],
        &[
            "compton",
            "--rep",
            "gamma",
            "--m",
            "1",
            "--omega1",
            "1",
            "--theta-grid",
            "0:pi",
        ],
        &["compton", "--rep", "gamma", "--m", "-1", "--omega1", "1"],
        &["evolve", "--m", "1", "--step", "0"],
        &["evolve", "--m", "1", "--lambda", "y1=2"],
        &["angmom", "--nx", "1", "--lyz", "2"],
        &["angmom-conserve", "--t-end", "1", "--step", "2"],
        &["frames", "--m", "0", "--t", "1"],
        &["verify-algebra", "--rep", "weyl"],
    ];
    for args in cases {
        let out = brachisto(args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(entries(dir.path()), 0);
}

#[test]
fn verify_algebra_reports_every_rep() {
    let dir = tempfile::tempdir().unwrap();
    for (rep, file) in [("majorana", "majorana"), ("dirac", "dirac"), ("gamma", "gamma_scatter")] {
        let out = brachisto(&["verify-algebra", "--rep", rep], dir.path());
        assert_eq!(out.status.code(), Some(0), "{rep}");
        let report = json(&dir.path().join(format!("algebra_{file}.json")));
        assert_eq!(report["verdict"], "PASS");
        assert_eq!(report["max_violation"].as_f64(), Some(0.0));
    }
}

#[test]
fn evolve_writes_coefficients_and_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let mut args = vec!["evolve", "--system", "majorana"];
    args.extend(MP);
    args.extend(["--t-end", "0.5", "--step", "1e-3", "--every", "10"]);
    let out = brachisto(&args, dir.path());
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("traj.csv")).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header.len(), 1 + 15 + 3);
    assert_eq!(header[0], "t");
    assert_eq!(header[15], "c_zz");
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 51);
    assert_eq!(rows.last().unwrap()[0], 0.5);
    // The mass sits on (y,1) with coefficient −m at t = 0.
    let y1 = header.iter().position(|h| *h == "c_y1").unwrap();
    assert_eq!(rows[0][y1], -1.0);
    assert!(rows.iter().all(|r| r[16..].iter().all(|x| *x < 1e-8)));
}

#[test]
fn evolve_accepts_explicit_constraint() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(
        &[
            "evolve", "--m", "1", "--px", "-0.5", "--t-end", "0.1", "--step", "1e-3", "--lambda", "z1=-2", "--lambda",
            "xz=0.3",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn compton_csv_columns() {
    let dir = tempfile::tempdir().unwrap();
    for rep in ["gamma", "majorana"] {
        let path = dir.path().join(format!("{rep}.csv"));
        let out = brachisto(
            &[
                "compton",
                "--rep",
                rep,
                "--m",
                "1",
                "--omega1",
                "1",
                "--theta-grid",
                "0:pi:64",
                "--out",
                path.to_str().unwrap(),
            ],
            dir.path(),
        );
        assert_eq!(out.status.code(), Some(0));
        let csv = std::fs::read_to_string(&path).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("theta,omega2,residual_energy,residual_matrix_max"));
        let rows: Vec<Vec<f64>> = lines
            .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
            .collect();
        assert_eq!(rows.len(), 64);
        assert_eq!(rows[63][0], std::f64::consts::PI);
        // Backscatter: ω₂ = ω₁ / (1 + 2ω₁/m) = 1/3.
        assert!((rows[63][1] - 1.0 / 3.0).abs() < 1e-15);
    }
    let a = std::fs::read_to_string(dir.path().join("gamma.csv")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("majorana.csv")).unwrap();
    let omega = |s: &str| {
        s.lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(omega(&a), omega(&b));
}

#[test]
fn angmom_matrix_json_is_row_major() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(&["angmom", "--nx", "1", "--lyz", "2", "--t", "0.5"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let report = json(&dir.path().join("u.json"));
    let u = &report["u"];
    assert_eq!(u["dim"], 4);
    let re: Vec<f64> = serde_json::from_value(u["re"].clone()).unwrap();
    let im: Vec<f64> = serde_json::from_value(u["im"].clone()).unwrap();
    assert_eq!(re.len(), 16);
    assert!(im.iter().all(|x| *x == 0.0));
    assert_eq!(re[1], -(0.5f64).sin());
    assert_eq!(re[4], (0.5f64).sin());
    assert_eq!(re[11], -(1.0f64).sin());
}

#[test]
fn angmom_conserve_reports_drift() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(
        &["angmom-conserve", "--seed", "7", "--t-end", "1", "--step", "1e-3"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let report = json(&dir.path().join("angmom_conserve.json"));
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(report["component_drift"].as_array().unwrap().len(), 6);
    let inv = report["invariant"].as_f64().unwrap();
    let doubled = report["doubled_norm"].as_f64().unwrap();
    assert!((2.0 * inv - doubled).abs() < 1e-12);
}

#[test]
fn frames_passes_and_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, seed: &str| {
        let path = dir.path().join(name);
        let mut args = vec!["frames", "--t", "0.7", "--seed", seed, "--out", path.to_str().unwrap()];
        args.extend(MP);
        let out = brachisto(&args, dir.path());
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let (a, b, c) = (run("a.json", "11"), run("b.json", "11"), run("c.json", "12"));
    assert_eq!(a, b);
    assert_ne!(a, c);
    let report: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(report["recovered_unitary"]["dim"], 4);
}

#[test]
fn report_all_lists_sorted_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(&["report-all", "--seed", "3"], dir.path());
    let report = json(&dir.path().join("summary.json"));
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 12);
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.windows(2).all(|w| w[0] < w[1]), "{names:?}");
    let failed = checks.iter().filter(|c| c["verdict"] == "FAIL").count();
    assert_eq!(report["failed"].as_u64(), Some(failed as u64));
    let expected = if failed == 0 { 0 } else { 1 };
    assert_eq!(out.status.code(), Some(expected));
    for c in checks {
        for metric in c["metrics"].as_array().unwrap() {
            assert!(metric.get("value").is_some() && metric.get("tolerance").is_some());
        }
    }
}

#[test]
fn floats_use_seventeen_significant_digits() {
    let dir = tempfile::tempdir().unwrap();
    let out = brachisto(&["frames", "--m", "1", "--pz", "0.3", "--t", "0.1"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("frames.json")).unwrap();
    assert!(text.contains("\"m\": 1.0000000000000000e0"));
    assert!(text.contains("2.9999999999999999e-1"));
}
