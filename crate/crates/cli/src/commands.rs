use std::path::{Path, PathBuf};

use brachisto::angmom4::{self, AngMomTensor, ConservationReport};
use brachisto::cliffrep::{build, verify_kind, AlgebraReport, RepKind};
use brachisto::frames::{self, FrameCase, FrameReport};
use brachisto::matcore::{eigh, expm, trace_pair};
use brachisto::propagate::{self, MassReport, MassTolerances, MassVerdict};
use brachisto::qbe::{self, BrachSystem};
use brachisto::scatter::{self, ScatterConfig};
use brachisto::suite::{self, SuiteReport};
use brachisto::{KronLabel, Mat, Spinor, Verdict};
use num_complex::Complex;
use serde::Serialize;

use crate::grid::linspace;
use crate::output::{default_dir, resolve_out, to_csv, to_json, write_file};

/// Written report and whether every verdict in it passed.
pub struct Outcome {
    pub path: PathBuf,
    pub pass: bool,
    pub summary: String,
}

pub type CmdResult = Result<Outcome, String>;

pub const ALGEBRA_TOL: f64 = 1e-12;
pub const EVOLVE_TOL: f64 = 1e-8;
pub const ANGMOM_TOL: f64 = 1e-12;
pub const CONSERVE_TOL: f64 = 1e-8;
pub const COMPTON_TOL: f64 = 1e-12;

fn verdict(pass: bool) -> Verdict {
    if pass {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn err(e: brachisto::Error) -> String {
    e.to_string()
}

fn finite(name: &str, x: f64) -> Result<f64, String> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("--{name} must be finite, got {x}"))
    }
}

fn positive(name: &str, x: f64) -> Result<f64, String> {
    if finite(name, x)? > 0.0 {
        Ok(x)
    } else {
        Err(format!("--{name} must be positive, got {x}"))
    }
}

pub fn momentum(px: f64, py: f64, pz: f64) -> Result<[f64; 3], String> {
    Ok([finite("px", px)?, finite("py", py)?, finite("pz", pz)?])
}

fn time_range(t_end: f64, step: f64) -> Result<(), String> {
    positive("t-end", t_end)?;
    positive("step", step)?;
    if step > t_end {
        return Err(format!("--step {step} exceeds --t-end {t_end}"));
    }
    if t_end / step > 1e7 {
        return Err("more than 1e7 integration steps requested".into());
    }
    Ok(())
}

fn spinor_pairs(v: &Spinor<f64>) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

#[derive(Serialize)]
struct AlgebraOut<'a> {
    verdict: Verdict,
    tolerance: f64,
    max_violation: f64,
    #[serde(flatten)]
    report: &'a AlgebraReport,
}

pub fn verify_algebra(rep: RepKind, out: Option<&Path>) -> CmdResult {
    let report = verify_kind(rep);
    let max_violation = report.max_violation();
    let pass = max_violation <= ALGEBRA_TOL;
    let body = AlgebraOut {
        verdict: verdict(pass),
        tolerance: ALGEBRA_TOL,
        max_violation,
        report: &report,
    };
    let path = resolve_out(out, &format!("algebra_{rep}.json"));
    write_file(&path, &to_json("verify-algebra", &body)?)?;
    Ok(Outcome {
        path,
        pass,
        summary: format!("{rep}: max violation {max_violation:e}"),
    })
}

pub struct EvolveArgs {
    pub m: f64,
    pub p: [f64; 3],
    pub t_end: f64,
    pub step: f64,
    pub every: usize,
    pub lambda: Vec<(KronLabel, f64)>,
}

pub fn parse_lambda(s: &str) -> Result<(KronLabel, f64), String> {
    let (label, value) = s
        .split_once('=')
        .ok_or_else(|| format!("--lambda {s:?} must be label=value"))?;
    let label: KronLabel = label.parse().map_err(err)?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("--lambda value {value:?} is not a number"))?;
    Ok((label, finite("lambda", value)?))
}

pub fn evolve(a: EvolveArgs, out: Option<&Path>) -> CmdResult {
    finite("m", a.m)?;
    time_range(a.t_end, a.step)?;
    if a.every == 0 {
        return Err("--every must be at least 1".into());
    }
    let sys = if a.lambda.is_empty() {
        BrachSystem::majorana_rotating(a.m, a.p)
    } else {
        BrachSystem::majorana(a.m, a.p, &a.lambda)
    }
    .map_err(err)?;
    let traj = qbe::integrate_qbe_sampled(&sys, a.t_end, a.step, a.every).map_err(err)?;
    let labels: Vec<KronLabel> = KronLabel::traceless().collect();
    let k0 = trace_pair(&sys.h0, &sys.h0).map_err(err)?.re * 0.5;
    let spec0 = eigh(&traj.combined(0)).values;
    let mut rows = Vec::with_capacity(traj.len());
    let mut worst = 0.0f64;
    for (idx, t) in traj.times.iter().enumerate() {
        let combined = traj.combined(idx);
        let mut row = vec![*t];
        row.extend(qbe::span_coefficients(&combined, &labels));
        let iso = qbe::check_isotropic(&traj.h_t[idx], k0);
        let spec = eigh(&combined)
            .values
            .iter()
            .zip(&spec0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let hf = trace_pair(&traj.h_t[idx], &traj.f_t[idx]).map_err(err)?.norm();
        worst = worst.max(iso).max(spec).max(hf);
        row.extend([iso, spec, hf]);
        rows.push(row);
    }
    let mut header = vec!["t".to_string()];
    header.extend(labels.iter().map(|l| format!("c_{l}")));
    header.extend(["res_isotropic", "res_spectrum", "res_trace_hf"].map(String::from));
    let path = resolve_out(out, "traj.csv");
    write_file(&path, &to_csv(&header, &rows))?;
    Ok(Outcome {
        path,
        pass: worst <= EVOLVE_TOL,
        summary: format!("{} samples, max conserved residual {worst:e}", rows.len()),
    })
}

#[derive(Serialize)]
struct MassOut<'a> {
    m: f64,
    p: [f64; 3],
    t_end: f64,
    samples: usize,
    tolerances: MassTolerances,
    #[serde(flatten)]
    report: &'a MassReport,
}

pub fn classify_mass(rep: RepKind, m: f64, p: [f64; 3], t_end: f64, samples: usize, out: Option<&Path>) -> CmdResult {
    finite("m", m)?;
    positive("t-end", t_end)?;
    if !(2..=1_000_000).contains(&samples) {
        return Err(format!("--samples must be in 2..=1000000, got {samples}"));
    }
    let grid = linspace(0.0, t_end, samples);
    let report = propagate::classify_mass(&build(rep), m, p, &grid).map_err(err)?;
    let body = MassOut {
        m,
        p,
        t_end,
        samples,
        tolerances: MassTolerances::default(),
        report: &report,
    };
    let path = resolve_out(out, "report.json");
    write_file(&path, &to_json("classify-mass", &body)?)?;
    Ok(Outcome {
        path,
        pass: report.verdict != MassVerdict::Unclassified,
        summary: format!(
            "{rep}: {:?}, phase rate {:e} (expected {:e})",
            report.verdict, report.phase_rate, report.expected_rate
        ),
    })
}

#[derive(Serialize)]
struct AngmomOut {
    verdict: Verdict,
    nx: f64,
    lyz: f64,
    t: f64,
    u: Mat,
    expm_residual: f64,
    orthogonality_residual: f64,
    determinant_residual: f64,
    tolerance: f64,
}

pub fn angmom(nx: f64, lyz: f64, t: f64, out: Option<&Path>) -> CmdResult {
    let (nx, lyz, t) = (finite("nx", nx)?, finite("lyz", lyz)?, finite("t", t)?);
    let u = angmom4::block_propagator(nx, lyz, t);
    let h = angmom4::reduced_hamiltonian(nx, lyz);
    let via_expm = expm(&h.scale(&Complex::new(0.0, -t)));
    let expm_residual = via_expm.max_abs_diff(&u);
    let orthogonality_residual = (&u.transpose() * &u).max_abs_diff(&Mat::identity(4).map_err(err)?);
    let determinant_residual = (u.det() - Complex::new(1.0, 0.0)).norm();
    let pass = [expm_residual, orthogonality_residual, determinant_residual]
        .iter()
        .all(|r| *r <= ANGMOM_TOL);
    let body = AngmomOut {
        verdict: verdict(pass),
        nx,
        lyz,
        t,
        u,
        expm_residual,
        orthogonality_residual,
        determinant_residual,
        tolerance: ANGMOM_TOL,
    };
    let path = resolve_out(out, "u.json");
    write_file(&path, &to_json("angmom", &body)?)?;
    Ok(Outcome {
        path,
        pass,
        summary: format!("block propagator residual {expm_residual:e}"),
    })
}

#[derive(Serialize)]
struct ConserveOut<'a> {
    verdict: Verdict,
    seed: u64,
    tolerance: f64,
    max_component_drift: f64,
    /// `2(|l|² + |n|²)`, for comparison with `invariant`.
    doubled_norm: f64,
    #[serde(flatten)]
    report: &'a ConservationReport,
}

pub fn angmom_conserve(seed: u64, t_end: f64, step: f64, out: Option<&Path>) -> CmdResult {
    time_range(t_end, step)?;
    let (tensor, f0) = angmom4::random_case(seed);
    let report = angmom4::qbe_conservation(tensor, &f0, t_end, step).map_err(err)?;
    let max_component_drift = report.component_drift.iter().fold(0.0f64, |a, b| a.max(*b));
    let AngMomTensor { n, l } = tensor;
    let sq = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>();
    let pass = max_component_drift <= CONSERVE_TOL;
    let body = ConserveOut {
        verdict: verdict(pass),
        seed,
        tolerance: CONSERVE_TOL,
        max_component_drift,
        doubled_norm: 2.0 * (sq(l) + sq(n)),
        report: &report,
    };
    let path = resolve_out(out, "angmom_conserve.json");
    write_file(&path, &to_json("angmom-conserve", &body)?)?;
    Ok(Outcome {
        path,
        pass,
        summary: format!("max component drift {max_component_drift:e}"),
    })
}

pub fn compton(rep: RepKind, m: f64, omega1: f64, grid: &[f64], out: Option<&Path>) -> CmdResult {
    positive("m", m)?;
    positive("omega1", omega1)?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut worst = 0.0f64;
    for &theta in grid {
        let r = scatter::verify_conservation(&ScatterConfig::new(rep, m, omega1, theta)).map_err(err)?;
        let energy = r.energy.max(r.compton);
        let matrix = [
            r.matrix,
            r.momentum,
            r.lightlike,
            r.rest,
            r.mass_anticommutator,
            r.photon_anticommutator,
        ]
        .into_iter()
        .fold(0.0, f64::max);
        worst = worst.max(energy).max(matrix);
        rows.push(vec![theta, r.kinematics.omega2, energy, matrix]);
    }
    let header = ["theta", "omega2", "residual_energy", "residual_matrix_max"].map(String::from);
    let path = resolve_out(out, "compton.csv");
    write_file(&path, &to_csv(&header, &rows))?;
    Ok(Outcome {
        path,
        pass: worst <= COMPTON_TOL,
        summary: format!("{rep}: {} angles, max residual {worst:e}", rows.len()),
    })
}

#[derive(Serialize)]
struct FramesOut<'a> {
    m: f64,
    p: [f64; 3],
    t: f64,
    seed: u64,
    tolerance: f64,
    v: Vec<[f64; 2]>,
    w: Vec<[f64; 2]>,
    #[serde(flatten)]
    report: &'a FrameReport,
}

pub fn frames(m: f64, p: [f64; 3], t: f64, seed: u64, out: Option<&Path>) -> CmdResult {
    let (m, t) = (finite("m", m)?, finite("t", t)?);
    let case = FrameCase::seeded(m, p, t, seed).map_err(err)?;
    let report = frames::check_frame_equivalence(&case).map_err(err)?;
    let body = FramesOut {
        m,
        p,
        t,
        seed,
        tolerance: frames::FRAME_TOL,
        v: spinor_pairs(&case.v),
        w: spinor_pairs(&case.w),
        report: &report,
    };
    let path = resolve_out(out, "frames.json");
    write_file(&path, &to_json("frames", &body)?)?;
    Ok(Outcome {
        path,
        pass: report.verdict == Verdict::Pass,
        summary: format!("max residual {:e}", report.max_residual()),
    })
}

pub fn report_all(seed: u64, out_dir: Option<&Path>) -> Result<(Outcome, SuiteReport), String> {
    let report = suite::run_suite(seed);
    let dir = out_dir.map(Path::to_path_buf).unwrap_or_else(default_dir);
    let path = dir.join("summary.json");
    write_file(&path, &to_json("report-all", &report)?)?;
    let outcome = Outcome {
        path,
        pass: report.verdict == Verdict::Pass,
        summary: format!("{} passed, {} failed", report.passed, report.failed),
    };
    Ok((outcome, report))
}
