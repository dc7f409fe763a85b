//! Named, seeded end-to-end checks with pinned tolerances.

use std::f64::consts::PI;

use num_complex::Complex;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::angmom4::{self, AngMomTensor};
use crate::cliffrep::{build, build_majorana, verify_algebra, RepKind};
use crate::error::Result;
use crate::frames::{self, FrameCase, Verdict};
use crate::matcore::{mat_exp_diag, ComplexMat, KronLabel};
use crate::propagate::{self, MassVerdict};
use crate::qbe::{self, BrachSystem, MAJORANA_SPAN};
use crate::scalar::cis;
use crate::scatter::{self, ScatterConfig};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Metric {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub metrics: Vec<Metric>,
}

impl CheckResult {
    fn new(name: &str, metrics: Vec<Metric>) -> Self {
        let verdict = if metrics.iter().all(|m| m.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            name: name.to_string(),
            verdict,
            metrics,
        }
    }

    fn errored(name: &str, err: &crate::error::Error) -> Self {
        Self::new(
            name,
            vec![Metric {
                name: format!("error: {err}"),
                value: f64::INFINITY,
                tolerance: 0.0,
                pass: false,
            }],
        )
    }
}

/// `value ≤ tolerance`; non-finite values fail.
fn below(name: &str, value: f64, tolerance: f64) -> Metric {
    Metric {
        name: name.to_string(),
        value,
        tolerance,
        pass: value.is_finite() && value <= tolerance,
    }
}

/// A boolean condition recorded as `0` (holds) or `1`.
fn holds(name: &str, ok: bool) -> Metric {
    below(name, if ok { 0.0 } else { 1.0 }, 0.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

type CheckFn = fn(&mut ChaCha8Rng) -> Result<Vec<Metric>>;

const CHECKS: [(&str, CheckFn); 17] = [
    ("algebra_clifford", algebra_clifford),
    ("angmom_block_propagator", angmom_block_propagator),
    ("angmom_conservation", angmom_conservation),
    ("angmom_invariant_doubled_norm", angmom_invariant_doubled_norm),
    ("angmom_invariant_trace", angmom_invariant_trace),
    ("compton_conservation", compton_conservation),
    ("determinism", determinism),
    ("diagonalization", diagonalization),
    ("evolved_hamiltonian", evolved_hamiltonian),
    ("frames_equivalence", frames_equivalence),
    ("frames_negative_control", frames_negative_control),
    ("mass_classifier", mass_classifier),
    ("pauli_lubanski", pauli_lubanski),
    ("phase_anticommutators", phase_anticommutators),
    ("propagator", propagator_laws),
    ("qbe_oracle_equivalence", qbe_oracle_equivalence),
    ("trace_projection", trace_projection),
];

/// Names of every check, sorted.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

fn run_one(seed: u64, index: usize) -> CheckResult {
    let (name, f) = CHECKS[index];
    match f(&mut rng_for(seed, index)) {
        Ok(metrics) => CheckResult::new(name, metrics),
        Err(e) => CheckResult::errored(name, &e),
    }
}

/// Runs every check with streams derived from `seed`.
pub fn run_suite(seed: u64) -> SuiteReport {
    let mut checks: Vec<CheckResult> = (0..CHECKS.len()).map(|k| run_one(seed, k)).collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let failed = checks.len() - passed;
    SuiteReport {
        seed,
        verdict: if failed == 0 { Verdict::Pass } else { Verdict::Fail },
        passed,
        failed,
        checks,
    }
}

/// Random `(m, p)` with `E` uniform in `[e_lo, e_hi]` and a uniformly random direction.
pub fn random_mass_momentum(rng: &mut impl Rng, e_lo: f64, e_hi: f64) -> (f64, [f64; 3]) {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(0.1..=1.0).contains(&r) {
            continue;
        }
        let e = rng.gen_range(e_lo..=e_hi);
        let s = e / r;
        let (m, p) = (v[0] * s, [v[1] * s, v[2] * s, v[3] * s]);
        if Complex::new(p[1], -m).norm() > 1e-3 * e {
            return (m, p);
        }
    }
}

fn algebra_clifford(_: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    Ok([RepKind::Majorana, RepKind::Dirac]
        .into_iter()
        .map(|k| {
            below(
                &format!("{k}_max_violation"),
                verify_algebra(&build(k)).max_violation(),
                0.0,
            )
        })
        .collect())
}

fn diagonalization(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (mut diag, mut inv) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let (m, p) = random_mass_momentum(rng, 0.1, 10.0);
        let f = propagate::majorana_eigenframe(m, p)?;
        let (i, d) = f.residuals(&build_majorana::<f64>().hamiltonian(m, p));
        inv = inv.max(i);
        diag = diag.max(d);
    }
    Ok(vec![
        below("w_inv_h_w_minus_d", diag, 1e-10),
        below("w_w_inv_minus_identity", inv, 1e-10),
    ])
}

fn propagator_laws(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (mut closed, mut unitary, mut compose, mut shift) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..50 {
        let (m, p) = random_mass_momentum(rng, 0.1, 3.0);
        let u = propagate::propagator(propagate::majorana_eigenframe(m, p)?);
        let e = u.frame.energy;
        let (t, s, r) = (
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        );
        let uts = u.u(t, s);
        let z = cis(-2.0 * e * (t - s));
        let one = Complex::new(1.0, 0.0);
        closed = closed.max(uts.max_abs_diff(&ComplexMat::diag(&[z, z, one, one])?));
        unitary = unitary.max(uts.unitarity_residual());
        compose = compose.max((&uts * &u.u(s, r)).max_abs_diff(&u.u(t, r)));
        shift = shift.max(uts.max_abs_diff(&u.u(t - s, 0.0)));
    }
    Ok(vec![
        below("closed_form", closed, 1e-12),
        below("unitarity", unitary, 1e-10),
        below("composition", compose, 1e-10),
        below("time_translation", shift, 1e-10),
    ])
}

fn evolved_hamiltonian(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (m, p) = (1.0, [1.0, 1.0, 1.0]);
    let frame = propagate::majorana_eigenframe(m, p)?;
    let h0 = build_majorana::<f64>().hamiltonian(m, p);
    let mut entry = 0.0f64;
    let mut grid = Vec::with_capacity(20);
    for _ in 0..20 {
        let t = rng.gen_range(0.0..5.0);
        grid.push(t);
        let h = propagate::evolve_hamiltonian(&frame, &h0, t)?;
        let want = Complex::new(p[1], m) * cis(-2.0 * frame.energy * t);
        entry = entry.max((h.get(0, 2) - want).norm());
    }
    let kg = frames::check_klein_gordon(m, p, &grid)?;
    Ok(vec![below("entry_0_2", entry, 1e-12), below("klein_gordon", kg, 1e-10)])
}

fn mass_classifier(_: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let grid: Vec<f64> = (0..300).map(|k| 3.0 * k as f64 / 299.0).collect();
    let p = [1.0, 1.0, 1.0];
    let maj = propagate::classify_mass(&build(RepKind::Majorana), 1.0, p, &grid)?;
    let dir = propagate::classify_mass(&build(RepKind::Dirac), 1.0, p, &grid)?;
    Ok(vec![
        holds("majorana_rotating", maj.verdict == MassVerdict::Rotating),
        below(
            "majorana_rate_rel_error",
            (maj.phase_rate - maj.expected_rate).abs() / maj.expected_rate,
            1e-6,
        ),
        below("majorana_modulus_deviation", maj.residuals.modulus, 1e-10),
        holds("dirac_constant", dir.verdict == MassVerdict::Constant),
        below("dirac_deviation", dir.residuals.constant, 1e-10),
    ])
}

/// `max_t |m(t) − m₀e^{2iEt}|` along the integrated flow.
pub fn qbe_mass_error(m: f64, p: [f64; 3], t_end: f64, step: f64) -> Result<f64> {
    let sys = BrachSystem::majorana_rotating(m, p)?;
    let traj = qbe::integrate_qbe_sampled(&sys, t_end, step, 100)?;
    let g = build_majorana::<f64>().mass_generator();
    let c0 = propagate::mass_channel(&g, &sys.h0);
    let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
    Ok(traj
        .times
        .iter()
        .zip(&traj.h_t)
        .map(|(t, h)| (propagate::mass_channel(&g, h) / c0 * m - cis(2.0 * e * t) * m).norm())
        .fold(0.0, f64::max))
}

fn qbe_oracle_equivalence(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let base = qbe_mass_error(1.0, [1.0, 1.0, 1.0], 1.0, 1e-4)?;
    let (m, p) = random_mass_momentum(rng, 0.5, 3.0);
    let random = qbe_mass_error(m, p, 1.0, 1e-4)?;
    Ok(vec![below("unit_case", base, 1e-6), below("random_case", random, 1e-6)])
}

/// Coefficients of `Tr[[H, Υ_a] α_x]` over the constraint labels, and the
/// expected `8i·{p_z, m, p_y}` on `(1,y), (x,z), (y,z)`.
fn alpha_x_probe(m: f64, p: [f64; 3]) -> Result<f64> {
    let rep = build_majorana::<f64>();
    let h = rep.hamiltonian(m, p);
    let mut worst = 0.0f64;
    for label in qbe::complement_span(&MAJORANA_SPAN)? {
        let got = qbe::trace_project_rhs(&h, &label.matrix(), &rep.alpha[0])?;
        let want = match label.to_string().as_str() {
            "1y" => p[2],
            "xz" => m,
            "yz" => p[1],
            _ => 0.0,
        };
        worst = worst.max((got - Complex::new(0.0, 8.0 * want)).norm());
    }
    Ok(worst)
}

/// Exact rational version of [`alpha_x_probe`]; `true` when every probe matches.
pub fn alpha_x_probe_exact(m: i64, p: [i64; 3]) -> Result<bool> {
    let r = Rational64::from_integer;
    let rep = build_majorana::<Rational64>();
    let h = rep.hamiltonian(r(m), p.map(r));
    for label in qbe::complement_span(&MAJORANA_SPAN)? {
        let got = qbe::trace_project_rhs(&h, &label.matrix(), &rep.alpha[0])?;
        let want = match label.to_string().as_str() {
            "1y" => p[2],
            "xz" => m,
            "yz" => p[1],
            _ => 0,
        };
        if got != Complex::new(r(0), r(8 * want)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn trace_projection(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut exact = true;
    let mut float = 0.0f64;
    for _ in 0..20 {
        let (m, p) = (
            rng.gen_range(-9..=9),
            [rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9)],
        );
        exact &= alpha_x_probe_exact(m, p)?;
        let (mf, pf) = random_mass_momentum(rng, 0.1, 3.0);
        float = float.max(alpha_x_probe(mf, pf)?);
    }
    Ok(vec![holds("rational_exact", exact), below("float_probe", float, 1e-12)])
}

fn angmom_conservation(_: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut drift = 0.0f64;
    let mut flow = 0.0f64;
    for seed in 0..3 {
        let (tensor, f0) = angmom4::random_case(seed);
        let r = angmom4::qbe_conservation(tensor, &f0, 5.0, 1e-3)?;
        drift = drift.max(r.component_drift.iter().fold(0.0, |a, b| a.max(*b)));
        flow = flow.max(r.f_flow_residual);
    }
    Ok(vec![
        below("component_drift", drift, 1e-8),
        below("f_flow_residual", flow, 1e-6),
    ])
}

fn random_tensor(rng: &mut ChaCha8Rng) -> AngMomTensor<f64> {
    AngMomTensor {
        n: std::array::from_fn(|_| rng.gen_range(-2.0..2.0)),
        l: std::array::from_fn(|_| rng.gen_range(-2.0..2.0)),
    }
}

fn norm2(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

fn angmom_invariant_trace(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let t = random_tensor(rng);
        let m = t.matrix();
        let direct: f64 = m.entries().iter().map(|z| z.re * z.re).sum::<f64>() * 0.5;
        worst = worst.max((angmom4::angmom_invariant(t.n, t.l) - direct).abs());
    }
    Ok(vec![below("trace_vs_entry_sum", worst, 1e-12)])
}

fn angmom_invariant_doubled_norm(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let t = random_tensor(rng);
        let claim = 2.0 * (norm2(&t.l) + norm2(&t.n));
        worst = worst.max((angmom4::angmom_invariant(t.n, t.l) - claim).abs());
    }
    Ok(vec![below("trace_minus_2_l2_plus_n2", worst, 1e-12)])
}

fn angmom_block_propagator(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (mut product, mut orth, mut det) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..50 {
        let (nx, lyz, t) = (
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-4.0..4.0),
        );
        let u = angmom4::block_propagator(nx, lyz, t);
        let (w, d) = angmom4::block_eigenframe(nx, lyz);
        let h = angmom4::reduced_hamiltonian(nx, lyz);
        let w_inv = block_inverse(&w)
            .ok_or_else(|| crate::error::Error::InvalidParameter("singular block eigenframe".into()))?;
        let via_frame = &(&w * &mat_exp_diag(&d, t)?) * &w_inv;
        product = product.max(via_frame.max_abs_diff(&u));
        product = product.max((&(&w * &d) * &w_inv).max_abs_diff(&h));
        orth = orth.max((&u.transpose() * &u).max_abs_diff(&ComplexMat::identity(4)?));
        det = det.max((u.det() - Complex::new(1.0, 0.0)).norm());
    }
    Ok(vec![
        below("eigenframe_product", product, 1e-12),
        below("orthogonality", orth, 1e-12),
        below("determinant", det, 1e-12),
    ])
}

/// Inverse of a block-diagonal matrix of two 2×2 blocks.
fn block_inverse(w: &ComplexMat<f64>) -> Option<ComplexMat<f64>> {
    let mut inv = ComplexMat::zeros(4).ok()?;
    for b in [0, 2] {
        let (a, bb, c, d) = (*w.get(b, b), *w.get(b, b + 1), *w.get(b + 1, b), *w.get(b + 1, b + 1));
        let det = a * d - bb * c;
        if det.norm() == 0.0 {
            return None;
        }
        inv.set(b, b, d / det);
        inv.set(b, b + 1, -bb / det);
        inv.set(b + 1, b, -c / det);
        inv.set(b + 1, b + 1, a / det);
    }
    Some(inv)
}

fn pauli_lubanski(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let t = random_tensor(rng);
        let p: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-3.0..3.0));
        worst = worst.max(angmom4::pauli_lubanski(t.n, t.l, p).dot(&p).abs());
    }
    let rest: [f64; 4] = angmom4::pauli_lubanski([0.0; 3], [0.5, -1.0, 2.0], [2.0, 0.0, 0.0, 0.0]).upper();
    let rest_err = (rest[0].abs())
        .max((rest[1] - 1.0).abs())
        .max((rest[2] + 2.0).abs())
        .max((rest[3] - 4.0).abs());
    Ok(vec![
        below("w_dot_p", worst, 1e-12),
        below("rest_frame", rest_err, 1e-15),
    ])
}

fn compton_conservation(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (mut resid, mut agree, mut closed) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..20 {
        let (m, w1) = (rng.gen_range(0.1..3.0), rng.gen_range(0.1..3.0));
        for k in 0..64 {
            let theta = PI * k as f64 / 63.0;
            for rep in [RepKind::GammaScatter, RepKind::Majorana] {
                resid = resid.max(scatter::verify_conservation(&ScatterConfig::new(rep, m, w1, theta))?.max());
            }
            let g = scatter::solve_omega2(RepKind::GammaScatter, m, w1, theta)?;
            let mj = scatter::solve_omega2(RepKind::Majorana, m, w1, theta)?;
            agree = agree.max((g - mj).abs());
            closed = closed.max((g - scatter::compton_omega2(m, w1, theta)).abs());
        }
    }
    Ok(vec![
        below("conservation_residuals", resid, 1e-12),
        below("rep_omega2_agreement", agree, 1e-15),
        below("matrix_vs_closed_form", closed, 1e-12),
    ])
}

fn phase_anticommutators(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let (mut block, mut maj) = (0.0f64, 0.0f64);
    let id = ComplexMat::<f64>::identity(4)?;
    for _ in 0..200 {
        let p: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let q: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let ang = rng.gen_range(-PI..PI);
        let (pm, qm) = (
            scatter::phased_block_momentum(p, ang),
            scatter::phased_block_momentum(q, 0.0),
        );
        let brute = (&(&pm * &qm) + &(&qm * &pm)).scale_re(&0.5);
        block = block.max(brute.max_abs_diff(&scatter::phased_anticommutator_block(p, q, ang)));
        let (pm, qm) = (
            scatter::majorana_phased_momentum(p, ang),
            scatter::majorana_phased_momentum(q, 0.0),
        );
        let brute = (&(&pm * &qm) + &(&qm * &pm)).scale_re(&0.5);
        maj = maj.max(brute.max_abs_diff(&id.scale_re(&scatter::majorana_phased_dot(p, q, ang))));
    }
    Ok(vec![
        below("block_identity", block, 1e-12),
        below("majorana_scalar_identity", maj, 1e-12),
    ])
}

fn frames_equivalence(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let mut worst = 0.0f64;
    let mut all_pass = true;
    for _ in 0..50 {
        let (m, p) = random_mass_momentum(rng, 0.5, 3.0);
        let t = rng.gen_range(-3.0..3.0);
        let v = frames::random_state(rng);
        let r = frames::check_frame_equivalence(&FrameCase::evolved(m, p, t, v)?)?;
        worst = worst.max(r.max_residual());
        all_pass &= r.verdict == Verdict::Pass;
    }
    Ok(vec![
        below("max_residual", worst, frames::FRAME_TOL),
        holds("all_pass", all_pass),
    ])
}

fn frames_negative_control(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let v = frames::random_state(rng);
    let r = frames::check_frame_equivalence(&FrameCase::unevolved(1.0, [1.0, 1.0, 1.0], 0.7, v))?;
    Ok(vec![holds("unevolved_state_fails", r.verdict == Verdict::Fail)])
}

fn determinism(rng: &mut ChaCha8Rng) -> Result<Vec<Metric>> {
    let seed = rng.gen::<u64>();
    let run = || -> String {
        let picks = [7usize, 9, 15];
        let results: Vec<CheckResult> = picks.iter().map(|&k| run_one(seed, k)).collect();
        serde_json::to_string(&results).unwrap_or_default()
    };
    let (a, b) = (run(), run());
    Ok(vec![holds("repeat_serialization_identical", !a.is_empty() && a == b)])
}

/// Labels whose α_x trace projection is non-zero, in canonical order.
pub fn alpha_x_labels() -> [KronLabel; 3] {
    ["1y", "xz", "yz"].map(|s| s.parse().expect("valid label"))
}
