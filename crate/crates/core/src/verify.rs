//! Self-check suite behind `twopath verify`.
//!
//! Each check is named by the invariant it tests. The setup carries the
//! beam splitter and an optional wave-basis override so faults can be
//! injected and shown to be caught.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt::Write as _;

use crate::complementarity::{
    check_mutual_zero_expectation, derive_wave_eigenbasis, is_complementary, observable_from_eigensystem,
    tilted_basis, EigenBasis,
};
use crate::error::Result;
use crate::interferometer::{
    balanced_state, beam_splitter, interference_scan, linspace, path_operator, pipeline_output,
    rotation_splitter, PhaseAngle,
};
use crate::measurement::{
    sequential_experiment_partitioned, variance_standard_error, Order, RandomStream,
};
use crate::qalgebra::{
    expectation, pauli_decompose, variance, Eigensystem, Observable, StateVector, UnitaryGate, C64,
};
use crate::tolerance::{EPS_COMP, EPS_HERM, EPS_VAR};
use crate::uncertainty::{general_bound_rhs, report_for, robertson_bound, sensitivity};

/// Deliberate defects for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Splitter rotated away from 50/50.
    BeamSplitter,
    /// Wave basis replaced by one tilted 60° from the path axis.
    NonComplementaryBasis,
}

#[derive(Debug, Clone)]
pub struct VerifySetup {
    pub beam_splitter: UnitaryGate,
    pub wave_basis_override: Option<EigenBasis>,
    pub phi0: PhaseAngle,
    /// Monte Carlo checks run only when set.
    pub shots: Option<u64>,
    pub seed: u64,
    pub workers: usize,
}

impl Default for VerifySetup {
    fn default() -> Self {
        Self {
            beam_splitter: beam_splitter(),
            wave_basis_override: None,
            phi0: PhaseAngle::ZERO,
            shots: None,
            seed: 0,
            workers: 1,
        }
    }
}

impl VerifySetup {
    pub fn with_fault(mut self, fault: Fault) -> Self {
        match fault {
            Fault::BeamSplitter => self.beam_splitter = rotation_splitter(FRAC_PI_4 + 0.1),
            Fault::NonComplementaryBasis => self.wave_basis_override = Some(tilted_basis(PI / 3.0)),
        }
        self
    }

    fn wave_basis(&self, phi0: PhaseAngle) -> EigenBasis {
        self.wave_basis_override.unwrap_or_else(|| derive_wave_eigenbasis(phi0))
    }

    fn wave(&self, phi0: PhaseAngle) -> Result<Observable> {
        observable_from_eigensystem(&self.wave_basis(phi0))
    }

    fn offsets(&self) -> Vec<PhaseAngle> {
        let mut v = vec![self.phi0];
        v.extend([0.0, 0.7, -2.3, FRAC_PI_2, PI, 5.9].map(|x| PhaseAngle::new(x).expect("finite")));
        v
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {}  ({})", c.name, c.detail);
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }

    fn push(&mut self, name: &'static str, worst: f64, tol: f64) {
        self.checks.push(CheckResult {
            name,
            passed: worst.is_finite() && worst < tol,
            detail: format!("max residual {worst:.3e}, tolerance {tol:.0e}"),
        });
    }

    fn push_result(&mut self, name: &'static str, r: Result<(f64, f64)>) {
        match r {
            Ok((worst, tol)) => self.push(name, worst, tol),
            Err(e) => self.checks.push(CheckResult { name, passed: false, detail: e.to_string() }),
        }
    }
}

fn scan_grid() -> Vec<PhaseAngle> {
    linspace(-PI, PI, 257).expect("non-empty grid")
}

fn sweep64() -> impl Iterator<Item = PhaseAngle> {
    (0..64).map(|k| PhaseAngle::new(-PI + k as f64 * TAU / 64.0).expect("finite"))
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates as a failure
    it.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}

pub fn run(setup: &VerifySetup) -> VerifyReport {
    let mut report = VerifyReport::default();
    let p = path_operator();
    let offsets = setup.offsets();
    let grid = scan_grid();

    report.push_result("path and wave observables are Hermitian with eigenvalues ±1", (|| {
        let mut worst = p.matrix().hermiticity_residual();
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            worst = worst.max(w.matrix().hermiticity_residual());
            let sys = Eigensystem::of(&w)?;
            worst = worst.max((sys.values[0] - 1.0).abs()).max((sys.values[1] + 1.0).abs());
        }
        Ok((worst, EPS_HERM))
    })());

    let conj = setup.beam_splitter.matrix().adjoint() * *p.matrix() * *setup.beam_splitter.matrix();
    report.push("B†σzB = σx", conj.max_diff(Observable::sigma_x().matrix()), 1e-12);

    {
        let fringe: Vec<f64> =
            grid.iter().map(|&phi| expectation(&p, &pipeline_output(&setup.beam_splitter, phi))).collect();
        let hi = fringe.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = fringe.iter().cloned().fold(f64::INFINITY, f64::min);
        report.push("pipeline B·Φ(φ)·B fringe has unit visibility", (0.5 * (hi - lo) - 1.0).abs(), 1e-9);
    }

    report.push_result("path expectation vanishes on wave eigenstates", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let (a, b, _, _) = check_mutual_zero_expectation(&p, &setup.wave_basis(phi0))?;
            worst = worst.max(a.abs()).max(b.abs());
        }
        Ok((worst, 1e-12))
    })());

    report.push_result("wave expectation vanishes on path eigenstates", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let (_, _, c, d) = check_mutual_zero_expectation(&p, &setup.wave_basis(phi0))?;
            worst = worst.max(c.abs()).max(d.abs());
        }
        Ok((worst, 1e-12))
    })());

    report.push(
        "path and wave bases are mutually unbiased",
        max_of(offsets.iter().map(|&phi0| is_complementary(&EigenBasis::path(), &setup.wave_basis(phi0)).max_deviation)),
        EPS_COMP,
    );

    report.push(
        "wave eigenbasis matches (±e^{-iφ₀/2}, e^{iφ₀/2})/√2",
        max_of(offsets.iter().map(|&phi0| {
            let basis = setup.wave_basis(phi0);
            let h = 0.5 * phi0.value();
            let plus = [C64::from_polar(FRAC_1_SQRT_2, -h), C64::from_polar(FRAC_1_SQRT_2, h)];
            let minus = [-plus[0], plus[1]];
            let dev = |s: &StateVector, t: [C64; 2]| {
                let a = s.amplitudes();
                1.0 - (a[0].conj() * t[0] + a[1].conj() * t[1]).norm()
            };
            dev(&basis.plus, plus).max(dev(&basis.minus, minus))
        })),
        1e-12,
    );

    report.push_result("wave operator decomposes as cos φ₀ σx + sin φ₀ σy", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let (c0, cx, cy, cz) = pauli_decompose(&setup.wave(phi0)?);
            let (s, c) = phi0.value().sin_cos();
            worst = worst.max(c0.abs()).max((cx - c).abs()).max((cy - s).abs()).max(cz.abs());
        }
        Ok((worst, 1e-12))
    })());

    report.push_result("interference scan ⟨W⟩ = cos(φ − φ₀) and ⟨P⟩ = 0", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            let scan = interference_scan(phi0, &grid)?;
            for pt in &scan.points {
                let direct = expectation(&w, &balanced_state(pt.phi));
                let analytic = (pt.phi.value() - phi0.value()).cos();
                worst = worst
                    .max((direct - analytic).abs())
                    .max((pt.w_expect - direct).abs())
                    .max(pt.p_expect.abs());
            }
        }
        Ok((worst, 1e-12))
    })());

    report.push_result("balanced states: ΔP = 1, ΔW = |sin(φ − φ₀)|, ΔP·ΔW = Robertson bound", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            for &phi in &grid {
                let r = report_for(&p, &w, &balanced_state(phi), phi, phi0);
                let s = (phi.value() - phi0.value()).sin().abs();
                worst = worst.max((r.delta_p - 1.0).abs()).max((r.delta_w - s).abs()).max(r.gap.abs());
            }
        }
        Ok((worst, EPS_VAR))
    })());

    report.push_result("uncertainty bound and ΔW vanish at wave eigenstates", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            for k in -2..=2 {
                let phi = PhaseAngle::new(phi0.value() + k as f64 * PI)?;
                let r = report_for(&p, &w, &balanced_state(phi), phi, phi0);
                worst = worst.max(r.bound).max(r.delta_w);
            }
        }
        Ok((worst, 1e-12))
    })());

    report.push_result("fringe sensitivity |d⟨W⟩/dφ| equals ΔW", (|| {
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            for phi in sweep64() {
                let dw = report_for(&p, &w, &balanced_state(phi), phi, phi0).delta_w;
                worst = worst.max((sensitivity(phi, phi0) - dw).abs());
            }
        }
        Ok((worst, 1e-12))
    })());

    report.push_result("central-difference fringe slope matches ΔW", (|| {
        let h = 1e-5;
        let mut worst: f64 = 0.0;
        for &phi0 in &offsets {
            let w = setup.wave(phi0)?;
            for phi in sweep64() {
                let fwd = expectation(&w, &balanced_state(PhaseAngle::new(phi.value() + h)?));
                let back = expectation(&w, &balanced_state(PhaseAngle::new(phi.value() - h)?));
                let fd = ((fwd - back) / (2.0 * h)).abs();
                let dw = report_for(&p, &w, &balanced_state(phi), phi, phi0).delta_w;
                worst = worst.max((fd - dw).abs());
            }
        }
        Ok((worst, 1e-6))
    })());

    {
        let mut rng = RandomStream::new(setup.seed ^ 0x5EED);
        let mut worst: f64 = 0.0;
        for _ in 0..10_000 {
            let phi0 = PhaseAngle::new((rng.next_uniform() * 2.0 - 1.0) * PI).expect("finite");
            let s = random_state(&mut rng);
            let w = crate::interferometer::wave_operator(phi0);
            worst = worst.max((general_bound_rhs(phi0, &s) - robertson_bound(&p, &w, &s)).abs());
        }
        report.push("closed-form bound agrees with commutator route", worst, 1e-12);
    }

    {
        let mut rng = RandomStream::new(setup.seed ^ 0xB0B);
        let mut worst: f64 = 0.0;
        for _ in 0..10_000 {
            let a = random_hermitian(&mut rng);
            let b = random_hermitian(&mut rng);
            let s = random_state(&mut rng);
            let bound = robertson_bound(&a, &b, &s);
            // violation amount, positive only if the inequality fails
            worst = worst.max(bound * bound - variance(&a, &s) * variance(&b, &s));
        }
        report.push("Robertson inequality on random observables", worst, 1e-10);
    }

    if let Some(shots) = setup.shots {
        monte_carlo_checks(setup, shots, &mut report);
    }
    report
}

fn monte_carlo_checks(setup: &VerifySetup, shots: u64, report: &mut VerifyReport) {
    let points = [(0.9, setup.phi0.value()), (FRAC_PI_2, 0.0), (2.2, -0.4)];
    let mut chi2_ok = true;
    let mut worst_chi2: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    let mut error = None;
    for (i, &(phi, phi0)) in points.iter().enumerate() {
        for order in Order::BOTH {
            let phi = PhaseAngle::new(phi).expect("finite");
            let phi0 = PhaseAngle::new(phi0).expect("finite");
            let seed = setup.seed.wrapping_add(i as u64 * 2 + order as u64);
            let stats = match sequential_experiment_partitioned(order, phi, phi0, shots, seed, setup.workers) {
                Ok(s) => s,
                Err(e) => {
                    error = Some(e.to_string());
                    continue;
                }
            };
            let (chi2, pass) = stats.second_uniformity();
            chi2_ok &= pass;
            worst_chi2 = worst_chi2.max(chi2);
            let m = match order {
                Order::PThenW => 0.0,
                Order::WThenP => (phi.value() - phi0.value()).cos(),
            };
            // eigenstate runs have zero spread; allow rounding only
            let allowed = 4.0 * variance_standard_error(m, shots) + 1e-12;
            worst_ratio = worst_ratio.max((stats.first_variance - (1.0 - m * m)).abs() / allowed);
        }
    }
    if let Some(e) = error {
        report.checks.push(CheckResult { name: "Monte Carlo sequential runs", passed: false, detail: e });
        return;
    }
    report.checks.push(CheckResult {
        name: "second measurement is randomized (χ² uniformity, 1%)",
        passed: chi2_ok,
        detail: format!("max χ² {worst_chi2:.3}, critical 6.635"),
    });
    report.checks.push(CheckResult {
        name: "first-measurement variance within 4 standard errors",
        passed: worst_ratio < 1.0,
        detail: format!("worst deviation {:.3} of the 4σ band", worst_ratio),
    });
}

/// `c0 I + c·σ` with coefficients uniform in `[−2, 2]`.
pub(crate) fn random_hermitian(rng: &mut RandomStream) -> Observable {
    let mut c = || 4.0 * rng.next_uniform() - 2.0;
    Observable::from_pauli(c(), c(), c(), c()).expect("finite coefficients")
}

pub(crate) fn random_state(rng: &mut RandomStream) -> StateVector {
    loop {
        let mut c = || 2.0 * rng.next_uniform() - 1.0;
        let (a, b) = (C64::new(c(), c()), C64::new(c(), c()));
        if let Ok(s) = StateVector::normalized(a, b) {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_setup_passes() {
        let r = run(&VerifySetup::default());
        assert!(r.all_passed(), "{}", r.render());
        assert!(r.checks.len() >= 12);
    }

    #[test]
    fn perturbed_splitter_is_caught() {
        let r = run(&VerifySetup::default().with_fault(Fault::BeamSplitter));
        let failed: Vec<_> = r.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"B†σzB = σx"), "{failed:?}");
    }

    #[test]
    fn tilted_basis_is_caught() {
        let r = run(&VerifySetup::default().with_fault(Fault::NonComplementaryBasis));
        let failed: Vec<_> = r.failures().map(|c| c.name).collect();
        assert!(failed.contains(&"path and wave bases are mutually unbiased"), "{failed:?}");
        assert!(failed.contains(&"path expectation vanishes on wave eigenstates"));
    }
}
