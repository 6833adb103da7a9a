//! Beam splitter, phase shifter, balanced states, and the path and wave
//! observables of an ideal two-arm interferometer.

use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use crate::error::{Error, Result};
use crate::par;
use crate::qalgebra::{bloch_vector, pauli_decompose, BlochVector, Matrix2, Observable, StateVector, UnitaryGate, C64};

/// A finite phase in radians. Any real is accepted; periodicity is handled
/// by the trigonometry.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PhaseAngle(f64);

impl PhaseAngle {
    pub fn new(radians: f64) -> Result<Self> {
        if radians.is_finite() {
            Ok(Self(radians))
        } else {
            Err(Error::NonFinite("phase angle"))
        }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        Self::new(degrees.to_radians())
    }

    pub const ZERO: PhaseAngle = PhaseAngle(0.0);

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Representative in `(−π, π]`.
    pub fn canonical(self) -> Self {
        let mut r = self.0.rem_euclid(TAU);
        if r > PI {
            r -= TAU;
        }
        Self(r)
    }
}

/// `n` evenly spaced phases from `start` to `end` inclusive; `n = 1` gives `[start]`.
pub fn linspace(start: f64, end: f64, n: usize) -> Result<Vec<PhaseAngle>> {
    if n == 0 {
        return Err(Error::EmptyGrid);
    }
    if n == 1 {
        return Ok(vec![PhaseAngle::new(start)?]);
    }
    let step = (end - start) / (n - 1) as f64;
    (0..n)
        .map(|k| if k == n - 1 { PhaseAngle::new(end) } else { PhaseAngle::new(start + step * k as f64) })
        .collect()
}

/// The path observable `σ_z`: `+1` on the upper arm, `−1` on the lower.
pub fn path_operator() -> Observable {
    Observable::sigma_z()
}

/// `exp(−i σ_z φ/2) = diag(e^{−iφ/2}, e^{+iφ/2})`.
pub fn phase_shifter(phi: PhaseAngle) -> UnitaryGate {
    let half = 0.5 * phi.value();
    let m = Matrix2::new([
        [C64::from_polar(1.0, -half), C64::new(0.0, 0.0)],
        [C64::new(0.0, 0.0), C64::from_polar(1.0, half)],
    ]);
    UnitaryGate::new(m).expect("diagonal phases are unitary")
}

/// The 50/50 splitter `(1/√2)·[[1, 1], [−1, 1]]`.
///
/// Chosen so that `B† σ_z B = σ_x`, i.e. a path measurement behind the
/// splitter is the wave measurement with offset `φ₀ = 0`.
pub fn beam_splitter() -> UnitaryGate {
    rotation_splitter(std::f64::consts::FRAC_PI_4)
}

/// Real rotation `[[cos θ, sin θ], [−sin θ, cos θ]]`; `θ = π/4` is the
/// balanced splitter. Other angles model a mis-set splitter.
pub fn rotation_splitter(theta: f64) -> UnitaryGate {
    let (s, c) = theta.sin_cos();
    UnitaryGate::new(Matrix2::from_real([[c, s], [-s, c]])).expect("rotation is unitary")
}

/// `(e^{−iφ/2}, e^{+iφ/2}) / √2`: equal weight in both arms, relative phase `φ`.
pub fn balanced_state(phi: PhaseAngle) -> StateVector {
    let half = 0.5 * phi.value();
    StateVector::new(C64::from_polar(FRAC_1_SQRT_2, -half), C64::from_polar(FRAC_1_SQRT_2, half))
        .expect("balanced amplitudes have unit norm")
}

/// `cos φ₀ σ_x + sin φ₀ σ_y`.
pub fn wave_operator(phi0: PhaseAngle) -> Observable {
    let (s, c) = phi0.value().sin_cos();
    Observable::from_pauli(0.0, c, s, 0.0).expect("finite coefficients")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub phi: PhaseAngle,
    pub w_expect: f64,
    pub p_expect: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub points: Vec<ScanPoint>,
}

impl ScanResult {
    /// `max |⟨W⟩|` over the scan.
    pub fn visibility(&self) -> f64 {
        self.points.iter().map(|p| p.w_expect.abs()).fold(0.0, f64::max)
    }
}

/// `⟨φ|W(φ₀)|φ⟩` and `⟨φ|P|φ⟩` for every `φ` in `grid`.
///
/// Expectations are taken as Pauli-coefficient · Bloch-vector dot products,
/// not through matrix-vector products.
pub fn interference_scan(phi0: PhaseAngle, grid: &[PhaseAngle]) -> Result<ScanResult> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let w = pauli_vector(&wave_operator(phi0));
    let p = pauli_vector(&path_operator());
    let points = par::map(grid, |&phi| {
        let r = bloch_vector(&balanced_state(phi));
        // |1/√2|² rounds to 0.5 + ulp; the exact value is bounded by 1
        ScanPoint { phi, w_expect: w.dot(&r).clamp(-1.0, 1.0), p_expect: p.dot(&r) }
    });
    Ok(ScanResult { points })
}

fn pauli_vector(obs: &Observable) -> BlochVector {
    let (_, x, y, z) = pauli_decompose(obs);
    BlochVector { x, y, z }
}

/// `B · Φ(φ) · B` applied to the lower-port input `|ψ_-⟩`.
pub fn pipeline_output(splitter: &UnitaryGate, phi: PhaseAngle) -> StateVector {
    let inside = splitter.apply(&StateVector::down());
    splitter.apply(&phase_shifter(phi).apply(&inside))
}
