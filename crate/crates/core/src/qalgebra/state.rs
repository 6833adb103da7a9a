use num_complex::Complex64 as C64;

use super::matrix::{ONE, ZERO};
use crate::error::{Error, Result};
use crate::tolerance::EPS_NORM;

/// A normalized pure state of a two-mode system.
///
/// Amplitude 0 is the upper arm `|ψ_+⟩`, amplitude 1 the lower arm `|ψ_-⟩`.
/// Constructors reject unnormalized input; use [`StateVector::normalized`]
/// to rescale on purpose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    amps: [C64; 2],
}

impl StateVector {
    pub fn new(a0: C64, a1: C64) -> Result<Self> {
        let amps = [a0, a1];
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let residual = (norm_sqr(&amps) - 1.0).abs();
        if residual >= EPS_NORM {
            return Err(Error::NotNormalized { residual });
        }
        Ok(Self { amps })
    }

    /// Rescales `(a0, a1)` to unit norm.
    pub fn normalized(a0: C64, a1: C64) -> Result<Self> {
        let amps = [a0, a1];
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let n = norm_sqr(&amps).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Self::new(a0 / n, a1 / n)
    }

    /// `|ψ_+⟩ = (1, 0)`, the upper path.
    pub const fn up() -> Self {
        Self { amps: [ONE, ZERO] }
    }

    /// `|ψ_-⟩ = (0, 1)`, the lower path.
    pub const fn down() -> Self {
        Self { amps: [ZERO, ONE] }
    }

    #[inline]
    pub fn amplitudes(&self) -> [C64; 2] {
        self.amps
    }

    #[inline]
    pub fn amplitude(&self, i: usize) -> C64 {
        self.amps[i]
    }

    /// Probability of finding the particle in arm `i`.
    pub fn probability(&self, i: usize) -> f64 {
        self.amps[i].norm_sqr()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amps[0].conj() * other.amps[0] + self.amps[1].conj() * other.amps[1]
    }

    /// `|⟨self|other⟩|²`.
    pub fn overlap(&self, other: &StateVector) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Ray equality: `|⟨s|t⟩| > 1 − ε_norm`, blind to global phase.
    pub fn same_ray(&self, other: &StateVector) -> bool {
        self.inner(other).norm() > 1.0 - EPS_NORM
    }

    /// Multiplies by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let p = C64::from_polar(1.0, theta);
        Self { amps: [self.amps[0] * p, self.amps[1] * p] }
    }

    /// Makes the first non-negligible amplitude real and positive.
    pub(crate) fn canonical_phase(&self) -> Self {
        let lead = if self.amps[0].norm() > EPS_NORM { self.amps[0] } else { self.amps[1] };
        self.with_global_phase(-lead.arg())
    }

    /// Constructs without validation; callers guarantee unit norm.
    pub(crate) fn from_unit(amps: [C64; 2]) -> Self {
        Self { amps }
    }
}

fn norm_sqr(a: &[C64; 2]) -> f64 {
    a[0].norm_sqr() + a[1].norm_sqr()
}

/// Point on the Bloch sphere, `(⟨σ_x⟩, ⟨σ_y⟩, ⟨σ_z⟩)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Balanced states lie on the equator.
    pub fn is_equatorial(&self) -> bool {
        self.z.abs() < EPS_NORM
    }
}

impl From<&StateVector> for BlochVector {
    fn from(s: &StateVector) -> Self {
        let [a, b] = s.amplitudes();
        let coherence = a.conj() * b;
        BlochVector {
            x: 2.0 * coherence.re,
            y: 2.0 * coherence.im,
            z: a.norm_sqr() - b.norm_sqr(),
        }
    }
}
