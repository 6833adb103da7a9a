//! Exact two-dimensional Hilbert-space algebra.

mod eigen;
mod matrix;
mod observable;
mod state;

pub use eigen::Eigensystem;
pub use matrix::{Matrix2, C64};
pub use observable::{Observable, UnitaryGate};
pub use state::{BlochVector, StateVector};

use matrix::I;

/// `⟨ψ|M|ψ⟩` for an arbitrary matrix (complex in general).
pub fn matrix_expectation(m: &Matrix2, state: &StateVector) -> C64 {
    let amps = state.amplitudes();
    let mv = m.apply(amps);
    amps[0].conj() * mv[0] + amps[1].conj() * mv[1]
}

/// `⟨ψ|A|ψ⟩`; real because `A` is Hermitian.
pub fn expectation(obs: &Observable, state: &StateVector) -> f64 {
    matrix_expectation(obs.matrix(), state).re
}

/// `‖(A − ⟨A⟩)ψ‖`, the standard deviation `ΔA`.
///
/// Evaluated as the norm of the deviation vector rather than `√(⟨A²⟩ − ⟨A⟩²)`
/// so eigenstates give a spread at rounding level instead of its square root.
pub fn std_dev(obs: &Observable, state: &StateVector) -> f64 {
    let mean = C64::new(expectation(obs, state), 0.0);
    let amps = state.amplitudes();
    let av = obs.matrix().apply(amps);
    let d0 = av[0] - mean * amps[0];
    let d1 = av[1] - mean * amps[1];
    (d0.norm_sqr() + d1.norm_sqr()).sqrt()
}

/// `⟨A²⟩ − ⟨A⟩²`, never negative.
pub fn variance(obs: &Observable, state: &StateVector) -> f64 {
    let sd = std_dev(obs, state);
    (sd * sd).max(0.0)
}

/// `AB − BA`.
pub fn commutator(a: &Observable, b: &Observable) -> Matrix2 {
    let (a, b) = (*a.matrix(), *b.matrix());
    a * b - b * a
}

/// Coefficients `(c0, cx, cy, cz)` with `A = c0·I + cx·σ_x + cy·σ_y + cz·σ_z`.
pub fn pauli_decompose(obs: &Observable) -> (f64, f64, f64, f64) {
    let m = obs.matrix();
    let (m00, m01, m10, m11) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let c0 = 0.5 * (m00 + m11).re;
    let cz = 0.5 * (m00 - m11).re;
    let cx = 0.5 * (m01 + m10).re;
    // Tr(σ_y M)/2 = i(m01 − m10)/2
    let cy = (0.5 * I * (m01 - m10)).re;
    (c0, cx, cy, cz)
}

pub fn bloch_vector(state: &StateVector) -> BlochVector {
    BlochVector::from(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn expectation_of_eigenstate() {
        assert_eq!(expectation(&Observable::sigma_z(), &StateVector::up()), 1.0);
        assert_eq!(expectation(&Observable::sigma_z(), &StateVector::down()), -1.0);
    }

    #[test]
    fn variance_of_eigenstate_is_zero() {
        assert_eq!(variance(&Observable::sigma_z(), &StateVector::down()), 0.0);
    }

    #[test]
    fn commutator_zx_is_2i_sigma_y() {
        let c = commutator(&Observable::sigma_z(), &Observable::sigma_x());
        let expected = Observable::sigma_y().matrix().scale(C64::new(0.0, 2.0));
        assert_eq!(c.max_diff(&expected), 0.0);
        let c = commutator(&Observable::sigma_z(), &Observable::sigma_y());
        let expected = Observable::sigma_x().matrix().scale(C64::new(0.0, -2.0));
        assert_eq!(c.max_diff(&expected), 0.0);
    }

    #[test]
    fn self_commutator_vanishes() {
        let z = Observable::sigma_z();
        assert_eq!(commutator(&z, &z), Matrix2::zero());
    }

    #[test]
    fn identity_decomposes_to_c0() {
        assert_eq!(pauli_decompose(&Observable::identity()), (1.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn bloch_poles_and_equator() {
        let n = bloch_vector(&StateVector::up());
        assert_eq!((n.x, n.y, n.z), (0.0, 0.0, 1.0));
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let plus = StateVector::new(h, h).unwrap();
        let b = bloch_vector(&plus);
        assert!((b.x - 1.0).abs() < 1e-15 && b.y.abs() < 1e-15 && b.z.abs() < 1e-15);
    }
}
