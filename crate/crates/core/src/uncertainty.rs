//! Heisenberg–Robertson bound for the path/wave pair, and the matching
//! fringe sensitivity.

use crate::interferometer::{balanced_state, path_operator, wave_operator, PhaseAngle};
use crate::qalgebra::{bloch_vector, commutator, matrix_expectation, std_dev, Observable, StateVector, C64};
use crate::tolerance::EPS_VAR;

/// `½ |⟨ψ|[A, B]|ψ⟩|`.
pub fn robertson_bound(a: &Observable, b: &Observable, state: &StateVector) -> f64 {
    0.5 * matrix_expectation(&commutator(a, b), state).norm()
}

/// `|⟨cos φ₀ σ_y − sin φ₀ σ_x⟩|` for any pure state.
///
/// Closed form of `½|⟨[σ_z, W(φ₀)]⟩|`, evaluated from the Bloch vector
/// instead of a commutator.
pub fn general_bound_rhs(phi0: PhaseAngle, state: &StateVector) -> f64 {
    let (s, c) = phi0.value().sin_cos();
    let r = bloch_vector(state);
    (c * r.y - s * r.x).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub phi: PhaseAngle,
    pub phi0: PhaseAngle,
    pub delta_p: f64,
    pub delta_w: f64,
    pub product: f64,
    pub bound: f64,
    /// `product − bound`.
    pub gap: f64,
    pub saturated: bool,
}

/// Path and wave spreads on the balanced state `|φ⟩` against the Robertson
/// bound for `(P, W(φ₀))`.
pub fn duality_report(phi: PhaseAngle, phi0: PhaseAngle) -> UncertaintyReport {
    report_for(&path_operator(), &wave_operator(phi0), &balanced_state(phi), phi, phi0)
}

pub(crate) fn report_for(
    p: &Observable,
    w: &Observable,
    state: &StateVector,
    phi: PhaseAngle,
    phi0: PhaseAngle,
) -> UncertaintyReport {
    let delta_p = std_dev(p, state);
    let delta_w = std_dev(w, state);
    let product = delta_p * delta_w;
    let bound = robertson_bound(p, w, state);
    let gap = product - bound;
    UncertaintyReport { phi, phi0, delta_p, delta_w, product, bound, gap, saturated: gap.abs() < EPS_VAR }
}

/// Signed slope `d⟨W(φ₀)⟩/dφ` of the fringe.
///
/// The phase shifter is generated by `G = σ_z/2`, so the slope is
/// `⟨i[G, W]⟩` on the balanced state.
pub fn fringe_slope(phi: PhaseAngle, phi0: PhaseAngle) -> f64 {
    let generator = path_operator();
    let c = commutator(&generator, &wave_operator(phi0));
    (C64::new(0.0, 0.5) * matrix_expectation(&c, &balanced_state(phi))).re
}

/// `|d⟨W⟩/dφ|`, the interferometric sensitivity.
pub fn sensitivity(phi: PhaseAngle, phi0: PhaseAngle) -> f64 {
    fringe_slope(phi, phi0).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    fn pa(x: f64) -> PhaseAngle {
        PhaseAngle::new(x).unwrap()
    }

    #[test]
    fn bound_vanishes_on_path_eigenstate() {
        assert_eq!(robertson_bound(&Observable::sigma_z(), &Observable::sigma_x(), &StateVector::up()), 0.0);
        assert_eq!(general_bound_rhs(PhaseAngle::ZERO, &StateVector::up()), 0.0);
    }

    #[test]
    fn bound_on_balanced_state_is_abs_sin() {
        for phi in [-2.0, -0.4, 0.9, 2.5] {
            let s = balanced_state(pa(phi));
            let b = robertson_bound(&path_operator(), &wave_operator(PhaseAngle::ZERO), &s);
            assert!((b - phi.sin().abs()).abs() < 1e-12);
            assert!((general_bound_rhs(PhaseAngle::ZERO, &s) - phi.sin().abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn report_at_maximal_uncertainty() {
        let r = duality_report(pa(FRAC_PI_2), PhaseAngle::ZERO);
        assert!((r.delta_p - 1.0).abs() < 1e-12);
        assert!((r.delta_w - 1.0).abs() < 1e-12);
        assert!((r.bound - 1.0).abs() < 1e-12);
        assert!(r.saturated);
    }

    #[test]
    fn report_at_wave_eigenstate() {
        let r = duality_report(pa(0.8), pa(0.8));
        assert!(r.delta_w < 1e-12 && r.bound < 1e-12 && r.gap.abs() < 1e-12);
        assert!(r.saturated);
    }

    #[test]
    fn report_at_pi_over_six() {
        let r = duality_report(pa(FRAC_PI_6), PhaseAngle::ZERO);
        assert!((r.delta_w - 0.5).abs() < 1e-12);
        assert!((r.bound - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sensitivity_extremes() {
        assert!((sensitivity(pa(FRAC_PI_2), PhaseAngle::ZERO) - 1.0).abs() < 1e-12);
        assert!(sensitivity(pa(1.3), pa(1.3)) < 1e-12);
        // d cos(φ)/dφ = −sin φ
        assert!((fringe_slope(pa(0.5), PhaseAngle::ZERO) + 0.5f64.sin()).abs() < 1e-12);
    }
}
