//! The wave eigenbasis as the solution of the complementarity constraint,
//! and verdicts on whether two bases are mutually unbiased.
//!
//! The constraint is `⟨ω|σ_z|ω⟩ = 0` on normalized `ω` together with
//! orthonormality of the pair `ω_±`. It fixes both amplitude moduli to
//! `1/√2` and leaves one relative phase free, which is the setup offset `φ₀`.

use crate::error::{Error, Result};
use crate::interferometer::{path_operator, PhaseAngle};
use crate::qalgebra::{expectation, Eigensystem, Matrix2, Observable, StateVector, C64};
use crate::tolerance::{EPS_COMP, EPS_NORM};

/// An orthonormal pair with eigenvalue labels `(+1, −1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenBasis {
    pub plus: StateVector,
    pub minus: StateVector,
    pub labels: (f64, f64),
}

impl EigenBasis {
    pub fn new(plus: StateVector, minus: StateVector) -> Result<Self> {
        let overlap = plus.inner(&minus).norm();
        if overlap >= EPS_NORM {
            return Err(Error::NotOrthonormal { overlap });
        }
        Ok(Self { plus, minus, labels: (1.0, -1.0) })
    }

    /// `{|ψ_+⟩, |ψ_-⟩}`, the eigenbasis of the path operator.
    pub fn path() -> Self {
        Self::new(StateVector::up(), StateVector::down()).expect("computational basis")
    }

    /// Eigenbasis of a ±1-valued observable, `plus` belonging to `+1`.
    pub fn of_observable(obs: &Observable) -> Result<Self> {
        let sys = Eigensystem::dichotomic(obs)?;
        Self::new(sys.vectors[0], sys.vectors[1])
    }

    pub fn vectors(&self) -> [StateVector; 2] {
        [self.plus, self.minus]
    }

    /// Same rays, vector by vector.
    pub fn same_rays(&self, other: &EigenBasis) -> bool {
        self.plus.same_ray(&other.plus) && self.minus.same_ray(&other.minus)
    }
}

/// Solves `{|a|² − |b|² = 0, |a|² + |b|² = 1}` for the squared moduli.
fn balanced_moduli() -> (f64, f64) {
    let m = [[1.0, -1.0], [1.0, 1.0]];
    let rhs = [0.0, 1.0];
    // Cramer's rule
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let u = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det;
    let v = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det;
    (u, v)
}

/// Wave eigenstates `|ω_±⟩` for offset `φ₀`.
///
/// `ω_+` takes the balanced moduli with relative phase `φ₀` split
/// symmetrically; `ω_-` is its orthogonal complement `(−b̄, ā)`. Both are
/// checked against the zero-path-expectation constraint before returning.
pub fn derive_wave_eigenbasis(phi0: PhaseAngle) -> EigenBasis {
    let (u, v) = balanced_moduli();
    let half = 0.5 * phi0.value();
    let a = C64::from_polar(u.sqrt(), -half);
    let b = C64::from_polar(v.sqrt(), half);
    let plus = StateVector::new(a, b).expect("moduli solve the normalization constraint");
    let minus = StateVector::new(-b.conj(), a.conj()).expect("complement of a unit vector");
    debug_assert!(expectation(&path_operator(), &plus).abs() < EPS_NORM);
    debug_assert!(expectation(&path_operator(), &minus).abs() < EPS_NORM);
    EigenBasis::new(plus, minus).expect("complement is orthogonal")
}

/// Recovers `φ₀ ∈ (−π, π]` from any state satisfying the balanced
/// constraint, such that `derive_wave_eigenbasis(φ₀).plus` is the same ray.
pub fn extract_wave_phase(state: &StateVector) -> Result<PhaseAngle> {
    let residual = expectation(&path_operator(), state).abs();
    if residual >= EPS_NORM {
        return Err(Error::Unbalanced { residual });
    }
    let [a, b] = state.amplitudes();
    PhaseAngle::new(b.arg() - a.arg()).map(PhaseAngle::canonical)
}

/// `w_+ |ω_+⟩⟨ω_+| + w_- |ω_-⟩⟨ω_-|`.
pub fn observable_from_eigensystem(basis: &EigenBasis) -> Result<Observable> {
    let overlap = basis.plus.inner(&basis.minus).norm();
    if overlap >= EPS_NORM {
        return Err(Error::NotOrthonormal { overlap });
    }
    let (wp, wm) = basis.labels;
    let m = projector(&basis.plus) * wp + projector(&basis.minus) * wm;
    // Outer products are Hermitian up to rounding in the diagonal imaginary parts.
    Observable::new(m)
}

fn projector(s: &StateVector) -> Matrix2 {
    let [a, b] = s.amplitudes();
    Matrix2::new([[a * a.conj(), a * b.conj()], [b * a.conj(), b * b.conj()]])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementarityVerdict {
    pub complementary: bool,
    /// Largest `| |⟨a_i|b_j⟩|² − 1/2 |` over the four pairs.
    pub max_deviation: f64,
}

/// Whether every outcome of one basis is equally likely given any
/// eigenstate of the other.
pub fn is_complementary(a: &EigenBasis, b: &EigenBasis) -> ComplementarityVerdict {
    let max_deviation = a
        .vectors()
        .iter()
        .flat_map(|x| b.vectors().map(|y| (x.overlap(&y) - 0.5).abs()))
        .fold(0.0, f64::max);
    ComplementarityVerdict { complementary: max_deviation < EPS_COMP, max_deviation }
}

/// `(⟨ω_+|P|ω_+⟩, ⟨ω_-|P|ω_-⟩, ⟨ψ_+|W|ψ_+⟩, ⟨ψ_-|W|ψ_-⟩)`, where `ψ_±`
/// are the eigenvectors of `path` and `W` is assembled from `wave_basis`.
pub fn check_mutual_zero_expectation(path: &Observable, wave_basis: &EigenBasis) -> Result<(f64, f64, f64, f64)> {
    let path_basis = EigenBasis::of_observable(path)?;
    let wave = observable_from_eigensystem(wave_basis)?;
    Ok((
        expectation(path, &wave_basis.plus),
        expectation(path, &wave_basis.minus),
        expectation(&wave, &path_basis.plus),
        expectation(&wave, &path_basis.minus),
    ))
}

/// Eigenbasis of `cos θ·σ_z + sin θ·σ_x`: the path basis rotated by `θ`
/// on the Bloch sphere. Complementary to the path basis only at `θ = π/2 mod π`.
pub fn tilted_basis(theta: f64) -> EigenBasis {
    let (s, c) = theta.sin_cos();
    let obs = Observable::from_pauli(0.0, s, 0.0, c).expect("finite coefficients");
    EigenBasis::of_observable(&obs).expect("unit Bloch vector has eigenvalues ±1")
}
