use num_complex::Complex64 as C64;

use super::matrix::{Matrix2, I, ONE, ZERO};
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::tolerance::{EPS_HERM, EPS_UNIT};

/// A Hermitian 2×2 operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observable {
    matrix: Matrix2,
}

impl Observable {
    pub fn new(matrix: Matrix2) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite("observable matrix"));
        }
        let residual = matrix.hermiticity_residual();
        if residual >= EPS_HERM {
            return Err(Error::NotHermitian { residual });
        }
        Ok(Self { matrix })
    }

    /// `c0·I + cx·σ_x + cy·σ_y + cz·σ_z`; Hermitian for any real coefficients.
    pub fn from_pauli(c0: f64, cx: f64, cy: f64, cz: f64) -> Result<Self> {
        if ![c0, cx, cy, cz].iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite("Pauli coefficients"));
        }
        Ok(Self {
            matrix: Matrix2::new([
                [C64::new(c0 + cz, 0.0), C64::new(cx, -cy)],
                [C64::new(cx, cy), C64::new(c0 - cz, 0.0)],
            ]),
        })
    }

    #[inline]
    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn identity() -> Self {
        Self { matrix: Matrix2::identity() }
    }

    pub fn sigma_x() -> Self {
        Self { matrix: Matrix2::new([[ZERO, ONE], [ONE, ZERO]]) }
    }

    pub fn sigma_y() -> Self {
        Self { matrix: Matrix2::new([[ZERO, -I], [I, ZERO]]) }
    }

    pub fn sigma_z() -> Self {
        Self { matrix: Matrix2::new([[ONE, ZERO], [ZERO, -ONE]]) }
    }

    /// `U† · self · U`.
    pub fn conjugate_by(&self, gate: &UnitaryGate) -> Result<Self> {
        Self::new(gate.matrix().adjoint() * self.matrix * *gate.matrix())
    }
}

/// A unitary 2×2 gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitaryGate {
    matrix: Matrix2,
}

impl UnitaryGate {
    pub fn new(matrix: Matrix2) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite("gate matrix"));
        }
        let residual = (matrix * matrix.adjoint()).max_diff(&Matrix2::identity());
        if residual >= EPS_UNIT {
            return Err(Error::NotUnitary { residual });
        }
        Ok(Self { matrix })
    }

    #[inline]
    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn identity() -> Self {
        Self { matrix: Matrix2::identity() }
    }

    pub fn apply(&self, state: &StateVector) -> StateVector {
        StateVector::from_unit(self.matrix.apply(state.amplitudes()))
    }

    pub fn adjoint(&self) -> Self {
        Self { matrix: self.matrix.adjoint() }
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(&self, other: &UnitaryGate) -> Self {
        Self { matrix: self.matrix * other.matrix }
    }
}
