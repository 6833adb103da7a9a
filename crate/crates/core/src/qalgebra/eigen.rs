//! Closed-form eigendecomposition of Hermitian 2×2 matrices.
//!
//! Writing `H = c0·I + c·σ` with `c = |c|·n`, the eigenvalues are `c0 ± |c|`
//! and the eigenvectors are the Bloch-sphere points `±n`. Each eigenvector has
//! its first non-negligible component made real and positive.

use num_complex::Complex64 as C64;

use super::observable::Observable;
use super::pauli_decompose;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::tolerance::EPS_HERM;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem {
    /// Larger eigenvalue first.
    pub values: [f64; 2],
    pub vectors: [StateVector; 2],
}

impl Eigensystem {
    pub fn of(obs: &Observable) -> Result<Self> {
        let (c0, cx, cy, cz) = pauli_decompose(obs);
        let r = (cx * cx + cy * cy + cz * cz).sqrt();
        if r < EPS_HERM {
            return Err(Error::Degenerate { gap: 2.0 * r });
        }
        let n = [cx / r, cy / r, cz / r];
        Ok(Self {
            values: [c0 + r, c0 - r],
            vectors: [bloch_point(n), bloch_point([-n[0], -n[1], -n[2]])],
        })
    }

    /// Rejects anything whose spectrum is not `{+1, −1}`.
    pub fn dichotomic(obs: &Observable) -> Result<Self> {
        let sys = Self::of(obs)?;
        let [plus, minus] = sys.values;
        if (plus - 1.0).abs() >= EPS_HERM || (minus + 1.0).abs() >= EPS_HERM {
            return Err(Error::NotDichotomic { plus, minus });
        }
        Ok(sys)
    }
}

/// Pure state with unit Bloch vector `n`. Uses whichever of the two
/// equivalent column forms avoids cancellation near the poles.
fn bloch_point(n: [f64; 3]) -> StateVector {
    let [x, y, z] = n;
    let (a, b) = if z >= 0.0 {
        (C64::new(1.0 + z, 0.0), C64::new(x, y))
    } else {
        (C64::new(x, -y), C64::new(1.0 - z, 0.0))
    };
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    StateVector::from_unit([a / norm, b / norm]).canonical_phase()
}
