#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twopath::interferometer::PhaseAngle;
use twopath::qalgebra::{Matrix2, Observable, StateVector, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pa(x: f64) -> PhaseAngle {
    PhaseAngle::new(x).unwrap()
}

pub fn random_angle(r: &mut ChaCha8Rng) -> PhaseAngle {
    pa(r.random_range(-std::f64::consts::PI..std::f64::consts::PI))
}

fn gauss_c(r: &mut ChaCha8Rng) -> C64 {
    C64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))
}

/// Random Hermitian matrix assembled entry by entry (not via Pauli coefficients).
pub fn random_hermitian(r: &mut ChaCha8Rng) -> Observable {
    let d0 = r.random_range(-2.0..2.0);
    let d1 = r.random_range(-2.0..2.0);
    let off = gauss_c(r) * 2.0;
    Observable::new(Matrix2::new([[C64::new(d0, 0.0), off], [off.conj(), C64::new(d1, 0.0)]])).unwrap()
}

pub fn random_state(r: &mut ChaCha8Rng) -> StateVector {
    loop {
        if let Ok(s) = StateVector::normalized(gauss_c(r), gauss_c(r)) {
            return s;
        }
    }
}

/// Σᵢⱼ s̄ᵢ Mᵢⱼ sⱼ written out term by term.
pub fn oracle_expectation(m: &Matrix2, s: &StateVector) -> C64 {
    let a = s.amplitudes();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..2 {
        for j in 0..2 {
            acc += a[i].conj() * m.get(i, j) * a[j];
        }
    }
    acc
}

/// Plain triple-loop matrix product.
pub fn oracle_matmul(a: &Matrix2, b: &Matrix2) -> [[C64; 2]; 2] {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[i][j] += a.get(i, k) * b.get(k, j);
            }
        }
    }
    out
}

pub fn max_abs_diff(a: &[[C64; 2]; 2], b: &[[C64; 2]; 2]) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a[i][j] - b[i][j]).norm());
        }
    }
    m
}
