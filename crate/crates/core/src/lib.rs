//! Ideal two-path interferometer as a verification library.
//!
//! The path observable is `σ_z` in the arm basis. The wave observable is
//! derived from the requirement that path eigenstates give a vanishing wave
//! expectation and vice versa, which pins it to `cos φ₀ σ_x + sin φ₀ σ_y`.
//! From there the crate evaluates the Heisenberg–Robertson relation on the
//! balanced-state manifold and samples sequential projective measurements to
//! show that each measurement randomizes the other.
//!
//! Modules, bottom-up:
//!
//! - [`qalgebra`]: 2×2 complex states, observables, unitaries, Pauli and Bloch
//!   decompositions, closed-form eigendecomposition.
//! - [`interferometer`]: beam splitter, phase shifter, balanced states, path and
//!   wave operators, interference scans.
//! - [`complementarity`]: wave eigenbasis from the zero-expectation constraint,
//!   spectral assembly, mutual-unbiasedness verdicts.
//! - [`uncertainty`]: Robertson bound, duality reports, fringe sensitivity.
//! - [`measurement`]: seeded counter-based RNG, Born-rule sampling, sequential
//!   experiments and χ² uniformity.
//! - [`verify`] and [`cli`]: the self-check suite and CSV front end.

pub mod cli;
pub mod complementarity;
pub mod error;
pub mod interferometer;
pub mod measurement;
pub mod par;
pub mod qalgebra;
pub mod tolerance;
pub mod uncertainty;
pub mod verify;

pub use error::{Error, Result};
pub use tolerance::{Tolerances, TOLERANCES};
