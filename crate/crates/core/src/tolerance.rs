//! Shared numerical tolerances.

/// All thresholds the library compares against, in one record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Normalization residual of a state, and phase-insensitive equality.
    pub norm: f64,
    /// Max element of `M − M†` for observables.
    pub herm: f64,
    /// Max element of `U·U† − I` for gates.
    pub unit: f64,
    /// Variance clamp and uncertainty saturation threshold.
    pub var: f64,
    /// Overlap deviation from 1/2 accepted as complementary.
    pub comp: f64,
}

pub const EPS_NORM: f64 = 1e-12;
pub const EPS_HERM: f64 = 1e-12;
pub const EPS_UNIT: f64 = 1e-12;
pub const EPS_VAR: f64 = 1e-10;
pub const EPS_COMP: f64 = 1e-10;

pub const TOLERANCES: Tolerances = Tolerances {
    norm: EPS_NORM,
    herm: EPS_HERM,
    unit: EPS_UNIT,
    var: EPS_VAR,
    comp: EPS_COMP,
};

/// χ² critical value, one degree of freedom, 1% significance.
pub const CHI2_CRIT_1DOF_1PCT: f64 = 6.635;
