use crate::error::{Error, Result};
use crate::tolerance::CHI2_CRIT_1DOF_1PCT;

/// Tally of `+1` and `−1` outcomes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub plus: u64,
    pub minus: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.plus + self.minus
    }

    #[inline]
    pub fn record(&mut self, outcome: f64) {
        if outcome > 0.0 {
            self.plus += 1;
        } else {
            self.minus += 1;
        }
    }

    pub fn merge(self, other: Counts) -> Counts {
        Counts { plus: self.plus + other.plus, minus: self.minus + other.minus }
    }

    /// Sample mean of the ±1 outcomes.
    pub fn mean(&self) -> f64 {
        let n = self.total();
        if n == 0 {
            return 0.0;
        }
        (self.plus as f64 - self.minus as f64) / n as f64
    }

    /// Unbiased sample variance of the ±1 outcomes, `4 n₊ n₋ / (n (n − 1))`.
    pub fn variance(&self) -> f64 {
        let n = self.total();
        if n < 2 {
            return 0.0;
        }
        4.0 * self.plus as f64 * self.minus as f64 / (n as f64 * (n - 1) as f64)
    }
}

/// One-degree-of-freedom χ² against a fair split. Passes below 6.635 (1%).
pub fn uniformity_test(counts: (u64, u64)) -> Result<(f64, bool)> {
    let (a, b) = counts;
    let total = a + b;
    if total == 0 {
        return Err(Error::ZeroShots);
    }
    let expected = total as f64 / 2.0;
    let chi2 = [a, b].iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum::<f64>();
    Ok((chi2, chi2 < CHI2_CRIT_1DOF_1PCT))
}

/// Standard error of the mean of `n` ±1 outcomes with true mean `m`.
pub fn mean_standard_error(m: f64, n: u64) -> f64 {
    ((1.0 - m * m).max(0.0) / n as f64).sqrt()
}

/// Standard error of the sample variance of `n` ±1 outcomes with true mean `m`.
///
/// The sample variance is `1 − m̂²` up to an `O(1/n)` factor. With
/// `m̂ = m + e` and `Var(e) = v = (1 − m²)/n`, the spread of `m̂²` is
/// `4m²v + 2v²`. The second term keeps the error nonzero at `m = 0`,
/// where the first-order delta method gives nothing.
pub fn variance_standard_error(m: f64, n: u64) -> f64 {
    let v = (1.0 - m * m).max(0.0) / n as f64;
    (4.0 * m * m * v + 2.0 * v * v).sqrt()
}
