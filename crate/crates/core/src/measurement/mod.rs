//! Born-rule projective measurement and the two-order sequential experiment.
//!
//! Every measurement consumes exactly one uniform draw. Outcomes are `±1`
//! and the post-measurement state is the matching eigenvector.

mod rng;
mod stats;

pub use rng::RandomStream;
pub use stats::{mean_standard_error, uniformity_test, variance_standard_error, Counts};

use crate::error::{Error, Result};
use crate::interferometer::{balanced_state, path_operator, wave_operator, PhaseAngle};
use crate::par;
use crate::qalgebra::{Eigensystem, Observable, StateVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementRecord {
    pub outcome: f64,
    pub post_state: StateVector,
}

/// A ±1-valued observable with its eigenvectors precomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveMeasurement {
    plus: StateVector,
    minus: StateVector,
}

impl ProjectiveMeasurement {
    pub fn new(obs: &Observable) -> Result<Self> {
        let sys = Eigensystem::dichotomic(obs)?;
        Ok(Self { plus: sys.vectors[0], minus: sys.vectors[1] })
    }

    /// `|⟨e_+|ψ⟩|²`.
    pub fn probability_plus(&self, state: &StateVector) -> f64 {
        self.plus.overlap(state)
    }

    #[inline]
    pub fn sample(&self, state: &StateVector, rng: &mut RandomStream) -> MeasurementRecord {
        if rng.next_uniform() < self.probability_plus(state) {
            MeasurementRecord { outcome: 1.0, post_state: self.plus }
        } else {
            MeasurementRecord { outcome: -1.0, post_state: self.minus }
        }
    }
}

/// Measures `obs` on `state`. Rejects degenerate and non-±1 observables.
pub fn measure(obs: &Observable, state: &StateVector, rng: &mut RandomStream) -> Result<MeasurementRecord> {
    Ok(ProjectiveMeasurement::new(obs)?.sample(state, rng))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    PThenW,
    WThenP,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::PThenW, Order::WThenP];

    pub fn code(self) -> &'static str {
        match self {
            Order::PThenW => "pw",
            Order::WThenP => "wp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequentialStats {
    pub order: Order,
    pub shots: u64,
    pub first_counts: Counts,
    pub second_counts: Counts,
    pub first_mean: f64,
    pub first_variance: f64,
    pub second_mean: f64,
    pub second_variance: f64,
}

impl SequentialStats {
    pub fn from_counts(order: Order, first: Counts, second: Counts) -> Self {
        debug_assert_eq!(first.total(), second.total());
        Self {
            order,
            shots: first.total(),
            first_counts: first,
            second_counts: second,
            first_mean: first.mean(),
            first_variance: first.variance(),
            second_mean: second.mean(),
            second_variance: second.variance(),
        }
    }

    /// Pools two runs of the same order. Moments are recomputed from the
    /// summed counts, so pooling is exact and order-independent.
    pub fn merge(&self, other: &SequentialStats) -> SequentialStats {
        debug_assert_eq!(self.order, other.order);
        Self::from_counts(
            self.order,
            self.first_counts.merge(other.first_counts),
            self.second_counts.merge(other.second_counts),
        )
    }

    /// χ² uniformity of the second measurement.
    pub fn second_uniformity(&self) -> (f64, bool) {
        uniformity_test((self.second_counts.plus, self.second_counts.minus)).expect("shots ≥ 1")
    }
}

/// Prepares `|φ⟩` each shot, measures the first observable of `order`, then
/// the second on the post-measurement state.
pub fn sequential_experiment(
    order: Order,
    phi: PhaseAngle,
    phi0: PhaseAngle,
    shots: u64,
    rng: &mut RandomStream,
) -> Result<SequentialStats> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let (first, second) = run_shots(order, phi, phi0, shots, rng);
    Ok(SequentialStats::from_counts(order, first, second))
}

fn run_shots(order: Order, phi: PhaseAngle, phi0: PhaseAngle, shots: u64, rng: &mut RandomStream) -> (Counts, Counts) {
    let p = ProjectiveMeasurement::new(&path_operator()).expect("σ_z is ±1-valued");
    let w = ProjectiveMeasurement::new(&wave_operator(phi0)).expect("wave operator is ±1-valued");
    let (m1, m2) = match order {
        Order::PThenW => (p, w),
        Order::WThenP => (w, p),
    };
    let state = balanced_state(phi);
    let mut first = Counts::default();
    let mut second = Counts::default();
    for _ in 0..shots {
        let r1 = m1.sample(&state, rng);
        let r2 = m2.sample(&r1.post_state, rng);
        first.record(r1.outcome);
        second.record(r2.outcome);
    }
    (first, second)
}

/// Shot counts per worker: `shots` split as evenly as possible.
fn partition(shots: u64, workers: usize) -> Vec<u64> {
    let w = workers as u64;
    (0..w).map(|i| shots / w + u64::from(i < shots % w)).collect()
}

/// [`sequential_experiment`] split across `workers` independent sub-streams.
///
/// With one worker this is the single-stream reference run on
/// `RandomStream::new(seed)`. With more, worker `i` draws from
/// `RandomStream::new(seed).substream(i)` and counts are summed. The result
/// depends only on `(seed, workers)`, never on scheduling.
pub fn sequential_experiment_partitioned(
    order: Order,
    phi: PhaseAngle,
    phi0: PhaseAngle,
    shots: u64,
    seed: u64,
    workers: usize,
) -> Result<SequentialStats> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    if workers == 0 {
        return Err(Error::Config("worker count must be at least 1".into()));
    }
    let base = RandomStream::new(seed);
    if workers == 1 {
        return sequential_experiment(order, phi, phi0, shots, &mut base.clone());
    }
    let chunks = partition(shots, workers);
    let parts = par::map_range(workers, |i| {
        let mut rng = base.substream(i as u64);
        run_shots(order, phi, phi0, chunks[i], &mut rng)
    });
    let (first, second) = parts
        .into_iter()
        .fold((Counts::default(), Counts::default()), |(f, s), (f2, s2)| (f.merge(f2), s.merge(s2)));
    Ok(SequentialStats::from_counts(order, first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::Observable;

    fn pa(x: f64) -> PhaseAngle {
        PhaseAngle::new(x).unwrap()
    }

    #[test]
    fn certain_outcome() {
        let mut rng = RandomStream::new(1);
        for _ in 0..100 {
            let r = measure(&Observable::sigma_z(), &StateVector::up(), &mut rng).unwrap();
            assert_eq!(r.outcome, 1.0);
            assert!(r.post_state.same_ray(&StateVector::up()));
        }
    }

    #[test]
    fn consumes_one_draw() {
        let mut rng = RandomStream::new(5);
        measure(&Observable::sigma_x(), &StateVector::up(), &mut rng).unwrap();
        assert_eq!(rng.position(), 1);
    }

    #[test]
    fn degenerate_observable_is_rejected() {
        let mut rng = RandomStream::new(1);
        let err = measure(&Observable::identity(), &StateVector::up(), &mut rng).unwrap_err();
        assert!(matches!(err, Error::Degenerate { .. }));
        assert_eq!(rng.position(), 0);
    }

    #[test]
    fn zero_shots_rejected() {
        let mut rng = RandomStream::new(1);
        assert!(matches!(
            sequential_experiment(Order::PThenW, pa(0.0), pa(0.0), 0, &mut rng),
            Err(Error::ZeroShots)
        ));
        assert!(sequential_experiment_partitioned(Order::PThenW, pa(0.0), pa(0.0), 10, 1, 0).is_err());
    }

    #[test]
    fn partition_covers_all_shots() {
        assert_eq!(partition(10, 3), vec![4, 3, 3]);
        assert_eq!(partition(2, 4), vec![1, 1, 0, 0]);
        assert_eq!(partition(1_000_001, 8).iter().sum::<u64>(), 1_000_001);
    }

    #[test]
    fn single_worker_is_reference_run() {
        let a = sequential_experiment_partitioned(Order::WThenP, pa(0.4), pa(0.1), 5000, 17, 1).unwrap();
        let b = sequential_experiment(Order::WThenP, pa(0.4), pa(0.1), 5000, &mut RandomStream::new(17)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn partitioned_run_is_deterministic() {
        let a = sequential_experiment_partitioned(Order::PThenW, pa(0.9), pa(0.0), 20_003, 3, 4).unwrap();
        let b = sequential_experiment_partitioned(Order::PThenW, pa(0.9), pa(0.0), 20_003, 3, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.shots, 20_003);
        assert_eq!(a.second_counts.total(), 20_003);
    }

    #[test]
    fn merge_pools_counts() {
        let mut rng = RandomStream::new(8);
        let a = sequential_experiment(Order::PThenW, pa(0.2), pa(0.0), 100, &mut rng).unwrap();
        let b = sequential_experiment(Order::PThenW, pa(0.2), pa(0.0), 50, &mut rng).unwrap();
        let m = a.merge(&b);
        assert_eq!(m.shots, 150);
        assert_eq!(m.first_counts.plus, a.first_counts.plus + b.first_counts.plus);
    }
}
