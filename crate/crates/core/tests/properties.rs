mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use common::*;
use proptest::prelude::*;
use rand::Rng;
use twopath::complementarity::*;
use twopath::interferometer::*;
use twopath::qalgebra::*;
use twopath::uncertainty::*;

fn angle() -> impl Strategy<Value = f64> {
    -50.0..50.0f64
}

fn hermitian() -> impl Strategy<Value = Observable> {
    prop::array::uniform4(-3.0..3.0f64).prop_map(|[a, b, c, d]| Observable::from_pauli(a, b, c, d).unwrap())
}

fn state() -> impl Strategy<Value = StateVector> {
    prop::array::uniform4(-1.0..1.0f64)
        .prop_filter("non-zero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-6)
        .prop_map(|[a, b, c, d]| StateVector::normalized(C64::new(a, b), C64::new(c, d)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn variance_is_nonnegative(h in hermitian(), s in state()) {
        prop_assert!(variance(&h, &s) >= 0.0);
    }

    #[test]
    fn eigenstates_have_zero_variance(h in hermitian()) {
        prop_assume!(Eigensystem::of(&h).is_ok());
        for v in Eigensystem::of(&h).unwrap().vectors {
            prop_assert!(variance(&h, &v) < 1e-10);
        }
    }

    #[test]
    fn expectation_within_spectrum(h in hermitian(), s in state()) {
        prop_assume!(Eigensystem::of(&h).is_ok());
        let [hi, lo] = Eigensystem::of(&h).unwrap().values;
        let e = expectation(&h, &s);
        prop_assert!(e <= hi + 1e-12 && e >= lo - 1e-12);
    }

    #[test]
    fn commutator_is_anti_hermitian(a in hermitian(), b in hermitian()) {
        let c = commutator(&a, &b);
        prop_assert!(c.adjoint().max_diff(&(-c)) < 1e-12);
    }

    #[test]
    fn wave_operator_is_2pi_periodic(phi0 in angle()) {
        let w = wave_operator(pa(phi0));
        let shifted = wave_operator(pa(phi0 + 2.0 * PI));
        prop_assert!(w.matrix().max_diff(shifted.matrix()) < 1e-12);
    }

    #[test]
    fn complementarity_is_symmetric(t1 in angle(), t2 in angle(), p in angle()) {
        let a = tilted_basis(t1);
        let b = if p > 0.0 { derive_wave_eigenbasis(pa(t2)) } else { tilted_basis(t2) };
        let ab = is_complementary(&a, &b);
        let ba = is_complementary(&b, &a);
        prop_assert_eq!(ab.complementary, ba.complementary);
        prop_assert!((ab.max_deviation - ba.max_deviation).abs() < 1e-12);
    }

    #[test]
    fn spectral_round_trip(phi0 in angle()) {
        let basis = derive_wave_eigenbasis(pa(phi0));
        let w = observable_from_eigensystem(&basis).unwrap();
        let back = EigenBasis::of_observable(&w).unwrap();
        prop_assert!(back.same_rays(&basis));
    }

    #[test]
    fn derived_wave_operator_is_traceless_involution(phi0 in angle()) {
        let w = observable_from_eigensystem(&derive_wave_eigenbasis(pa(phi0))).unwrap();
        prop_assert!(w.matrix().trace().norm() < 1e-12);
        let sq = *w.matrix() * *w.matrix();
        prop_assert!(sq.max_diff(&Matrix2::identity()) < 1e-12);
    }

    #[test]
    fn phase_shifters_compose(a in angle(), b in angle()) {
        let lhs = phase_shifter(pa(a)).then_after(&phase_shifter(pa(b)));
        let rhs = phase_shifter(pa(a + b));
        // equal up to global phase: U V W† ∝ I
        let m = *lhs.matrix() * rhs.matrix().adjoint();
        prop_assert!(m.get(0, 1).norm() < 1e-12 && m.get(1, 0).norm() < 1e-12);
        prop_assert!((m.get(0, 0) - m.get(1, 1)).norm() < 1e-12);
    }

    #[test]
    fn scan_path_expectation_vanishes(phi0 in angle(), grid in prop::collection::vec(angle(), 1..50)) {
        let grid: Vec<_> = grid.into_iter().map(pa).collect();
        for p in interference_scan(pa(phi0), &grid).unwrap().points {
            prop_assert!(p.p_expect.abs() < 1e-12);
            prop_assert!(p.w_expect.abs() <= 1.0 + 1e-12);
        }
    }
}

#[test]
fn balanced_states_lie_on_equator() {
    let mut r = rng(20);
    for _ in 0..10_000 {
        assert!(bloch_vector(&balanced_state(random_angle(&mut r))).is_equatorial());
    }
}

/// Any normalized ω with ⟨ω|σ_z|ω⟩ = 0 is (e^{iα}, e^{iβ})/√2 and must be
/// reproduced by the derivation at the extracted offset.
#[test]
fn constructive_completeness() {
    let mut r = rng(21);
    for _ in 0..10_000 {
        let alpha = r.random_range(-10.0..10.0);
        let beta = r.random_range(-10.0..10.0);
        let w = StateVector::new(C64::from_polar(FRAC_1_SQRT_2, alpha), C64::from_polar(FRAC_1_SQRT_2, beta)).unwrap();
        let phi0 = extract_wave_phase(&w).unwrap();
        assert!(phi0.value() > -PI && phi0.value() <= PI);
        assert!(derive_wave_eigenbasis(phi0).plus.same_ray(&w));
    }
}

#[test]
fn saturation_on_balanced_manifold() {
    let mut r = rng(22);
    for _ in 0..10_000 {
        let rep = duality_report(random_angle(&mut r), random_angle(&mut r));
        assert!(rep.gap.abs() < 1e-10 && rep.saturated);
        assert!((rep.delta_p - 1.0).abs() < 1e-12);
        assert!((sensitivity(rep.phi, rep.phi0) - rep.delta_w).abs() < 1e-12);
    }
}

#[test]
fn robertson_inequality_on_random_triples() {
    let mut r = rng(23);
    for _ in 0..100_000 {
        let a = random_hermitian(&mut r);
        let b = random_hermitian(&mut r);
        let s = random_state(&mut r);
        let bound = robertson_bound(&a, &b, &s);
        assert!(variance(&a, &s) * variance(&b, &s) >= bound * bound - 1e-10);
    }
}
