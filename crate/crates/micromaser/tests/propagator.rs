//! Second-order collision propagator: every polynomial entry against the
//! combinatorics of the collective ladder, unitarity of the exact
//! propagator, and the cubic truncation error.

use micromaser::{
    exact_propagator, propagator_second_order, truncation_deviation, FockQuadratic,
};
use num_complex::Complex64;
use quantum_core::Matrix64;

const G_TAU: f64 = 0.02;

/// Expected entry from the bit combinatorics alone: a set bit is a ground
/// atom, so one collective lowering sets one more bit.
fn expected_entry(to: usize, from: usize, g_tau: f64) -> FockQuadratic<f64> {
    let g2 = g_tau * g_tau;
    let mut e = FockQuadratic {
        unit: Complex64::new(0.0, 0.0),
        number: Complex64::new(0.0, 0.0),
        raise: Complex64::new(0.0, 0.0),
        lower: Complex64::new(0.0, 0.0),
        raise2: Complex64::new(0.0, 0.0),
        lower2: Complex64::new(0.0, 0.0),
    };
    let diff = (to ^ from).count_ones();
    if to == from {
        let excited = 4.0 - f64::from(from.count_ones());
        e.unit = Complex64::new(1.0 - 0.5 * g2 * excited, 0.0);
        e.number = Complex64::new(-2.0 * g2, 0.0);
    } else if diff == 1 && to & from == from {
        e.raise = Complex64::new(0.0, -g_tau);
    } else if diff == 1 && to & from == to {
        e.lower = Complex64::new(0.0, -g_tau);
    } else if diff == 2 && to.count_ones() == from.count_ones() {
        e.unit = Complex64::new(-0.5 * g2, 0.0);
        e.number = Complex64::new(-g2, 0.0);
    } else if diff == 2 && to & from == from {
        e.raise2 = Complex64::new(-g2, 0.0);
    } else if diff == 2 && to & from == to {
        e.lower2 = Complex64::new(-g2, 0.0);
    }
    e
}

fn assert_close(a: Complex64, b: Complex64, what: &str, to: usize, from: usize) {
    assert!(
        (a - b).norm() < 1e-15,
        "{what}[{to},{from}] = {a}, expected {b}"
    );
}

#[test]
fn every_entry_matches_the_ladder_combinatorics() {
    let prop = propagator_second_order(G_TAU).unwrap();
    for to in 0..16 {
        for from in 0..16 {
            let got = prop.entry(to, from);
            let want = expected_entry(to, from, G_TAU);
            assert_close(got.unit, want.unit, "unit", to, from);
            assert_close(got.number, want.number, "number", to, from);
            assert_close(got.raise, want.raise, "raise", to, from);
            assert_close(got.lower, want.lower, "lower", to, from);
            assert_close(got.raise2, want.raise2, "raise2", to, from);
            assert_close(got.lower2, want.lower2, "lower2", to, from);
        }
    }
}

#[test]
fn ladder_entry_counts() {
    let prop = propagator_second_order(G_TAU).unwrap();
    let mut raises = 0;
    let mut raises2 = 0;
    let mut exchanges = 0;
    for to in 0..16 {
        for from in 0..16 {
            let e = prop.entry(to, from);
            if e.raise.norm() > 0.0 {
                raises += 1;
            }
            if e.raise2.norm() > 0.0 {
                raises2 += 1;
            }
            if to != from && e.unit.norm() > 0.0 {
                exchanges += 1;
            }
        }
    }
    // One raise per excited atom (32 over the hypercube), one two-quanta
    // raise per unordered excited pair (24), and one exchange per ordered
    // same-grade pair at Hamming distance two (48).
    assert_eq!(raises, 32);
    assert_eq!(raises2, 24);
    assert_eq!(exchanges, 48);
}

#[test]
fn named_entries_at_the_reference_strength() {
    let prop = propagator_second_order(G_TAU).unwrap();
    let g2 = G_TAU * G_TAU;

    // Fully excited cluster: four open emission paths.
    let top = prop.entry(0, 0);
    assert!((top.unit.re - (1.0 - 2.0 * g2)).abs() < 1e-15);
    assert!((top.number.re + 2.0 * g2).abs() < 1e-15);

    // Fully de-excited cluster: only absorption shifts the phase.
    let bottom = prop.entry(15, 15);
    assert!((bottom.unit.re - 1.0).abs() < 1e-15);
    assert!((bottom.number.re + 2.0 * g2).abs() < 1e-15);

    // One emission: the photon gains a quantum.
    let emit = prop.entry(0b0001, 0b0000);
    assert_close(
        emit.raise,
        Complex64::new(0.0, -G_TAU),
        "raise",
        0b0001,
        0b0000,
    );

    // Exchange between same-grade states: half-weight unit term.
    let swap = prop.entry(0b0011, 0b0101);
    assert!((swap.unit.re + 0.5 * g2).abs() < 1e-15);
    assert!((swap.number.re + g2).abs() < 1e-15);
}

#[test]
fn zero_strength_realizes_the_identity() {
    let prop = propagator_second_order(0.0).unwrap();
    let m = prop.realize(5);
    assert!(m.max_abs_diff(&Matrix64::identity(16 * 5)) < 1e-15);
}

#[test]
fn strength_outside_the_perturbative_window_is_rejected() {
    assert!(propagator_second_order::<f64>(0.2).is_err());
    assert!(propagator_second_order::<f64>(-0.01).is_err());
}

#[test]
fn exact_propagator_is_unitary() {
    let u = exact_propagator(G_TAU, 8).unwrap();
    let product = &u * &u.dagger();
    assert!(product.max_abs_diff(&Matrix64::identity(16 * 8)) < 1e-9);
}

#[test]
fn truncation_error_is_cubic_in_the_strength() {
    // At a low cutoff the deviation sits inside the 5 (g tau)^3 envelope.
    let dev = truncation_deviation(G_TAU, 3).unwrap();
    assert!(
        dev < 5.0 * G_TAU.powi(3),
        "dev = {dev:e}, bound = {:e}",
        5.0 * G_TAU.powi(3)
    );

    // Log-log slope over a strength ladder at a deeper cutoff.
    let strengths = [0.01f64, 0.02, 0.04, 0.08];
    let points: Vec<(f64, f64)> = strengths
        .iter()
        .map(|&g| (g.ln(), truncation_deviation(g, 10).unwrap().ln()))
        .collect();
    let xm: f64 = points.iter().map(|p| p.0).sum::<f64>() / 4.0;
    let ym: f64 = points.iter().map(|p| p.1).sum::<f64>() / 4.0;
    let slope: f64 = points.iter().map(|p| (p.0 - xm) * (p.1 - ym)).sum::<f64>()
        / points.iter().map(|p| (p.0 - xm).powi(2)).sum::<f64>();
    assert!((2.7..=3.3).contains(&slope), "slope = {slope}");
}
