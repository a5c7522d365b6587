//! Repeated-collision chain: agreement with the analytic fixed point,
//! environment limit, Monte Carlo reproducibility, qutrit fuel, cutoff
//! growth, and the absence of injected photon coherences.

use channels::{apply_all, gadc_strength, KrausChannel};
use micromaser::fock::thermal_populations;
use micromaser::{
    collision_offdiagonal_injection, collision_simulate, pump_coefficients_qutrit,
    qutrit_effective_temperature, CavityConfig64, MicromaserError,
};
use num_complex::Complex64;
use quantum_core::{DensityMatrix64, HilbertSpace, Matrix64};
use states::{fls_state, horodecki_state, plus_product, smolin_state};

const GAMMA: f64 = 2.0e6 * std::f64::consts::PI;
const T_TR: f64 = 50.0e-9;
const N_TH: f64 = 0.05;
const G_TAU: f64 = 0.02;

/// Coarse steps for qubit fuel: the slowest mode relaxes at
/// `(delta + kappa/mu) (g tau)^2 / 2` per step, so 2e5 steps cover ~60
/// relaxation times.
const STEPS: usize = 200_000;

fn transferred(rho: &DensityMatrix64) -> DensityMatrix64 {
    let p = gadc_strength(GAMMA, T_TR, N_TH);
    let ch = KrausChannel::<f64>::gadc(N_TH, p).unwrap();
    apply_all(&ch, rho).unwrap()
}

fn rel_dev(measured: f64, expected: f64) -> f64 {
    (measured - expected).abs() / expected.abs()
}

#[test]
fn smolin_chain_reaches_the_analytic_temperature() {
    let cav = CavityConfig64::default();
    let fuel = transferred(&smolin_state());
    let out = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, None).unwrap();
    assert_eq!(out.fock_dim, 40);
    assert_eq!(out.steps_used, STEPS);
    assert!(
        rel_dev(out.steady.kelvin, 0.7506210777774084) < 5e-3,
        "T = {}",
        out.steady.kelvin
    );
    assert!(!out.steady.effective);

    let total: f64 = out.populations.iter().sum();
    assert!((total - 1.0).abs() < 1e-9);
    assert!(*out.populations.last().unwrap() < 1e-9);

    // The cavity heats monotonically from the cold environment state.
    assert!((out.trajectory[0].mean_occupation - N_TH).abs() < 1e-12);
    for w in out.trajectory.windows(2) {
        assert!(w[1].mean_occupation >= w[0].mean_occupation - 1e-12);
        assert!(w[1].t > w[0].t);
    }
    let last = out.trajectory.last().unwrap().mean_occupation;
    assert!(rel_dev(last, out.steady.mean_occupation) < 1e-3);
}

#[test]
fn singlet_chain_reaches_the_analytic_temperature() {
    let cav = CavityConfig64::default();
    let fuel = transferred(&fls_state(1.0).unwrap());
    let out = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, None).unwrap();
    assert!(
        rel_dev(out.steady.kelvin, 0.4807083100956483) < 5e-3,
        "T = {}",
        out.steady.kelvin
    );
}

#[test]
fn quiet_line_keeps_the_environment_state() {
    let cav = CavityConfig64::default();
    let out = collision_simulate(&smolin_state(), &cav, G_TAU, 0.0, 1_000, None).unwrap();
    let thermal = thermal_populations(N_TH, out.fock_dim);
    for (n, (&p, &q)) in out.populations.iter().zip(thermal.iter()).enumerate() {
        assert!((p - q).abs() < 1e-12, "n={n}");
    }
    for s in &out.trajectory {
        assert!((s.mean_occupation - N_TH).abs() < 1e-9);
    }
    assert!((out.steady.kelvin - 0.15763533258813253).abs() < 1e-9);
}

#[test]
fn inverted_fuel_is_rejected_at_injection() {
    let cav = CavityConfig64::default();
    let mut m = Matrix64::zeros(16, 16);
    m[(0, 0)] = Complex64::new(1.0, 0.0);
    let excited = DensityMatrix64::new(HilbertSpace::qubits(4), m).unwrap();
    assert!(matches!(
        collision_simulate(&excited, &cav, G_TAU, 1.0, 1_000, None),
        Err(MicromaserError::BelowThreshold { .. })
    ));
}

#[test]
fn collision_strength_and_rate_are_validated() {
    let cav = CavityConfig64::default();
    let fuel = smolin_state::<f64>();
    assert!(collision_simulate(&fuel, &cav, 0.6, 1.0, 10, None).is_err());
    assert!(collision_simulate(&fuel, &cav, G_TAU, -1.0, 10, None).is_err());
}

#[test]
fn seeded_runs_reproduce_and_agree_with_the_fixed_point() {
    let cav = CavityConfig64::default();
    let fuel = transferred(&smolin_state());
    let a = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, Some(42)).unwrap();
    let b = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, Some(42)).unwrap();
    assert_eq!(a.populations, b.populations);
    assert_eq!(a.steady.kelvin, b.steady.kelvin);
    assert!(
        rel_dev(a.steady.kelvin, 0.7506210777774084) < 5e-2,
        "T = {}",
        a.steady.kelvin
    );

    let c = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, Some(43)).unwrap();
    assert!(a.populations != c.populations);
}

#[test]
fn coherent_fuel_grows_the_cutoff_and_flags_the_reading() {
    let cav = CavityConfig64::default();
    let fuel = transferred(&plus_product(4));
    let out = collision_simulate(&fuel, &cav, G_TAU, 1.0, STEPS, None).unwrap();
    assert_eq!(out.fock_dim, 80);
    assert!(out.steady.effective);
    assert!((out.steady.displacement - 1.8344659112213397).abs() < 1e-12);
    assert!((out.steady.squeezing - 1.261974442287428).abs() < 1e-12);
    // Populations follow the thermal sector of the balance.
    assert!(
        rel_dev(out.steady.kelvin, 1.5315991645547757) < 5e-3,
        "T = {}",
        out.steady.kelvin
    );
}

#[test]
fn qutrit_chain_matches_the_detailed_balance_reading() {
    let cav = CavityConfig64::default();
    let fuel = horodecki_state(4.2).unwrap();
    let k = pump_coefficients_qutrit(&fuel).unwrap();
    let analytic = qutrit_effective_temperature(&k, &cav).unwrap();
    let out = collision_simulate(&fuel, &cav, G_TAU, 1.0, 50_000, None).unwrap();
    assert!(
        rel_dev(out.steady.kelvin, analytic.kelvin) < 2e-2,
        "T = {} vs {}",
        out.steady.kelvin,
        analytic.kelvin
    );
    assert!(out.steady.effective);
    assert!((out.steady.displacement - 4.0 / 21.0).abs() < 1e-12);
}

#[test]
fn heat_exchange_fuel_injects_no_photon_coherences() {
    let fuel = transferred(&smolin_state());
    let populations = thermal_populations(1.1169618357481375, 32);
    let residual = collision_offdiagonal_injection(&fuel, &populations, G_TAU).unwrap();
    assert!(residual < 1e-6, "residual = {residual:e}");
}

#[test]
fn coherent_fuel_injects_photon_coherences() {
    let fuel = plus_product::<f64>(4);
    let populations = thermal_populations(1.1169618357481375, 32);
    let residual = collision_offdiagonal_injection(&fuel, &populations, G_TAU).unwrap();
    assert!(residual > 1e-4, "residual = {residual:e}");
}
