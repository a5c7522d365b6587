//! Pump coefficients: closed-form values for the named fuel states, the
//! four-qubit trace invariant, channel scaling laws, and linearity.

use channels::{apply_all, gadc_strength, KrausChannel};
use micromaser::{pump_coefficients_4qubit, pump_coefficients_qutrit, MicromaserError};
use num_complex::Complex64;
use quantum_core::{DensityMatrix64, HilbertSpace, Matrix64};
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};
use states::{fls_state, horodecki_state, maximally_mixed, plus_product, smolin_state};

const GAMMA: f64 = 2.0e6 * std::f64::consts::PI;
const T_TR: f64 = 50.0e-9;
const N_TH: f64 = 0.05;

/// Transfer-line damping strength at the reference parameters.
const P_REF: f64 = 0.15868370514171426;
/// Population bias picked up by any fuel with maximally mixed marginals.
const DELTA_REF: f64 = 0.5770316550607788;
/// Heat-exchange coherence slope of the isotropic-singlet family after the
/// transfer line.
const C_SLOPE: f64 = -0.8413162948582854;

fn transferred(rho: &DensityMatrix64) -> DensityMatrix64 {
    let p = gadc_strength(GAMMA, T_TR, N_TH);
    let ch = KrausChannel::<f64>::gadc(N_TH, p).unwrap();
    apply_all(&ch, rho).unwrap()
}

fn random_four_qubit(rng: &mut ChaCha8Rng) -> DensityMatrix64 {
    let mut g = Matrix64::zeros(16, 16);
    for r in 0..16 {
        for c in 0..16 {
            g[(r, c)] = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
    }
    let m = &g * &g.dagger();
    let m = m.scale_re(1.0 / m.trace().re);
    DensityMatrix64::new(HilbertSpace::qubits(4), m).unwrap()
}

#[test]
fn smolin_fuel_is_balanced_before_the_transfer_line() {
    let k = pump_coefficients_4qubit(&smolin_state::<f64>()).unwrap();
    assert!(k.lambda.norm() < 1e-12);
    assert!(k.xi.norm() < 1e-12);
    assert!(k.c.abs() < 1e-12);
    assert!(k.delta.abs() < 1e-12);
    assert!((k.r_e - 2.0).abs() < 1e-12);
    assert!((k.r_g - 2.0).abs() < 1e-12);
    assert!((k.r_total - 4.0).abs() < 1e-12);
    assert!(k.is_heat_exchange_only(1e-9));
}

#[test]
fn smolin_fuel_after_the_transfer_line() {
    let k = pump_coefficients_4qubit(&transferred(&smolin_state())).unwrap();
    assert!(k.lambda.norm() < 1e-12);
    assert!(k.xi.norm() < 1e-12);
    assert!(k.c.abs() < 1e-12);
    assert!((k.r_e - 1.7114841724696097).abs() < 1e-12);
    assert!((k.r_g - 2.2885158275303885).abs() < 1e-12);
    assert!((k.delta - DELTA_REF).abs() < 1e-12);
    assert!((k.r_total - 4.0).abs() < 1e-12);
}

#[test]
fn transfer_line_bias_matches_the_damping_strength() {
    // For fuel with maximally mixed marginals the bias picked up by the
    // thermal line is 4p / (2 n_th + 1), independent of the state.
    let p = gadc_strength(GAMMA, T_TR, N_TH);
    assert!((p - P_REF).abs() < 1e-14);
    assert!((DELTA_REF - 4.0 * p / (2.0 * N_TH + 1.0)).abs() < 1e-14);
    for rho in [
        smolin_state::<f64>(),
        fls_state(0.3).unwrap(),
        maximally_mixed(&HilbertSpace::qubits(4)),
    ] {
        let k = pump_coefficients_4qubit(&transferred(&rho)).unwrap();
        assert!((k.delta - DELTA_REF).abs() < 1e-12);
    }
}

#[test]
fn isotropic_singlet_coherences_scale_linearly_with_epsilon() {
    for i in 0..=10 {
        let eps = f64::from(i) / 10.0;
        let k = pump_coefficients_4qubit(&transferred(&fls_state(eps).unwrap())).unwrap();
        assert!(k.lambda.norm() < 1e-12, "eps={eps}");
        assert!(k.xi.norm() < 1e-12, "eps={eps}");
        assert!((k.c - C_SLOPE * eps).abs() < 1e-12, "eps={eps}: C={}", k.c);
        assert!((k.delta - DELTA_REF).abs() < 1e-12, "eps={eps}");
        assert!((k.r_total - 4.0).abs() < 1e-12, "eps={eps}");
    }
}

#[test]
fn plus_product_fuel_carries_all_three_drives() {
    let rho = plus_product::<f64>(4);
    let k = pump_coefficients_4qubit(&rho).unwrap();
    assert!((k.lambda - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    assert!((k.xi - Complex64::new(1.5, 0.0)).norm() < 1e-12);
    assert!((k.c - 3.0).abs() < 1e-12);
    assert!((k.r_e - 5.0).abs() < 1e-12);
    assert!((k.r_g - 5.0).abs() < 1e-12);
    assert!(k.delta.abs() < 1e-12);
    assert!((k.r_total - 4.0).abs() < 1e-12);
    assert!(!k.is_heat_exchange_only(1e-9));

    let kt = pump_coefficients_4qubit(&transferred(&rho)).unwrap();
    assert!((kt.lambda.re - 1.8344659112213397).abs() < 1e-12);
    assert!(kt.lambda.im.abs() < 1e-12);
    assert!((kt.xi.re - 1.261974442287428).abs() < 1e-12);
    assert!((kt.c - 2.5239488845748568).abs() < 1e-12);
    assert!((kt.delta - DELTA_REF).abs() < 1e-12);
    assert!((kt.r_total - 4.0).abs() < 1e-12);
}

#[test]
fn thermal_transfer_rescales_the_coherent_drives() {
    // One quantum of coherence decays as sqrt(1-p), two quanta as (1-p),
    // and heat-exchange coherences (one up, one down) also as (1-p).
    let rho = plus_product::<f64>(4);
    let k0 = pump_coefficients_4qubit(&rho).unwrap();
    for p in [0.05, P_REF, 0.4, 0.8] {
        let ch = KrausChannel::<f64>::gadc(N_TH, p).unwrap();
        let k = pump_coefficients_4qubit(&apply_all(&ch, &rho).unwrap()).unwrap();
        assert!((k.lambda.norm() - (1.0 - p).sqrt() * k0.lambda.norm()).abs() < 1e-12);
        assert!((k.xi.norm() - (1.0 - p) * k0.xi.norm()).abs() < 1e-12);
        assert!((k.c - (1.0 - p) * k0.c).abs() < 1e-12);
    }
}

#[test]
fn trace_parameter_is_four_for_any_four_qubit_fuel() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..32 {
        let rho = random_four_qubit(&mut rng);
        let k = pump_coefficients_4qubit(&rho).unwrap();
        assert!((k.r_total - 4.0).abs() < 1e-9);
        assert!((k.delta - (k.r_g - k.r_e)).abs() < 1e-12);
        let kt = pump_coefficients_4qubit(&transferred(&rho)).unwrap();
        assert!((kt.r_total - 4.0).abs() < 1e-9);
    }
}

#[test]
fn coefficients_are_linear_in_the_state() {
    let a = smolin_state::<f64>();
    let b = plus_product::<f64>(4);
    let w = 0.3;
    let mixed = DensityMatrix64::new(
        HilbertSpace::qubits(4),
        &a.matrix().scale_re(w) + &b.matrix().scale_re(1.0 - w),
    )
    .unwrap();
    let ka = pump_coefficients_4qubit(&a).unwrap();
    let kb = pump_coefficients_4qubit(&b).unwrap();
    let km = pump_coefficients_4qubit(&mixed).unwrap();
    assert!((km.lambda - (ka.lambda.scale(w) + kb.lambda.scale(1.0 - w))).norm() < 1e-12);
    assert!((km.xi - (ka.xi.scale(w) + kb.xi.scale(1.0 - w))).norm() < 1e-12);
    assert!((km.c - (w * ka.c + (1.0 - w) * kb.c)).abs() < 1e-12);
    assert!((km.r_e - (w * ka.r_e + (1.0 - w) * kb.r_e)).abs() < 1e-12);
    assert!((km.r_g - (w * ka.r_g + (1.0 - w) * kb.r_g)).abs() < 1e-12);
}

#[test]
fn bound_entangled_qutrit_fuel_has_closed_form_coefficients() {
    for alpha in [2.0f64, 2.5, 10.0 / 3.0, 4.0, 4.2, 5.0] {
        let k = pump_coefficients_qutrit(&horodecki_state(alpha).unwrap()).unwrap();
        assert!((k.lambda.re - 4.0 / 21.0).abs() < 1e-12, "alpha={alpha}");
        assert!(k.lambda.im.abs() < 1e-12);
        assert!(k.xi.norm() < 1e-12, "alpha={alpha}");
        assert!((k.c - 2.0 / 21.0).abs() < 1e-12, "alpha={alpha}");
        assert!((k.r_e - (14.0 - alpha) / 21.0).abs() < 1e-12, "alpha={alpha}");
        assert!((k.r_g - (28.0 - alpha) / 21.0).abs() < 1e-12, "alpha={alpha}");
        assert!((k.delta - 2.0 / 3.0).abs() < 1e-12, "alpha={alpha}");
        assert!(!k.is_heat_exchange_only(1e-9));
    }
    let k5 = pump_coefficients_qutrit(&horodecki_state(5.0f64).unwrap()).unwrap();
    assert!((k5.r_e - 9.0 / 21.0).abs() < 1e-12);
    assert!((k5.r_g - 23.0 / 21.0).abs() < 1e-12);
}

#[test]
fn maximally_mixed_qutrit_pair_is_heat_exchange_only() {
    let space = HilbertSpace::of_dims(&[3, 3]).unwrap();
    let k = pump_coefficients_qutrit(&maximally_mixed::<f64>(&space)).unwrap();
    assert!(k.lambda.norm() < 1e-12);
    assert!(k.xi.norm() < 1e-12);
    assert!(k.c.abs() < 1e-12);
    assert!((k.r_e - 4.0 / 9.0).abs() < 1e-12);
    assert!((k.r_g - 10.0 / 9.0).abs() < 1e-12);
    assert!((k.delta - 2.0 / 3.0).abs() < 1e-12);
    assert!((k.r_total - (k.r_e + k.r_g - 2.0 * k.c)).abs() < 1e-12);
}

#[test]
fn qutrit_coefficients_are_linear_in_the_state() {
    let space = HilbertSpace::of_dims(&[3, 3]).unwrap();
    let a = horodecki_state::<f64>(4.2).unwrap();
    let b = maximally_mixed::<f64>(&space);
    let w = 0.6;
    let mixed = DensityMatrix64::new(
        space,
        &a.matrix().scale_re(w) + &b.matrix().scale_re(1.0 - w),
    )
    .unwrap();
    let ka = pump_coefficients_qutrit(&a).unwrap();
    let kb = pump_coefficients_qutrit(&b).unwrap();
    let km = pump_coefficients_qutrit(&mixed).unwrap();
    assert!((km.lambda - (ka.lambda.scale(w) + kb.lambda.scale(1.0 - w))).norm() < 1e-12);
    assert!((km.r_e - (w * ka.r_e + (1.0 - w) * kb.r_e)).abs() < 1e-12);
    assert!((km.r_g - (w * ka.r_g + (1.0 - w) * kb.r_g)).abs() < 1e-12);
    assert!((km.c - (w * ka.c + (1.0 - w) * kb.c)).abs() < 1e-12);
}

#[test]
fn register_shape_is_checked() {
    let two_qubits = maximally_mixed::<f64>(&HilbertSpace::qubits(2));
    assert!(matches!(
        pump_coefficients_4qubit(&two_qubits),
        Err(MicromaserError::Core(_))
    ));
    let four_qubits = smolin_state::<f64>();
    assert!(matches!(
        pump_coefficients_qutrit(&four_qubits),
        Err(MicromaserError::Core(_))
    ));
}
