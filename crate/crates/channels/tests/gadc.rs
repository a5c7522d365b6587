//! Generalized amplitude damping: Kraus completeness, limits, fixed point,
//! strength formula, and local application to register states.

use channels::{apply_all, apply_local, gadc_strength, KrausChannel};
use num_complex::Complex64;
use quantum_core::{partial_trace, tensor_states, DensityMatrix64, HilbertSpace, Matrix64};
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};
use states::{dephase, fls_state, smolin_state};

fn random_qubit(rng: &mut ChaCha8Rng) -> DensityMatrix64 {
    let mut g = Matrix64::zeros(2, 2);
    for r in 0..2 {
        for c in 0..2 {
            g[(r, c)] = Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
    }
    let m = &g * &g.dagger();
    let m = m.scale_re(1.0 / m.trace().re);
    DensityMatrix64::new(HilbertSpace::qubits(1), m).unwrap()
}

#[test]
fn kraus_completeness_over_parameter_grid() {
    for n_th in [0.0, 0.05, 0.3, 1.0, 5.0] {
        for p in [0.0, 0.15868370514171426, 0.5, 1.0] {
            let ch = KrausChannel::<f64>::gadc(n_th, p).unwrap();
            assert_eq!(ch.ops().len(), 4);
            let mut sum = Matrix64::zeros(2, 2);
            for k in ch.ops() {
                sum = &sum + &(&k.dagger() * k);
            }
            let dev = sum.max_abs_diff(&Matrix64::identity(2));
            assert!(dev < 1e-10, "n_th={n_th}, p={p}: {dev:e}");
        }
    }
}

#[test]
fn zero_strength_is_the_identity_channel() {
    let ch = KrausChannel::<f64>::gadc(0.05, 0.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..8 {
        let rho = random_qubit(&mut rng);
        let out = ch.apply(rho.matrix()).unwrap();
        assert!(out.max_abs_diff(rho.matrix()) < 1e-14);
    }
}

#[test]
fn full_damping_at_zero_occupation_resets_to_ground() {
    let ch = KrausChannel::<f64>::gadc(0.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ground = Matrix64::zeros(2, 2);
    ground[(1, 1)] = Complex64::new(1.0, 0.0);
    for _ in 0..8 {
        let rho = random_qubit(&mut rng);
        let out = ch.apply(rho.matrix()).unwrap();
        assert!(out.max_abs_diff(&ground) < 1e-14);
    }
}

#[test]
fn fixed_point_satisfies_detailed_balance() {
    let n_th = 0.05;
    let ch = KrausChannel::<f64>::gadc(n_th, 0.15868370514171426).unwrap();
    let mut m = Matrix64::identity(2).scale_re(0.5);
    for _ in 0..400 {
        let next = ch.apply(&m).unwrap();
        if next.max_abs_diff(&m) < 1e-15 {
            m = next;
            break;
        }
        m = next;
    }
    let ratio = m[(0, 0)].re / m[(1, 1)].re;
    assert!((ratio - n_th / (n_th + 1.0)).abs() < 1e-6);
    assert!((m.trace().re - 1.0).abs() < 1e-12);
}

#[test]
fn strength_formula_reference_points() {
    let gamma = 2.0 * std::f64::consts::PI * 1e6;
    let p = gadc_strength(gamma, 50e-9, 0.05);
    assert!((p - 0.15868370514171426).abs() < 1e-12);
    assert_eq!(gadc_strength(gamma, 0.0, 0.05), 0.0);
    // Long exposure saturates the channel.
    assert!(gadc_strength(gamma, 2e-3, 0.05) > 1.0 - 1e-9);
    // Monotone in the exposure time until saturation.
    let mut last = -1.0;
    for k in 0..20 {
        let p = gadc_strength(gamma, 1e-9 * f64::powi(1.5, k), 0.05);
        assert!(p > last);
        last = p;
    }
}

#[test]
fn apply_local_touches_only_the_target_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let a = random_qubit(&mut rng);
    let b = random_qubit(&mut rng);
    let rho = tensor_states(&[&a, &b]).unwrap();
    let ch = KrausChannel::<f64>::gadc(0.05, 0.4).unwrap();

    let out = apply_local(&ch, &rho, 1).unwrap();
    let got_a = partial_trace(&out, &[0]).unwrap();
    assert!(got_a.matrix().max_abs_diff(a.matrix()) < 1e-13);

    let b_mapped = ch.apply(b.matrix()).unwrap();
    let want = tensor_states(
        &[&a, &DensityMatrix64::new(HilbertSpace::qubits(1), b_mapped).unwrap()],
    )
    .unwrap();
    assert!(out.matrix().max_abs_diff(want.matrix()) < 1e-13);
}

#[test]
fn register_coherences_scale_with_the_number_of_flips() {
    let p = 0.15868370514171426;
    let ch = KrausChannel::<f64>::gadc(0.05, p).unwrap();

    // Four-flip corner coherences pick up (1-p)^2.
    let smolin = apply_all(&ch, &smolin_state::<f64>()).unwrap();
    let corner = smolin.matrix()[(0, 15)].re;
    assert!((corner - 0.125 * (1.0 - p) * (1.0 - p)).abs() < 1e-12);

    // An exchange coherence picks up (1-p) from its two flipped digits and
    // population mixing on its two diagonal digits: the excited pair stays
    // with weight (1 - alpha p), the ground pair feeds back with (beta p).
    let (alpha, beta) = (1.05 / 1.1, 0.05 / 1.1);
    let eps = 0.8;
    let fls = apply_all(&ch, &fls_state::<f64>(eps).unwrap()).unwrap();
    let exchange = fls.matrix()[(1, 4)].re;
    let stay = 1.0 - alpha * p;
    let feed = beta * p;
    let want = -eps / 8.0 * (1.0 - p) * (stay * stay + feed * feed);
    assert!((exchange - want).abs() < 1e-12, "{exchange} vs {want}");
}

#[test]
fn apply_all_keeps_permutation_symmetry() {
    let ch = KrausChannel::<f64>::gadc(0.05, 0.3).unwrap();
    let out = apply_all(&ch, &smolin_state::<f64>()).unwrap();
    for perm in [[1usize, 0, 2, 3], [3, 2, 1, 0], [1, 2, 3, 0]] {
        let permuted = quantum_core::permute_factors(&out, &perm).unwrap();
        assert!(permuted.matrix().max_abs_diff(out.matrix()) < 1e-13);
    }
}

#[test]
fn dephasing_channel_on_all_factors_matches_global_dephase() {
    let rho = fls_state::<f64>(0.7).unwrap();
    let out = apply_all(&KrausChannel::<f64>::dephasing(2), &rho).unwrap();
    let want = dephase(&rho);
    assert!(out.matrix().max_abs_diff(want.matrix()) < 1e-14);
}

#[test]
fn constructors_reject_bad_parameters() {
    assert!(KrausChannel::<f64>::gadc(-0.1, 0.5).is_err());
    assert!(KrausChannel::<f64>::gadc(0.05, -0.01).is_err());
    assert!(KrausChannel::<f64>::gadc(0.05, 1.01).is_err());
    assert!(KrausChannel::<f64>::new(Vec::new()).is_err());
    let half = Matrix64::identity(2).scale_re(0.5);
    match KrausChannel::<f64>::new(vec![half]) {
        Err(channels::ChannelError::IncompleteKraus { max_dev }) => assert!(max_dev > 0.5),
        other => panic!("expected completeness failure, got {other:?}"),
    }
}

#[test]
fn apply_rejects_dimension_mismatch() {
    let ch = KrausChannel::<f64>::gadc(0.05, 0.3).unwrap();
    assert!(ch.apply(&Matrix64::identity(3)).is_err());
    // Qutrit register factor does not fit a qubit channel.
    let rho = states::horodecki_state::<f64>(3.0).unwrap();
    assert!(apply_local(&ch, &rho, 0).is_err());
}

#[test]
fn single_precision_channel_smoke() {
    let ch = KrausChannel::<f32>::gadc(0.05, 0.1587).unwrap();
    let rho = fls_state::<f32>(0.5).unwrap();
    let out = apply_all(&ch, &rho).unwrap();
    assert!((out.matrix().trace().re - 1.0).abs() < 1e-5);
}
