//! Entanglement diagnostics (negativity, realignment) against frozen
//! reference values, plus JSON round trips.

use num_complex::Complex64;
use quantum_core::{DensityMatrix64, HilbertSpace, Matrix64};
use states::{
    fls_state, from_json, horodecki_state, maximally_mixed, negativity, realignment_parameter,
    smolin_state, to_json,
};

fn singlet() -> DensityMatrix64 {
    let space = HilbertSpace::qubits(2);
    let mut m = Matrix64::zeros(4, 4);
    let h = Complex64::new(0.5, 0.0);
    m[(1, 1)] = h;
    m[(2, 2)] = h;
    m[(1, 2)] = -h;
    m[(2, 1)] = -h;
    DensityMatrix64::new(space, m).unwrap()
}

#[test]
fn singlet_diagnostics() {
    let rho = singlet();
    assert!((negativity(&rho, &[1]).unwrap() - 0.5).abs() < 1e-12);
    assert!((realignment_parameter(&rho, &[1]).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn product_state_diagnostics_vanish() {
    let rho = maximally_mixed::<f64>(&HilbertSpace::qubits(2));
    assert!(negativity(&rho, &[1]).unwrap().abs() < 1e-12);
    // For I/4 the realignment sum is 1/2, below the separable bound of 1.
    assert!((realignment_parameter(&rho, &[1]).unwrap() + 0.5).abs() < 1e-12);
}

#[test]
fn smolin_unlockable_cut_is_entangled() {
    let rho = smolin_state::<f64>();
    // One qubit against the other three: distillable entanglement.
    for k in [0usize, 1, 2, 3] {
        let side: Vec<usize> = (0..4).filter(|j| *j != k).collect();
        let n = negativity(&rho, &side).unwrap();
        assert!((n - 0.5).abs() < 1e-9, "cut at qubit {k}: {n}");
    }
}

#[test]
fn smolin_pair_cuts_are_ppt() {
    let rho = smolin_state::<f64>();
    for side in [[2usize, 3], [1, 3], [1, 2]] {
        let n = negativity(&rho, &side).unwrap();
        assert!(n.abs() < 1e-9, "cut {side:?}: {n}");
    }
    // Realignment across the first pair cut stays at the separable bound.
    assert!(realignment_parameter(&rho, &[2, 3]).unwrap().abs() < 1e-9);
}

#[test]
fn fls_negativity_branches() {
    // PPT (vanishing negativity) up to the boundary, then (eps - 1/2)/2.
    let cases = [
        (0.0, 0.0),
        (0.3, 0.0),
        (0.45, 0.0),
        (0.5, 0.0),
        (0.55, 0.025),
        (0.6, 0.05),
        (0.8, 0.15),
        (1.0, 0.25),
    ];
    for (eps, want) in cases {
        let rho = fls_state::<f64>(eps).unwrap();
        let n = negativity(&rho, &[2, 3]).unwrap();
        assert!((n - want).abs() < 1e-9, "eps={eps}: {n} vs {want}");
    }
}

#[test]
fn fls_realignment_witnesses_free_branch() {
    let cases = [(0.6, 0.1), (0.8, 0.3), (1.0, 0.5)];
    for (eps, want) in cases {
        let rho = fls_state::<f64>(eps).unwrap();
        let r = realignment_parameter(&rho, &[2, 3]).unwrap();
        assert!((r - want).abs() < 1e-9, "eps={eps}: {r} vs {want}");
    }
    // At eps = 0 the state is a product of two maximally mixed pairs.
    let r0 = realignment_parameter(&fls_state::<f64>(0.0).unwrap(), &[2, 3]).unwrap();
    assert!(r0 < 0.0);
}

#[test]
fn horodecki_negativity_values() {
    let cases = [
        (2.0, 0.0),
        (2.5, 0.0),
        (3.25, 0.0),
        (4.0, 0.0),
        (4.2, 0.017840135668762525),
        (5.0, 0.1002231598166321),
    ];
    for (alpha, want) in cases {
        let rho = horodecki_state::<f64>(alpha).unwrap();
        let n = negativity(&rho, &[1]).unwrap();
        assert!((n - want).abs() < 1e-9, "alpha={alpha}: {n} vs {want}");
    }
}

#[test]
fn horodecki_realignment_values() {
    let cases = [
        (2.5, -0.04761904761904756),
        (3.25, 0.037327722924524354),
        (4.0, 0.15673822010138938),
        (4.2, 0.18920351472510655),
        (5.0, 0.31989513748006404),
    ];
    for (alpha, want) in cases {
        let rho = horodecki_state::<f64>(alpha).unwrap();
        let r = realignment_parameter(&rho, &[1]).unwrap();
        assert!((r - want).abs() < 1e-9, "alpha={alpha}: {r} vs {want}");
    }
}

#[test]
fn horodecki_bound_window_witnessed() {
    // On 3 < alpha <= 4 the state is PPT yet the realignment parameter is
    // positive: entanglement with no distillable part.
    for alpha in [3.1, 3.5, 4.0] {
        let rho = horodecki_state::<f64>(alpha).unwrap();
        assert!(negativity(&rho, &[1]).unwrap().abs() < 1e-9);
        assert!(realignment_parameter(&rho, &[1]).unwrap() > 1e-3);
    }
}

#[test]
fn diagnostics_reject_bad_cuts() {
    let rho = smolin_state::<f64>();
    assert!(negativity(&rho, &[]).is_err());
    assert!(negativity(&rho, &[0, 1, 2, 3]).is_err());
    assert!(negativity(&rho, &[4]).is_err());
    assert!(realignment_parameter(&rho, &[2, 1]).is_err());
}

#[test]
fn json_roundtrip_preserves_state() {
    let rho = fls_state::<f64>(0.37).unwrap();
    let text = to_json(&rho).unwrap();
    let back = from_json(&text).unwrap();
    assert_eq!(back.space().dims(), rho.space().dims());
    assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-15);
}

#[test]
fn json_rejects_malformed_input() {
    assert!(from_json("not json").is_err());
    // Wrong element count for the declared dimensions.
    let bad = r#"{"dims": [2, 2], "re": [[1.0, 0.0], [0.0, 0.0]], "im": [[0.0, 0.0], [0.0, 0.0]]}"#;
    assert!(from_json(bad).is_err());
    // Valid shape but not a density matrix (trace 2).
    let bad_trace = r#"{
        "dims": [2],
        "re": [[1.0, 0.0], [0.0, 1.0]],
        "im": [[0.0, 0.0], [0.0, 0.0]]
    }"#;
    assert!(from_json(bad_trace).is_err());
}
