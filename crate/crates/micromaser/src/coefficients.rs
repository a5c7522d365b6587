//! Pump coefficients of a micromaser fueled by correlated atomic clusters.
//!
//! Each injected cluster couples to the cavity through the collective ladder
//! operator `J- = sum_k sigma_k^-`, so to second order in the coupling the
//! cavity only sees a handful of moments of the fuel state: the one-quantum
//! coherence sum `lambda = <J->` (drives displacement), the two-quanta sum
//! `xi = <(J-)^2>/2` (drives squeezing), and the excitation/de-excitation
//! weights `r_e = <J+ J->`, `r_g = <J- J+>` whose shared coherence part `C`
//! couples same-energy basis states (heat-exchange coherences). The
//! population bias `delta = r_g - r_e` decides whether the cluster heats or
//! cools the field, and `R = (r_e - C) + (r_g - C)` is a trace parameter:
//! for a four-qubit cluster `R = 4` identically, and it is unchanged by any
//! local thermal channel applied to the fuel.

use num_complex::Complex;
use quantum_core::{CoreError, DensityMatrix, Scalar, C};

use crate::error::MicromaserError;

/// Second-order moments of a fuel cluster, as seen by the cavity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PumpCoefficients<T: Scalar> {
    /// One-quantum coherence sum `<J->`: coherent displacement drive.
    pub lambda: C<T>,
    /// Two-quanta coherence sum `<(J-)^2>/2`: squeezing drive.
    pub xi: C<T>,
    /// Excitation weight `<J+ J->`: rate at which the cluster emits into
    /// the cavity (populations plus heat-exchange coherences).
    pub r_e: T,
    /// De-excitation weight `<J- J+>`: rate at which the cluster absorbs
    /// from the cavity. For qutrit pairs this is the coefficient usually
    /// written `r_d`.
    pub r_g: T,
    /// Heat-exchange coherence sum shared by `r_e` and `r_g`: coherences
    /// between same-excitation basis states.
    pub c: T,
    /// Population bias `r_g - r_e`; positive bias lets the loss channel win
    /// and the cavity thermalize.
    pub delta: T,
    /// Trace parameter `(r_e - C) + (r_g - C)`; equals the atom number for
    /// qubit clusters, independent of the state.
    pub r_total: T,
}

impl<T: Scalar> PumpCoefficients<T> {
    /// True when the fuel carries no coherent drive: `|lambda|` and `|xi|`
    /// both below `tol`, so the cavity is pumped by populations and
    /// heat-exchange coherences alone.
    pub fn is_heat_exchange_only(&self, tol: T) -> bool {
        self.lambda.norm() <= tol && self.xi.norm() <= tol
    }
}

/// Number of ground-level digits in a four-qubit basis index (bit set = g).
fn ground_count(s: usize) -> u32 {
    (s as u32).count_ones()
}

/// Pump coefficients of a four-qubit fuel cluster.
///
/// Basis convention: index bits 0..3 address the qubits with bit value 0 for
/// the excited level `e` and 1 for the ground level `g`. The sums are exact
/// and linear in the matrix entries:
/// `lambda` adds every coherence that lowers exactly one qubit, `xi` every
/// coherence that lowers exactly two, and `C` every coherence between
/// distinct states of equal excitation number that differ on exactly two
/// qubits (one raised, one lowered); coherences between a state and its full
/// spin flip connect levels four quanta apart and do not enter.
///
/// # Errors
/// Rejects a state that is not a register of four qubits.
pub fn pump_coefficients_4qubit<T: Scalar>(
    rho: &DensityMatrix<T>,
) -> Result<PumpCoefficients<T>, MicromaserError> {
    if rho.space().dims() != [2, 2, 2, 2] {
        return Err(CoreError::DimensionMismatch {
            context: "four-qubit fuel cluster",
            expected: 16,
            got: rho.dim(),
        }
        .into());
    }
    let m = rho.matrix();
    let mut lambda = Complex::new(T::zero(), T::zero());
    let mut xi = Complex::new(T::zero(), T::zero());
    let mut c = Complex::new(T::zero(), T::zero());
    let mut pop_e = T::zero();
    let mut pop_g = T::zero();
    for s in 0..16usize {
        let ng = ground_count(s);
        let ne = 4 - ng;
        pop_e += T::from_u32(ne).expect("small integer") * m[(s, s)].re;
        pop_g += T::from_u32(ng).expect("small integer") * m[(s, s)].re;
        let up: Vec<usize> = (0..4).filter(|&b| s & (1 << b) == 0).collect();
        // One lowered qubit: <J->.
        for &b in &up {
            lambda += m[(s, s | (1 << b))];
        }
        // Two lowered qubits: <(J-)^2>/2 counts each unordered pair once.
        for (i, &a) in up.iter().enumerate() {
            for &b in &up[i + 1..] {
                xi += m[(s, s | (1 << a) | (1 << b))];
            }
        }
        // Same excitation number, one qubit raised and one lowered.
        for t in 0..16usize {
            if t != s && ground_count(t) == ng && (s ^ t).count_ones() == 2 {
                c += m[(s, t)];
            }
        }
    }
    let c = c.re;
    let r_e = pop_e + c;
    let r_g = pop_g + c;
    Ok(PumpCoefficients {
        lambda,
        xi,
        r_e,
        r_g,
        c,
        delta: r_g - r_e,
        r_total: r_e + r_g - c - c,
    })
}

/// Basis positions, in the product ordering `(ee,eu,eg,ue,uu,ug,ge,gu,gg)`,
/// of the emission block: the four pair states that feed one-quantum
/// emission into the cavity.
const EMIT_BLOCK: [usize; 4] = [0, 1, 4, 5];
/// Basis positions of the absorption block: the four pair states that feed
/// one-quantum absorption from the cavity.
const ABSORB_BLOCK: [usize; 4] = [3, 6, 7, 8];
/// Basis position of the top pair state `eg`, which sits one quantum above
/// the emission block and two above the absorption block.
const TOP: usize = 2;

/// Pump coefficients of a two-qutrit fuel cluster.
///
/// Basis convention: the product ordering `(ee,eu,eg,ue,uu,ug,ge,gu,gg)` of
/// the per-atom levels `(e,u,g)`. The nine pair states split into the top
/// state `eg`, an emission block `{ee,eu,uu,ug}` and an absorption block
/// `{ue,ge,gu,gg}`, graded by how many cavity quanta the pair can still
/// emit. The sums are exact and linear:
/// `lambda` collects the top-to-emission row and all emission-to-absorption
/// cross coherences with unit weight, `xi` the top-to-absorption row with
/// weight one half (a two-quanta drop), and the rates take
/// `r_e = (4 rho_top,top + B_e)/2` and `r_d = (4 B_g + B_e)/2`, where `B_e`,
/// `B_g` are the full block sums (populations plus internal coherences) of
/// the emission and absorption blocks. The shared internal coherences of the
/// emission block form the heat-exchange term `C`.
///
/// The trace parameter `r_total` is state dependent for qutrit pairs, unlike
/// the qubit-cluster invariant `R = 4`; the reported temperature therefore
/// uses the detailed-balance ratio of `r_e` and `r_g` directly.
///
/// # Errors
/// Rejects a state that is not a pair of qutrits.
pub fn pump_coefficients_qutrit<T: Scalar>(
    rho: &DensityMatrix<T>,
) -> Result<PumpCoefficients<T>, MicromaserError> {
    if rho.space().dims() != [3, 3] {
        return Err(CoreError::DimensionMismatch {
            context: "two-qutrit fuel cluster",
            expected: 9,
            got: rho.dim(),
        }
        .into());
    }
    let m = rho.matrix();
    let mut lambda = Complex::new(T::zero(), T::zero());
    for &j in &EMIT_BLOCK {
        lambda += m[(TOP, j)];
    }
    for &i in &EMIT_BLOCK {
        for &j in &ABSORB_BLOCK {
            lambda += m[(i, j)];
        }
    }
    let mut xi = Complex::new(T::zero(), T::zero());
    for &j in &ABSORB_BLOCK {
        xi += m[(TOP, j)];
    }
    xi = xi.scale(T::lit(0.5));
    let mut b_e = Complex::new(T::zero(), T::zero());
    let mut c = Complex::new(T::zero(), T::zero());
    for &i in &EMIT_BLOCK {
        for &j in &EMIT_BLOCK {
            b_e += m[(i, j)];
            if i != j {
                c += m[(i, j)];
            }
        }
    }
    let mut b_g = Complex::new(T::zero(), T::zero());
    for &i in &ABSORB_BLOCK {
        for &j in &ABSORB_BLOCK {
            b_g += m[(i, j)];
        }
    }
    let half = T::lit(0.5);
    let four = T::lit(4.0);
    let r_e = half * (four * m[(TOP, TOP)].re + b_e.re);
    let r_g = half * (four * b_g.re + b_e.re);
    let c = half * c.re;
    Ok(PumpCoefficients {
        lambda,
        xi,
        r_e,
        r_g,
        c,
        delta: r_g - r_e,
        r_total: r_e + r_g - c - c,
    })
}
