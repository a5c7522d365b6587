//! Reference quantum states and entanglement diagnostics.
//!
//! Three state families drive everything downstream: the four-qubit Smolin
//! state (bound entangled, locally maximally mixed), the one-parameter FLS
//! family `rho_eps` on a 4x4 bipartition (bound entangled for eps <= 0.5,
//! free entangled above), and the two-qutrit Horodecki family `rho_alpha`
//! (separable / bound / free entangled on [2,3] / (3,4] / (4,5]). Alongside
//! the constructors live the energy-basis bookkeeping for qubit registers,
//! the two qutrit level schemes in play (a spin-1 ladder for work extraction
//! and a V-type scheme for amplitude damping), the negativity and
//! realignment entanglement criteria, and JSON import/export.

pub mod basis;
pub mod criteria;
pub mod error;
pub mod io;
pub mod qubit_states;
pub mod qutrit_states;

pub use basis::{
    dephase, maximally_mixed, permute_local_levels, plus_product, spin_z_hamiltonian, BasisMap,
};
pub use criteria::{negativity, realignment_parameter};
pub use error::StateError;
pub use io::{from_json, to_json};
pub use qubit_states::{fls_state, smolin_state};
pub use qutrit_states::{
    dsd_initial_state, horodecki_state, qutrit_index, spin_one_pair_hamiltonian,
    QutritLevelScheme, LEVEL_E, LEVEL_G, LEVEL_U,
};
