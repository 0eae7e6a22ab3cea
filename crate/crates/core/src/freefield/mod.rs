//! Heisenberg-Clifford modules and the free-field realization of the BMS
//! superalgebra on them.

mod fock;
mod predicates;
mod realization;

pub use fock::{
    fock_basis, fock_basis_upto, hc_act, hc_act_monomial, FockMonomial, FockVector, HcModuleSpec,
};
pub use predicates::{
    bms_whittaker_simple, fock_hw_data, fock_simple, fock_whittaker_simple, hc_whittaker_simple,
    whittaker_action_table, WhittakerAction,
};
pub use realization::{
    commutator_residual, commutator_residual_on, ffr_act, residual_suite, FfrParams,
    FreeFieldModule, ResidualReport,
};
