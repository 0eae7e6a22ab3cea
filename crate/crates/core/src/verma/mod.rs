//! Verma modules over the BMS superalgebra, the contravariant form and
//! simplicity criteria.

mod gram;
mod module;
mod simplicity;

pub use gram::{
    determinant_check, diagonal_report, displayed_diagonal, gram_data, gram_data_in, gram_rank,
    random_points, DeterminantCheck, DiagonalCheck, GramData, GramReport,
};
pub use module::{
    act, act_via_normal_form, contravariant_form, VermaModule, VermaVector, WeightParams,
};
pub use simplicity::{
    basis_vector, factor_level, first_degenerate_level, is_singular, raising_generators,
    simplicity_factor, singular_vectors, vacuum_simple, verma_simple, VermaSimplicity,
};
