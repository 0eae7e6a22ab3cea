//! PBW monomials and normal ordering in the enveloping algebra, weight-space
//! bases of the lowering subalgebra, and the total orders on them.

mod basis;
mod normal;
mod order;

pub use basis::{partition_count, star_dual, weight_basis, IndexTriple};
pub use normal::{normal_form, pbw_key, PbwMonomial, Strategy, UeaElement};
pub use order::{
    compare, degree, lex, principal_induced, principal_pair, principal_sn, revlex, OrderKind,
    Ordered,
};
