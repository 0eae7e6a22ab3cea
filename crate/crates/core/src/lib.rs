//! Exact computer algebra for the N=1 BMS superalgebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: rationals, polynomials in the weight parameters, matrices.
//! * [`algebra`]: generators and super-brackets of the N=1 BMS superalgebra
//!   and of the Heisenberg-Clifford algebra.
//! * [`pbw`]: PBW normal ordering in the enveloping algebra, weight bases and
//!   the total orders on index triples.
//! * [`verma`]: Verma modules, the contravariant form, Gram and D matrices,
//!   simplicity criteria and singular vectors.
//! * [`freefield`]: Fock and Whittaker modules of the Heisenberg-Clifford
//!   algebra and the free-field realization on them.

pub mod algebra;
pub mod error;
pub mod exactnum;
pub mod freefield;
pub mod pbw;
pub mod verma;

pub use error::{Error, Result};
