//! Exact rational and multivariate-polynomial arithmetic, plus the small
//! amount of exact linear algebra the rest of the crate needs.

mod matrix;
mod poly;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

pub use matrix::{PolyMatrix, RatMatrix};
pub use poly::{Monomial, Poly, PolyTerm, Var, NVARS};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// A point at which polynomials are specialized.
pub type Assignment = BTreeMap<Var, Rational>;

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn poly_eval(p: &Poly, assignment: &Assignment) -> Result<Rational> {
    p.eval(assignment)
}

pub fn det_fraction_free(m: &PolyMatrix) -> Result<Poly> {
    m.det_fraction_free()
}

pub fn rank_at(m: &PolyMatrix, assignment: &Assignment) -> Result<usize> {
    m.rank_at(assignment)
}
