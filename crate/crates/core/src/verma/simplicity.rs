//! Simplicity criteria for Verma and vacuum modules, and singular vectors.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::module::{VermaModule, VermaVector, WeightParams};
use crate::algebra::{Generator, HalfInt};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, RatMatrix, Rational};
use crate::pbw::{weight_basis, IndexTriple};

/// Outcome of the Verma simplicity test `h2 + (i^2 - 1)/24 c2 != 0` for all
/// positive integers `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VermaSimplicity {
    /// Violating `i` in `1..=max_i`.
    pub violations: Vec<u64>,
    /// Every violating `i`, when there are finitely many (always the case for
    /// `c2 != 0`); `None` means every `i` violates.
    pub all_roots: Option<Vec<u64>>,
    pub simple: bool,
}

/// `h2 + (i^2 - 1)/24 c2`.
pub fn simplicity_factor(h2: &Rational, c2: &Rational, i: u64) -> Rational {
    let i = Rational::from_integer((i as i64).into());
    h2 + (&i * &i - Rational::from_integer(1.into())) / Rational::from_integer(24.into()) * c2
}

/// Positive integer square root of a rational, if it has one.
fn positive_integer_sqrt(x: &Rational) -> Option<u64> {
    if !x.is_integer() || !x.is_positive() {
        return None;
    }
    let n = x.to_integer();
    let r = n.sqrt();
    if &r * &r == n {
        u64::try_from(r).ok()
    } else {
        None
    }
}

pub fn verma_simple(h2: &Rational, c2: &Rational, max_i: u64) -> VermaSimplicity {
    let violations: Vec<u64> = (1..=max_i)
        .filter(|&i| simplicity_factor(h2, c2, i).is_zero())
        .collect();
    let all_roots = if c2.is_zero() {
        if h2.is_zero() {
            None
        } else {
            Some(Vec::new())
        }
    } else {
        // i^2 = 1 - 24 h2 / c2
        let square = Rational::from_integer(1.into()) - Rational::from_integer(24.into()) * h2 / c2;
        Some(positive_integer_sqrt(&square).into_iter().collect())
    };
    let simple = matches!(&all_roots, Some(r) if r.is_empty());
    VermaSimplicity {
        violations,
        all_roots,
        simple,
    }
}

/// The lowest level at which the factor for `i` enters a diagonal entry of
/// `D_n`: `i/2` for odd `i` (through `Q_{-i/2}`), `i` for even `i`.
pub fn factor_level(i: u64) -> HalfInt {
    if i % 2 == 1 {
        HalfInt::from_twice(i as i64)
    } else {
        HalfInt::int(i as i64)
    }
}

/// Lowest level where the form degenerates, from the closed-form criterion.
pub fn first_degenerate_level(h2: &Rational, c2: &Rational) -> Option<HalfInt> {
    let report = verma_simple(h2, c2, 0);
    match report.all_roots {
        None => Some(factor_level(1)),
        Some(roots) => roots.into_iter().map(factor_level).min(),
    }
}

/// The vacuum module is simple exactly when `c2 != 0`.
pub fn vacuum_simple(c2: &Rational) -> bool {
    !c2.is_zero()
}

/// The raising generators `L_m, M_m, Q_{m-1/2}` for `1 <= m <= cutoff`.
pub fn raising_generators(cutoff: u32) -> Vec<Generator> {
    (1..=cutoff as i64)
        .flat_map(|m| [Generator::l(m), Generator::m(m), Generator::q(2 * m - 1)])
        .collect()
}

/// A basis of the weight-`n` vectors killed by every raising generator of
/// mode at most `mode_cutoff`. Requires numeric parameters.
pub fn singular_vectors(
    n: HalfInt,
    params: &WeightParams,
    mode_cutoff: u32,
) -> Result<Vec<VermaVector>> {
    if params.as_numeric().is_none() {
        return Err(Error::NotNumeric(format!(
            "({}, {}, {}, {})",
            params.h1, params.h2, params.c1, params.c2
        )));
    }
    let module = VermaModule::new(params.clone());
    let basis = weight_basis(n);
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    // One row per (raising generator, basis vector of the target level).
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in raising_generators(mode_cutoff) {
        let target = weight_basis(n - g.index());
        let images = basis
            .iter()
            .map(|t| module.act_generator(g, t))
            .collect::<Result<Vec<_>>>()?;
        for s in &target {
            let row: Vec<Rational> = images
                .iter()
                .map(|img| constant(&img.coefficient(s)))
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let mut system = RatMatrix::zeros(rows.len(), basis.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            system[(r, c)] = x.clone();
        }
    }
    Ok(system
        .nullspace()
        .into_iter()
        .map(|x| {
            let mut v = VermaVector::zero();
            for (t, c) in basis.iter().zip(x) {
                v.add_term(t.clone(), Poly::constant(c));
            }
            v
        })
        .collect())
}

fn constant(p: &Poly) -> Rational {
    p.as_constant()
        .expect("numeric parameters give constant coefficients")
}

/// True if `v` is killed by every raising generator up to `mode_cutoff`.
pub fn is_singular(module: &VermaModule, v: &VermaVector, mode_cutoff: u32) -> Result<bool> {
    for g in raising_generators(mode_cutoff) {
        if !module.act_generator_on(g, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: the basis vector for a monomial string such as `"Q[-1/2]"`.
pub fn basis_vector(monomial: &str) -> Result<VermaVector> {
    Ok(VermaVector::basis(monomial.parse::<IndexTriple>()?))
}
