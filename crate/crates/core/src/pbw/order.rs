//! Total orders on exponent vectors and on index triples.
//!
//! Two families are provided. The lexicographic order and the principal order
//! on a weight basis are used to sort `S_n`; the reverse lexicographic order
//! and the principal order it induces on all triples define the degree of a
//! vector in an induced module. The two families are kept under separate tags.

use std::cmp::Ordering;

use super::basis::IndexTriple;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    /// Lexicographic on exponent vectors, highest mode decides first.
    LexGt,
    /// Reverse lexicographic, lowest mode decides first.
    Revlex,
    /// Principal order used to sort the weight basis.
    PrincipalSn,
    /// Principal order on all triples, graded by length.
    PrincipalInduced,
}

/// Argument to [`compare`].
#[derive(Debug, Clone, Copy)]
pub enum Ordered<'a> {
    Vector(&'a [u32]),
    Triple(&'a IndexTriple),
}

fn entry(v: &[u32], n: usize) -> u32 {
    v.get(n).copied().unwrap_or(0)
}

/// `Greater` iff `x > y`: at the largest mode where they differ, `x` has the
/// bigger exponent.
pub fn lex(x: &[u32], y: &[u32]) -> Ordering {
    let len = x.len().max(y.len());
    (0..len)
        .rev()
        .map(|n| entry(x, n).cmp(&entry(y, n)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `Less` iff `x ≺ y`: at the smallest mode where they differ, `x` has the
/// smaller exponent.
pub fn revlex(x: &[u32], y: &[u32]) -> Ordering {
    let len = x.len().max(y.len());
    (0..len)
        .map(|n| entry(x, n).cmp(&entry(y, n)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `Greater` iff `x > y` in the principal order on `S_n`:
/// larger `|j|` first; for equal `|j|` the lexicographically smaller `j`;
/// then larger `|k|`, larger `k`, larger `i`.
pub fn principal_sn(x: &IndexTriple, y: &IndexTriple) -> Ordering {
    x.j_weight()
        .cmp(&y.j_weight())
        .then_with(|| lex(y.j(), x.j()))
        .then_with(|| x.k_weight().cmp(&y.k_weight()))
        .then_with(|| lex(x.k(), y.k()))
        .then_with(|| lex(x.i(), y.i()))
}

/// The principal order on pairs `(j, k)`: `k` decides first, then `j`, both
/// lexicographically.
pub fn principal_pair(x: &IndexTriple, y: &IndexTriple) -> Ordering {
    lex(x.k(), y.k()).then_with(|| lex(x.j(), y.j()))
}

/// `Less` iff `x ≺ y` in the principal order on all triples: shorter first;
/// at equal length `x ≺ y` when `y.i ≺ x.i`; then the pair order.
pub fn principal_induced(x: &IndexTriple, y: &IndexTriple) -> Ordering {
    x.weight()
        .cmp(&y.weight())
        .then_with(|| revlex(y.i(), x.i()))
        .then_with(|| principal_pair(x, y))
}

/// Trichotomous comparison under the chosen order.
pub fn compare(order: OrderKind, x: Ordered<'_>, y: Ordered<'_>) -> Result<Ordering> {
    match (order, x, y) {
        (OrderKind::LexGt, Ordered::Vector(a), Ordered::Vector(b)) => Ok(lex(a, b)),
        (OrderKind::Revlex, Ordered::Vector(a), Ordered::Vector(b)) => Ok(revlex(a, b)),
        (OrderKind::PrincipalSn, Ordered::Triple(a), Ordered::Triple(b)) => Ok(principal_sn(a, b)),
        (OrderKind::PrincipalInduced, Ordered::Triple(a), Ordered::Triple(b)) => {
            Ok(principal_induced(a, b))
        }
        _ => Err(Error::KindMismatch),
    }
}

/// The degree of a nonzero vector: the maximal element of its support under
/// [`principal_induced`].
pub fn degree<'a>(support: impl IntoIterator<Item = &'a IndexTriple>) -> Option<&'a IndexTriple> {
    support.into_iter().max_by(|a, b| principal_induced(a, b))
}
