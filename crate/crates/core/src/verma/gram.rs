//! Gram matrices of the contravariant form and the matrices `D_n`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::module::{VermaModule, WeightParams};
use crate::algebra::HalfInt;
use crate::error::Result;
use crate::exactnum::{Poly, PolyMatrix, Rational};
use crate::pbw::{weight_basis, IndexTriple};

/// The form on one weight space, in the basis `S_n` and against `S_n*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramData {
    pub level: HalfInt,
    pub basis: Vec<IndexTriple>,
    /// `<b_a, b_b>`
    pub gram: PolyMatrix,
    /// `<b_a, b_b*>`
    pub dmat: PolyMatrix,
}

/// Computes `G_n` and `D_n`. Negative levels give empty matrices.
pub fn gram_data(n: HalfInt, params: &WeightParams) -> Result<GramData> {
    let module = VermaModule::new(params.clone());
    gram_data_in(&module, n)
}

/// [`gram_data`] reusing the action cache of `module`.
pub fn gram_data_in(module: &VermaModule, n: HalfInt) -> Result<GramData> {
    let basis = weight_basis(n);
    let size = basis.len();
    let mut gram = PolyMatrix::zeros(size, size);
    for a in 0..size {
        for b in a..size {
            let f = module.form_basis(&basis[a], &basis[b])?;
            gram[(b, a)] = f.clone();
            gram[(a, b)] = f;
        }
    }
    // S_n* is a permutation of S_n, so D_n is G_n with its columns permuted.
    let position = |t: &IndexTriple| basis.iter().position(|s| s == t).expect("closed under *");
    let mut dmat = PolyMatrix::zeros(size, size);
    for b in 0..size {
        let col = position(&basis[b].star_dual());
        for a in 0..size {
            dmat[(a, b)] = gram[(a, col)].clone();
        }
    }
    Ok(GramData {
        level: n,
        basis,
        gram,
        dmat,
    })
}

/// Rank of `G_n` when every parameter is numeric.
pub fn gram_rank(module: &VermaModule, n: HalfInt) -> Result<usize> {
    let data = gram_data_in(module, n)?;
    data.gram.rank_at(&Default::default())
}

/// Serialized form of a [`GramData`] together with its determinant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramReport {
    pub level: HalfInt,
    pub basis: Vec<IndexTriple>,
    pub gram: Vec<Vec<Poly>>,
    pub dmat: Vec<Vec<Poly>>,
    pub det: Poly,
    pub diagonal: Vec<Poly>,
}

impl GramReport {
    pub fn new(data: &GramData) -> Result<Self> {
        Ok(GramReport {
            level: data.level,
            basis: data.basis.clone(),
            gram: data.gram.to_rows(),
            dmat: data.dmat.to_rows(),
            det: data.gram.det_fraction_free()?,
            diagonal: data.dmat.diagonal(),
        })
    }
}

/// Outcome of comparing `det G_n` with the product of the diagonal of `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantCheck {
    pub level: HalfInt,
    /// `(h1, h2, c1, c2)`, symbolic or specialized.
    pub point: [Poly; 4],
    pub det: Poly,
    pub diagonal_product: Poly,
    /// `det = sign * diagonal_product`, or 0 when they differ up to sign.
    pub sign: i8,
}

impl DeterminantCheck {
    pub fn agrees(&self) -> bool {
        self.sign != 0
    }
}

fn sign_match(det: &Poly, prod: &Poly) -> i8 {
    if det == prod {
        1
    } else if *det == -prod.clone() {
        -1
    } else {
        0
    }
}

/// Compares `det G_n` against `prod d_ii` at the given parameters; numeric
/// parameters use rational elimination, symbolic ones fraction-free.
pub fn determinant_check(n: HalfInt, params: &WeightParams) -> Result<DeterminantCheck> {
    let data = gram_data(n, params)?;
    let prod = data
        .dmat
        .diagonal()
        .iter()
        .fold(Poly::one(), |acc, d| &acc * d);
    let det = if params.as_numeric().is_some() {
        Poly::constant(data.gram.eval(&Default::default())?.det()?)
    } else {
        data.gram.det_fraction_free()?
    };
    Ok(DeterminantCheck {
        level: n,
        point: [
            params.h1.clone(),
            params.h2.clone(),
            params.c1.clone(),
            params.c2.clone(),
        ],
        sign: sign_match(&det, &prod),
        det,
        diagonal_product: prod,
    })
}

/// `count` pseudo-random rational points `(h1, h2, c1, c2)` determined by
/// `seed`, with numerators in `[-20, 20]` and denominators in `[1, 9]`.
pub fn random_points(seed: u64, count: usize) -> Vec<WeightParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let x = Rational::new(
            rng.gen_range(-20i64..=20).into(),
            rng.gen_range(1i64..=9).into(),
        );
        if !x.is_zero() {
            return x;
        }
    };
    (0..count)
        .map(|_| WeightParams::numeric(draw(), draw(), draw(), draw()))
        .collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The closed-form diagonal entry of `D_n` exactly as it is usually displayed:
/// `prod_r (r (2h2 + (r^2-1)/12 c2))^{i_r} * prod_t (2h2 + (4t^2-1)/12 c2)^{k_t}
/// * prod_s (s (2h2 + (s^2-1)/12 c2))^{j_s}`, with `Q_{-t+1/2}` for `k_t`.
pub fn displayed_diagonal(t: &IndexTriple, params: &WeightParams) -> Poly {
    let two_h2 = params.h2.scale(&q(2, 1));
    let even = |r: i64| {
        let inner = &two_h2 + &params.c2.scale(&q(r * r - 1, 12));
        inner.scale(&q(r, 1))
    };
    let mut out = Poly::one();
    for v in [t.i(), t.j()] {
        for (n, &e) in v.iter().enumerate() {
            if e > 0 {
                out = &out * &even(n as i64 + 1).pow(e);
            }
        }
    }
    for (n, &e) in t.k().iter().enumerate() {
        if e > 0 {
            let tt = n as i64 + 1;
            let f = &two_h2 + &params.c2.scale(&q(4 * tt * tt - 1, 12));
            out = &out * &f.pow(e);
        }
    }
    out
}

/// One row of the comparison between computed and displayed diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalCheck {
    pub basis: IndexTriple,
    pub computed: Poly,
    pub displayed: Poly,
    pub agrees: bool,
}

/// Compares the computed `d_ii` of `D_n` against [`displayed_diagonal`].
pub fn diagonal_report(data: &GramData, params: &WeightParams) -> Vec<DiagonalCheck> {
    data.basis
        .iter()
        .zip(data.dmat.diagonal())
        .map(|(t, computed)| {
            let displayed = displayed_diagonal(t, params);
            DiagonalCheck {
                basis: t.clone(),
                agrees: computed == displayed,
                computed,
                displayed,
            }
        })
        .collect()
}
