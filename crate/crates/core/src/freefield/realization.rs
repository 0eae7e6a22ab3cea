//! The free-field realization of the BMS superalgebra on Heisenberg-Clifford
//! modules of level one, and the commutator checks that certify it.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::fock::{fock_basis_upto, hc_act, FockMonomial, FockVector, HcModuleSpec};
use crate::algebra::{bracket, swap_sign, AlgebraKind, Family, Generator, HalfInt};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfrParams {
    pub rho: Poly,
}

impl FfrParams {
    pub fn symbolic() -> Self {
        FfrParams {
            rho: Poly::var(Var::Rho),
        }
    }

    pub fn new(rho: Poly) -> Self {
        FfrParams { rho }
    }

    /// The central charges `(5/2, -12 rho^2)`.
    pub fn central_charges(&self) -> (Poly, Poly) {
        (Poly::frac(5, 2), self.rho.pow(2) * Poly::int(-12))
    }
}

/// Applies the normal-ordered product `:x y:` to a monomial. The factor with
/// the larger mode acts first; swapping two fermions costs a sign and a
/// repeated fermion gives zero.
fn normal_pair(
    x: Generator,
    y: Generator,
    m: &FockMonomial,
    spec: &HcModuleSpec,
) -> Result<FockVector> {
    let (first, second, sign) = if x.index().twice() >= y.index().twice() {
        (x, y, swap_sign(x, y))
    } else {
        (y, x, 1)
    };
    if x.is_odd() && y.is_odd() && x.index() == y.index() {
        return Ok(FockVector::zero());
    }
    let v = hc_act(first, &FockVector::term(m.clone(), Poly::one()), spec)?;
    let v = hc_act(second, &v, spec)?;
    Ok(if sign < 0 { v.scale(&Poly::int(-1)) } else { v })
}

/// A BMS module obtained from a Heisenberg-Clifford module through the
/// free-field realization. Images of basis monomials are cached.
#[derive(Debug)]
pub struct FreeFieldModule {
    spec: HcModuleSpec,
    params: FfrParams,
    cache: Mutex<HashMap<(Generator, FockMonomial), FockVector>>,
}

impl FreeFieldModule {
    pub fn new(spec: HcModuleSpec, params: FfrParams) -> Self {
        FreeFieldModule {
            spec,
            params,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn spec(&self) -> &HcModuleSpec {
        &self.spec
    }

    pub fn params(&self) -> &FfrParams {
        &self.params
    }

    /// The image of a BMS generator applied to one monomial.
    pub fn act_monomial(&self, x: Generator, m: &FockMonomial) -> Result<FockVector> {
        if x.algebra() != AlgebraKind::Bms {
            return Err(Error::NotBms(x.to_string()));
        }
        let key = (x, m.clone());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = self.compute(x, m)?;
        self.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn act(&self, x: Generator, v: &FockVector) -> Result<FockVector> {
        if x.algebra() != AlgebraKind::Bms {
            return Err(Error::NotBms(x.to_string()));
        }
        let mut out = FockVector::zero();
        for (m, c) in v.terms() {
            out.add_scaled(&self.act_monomial(x, m)?, c);
        }
        Ok(out)
    }

    fn compute(&self, x: Generator, m: &FockMonomial) -> Result<FockVector> {
        let rho = &self.params.rho;
        let spec = &self.spec;
        let cyclic = FockVector::term(m.clone(), Poly::one());
        // A mode above `window` annihilates `m`, so only finitely many terms
        // of each sum survive.
        let window = (m.depth().twice() + 1) / 2;
        let window = window.max(spec.max_cyclic_mode());
        let t = x.index().twice();
        let mut out = FockVector::zero();
        match x.family() {
            Family::C1 | Family::C2 => {
                let (c1, c2) = self.params.central_charges();
                let c = if x.family() == Family::C1 { c1 } else { c2 };
                out.add_term(m.clone(), c);
            }
            Family::L => {
                let n = t / 2;
                for k in (n - window)..=window {
                    let term = normal_pair(Generator::a(k), Generator::b(n - k), m, spec)?;
                    out.add_scaled(&term, &Poly::one());
                }
                let lin = hc_act(Generator::a(n), &cyclic, spec)?;
                out.add_scaled(&lin, &(rho * &Poly::int(-(n + 1))));
                // -1/2 sum_s (s + 1/2) :c_s c_{n-s}:, s = u/2 with u odd
                for u in (2 * (n - window) - 1..=2 * window + 1).filter(|u| u % 2 != 0) {
                    let term = normal_pair(Generator::c(u), Generator::c(2 * n - u), m, spec)?;
                    out.add_scaled(&term, &Poly::frac(-(u + 1), 4));
                }
            }
            Family::M => {
                let n = t / 2;
                for k in (n - window)..=window {
                    let term = normal_pair(Generator::b(k), Generator::b(n - k), m, spec)?;
                    out.add_scaled(&term, &Poly::frac(1, 2));
                }
                let lin = hc_act(Generator::b(n), &cyclic, spec)?;
                out.add_scaled(&lin, &(rho * &Poly::int(-(n + 1))));
            }
            Family::Q => {
                // sum_s b_{r-s} c_s - 2 (r + 1/2) rho c_r
                for u in (t - 2 * window - 1..=2 * window + 1).filter(|u| u % 2 != 0) {
                    let term = normal_pair(Generator::b((t - u) / 2), Generator::c(u), m, spec)?;
                    out.add_scaled(&term, &Poly::one());
                }
                let lin = hc_act(Generator::c(t), &cyclic, spec)?;
                out.add_scaled(&lin, &(rho * &Poly::int(-(t + 1))));
            }
            _ => unreachable!("BMS generator"),
        }
        Ok(out)
    }
}

/// Action of a BMS generator on a Fock vector through the realization.
pub fn ffr_act(
    x: Generator,
    v: &FockVector,
    spec: &HcModuleSpec,
    params: &FfrParams,
) -> Result<FockVector> {
    FreeFieldModule::new(spec.clone(), params.clone()).act(x, v)
}

/// `x y v - (+-) y x v - [x, y] v`.
pub fn commutator_residual_on(
    module: &FreeFieldModule,
    x: Generator,
    y: Generator,
    v: &FockVector,
) -> Result<FockVector> {
    let xy = module.act(x, &module.act(y, v)?)?;
    let yx = module.act(y, &module.act(x, v)?)?;
    let mut out = xy;
    out.add_scaled(&yx, &Poly::int(-swap_sign(x, y)));
    for (g, c) in bracket(x, y)?.terms() {
        out.add_scaled(&module.act(*g, v)?, &-c.clone());
    }
    Ok(out)
}

/// Residual summary for one pair over all Fock monomials up to a depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub pair: [Generator; 2],
    pub cutoff: HalfInt,
    /// Largest number of terms in any residual; zero when the relation holds.
    pub max_residual_terms: usize,
    pub central: [Poly; 2],
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.max_residual_terms == 0
    }
}

pub fn commutator_residual(
    module: &FreeFieldModule,
    x: Generator,
    y: Generator,
    depth_cutoff: HalfInt,
) -> Result<ResidualReport> {
    let mut worst = 0;
    for m in fock_basis_upto(depth_cutoff) {
        let r = commutator_residual_on(module, x, y, &FockVector::term(m, Poly::one()))?;
        worst = worst.max(r.len());
    }
    let (c1, c2) = module.params().central_charges();
    Ok(ResidualReport {
        pair: [x, y],
        cutoff: depth_cutoff,
        max_residual_terms: worst,
        central: [c1, c2],
    })
}

/// Residuals for every unordered pair of non-central generators with
/// `|mode| <= max_mode`, on all monomials of depth at most `max_depth`.
pub fn residual_suite(
    module: &FreeFieldModule,
    max_mode: HalfInt,
    max_depth: HalfInt,
) -> Result<Vec<ResidualReport>> {
    let gens = Generator::bms_modes(max_mode);
    let mut out = Vec::new();
    for (n, &x) in gens.iter().enumerate() {
        for &y in &gens[n..] {
            out.push(commutator_residual(module, x, y, max_depth)?);
        }
    }
    Ok(out)
}
