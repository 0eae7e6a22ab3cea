//! Highest-weight data of Fock modules, simplicity criteria for the modules
//! built from the realization, and the action on a Whittaker vector.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fock::{FockVector, HcModuleSpec};
use super::realization::{FfrParams, FreeFieldModule};
use crate::algebra::Generator;
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};
use crate::verma::WeightParams;

/// `(h1, h2, c1, c2) = (ab - rho a, b^2/2 - rho b, 5/2, -12 rho^2)`, the
/// weight of the cyclic vector of `M_hc(1, a, b)` under the realization.
pub fn fock_hw_data(a: &Poly, b: &Poly, rho: &Poly) -> WeightParams {
    let (c1, c2) = FfrParams::new(rho.clone()).central_charges();
    WeightParams {
        h1: a * b - rho * a,
        h2: &(b * b) * &Poly::frac(1, 2) - rho * b,
        c1,
        c2,
    }
}

/// Simplicity of the Fock module: `b + (n - 1) rho != 0` for every nonzero
/// integer `n`.
pub fn fock_simple(b: &Rational, rho: &Rational) -> bool {
    if rho.is_zero() {
        return !b.is_zero();
    }
    let n = Rational::one() - b / rho;
    !(n.is_integer() && !n.is_zero())
}

/// The Heisenberg-Clifford Whittaker module is simple iff `phi(k) != 0`.
pub fn hc_whittaker_simple(phi_k: &Rational) -> bool {
    !phi_k.is_zero()
}

/// The Fock-Whittaker module is simple iff `phi(b_1) != 0`.
pub fn fock_whittaker_simple(phi_b1: &Rational) -> bool {
    !phi_b1.is_zero()
}

/// The universal Whittaker module `W(phi_k)` (`k >= 1`) is simple iff
/// `phi_k(M_{2k}) != 0` or `phi_k(M_{2k-1}) != 0`. Generators missing from
/// `phi` take the value zero.
pub fn bms_whittaker_simple(k: i64, phi: &BTreeMap<Generator, Rational>) -> Result<bool> {
    if k < 1 {
        return Err(Error::BadIndex(format!(
            "Whittaker depth must be positive, got {k}"
        )));
    }
    let nonzero = |g: Generator| phi.get(&g).is_some_and(|v| !v.is_zero());
    Ok(nonzero(Generator::m(2 * k)) || nonzero(Generator::m(2 * k - 1)))
}

/// One generator and its image of the Whittaker vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhittakerAction {
    pub generator: Generator,
    pub image: FockVector,
}

/// Images of `w_phi` under `L_i, M_i` (`1 <= i <= max_mode`), `Q_{i-1/2}` and
/// the central elements.
pub fn whittaker_action_table(
    spec: &HcModuleSpec,
    params: &FfrParams,
    max_mode: i64,
) -> Result<Vec<WhittakerAction>> {
    let module = FreeFieldModule::new(spec.clone(), params.clone());
    let mut gens = Vec::new();
    gens.extend((1..=max_mode).map(Generator::l));
    gens.extend((1..=max_mode).map(Generator::m));
    gens.extend((1..=max_mode).map(|i| Generator::q(2 * i - 1)));
    gens.extend([Generator::C1, Generator::C2]);
    let w = FockVector::cyclic();
    gens.into_iter()
        .map(|g| {
            Ok(WhittakerAction {
                generator: g,
                image: module.act(g, &w)?,
            })
        })
        .collect()
}
