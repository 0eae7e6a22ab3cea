//! Heisenberg-Clifford modules generated freely by the negative modes from a
//! cyclic vector: the Fock (Verma) modules and the Whittaker modules.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraKind, Family, Generator, HalfInt};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Var};
use crate::pbw::{weight_basis, IndexTriple, PbwMonomial};

/// How the non-negative modes and `k` act on the cyclic vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HcModuleSpec {
    /// `M_hc(level, a, b)`: `a_0, b_0` act by `a, b`, positive modes kill.
    Verma { level: Poly, a: Poly, b: Poly },
    /// `W_hc(phi)`: `a_n, b_n` (`n >= 0`) act by `phi`, `c_r` (`r > 0`) kill.
    /// Modes missing from `phi` act by zero.
    Whittaker {
        phi: BTreeMap<Generator, Poly>,
        k: Poly,
    },
}

impl HcModuleSpec {
    /// `M_hc(1, a, b)` with `a, b` symbolic.
    pub fn fock_symbolic() -> Self {
        HcModuleSpec::Verma {
            level: Poly::one(),
            a: Poly::var(Var::A),
            b: Poly::var(Var::B),
        }
    }

    /// Whittaker module with `phi(a_0), phi(a_1), phi(b_0), phi(b_1)` and `phi(k)`.
    pub fn whittaker(a0: Poly, a1: Poly, b0: Poly, b1: Poly, k: Poly) -> Self {
        let phi = [
            (Generator::a(0), a0),
            (Generator::a(1), a1),
            (Generator::b(0), b0),
            (Generator::b(1), b1),
        ]
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .collect();
        HcModuleSpec::Whittaker { phi, k }
    }

    /// Level-one Whittaker module with symbolic `phi_a0, phi_a1, phi_b0, phi_b1`.
    pub fn whittaker_symbolic() -> Self {
        Self::whittaker(
            Poly::var(Var::PhiA0),
            Poly::var(Var::PhiA1),
            Poly::var(Var::PhiB0),
            Poly::var(Var::PhiB1),
            Poly::one(),
        )
    }

    /// Scalar by which `k` acts.
    pub fn level(&self) -> &Poly {
        match self {
            HcModuleSpec::Verma { level, .. } => level,
            HcModuleSpec::Whittaker { k, .. } => k,
        }
    }

    /// Scalar by which a non-negative mode acts on the cyclic vector.
    pub fn cyclic_value(&self, g: Generator) -> Poly {
        match self {
            HcModuleSpec::Verma { a, b, .. } => match (g.family(), g.index().twice()) {
                (Family::A, 0) => a.clone(),
                (Family::B, 0) => b.clone(),
                _ => Poly::zero(),
            },
            HcModuleSpec::Whittaker { phi, .. } => phi.get(&g).cloned().unwrap_or_default(),
        }
    }

    /// Largest mode with a nonzero value on the cyclic vector.
    pub fn max_cyclic_mode(&self) -> i64 {
        match self {
            HcModuleSpec::Verma { .. } => 0,
            HcModuleSpec::Whittaker { phi, .. } => phi
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(g, _)| g.index().floor())
                .max()
                .unwrap_or(0),
        }
    }
}

/// A monomial in the negative modes `c^k b^j a^i` applied to the cyclic
/// vector. The exponent layout is that of [`IndexTriple`], with `a` in the
/// place of `L`, `b` of `M` and `c` of `Q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial(IndexTriple);

fn relabel(g: Generator, to_hc: bool) -> Generator {
    let family = match (g.family(), to_hc) {
        (Family::L, true) => Family::A,
        (Family::M, true) => Family::B,
        (Family::Q, true) => Family::C,
        (Family::A, false) => Family::L,
        (Family::B, false) => Family::M,
        (Family::C, false) => Family::Q,
        (f, _) => f,
    };
    Generator::new(family, g.index()).expect("same index parity")
}

fn bump(v: &[u32], slot: usize, delta: i32) -> Vec<u32> {
    let mut out = v.to_vec();
    if out.len() <= slot {
        out.resize(slot + 1, 0);
    }
    out[slot] = (out[slot] as i32 + delta) as u32;
    out
}

impl FockMonomial {
    /// The cyclic vector.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_triple(t: IndexTriple) -> Self {
        FockMonomial(t)
    }

    /// Exponents of `a_{-n}` at entry `n - 1`.
    pub fn a(&self) -> &[u32] {
        self.0.i()
    }

    pub fn b(&self) -> &[u32] {
        self.0.j()
    }

    /// Occupation of `c_{-n+1/2}` at entry `n - 1`.
    pub fn c(&self) -> &[u32] {
        self.0.k()
    }

    pub fn depth(&self) -> HalfInt {
        self.0.weight()
    }

    pub fn is_odd(&self) -> bool {
        self.0.is_odd()
    }

    /// The word `c... b... a...` with the deepest mode first in each block.
    pub fn to_word(&self) -> Vec<Generator> {
        self.0
            .to_word()
            .into_iter()
            .map(|g| relabel(g, true))
            .collect()
    }

    fn with(&self, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Self {
        FockMonomial(IndexTriple::new(a, b, c).expect("fermionic occupation is 0 or 1"))
    }

    fn change_a(&self, slot: usize, delta: i32) -> Self {
        self.with(
            bump(self.a(), slot, delta),
            self.b().to_vec(),
            self.c().to_vec(),
        )
    }

    fn change_b(&self, slot: usize, delta: i32) -> Self {
        self.with(
            self.a().to_vec(),
            bump(self.b(), slot, delta),
            self.c().to_vec(),
        )
    }

    fn change_c(&self, slot: usize, delta: i32) -> Self {
        self.with(
            self.a().to_vec(),
            self.b().to_vec(),
            bump(self.c(), slot, delta),
        )
    }

    /// Number of fermions deeper than slot `slot`; they stand to its left.
    fn fermions_before(&self, slot: usize) -> usize {
        self.c().iter().skip(slot + 1).filter(|&&e| e == 1).count()
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PbwMonomial::new(self.to_word()).fmt(f)
    }
}

impl std::str::FromStr for FockMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m: PbwMonomial = s.parse()?;
        let bad = || Error::Parse(format!("`{s}` is not a Fock monomial"));
        if m.word().iter().any(|g| g.algebra() != AlgebraKind::Hc) {
            return Err(bad());
        }
        let word: Vec<Generator> = m.word().iter().map(|&g| relabel(g, false)).collect();
        IndexTriple::from_word(&word)
            .map(FockMonomial)
            .ok_or_else(bad)
    }
}

impl Serialize for FockMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FockMonomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All Fock monomials of depth exactly `n`.
pub fn fock_basis(n: HalfInt) -> Vec<FockMonomial> {
    weight_basis(n)
        .into_iter()
        .map(FockMonomial::from_triple)
        .collect()
}

/// All Fock monomials of depth at most `n`.
pub fn fock_basis_upto(n: HalfInt) -> Vec<FockMonomial> {
    (0..=n.twice().max(-1))
        .flat_map(|t| fock_basis(HalfInt::from_twice(t)))
        .collect()
}

/// A finite combination of Fock monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FockVector {
    terms: BTreeMap<FockMonomial, Poly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn cyclic() -> Self {
        Self::term(FockMonomial::one(), Poly::one())
    }

    pub fn term(m: FockMonomial, c: Poly) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Poly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &Poly) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Poly) -> FockVector {
        let mut out = FockVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(other, &Poly::int(-1));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Poly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest depth in the support.
    pub fn depth(&self) -> Option<HalfInt> {
        self.terms.keys().map(FockMonomial::depth).max()
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

/// Action of one Heisenberg-Clifford generator on a monomial.
pub fn hc_act_monomial(x: Generator, m: &FockMonomial, spec: &HcModuleSpec) -> Result<FockVector> {
    if x.algebra() != AlgebraKind::Hc {
        return Err(Error::NotHc(x.to_string()));
    }
    let level = spec.level();
    if x.family() == Family::K {
        return Ok(FockVector::term(m.clone(), level.clone()));
    }
    let t = x.index().twice();
    let mut out = FockVector::zero();
    match x.family() {
        Family::A | Family::B if t < 0 => {
            let slot = (-t / 2 - 1) as usize;
            let next = if x.family() == Family::A {
                m.change_a(slot, 1)
            } else {
                m.change_b(slot, 1)
            };
            out.add_term(next, Poly::one());
        }
        Family::A | Family::B => {
            let n = t / 2;
            out.add_term(m.clone(), spec.cyclic_value(x));
            if n > 0 {
                // [a_n, b_{-n}] = [b_n, a_{-n}] = n k
                let slot = (n - 1) as usize;
                let partner = if x.family() == Family::A {
                    m.b()
                } else {
                    m.a()
                };
                let count = partner.get(slot).copied().unwrap_or(0);
                if count > 0 {
                    let next = if x.family() == Family::A {
                        m.change_b(slot, -1)
                    } else {
                        m.change_a(slot, -1)
                    };
                    out.add_term(next, level * &Poly::int(n * count as i64));
                }
            }
        }
        Family::C => {
            let slot = ((t.abs() - 1) / 2) as usize;
            let occupied = m.c().get(slot).copied().unwrap_or(0) == 1;
            let sign = if m.fermions_before(slot).is_multiple_of(2) {
                1
            } else {
                -1
            };
            if t < 0 {
                if !occupied {
                    out.add_term(m.change_c(slot, 1), Poly::int(sign));
                }
            } else if occupied {
                out.add_term(m.change_c(slot, -1), level * &Poly::int(sign));
            }
        }
        _ => unreachable!("non-central Heisenberg-Clifford generator"),
    }
    Ok(out)
}

/// Action of a Heisenberg-Clifford generator on a vector.
pub fn hc_act(x: Generator, v: &FockVector, spec: &HcModuleSpec) -> Result<FockVector> {
    if x.algebra() != AlgebraKind::Hc {
        return Err(Error::NotHc(x.to_string()));
    }
    let mut out = FockVector::zero();
    for (m, c) in v.terms() {
        out.add_scaled(&hc_act_monomial(x, m, spec)?, c);
    }
    Ok(out)
}
