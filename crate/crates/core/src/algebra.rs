//! Structure constants of the N=1 BMS superalgebra and of the
//! Heisenberg-Clifford algebra.
//!
//! Both algebras are presented by a basis of mode generators plus central
//! elements. Central elements are ordinary basis generators of degree 0 whose
//! brackets all vanish.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.0.into(), 2.into())
    }

    /// Integer part, rounding towards negative infinity.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3"`, `"-2"`, `"3/2"`, `"-1/2"` and `"4/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed half-integer `{s}`"));
        match s.split_once('/') {
            None => s.trim().parse::<i64>().map(HalfInt::int).map_err(|_| bad()),
            Some((n, "2")) => n.trim().parse::<i64>().map(HalfInt).map_err(|_| bad()),
            Some((n, "1")) => n.trim().parse::<i64>().map(HalfInt::int).map_err(|_| bad()),
            Some(_) => Err(bad()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraKind {
    /// The N=1 BMS superalgebra.
    Bms,
    /// The Heisenberg-Clifford algebra.
    Hc,
}

/// Generator families. `C1`, `C2` and `K` are central.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    L,
    M,
    Q,
    C1,
    C2,
    A,
    B,
    C,
    K,
}

impl Family {
    pub fn algebra(self) -> AlgebraKind {
        match self {
            Family::L | Family::M | Family::Q | Family::C1 | Family::C2 => AlgebraKind::Bms,
            Family::A | Family::B | Family::C | Family::K => AlgebraKind::Hc,
        }
    }

    pub fn is_central(self) -> bool {
        matches!(self, Family::C1 | Family::C2 | Family::K)
    }

    pub fn parity(self) -> Parity {
        match self {
            Family::Q | Family::C => Parity::Odd,
            _ => Parity::Even,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::M => "M",
            Family::Q => "Q",
            Family::C1 => "c1",
            Family::C2 => "c2",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::K => "k",
        }
    }
}

/// A basis element: a mode generator with its index, or a central element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: Family,
    index: HalfInt,
}

impl Generator {
    /// Checks that the index has the right integrality for the family.
    pub fn new(family: Family, index: HalfInt) -> Result<Self> {
        let ok = match family {
            Family::L | Family::M | Family::A | Family::B => index.is_integer(),
            Family::Q | Family::C => !index.is_integer(),
            Family::C1 | Family::C2 | Family::K => index == HalfInt::ZERO,
        };
        if ok {
            Ok(Generator { family, index })
        } else {
            Err(Error::BadIndex(format!("{}[{}]", family.symbol(), index)))
        }
    }

    pub fn l(n: i64) -> Self {
        Generator {
            family: Family::L,
            index: HalfInt::int(n),
        }
    }

    pub fn m(n: i64) -> Self {
        Generator {
            family: Family::M,
            index: HalfInt::int(n),
        }
    }

    /// `Q_{twice/2}`; `twice` must be odd.
    pub fn q(twice: i64) -> Self {
        assert!(twice % 2 != 0, "Q modes are half-odd");
        Generator {
            family: Family::Q,
            index: HalfInt::from_twice(twice),
        }
    }

    pub fn a(n: i64) -> Self {
        Generator {
            family: Family::A,
            index: HalfInt::int(n),
        }
    }

    pub fn b(n: i64) -> Self {
        Generator {
            family: Family::B,
            index: HalfInt::int(n),
        }
    }

    /// `c_{twice/2}`; `twice` must be odd.
    pub fn c(twice: i64) -> Self {
        assert!(twice % 2 != 0, "c modes are half-odd");
        Generator {
            family: Family::C,
            index: HalfInt::from_twice(twice),
        }
    }

    pub fn central(family: Family) -> Self {
        assert!(family.is_central());
        Generator {
            family,
            index: HalfInt::ZERO,
        }
    }

    pub const C1: Generator = Generator {
        family: Family::C1,
        index: HalfInt::ZERO,
    };
    pub const C2: Generator = Generator {
        family: Family::C2,
        index: HalfInt::ZERO,
    };
    pub const K: Generator = Generator {
        family: Family::K,
        index: HalfInt::ZERO,
    };

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> HalfInt {
        self.index
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.family.algebra()
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    pub fn is_central(&self) -> bool {
        self.family.is_central()
    }

    /// Same family, index replaced.
    pub fn with_index(&self, index: HalfInt) -> Generator {
        Generator {
            family: self.family,
            index,
        }
    }

    /// All non-central BMS generators with `|index| <= bound`.
    pub fn bms_modes(bound: HalfInt) -> Vec<Generator> {
        let b = bound.twice();
        let mut out = Vec::new();
        for t in -b..=b {
            if t % 2 == 0 {
                out.push(Generator::l(t / 2));
                out.push(Generator::m(t / 2));
            } else {
                out.push(Generator::q(t));
            }
        }
        out
    }

    /// All non-central Heisenberg-Clifford generators with `|index| <= bound`.
    pub fn hc_modes(bound: HalfInt) -> Vec<Generator> {
        let b = bound.twice();
        let mut out = Vec::new();
        for t in -b..=b {
            if t % 2 == 0 {
                out.push(Generator::a(t / 2));
                out.push(Generator::b(t / 2));
            } else {
                out.push(Generator::c(t));
            }
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_central() {
            f.write_str(self.family.symbol())
        } else {
            write!(f, "{}[{}]", self.family.symbol(), self.index)
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c1" => return Ok(Generator::C1),
            "c2" => return Ok(Generator::C2),
            "k" => return Ok(Generator::K),
            _ => {}
        }
        let bad = || Error::Parse(format!("malformed generator `{s}`"));
        let (sym, rest) = s.split_once('[').ok_or_else(bad)?;
        let idx = rest.strip_suffix(']').ok_or_else(bad)?;
        let family = match sym {
            "L" => Family::L,
            "M" => Family::M,
            "Q" => Family::Q,
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            _ => return Err(bad()),
        };
        let index: HalfInt = idx.parse()?;
        let g = Generator::new(family, index)?;
        // Only the canonical spelling round-trips.
        if g.to_string() != s {
            return Err(bad());
        }
        Ok(g)
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite linear combination of generators with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Generator, Poly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_generator(g: Generator) -> Self {
        Self::term(g, Poly::one())
    }

    pub fn term(g: Generator, c: Poly) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    pub fn add_term(&mut self, g: Generator, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &Generator) -> Poly {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero();
        for (g, x) in &self.terms {
            out.add_term(*g, x * c);
        }
        out
    }

    pub fn add(&self, other: &AlgebraElement) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> Self {
        self.add(&other.scale(&Poly::int(-1)))
    }

    /// True if every term is central.
    pub fn is_central(&self) -> bool {
        self.terms.keys().all(Generator::is_central)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{g}")?;
        }
        Ok(())
    }
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// The super-bracket `[x, y]` (an anticommutator when both are odd).
pub fn bracket(x: Generator, y: Generator) -> Result<AlgebraElement> {
    if x.algebra() != y.algebra() {
        return Err(Error::MixedAlgebra(x.to_string(), y.to_string()));
    }
    let mut out = AlgebraElement::zero();
    if x.is_central() || y.is_central() {
        return Ok(out);
    }
    // Indices as doubled integers: the mode of x is tx/2.
    let (tx, ty) = (x.index.twice(), y.index.twice());
    let sum = HalfInt::from_twice(tx + ty);
    let opposite = tx + ty == 0;
    use Family::*;
    match (x.family, y.family) {
        (L, L) | (L, M) => {
            let target = if y.family == L { L } else { M };
            let coeff = rat(tx - ty, 2);
            if !coeff.is_zero() {
                out.add_term(
                    Generator {
                        family: target,
                        index: sum,
                    },
                    Poly::constant(coeff),
                );
            }
            if opposite {
                // (m^3 - m)/12 with m = tx/2
                let c = rat(tx * tx * tx - 4 * tx, 96);
                let central = if target == L {
                    Generator::C1
                } else {
                    Generator::C2
                };
                out.add_term(central, Poly::constant(c));
            }
        }
        (M, L) | (Q, L) => {
            return Ok(bracket(y, x)?.scale(&Poly::int(-1)));
        }
        (Q, Q) => {
            out.add_term(
                Generator {
                    family: M,
                    index: sum,
                },
                Poly::int(2),
            );
            if opposite {
                // (r^2 - 1/4)/3 with r = tx/2
                out.add_term(Generator::C2, Poly::constant(rat(tx * tx - 1, 12)));
            }
        }
        (L, Q) => {
            // (m/2 - r) = (tx/2 - ty)/2
            let coeff = rat(tx - 2 * ty, 4);
            if !coeff.is_zero() {
                out.add_term(
                    Generator {
                        family: Q,
                        index: sum,
                    },
                    Poly::constant(coeff),
                );
            }
        }
        (M, M) | (M, Q) | (Q, M) => {}
        (A, B) => {
            if opposite && tx != 0 {
                out.add_term(Generator::K, Poly::constant(rat(tx, 2)));
            }
        }
        (B, A) => {
            return Ok(bracket(y, x)?.scale(&Poly::int(-1)));
        }
        (C, C) => {
            if opposite {
                out.add_term(Generator::K, Poly::one());
            }
        }
        (A, A) | (B, B) | (A, C) | (C, A) | (B, C) | (C, B) => {}
        _ => unreachable!("central and cross-algebra cases handled above"),
    }
    Ok(out)
}

/// Bilinear extension of [`bracket`] to linear combinations.
pub fn bracket_elements(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (gx, cx) in x.terms() {
        for (gy, cy) in y.terms() {
            let b = bracket(*gx, *gy)?;
            out = out.add(&b.scale(&(cx * cy)));
        }
    }
    Ok(out)
}

/// The anti-involution on a single generator: modes are negated, central
/// elements are fixed.
pub fn anti_involution_generator(g: Generator) -> Result<Generator> {
    if g.algebra() != AlgebraKind::Bms {
        return Err(Error::NotBms(g.to_string()));
    }
    Ok(g.with_index(-g.index))
}

pub fn anti_involution(x: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (g, c) in x.terms() {
        out.add_term(anti_involution_generator(*g)?, c.clone());
    }
    Ok(out)
}

/// The degree (mode index, 0 for central elements) and the parity.
pub fn degree_parity(g: Generator) -> (HalfInt, Parity) {
    (g.index, g.parity())
}

/// Sign `(-1)^{|x||y|}` used in super-commutation.
pub fn swap_sign(x: Generator, y: Generator) -> i64 {
    if x.is_odd() && y.is_odd() {
        -1
    } else {
        1
    }
}
