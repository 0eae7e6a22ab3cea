//! Sparse multivariate polynomials with exact rational coefficients over a
//! fixed, globally ordered set of parameters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// The parameters a [`Poly`] may mention, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    H1,
    H2,
    C1,
    C2,
    Rho,
    A,
    B,
    K,
    PhiA0,
    PhiA1,
    PhiB0,
    PhiB1,
}

pub const NVARS: usize = 12;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::H1,
        Var::H2,
        Var::C1,
        Var::C2,
        Var::Rho,
        Var::A,
        Var::B,
        Var::K,
        Var::PhiA0,
        Var::PhiA1,
        Var::PhiB0,
        Var::PhiB1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::H1 => "h1",
            Var::H2 => "h2",
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::Rho => "rho",
            Var::A => "a",
            Var::B => "b",
            Var::K => "k",
            Var::PhiA0 => "phi_a0",
            Var::PhiA1 => "phi_a1",
            Var::PhiB0 => "phi_b0",
            Var::PhiB1 => "phi_b1",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{s}`")))
    }
}

/// Exponent vector, ordered graded-lexicographically (total degree first, then
/// the exponent of the earliest variable).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += *y;
        }
        Monomial(e)
    }

    /// `self / other` if `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            if *x < *y {
                return None;
            }
            *x -= *y;
        }
        Some(Monomial(e))
    }

    /// Variables with positive exponent, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.0[v.index()] > 0)
            .map(|v| (v, self.0[v.index()]))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the parameters of [`Var`] with [`Rational`] coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(n.into()))
    }

    /// The constant `num/den`.
    pub fn frac(num: i64, den: i64) -> Self {
        Poly::constant(Rational::new(num.into(), den.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Monomial::var(v), Rational::one());
        p
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|v| self.terms.keys().any(|m| m.exponent(*v) > 0))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point. Every variable occurring in `self` must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.factors() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| Error::MissingVariable(v.name().to_string()))?;
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes polynomials for some variables; unassigned variables stay.
    pub fn substitute(&self, assignment: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut term = Poly::constant(c.clone());
            for (v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(p) => term = &term * &p.pow(e as u32),
                    None => kept.0[v.index()] = e,
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm.mul(&kept), tc);
            }
        }
        out
    }

    /// Exact division. Fails if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(&lm).ok_or(Error::InexactDivision)?;
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// The JSON term-list form: `[{"coeff": "p/q", "exps": {"h2": 1}}, ...]`,
    /// leading term first.
    pub fn to_term_list(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTerm {
                coeff: c.to_string(),
                exps: m
                    .factors()
                    .map(|(v, e)| (v.name().to_string(), e))
                    .collect(),
            })
            .collect()
    }

    pub fn from_term_list(list: &[PolyTerm]) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in list {
            let c = parse_rational(&t.coeff)?;
            let mut m = Monomial::one();
            for (name, e) in &t.exps {
                let v: Var = name.parse()?;
                m.0[v.index()] += *e;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// One entry of the JSON term-list form of a [`Poly`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exps: BTreeMap<String, u16>,
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, leading term first: `4*h2^2 - 1/2*c2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if m.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (v, e) in m.factors() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the canonical text form (whitespace-insensitive, any term order).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'/')
            {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut p = Poly::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (Rational::one(), &piece[1..]),
                b'-' => (-Rational::one(), &piece[1..]),
                _ => (Rational::one(), piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let mut coeff = sign;
            let mut m = Monomial::one();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{s}`")));
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    coeff *= parse_rational(factor)?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u16>()
                                .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?,
                        ),
                        None => (factor, 1),
                    };
                    let v: Var = name.parse()?;
                    m.0[v.index()] += exp;
                }
            }
            p.add_term(m, coeff);
        }
        Ok(p)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn eval_examples() {
        let mut at = BTreeMap::new();
        at.insert(Var::H2, q(3, 1));
        assert_eq!(
            (Poly::int(2) * Poly::var(Var::H2)).eval(&at).unwrap(),
            q(6, 1)
        );

        // h2 + (i^2 - 1)/24 c2 at i = 2
        let p = &Poly::var(Var::H2) + &Poly::var(Var::C2).scale(&q(3, 24));
        let mut at = BTreeMap::new();
        at.insert(Var::H2, q(-1, 1));
        at.insert(Var::C2, q(8, 1));
        assert_eq!(p.eval(&at).unwrap(), q(0, 1));

        assert_eq!(Poly::frac(5, 2).eval(&BTreeMap::new()).unwrap(), q(5, 2));
    }

    #[test]
    fn eval_missing_variable() {
        let p = &Poly::var(Var::H1) + &Poly::var(Var::Rho);
        let mut at = BTreeMap::new();
        at.insert(Var::H1, q(1, 1));
        assert_eq!(p.eval(&at), Err(Error::MissingVariable("rho".into())));
    }

    #[test]
    fn text_form() {
        let h2 = Poly::var(Var::H2);
        let c2 = Poly::var(Var::C2);
        let p = &(&h2 * &h2).scale(&q(4, 1)) - &c2.scale(&q(1, 2));
        let p = &p + &Poly::int(3);
        assert_eq!(p.to_string(), "4*h2^2 - 1/2*c2 + 3");
        assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
        assert_eq!((-&h2).to_string(), "-h2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(
            "-12*rho^2".parse::<Poly>().unwrap().to_string(),
            "-12*rho^2"
        );
        assert!("h3".parse::<Poly>().is_err());
        assert!("2*".parse::<Poly>().is_err());
    }

    #[test]
    fn exact_division() {
        let h2 = Poly::var(Var::H2);
        let c2 = Poly::var(Var::C2);
        let f = &(&h2 + &c2) * &(&h2 - &Poly::int(2));
        assert_eq!(f.div_exact(&(&h2 + &c2)).unwrap(), &h2 - &Poly::int(2));
        assert_eq!(f.div_exact(&c2), Err(Error::InexactDivision));
    }

    #[test]
    fn term_list_round_trip() {
        let p: Poly = "2*h2*c2 - 1/3*rho + 7".parse().unwrap();
        let list = p.to_term_list();
        assert_eq!(list[0].coeff, "2");
        assert_eq!(Poly::from_term_list(&list).unwrap(), p);
    }
}
