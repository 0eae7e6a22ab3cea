//! PBW monomials, enveloping-algebra elements and normal ordering.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{anti_involution_generator, bracket, swap_sign, Family, Generator};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational};

/// Position of a generator in the canonical PBW order: lowering modes, then
/// degree-zero and central elements, then raising modes. Inside each part the
/// families run Q, M, L (resp. c, b, a) and modes decrease in absolute value.
pub fn pbw_key(g: &Generator) -> (u8, u8, i64) {
    let t = g.index().twice();
    let part = match t.signum() {
        -1 => 0,
        0 => 1,
        _ => 2,
    };
    let family = match g.family() {
        Family::Q | Family::C => 0,
        Family::M | Family::B => 1,
        Family::L | Family::A => 2,
        Family::C1 | Family::K => 3,
        Family::C2 => 4,
    };
    (part, family, -t.abs())
}

/// Rewriting strategy: which out-of-order adjacent pair is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// A word of generators. Words stored in a [`UeaElement`] are always in
/// canonical PBW order with no repeated odd generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(Vec<Generator>);

impl PbwMonomial {
    pub fn new(word: Vec<Generator>) -> Self {
        PbwMonomial(word)
    }

    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn word(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_word(self) -> Vec<Generator> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        first_violation(&self.0, Strategy::Leftmost).is_none()
    }

    /// Total degree of the word.
    pub fn degree(&self) -> crate::algebra::HalfInt {
        self.0
            .iter()
            .fold(crate::algebra::HalfInt::ZERO, |acc, g| acc + g.index())
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().filter(|g| g.is_odd()).count() % 2 == 1
    }
}

impl fmt::Display for PbwMonomial {
    /// Left-to-right product with runs written as powers: `Q[-3/2]M[-2]L[-1]^2`.
    /// The empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let run = self.0[i..].iter().take_while(|&&h| h == g).count();
            write!(f, "{g}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for PbwMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(PbwMonomial::one());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut word = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let token_len = if rest.starts_with("c1") || rest.starts_with("c2") {
                if rest[2..].starts_with('[') {
                    return Err(Error::Parse(format!("malformed monomial `{s}`")));
                }
                2
            } else if rest.starts_with('k') {
                1
            } else {
                rest.find(']')
                    .map(|p| p + 1)
                    .ok_or_else(|| Error::Parse(format!("malformed monomial `{s}`")))?
            };
            let g: Generator = rest[..token_len].parse()?;
            rest = &rest[token_len..];
            let mut power = 1usize;
            if let Some(after) = rest.strip_prefix('^') {
                let digits = after.bytes().take_while(u8::is_ascii_digit).count();
                power = after[..digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
                if power < 2 || after.starts_with('0') {
                    return Err(Error::Parse(format!("bad exponent in `{s}`")));
                }
                rest = &after[digits..];
            }
            word.extend(std::iter::repeat_n(g, power));
        }
        let m = PbwMonomial(word);
        if m.to_string() != s {
            return Err(Error::Parse(format!("non-canonical spelling `{s}`")));
        }
        Ok(m)
    }
}

impl Serialize for PbwMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PbwMonomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element of an enveloping algebra, in PBW normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    terms: BTreeMap<PbwMonomial, Poly>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Vec::new())
    }

    /// A single word, normal-ordered.
    pub fn from_word(word: Vec<Generator>) -> Self {
        normal_form(vec![(word, Poly::one())], Strategy::Leftmost).expect("single-algebra word")
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_word(vec![g])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Poly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Poly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: PbwMonomial, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &UeaElement) -> Result<UeaElement> {
        let mut words = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = m1.word().to_vec();
                w.extend_from_slice(m2.word());
                words.push((w, c1 * c2));
            }
        }
        normal_form(words, Strategy::Leftmost)
    }

    /// The anti-involution extended as an anti-homomorphism: each word is
    /// reversed and every letter mapped.
    pub fn anti_involution(&self) -> Result<UeaElement> {
        let mut words = Vec::new();
        for (m, c) in &self.terms {
            let w = m
                .word()
                .iter()
                .rev()
                .map(|g| anti_involution_generator(*g))
                .collect::<Result<Vec<_>>>()?;
            words.push((w, c.clone()));
        }
        normal_form(words, Strategy::Leftmost)
    }
}

impl fmt::Display for UeaElement {
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

/// Position `p` such that the pair `(w[p], w[p+1])` must be rewritten.
fn first_violation(word: &[Generator], strategy: Strategy) -> Option<usize> {
    let bad = |p: &usize| {
        let (x, y) = (&word[*p], &word[p + 1]);
        let (kx, ky) = (pbw_key(x), pbw_key(y));
        kx > ky || (x == y && x.is_odd())
    };
    let n = word.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => (0..n).find(bad),
        Strategy::Rightmost => (0..n).rev().find(bad),
    }
}

/// Rewrites a linear combination of words into PBW normal form.
///
/// Out-of-order neighbours are swapped with `xy = ±yx + [x,y]`, and the square
/// of an odd generator is replaced by `x^2 = [x,x]/2`. Each rewrite either
/// removes an inversion or shortens the word, so the process terminates.
pub fn normal_form(words: Vec<(Vec<Generator>, Poly)>, strategy: Strategy) -> Result<UeaElement> {
    let mut out = UeaElement::zero();
    let mut stack = words;
    while let Some((word, coeff)) = stack.pop() {
        if coeff.is_zero() {
            continue;
        }
        let Some(p) = first_violation(&word, strategy) else {
            out.add_term(PbwMonomial(word), coeff);
            continue;
        };
        let (x, y) = (word[p], word[p + 1]);
        let br = bracket(x, y)?;
        if x == y {
            // x odd: x^2 = [x,x]/2
            for (g, c) in br.terms() {
                let mut w = word[..p].to_vec();
                w.push(*g);
                w.extend_from_slice(&word[p + 2..]);
                stack.push((w, &(&coeff * c) * &Poly::frac(1, 2)));
            }
            continue;
        }
        let mut swapped = word.clone();
        swapped.swap(p, p + 1);
        stack.push((
            swapped,
            coeff.scale(&Rational::from_integer(swap_sign(x, y).into())),
        ));
        for (g, c) in br.terms() {
            let mut w = word[..p].to_vec();
            w.push(*g);
            w.extend_from_slice(&word[p + 2..]);
            stack.push((w, &coeff * c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(terms: &[(&str, Poly)]) -> UeaElement {
        let mut e = UeaElement::zero();
        for (m, c) in terms {
            e.add_term(m.parse().unwrap(), c.clone());
        }
        e
    }

    fn nf(word: &[Generator]) -> UeaElement {
        normal_form(vec![(word.to_vec(), Poly::one())], Strategy::Leftmost).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            nf(&[Generator::l(1), Generator::l(-1)]),
            elem(&[("L[-1]L[1]", Poly::one()), ("L[0]", Poly::int(2))])
        );
        assert_eq!(
            nf(&[Generator::q(-1), Generator::q(-1)]),
            elem(&[("M[-1]", Poly::one())])
        );
        // L1 M-1 M-1 = M-1^2 L1 + 2 M0 M-1 + 2 M-1 M0, and M0 commutes with M-1.
        assert_eq!(
            nf(&[Generator::l(1), Generator::m(-1), Generator::m(-1)]),
            elem(&[("M[-1]^2L[1]", Poly::one()), ("M[-1]M[0]", Poly::int(4))])
        );
    }

    #[test]
    fn odd_lowering_modes_anticommute_up_to_m() {
        let w = nf(&[Generator::m(-2), Generator::q(-1), Generator::q(-3)]);
        assert_eq!(
            w,
            elem(&[
                ("Q[-3/2]Q[-1/2]M[-2]", Poly::int(-1)),
                ("M[-2]^2", Poly::int(2))
            ])
        );
    }

    #[test]
    fn monomial_text_round_trip() {
        for s in [
            "1",
            "Q[-3/2]Q[-1/2]M[-2]L[-1]^2",
            "M[0]L[0]c1c2",
            "a[-1]k",
            "c[-1/2]b[-2]^3",
        ] {
            let m: PbwMonomial = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        for s in ["", "L[-1]^1", "L[-1]L[-1]", "L[-1]^02", "Q[1/2", "c1[1]"] {
            assert!(s.parse::<PbwMonomial>().is_err(), "{s}");
        }
    }

    #[test]
    fn mixed_algebra_word_is_rejected() {
        let r = normal_form(
            vec![(vec![Generator::a(1), Generator::l(-1)], Poly::one())],
            Strategy::Leftmost,
        );
        assert!(r.is_err());
    }
}
