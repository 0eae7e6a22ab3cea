//! Verma modules `M(h1, h2, c1, c2) = U(g_-) 1` and the action of `U(g)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::algebra::{bracket, swap_sign, AlgebraKind, Family, Generator};
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rational, Var};
use crate::pbw::{normal_form, pbw_key, IndexTriple, Strategy, UeaElement};
use serde::{Deserialize, Serialize};

/// Highest weight and central charges. Each entry is a polynomial, so any mix
/// of symbolic and numeric values is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightParams {
    pub h1: Poly,
    pub h2: Poly,
    pub c1: Poly,
    pub c2: Poly,
}

impl WeightParams {
    /// All four parameters left as the symbols `h1, h2, c1, c2`.
    pub fn symbolic() -> Self {
        WeightParams {
            h1: Poly::var(Var::H1),
            h2: Poly::var(Var::H2),
            c1: Poly::var(Var::C1),
            c2: Poly::var(Var::C2),
        }
    }

    pub fn numeric(h1: Rational, h2: Rational, c1: Rational, c2: Rational) -> Self {
        WeightParams {
            h1: h1.into(),
            h2: h2.into(),
            c1: c1.into(),
            c2: c2.into(),
        }
    }

    /// The four values as rationals, if none of them is symbolic.
    pub fn as_numeric(&self) -> Option<[Rational; 4]> {
        Some([
            self.h1.as_constant()?,
            self.h2.as_constant()?,
            self.c1.as_constant()?,
            self.c2.as_constant()?,
        ])
    }

    fn scalar_of(&self, g: Generator) -> Option<&Poly> {
        match (g.family(), g.index().twice()) {
            (Family::L, 0) => Some(&self.h1),
            (Family::M, 0) => Some(&self.h2),
            (Family::C1, _) => Some(&self.c1),
            (Family::C2, _) => Some(&self.c2),
            _ => None,
        }
    }
}

/// A vector `sum a_{ijk} Q^k M^j L^i 1` of a Verma module.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VermaVector {
    terms: BTreeMap<IndexTriple, Poly>,
}

impl VermaVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The highest-weight vector `1`.
    pub fn vacuum() -> Self {
        Self::basis(IndexTriple::empty())
    }

    pub fn basis(t: IndexTriple) -> Self {
        Self::term(t, Poly::one())
    }

    pub fn term(t: IndexTriple, c: Poly) -> Self {
        let mut v = Self::zero();
        v.add_term(t, c);
        v
    }

    pub fn add_term(&mut self, t: IndexTriple, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add_scaled(&mut self, other: &VermaVector, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for (t, x) in &other.terms {
            self.add_term(t.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Poly) -> VermaVector {
        let mut out = VermaVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        out.add_scaled(other, &Poly::int(-1));
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTriple, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &IndexTriple) -> Poly {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (t, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{t}")?;
        }
        Ok(())
    }
}

/// A Verma module with fixed parameters. Generator actions on basis vectors
/// are memoized.
#[derive(Debug)]
pub struct VermaModule {
    params: WeightParams,
    cache: Mutex<HashMap<(Generator, IndexTriple), VermaVector>>,
}

impl VermaModule {
    pub fn new(params: WeightParams) -> Self {
        VermaModule {
            params,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &WeightParams {
        &self.params
    }

    /// `g . (Q^k M^j L^i 1)` for a single generator `g`.
    pub fn act_generator(&self, g: Generator, t: &IndexTriple) -> Result<VermaVector> {
        if g.algebra() != AlgebraKind::Bms {
            return Err(Error::NotBms(g.to_string()));
        }
        if let Some(v) = self.cache.lock().unwrap().get(&(g, t.clone())) {
            return Ok(v.clone());
        }
        let v = self.act_generator_uncached(g, t)?;
        self.cache.lock().unwrap().insert((g, t.clone()), v.clone());
        Ok(v)
    }

    fn act_generator_uncached(&self, g: Generator, t: &IndexTriple) -> Result<VermaVector> {
        if g.is_central() {
            let c = self.params.scalar_of(g).expect("central");
            return Ok(VermaVector::term(t.clone(), c.clone()));
        }
        let word = t.to_word();
        let Some(&first) = word.first() else {
            // g acting on the highest-weight vector
            return Ok(match g.index().twice().signum() {
                -1 => VermaVector::basis(IndexTriple::from_word(&[g]).expect("lowering")),
                0 => VermaVector::term(t.clone(), self.params.scalar_of(g).unwrap().clone()),
                _ => VermaVector::zero(),
            });
        };
        let (kg, kf) = (pbw_key(&g), pbw_key(&first));
        if g.index().is_negative() && (kg < kf || (g == first && !g.is_odd())) {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(g);
            w.extend_from_slice(&word);
            let prepended = IndexTriple::from_word(&w).expect("canonical lowering word");
            return Ok(VermaVector::basis(prepended));
        }
        let rest = IndexTriple::from_word(&word[1..]).expect("suffix of canonical word");
        let mut out = VermaVector::zero();
        if g == first && g.is_odd() {
            // g g = [g, g] / 2
            for (h, c) in bracket(g, g)?.terms() {
                let v = self.act_generator(*h, &rest)?;
                out.add_scaled(&v, &(c * &Poly::frac(1, 2)));
            }
            return Ok(out);
        }
        // g y rest = ± y (g rest) + [g, y] rest
        let inner = self.act_generator(g, &rest)?;
        let sign = Poly::int(swap_sign(g, first));
        for (s, c) in inner.terms() {
            let v = self.act_generator(first, s)?;
            out.add_scaled(&v, &(c * &sign));
        }
        for (h, c) in bracket(g, first)?.terms() {
            let v = self.act_generator(*h, &rest)?;
            out.add_scaled(&v, c);
        }
        Ok(out)
    }

    /// `g . v` for a single generator.
    pub fn act_generator_on(&self, g: Generator, v: &VermaVector) -> Result<VermaVector> {
        let mut out = VermaVector::zero();
        for (t, c) in v.terms() {
            out.add_scaled(&self.act_generator(g, t)?, c);
        }
        Ok(out)
    }

    /// The action of an enveloping-algebra element; the rightmost letter of
    /// each word acts first.
    pub fn act(&self, x: &UeaElement, v: &VermaVector) -> Result<VermaVector> {
        let mut out = VermaVector::zero();
        for (m, c) in x.terms() {
            let mut cur = v.clone();
            for g in m.word().iter().rev() {
                cur = self.act_generator_on(*g, &cur)?;
            }
            out.add_scaled(&cur, c);
        }
        Ok(out)
    }

    /// The contravariant form of two basis vectors: the coefficient of `1` in
    /// `ω(u) v`.
    pub fn form_basis(&self, u: &IndexTriple, v: &IndexTriple) -> Result<Poly> {
        if u.weight() != v.weight() {
            return Ok(Poly::zero());
        }
        let mut cur = VermaVector::basis(v.clone());
        // ω(y1 ... yr) = ω(yr) ... ω(y1), so ω(y1) acts first.
        for g in u.to_word() {
            cur = self.act_generator_on(g.with_index(-g.index()), &cur)?;
            if cur.is_zero() {
                return Ok(Poly::zero());
            }
        }
        Ok(cur.coefficient(&IndexTriple::empty()))
    }

    /// Bilinear extension of [`form_basis`](Self::form_basis).
    pub fn contravariant_form(&self, u: &VermaVector, v: &VermaVector) -> Result<Poly> {
        let mut total = Poly::zero();
        for (s, a) in u.terms() {
            for (t, b) in v.terms() {
                let f = self.form_basis(s, t)?;
                if !f.is_zero() {
                    total += &(&f * &(a * b));
                }
            }
        }
        Ok(total)
    }
}

/// `x . v` computed by normal-ordering `x · word(v)` in the full enveloping
/// algebra, dropping monomials with a raising factor and evaluating the
/// degree-zero part on `1`. Independent of the memoized recursion in
/// [`VermaModule`].
pub fn act_via_normal_form(
    x: &UeaElement,
    v: &VermaVector,
    params: &WeightParams,
) -> Result<VermaVector> {
    let mut words = Vec::new();
    for (m, c) in x.terms() {
        for (t, d) in v.terms() {
            let mut w = m.word().to_vec();
            w.extend(t.to_word());
            words.push((w, c * d));
        }
    }
    let nf = normal_form(words, Strategy::Leftmost)?;
    let mut out = VermaVector::zero();
    'terms: for (m, c) in nf.terms() {
        let mut coeff = c.clone();
        let mut lowering = Vec::new();
        for g in m.word() {
            match g.index().twice().signum() {
                -1 => lowering.push(*g),
                1 => continue 'terms,
                _ => coeff = &coeff * params.scalar_of(*g).expect("degree-zero generator"),
            }
        }
        let t = IndexTriple::from_word(&lowering).expect("canonical lowering prefix");
        out.add_term(t, coeff);
    }
    Ok(out)
}

/// `act(x, v)` with a fresh module.
pub fn act(x: &UeaElement, v: &VermaVector, params: &WeightParams) -> Result<VermaVector> {
    VermaModule::new(params.clone()).act(x, v)
}

/// `<u, v>` with a fresh module.
pub fn contravariant_form(u: &VermaVector, v: &VermaVector, params: &WeightParams) -> Result<Poly> {
    VermaModule::new(params.clone()).contravariant_form(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> IndexTriple {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn module() -> VermaModule {
        VermaModule::new(WeightParams::symbolic())
    }

    #[test]
    fn act_examples() {
        let m = module();
        assert_eq!(
            m.act_generator(Generator::l(1), &t("M[-1]")).unwrap(),
            VermaVector::term(IndexTriple::empty(), p("2*h2"))
        );
        assert!(m
            .act_generator(Generator::m(1), &t("M[-1]"))
            .unwrap()
            .is_zero());
        // L1 L-1^2 = L-1^2 L1 + 2 L-1 L0 + 2 L0 L-1; L0 L-1 1 = (h1 + 1) L-1 1
        assert_eq!(
            m.act_generator(Generator::l(1), &t("L[-1]^2")).unwrap(),
            VermaVector::term(t("L[-1]"), p("4*h1 + 2"))
        );
    }

    #[test]
    fn form_examples() {
        let m = module();
        assert_eq!(
            m.form_basis(&t("Q[-1/2]"), &t("Q[-1/2]")).unwrap(),
            p("2*h2")
        );
        assert_eq!(m.form_basis(&t("L[-1]"), &t("L[-1]")).unwrap(), p("2*h1"));
        assert!(m.form_basis(&t("M[-1]"), &t("M[-1]")).unwrap().is_zero());
        assert_eq!(
            m.form_basis(&t("L[-1]^2"), &t("M[-1]^2")).unwrap(),
            p("8*h2^2")
        );
        assert!(m.form_basis(&t("L[-1]"), &t("Q[-1/2]")).unwrap().is_zero());
    }

    #[test]
    fn recursive_action_agrees_with_normal_form_route() {
        let m = module();
        let params = WeightParams::symbolic();
        let gens = [
            Generator::l(2),
            Generator::l(-1),
            Generator::m(1),
            Generator::q(1),
            Generator::q(-3),
            Generator::l(0),
            Generator::m(0),
            Generator::C2,
        ];
        for s in [
            "1",
            "Q[-1/2]M[-1]",
            "M[-2]",
            "Q[-3/2]Q[-1/2]",
            "L[-1]^2",
            "M[-1]L[-1]",
        ] {
            let v = VermaVector::basis(t(s));
            for g in gens {
                let x = UeaElement::generator(g);
                assert_eq!(
                    m.act(&x, &v).unwrap(),
                    act_via_normal_form(&x, &v, &params).unwrap(),
                    "{g} on {s}"
                );
            }
        }
    }

    #[test]
    fn hc_generators_are_rejected() {
        assert!(module()
            .act_generator(Generator::a(1), &IndexTriple::empty())
            .is_err());
    }
}
