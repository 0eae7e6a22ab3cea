//! Index triples `(i, j, k)` labelling the PBW basis `Q^k M^j L^i` of the
//! lowering subalgebra, and the weight-space bases built from them.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::normal::PbwMonomial;
use super::order::principal_sn;
use crate::algebra::{Family, Generator, HalfInt};
use crate::error::{Error, Result};

/// Exponents of `L_{-n}` (`i`), `M_{-n}` (`j`) and `Q_{-n+1/2}` (`k`); entry
/// `n - 1` of each vector belongs to `n`. Trailing zeros are trimmed so that
/// equal triples compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexTriple {
    i: Vec<u32>,
    j: Vec<u32>,
    k: Vec<u32>,
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Weight of an exponent vector whose entry `n - 1` belongs to mode `n`.
pub(crate) fn vector_weight(v: &[u32]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(n, &e)| (n as i64 + 1) * e as i64)
        .sum()
}

impl IndexTriple {
    pub fn new(i: Vec<u32>, j: Vec<u32>, k: Vec<u32>) -> Result<Self> {
        if k.iter().any(|&e| e > 1) {
            return Err(Error::BadIndex("odd exponents must be 0 or 1".into()));
        }
        Ok(IndexTriple {
            i: trim(i),
            j: trim(j),
            k: trim(k),
        })
    }

    pub fn empty() -> Self {
        IndexTriple::default()
    }

    pub fn i(&self) -> &[u32] {
        &self.i
    }

    pub fn j(&self) -> &[u32] {
        &self.j
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn is_empty(&self) -> bool {
        self.i.is_empty() && self.j.is_empty() && self.k.is_empty()
    }

    /// `|i|`, the weight of the `L` part.
    pub fn i_weight(&self) -> HalfInt {
        HalfInt::int(vector_weight(&self.i))
    }

    pub fn j_weight(&self) -> HalfInt {
        HalfInt::int(vector_weight(&self.j))
    }

    /// `|k| = sum k_n (n - 1/2)`.
    pub fn k_weight(&self) -> HalfInt {
        let twice: i64 = self
            .k
            .iter()
            .enumerate()
            .map(|(n, &e)| (2 * n as i64 + 1) * e as i64)
            .sum();
        HalfInt::from_twice(twice)
    }

    /// The length `w(i, j, k)`.
    pub fn weight(&self) -> HalfInt {
        self.i_weight() + self.j_weight() + self.k_weight()
    }

    pub fn is_odd(&self) -> bool {
        self.k.iter().sum::<u32>() % 2 == 1
    }

    /// The word `... Q_{-3/2}^{k_2} Q_{-1/2}^{k_1} ... M_{-1}^{j_1} ... L_{-1}^{i_1}`.
    pub fn to_word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for (n, &e) in self.k.iter().enumerate().rev() {
            for _ in 0..e {
                w.push(Generator::q(-(2 * n as i64 + 1)));
            }
        }
        for (n, &e) in self.j.iter().enumerate().rev() {
            for _ in 0..e {
                w.push(Generator::m(-(n as i64 + 1)));
            }
        }
        for (n, &e) in self.i.iter().enumerate().rev() {
            for _ in 0..e {
                w.push(Generator::l(-(n as i64 + 1)));
            }
        }
        w
    }

    pub fn to_monomial(&self) -> PbwMonomial {
        PbwMonomial::new(self.to_word())
    }

    /// Inverse of [`to_word`](Self::to_word); `None` unless the word is a
    /// canonical monomial in lowering generators.
    pub fn from_word(word: &[Generator]) -> Option<IndexTriple> {
        let mut i = Vec::new();
        let mut j = Vec::new();
        let mut k = Vec::new();
        for g in word {
            let t = g.index().twice();
            if t >= 0 {
                return None;
            }
            let (v, slot) = match g.family() {
                Family::L => (&mut i, (-t / 2 - 1) as usize),
                Family::M => (&mut j, (-t / 2 - 1) as usize),
                Family::Q => (&mut k, ((-t - 1) / 2) as usize),
                _ => return None,
            };
            if v.len() <= slot {
                v.resize(slot + 1, 0);
            }
            v[slot] += 1;
        }
        let triple = IndexTriple::new(i, j, k).ok()?;
        (triple.to_word() == word).then_some(triple)
    }

    /// `u*`: the `L` and `M` exponents exchanged.
    pub fn star_dual(&self) -> IndexTriple {
        IndexTriple {
            i: self.j.clone(),
            j: self.i.clone(),
            k: self.k.clone(),
        }
    }
}

impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_monomial().fmt(f)
    }
}

impl std::str::FromStr for IndexTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m: PbwMonomial = s.parse()?;
        IndexTriple::from_word(m.word())
            .ok_or_else(|| Error::Parse(format!("`{s}` is not a lowering PBW monomial")))
    }
}

impl Serialize for IndexTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IndexTriple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `u*` for a basis triple.
pub fn star_dual(t: &IndexTriple) -> IndexTriple {
    t.star_dual()
}

/// All exponent vectors `v` with `sum (n+1) v[n] = total`, parts at most `max_part`.
fn partitions(total: i64, max_part: i64) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for part in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - part, part) {
            let slot = (part - 1) as usize;
            if rest.len() <= slot {
                rest.resize(slot + 1, 0);
            }
            rest[slot] += 1;
            out.push(rest);
        }
    }
    out
}

/// Sets of distinct half-odd modes `n - 1/2` with total `twice / 2`, as 0/1
/// vectors indexed by `n - 1`.
fn strict_odd_partitions(twice: i64, max_twice_part: i64) -> Vec<Vec<u32>> {
    if twice == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut part = max_twice_part.min(twice);
    if part % 2 == 0 {
        part -= 1;
    }
    while part >= 1 {
        for mut rest in strict_odd_partitions(twice - part, part - 2) {
            let slot = ((part - 1) / 2) as usize;
            if rest.len() <= slot {
                rest.resize(slot + 1, 0);
            }
            rest[slot] = 1;
            out.push(rest);
        }
        part -= 2;
    }
    out
}

/// `S_n`: every triple of length `n`, sorted in decreasing principal order.
/// Negative levels give an empty list.
pub fn weight_basis(n: HalfInt) -> Vec<IndexTriple> {
    let total = n.twice();
    if total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k_twice in 0..=total {
        if (total - k_twice) % 2 != 0 {
            continue;
        }
        let rest = (total - k_twice) / 2;
        for k in strict_odd_partitions(k_twice, k_twice) {
            for j_total in 0..=rest {
                for j in partitions(j_total, j_total) {
                    for i in partitions(rest - j_total, rest - j_total) {
                        out.push(IndexTriple {
                            i: trim(i),
                            j: trim(j.clone()),
                            k: trim(k.clone()),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| principal_sn(y, x));
    out
}

/// Coefficient of `q^n` in `prod_{k in N+1/2} (1 + q^k) / prod_{k >= 1} (1 - q^k)^2`,
/// computed by truncated series multiplication in powers of `q^{1/2}`.
pub fn partition_count(n: HalfInt) -> u64 {
    let top = n.twice();
    if top < 0 {
        return 0;
    }
    let top = top as usize;
    let mut series = vec![0u64; top + 1];
    series[0] = 1;
    // (1 + q^{t/2}) for odd t
    for t in (1..=top).step_by(2) {
        for e in (t..=top).rev() {
            series[e] += series[e - t];
        }
    }
    // 1/(1 - q^m)^2 for integer m, i.e. step 2m in half-powers, applied twice
    for m in 1..=top / 2 {
        let step = 2 * m;
        for _ in 0..2 {
            for e in step..=top {
                series[e] += series[e - step];
            }
        }
    }
    series[top]
}
