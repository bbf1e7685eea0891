//! The ring Λ = ℤ[h_1, h_2, …] in the basis of h-monomials.

mod basis;
mod grothendieck;
mod partition;

pub use basis::{expand_in_family, BasisError};
pub use grothendieck::{
    apply_f, apply_f_inv, apply_omega, determinant, dual_grothendieck, g_tilde, h_shifted,
    k_weight,
};
pub use partition::{Partition, PartitionError};

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A product h_{p_1} h_{p_2} ⋯ with p_1 ≥ p_2 ≥ ⋯ ≥ 1. The empty product is 1.
///
/// Ordered by degree, then lexicographically on the parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HMonomial {
    parts: Vec<u32>,
}

impl HMonomial {
    pub fn one() -> Self {
        HMonomial { parts: Vec::new() }
    }

    /// Zeros are dropped (h_0 = 1); the rest is sorted.
    pub fn from_parts(parts: &[usize]) -> Self {
        let mut v: Vec<u32> = parts.iter().filter(|&&p| p > 0).map(|&p| p as u32).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        HMonomial { parts: v }
    }

    pub fn parts(&self) -> Vec<usize> {
        self.parts.iter().map(|&p| p as usize).collect()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0) as usize
    }

    pub fn is_one(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts()).expect("monomial parts are sorted")
    }

    fn times(&self, other: &HMonomial) -> HMonomial {
        let (a, b) = (&self.parts, &other.parts);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        HMonomial { parts: out }
    }
}

impl Ord for HMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for HMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.parts.len() {
            let p = self.parts[idx];
            let mut e = 1;
            while idx + e < self.parts.len() && self.parts[idx + e] == p {
                e += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "h{p}")?;
            } else {
                write!(f, "h{p}^{e}")?;
            }
            idx += e;
        }
        Ok(())
    }
}

/// An element of Λ. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<HMonomial, BigInt>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SymFunc::monomial(HMonomial::one(), c)
    }

    pub fn monomial(m: HMonomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SymFunc { terms }
    }

    /// h_r, with h_0 = 1 and h_r = 0 for r < 0.
    pub fn h(r: i64) -> Self {
        match r.cmp(&0) {
            Ordering::Less => SymFunc::zero(),
            Ordering::Equal => SymFunc::one(),
            Ordering::Greater => SymFunc::monomial(HMonomial::from_parts(&[r as usize]), 1),
        }
    }

    /// h_λ = h_{λ_1} h_{λ_2} ⋯; zero as soon as one index is negative.
    pub fn h_product(indices: &[i64]) -> Self {
        if indices.iter().any(|&i| i < 0) {
            return SymFunc::zero();
        }
        let parts: Vec<usize> = indices.iter().map(|&i| i as usize).collect();
        SymFunc::monomial(HMonomial::from_parts(&parts), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &HMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&HMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(HMonomial::degree)
    }

    /// Largest h-subscript that occurs.
    pub fn max_part(&self) -> usize {
        self.terms.keys().map(HMonomial::max_part).max().unwrap_or(0)
    }

    /// Membership in Λ_(k) = ℤ[h_1, …, h_k].
    pub fn in_lambda_k(&self, k: usize) -> bool {
        self.max_part() <= k
    }

    pub fn add_term(&mut self, m: HMonomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymFunc, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> SymFunc {
        let mut acc = SymFunc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Text form such as `h2*h1^2 + h2*h1 - h2^2`, highest terms first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{a}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::from(-1));
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        let mut acc = SymFunc::zero();
        for f in iter {
            acc += &f;
        }
        acc
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse symmetric function: {0}")]
pub struct ParseSymFuncError(pub String);

impl FromStr for SymFunc {
    type Err = ParseSymFuncError;

    /// Parses the output of [`SymFunc::to_text`]. Factors are integers or
    /// `h<n>` / `h_<n>`, optionally raised to `^<e>`, joined by `*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSymFuncError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        pieces.push((neg, cur));
        let mut out = SymFunc::zero();
        for (neg, body) in pieces {
            let mut coeff = BigInt::one();
            let mut parts = Vec::new();
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('h') {
                    let rest = rest.strip_prefix('_').unwrap_or(rest);
                    let (idx, exp) = match rest.split_once('^') {
                        Some((a, b)) => (a, b.parse::<usize>().map_err(|_| err())?),
                        None => (rest, 1),
                    };
                    let idx = idx.parse::<usize>().map_err(|_| err())?;
                    parts.extend(std::iter::repeat(idx).take(exp));
                } else {
                    coeff *= factor.parse::<BigInt>().map_err(|_| err())?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(HMonomial::from_parts(&parts), &coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    h: Vec<usize>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson { h: m.parts(), c: c.to_string() })
            .collect();
        SymFuncJson { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        let mut out = SymFunc::zero();
        for t in raw.terms {
            if t.h.windows(2).any(|w| w[0] < w[1]) {
                return Err(serde::de::Error::custom("h-parts must be weakly decreasing"));
            }
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            out.add_term(HMonomial::from_parts(&t.h), &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(parts: &[usize]) -> SymFunc {
        SymFunc::monomial(HMonomial::from_parts(parts), 1)
    }

    #[test]
    fn h_conventions() {
        assert_eq!(SymFunc::h(0), SymFunc::one());
        assert!(SymFunc::h(-2).is_zero());
        assert_eq!(SymFunc::h(3), hp(&[3]));
    }

    #[test]
    fn basic_arithmetic() {
        let h1 = SymFunc::h(1);
        let h2 = SymFunc::h(2);
        assert_eq!(&h1 * &h1, hp(&[1, 1]));
        assert!((&h1 + &(-&h1)).is_zero());
        assert_eq!(&(&h1 + &h2) * &h1, &hp(&[1, 1]) + &hp(&[2, 1]));
    }

    #[test]
    fn text_order_and_parse() {
        let f = &(&hp(&[2, 1, 1]) + &hp(&[2, 1])) - &hp(&[2, 2]);
        assert_eq!(f.to_text(), "-h2^2 + h2*h1^2 + h2*h1");
        assert_eq!("h2*h1^2 + h2*h1 - h2^2".parse::<SymFunc>().unwrap(), f);
        assert_eq!(f.to_text().parse::<SymFunc>().unwrap(), f);
        let g = &SymFunc::constant(-3) + &hp(&[4]).scale(&BigInt::from(12));
        assert_eq!(g.to_text(), "12*h4 - 3");
        assert_eq!(g.to_text().parse::<SymFunc>().unwrap(), g);
        assert_eq!("0".parse::<SymFunc>().unwrap(), SymFunc::zero());
    }

    #[test]
    fn json_shape() {
        let f = hp(&[3, 1, 1]).scale(&BigInt::from(-2));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"terms":[{"h":[3,1,1],"c":"-2"}]}"#);
        let back: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
