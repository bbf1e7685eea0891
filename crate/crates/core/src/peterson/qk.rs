use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// z^a Q^b with a over z_1..z_{k+1} and b over Q_1..Q_k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QkMonomial {
    pub z: Vec<u32>,
    pub q: Vec<u32>,
}

impl QkMonomial {
    pub fn one(k: usize) -> Self {
        QkMonomial { z: vec![0; k + 1], q: vec![0; k] }
    }

    fn mul(&self, other: &QkMonomial) -> QkMonomial {
        QkMonomial {
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
            q: self.q.iter().zip(&other.q).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.z.iter().sum::<u32>() + self.q.iter().sum::<u32>()
    }
}

/// Integer polynomials in z_1, …, z_{k+1}, Q_1, …, Q_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QkPoly {
    k: usize,
    terms: BTreeMap<QkMonomial, BigInt>,
}

impl QkPoly {
    pub fn zero(k: usize) -> Self {
        QkPoly { k, terms: BTreeMap::new() }
    }

    pub fn constant(k: usize, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(k);
        out.add_term(QkMonomial::one(k), c.into());
        out
    }

    pub fn one(k: usize) -> Self {
        Self::constant(k, 1)
    }

    /// z_i for 1 ≤ i ≤ k+1.
    pub fn z(k: usize, i: usize) -> Self {
        assert!((1..=k + 1).contains(&i), "z_{i} out of range");
        let mut m = QkMonomial::one(k);
        m.z[i - 1] = 1;
        let mut out = Self::zero(k);
        out.add_term(m, BigInt::one());
        out
    }

    /// Q_i for 1 ≤ i ≤ k.
    pub fn q(k: usize, i: usize) -> Self {
        assert!((1..=k).contains(&i), "Q_{i} out of range");
        let mut m = QkMonomial::one(k);
        m.q[i - 1] = 1;
        let mut out = Self::zero(k);
        out.add_term(m, BigInt::one());
        out
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QkMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: QkMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &QkPoly) -> QkPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QkPoly) -> QkPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> QkPoly {
        let mut out = Self::zero(self.k);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &QkPoly) -> QkPoly {
        let mut out = Self::zero(self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Σ_{|I|=i} Π_{j∈I} z_j Π_{j∈I, j+1∉I, j≤k} (1 − Q_j).
    pub fn presentation_relation(k: usize, i: usize) -> QkPoly {
        let n = k + 1;
        let mut out = Self::zero(k);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != i {
                continue;
            }
            let mut term = Self::one(k);
            for j in 1..=n {
                if mask & (1 << (j - 1)) == 0 {
                    continue;
                }
                term = term.mul(&Self::z(k, j));
                let next_in = j < n && mask & (1 << j) != 0;
                if j <= k && !next_in {
                    term = term.mul(&Self::one(k).sub(&Self::q(k, j)));
                }
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for QkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (idx, &e) in m.z.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("z{}", idx + 1)),
                    _ => factors.push(format!("z{}^{e}", idx + 1)),
                }
            }
            for (idx, &e) in m.q.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("Q{}", idx + 1)),
                    _ => factors.push(format!("Q{}^{e}", idx + 1)),
                }
            }
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{abs}*{}", factors.join("*"))
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_k1() {
        let r1 = QkPoly::presentation_relation(1, 1);
        let want = QkPoly::z(1, 1).mul(&QkPoly::one(1).sub(&QkPoly::q(1, 1))).add(&QkPoly::z(1, 2));
        assert_eq!(r1, want);
        assert_eq!(QkPoly::presentation_relation(1, 2), QkPoly::z(1, 1).mul(&QkPoly::z(1, 2)));
        assert_eq!(QkPoly::presentation_relation(1, 2).to_string(), "z1*z2");
    }

    #[test]
    fn arithmetic() {
        let a = QkPoly::z(2, 1).add(&QkPoly::constant(2, 3));
        let b = QkPoly::q(2, 2).sub(&QkPoly::one(2));
        let ab = a.mul(&b);
        assert_eq!(ab.terms().count(), 4);
        assert!(ab.sub(&b.mul(&a)).is_zero());
        assert_eq!(QkPoly::zero(2).to_string(), "0");
    }
}
