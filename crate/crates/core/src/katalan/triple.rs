use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{KatalanError, RootIdeal};
use crate::symfunc::Partition;

/// (Ψ, M, γ) with M given by its multiplicities m(1), …, m(ℓ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KatalanTriple {
    pub(crate) psi: RootIdeal,
    pub(crate) m: Vec<usize>,
    pub(crate) gamma: Vec<i64>,
}

impl KatalanTriple {
    pub fn new(psi: RootIdeal, m: Vec<usize>, gamma: Vec<i64>) -> Result<Self, KatalanError> {
        let ell = psi.ell();
        if m.len() != ell || gamma.len() != ell {
            return Err(KatalanError::InvalidTriple(format!(
                "ℓ = {ell} but |m| = {} and |γ| = {}",
                m.len(),
                gamma.len()
            )));
        }
        Ok(KatalanTriple { psi, m, gamma })
    }

    /// (Δ^k(λ), L(Δ^k(λ)), λ), whose value is the closed K-k-Schur Katalan function.
    pub fn closed(k: usize, lambda: &Partition, ell: usize) -> Self {
        let psi = RootIdeal::delta_k(k, lambda, ell);
        let m = psi.l_of();
        KatalanTriple { psi, m, gamma: lambda.padded(ell) }
    }

    /// (Δ^k(λ), L(Δ^{k+1}(λ)), λ), whose value is g^{(k)}_λ.
    pub fn kkschur(k: usize, lambda: &Partition, ell: usize) -> Self {
        let psi = RootIdeal::delta_k(k, lambda, ell);
        let m = RootIdeal::delta_k(k + 1, lambda, ell).l_of();
        KatalanTriple { psi, m, gamma: lambda.padded(ell) }
    }

    pub fn ell(&self) -> usize {
        self.psi.ell()
    }

    pub fn psi(&self) -> &RootIdeal {
        &self.psi
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.m
    }

    /// m_M(j), 1-indexed.
    pub fn m(&self, j: usize) -> usize {
        self.m[j - 1]
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    /// γ_i, 1-indexed.
    pub fn g(&self, i: usize) -> i64 {
        self.gamma[i - 1]
    }

    pub fn dots(&self) -> usize {
        self.m.iter().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TripleJson {
    ell: usize,
    psi_first_col: Vec<usize>,
    m: BTreeMap<usize, usize>,
    gamma: Vec<i64>,
}

impl Serialize for KatalanTriple {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m = self.m.iter().enumerate().filter(|(_, &c)| c > 0).map(|(j, &c)| (j + 1, c)).collect();
        TripleJson { ell: self.ell(), psi_first_col: self.psi.first_cols().to_vec(), m, gamma: self.gamma.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KatalanTriple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = TripleJson::deserialize(d)?;
        let psi = RootIdeal::new(raw.ell, raw.psi_first_col).map_err(D::Error::custom)?;
        let mut m = vec![0; raw.ell];
        for (j, c) in raw.m {
            if j == 0 || j > raw.ell {
                return Err(D::Error::custom(format!("dot column {j} out of range")));
            }
            m[j - 1] = c;
        }
        KatalanTriple::new(psi, m, raw.gamma).map_err(D::Error::custom)
    }
}
