use std::collections::HashMap;
use std::sync::Mutex;

use super::{PetersonError, TauTable};
use crate::symfunc::{apply_omega, SymFunc};

/// numerator / Π τ_i^{a_i} (τ⁺_i)^{b_i}, i = 1..k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedElem {
    pub numerator: SymFunc,
    pub denom_tau: Vec<u32>,
    pub denom_tau_plus: Vec<u32>,
}

impl LocalizedElem {
    pub fn from_symfunc(k: usize, f: SymFunc) -> Self {
        LocalizedElem { numerator: f, denom_tau: vec![0; k], denom_tau_plus: vec![0; k] }
    }

    pub fn constant(k: usize, c: i64) -> Self {
        Self::from_symfunc(k, SymFunc::constant(c))
    }

    pub fn new(numerator: SymFunc, denom_tau: Vec<u32>, denom_tau_plus: Vec<u32>) -> Result<Self, PetersonError> {
        if denom_tau.len() != denom_tau_plus.len() {
            return Err(PetersonError::OutOfRange("denominator vectors differ in length".into()));
        }
        Ok(LocalizedElem { numerator, denom_tau, denom_tau_plus })
    }

    pub fn k(&self) -> usize {
        self.denom_tau.len()
    }

    /// f / τ_i, with τ_0 = τ_{k+1} = 1.
    pub fn over_tau(k: usize, f: SymFunc, i: usize) -> Self {
        let mut out = Self::from_symfunc(k, f);
        if (1..=k).contains(&i) {
            out.denom_tau[i - 1] += 1;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn neg(&self) -> Self {
        LocalizedElem { numerator: -&self.numerator, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        LocalizedElem {
            numerator: &self.numerator * &other.numerator,
            denom_tau: add_vec(&self.denom_tau, &other.denom_tau),
            denom_tau_plus: add_vec(&self.denom_tau_plus, &other.denom_tau_plus),
        }
    }

    pub fn add(&self, other: &Self, t: &TauTable) -> Self {
        let dt = max_vec(&self.denom_tau, &other.denom_tau);
        let dp = max_vec(&self.denom_tau_plus, &other.denom_tau_plus);
        let a = &self.numerator * &t.product(&sub_vec(&dt, &self.denom_tau), &sub_vec(&dp, &self.denom_tau_plus));
        let b = &other.numerator * &t.product(&sub_vec(&dt, &other.denom_tau), &sub_vec(&dp, &other.denom_tau_plus));
        LocalizedElem { numerator: &a + &b, denom_tau: dt, denom_tau_plus: dp }
    }

    pub fn sub(&self, other: &Self, t: &TauTable) -> Self {
        self.add(&other.neg(), t)
    }

    /// a/d = a′/d′ ⟺ a·d′ = a′·d, after cancelling the common part of d and d′.
    pub fn equals(&self, other: &Self, t: &TauTable) -> bool {
        let gt = min_vec(&self.denom_tau, &other.denom_tau);
        let gp = min_vec(&self.denom_tau_plus, &other.denom_tau_plus);
        let lhs = &self.numerator * &t.product(&sub_vec(&other.denom_tau, &gt), &sub_vec(&other.denom_tau_plus, &gp));
        let rhs = &other.numerator * &t.product(&sub_vec(&self.denom_tau, &gt), &sub_vec(&self.denom_tau_plus, &gp));
        lhs == rhs
    }

    /// Ω̄: Ω on the numerator, τ_i ↦ τ_{k+1−i} and τ⁺_i ↦ τ⁺_{k+1−i} in the denominator.
    pub fn omega_bar(&self) -> Self {
        let mut dt = self.denom_tau.clone();
        let mut dp = self.denom_tau_plus.clone();
        dt.reverse();
        dp.reverse();
        LocalizedElem { numerator: apply_omega(&self.numerator), denom_tau: dt, denom_tau_plus: dp }
    }
}

fn add_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn max_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn min_vec(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

/// Cached powers τ_i^n and (τ⁺_i)^n.
#[derive(Debug, Default)]
pub(super) struct PowerCache {
    table: Mutex<HashMap<(bool, usize, u32), SymFunc>>,
}

impl PowerCache {
    pub(super) fn power(&self, plus: bool, i: usize, n: u32, base: &SymFunc) -> SymFunc {
        if n == 0 {
            return SymFunc::one();
        }
        if n == 1 {
            return base.clone();
        }
        if let Some(v) = self.table.lock().expect("power cache poisoned").get(&(plus, i, n)) {
            return v.clone();
        }
        let v = &self.power(plus, i, n - 1, base) * base;
        self.table.lock().expect("power cache poisoned").insert((plus, i, n), v.clone());
        v
    }
}
