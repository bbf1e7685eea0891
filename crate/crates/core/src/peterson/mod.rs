//! The τ-localized ring Λ_(k)[τ_i⁻¹, (τ⁺_i)⁻¹], the Peterson map on the
//! quantum K presentation, and the identities it is built from.

mod localized;
mod qk;

pub use localized::LocalizedElem;
pub use qk::{QkMonomial, QkPoly};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::affine::{dual_partition, grassmannian_perm, k_rectangle, sh, AffineError};
use crate::kschur::{FamilyCache, KSchurError};
use crate::symfunc::{apply_f, apply_f_inv, dual_grothendieck, g_tilde, Partition, SymFunc};
use localized::PowerCache;

#[derive(Debug, Error)]
pub enum PetersonError {
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    KSchur(#[from] KSchurError),
}

fn check_index(i: usize, lo: usize, hi: usize, what: &str) -> Result<(), PetersonError> {
    if i < lo || i > hi {
        return Err(PetersonError::OutOfRange(format!("{what} index {i} outside {lo}..={hi}")));
    }
    Ok(())
}

/// τ_i = g_{R_i}, with τ_0 = τ_{k+1} = 1.
pub fn tau(i: usize, k: usize) -> Result<SymFunc, PetersonError> {
    check_index(i, 0, k + 1, "τ")?;
    if i == 0 || i == k + 1 {
        return Ok(SymFunc::one());
    }
    Ok(dual_grothendieck(&k_rectangle(k, i).padded(0)))
}

/// τ⁺_i = g̃_{R_i}.
pub fn tau_plus(i: usize, k: usize) -> Result<SymFunc, PetersonError> {
    check_index(i, 0, k + 1, "τ⁺")?;
    if i == 0 || i == k + 1 {
        return Ok(SymFunc::one());
    }
    Ok(g_tilde(&k_rectangle(k, i)))
}

/// τ⁻_i = F⁻¹(τ_i).
pub fn tau_minus(i: usize, k: usize) -> Result<SymFunc, PetersonError> {
    Ok(apply_f_inv(&tau(i, k)?))
}

/// R_i with its corner box removed.
pub fn rectangle_minus_corner(k: usize, i: usize) -> Result<Partition, PetersonError> {
    check_index(i, 1, k, "R^*")?;
    let mut parts = k_rectangle(k, i).parts().to_vec();
    *parts.last_mut().expect("rectangle is nonempty") -= 1;
    Ok(Partition::new(parts).expect("removing a corner leaves a partition"))
}

/// The values τ_i, τ⁺_i, τ⁻_i for one k, with cached powers.
#[derive(Debug)]
pub struct TauTable {
    k: usize,
    tau: Vec<SymFunc>,
    tau_plus: Vec<SymFunc>,
    tau_minus: Vec<SymFunc>,
    powers: PowerCache,
}

impl TauTable {
    pub fn new(k: usize) -> Result<Self, PetersonError> {
        if k == 0 {
            return Err(PetersonError::OutOfRange("k must be at least 1".into()));
        }
        let tau: Vec<SymFunc> = (0..=k + 1).map(|i| self::tau(i, k)).collect::<Result<_, _>>()?;
        let tau_plus: Vec<SymFunc> = (0..=k + 1).map(|i| self::tau_plus(i, k)).collect::<Result<_, _>>()?;
        let tau_minus = tau.iter().map(apply_f_inv).collect();
        Ok(TauTable { k, tau, tau_plus, tau_minus, powers: PowerCache::default() })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tau(&self, i: usize) -> &SymFunc {
        &self.tau[i]
    }

    pub fn tau_plus(&self, i: usize) -> &SymFunc {
        &self.tau_plus[i]
    }

    pub fn tau_minus(&self, i: usize) -> &SymFunc {
        &self.tau_minus[i]
    }

    /// Π τ_i^{a_i} (τ⁺_i)^{b_i}.
    pub fn product(&self, a: &[u32], b: &[u32]) -> SymFunc {
        let mut acc = SymFunc::one();
        for (idx, &e) in a.iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.powers.power(false, idx + 1, e, &self.tau[idx + 1]);
            }
        }
        for (idx, &e) in b.iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.powers.power(true, idx + 1, e, &self.tau_plus[idx + 1]);
            }
        }
        acc
    }

    /// Π τ_i^{a_i} (τ⁺_i)^{b_i} for signed exponents.
    pub fn laurent(&self, coeff: &BigInt, a: &[i64], b: &[i64]) -> LocalizedElem {
        let pos = |v: &[i64]| v.iter().map(|&e| e.max(0) as u32).collect::<Vec<_>>();
        let neg = |v: &[i64]| v.iter().map(|&e| (-e).max(0) as u32).collect::<Vec<_>>();
        let num = self.product(&pos(a), &pos(b)).scale(coeff);
        LocalizedElem { numerator: num, denom_tau: neg(a), denom_tau_plus: neg(b) }
    }

    pub fn phi_z(&self, i: usize) -> Result<LocalizedElem, PetersonError> {
        check_index(i, 1, self.k + 1, "z")?;
        let (a, b) = z_exponents(self.k, i);
        Ok(self.laurent(&BigInt::from(1), &a, &b))
    }

    pub fn phi_q(&self, i: usize) -> Result<LocalizedElem, PetersonError> {
        check_index(i, 1, self.k, "Q")?;
        let (a, b) = q_exponents(self.k, i);
        Ok(self.laurent(&BigInt::from(1), &a, &b))
    }

    /// The ring-morphism extension of z_i ↦ τ_iτ⁺_{i−1}/(τ⁺_iτ_{i−1}), Q_i ↦ τ_{i−1}τ_{i+1}/τ_i².
    pub fn phi_poly(&self, p: &QkPoly) -> Result<LocalizedElem, PetersonError> {
        let k = self.k;
        if p.k() != k {
            return Err(PetersonError::OutOfRange(format!("polynomial has k = {}, table has k = {k}", p.k())));
        }
        let mut grouped: BTreeMap<(Vec<i64>, Vec<i64>), BigInt> = BTreeMap::new();
        for (m, c) in p.terms() {
            let mut a = vec![0i64; k];
            let mut b = vec![0i64; k];
            for (idx, &e) in m.z.iter().enumerate() {
                let (za, zb) = z_exponents(k, idx + 1);
                accumulate(&mut a, &za, e);
                accumulate(&mut b, &zb, e);
            }
            for (idx, &e) in m.q.iter().enumerate() {
                let (qa, _) = q_exponents(k, idx + 1);
                accumulate(&mut a, &qa, e);
            }
            *grouped.entry((a, b)).or_insert_with(BigInt::zero) += c;
        }
        grouped.retain(|_, c| !c.is_zero());
        let mut da = vec![0u32; k];
        let mut db = vec![0u32; k];
        for (a, b) in grouped.keys() {
            for t in 0..k {
                da[t] = da[t].max((-a[t]).max(0) as u32);
                db[t] = db[t].max((-b[t]).max(0) as u32);
            }
        }
        let mut num = SymFunc::zero();
        for ((a, b), c) in &grouped {
            let ea: Vec<u32> = (0..k).map(|t| (a[t] + da[t] as i64) as u32).collect();
            let eb: Vec<u32> = (0..k).map(|t| (b[t] + db[t] as i64) as u32).collect();
            num.add_scaled(&self.product(&ea, &eb), c);
        }
        Ok(LocalizedElem { numerator: num, denom_tau: da, denom_tau_plus: db })
    }
}

fn accumulate(acc: &mut [i64], v: &[i64], e: u32) {
    for (x, y) in acc.iter_mut().zip(v) {
        *x += y * e as i64;
    }
}

fn bump(v: &mut [i64], i: usize, by: i64) {
    if i >= 1 && i <= v.len() {
        v[i - 1] += by;
    }
}

fn z_exponents(k: usize, i: usize) -> (Vec<i64>, Vec<i64>) {
    let mut a = vec![0; k];
    let mut b = vec![0; k];
    bump(&mut a, i, 1);
    bump(&mut a, i - 1, -1);
    bump(&mut b, i - 1, 1);
    bump(&mut b, i, -1);
    (a, b)
}

fn q_exponents(k: usize, i: usize) -> (Vec<i64>, Vec<i64>) {
    let mut a = vec![0; k];
    bump(&mut a, i - 1, 1);
    bump(&mut a, i + 1, 1);
    bump(&mut a, i, -2);
    (a, vec![0; k])
}

fn binomial(n: usize, r: usize) -> i64 {
    (0..r).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

/// Outcome of one presentation relation under Φ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationOutcome {
    pub i: usize,
    pub holds: bool,
}

/// Φ sends the i-th presentation relation to C(k+1, i), for each 1 ≤ i ≤ k+1.
pub fn ideal_vanishing_check(table: &TauTable) -> Result<Vec<RelationOutcome>, PetersonError> {
    let k = table.k();
    (1..=k + 1)
        .map(|i| {
            let image = table.phi_poly(&QkPoly::presentation_relation(k, i))?;
            let want = LocalizedElem::constant(k, binomial(k + 1, i));
            Ok(RelationOutcome { i, holds: image.equals(&want, table) })
        })
        .collect()
}

/// τ_i² − τ_{i−1}τ_{i+1} = τ⁺_i τ⁻_i.
pub fn discrete_toda_check(table: &TauTable, i: usize) -> Result<bool, PetersonError> {
    check_index(i, 1, table.k(), "Toda")?;
    let lhs = &(table.tau(i) * table.tau(i)) - &(table.tau(i - 1) * table.tau(i + 1));
    Ok(lhs == table.tau_plus(i) * table.tau_minus(i))
}

/// τ_i = g_{R_i^*} + τ⁻_i.
pub fn corner_lemma_check(table: &TauTable, i: usize) -> Result<bool, PetersonError> {
    let star = rectangle_minus_corner(table.k(), i)?;
    Ok(*table.tau(i) == &dual_grothendieck(&star.padded(0)) + table.tau_minus(i))
}

/// 1 − g_{R_i^*}/τ_i = τ⁻_i/τ_i = Φ((1−Q_i) z_1⋯z_i).
pub fn chevalley_check(table: &TauTable, i: usize) -> Result<bool, PetersonError> {
    let k = table.k();
    let star = rectangle_minus_corner(k, i)?;
    let target = LocalizedElem::over_tau(k, table.tau_minus(i).clone(), i);
    let lhs = LocalizedElem::constant(k, 1)
        .sub(&LocalizedElem::over_tau(k, dual_grothendieck(&star.padded(0)), i), table);
    let mut p = QkPoly::one(k).sub(&QkPoly::q(k, i));
    for j in 1..=i {
        p = p.mul(&QkPoly::z(k, j));
    }
    let image = table.phi_poly(&p)?;
    Ok(lhs.equals(&target, table) && image.equals(&target, table))
}

/// For w = w_{λ,i}: g_{(λ^∨)'}/τ_i = F⁻¹(g̃^{(k)}_{sh(w)}) / Π_{j ∈ Des(w)} τ_j.
pub fn grassmannian_image_check(
    table: &TauTable,
    cache: &FamilyCache,
    lambda: &Partition,
    i: usize,
) -> Result<bool, PetersonError> {
    let k = table.k();
    if cache.k() != k {
        return Err(PetersonError::OutOfRange("cache and table disagree on k".into()));
    }
    let w = grassmannian_perm(lambda, i, k)?;
    let dual = dual_partition(lambda, i, k)?.conjugate();
    let lhs = LocalizedElem::over_tau(k, dual_grothendieck(&dual.padded(0)), i);
    let shape = sh(&w)?;
    let mut rhs = LocalizedElem::from_symfunc(k, apply_f_inv(&cache.gtilde(&shape)?));
    for j in w.right_descents() {
        rhs.denom_tau[j - 1] += 1;
    }
    Ok(lhs.equals(&rhs, table))
}

/// For λ_1 + ℓ(λ) ≤ k+1, F⁻¹(g̃^{(k)}_λ) = g_λ.
pub fn prop_di_check(cache: &FamilyCache, lambda: &Partition) -> Result<bool, PetersonError> {
    let k = cache.k();
    if lambda.largest() + lambda.len() > k + 1 {
        return Err(PetersonError::OutOfRange(format!("{lambda} has λ_1+ℓ(λ) > {}", k + 1)));
    }
    Ok(apply_f_inv(&cache.gtilde(lambda)?) == dual_grothendieck(&lambda.padded(0)))
}

/// τ⁺_i = F(τ_i).
pub fn tau_plus_is_f_of_tau(table: &TauTable, i: usize) -> bool {
    apply_f(table.tau(i)) == *table.tau_plus(i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn boundary_values() {
        assert_eq!(tau(0, 3).unwrap(), SymFunc::one());
        assert_eq!(tau_plus(4, 3).unwrap(), SymFunc::one());
        assert!(tau(5, 3).is_err());
        assert_eq!(tau(1, 1).unwrap(), SymFunc::h(1));
        assert_eq!(tau_minus(1, 1).unwrap(), &SymFunc::h(1) - &SymFunc::one());
    }

    #[test]
    fn phi_z_k1_and_telescoping() {
        let t = TauTable::new(1).unwrap();
        let z1 = t.phi_z(1).unwrap();
        let want = LocalizedElem::new(t.tau(1).clone(), vec![0], vec![1]).unwrap();
        assert!(z1.equals(&want, &t));
        for k in 1..=3 {
            let t = TauTable::new(k).unwrap();
            let prod = (1..=k + 1).fold(LocalizedElem::constant(k, 1), |acc, i| acc.mul(&t.phi_z(i).unwrap()));
            assert!(prod.equals(&LocalizedElem::constant(k, 1), &t));
        }
    }

    #[test]
    fn toda_and_corner_small() {
        for k in 1..=3 {
            let t = TauTable::new(k).unwrap();
            for i in 1..=k {
                assert!(discrete_toda_check(&t, i).unwrap(), "Toda k={k} i={i}");
                assert!(corner_lemma_check(&t, i).unwrap(), "corner k={k} i={i}");
                assert!(tau_plus_is_f_of_tau(&t, i));
            }
        }
    }

    #[test]
    fn relations_small() {
        for k in 1..=2 {
            let t = TauTable::new(k).unwrap();
            for out in ideal_vanishing_check(&t).unwrap() {
                assert!(out.holds, "k={k} relation {}", out.i);
            }
        }
    }

    #[test]
    fn chevalley_small() {
        for k in 1..=3 {
            let t = TauTable::new(k).unwrap();
            for i in 1..=k {
                assert!(chevalley_check(&t, i).unwrap(), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn grassmannian_k6_example() {
        let k = 6;
        let w = grassmannian_perm(&p(&[3, 2]), 3, k).unwrap();
        assert_eq!(sh(&w).unwrap(), p(&[3, 2, 1, 1]));
        let cache = FamilyCache::new(k);
        let dual = dual_partition(&p(&[3, 2]), 3, k).unwrap().conjugate();
        assert_eq!(dual, p(&[3, 2, 1, 1]));
        assert_eq!(apply_f_inv(&cache.gtilde(&dual).unwrap()), dual_grothendieck(&dual.padded(0)));
    }

    #[test]
    fn grassmannian_empty_and_small() {
        let k = 2;
        let t = TauTable::new(k).unwrap();
        let cache = FamilyCache::new(k);
        for i in 1..=k {
            assert!(grassmannian_image_check(&t, &cache, &Partition::empty(), i).unwrap());
            assert!(grassmannian_image_check(&t, &cache, &p(&[1]), i).unwrap());
        }
        assert!(grassmannian_image_check(&t, &cache, &p(&[3]), 1).is_err());
    }

    #[test]
    fn omega_bar_swaps_rectangles() {
        use crate::symfunc::apply_omega;
        let k = 3;
        let t = TauTable::new(k).unwrap();
        for i in 1..=k {
            assert_eq!(apply_omega(t.tau(i)), *t.tau(k + 1 - i));
            assert_eq!(apply_omega(t.tau_plus(i)), *t.tau_plus(k + 1 - i));
            let z = t.phi_z(i).unwrap();
            assert!(z.omega_bar().omega_bar().equals(&z, &t));
        }
    }
}
