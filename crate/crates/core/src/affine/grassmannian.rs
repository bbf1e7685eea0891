use std::fmt;

use super::{AffineError, AffinePerm};
use crate::symfunc::Partition;

/// A partition whose parts are all at most k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KBoundedPartition {
    k: usize,
    parts: Partition,
}

impl KBoundedPartition {
    pub fn new(k: usize, parts: Partition) -> Result<Self, AffineError> {
        if !parts.is_k_bounded(k) {
            return Err(AffineError::NotKBounded(parts, k));
        }
        Ok(KBoundedPartition { k, parts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn into_partition(self) -> Partition {
        self.parts
    }

    pub fn to_perm(&self) -> AffinePerm {
        lm_bijection(self.k, &self.parts).expect("bounded by construction")
    }
}

impl fmt::Display for KBoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.parts.fmt(f)
    }
}

/// Residue word of x_λ: rows ℓ(λ) down to 1, each read right to left,
/// box (a, b) carrying residue b − a mod k+1.
pub fn lm_word(k: usize, lambda: &Partition) -> Vec<usize> {
    let n = k as i64 + 1;
    let mut word = Vec::with_capacity(lambda.size());
    for a in (1..=lambda.len()).rev() {
        for b in (1..=lambda.part(a)).rev() {
            word.push((b as i64 - a as i64).rem_euclid(n) as usize);
        }
    }
    word
}

pub fn lm_bijection(k: usize, lambda: &Partition) -> Result<AffinePerm, AffineError> {
    if !lambda.is_k_bounded(k) {
        return Err(AffineError::NotKBounded(lambda.clone(), k));
    }
    Ok(AffinePerm::from_word(k, &lm_word(k, lambda)))
}

/// Inverse of the Lapointe–Morse bijection. Strips one left descent, inverts
/// the shorter element, then finds which added box reproduces `x`.
pub fn lm_inverse(x: &AffinePerm) -> Result<Partition, AffineError> {
    if !x.is_grassmannian() {
        return Err(AffineError::NotGrassmannian(x.clone()));
    }
    let k = x.k();
    let mut chain = vec![x.clone()];
    let mut cur = x.clone();
    while let Some(&i) = cur.left_descents().first() {
        cur = cur.left_mul_s(i);
        chain.push(cur.clone());
    }
    let mut lambda = Partition::empty();
    for target in chain.iter().rev().skip(1) {
        let next = lambda
            .addable_rows()
            .into_iter()
            .filter_map(|r| lambda.with_box_added(r))
            .filter(|mu| mu.is_k_bounded(k))
            .find(|mu| &AffinePerm::from_word(k, &lm_word(k, mu)) == target);
        lambda = match next {
            Some(mu) => mu,
            None => brute_force_inverse(target)?,
        };
    }
    Ok(lambda)
}

fn brute_force_inverse(x: &AffinePerm) -> Result<Partition, AffineError> {
    let k = x.k();
    k_bounded_partitions(k, x.length())
        .into_iter()
        .find(|mu| &AffinePerm::from_word(k, &lm_word(k, mu)) == x)
        .ok_or_else(|| AffineError::NotGrassmannian(x.clone()))
}

/// ω_k(λ), defined by x_{ω_k(λ)} = ω_k(x_λ).
pub fn omega_k_partition(k: usize, lambda: &Partition) -> Result<Partition, AffineError> {
    lm_inverse(&lm_bijection(k, lambda)?.omega_k())
}

pub fn k_bounded_partitions(k: usize, n: usize) -> Vec<Partition> {
    Partition::all_of_size(n, k)
}

/// All k-bounded partitions of size at most `max`, by increasing size.
pub fn k_bounded_up_to(k: usize, max: usize) -> Vec<Partition> {
    Partition::all_up_to(max, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn word_for_432() {
        assert_eq!(lm_word(4, &p(&[4, 3, 2])), vec![4, 3, 1, 0, 4, 3, 2, 1, 0]);
        let x = lm_bijection(4, &p(&[4, 3, 2])).unwrap();
        assert_eq!(x.length(), 9);
        assert!(x.is_grassmannian());
    }

    #[test]
    fn roundtrip_k3() {
        for lambda in k_bounded_up_to(3, 7) {
            let x = lm_bijection(3, &lambda).unwrap();
            assert_eq!(x.length(), lambda.size());
            assert_eq!(lm_inverse(&x).unwrap(), lambda);
        }
    }

    #[test]
    fn errors() {
        assert!(lm_bijection(2, &p(&[3])).is_err());
        assert!(lm_inverse(&AffinePerm::simple(2, 1)).is_err());
        assert!(KBoundedPartition::new(2, p(&[3])).is_err());
    }

    #[test]
    fn omega_partition_involution() {
        for k in 1..=4 {
            for lambda in k_bounded_up_to(k, 6) {
                let w = omega_k_partition(k, &lambda).unwrap();
                assert_eq!(w.size(), lambda.size());
                assert_eq!(omega_k_partition(k, &w).unwrap(), lambda);
            }
        }
    }
}
