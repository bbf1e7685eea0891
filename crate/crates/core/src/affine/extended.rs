use std::fmt;

use super::{lm_bijection, lm_inverse, AffineError, AffinePerm};
use crate::symfunc::Partition;

/// π^{pi_pow} · body in the extended affine symmetric group, where π acts on
/// ℤ by j ↦ j+1, so π s_i π⁻¹ = s_{i+1} and π^{k+1} = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtAffinePerm {
    pi_pow: usize,
    body: AffinePerm,
}

impl ExtAffinePerm {
    pub fn new(pi_pow: i64, body: AffinePerm) -> Self {
        let n = body.k() as i64 + 1;
        ExtAffinePerm { pi_pow: pi_pow.rem_euclid(n) as usize, body }
    }

    pub fn from_perm(body: AffinePerm) -> Self {
        ExtAffinePerm { pi_pow: 0, body }
    }

    pub fn pi_pow(&self) -> usize {
        self.pi_pow
    }

    pub fn body(&self) -> &AffinePerm {
        &self.body
    }

    /// (π^{t₁} w₁)(π^{t₂} w₂) = π^{t₁+t₂} (π^{−t₂} w₁ π^{t₂}) w₂.
    pub fn mul(&self, other: &ExtAffinePerm) -> ExtAffinePerm {
        let t2 = other.pi_pow as i64;
        let body = self.body.conjugate_by_pi(t2).compose(&other.body);
        ExtAffinePerm::new(self.pi_pow as i64 + t2, body)
    }
}

impl fmt::Display for ExtAffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi^{} {}", self.pi_pow, self.body.word_string())
    }
}

/// The k-rectangle R_i = (i^{k+1−i}).
pub fn k_rectangle(k: usize, i: usize) -> Partition {
    Partition::rectangle(k + 1 - i, i)
}

/// t_{−ϖ_i^∨} = π^{−i} x_{R_i}.
pub fn translation_antifund(k: usize, i: usize) -> Result<ExtAffinePerm, AffineError> {
    if i == 0 || i > k {
        return Err(AffineError::IndexOutOfRange(i, k));
    }
    let body = lm_bijection(k, &k_rectangle(k, i))?;
    Ok(ExtAffinePerm::new(-(i as i64), body))
}

fn check_fits(lambda: &Partition, i: usize, k: usize) -> Result<(), AffineError> {
    if i == 0 || i > k {
        return Err(AffineError::IndexOutOfRange(i, k));
    }
    if lambda.len() > i || lambda.largest() > k + 1 - i {
        return Err(AffineError::DoesNotFit(lambda.clone(), i, k + 1 - i));
    }
    Ok(())
}

/// The i-Grassmannian permutation w of S_{k+1} with w(j) − j = λ_{i+1−j} for j ≤ i.
pub fn grassmannian_perm(lambda: &Partition, i: usize, k: usize) -> Result<AffinePerm, AffineError> {
    check_fits(lambda, i, k)?;
    let n = k + 1;
    let mut window: Vec<i64> = (1..=i).map(|j| (j + lambda.part(i + 1 - j)) as i64).collect();
    let rest: Vec<i64> = (1..=n as i64).filter(|v| !window.contains(v)).collect();
    window.extend(rest);
    AffinePerm::from_window(window)
}

/// λ^∨_j = k+1−i−λ_{i+1−j}, the complement in the i × (k+1−i) rectangle.
pub fn dual_partition(lambda: &Partition, i: usize, k: usize) -> Result<Partition, AffineError> {
    check_fits(lambda, i, k)?;
    let parts = (1..=i).map(|j| k + 1 - i - lambda.part(i + 1 - j)).collect();
    Ok(Partition::new(parts).expect("complement of a partition is a partition"))
}

/// sh(w) for w ∈ S_{k+1}: w · Π_{i ∈ Des(w)} t_{−ϖ_i^∨} = π^m x_{sh(w)}.
pub fn sh(w: &AffinePerm) -> Result<Partition, AffineError> {
    if !w.is_finite() {
        return Err(AffineError::NotFinite(w.clone()));
    }
    let k = w.k();
    let n = k as i64 + 1;
    let des: Vec<usize> = (1..=k).filter(|&i| w.has_right_descent(i)).collect();
    let mut acc = ExtAffinePerm::from_perm(w.clone());
    for &i in &des {
        acc = acc.mul(&translation_antifund(k, i)?);
    }
    let expected = (-(des.iter().sum::<usize>() as i64)).rem_euclid(n) as usize;
    if acc.pi_pow() != expected {
        return Err(AffineError::NormalizationFailed(format!(
            "π-power {} differs from −ΣDes(w) = {expected} mod {n}",
            acc.pi_pow()
        )));
    }
    if !acc.body().is_grassmannian() {
        return Err(AffineError::NormalizationFailed(format!("body {} is not Grassmannian", acc.body())));
    }
    lm_inverse(acc.body())
}

/// Residues of the boxes of λ read in decreasing order of the entries of
/// the standard tableau `t` (given as rows).
pub fn standard_tableau_word(lambda: &Partition, t: &[Vec<usize>], k: usize) -> Result<Vec<usize>, AffineError> {
    if lambda.largest() + lambda.len() > k + 1 {
        return Err(AffineError::ShapeTooLarge(lambda.clone(), k + 1));
    }
    let size = lambda.size();
    let shape_ok = t.len() == lambda.len() && t.iter().enumerate().all(|(a, row)| row.len() == lambda.part(a + 1));
    if !shape_ok {
        return Err(AffineError::NotStandard(lambda.clone()));
    }
    let mut pos = vec![None; size + 1];
    for (a, row) in t.iter().enumerate() {
        for (b, &e) in row.iter().enumerate() {
            if e == 0 || e > size || pos[e].is_some() {
                return Err(AffineError::NotStandard(lambda.clone()));
            }
            if (b > 0 && row[b - 1] >= e) || (a > 0 && t[a - 1][b] >= e) {
                return Err(AffineError::NotStandard(lambda.clone()));
            }
            pos[e] = Some((a + 1, b + 1));
        }
    }
    let n = k as i64 + 1;
    Ok((1..=size)
        .rev()
        .map(|e| {
            let (a, b) = pos[e].expect("all entries present");
            (b as i64 - a as i64).rem_euclid(n) as usize
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn translations_k3() {
        let t1 = translation_antifund(3, 1).unwrap();
        assert_eq!(t1.pi_pow(), 3);
        assert_eq!(t1.body(), &AffinePerm::from_word(3, &[2, 3, 0]));
        let t2 = translation_antifund(3, 2).unwrap();
        assert_eq!(t2.pi_pow(), 2);
        assert_eq!(t2.body(), &AffinePerm::from_word(3, &[0, 3, 1, 0]));
        assert!(translation_antifund(3, 4).is_err());
    }

    #[test]
    fn grassmannian_perm_example() {
        let w = grassmannian_perm(&p(&[3, 2]), 3, 6).unwrap();
        assert_eq!(w.window(), &[1, 4, 6, 2, 3, 5, 7]);
        assert_eq!(w, AffinePerm::from_word(6, &[3, 2, 5, 4, 3]));
        assert_eq!(dual_partition(&p(&[3, 2]), 3, 6).unwrap(), p(&[4, 2, 1]));
        assert_eq!(sh(&w).unwrap(), p(&[3, 2, 1, 1]));
        assert!(grassmannian_perm(&Partition::empty(), 2, 4).unwrap().is_identity());
        assert!(grassmannian_perm(&p(&[5]), 3, 6).is_err());
    }

    #[test]
    fn tableau_words() {
        let r3 = p(&[3, 3, 3, 3]);
        let t = vec![vec![1, 2, 3], vec![4, 5, 10], vec![6, 8, 11], vec![7, 9, 12]];
        let word = standard_tableau_word(&r3, &t, 6).unwrap();
        assert_eq!(word, vec![6, 0, 1, 5, 6, 4, 5, 0, 6, 2, 1, 0]);
        assert_eq!(AffinePerm::from_word(6, &word), lm_bijection(6, &r3).unwrap());
        let bad = vec![vec![2, 1, 3], vec![4, 5, 10], vec![6, 8, 11], vec![7, 9, 12]];
        assert!(standard_tableau_word(&r3, &bad, 6).is_err());
        assert!(standard_tableau_word(&p(&[3, 3]), &[vec![1, 2, 3], vec![4, 5, 6]], 3).is_err());
    }
}
