use std::collections::BTreeSet;

use super::{AffineError, AffinePerm};

/// The word of u_A (`increasing`) or d_A: starting just after some residue
/// j ∉ A, list j+1, j+2, … mod k+1 restricted to A; d_A reverses it.
pub fn cyclic_word(k: usize, a: &BTreeSet<usize>, increasing: bool) -> Result<Vec<usize>, AffineError> {
    let n = k + 1;
    if let Some(&bad) = a.iter().find(|&&i| i > k) {
        return Err(AffineError::ResidueOutOfRange(bad, k));
    }
    let Some(j) = (0..n).find(|i| !a.contains(i)) else {
        return Err(AffineError::NotProperSubset(k));
    };
    let mut word: Vec<usize> = (1..n).map(|t| (j + t) % n).filter(|i| a.contains(i)).collect();
    if !increasing {
        word.reverse();
    }
    Ok(word)
}

pub fn cyclically_increasing(k: usize, a: &BTreeSet<usize>) -> Result<AffinePerm, AffineError> {
    Ok(AffinePerm::from_word(k, &cyclic_word(k, a, true)?))
}

pub fn cyclically_decreasing(k: usize, a: &BTreeSet<usize>) -> Result<AffinePerm, AffineError> {
    Ok(AffinePerm::from_word(k, &cyclic_word(k, a, false)?))
}

/// s_{a_1} * (s_{a_2} * ⋯ (s_{a_r} * w)) with s_i * w = max(w, s_i w).
pub fn hecke_star_seq(seq: &[usize], w: &AffinePerm) -> AffinePerm {
    let mut cur = w.clone();
    for &i in seq.iter().rev() {
        if !cur.has_left_descent(i) {
            cur = cur.left_mul_s(i);
        }
    }
    cur
}

/// v * w, read off a reduced word of v.
pub fn hecke_star(v: &AffinePerm, w: &AffinePerm) -> AffinePerm {
    hecke_star_seq(&v.reduced_word(), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn cyclic_elements_k4() {
        let a = set(&[0, 1, 3, 4]);
        assert_eq!(cyclic_word(4, &a, true).unwrap(), vec![3, 4, 0, 1]);
        assert_eq!(cyclic_word(4, &a, false).unwrap(), vec![1, 0, 4, 3]);
        let b = set(&[0, 2, 4]);
        let u = cyclically_increasing(4, &b).unwrap();
        assert_eq!(u, AffinePerm::from_word(4, &[4, 0, 2]));
        assert_eq!(u, AffinePerm::from_word(4, &[2, 4, 0]));
        assert!(cyclically_increasing(4, &set(&[0, 1, 2, 3, 4])).is_err());
        assert!(cyclically_increasing(4, &BTreeSet::new()).unwrap().is_identity());
    }

    #[test]
    fn star_examples_k2() {
        let x = AffinePerm::from_word(2, &[1, 2, 0]);
        let a = hecke_star(&AffinePerm::from_word(2, &[1, 0]), &x);
        assert_eq!(a, AffinePerm::from_word(2, &[0, 1, 2, 0, 2]));
        assert!(!a.is_grassmannian());
        let b = hecke_star(&AffinePerm::from_word(2, &[0, 2]), &x);
        assert_eq!(b, AffinePerm::from_word(2, &[0, 1, 2, 1, 0]));
        assert_eq!(hecke_star(&AffinePerm::identity(2), &x), x);
    }
}
