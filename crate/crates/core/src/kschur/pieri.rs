use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::hecke::{t_u_a, GcircVec};
use super::{check_r, Family, FamilyCache, KSchurError};
use crate::affine::{cyclically_decreasing, cyclically_increasing, hecke_star, k_rectangle, weak_leq_left};
use crate::symfunc::{apply_f_inv, dual_grothendieck, g_tilde, Partition, SymFunc};

/// Horizontal (h, d_A) or vertical (e, u_A) Pieri rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

fn subsets_of_size(k: usize, r: usize) -> Vec<BTreeSet<usize>> {
    let n = k + 1;
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn cyclic(k: usize, a: &BTreeSet<usize>, dir: Direction) -> Result<crate::affine::AffinePerm, KSchurError> {
    Ok(match dir {
        Direction::Horizontal => cyclically_decreasing(k, a)?,
        Direction::Vertical => cyclically_increasing(k, a)?,
    })
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn accumulate(terms: &mut GcircVec, mu: Partition, c: i64) {
    *terms.entry(mu).or_insert_with(BigInt::zero) += c;
}

/// Σ_{|A|=r, d_A*x_λ Grassmannian} (−1)^{|A|−ℓ(d_A*x_λ)+ℓ(x_λ)} e_{d_A*x_λ}.
pub fn pieri_h_terms(cache: &FamilyCache, r: usize, lambda: &Partition) -> Result<GcircVec, KSchurError> {
    check_r(r, cache.k())?;
    star_terms(cache, r, r, lambda, Direction::Horizontal)
}

fn star_terms(cache: &FamilyCache, lo: usize, hi: usize, lambda: &Partition, dir: Direction) -> Result<GcircVec, KSchurError> {
    let k = cache.k();
    let x = cache.perm(lambda)?;
    let mut terms = GcircVec::new();
    for size in lo..=hi {
        for a in subsets_of_size(k, size) {
            let y = hecke_star(&cyclic(k, &a, dir)?, &x);
            if let Some(mu) = cache.partition_of(&y) {
                accumulate(&mut terms, mu, sign(a.len() as i64 - y.length() as i64 + x.length() as i64));
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(terms)
}

/// The right-hand side of h_r·g^{(k)}_λ.
pub fn pieri_h_rhs(cache: &FamilyCache, r: usize, lambda: &Partition) -> Result<SymFunc, KSchurError> {
    cache.combine(Family::Gk, &pieri_h_terms(cache, r, lambda)?)
}

/// The double sum over μ ≤_k λ and |A| ≤ r, in the g^{(k)} basis.
pub fn pieri_closed_terms(cache: &FamilyCache, r: usize, lambda: &Partition, dir: Direction) -> Result<GcircVec, KSchurError> {
    check_r(r, cache.k())?;
    let mut total = GcircVec::new();
    for mu in cache.lower_set(lambda)? {
        for (nu, c) in star_terms(cache, 0, r, &mu, dir)? {
            *total.entry(nu).or_insert_with(BigInt::zero) += c;
        }
    }
    total.retain(|_, c| !c.is_zero());
    Ok(total)
}

/// The right-hand side of g̃_{(r)}·g̃^{(k)}_λ.
pub fn pieri_closed_h_rhs(cache: &FamilyCache, r: usize, lambda: &Partition) -> Result<SymFunc, KSchurError> {
    cache.combine(Family::Gk, &pieri_closed_terms(cache, r, lambda, Direction::Horizontal)?)
}

/// The right-hand side of g̃_{(1^r)}·g̃^{(k)}_λ.
pub fn pieri_closed_v_rhs(cache: &FamilyCache, r: usize, lambda: &Partition) -> Result<SymFunc, KSchurError> {
    cache.combine(Family::Gk, &pieri_closed_terms(cache, r, lambda, Direction::Vertical)?)
}

fn strips(cache: &FamilyCache, lambda: &Partition, r: usize, dir: Direction) -> Result<Vec<BTreeSet<usize>>, KSchurError> {
    check_r(r, cache.k())?;
    let x = cache.perm(lambda)?;
    let mut out = Vec::new();
    for a in subsets_of_size(cache.k(), r) {
        let y = cyclic(cache.k(), &a, dir)?.compose(&x);
        if y.is_grassmannian() && weak_leq_left(&x, &y) {
            out.push(a);
        }
    }
    Ok(out)
}

/// {A : |A| = r, d_A x_λ Grassmannian, d_A x_λ ≥_L x_λ}.
pub fn strips_h(cache: &FamilyCache, lambda: &Partition, r: usize) -> Result<Vec<BTreeSet<usize>>, KSchurError> {
    strips(cache, lambda, r, Direction::Horizontal)
}

/// {A : |A| = r, u_A x_λ Grassmannian, u_A x_λ ≥_L x_λ}.
pub fn strips_v(cache: &FamilyCache, lambda: &Partition, r: usize) -> Result<Vec<BTreeSet<usize>>, KSchurError> {
    strips(cache, lambda, r, Direction::Vertical)
}

/// The shape of d_A x_λ (or u_A x_λ).
pub fn strip_partition(cache: &FamilyCache, a: &BTreeSet<usize>, lambda: &Partition, dir: Direction) -> Result<Partition, KSchurError> {
    let y = cyclic(cache.k(), a, dir)?.compose(&cache.perm(lambda)?);
    cache.partition_of(&y).ok_or_else(|| {
        KSchurError::OutOfRange(format!("{:?} applied to {lambda} is not Grassmannian", a))
    })
}

/// Inclusion–exclusion over intersections of strip sets, in the g̃^{(k)} basis.
pub fn pieri_appc(cache: &FamilyCache, r: usize, lambda: &Partition, dir: Direction) -> Result<GcircVec, KSchurError> {
    let sets = strips(cache, lambda, r, dir)?;
    let m = sets.len();
    let mut total = GcircVec::new();
    for mask in 1u64..(1 << m) {
        let mut chosen = (0..m).filter(|t| mask & (1 << t) != 0);
        let first = chosen.next().expect("mask is nonzero");
        let inter = chosen.fold(sets[first].clone(), |acc, t| acc.intersection(&sets[t]).copied().collect());
        let kappa = strip_partition(cache, &inter, lambda, dir)?;
        accumulate(&mut total, kappa, sign(mask.count_ones() as i64 - 1));
    }
    total.retain(|_, c| !c.is_zero());
    Ok(total)
}

/// Compares g_{(1^r)}·𝔤̃_λ with Σ_{|A|≤r} T_{u_A}·𝔤̃_λ.
pub fn key_lemma_check(cache: &FamilyCache, r: usize, lambda: &Partition) -> Result<(SymFunc, SymFunc), KSchurError> {
    let k = cache.k();
    check_r(r, k)?;
    let lhs = &dual_grothendieck(&vec![1; r]) * &cache.closed_katalan(lambda)?;
    let start: GcircVec = cache.lower_set(lambda)?.into_iter().map(|mu| (mu, BigInt::from(1))).collect();
    let mut total = GcircVec::new();
    for size in 0..=r {
        for a in subsets_of_size(k, size) {
            for (mu, c) in t_u_a(cache, &a, &start)? {
                *total.entry(mu).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    let rhs = cache.combine(Family::Gcirc, &total)?;
    Ok((lhs, rhs))
}

/// Both sides of g̃_{R_i}·g̃^{(k)}_λ = g̃^{(k)}_{λ∪R_i} and of g_{R_i}·𝔤̃_λ = 𝔤̃_{λ∪R_i}.
pub fn k_rectangle_check(
    cache: &FamilyCache,
    i: usize,
    lambda: &Partition,
) -> Result<[(SymFunc, SymFunc); 2], KSchurError> {
    let k = cache.k();
    if i == 0 || i > k {
        return Err(KSchurError::OutOfRange(format!("rectangle index {i} outside 1..={k}")));
    }
    let rect = k_rectangle(k, i);
    let union = lambda.union(&rect);
    let closed = (&g_tilde(&rect) * &cache.gtilde(lambda)?, cache.gtilde(&union)?);
    let katalan_rect = apply_f_inv(&g_tilde(&rect));
    let katalan = (&katalan_rect * &cache.closed_katalan(lambda)?, cache.closed_katalan(&union)?);
    Ok([closed, katalan])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn horizontal_example_k2() {
        let c = FamilyCache::new(2);
        let l = p(&[1, 1, 1]);
        let terms = pieri_h_terms(&c, 2, &l).unwrap();
        let want = GcircVec::from([(p(&[2, 1, 1, 1]), BigInt::from(1)), (p(&[2, 1, 1]), BigInt::from(-1))]);
        assert_eq!(terms, want);
        assert_eq!(pieri_h_rhs(&c, 2, &l).unwrap(), &SymFunc::h(2) * &c.gk(&l).unwrap());
    }

    #[test]
    fn strips_example_k3() {
        let c = FamilyCache::new(3);
        let l = p(&[2, 1]);
        let h = strips_h(&c, &l, 2).unwrap();
        assert_eq!(h.iter().collect::<BTreeSet<_>>(), [set(&[2, 3]), set(&[0, 2])].iter().collect());
        let v = strips_v(&c, &l, 2).unwrap();
        assert_eq!(v.iter().collect::<BTreeSet<_>>(), [set(&[1, 2]), set(&[0, 2])].iter().collect());
        assert_eq!(strip_partition(&c, &set(&[2, 3]), &l, Direction::Horizontal).unwrap(), p(&[3, 1, 1]));
        assert_eq!(strip_partition(&c, &set(&[1, 2]), &l, Direction::Vertical).unwrap(), p(&[2, 1, 1, 1]));
        let want_h =
            GcircVec::from([(p(&[3, 1, 1]), 1.into()), (p(&[2, 2, 1]), 1.into()), (p(&[2, 1, 1]), (-1).into())]);
        assert_eq!(pieri_appc(&c, 2, &l, Direction::Horizontal).unwrap(), want_h);
        let want_v =
            GcircVec::from([(p(&[2, 1, 1, 1]), 1.into()), (p(&[2, 2, 1]), 1.into()), (p(&[2, 1, 1]), (-1).into())]);
        assert_eq!(pieri_appc(&c, 2, &l, Direction::Vertical).unwrap(), want_v);
    }

    #[test]
    fn key_lemma_small() {
        let c = FamilyCache::new(2);
        for l in [Partition::empty(), p(&[1, 1, 1]), p(&[2, 1])] {
            for r in 1..=2 {
                let (a, b) = key_lemma_check(&c, r, &l).unwrap();
                assert_eq!(a, b, "λ = {l}, r = {r}");
            }
        }
    }

    #[test]
    fn rectangle_small() {
        let c = FamilyCache::new(2);
        for [a, b] in [k_rectangle_check(&c, 1, &p(&[2])).unwrap(), k_rectangle_check(&c, 2, &p(&[1])).unwrap()] {
            assert_eq!(a.0, a.1);
            assert_eq!(b.0, b.1);
        }
        assert!(k_rectangle_check(&c, 3, &p(&[1])).is_err());
    }
}
