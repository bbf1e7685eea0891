use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Family, FamilyCache, KSchurError};
use crate::affine::{cyclic_word, hecke_star_seq};
use crate::symfunc::{expand_in_family, Partition, SymFunc};

/// A finite combination Σ c_μ g°_μ (or of any other family).
pub type GcircVec = BTreeMap<Partition, BigInt>;

fn check_i(cache: &FamilyCache, i: usize) -> Result<(), KSchurError> {
    if i > cache.k() {
        return Err(KSchurError::OutOfRange(format!("generator {i} outside 0..={}", cache.k())));
    }
    Ok(())
}

/// T_i·g°_λ as a signed basis element, or None when it vanishes.
pub fn hecke_t(cache: &FamilyCache, i: usize, lambda: &Partition) -> Result<Option<(i64, Partition)>, KSchurError> {
    check_i(cache, i)?;
    let x = cache.perm(lambda)?;
    if x.has_left_descent(i) {
        return Ok(Some((-1, lambda.clone())));
    }
    Ok(cache.partition_of(&x.left_mul_s(i)).map(|mu| (1, mu)))
}

/// D_i·𝔤̃_λ = 𝔤̃_μ; returns μ.
pub fn hecke_d(cache: &FamilyCache, i: usize, lambda: &Partition) -> Result<Partition, KSchurError> {
    check_i(cache, i)?;
    let x = cache.perm(lambda)?;
    if x.has_left_descent(i) {
        return Ok(lambda.clone());
    }
    Ok(cache.partition_of(&x.left_mul_s(i)).unwrap_or_else(|| lambda.clone()))
}

/// T_{i_1}⋯T_{i_r} applied to a g°-combination, rightmost letter first.
pub fn apply_t_seq(cache: &FamilyCache, seq: &[usize], v: &GcircVec) -> Result<GcircVec, KSchurError> {
    let mut cur = v.clone();
    for &i in seq.iter().rev() {
        let mut next = GcircVec::new();
        for (mu, c) in &cur {
            if let Some((s, nu)) = hecke_t(cache, i, mu)? {
                *next.entry(nu).or_insert_with(BigInt::zero) += c * s;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    Ok(cur)
}

/// T_{u_A} applied to a g°-combination.
pub fn t_u_a(cache: &FamilyCache, a: &BTreeSet<usize>, v: &GcircVec) -> Result<GcircVec, KSchurError> {
    apply_t_seq(cache, &cyclic_word(cache.k(), a, true)?, v)
}

/// The closed form ±g°_{𝒜*x_λ} of T_𝒜·g°_λ, or None when 𝒜*x_λ is not Grassmannian.
pub fn naito_formula(cache: &FamilyCache, seq: &[usize], lambda: &Partition) -> Result<Option<(i64, Partition)>, KSchurError> {
    let x = cache.perm(lambda)?;
    let y = hecke_star_seq(seq, &x);
    let Some(mu) = cache.partition_of(&y) else {
        return Ok(None);
    };
    let e = seq.len() as i64 - y.length() as i64 + x.length() as i64;
    Ok(Some((if e.rem_euclid(2) == 0 { 1 } else { -1 }, mu)))
}

impl FamilyCache {
    /// Σ c_μ f_μ for the chosen family.
    pub fn combine(&self, family: Family, v: &GcircVec) -> Result<SymFunc, KSchurError> {
        let mut out = SymFunc::zero();
        for (mu, c) in v {
            out.add_scaled(&self.get(family, mu)?, c);
        }
        Ok(out)
    }

    /// Coordinates of f in the chosen family, using members up to deg f.
    pub fn expand(&self, family: Family, f: &SymFunc) -> Result<GcircVec, KSchurError> {
        let n = f.degree().unwrap_or(0);
        let basis = self.family_up_to(family, n)?;
        Ok(expand_in_family(f, &basis)?)
    }

    /// T_i applied to an arbitrary element of Λ_(k) through its g° expansion.
    pub fn apply_t(&self, i: usize, f: &SymFunc) -> Result<SymFunc, KSchurError> {
        let v = self.expand(Family::Gcirc, f)?;
        self.combine(Family::Gcirc, &apply_t_seq(self, &[i], &v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn unit(mu: &Partition) -> GcircVec {
        GcircVec::from([(mu.clone(), BigInt::from(1))])
    }

    #[test]
    fn t_squared_is_minus_t() {
        let c = FamilyCache::new(2);
        for l in crate::affine::k_bounded_up_to(2, 4) {
            for i in 0..=2 {
                let once = apply_t_seq(&c, &[i], &unit(&l)).unwrap();
                let twice = apply_t_seq(&c, &[i, i], &unit(&l)).unwrap();
                let neg: GcircVec = once.iter().map(|(m, v)| (m.clone(), -v)).collect();
                assert_eq!(twice, neg);
            }
        }
    }

    #[test]
    fn descent_gives_minus() {
        let c = FamilyCache::new(2);
        assert_eq!(hecke_t(&c, 0, &p(&[1])).unwrap(), Some((-1, p(&[1]))));
        assert_eq!(hecke_t(&c, 0, &Partition::empty()).unwrap(), Some((1, p(&[1]))));
        assert_eq!(hecke_t(&c, 1, &Partition::empty()).unwrap(), None);
        assert_eq!(hecke_d(&c, 1, &Partition::empty()).unwrap(), Partition::empty());
        assert!(hecke_t(&c, 3, &Partition::empty()).is_err());
    }

    #[test]
    fn apply_t_through_expansion() {
        let c = FamilyCache::new(2);
        let l = p(&[2, 1]);
        let f = c.gcirc(&l).unwrap();
        let direct = c.combine(Family::Gcirc, &apply_t_seq(&c, &[1], &unit(&l)).unwrap()).unwrap();
        assert_eq!(c.apply_t(1, &f).unwrap(), direct);
    }
}
