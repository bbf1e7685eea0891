use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use super::KSchurError;
use crate::affine::{k_bounded_up_to, lm_bijection, lm_inverse, AffinePerm, BruhatOracle};
use crate::katalan::{evaluate, KatalanTriple};
use crate::symfunc::{Partition, SymFunc};

/// The four families indexed by k-bounded partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// g^{(k)}_λ.
    Gk,
    /// 𝔤̃^{(k)}_λ.
    ClosedKatalan,
    /// g̃^{(k)}_λ.
    Gtilde,
    /// g°^{(k)}_λ.
    Gcirc,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Gk, Family::ClosedKatalan, Family::Gtilde, Family::Gcirc];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Gk => "gk",
            Family::ClosedKatalan => "closed-katalan",
            Family::Gtilde => "gtilde",
            Family::Gcirc => "gcirc",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected gk, closed-katalan, gtilde or gcirc"))
    }
}

/// Lazily computed family members for one k, safe to share between threads.
#[derive(Debug)]
pub struct FamilyCache {
    k: usize,
    table: Mutex<HashMap<(Family, Partition), SymFunc>>,
    perms: Mutex<HashMap<Partition, AffinePerm>>,
    lower: Mutex<HashMap<Partition, Vec<Partition>>>,
    bruhat: BruhatOracle,
}

impl FamilyCache {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "k must be positive");
        FamilyCache {
            k,
            table: Mutex::new(HashMap::new()),
            perms: Mutex::new(HashMap::new()),
            lower: Mutex::new(HashMap::new()),
            bruhat: BruhatOracle::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn check(&self, lambda: &Partition) -> Result<(), KSchurError> {
        if lambda.is_k_bounded(self.k) {
            Ok(())
        } else {
            Err(KSchurError::NotKBounded(lambda.clone(), self.k))
        }
    }

    /// x_λ.
    pub fn perm(&self, lambda: &Partition) -> Result<AffinePerm, KSchurError> {
        if let Some(w) = self.perms.lock().expect("perm cache poisoned").get(lambda) {
            return Ok(w.clone());
        }
        let w = lm_bijection(self.k, lambda)?;
        self.perms.lock().expect("perm cache poisoned").insert(lambda.clone(), w.clone());
        Ok(w)
    }

    /// λ with x_λ = w, or None if w is not affine Grassmannian.
    pub fn partition_of(&self, w: &AffinePerm) -> Option<Partition> {
        w.is_grassmannian().then(|| lm_inverse(w).expect("Grassmannian elements have shapes"))
    }

    pub fn bruhat_leq(&self, u: &AffinePerm, w: &AffinePerm) -> bool {
        self.bruhat.leq(u, w)
    }

    /// {μ : μ ≤_k λ}, by size then lexicographically decreasing; λ comes last.
    pub fn lower_set(&self, lambda: &Partition) -> Result<Vec<Partition>, KSchurError> {
        self.check(lambda)?;
        if let Some(v) = self.lower.lock().expect("lower-set cache poisoned").get(lambda) {
            return Ok(v.clone());
        }
        let x = self.perm(lambda)?;
        let mut out = Vec::new();
        for mu in k_bounded_up_to(self.k, lambda.size()) {
            if mu.size() == lambda.size() && mu != *lambda {
                continue;
            }
            if self.bruhat.leq(&self.perm(&mu)?, &x) {
                out.push(mu);
            }
        }
        self.lower.lock().expect("lower-set cache poisoned").insert(lambda.clone(), out.clone());
        Ok(out)
    }

    pub fn get(&self, family: Family, lambda: &Partition) -> Result<SymFunc, KSchurError> {
        self.check(lambda)?;
        let key = (family, lambda.clone());
        if let Some(f) = self.table.lock().expect("family cache poisoned").get(&key) {
            return Ok(f.clone());
        }
        let ell = lambda.len().max(1);
        let value = match family {
            Family::Gk => evaluate(&KatalanTriple::kkschur(self.k, lambda, ell)),
            Family::ClosedKatalan => evaluate(&KatalanTriple::closed(self.k, lambda, ell)),
            Family::Gtilde => {
                let mut acc = SymFunc::zero();
                for mu in self.lower_set(lambda)? {
                    acc += &self.get(Family::Gk, &mu)?;
                }
                acc
            }
            Family::Gcirc => {
                let mut acc = self.get(Family::ClosedKatalan, lambda)?;
                for mu in self.lower_set(lambda)? {
                    if mu != *lambda {
                        acc = &acc - &self.get(Family::Gcirc, &mu)?;
                    }
                }
                acc
            }
        };
        self.table.lock().expect("family cache poisoned").insert(key, value.clone());
        Ok(value)
    }

    pub fn gk(&self, lambda: &Partition) -> Result<SymFunc, KSchurError> {
        self.get(Family::Gk, lambda)
    }

    pub fn closed_katalan(&self, lambda: &Partition) -> Result<SymFunc, KSchurError> {
        self.get(Family::ClosedKatalan, lambda)
    }

    pub fn gtilde(&self, lambda: &Partition) -> Result<SymFunc, KSchurError> {
        self.get(Family::Gtilde, lambda)
    }

    pub fn gcirc(&self, lambda: &Partition) -> Result<SymFunc, KSchurError> {
        self.get(Family::Gcirc, lambda)
    }

    /// All members of `family` for k-bounded partitions of size at most `n`.
    pub fn family_up_to(&self, family: Family, n: usize) -> Result<Vec<(Partition, SymFunc)>, KSchurError> {
        k_bounded_up_to(self.k, n).into_iter().map(|mu| Ok((mu.clone(), self.get(family, &mu)?))).collect()
    }
}

/// g^{(k)}_λ = K(Δ^k(λ); L(Δ^{k+1}(λ)); λ).
pub fn kkschur(lambda: &Partition, k: usize) -> Result<SymFunc, KSchurError> {
    FamilyCache::new(k).gk(lambda)
}

/// 𝔤̃^{(k)}_λ = K(Δ^k(λ); L(Δ^k(λ)); λ).
pub fn closed_katalan(lambda: &Partition, k: usize) -> Result<SymFunc, KSchurError> {
    FamilyCache::new(k).closed_katalan(lambda)
}

/// g̃^{(k)}_λ = Σ_{μ ≤_k λ} g^{(k)}_μ.
pub fn closed_kkschur(lambda: &Partition, k: usize) -> Result<SymFunc, KSchurError> {
    FamilyCache::new(k).gtilde(lambda)
}

/// g°^{(k)}_λ, defined by 𝔤̃^{(k)}_λ = Σ_{μ ≤_k λ} g°^{(k)}_μ.
pub fn gcirc(lambda: &Partition, k: usize) -> Result<SymFunc, KSchurError> {
    FamilyCache::new(k).gcirc(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{apply_f, dual_grothendieck, g_tilde};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_rows_are_h() {
        let c = FamilyCache::new(3);
        for r in 1..=3 {
            assert_eq!(c.gk(&p(&[r])).unwrap(), SymFunc::h(r as i64));
        }
        assert_eq!(c.gk(&Partition::empty()).unwrap(), SymFunc::one());
        assert_eq!(c.closed_katalan(&Partition::empty()).unwrap(), SymFunc::one());
        assert!(matches!(c.gk(&p(&[4])), Err(KSchurError::NotKBounded(..))));
    }

    #[test]
    fn small_shapes_match_grothendiecks() {
        let c = FamilyCache::new(3);
        for l in [p(&[2, 1]), p(&[1, 1, 1]), p(&[2, 2]), p(&[3])] {
            assert_eq!(c.gk(&l).unwrap(), dual_grothendieck(&l.padded(0)));
            assert_eq!(c.gtilde(&l).unwrap(), g_tilde(&l));
        }
    }

    #[test]
    fn main_identity_small() {
        let c = FamilyCache::new(2);
        for l in k_bounded_up_to(2, 5) {
            assert_eq!(c.gtilde(&l).unwrap(), apply_f(&c.closed_katalan(&l).unwrap()), "λ = {l}");
        }
    }

    #[test]
    fn gcirc_sums_back() {
        let c = FamilyCache::new(2);
        for l in k_bounded_up_to(2, 4) {
            let mut acc = SymFunc::zero();
            for mu in c.lower_set(&l).unwrap() {
                acc += &c.gcirc(&mu).unwrap();
            }
            assert_eq!(acc, c.closed_katalan(&l).unwrap());
            assert_eq!(apply_f(&c.gcirc(&l).unwrap()), c.gk(&l).unwrap());
        }
    }

    #[test]
    fn family_tags() {
        for f in Family::ALL {
            assert_eq!(f.tag().parse::<Family>().unwrap(), f);
        }
        assert!("schur".parse::<Family>().is_err());
    }
}
