use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use super::KSchurError;
use crate::affine::{bruhat_leq, hecke_star_seq, AffinePerm};

/// Which Coxeter group the module V^J is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterKind {
    /// W̃_{k+1} with generators s_0, …, s_k.
    Affine,
    /// S_{k+1} with generators s_1, …, s_k.
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleReport {
    pub kind: CoxeterKind,
    pub k: usize,
    pub j: BTreeSet<usize>,
    pub length_bound: usize,
    /// Number of x ∈ W^J with ℓ(x) ≤ bound.
    pub basis_size: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// An element of the 0-Hecke algebra Σ c_w T_w.
type HeckeVec = BTreeMap<AffinePerm, i64>;

/// T_i T_w = T_{s_i w} if s_i w > w, else −T_w.
fn left_t(i: usize, v: &HeckeVec) -> HeckeVec {
    let mut out = HeckeVec::new();
    for (w, &c) in v {
        if w.has_left_descent(i) {
            *out.entry(w.clone()).or_insert(0) -= c;
        } else {
            *out.entry(w.left_mul_s(i)).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn left_t_seq(seq: &[usize], v: &HeckeVec) -> HeckeVec {
    seq.iter().rev().fold(v.clone(), |acc, &i| left_t(i, &acc))
}

fn add_into(acc: &mut HeckeVec, v: &HeckeVec, c: i64) {
    for (w, &x) in v {
        *acc.entry(w.clone()).or_insert(0) += c * x;
    }
    acc.retain(|_, x| *x != 0);
}

/// Elements reachable from the identity with the given generators, up to `max_len`.
fn elements_up_to(k: usize, gens: &[usize], max_len: Option<usize>) -> Vec<AffinePerm> {
    let id = AffinePerm::identity(k);
    let mut seen: HashSet<AffinePerm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(w) = queue.pop_front() {
        let len = w.length();
        out.push(w.clone());
        if max_len.is_some_and(|m| len >= m) {
            continue;
        }
        for &i in gens {
            let v = w.left_mul_s(i);
            if v.length() == len + 1 && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    out.sort_by_key(|w| (w.length(), w.clone()));
    out
}

fn sequences(gens: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for &g in gens {
                let mut t: Vec<usize> = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Builds V^J = H_W e_J inside the regular representation of the 0-Hecke
/// algebra and checks the T_i action on a_x = T_x e_J, the D_i action on
/// b_x = Σ_{y≤x} a_y, and the sign formula for T_𝒜·a_x with |𝒜| ≤ 4.
pub fn hecke_module_check(
    kind: CoxeterKind,
    k: usize,
    j: &BTreeSet<usize>,
    length_bound: usize,
) -> Result<ModuleReport, KSchurError> {
    let gens: Vec<usize> = match kind {
        CoxeterKind::Affine => (0..=k).collect(),
        CoxeterKind::Finite => (1..=k).collect(),
    };
    if let Some(bad) = j.iter().find(|i| !gens.contains(i)) {
        return Err(KSchurError::OutOfRange(format!("{bad} is not a generator")));
    }
    if kind == CoxeterKind::Affine && j.len() == gens.len() {
        return Err(KSchurError::OutOfRange("J must be a proper subset of I in the affine case".into()));
    }
    let jv: Vec<usize> = j.iter().copied().collect();
    let w_j = elements_up_to(k, &jv, None);
    let e_j: HeckeVec = w_j.iter().map(|v| (v.clone(), 1)).collect();
    let bound = match kind {
        CoxeterKind::Affine => Some(length_bound),
        CoxeterKind::Finite => None,
    };
    let quotient: Vec<AffinePerm> = elements_up_to(k, &gens, bound)
        .into_iter()
        .filter(|w| j.iter().all(|&i| !w.has_right_descent(i)))
        .collect();
    let top = quotient.iter().map(|w| w.length()).max().unwrap_or(0);
    let in_quotient = |w: &AffinePerm| j.iter().all(|&i| !w.has_right_descent(i));

    let mut report = ModuleReport {
        kind,
        k,
        j: j.clone(),
        length_bound,
        basis_size: quotient.len(),
        checks: 0,
        failures: Vec::new(),
    };
    let mut check = |ok: bool, what: String| {
        report.checks += 1;
        if !ok {
            report.failures.push(what);
        }
    };

    for &i in j {
        check(left_t(i, &e_j).is_empty(), format!("T_{i} e_J ≠ 0"));
    }

    let a = |x: &AffinePerm| left_t_seq(&x.reduced_word(), &e_j);
    let a_direct = |x: &AffinePerm| -> HeckeVec { w_j.iter().map(|v| (x.compose(v), 1)).collect() };
    let b = |x: &AffinePerm| {
        let mut acc = HeckeVec::new();
        for y in quotient.iter().filter(|y| y.length() <= x.length() && bruhat_leq(y, x)) {
            add_into(&mut acc, &a_direct(y), 1);
        }
        acc
    };

    for x in &quotient {
        check(a(x) == a_direct(x), format!("a_{} is not Σ_v T_{{xv}}", x.word_string()));
        // Stay inside the truncated basis.
        if bound.is_some() && x.length() + 1 > top {
            continue;
        }
        for &i in &gens {
            let lhs = left_t(i, &a_direct(x));
            let sx = x.left_mul_s(i);
            let rhs = if x.has_left_descent(i) {
                a_direct(x).into_iter().map(|(w, c)| (w, -c)).collect()
            } else if in_quotient(&sx) {
                a_direct(&sx)
            } else {
                HeckeVec::new()
            };
            check(lhs == rhs, format!("T_{i} a_{} disagrees with the three-case rule", x.word_string()));

            let bx = b(x);
            let mut lhs = left_t(i, &bx);
            add_into(&mut lhs, &bx, 1);
            let rhs = if !x.has_left_descent(i) && in_quotient(&sx) { b(&sx) } else { bx };
            check(lhs == rhs, format!("D_{i} b_{} disagrees with the two-case rule", x.word_string()));
        }
    }

    for seq in sequences(&gens, 4) {
        for x in &quotient {
            if bound.is_some() && x.length() + seq.len() > top {
                continue;
            }
            let lhs = left_t_seq(&seq, &a_direct(x));
            let y = hecke_star_seq(&seq, x);
            let rhs = if in_quotient(&y) {
                let e = seq.len() as i64 - y.length() as i64 + x.length() as i64;
                let s = if e.rem_euclid(2) == 0 { 1 } else { -1 };
                a_direct(&y).into_iter().map(|(w, c)| (w, s * c)).collect()
            } else {
                HeckeVec::new()
            };
            check(lhs == rhs, format!("T_{seq:?} a_{} disagrees with the sign formula", x.word_string()));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_all_parabolics() {
        for mask in 0..4u32 {
            let j: BTreeSet<usize> = (1..=2).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let r = hecke_module_check(CoxeterKind::Finite, 2, &j, 0).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(r.basis_size, 6 / [1, 2, 2, 6][mask as usize]);
        }
    }

    #[test]
    fn affine_grassmannian_quotient_k2() {
        let j: BTreeSet<usize> = [1, 2].into();
        let r = hecke_module_check(CoxeterKind::Affine, 2, &j, 4).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(hecke_module_check(CoxeterKind::Affine, 2, &[0, 1, 2].into(), 3).is_err());
    }
}
