//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use kkschur::affine::AffinePerm;
use kkschur::katalan::KatalanTriple;
use kkschur::{HMonomial, SymFunc};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Generalized binomial C(n, j) for any integer n.
pub fn binom(n: i64, j: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..j as i64 {
        acc *= n - t;
    }
    let fact: BigInt = (1..=j as i64).map(BigInt::from).product();
    acc / fact
}

fn h(r: i64) -> SymFunc {
    match r {
        r if r < 0 => SymFunc::zero(),
        0 => SymFunc::one(),
        r => SymFunc::monomial(HMonomial::from_parts(&[r as usize]), 1),
    }
}

/// h^{(m)}_r straight from the generating function (1 − t)^{−m} Σ h_i t^i.
pub fn h_shift(r: i64, m: i64) -> SymFunc {
    let mut out = SymFunc::zero();
    for j in 0..=r.max(-1) {
        out.add_scaled(&h(r - j), &binom(m + j - 1, j as usize));
    }
    out
}

pub fn k_gamma(gamma: &[i64]) -> SymFunc {
    let mut acc = SymFunc::one();
    for (i, &g) in gamma.iter().enumerate() {
        acc = &acc * &h_shift(g, i as i64);
    }
    acc
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign_of(p: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion of det(h^{(i−j)}_{γ_i+j−i}).
pub fn grothendieck_leibniz(gamma: &[i64]) -> SymFunc {
    let n = gamma.len();
    let entry = |i: usize, j: usize| h_shift(gamma[i] + j as i64 - i as i64, i as i64 - j as i64);
    let mut out = SymFunc::zero();
    for p in permutations(n) {
        let mut term = SymFunc::constant(sign_of(&p));
        for (i, &j) in p.iter().enumerate() {
            term = &term * &entry(i, j);
            if term.is_zero() {
                break;
            }
        }
        out += &term;
    }
    out
}

/// Every element of W̃_{k+1} of length ≤ max_len, found by breadth-first search.
pub fn affine_ball(k: usize, max_len: usize) -> Vec<AffinePerm> {
    let mut seen: HashSet<AffinePerm> = HashSet::new();
    let mut layer = vec![AffinePerm::identity(k)];
    seen.insert(layer[0].clone());
    let mut out = layer.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..=k {
                let v = w.right_mul_s(i);
                if v.length() > w.length() && seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// {u : some reduced subword of `word` multiplies to u}; `word` must be reduced.
pub fn reduced_subword_products(k: usize, word: &[usize]) -> HashSet<AffinePerm> {
    let n = word.len();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << n) {
        let sub: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| word[b]).collect();
        let u = AffinePerm::from_word(k, &sub);
        if u.length() == sub.len() {
            out.insert(u);
        }
    }
    out
}

/// K(Ψ; M; γ) by expanding every product of the factors: one term per
/// subset of the complement of Ψ and per choice of t_j ≤ m(j) lowerings.
pub fn katalan_by_subsets(t: &KatalanTriple) -> SymFunc {
    let ell = t.ell();
    let comp = t.psi().complement();
    let mut lowerings: Vec<(Vec<i64>, BigInt)> = vec![(vec![0; ell], BigInt::one())];
    for j in 1..=ell {
        let m = t.m(j);
        let mut next = Vec::new();
        for (v, c) in &lowerings {
            for s in 0..=m {
                let mut w = v.clone();
                w[j - 1] -= s as i64;
                let mut c2 = c * binom(m as i64, s);
                if s % 2 == 1 {
                    c2 = -c2;
                }
                next.push((w, c2));
            }
        }
        lowerings = next;
    }
    let mut weights: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for mask in 0u64..(1 << comp.len()) {
        let mut base = t.gamma().to_vec();
        let mut odd = false;
        for (b, &(i, j)) in comp.iter().enumerate() {
            if mask & (1 << b) != 0 {
                base[i - 1] += 1;
                base[j - 1] -= 1;
                odd = !odd;
            }
        }
        for (v, c) in &lowerings {
            let w: Vec<i64> = base.iter().zip(v).map(|(a, b)| a + b).collect();
            let e = weights.entry(w).or_insert_with(BigInt::zero);
            if odd {
                *e -= c;
            } else {
                *e += c;
            }
        }
    }
    let mut out = SymFunc::zero();
    for (w, c) in weights {
        if !c.is_zero() && w.iter().all(|&x| x >= 0) {
            out.add_scaled(&k_gamma(&w), &c);
        }
    }
    out
}
