use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{KatalanTriple, RootIdeal};
use crate::symfunc::{h_shifted, HMonomial, Partition, SymFunc};

/// One factor (1 − L_j) or (1 − R_ij) of a Katalan product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Lower(usize),
    Raise(usize, usize),
}

type Weights = HashMap<Vec<i64>, BigInt>;

/// Number of factors in `rest` raising each coordinate.
fn raise_counts(ell: usize, rest: &[Factor]) -> Vec<i64> {
    let mut out = vec![0; ell];
    for f in rest {
        if let Factor::Raise(i, _) = *f {
            out[i - 1] += 1;
        }
    }
    out
}

/// Applies the factors in order to γ; weights whose entries can no longer
/// all reach ≥ 0 are dropped since they contribute zero.
fn expand(gamma: &[i64], factors: &[Factor]) -> Weights {
    let ell = gamma.len();
    let mut raises = raise_counts(ell, factors);
    let mut cur: Weights = HashMap::new();
    if gamma.iter().zip(&raises).all(|(g, r)| g + r >= 0) {
        cur.insert(gamma.to_vec(), BigInt::one());
    }
    for f in factors {
        let (up, down) = match *f {
            Factor::Lower(j) => (None, j),
            Factor::Raise(i, j) => (Some(i), j),
        };
        if let Some(i) = up {
            raises[i - 1] -= 1;
        }
        let mut next: Weights = HashMap::with_capacity(cur.len() * 2);
        for (g, c) in cur {
            let mut shifted = g.clone();
            shifted[down - 1] -= 1;
            if let Some(i) = up {
                shifted[i - 1] += 1;
            }
            let keep = |v: &Vec<i64>| v.iter().zip(&raises).all(|(x, r)| x + r >= 0);
            if keep(&shifted) {
                *next.entry(shifted).or_insert_with(BigInt::zero) -= &c;
            }
            if keep(&g) {
                *next.entry(g).or_insert_with(BigInt::zero) += c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

/// Σ c_γ k_γ, sharing products along common prefixes of γ.
fn sum_k_weights(weights: Weights) -> SymFunc {
    let mut terms: Vec<(Vec<i64>, BigInt)> = weights.into_iter().filter(|(g, _)| g.iter().all(|&x| x >= 0)).collect();
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut cache: HashMap<(usize, i64), SymFunc> = HashMap::new();
    trie_sum(&terms, 0, &mut cache)
}

fn trie_sum(terms: &[(Vec<i64>, BigInt)], depth: usize, cache: &mut HashMap<(usize, i64), SymFunc>) -> SymFunc {
    if terms.is_empty() {
        return SymFunc::zero();
    }
    if depth == terms[0].0.len() {
        let c: BigInt = terms.iter().map(|(_, c)| c).sum();
        return SymFunc::constant(c);
    }
    let mut out = SymFunc::zero();
    let mut start = 0;
    while start < terms.len() {
        let a = terms[start].0[depth];
        let end = start + terms[start..].iter().take_while(|(g, _)| g[depth] == a).count();
        let sub = trie_sum(&terms[start..end], depth + 1, cache);
        if a == 0 {
            out += &sub;
        } else {
            let h = cache.entry((depth, a)).or_insert_with(|| h_shifted(a, depth as i64));
            out += &(&*h * &sub);
        }
        start = end;
    }
    out
}

/// Π (factors) k_γ for an arbitrary factor list.
pub fn evaluate_factors(gamma: &[i64], factors: &[Factor]) -> SymFunc {
    sum_k_weights(expand(gamma, factors))
}

fn triple_factors(t: &KatalanTriple) -> Vec<Factor> {
    let mut factors = Vec::new();
    for j in 1..=t.ell() {
        factors.extend(std::iter::repeat(Factor::Lower(j)).take(t.m(j)));
    }
    factors.extend(t.psi().complement().into_iter().map(|(i, j)| Factor::Raise(i, j)));
    factors
}

/// K(Ψ; M; γ) = Π_{j∈M}(1 − L_j) Π_{(i,j)∉Ψ}(1 − R_ij) k_γ.
pub fn evaluate(t: &KatalanTriple) -> SymFunc {
    evaluate_factors(t.gamma(), &triple_factors(t))
}

/// Π_{(i,j)∉Δ^k(λ)} (1 − L_j)⁻¹ (1 − R_ij) h_λ with ℓ = ℓ(λ).
pub fn evaluate_lrkh(lambda: &Partition, k: usize) -> SymFunc {
    let ell = lambda.len().max(1);
    let complement = RootIdeal::delta_k(k, lambda, ell).complement();
    let raises: Vec<Factor> = complement.iter().map(|&(i, j)| Factor::Raise(i, j)).collect();
    let mut cur = expand(&lambda.padded(ell), &raises);
    for &(_, j) in &complement {
        let mut next: Weights = HashMap::with_capacity(cur.len() * 2);
        for (g, c) in cur {
            for t in 0..=g[j - 1] {
                let mut v = g.clone();
                v[j - 1] -= t;
                *next.entry(v).or_insert_with(BigInt::zero) += &c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    let mut out = SymFunc::zero();
    for (g, c) in cur {
        if g.iter().all(|&x| x >= 0) {
            let parts: Vec<usize> = g.iter().map(|&x| x as usize).collect();
            out.add_term(HMonomial::from_parts(&parts), &c);
        }
    }
    out
}
