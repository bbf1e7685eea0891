use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{HMonomial, Partition, SymFunc};

/// Binomial coefficient C(n, j) = n(n-1)⋯(n-j+1)/j! for any integer n.
fn binomial(n: i64, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j as i64 {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// h_i^{(m)} = F^m(h_i) = Σ_{j=0}^{i} C(m+j-1, j) h_{i-j}.
pub fn h_shifted(i: i64, m: i64) -> SymFunc {
    if i < 0 {
        return SymFunc::zero();
    }
    let mut out = SymFunc::zero();
    for j in 0..=i {
        let c = binomial(m + j - 1, j as usize);
        let mono = if i - j == 0 {
            HMonomial::one()
        } else {
            HMonomial::from_parts(&[(i - j) as usize])
        };
        out.add_term(mono, &c);
    }
    out
}

/// k_γ = h^{(0)}_{γ_1} h^{(1)}_{γ_2} ⋯ h^{(ℓ-1)}_{γ_ℓ}.
pub fn k_weight(gamma: &[i64]) -> SymFunc {
    let mut acc = SymFunc::one();
    for (idx, &g) in gamma.iter().enumerate() {
        if g < 0 {
            return SymFunc::zero();
        }
        if g == 0 {
            continue;
        }
        acc = &acc * &h_shifted(g, idx as i64);
    }
    acc
}

/// Exact determinant over Λ by Laplace expansion along rows, memoized on
/// the set of remaining columns. No division is needed.
pub fn determinant(matrix: &[Vec<SymFunc>]) -> SymFunc {
    let n = matrix.len();
    assert!(n < 32, "determinant limited to 31 rows");
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return SymFunc::one();
    }
    let mut memo: HashMap<u32, SymFunc> = HashMap::new();
    minor(matrix, (1u32 << n) - 1, &mut memo)
}

fn minor(matrix: &[Vec<SymFunc>], cols: u32, memo: &mut HashMap<u32, SymFunc>) -> SymFunc {
    let n = matrix.len();
    let remaining = cols.count_ones() as usize;
    if remaining == 0 {
        return SymFunc::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let row = n - remaining;
    let mut out = SymFunc::zero();
    let mut pos = 0usize;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &matrix[row][c];
        if !entry.is_zero() {
            let sub = minor(matrix, cols & !(1 << c), memo);
            if !sub.is_zero() {
                let term = entry * &sub;
                let sign = if pos % 2 == 0 { BigInt::one() } else { BigInt::from(-1) };
                out.add_scaled(&term, &sign);
            }
        }
        pos += 1;
    }
    memo.insert(cols, out.clone());
    out
}

/// g_γ = det(h^{(i-j)}_{γ_i+j-i}).
pub fn dual_grothendieck(gamma: &[i64]) -> SymFunc {
    let l = gamma.len();
    let matrix: Vec<Vec<SymFunc>> = (0..l)
        .map(|i| (0..l).map(|j| h_shifted(gamma[i] + j as i64 - i as i64, i as i64 - j as i64)).collect())
        .collect();
    determinant(&matrix)
}

/// g̃_λ = Σ_{μ ⊂ λ} g_μ.
pub fn g_tilde(lambda: &Partition) -> SymFunc {
    lambda
        .subpartitions()
        .iter()
        .map(|mu| dual_grothendieck(&mu.padded(0)))
        .sum()
}

/// Extends `image` (the value on h_i, i ≥ 1) to a ring morphism of Λ.
fn apply_morphism(f: &SymFunc, image: impl Fn(usize) -> SymFunc) -> SymFunc {
    let max = f.max_part();
    let images: Vec<SymFunc> = (0..=max).map(|i| if i == 0 { SymFunc::one() } else { image(i) }).collect();
    let mut memo: HashMap<Vec<usize>, SymFunc> = HashMap::new();
    let mut out = SymFunc::zero();
    for (m, c) in f.terms() {
        let img = monomial_image(&m.parts(), &images, &mut memo);
        out.add_scaled(&img, c);
    }
    out
}

fn monomial_image(parts: &[usize], images: &[SymFunc], memo: &mut HashMap<Vec<usize>, SymFunc>) -> SymFunc {
    match parts.len() {
        0 => return SymFunc::one(),
        1 => return images[parts[0]].clone(),
        _ => {}
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let rest = monomial_image(&parts[1..], images, memo);
    let v = &images[parts[0]] * &rest;
    memo.insert(parts.to_vec(), v.clone());
    v
}

/// F(h_i) = h_0 + h_1 + ⋯ + h_i.
pub fn apply_f(f: &SymFunc) -> SymFunc {
    apply_morphism(f, |i| (0..=i as i64).map(SymFunc::h).sum())
}

/// F⁻¹(h_i) = h_i − h_{i−1}.
pub fn apply_f_inv(f: &SymFunc) -> SymFunc {
    apply_morphism(f, |i| &SymFunc::h(i as i64) - &SymFunc::h(i as i64 - 1))
}

/// Ω(h_i) = g_{(1^i)}.
pub fn apply_omega(f: &SymFunc) -> SymFunc {
    apply_morphism(f, |i| dual_grothendieck(&vec![1; i]))
}
