use super::KatalanError;
use crate::symfunc::Partition;

/// An upper order ideal Ψ in the positive roots Δ_ℓ⁺ = {(i, j) : 1 ≤ i < j ≤ ℓ},
/// stored by the first column of each row (ℓ+1 for an empty row).
/// Rows and columns are 1-indexed throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIdeal {
    ell: usize,
    first_col: Vec<usize>,
}

impl RootIdeal {
    pub fn new(ell: usize, first_col: Vec<usize>) -> Result<Self, KatalanError> {
        if first_col.len() != ell {
            return Err(KatalanError::InvalidIdeal(format!("expected {ell} rows, got {}", first_col.len())));
        }
        for (idx, &c) in first_col.iter().enumerate() {
            let i = idx + 1;
            if c <= i || c > ell + 1 {
                return Err(KatalanError::InvalidIdeal(format!("row {i} starts at column {c}")));
            }
            if idx > 0 && first_col[idx - 1] > c {
                return Err(KatalanError::InvalidIdeal(format!("row {i} starts left of row {}", i - 1)));
            }
        }
        Ok(RootIdeal { ell, first_col })
    }

    pub fn empty(ell: usize) -> Self {
        RootIdeal { ell, first_col: vec![ell + 1; ell] }
    }

    /// All of Δ_ℓ⁺.
    pub fn full(ell: usize) -> Self {
        RootIdeal { ell, first_col: (2..=ell + 1).collect() }
    }

    /// Δ^k(λ) = {(i, j) : λ_i + j − i > k}.
    pub fn delta_k(k: usize, lambda: &Partition, ell: usize) -> Self {
        assert!(ell >= lambda.len(), "ℓ must be at least ℓ(λ)");
        let first_col = (1..=ell)
            .map(|i| {
                let start = (k + i + 1).saturating_sub(lambda.part(i)).max(i + 1);
                start.min(ell + 1)
            })
            .collect();
        RootIdeal { ell, first_col }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn first_cols(&self) -> &[usize] {
        &self.first_col
    }

    pub fn first_col(&self, i: usize) -> usize {
        self.first_col[i - 1]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i < j && j <= self.ell && j >= self.first_col[i - 1]
    }

    pub fn num_roots(&self) -> usize {
        (1..=self.ell).map(|i| self.row_len(i)).sum()
    }

    pub fn roots(&self) -> Vec<(usize, usize)> {
        (1..=self.ell).flat_map(|i| (self.first_col(i)..=self.ell).map(move |j| (i, j))).collect()
    }

    /// Roots of Δ_ℓ⁺ outside Ψ, in lexicographic order.
    pub fn complement(&self) -> Vec<(usize, usize)> {
        (1..=self.ell).flat_map(|i| (i + 1..self.first_col(i)).map(move |j| (i, j))).collect()
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.ell + 1 - self.first_col(i)
    }

    pub fn col_len(&self, j: usize) -> usize {
        self.first_col.iter().filter(|&&c| c <= j).count()
    }

    /// L(Ψ) as column multiplicities m(1), …, m(ℓ).
    pub fn l_of(&self) -> Vec<usize> {
        (1..=self.ell).map(|j| self.col_len(j)).collect()
    }

    pub fn is_subset_of(&self, other: &RootIdeal) -> bool {
        self.ell == other.ell && self.first_col.iter().zip(&other.first_col).all(|(a, b)| a >= b)
    }

    pub fn is_removable(&self, i: usize, j: usize) -> bool {
        self.contains(i, j) && self.first_col(i) == j && (i == self.ell || self.first_col(i + 1) > j)
    }

    pub fn is_addable(&self, i: usize, j: usize) -> bool {
        i >= 1 && i < j && j <= self.ell && j + 1 == self.first_col(i) && (i == 1 || self.first_col(i - 1) <= j)
    }

    pub fn removable_roots(&self) -> Vec<(usize, usize)> {
        (1..=self.ell)
            .filter(|&i| self.first_col(i) <= self.ell)
            .map(|i| (i, self.first_col(i)))
            .filter(|&(i, j)| self.is_removable(i, j))
            .collect()
    }

    pub fn addable_roots(&self) -> Vec<(usize, usize)> {
        (1..=self.ell)
            .map(|i| (i, self.first_col(i) - 1))
            .filter(|&(i, j)| self.is_addable(i, j))
            .collect()
    }

    pub fn with_root(&self, i: usize, j: usize) -> Result<Self, KatalanError> {
        if !self.is_addable(i, j) {
            return Err(KatalanError::InvalidIdeal(format!("({i},{j}) is not addable")));
        }
        let mut out = self.clone();
        out.first_col[i - 1] = j;
        Ok(out)
    }

    pub fn without_root(&self, i: usize, j: usize) -> Result<Self, KatalanError> {
        if !self.is_removable(i, j) {
            return Err(KatalanError::InvalidIdeal(format!("({i},{j}) is not removable")));
        }
        let mut out = self.clone();
        out.first_col[i - 1] = j + 1;
        Ok(out)
    }

    /// The row i with (i, p) removable, i.e. the bounce edge p → i.
    pub fn up(&self, p: usize) -> Option<usize> {
        let c = self.col_len(p);
        (c > 0 && self.is_removable(c, p)).then_some(c)
    }

    /// Smallest vertex on the bounce path through p.
    pub fn top(&self, p: usize) -> usize {
        let mut cur = p;
        while let Some(q) = self.up(cur) {
            cur = q;
        }
        cur
    }

    /// p → up(p) is a bounce edge and so is p−1 → up(p)−1.
    pub fn is_mirror_edge(&self, p: usize) -> bool {
        match self.up(p) {
            Some(q) if p >= 2 && q >= 2 => self.up(p - 1) == Some(q - 1),
            _ => false,
        }
    }

    /// The maximal mirror path starting at p, p itself first.
    pub fn mirror_path(&self, p: usize) -> Vec<usize> {
        let mut path = vec![p];
        let mut cur = p;
        while self.is_mirror_edge(cur) {
            cur = self.up(cur).expect("mirror edges are bounce edges");
            path.push(cur);
        }
        path
    }

    pub fn mtop(&self, p: usize) -> usize {
        *self.mirror_path(p).last().expect("path is nonempty")
    }

    /// Rows r..=r+d all have the same length.
    pub fn has_wall(&self, rows: std::ops::RangeInclusive<usize>) -> bool {
        let (a, b) = (*rows.start(), *rows.end());
        a >= 1 && b <= self.ell && a < b && (a..=b).all(|i| self.row_len(i) == self.row_len(a))
    }

    /// Columns c..=c+d all have the same length.
    pub fn has_ceiling(&self, cols: std::ops::RangeInclusive<usize>) -> bool {
        let (a, b) = (*cols.start(), *cols.end());
        a >= 1 && b <= self.ell && a < b && (a..=b).all(|j| self.col_len(j) == self.col_len(a))
    }

    /// All root ideals of Δ_ℓ⁺.
    pub fn all(ell: usize) -> Vec<RootIdeal> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(ell);
        fn rec(ell: usize, cur: &mut Vec<usize>, out: &mut Vec<RootIdeal>) {
            let i = cur.len() + 1;
            if i > ell {
                out.push(RootIdeal { ell, first_col: cur.clone() });
                return;
            }
            let lo = cur.last().copied().unwrap_or(2).max(i + 1);
            for c in lo..=ell + 1 {
                cur.push(c);
                rec(ell, cur, out);
                cur.pop();
            }
        }
        rec(ell, &mut cur, &mut out);
        out
    }
}

/// 𝔯(p) = −p + 1 mod k+1.
pub fn residue_r(p: usize, k: usize) -> usize {
    (1 - p as i64).rem_euclid(k as i64 + 1) as usize
}
