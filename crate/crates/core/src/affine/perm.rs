use std::fmt;

use super::AffineError;

/// An element of the affine symmetric group W̃_{k+1} in window notation
/// [w(1), …, w(k+1)], extended to ℤ by w(j + k + 1) = w(j) + k + 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn identity(k: usize) -> Self {
        AffinePerm { window: (1..=(k as i64 + 1)).collect() }
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self, AffineError> {
        let n = window.len() as i64;
        if n < 2 {
            return Err(AffineError::BadWindow(window, "rank k must be at least 1".into()));
        }
        let shift: i64 = window.iter().enumerate().map(|(i, &w)| w - (i as i64 + 1)).sum();
        if shift != 0 {
            return Err(AffineError::BadWindow(window, "entries must sum to 1+2+…+(k+1)".into()));
        }
        let mut seen = vec![false; n as usize];
        for &w in &window {
            let r = w.rem_euclid(n) as usize;
            if seen[r] {
                return Err(AffineError::BadWindow(window, "entries collide modulo k+1".into()));
            }
            seen[r] = true;
        }
        Ok(AffinePerm { window })
    }

    pub fn simple(k: usize, i: usize) -> Self {
        AffinePerm::identity(k).left_mul_s(i)
    }

    /// s_{a_1} s_{a_2} ⋯ s_{a_r} as a group element.
    pub fn from_word(k: usize, word: &[usize]) -> Self {
        let mut w = AffinePerm::identity(k);
        for &i in word {
            w = w.right_mul_s(i);
        }
        w
    }

    pub fn k(&self) -> usize {
        self.window.len() - 1
    }

    fn n(&self) -> i64 {
        self.window.len() as i64
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// w(j) for any integer j.
    pub fn value(&self, j: i64) -> i64 {
        let n = self.n();
        let r = (j - 1).rem_euclid(n);
        let q = (j - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv = vec![0i64; n as usize];
        for (p, &v) in self.window.iter().enumerate() {
            let q = (v - 1).rem_euclid(n) + 1;
            let t = (v - q) / n;
            inv[(q - 1) as usize] = p as i64 + 1 - t * n;
        }
        AffinePerm { window: inv }
    }

    /// The composite `self ∘ other`.
    pub fn compose(&self, other: &AffinePerm) -> Self {
        assert_eq!(self.k(), other.k(), "rank mismatch");
        AffinePerm { window: other.window.iter().map(|&j| self.value(j)).collect() }
    }

    /// s_i w: swaps the values congruent to i and i+1.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let n = self.n();
        let i = i as i64 % n;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(n);
                if r == i {
                    v + 1
                } else if r == (i + 1) % n {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePerm { window }
    }

    /// w s_i: swaps the positions i and i+1.
    pub fn right_mul_s(&self, i: usize) -> Self {
        let n = self.n() as usize;
        let i = i % n;
        let mut window = self.window.clone();
        if i == 0 {
            let first = window[0];
            let last = window[n - 1];
            window[0] = last - n as i64;
            window[n - 1] = first + n as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePerm { window }
    }

    /// ℓ(w) = Σ_{1≤i<j≤n} |⌊(w(j) − w(i))/n⌋|.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        total
    }

    /// w s_i < w.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = (i % self.window.len()) as i64;
        self.value(i) > self.value(i + 1)
    }

    /// s_i w < w.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.window.len()).filter(|&i| inv.has_right_descent(i)).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.window.len()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// A reduced word, found by repeatedly stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(&i) = w.left_descents().first() {
            word.push(i);
            w = w.left_mul_s(i);
        }
        word
    }

    pub fn is_reduced(k: usize, word: &[usize]) -> bool {
        AffinePerm::from_word(k, word).length() == word.len()
    }

    /// Minimal length in its coset w·S_{k+1}: w(1) < w(2) < ⋯ < w(k+1).
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// Lies in the finite symmetric group S_{k+1}.
    pub fn is_finite(&self) -> bool {
        self.window.iter().all(|&v| (1..=self.n()).contains(&v))
    }

    /// The Dynkin diagram automorphism s_i ↦ s_{−i}: j ↦ 1 − w(1 − j).
    pub fn omega_k(&self) -> Self {
        AffinePerm { window: (1..=self.n()).map(|j| 1 - self.value(1 - j)).collect() }
    }

    /// π^{−t} w π^{t}, which sends s_i to s_{i−t}.
    pub fn conjugate_by_pi(&self, t: i64) -> Self {
        AffinePerm { window: (1..=self.n()).map(|j| self.value(j + t) - t).collect() }
    }

    pub fn word_string(&self) -> String {
        format_word(&self.reduced_word())
    }

    /// Parses either a window `[w1,…,wn]` or a word `s3 s4 s0 s1` (`id` for the identity).
    pub fn parse(k: usize, s: &str) -> Result<Self, AffineError> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| AffineError::Parse(s.to_string()))?;
            let window = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| AffineError::Parse(s.to_string()))?;
            let w = AffinePerm::from_window(window)?;
            if w.k() != k {
                return Err(AffineError::Parse(format!("{s}: window length is not k+1 = {}", k + 1)));
            }
            return Ok(w);
        }
        Ok(AffinePerm::from_word(k, &parse_word(k, t)?))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

pub fn parse_word(k: usize, s: &str) -> Result<Vec<usize>, AffineError> {
    let t = s.trim();
    if t.is_empty() || t == "id" {
        return Ok(Vec::new());
    }
    t.split(|c: char| c.is_whitespace() || c == '*' || c == '·')
        .filter(|x| !x.is_empty())
        .map(|x| {
            let i = x
                .strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| AffineError::Parse(s.to_string()))?;
            if i > k {
                return Err(AffineError::Parse(format!("{s}: generator s{i} out of range for k={k}")));
            }
            Ok(i)
        })
        .collect()
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions_and_braids() {
        for k in 1..=5 {
            for i in 0..=k {
                let s = AffinePerm::simple(k, i);
                assert!(s.compose(&s).is_identity());
                assert_eq!(s.length(), 1);
            }
        }
        let a = AffinePerm::from_word(2, &[0, 1, 0]);
        let b = AffinePerm::from_word(2, &[1, 0, 1]);
        assert_eq!(a, b);
        assert_eq!(AffinePerm::simple(3, 0).window(), &[0, 2, 3, 5]);
    }

    #[test]
    fn left_and_right_multiplication_agree_with_compose() {
        let w = AffinePerm::from_word(3, &[0, 1, 2, 3, 0, 2]);
        for i in 0..=3 {
            let s = AffinePerm::simple(3, i);
            assert_eq!(w.left_mul_s(i), s.compose(&w));
            assert_eq!(w.right_mul_s(i), w.compose(&s));
            assert!(w.compose(&w.inverse()).is_identity());
        }
    }

    #[test]
    fn lengths_and_words() {
        let w = AffinePerm::from_word(2, &[0, 1, 2, 1, 0]);
        assert_eq!(w.length(), 5);
        assert!(AffinePerm::is_reduced(2, &[0, 1, 2, 1, 0]));
        assert!(!AffinePerm::is_reduced(2, &[1, 1]));
        assert_eq!(AffinePerm::identity(3).reduced_word(), Vec::<usize>::new());
        assert_eq!(AffinePerm::from_word(2, &w.reduced_word()), w);
    }

    #[test]
    fn grassmannian_small() {
        assert!(AffinePerm::identity(2).is_grassmannian());
        assert!(AffinePerm::simple(2, 0).is_grassmannian());
        assert!(!AffinePerm::simple(2, 1).is_grassmannian());
    }

    #[test]
    fn omega_fixes_s0() {
        for k in 1..=4 {
            assert_eq!(AffinePerm::simple(k, 0).omega_k(), AffinePerm::simple(k, 0));
            for i in 1..=k {
                assert_eq!(AffinePerm::simple(k, i).omega_k(), AffinePerm::simple(k, k + 1 - i));
            }
        }
    }

    #[test]
    fn parse_forms() {
        let w = AffinePerm::parse(4, "s3 s4 s0 s1").unwrap();
        assert_eq!(AffinePerm::parse(4, &w.to_string()).unwrap(), w);
        assert_eq!(AffinePerm::parse(4, &w.word_string()).unwrap(), w);
        assert!(AffinePerm::parse(2, "s3").is_err());
        assert!(AffinePerm::from_window(vec![1, 1, 4]).is_err());
    }
}
