use std::collections::HashMap;
use std::sync::Mutex;

use super::AffinePerm;

/// Bruhat order by the lifting property: for a left descent i of w,
/// u ≤ w iff s_i u ≤ s_i w when s_i u < u, and iff u ≤ s_i w otherwise.
pub fn bruhat_leq(u: &AffinePerm, w: &AffinePerm) -> bool {
    assert_eq!(u.k(), w.k(), "rank mismatch");
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length() > w.length() {
            return false;
        }
        let Some(&i) = w.left_descents().first() else {
            return u.is_identity();
        };
        if u.has_left_descent(i) {
            u = u.left_mul_s(i);
        }
        w = w.left_mul_s(i);
    }
}

/// u ≤_L w iff ℓ(w u⁻¹) = ℓ(w) − ℓ(u).
pub fn weak_leq_left(u: &AffinePerm, w: &AffinePerm) -> bool {
    let lu = u.length();
    let lw = w.length();
    lu <= lw && w.compose(&u.inverse()).length() == lw - lu
}

/// Memoized Bruhat comparisons, shareable between threads.
#[derive(Debug, Default)]
pub struct BruhatOracle {
    memo: Mutex<HashMap<(AffinePerm, AffinePerm), bool>>,
}

impl BruhatOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leq(&self, u: &AffinePerm, w: &AffinePerm) -> bool {
        let key = (u.clone(), w.clone());
        if let Some(&v) = self.memo.lock().expect("bruhat memo poisoned").get(&key) {
            return v;
        }
        let v = bruhat_leq(u, w);
        self.memo.lock().expect("bruhat memo poisoned").insert(key, v);
        v
    }

    pub fn len(&self) -> usize {
        self.memo.lock().expect("bruhat memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_incomparables() {
        let k = 2;
        let id = AffinePerm::identity(k);
        let s0 = AffinePerm::simple(k, 0);
        let s1 = AffinePerm::simple(k, 1);
        let w = AffinePerm::from_word(k, &[1, 0]);
        assert!(bruhat_leq(&id, &w));
        assert!(bruhat_leq(&s0, &w));
        assert!(bruhat_leq(&s1, &w));
        assert!(!bruhat_leq(&w, &s1));
        assert!(!bruhat_leq(&s0, &s1));
        assert!(bruhat_leq(&w, &w));
        assert!(weak_leq_left(&s0, &w));
        assert!(!weak_leq_left(&s1, &w));
        let oracle = BruhatOracle::new();
        assert!(oracle.leq(&s0, &w));
        assert!(oracle.leq(&s0, &w));
        assert_eq!(oracle.len(), 1);
    }
}
