use super::{KatalanError, KatalanTriple};

/// A signed sum Σ c · K(triple).
pub type Expansion = Vec<(i64, KatalanTriple)>;

fn require(ok: bool, lemma: &'static str, clause: impl FnOnce() -> String) -> Result<(), KatalanError> {
    if ok {
        Ok(())
    } else {
        Err(KatalanError::HypothesisViolated { lemma, clause: clause() })
    }
}

fn shifted(gamma: &[i64], plus: &[usize], minus: &[usize]) -> Vec<i64> {
    let mut g = gamma.to_vec();
    for &i in plus {
        g[i - 1] += 1;
    }
    for &i in minus {
        g[i - 1] -= 1;
    }
    g
}

fn check_index(t: &KatalanTriple, i: usize, lemma: &'static str) -> Result<(), KatalanError> {
    require(i >= 1 && i <= t.ell(), lemma, || format!("index {i} outside 1..={}", t.ell()))
}

/// K(Ψ) = K(Ψ∪α; γ) − K(Ψ∪α; γ+α) for α addable.
pub fn add_root_i(t: &KatalanTriple, alpha: (usize, usize)) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "add_root_i";
    let (i, j) = alpha;
    require(t.psi.is_addable(i, j), LEMMA, || format!("({i},{j}) is not an addable root"))?;
    let psi = t.psi.with_root(i, j)?;
    Ok(vec![
        (1, KatalanTriple { psi: psi.clone(), m: t.m.clone(), gamma: t.gamma.clone() }),
        (-1, KatalanTriple { psi, m: t.m.clone(), gamma: shifted(&t.gamma, &[i], &[j]) }),
    ])
}

/// K(Ψ) = K(Ψ∖α; γ) + K(Ψ; γ+α) for α removable.
pub fn add_root_ii(t: &KatalanTriple, alpha: (usize, usize)) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "add_root_ii";
    let (i, j) = alpha;
    require(t.psi.is_removable(i, j), LEMMA, || format!("({i},{j}) is not a removable root"))?;
    let psi = t.psi.without_root(i, j)?;
    Ok(vec![
        (1, KatalanTriple { psi, m: t.m.clone(), gamma: t.gamma.clone() }),
        (1, KatalanTriple { psi: t.psi.clone(), m: t.m.clone(), gamma: shifted(&t.gamma, &[i], &[j]) }),
    ])
}

/// K(M) = K(M∖j; γ) − K(M∖j; γ−ε_j) for j ∈ M.
pub fn dot_i(t: &KatalanTriple, j: usize) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "dot_i";
    check_index(t, j, LEMMA)?;
    require(t.m(j) > 0, LEMMA, || format!("{j} is not in M"))?;
    let mut m = t.m.clone();
    m[j - 1] -= 1;
    Ok(vec![
        (1, KatalanTriple { psi: t.psi.clone(), m: m.clone(), gamma: t.gamma.clone() }),
        (-1, KatalanTriple { psi: t.psi.clone(), m, gamma: shifted(&t.gamma, &[], &[j]) }),
    ])
}

/// K(M) = K(M⊔j; γ) + K(M; γ−ε_j).
pub fn dot_ii(t: &KatalanTriple, j: usize) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "dot_ii";
    check_index(t, j, LEMMA)?;
    let mut m = t.m.clone();
    m[j - 1] += 1;
    Ok(vec![
        (1, KatalanTriple { psi: t.psi.clone(), m, gamma: t.gamma.clone() }),
        (1, KatalanTriple { psi: t.psi.clone(), m: t.m.clone(), gamma: shifted(&t.gamma, &[], &[j]) }),
    ])
}

fn alternating_hypotheses(t: &KatalanTriple, i: usize, lemma: &'static str) -> Result<(), KatalanError> {
    require(i >= 1 && i < t.ell(), lemma, || format!("index {i} outside 1..{}", t.ell()))?;
    require(t.psi.has_ceiling(i..=i + 1), lemma, || format!("(a) no ceiling in columns {i},{}", i + 1))?;
    require(t.psi.has_wall(i..=i + 1), lemma, || format!("(b) no wall in rows {i},{}", i + 1))?;
    require(t.m(i + 1) == t.m(i) + 1, lemma, || format!("(c) m({}) ≠ m({i})+1", i + 1))
}

/// K(γ) = −K(s_iγ − ε_i + ε_{i+1}).
pub fn alternating(t: &KatalanTriple, i: usize) -> Result<Expansion, KatalanError> {
    alternating_hypotheses(t, i, "alternating")?;
    let mut gamma = t.gamma.clone();
    gamma.swap(i - 1, i);
    let gamma = shifted(&gamma, &[i + 1], &[i]);
    Ok(vec![(-1, KatalanTriple { psi: t.psi.clone(), m: t.m.clone(), gamma })])
}

/// K(γ) = 0 when the alternating hypotheses hold and γ_{i+1} = γ_i + 1.
pub fn vanish(t: &KatalanTriple, i: usize) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "vanish";
    alternating_hypotheses(t, i, LEMMA)?;
    require(t.g(i + 1) == t.g(i) + 1, LEMMA, || format!("γ_{} ≠ γ_{i}+1", i + 1))?;
    Ok(Vec::new())
}

/// Checks (a)–(d) of the bounce-up rule at p and returns q = up(p).
fn bounce_hypotheses(t: &KatalanTriple, p: usize, lemma: &'static str) -> Result<usize, KatalanError> {
    require(p >= 2 && p <= t.ell(), lemma, || format!("p = {p} outside 2..={}", t.ell()))?;
    let q = t.psi.up(p).ok_or_else(|| KatalanError::HypothesisViolated {
        lemma,
        clause: format!("no bounce edge starts at {p}"),
    })?;
    require(t.psi.is_addable(q, p - 1), lemma, || format!("(a) ({q},{}) is not addable", p - 1))?;
    require(t.g(p) == t.g(p - 1) + 1, lemma, || format!("(b) γ_{p} ≠ γ_{}+1", p - 1))?;
    require(t.m(p) == t.m(p - 1) + 1, lemma, || format!("(c) m({p}) ≠ m({})+1", p - 1))?;
    require(t.psi.has_wall(p - 1..=p), lemma, || format!("(d) no wall in rows {},{p}", p - 1))?;
    Ok(q)
}

/// K(Ψ; M; γ) = K(Ψ∪β; M; γ+ε_q−ε_p) along the bounce edge p → q, β = (q, p−1).
pub fn bounce_up_1(t: &KatalanTriple, p: usize) -> Result<Expansion, KatalanError> {
    let q = bounce_hypotheses(t, p, "bounce_up_1")?;
    let psi = t.psi.with_root(q, p - 1)?;
    Ok(vec![(1, KatalanTriple { psi, m: t.m.clone(), gamma: shifted(&t.gamma, &[q], &[p]) })])
}

/// K(Ψ; M; γ) = K(Ψ∪β; M⊔{p−1}; γ+ε_q−ε_p).
pub fn bounce_up_2(t: &KatalanTriple, p: usize) -> Result<Expansion, KatalanError> {
    let q = bounce_hypotheses(t, p, "bounce_up_2")?;
    let psi = t.psi.with_root(q, p - 1)?;
    let mut m = t.m.clone();
    m[p - 2] += 1;
    Ok(vec![(1, KatalanTriple { psi, m, gamma: shifted(&t.gamma, &[q], &[p]) })])
}

/// K(γ) = K(γ−ε_p) when top(p) = p, γ_p = γ_{p−1}+1, m(p) = m(p−1) and rows p−1,p form a wall.
pub fn absorption(t: &KatalanTriple, p: usize) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "absorption";
    require(p >= 2 && p <= t.ell(), LEMMA, || format!("p = {p} outside 2..={}", t.ell()))?;
    require(t.psi.top(p) == p, LEMMA, || format!("(a) top({p}) = {} ≠ {p}", t.psi.top(p)))?;
    require(t.g(p) == t.g(p - 1) + 1, LEMMA, || format!("(b) γ_{p} ≠ γ_{}+1", p - 1))?;
    require(t.m(p) == t.m(p - 1), LEMMA, || format!("(c) m({p}) ≠ m({})", p - 1))?;
    require(t.psi.has_wall(p - 1..=p), LEMMA, || format!("(d) no wall in rows {},{p}", p - 1))?;
    Ok(vec![(1, KatalanTriple { psi: t.psi.clone(), m: t.m.clone(), gamma: shifted(&t.gamma, &[], &[p]) })])
}

/// K(Ψ) = K(Ψ∖β) for β = (q, p−1) under the cleaning hypotheses. Condition (d)
/// is γ_p = γ_{p−1}: with it the difference K(Ψ; γ+β) vanishes in rows p−1, p.
/// The variant γ_q = γ_{q−1} alone does not suffice.
pub fn cleaning(t: &KatalanTriple, q: usize, p: usize) -> Result<Expansion, KatalanError> {
    const LEMMA: &str = "cleaning";
    require(p >= 2 && p <= t.ell() && q >= 2, LEMMA, || format!("indices q = {q}, p = {p} out of range"))?;
    require(t.psi.is_removable(q, p - 1), LEMMA, || format!("(a) ({q},{}) is not removable", p - 1))?;
    require(t.psi.has_wall(p - 1..=p), LEMMA, || format!("(b) no wall in rows {},{p}", p - 1))?;
    require(t.psi.has_ceiling(p - 1..=p), LEMMA, || format!("(c) no ceiling in columns {},{p}", p - 1))?;
    require(t.g(p) == t.g(p - 1), LEMMA, || format!("(d) γ_{p} ≠ γ_{}", p - 1))?;
    require(t.m(p) == t.m(p - 1) + 1, LEMMA, || format!("(e) m({p}) ≠ m({})+1", p - 1))?;
    let psi = t.psi.without_root(q, p - 1)?;
    Ok(vec![(1, KatalanTriple { psi, m: t.m.clone(), gamma: t.gamma.clone() })])
}
