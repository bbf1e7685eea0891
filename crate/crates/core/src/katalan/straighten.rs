use super::rewrite::{absorption, bounce_up_1, bounce_up_2, cleaning, Expansion};
use super::{residue_r, KatalanError, KatalanTriple, RootIdeal};
use crate::symfunc::Partition;

/// Which branch of the straightening rule applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StraightenCase {
    /// top(p) < top(p−1): the result is 𝔤̃ of λ + ε_q.
    BounceUp { q: usize },
    /// top(p) > top(p−1): the extra box is absorbed.
    Absorption,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straightened {
    pub result: KatalanTriple,
    pub target: Partition,
    pub case: StraightenCase,
    pub mirror_path: Vec<usize>,
    /// The residue 𝔯(p).
    pub residue: usize,
    /// One line per rewrite applied.
    pub steps: Vec<String>,
}

fn single(e: Expansion) -> KatalanTriple {
    let mut e = e;
    debug_assert!(e.len() == 1 && e[0].0 == 1);
    e.pop().expect("rule yields one triple").1
}

/// Rewrites K(Δ^k(λ); Δ^k(λ); λ+ε_p) into a closed K-k-Schur triple by
/// bouncing along the mirror path from p, branching on top(p) vs top(p−1),
/// then cleaning the extra roots.
pub fn straighten(lambda: &Partition, p: usize, k: usize, ell: usize) -> Result<Straightened, KatalanError> {
    let pre = |msg: String| Err(KatalanError::PreconditionViolated(msg));
    if !lambda.is_k_bounded(k) {
        return pre(format!("{lambda} is not {k}-bounded"));
    }
    if ell < lambda.len() {
        return pre(format!("ℓ = {ell} < ℓ({lambda})"));
    }
    if !(p + k > ell && p <= ell) {
        return pre(format!("need ℓ−k < p ≤ ℓ, got p = {p}, ℓ = {ell}, k = {k}"));
    }
    if p < lambda.len() + 2 {
        return pre(format!("need p ≥ ℓ(λ)+2 = {}, got {p}", lambda.len() + 2));
    }
    let psi = RootIdeal::delta_k(k, lambda, ell);
    let mut t = KatalanTriple::closed(k, lambda, ell);
    t.gamma[p - 1] += 1;
    let path = psi.mirror_path(p);
    let mut steps = Vec::new();

    for w in path.windows(2) {
        let (from, to) = (w[0], w[1]);
        t = single(bounce_up_1(&t, from)?);
        steps.push(format!("bounce_up_1 at {from} → {to}"));
    }
    let mtop = *path.last().expect("path is nonempty");
    let (case, target) = if psi.top(p) < psi.top(p - 1) {
        let q = t.psi.up(mtop).ok_or_else(|| KatalanError::HypothesisViolated {
            lemma: "bounce_up_2",
            clause: format!("no bounce edge starts at {mtop}"),
        })?;
        t = single(bounce_up_2(&t, mtop)?);
        steps.push(format!("bounce_up_2 at {mtop} → {q}"));
        let target = lambda.with_box_added(q).ok_or_else(|| {
            KatalanError::PreconditionViolated(format!("adding a box to row {q} of {lambda} is not a partition"))
        })?;
        (StraightenCase::BounceUp { q }, target)
    } else {
        t = single(absorption(&t, mtop)?);
        steps.push(format!("absorption at {mtop}"));
        (StraightenCase::Absorption, lambda.clone())
    };
    for i in (1..path.len()).rev() {
        let (q, pp) = (path[i], path[i - 1]);
        t = single(cleaning(&t, q, pp)?);
        steps.push(format!("cleaning ({q},{})", pp - 1));
    }
    let expected = KatalanTriple::closed(k, &target, ell);
    if t != expected {
        return Err(KatalanError::HypothesisViolated {
            lemma: "straighten",
            clause: format!("final triple is not the closed triple of {target}"),
        });
    }
    Ok(Straightened { result: t, target, case, mirror_path: path, residue: residue_r(p, k), steps })
}
