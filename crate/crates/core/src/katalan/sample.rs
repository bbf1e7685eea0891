use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use super::rewrite::*;
use super::{evaluate, KatalanError, KatalanTriple, RootIdeal};
use crate::symfunc::SymFunc;

/// The rewrite rules on Katalan triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteRule {
    AddRootI,
    AddRootII,
    DotI,
    DotII,
    Alternating,
    Vanish,
    BounceUp1,
    BounceUp2,
    Absorption,
    Cleaning,
}

impl RewriteRule {
    pub const ALL: [RewriteRule; 10] = [
        RewriteRule::AddRootI,
        RewriteRule::AddRootII,
        RewriteRule::DotI,
        RewriteRule::DotII,
        RewriteRule::Alternating,
        RewriteRule::Vanish,
        RewriteRule::BounceUp1,
        RewriteRule::BounceUp2,
        RewriteRule::Absorption,
        RewriteRule::Cleaning,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RewriteRule::AddRootI => "add_root_i",
            RewriteRule::AddRootII => "add_root_ii",
            RewriteRule::DotI => "dot_i",
            RewriteRule::DotII => "dot_ii",
            RewriteRule::Alternating => "alternating",
            RewriteRule::Vanish => "vanish",
            RewriteRule::BounceUp1 => "bounce_up_1",
            RewriteRule::BounceUp2 => "bounce_up_2",
            RewriteRule::Absorption => "absorption",
            RewriteRule::Cleaning => "cleaning",
        }
    }

    /// Applies the rule at `site`; single-index rules read `site.0`, cleaning reads (q, p).
    pub fn apply(self, t: &KatalanTriple, site: (usize, usize)) -> Result<Expansion, KatalanError> {
        let (a, b) = site;
        match self {
            RewriteRule::AddRootI => add_root_i(t, site),
            RewriteRule::AddRootII => add_root_ii(t, site),
            RewriteRule::DotI => dot_i(t, a),
            RewriteRule::DotII => dot_ii(t, a),
            RewriteRule::Alternating => alternating(t, a),
            RewriteRule::Vanish => vanish(t, a),
            RewriteRule::BounceUp1 => bounce_up_1(t, a),
            RewriteRule::BounceUp2 => bounce_up_2(t, a),
            RewriteRule::Absorption => absorption(t, a),
            RewriteRule::Cleaning => cleaning(t, a, b),
        }
    }

    /// Structurally admissible sites of Ψ, before the γ and M conditions are imposed.
    fn sites(self, psi: &RootIdeal) -> Vec<(usize, usize)> {
        let ell = psi.ell();
        match self {
            RewriteRule::AddRootI => psi.addable_roots(),
            RewriteRule::AddRootII => psi.removable_roots(),
            RewriteRule::DotI | RewriteRule::DotII => (1..=ell).map(|j| (j, 0)).collect(),
            RewriteRule::Alternating | RewriteRule::Vanish => (1..ell)
                .filter(|&i| psi.has_ceiling(i..=i + 1) && psi.has_wall(i..=i + 1))
                .map(|i| (i, 0))
                .collect(),
            RewriteRule::BounceUp1 | RewriteRule::BounceUp2 => (2..=ell)
                .filter(|&p| {
                    psi.up(p).is_some_and(|q| psi.is_addable(q, p - 1)) && psi.has_wall(p - 1..=p)
                })
                .map(|p| (p, 0))
                .collect(),
            RewriteRule::Absorption => {
                (2..=ell).filter(|&p| psi.top(p) == p && psi.has_wall(p - 1..=p)).map(|p| (p, 0)).collect()
            }
            RewriteRule::Cleaning => {
                let mut out = Vec::new();
                for p in 2..=ell {
                    if !(psi.has_wall(p - 1..=p) && psi.has_ceiling(p - 1..=p)) {
                        continue;
                    }
                    for q in 2..p {
                        if psi.is_removable(q, p - 1) {
                            out.push((q, p));
                        }
                    }
                }
                out
            }
        }
    }

    /// Forces the γ and M conditions at `site`.
    fn repair(self, m: &mut [usize], gamma: &mut [i64], site: (usize, usize)) {
        let (a, b) = site;
        match self {
            RewriteRule::DotI => m[a - 1] = m[a - 1].max(1),
            RewriteRule::Alternating => m[a] = m[a - 1] + 1,
            RewriteRule::Vanish => {
                m[a] = m[a - 1] + 1;
                gamma[a] = gamma[a - 1] + 1;
            }
            RewriteRule::BounceUp1 | RewriteRule::BounceUp2 => {
                gamma[a - 1] = gamma[a - 2] + 1;
                m[a - 1] = m[a - 2] + 1;
            }
            RewriteRule::Absorption => {
                gamma[a - 1] = gamma[a - 2] + 1;
                m[a - 1] = m[a - 2];
            }
            RewriteRule::Cleaning => {
                gamma[b - 1] = gamma[b - 2];
                m[b - 1] = m[b - 2] + 1;
            }
            RewriteRule::AddRootI | RewriteRule::AddRootII | RewriteRule::DotII => {}
        }
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RewriteRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RewriteRule::ALL.into_iter().find(|r| r.tag() == s).ok_or_else(|| format!("unknown rule {s:?}"))
    }
}

/// A random triple with 2 ≤ ℓ ≤ max_ell and a site where `rule` applies.
pub fn sample_instance<R: Rng>(
    rule: RewriteRule,
    rng: &mut R,
    max_ell: usize,
) -> Result<(KatalanTriple, (usize, usize)), KatalanError> {
    assert!(max_ell >= 2, "need ℓ ≥ 2");
    let ideals: Vec<Vec<RootIdeal>> = (0..=max_ell).map(RootIdeal::all).collect();
    for _ in 0..10_000 {
        let ell = rng.gen_range(2..=max_ell);
        let psi = ideals[ell].choose(rng).expect("Catalan many ideals").clone();
        let sites = rule.sites(&psi);
        let Some(&site) = sites.choose(rng) else {
            continue;
        };
        let mut m: Vec<usize> = (0..ell).map(|_| rng.gen_range(0..=2)).collect();
        let mut gamma: Vec<i64> = (0..ell).map(|_| rng.gen_range(-1..=3)).collect();
        rule.repair(&mut m, &mut gamma, site);
        let t = KatalanTriple::new(psi, m, gamma)?;
        if rule.apply(&t, site).is_ok() {
            return Ok((t, site));
        }
    }
    Err(KatalanError::PreconditionViolated(format!("no admissible instance of {rule} found")))
}

/// Σ c·K(t) over an expansion.
pub fn expansion_value(e: &Expansion) -> SymFunc {
    let mut out = SymFunc::zero();
    for (c, t) in e {
        out.add_scaled(&evaluate(t), &BigInt::from(*c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn every_rule_samples_and_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rule in RewriteRule::ALL {
            for _ in 0..5 {
                let (t, site) = sample_instance(rule, &mut rng, 5).unwrap();
                let e = rule.apply(&t, site).unwrap();
                assert_eq!(expansion_value(&e), evaluate(&t), "{rule} at {site:?} on {t:?}");
            }
        }
    }
}
