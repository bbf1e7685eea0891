//! Sweeps of the main identities, reported one record per checked instance.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{k_bounded_up_to, omega_k_partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::katalan::{evaluate, expansion_value, residue_r, sample_instance, straighten, KatalanTriple, RewriteRule};
use crate::kschur::{
    hecke_module_check, hecke_d, k_rectangle_check, key_lemma_check, pieri_appc, pieri_closed_h_rhs,
    pieri_closed_v_rhs, pieri_h_rhs, CoxeterKind, Direction, Family, FamilyCache,
};
use crate::peterson::{
    chevalley_check, corner_lemma_check, discrete_toda_check, grassmannian_image_check, ideal_vanishing_check,
    prop_di_check, TauTable,
};
use crate::symfunc::{apply_f, apply_omega, dual_grothendieck, g_tilde, Partition, SymFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub identity: String,
    pub k: usize,
    pub lambda: Vec<usize>,
    pub status: Status,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let lambda = Partition::new(self.lambda.clone()).map(|p| p.to_string()).unwrap_or_default();
        let mut line = format!("{status} {} k={} λ={lambda}", self.identity, self.k);
        if let Some(d) = &self.detail {
            line.push_str(&format!(" [{d}]"));
        }
        line
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    TheoremMain,
    Pieri,
    KRectangle,
    Straightening,
    HeckeModule,
    Peterson,
    AppendixC,
    Involution,
    RewriteLemmas,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::TheoremMain,
        Suite::Pieri,
        Suite::KRectangle,
        Suite::Straightening,
        Suite::HeckeModule,
        Suite::Peterson,
        Suite::AppendixC,
        Suite::Involution,
        Suite::RewriteLemmas,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::Pieri => "pieri",
            Suite::KRectangle => "k-rectangle",
            Suite::Straightening => "straightening",
            Suite::HeckeModule => "hecke-module",
            Suite::Peterson => "peterson",
            Suite::AppendixC => "appendix-c",
            Suite::Involution => "involution",
            Suite::RewriteLemmas => "rewrite-lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.tag() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Sweep bounds: every k in 1..=max_k and |λ| ≤ max_size. For the
/// straightening and rewrite-lemmas suites max_size bounds ℓ; for
/// hecke-module it is the length cutoff. `seed` drives rewrite-lemmas.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_k: usize,
    pub max_size: usize,
    pub parallel: bool,
    pub seed: u64,
}

/// Random instances drawn per rewrite rule.
pub const REWRITE_SAMPLES: usize = 200;

/// One sweep item: a name, the partition it concerns, and a thunk producing
/// either an equality (lhs, rhs) or a bare verdict.
enum Outcome {
    Equal(SymFunc, SymFunc),
    Verdict(bool, Option<String>),
}

struct Item<'a> {
    identity: String,
    k: usize,
    lambda: Partition,
    run: Box<dyn Fn() -> Result<Outcome, String> + Send + Sync + 'a>,
}

fn item<'a>(
    identity: impl Into<String>,
    k: usize,
    lambda: &Partition,
    run: impl Fn() -> Result<Outcome, String> + Send + Sync + 'a,
) -> Item<'a> {
    Item { identity: identity.into(), k, lambda: lambda.clone(), run: Box::new(run) }
}

fn execute(it: &Item<'_>) -> VerificationRecord {
    let start = Instant::now();
    let result = (it.run)();
    let elapsed_ms = start.elapsed().as_millis();
    let (status, lhs_terms, rhs_terms, detail) = match result {
        Ok(Outcome::Equal(l, r)) => {
            let status = if l == r { Status::Pass } else { Status::Fail };
            let detail = (status == Status::Fail).then(|| format!("lhs = {}, rhs = {}", l.to_text(), r.to_text()));
            (status, l.num_terms(), r.num_terms(), detail)
        }
        Ok(Outcome::Verdict(ok, detail)) => (if ok { Status::Pass } else { Status::Fail }, 0, 0, detail),
        Err(e) => (Status::Error, 0, 0, Some(e)),
    };
    VerificationRecord {
        identity: it.identity.clone(),
        k: it.k,
        lambda: it.lambda.parts().to_vec(),
        status,
        lhs_terms,
        rhs_terms,
        elapsed_ms,
        detail,
    }
}

fn run_items(items: &[Item<'_>], parallel: bool) -> Vec<VerificationRecord> {
    if parallel {
        items.par_iter().map(execute).collect()
    } else {
        items.iter().map(execute).collect()
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Vec<VerificationRecord> {
    if suite == Suite::RewriteLemmas {
        return rewrite_records(config);
    }
    let mut out = Vec::new();
    for k in 1..=config.max_k {
        out.extend(run_suite_for_k(suite, k, config));
    }
    out
}

/// The records of one suite at a single k.
pub fn run_suite_for_k(suite: Suite, k: usize, config: &SuiteConfig) -> Vec<VerificationRecord> {
    let cache = FamilyCache::new(k);
    let n = config.max_size;
    let parts = k_bounded_up_to(k, n);
    let c = &cache;
    match suite {
        Suite::TheoremMain => {
            let items: Vec<Item> = parts
                .iter()
                .flat_map(|l| {
                    let (l1, l2) = (l.clone(), l.clone());
                    [
                        item("gtilde = F(closed-katalan)", k, l, move || {
                            Ok(Outcome::Equal(c.gtilde(&l1).map_err(err)?, apply_f(&c.closed_katalan(&l1).map_err(err)?)))
                        }),
                        item("F(gcirc) = gk", k, l, move || {
                            Ok(Outcome::Equal(apply_f(&c.gcirc(&l2).map_err(err)?), c.gk(&l2).map_err(err)?))
                        }),
                    ]
                })
                .chain(parts.iter().filter(|l| l.largest() + l.len() <= k + 1).map(|l| {
                    let l = l.clone();
                    item("small shapes: gk = closed-katalan = g, gtilde-k = gtilde", k, &l.clone(), move || {
                        let g = dual_grothendieck(&l.padded(0));
                        let ok = c.gk(&l).map_err(err)? == g
                            && c.closed_katalan(&l).map_err(err)? == g
                            && c.gtilde(&l).map_err(err)? == g_tilde(&l);
                        Ok(Outcome::Verdict(ok, None))
                    })
                }))
                .collect();
            run_items(&items, config.parallel)
        }
        Suite::Pieri => {
            let mut items = Vec::new();
            for l in &parts {
                for r in 1..=k {
                    let (l1, l2, l3, l4) = (l.clone(), l.clone(), l.clone(), l.clone());
                    items.push(item(format!("h_{r}·gk"), k, l, move || {
                        Ok(Outcome::Equal(&SymFunc::h(r as i64) * &c.gk(&l1).map_err(err)?, pieri_h_rhs(c, r, &l1).map_err(err)?))
                    }));
                    items.push(item(format!("gtilde_({r})·gtilde-k"), k, l, move || {
                        let lhs = &g_tilde(&Partition::new(vec![r]).unwrap()) * &c.gtilde(&l2).map_err(err)?;
                        Ok(Outcome::Equal(lhs, pieri_closed_h_rhs(c, r, &l2).map_err(err)?))
                    }));
                    items.push(item(format!("gtilde_(1^{r})·gtilde-k"), k, l, move || {
                        let lhs = &g_tilde(&Partition::new(vec![1; r]).unwrap()) * &c.gtilde(&l3).map_err(err)?;
                        Ok(Outcome::Equal(lhs, pieri_closed_v_rhs(c, r, &l3).map_err(err)?))
                    }));
                    items.push(item(format!("key lemma r={r}"), k, l, move || {
                        let (lhs, rhs) = key_lemma_check(c, r, &l4).map_err(err)?;
                        Ok(Outcome::Equal(lhs, rhs))
                    }));
                }
            }
            run_items(&items, config.parallel)
        }
        Suite::AppendixC => {
            let mut items = Vec::new();
            for l in &parts {
                for r in 1..=k {
                    for (dir, name, lhs_shape) in [
                        (Direction::Horizontal, "horizontal", Partition::new(vec![r]).unwrap()),
                        (Direction::Vertical, "vertical", Partition::new(vec![1; r]).unwrap()),
                    ] {
                        let l = l.clone();
                        items.push(item(format!("appendix-c {name} r={r}"), k, &l.clone(), move || {
                            let lhs = &g_tilde(&lhs_shape) * &c.gtilde(&l).map_err(err)?;
                            let rhs = c.combine(Family::Gtilde, &pieri_appc(c, r, &l, dir).map_err(err)?).map_err(err)?;
                            Ok(Outcome::Equal(lhs, rhs))
                        }));
                    }
                }
            }
            run_items(&items, config.parallel)
        }
        Suite::KRectangle => {
            let mut items = Vec::new();
            for l in &parts {
                for i in 1..=k {
                    for (which, name) in [(0usize, "gtilde"), (1, "closed-katalan")] {
                        let l = l.clone();
                        items.push(item(format!("k-rectangle R_{i} {name}"), k, &l.clone(), move || {
                            let [a, b] = k_rectangle_check(c, i, &l).map_err(err)?;
                            let (lhs, rhs) = if which == 0 { a } else { b };
                            Ok(Outcome::Equal(lhs, rhs))
                        }));
                    }
                }
            }
            run_items(&items, config.parallel)
        }
        Suite::Straightening => {
            let mut items = Vec::new();
            for ell in 1..=n {
                for l in straightening_shapes(k, ell) {
                    for p in (l.len() + 2).max((ell + 1).saturating_sub(k)).max(1)..=ell {
                        let l2 = l.clone();
                        items.push(item(format!("straighten ℓ={ell} p={p}"), k, &l, move || {
                            let s = straighten(&l2, p, k, ell).map_err(err)?;
                            let mut raised = KatalanTriple::closed(k, &l2, ell);
                            let mut gamma = raised.gamma().to_vec();
                            gamma[p - 1] += 1;
                            raised = KatalanTriple::new(raised.psi().clone(), raised.multiplicities().to_vec(), gamma)
                                .map_err(err)?;
                            let lhs = evaluate(&raised);
                            let rhs = evaluate(&s.result);
                            let d = hecke_d(c, residue_r(p, k), &l2).map_err(err)?;
                            if d != s.target {
                                return Ok(Outcome::Verdict(
                                    false,
                                    Some(format!("D action gives {d}, straightening gives {}", s.target)),
                                ));
                            }
                            Ok(Outcome::Equal(lhs, rhs))
                        }));
                    }
                }
            }
            run_items(&items, config.parallel)
        }
        Suite::HeckeModule => {
            let mut items = Vec::new();
            let empty = Partition::empty();
            for (kind, name, gens) in [
                (CoxeterKind::Finite, "finite", (1..=k).collect::<Vec<_>>()),
                (CoxeterKind::Affine, "affine", (0..=k).collect::<Vec<_>>()),
            ] {
                for mask in 0u32..(1 << gens.len()) {
                    let j: BTreeSet<usize> =
                        gens.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &g)| g).collect();
                    if kind == CoxeterKind::Affine && j.len() == gens.len() {
                        continue;
                    }
                    let label = format!("{name} module J={:?}", j);
                    items.push(item(label, k, &empty, move || {
                        let report = hecke_module_check(kind, k, &j, n).map_err(err)?;
                        let detail = (!report.passed()).then(|| report.failures.join("; "));
                        Ok(Outcome::Verdict(report.passed(), detail))
                    }));
                }
            }
            run_items(&items, config.parallel)
        }
        Suite::Peterson => peterson_records(k, c, config),
        Suite::RewriteLemmas => rewrite_records(config),
        Suite::Involution => {
            let items: Vec<Item> = parts
                .iter()
                .map(|l| {
                    let l = l.clone();
                    item("Ω(gk) = gk∘ω_k, Ω(gtilde-k) = gtilde-k∘ω_k", k, &l.clone(), move || {
                        let w = omega_k_partition(k, &l).map_err(err)?;
                        let gk = c.gk(&l).map_err(err)?;
                        let ok = apply_omega(&gk) == c.gk(&w).map_err(err)?
                            && apply_omega(&c.gtilde(&l).map_err(err)?) == c.gtilde(&w).map_err(err)?
                            && apply_omega(&apply_omega(&gk)) == gk;
                        Ok(Outcome::Verdict(ok, None))
                    })
                })
                .collect();
            run_items(&items, config.parallel)
        }
    }
}

/// Seeded random instances of every rewrite rule with ℓ ≤ max(max_size, 4),
/// the smallest ℓ admitting a cleaning site. k is not involved and is reported as 0.
fn rewrite_records(config: &SuiteConfig) -> Vec<VerificationRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let max_ell = config.max_size.max(4);
    let empty = Partition::empty();
    let mut items = Vec::new();
    for rule in RewriteRule::ALL {
        for n in 0..REWRITE_SAMPLES {
            let sampled = sample_instance(rule, &mut rng, max_ell);
            items.push(item(format!("{rule} #{n}"), 0, &empty, move || {
                let (t, site) = sampled.clone().map_err(err)?;
                let e = rule.apply(&t, site).map_err(err)?;
                Ok(Outcome::Equal(evaluate(&t), expansion_value(&e)))
            }));
        }
    }
    run_items(&items, config.parallel)
}

/// k-bounded λ with ℓ(λ) ≤ ℓ−2, the shapes admitting some valid p.
fn straightening_shapes(k: usize, ell: usize) -> Vec<Partition> {
    if ell < 2 {
        return Vec::new();
    }
    k_bounded_up_to(k, k * (ell - 2)).into_iter().filter(|l| l.len() + 2 <= ell).collect()
}

fn peterson_records(k: usize, cache: &FamilyCache, config: &SuiteConfig) -> Vec<VerificationRecord> {
    let empty = Partition::empty();
    let table = match TauTable::new(k) {
        Ok(t) => t,
        Err(e) => {
            return vec![execute(&item("tau table", k, &empty, move || Err(e.to_string())))];
        }
    };
    let t = &table;
    let mut items = Vec::new();
    items.push(item("presentation relations vanish under Φ", k, &empty, move || {
        let outcomes = ideal_vanishing_check(t).map_err(err)?;
        let bad: Vec<String> = outcomes.iter().filter(|o| !o.holds).map(|o| o.i.to_string()).collect();
        Ok(Outcome::Verdict(bad.is_empty(), (!bad.is_empty()).then(|| format!("relations {}", bad.join(",")))))
    }));
    for i in 1..=k {
        items.push(item(format!("discrete Toda i={i}"), k, &empty, move || {
            Ok(Outcome::Verdict(discrete_toda_check(t, i).map_err(err)?, None))
        }));
        items.push(item(format!("τ_i = g_(R_i*) + τ⁻_i, i={i}"), k, &empty, move || {
            Ok(Outcome::Verdict(corner_lemma_check(t, i).map_err(err)?, None))
        }));
        items.push(item(format!("chevalley i={i}"), k, &empty, move || {
            Ok(Outcome::Verdict(chevalley_check(t, i).map_err(err)?, None))
        }));
        for l in Partition::rectangle(i, k + 1 - i).subpartitions() {
            let l2 = l.clone();
            items.push(item(format!("grassmannian image i={i}"), k, &l, move || {
                Ok(Outcome::Verdict(grassmannian_image_check(t, cache, &l2, i).map_err(err)?, None))
            }));
        }
    }
    for l in k_bounded_up_to(k, k + 1).into_iter().filter(|l| l.largest() + l.len() <= k + 1) {
        let l2 = l.clone();
        items.push(item("F⁻¹(gtilde-k) = g on small shapes", k, &l, move || {
            Ok(Outcome::Verdict(prop_di_check(cache, &l2).map_err(err)?, None))
        }));
    }
    run_items(&items, config.parallel)
}
