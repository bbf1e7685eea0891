use std::fmt::Write;

use kkschur::affine::{bruhat_leq, format_word, grassmannian_perm, lm_word, sh as sh_of, weak_leq_left, AffinePerm};
use kkschur::katalan::{render_diagram, KatalanTriple};
use kkschur::kschur::{pieri_appc, pieri_h_terms, Direction, Family, FamilyCache, GcircVec};
use kkschur::verify::{run_suite, Suite, SuiteConfig, VerificationRecord};
use num_bigint::Sign;
use serde_json::json;

use crate::{BruhatArgs, Common, ComputeArgs, DiagramArgs, DirectionArg, Format, PieriArgs, ShArgs, TripleKind, VerifyArgs};

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

fn ok(stdout: String) -> Result<Outcome, String> {
    Ok(Outcome { code: 0, stdout })
}

fn check_k(k: usize) -> Result<(), String> {
    if k == 0 {
        return Err("--k must be at least 1".into());
    }
    Ok(())
}

fn validate(c: &Common) -> Result<(), String> {
    check_k(c.k)?;
    if !c.lambda.is_k_bounded(c.k) {
        return Err(format!("{} is not {}-bounded", c.lambda, c.k));
    }
    Ok(())
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

/// Terms as `+1·(2,1,1,1) −1·(2,1,1)`, largest partitions first.
pub fn format_terms(v: &GcircVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut terms: Vec<_> = v.iter().collect();
    terms.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
    terms
        .iter()
        .map(|(mu, c)| {
            let sign = if c.sign() == Sign::Minus { "\u{2212}" } else { "+" };
            format!("{sign}{}·{mu}", c.magnitude())
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn terms_json(v: &GcircVec) -> serde_json::Value {
    serde_json::Value::Array(
        v.iter().map(|(mu, c)| json!({"lambda": mu.parts(), "c": c.to_string()})).collect(),
    )
}

pub fn compute(a: &ComputeArgs) -> Result<Outcome, String> {
    let c = &a.common;
    validate(c)?;
    let cache = FamilyCache::new(c.k);
    let f = cache.get(a.family, &c.lambda).map_err(|e| e.to_string())?;
    let expansion = match a.expand_in {
        Some(fam) => Some((fam, cache.expand(fam, &f).map_err(|e| e.to_string())?)),
        None => None,
    };
    match c.format {
        Format::Text => {
            let mut out = format!("{}\n", f.to_text());
            if let Some((fam, v)) = &expansion {
                writeln!(out, "{fam}: {}", format_terms(v)).unwrap();
            }
            ok(out)
        }
        Format::Json => {
            let mut obj = json!({
                "family": a.family.tag(),
                "k": c.k,
                "lambda": c.lambda.parts(),
                "value": serde_json::to_value(&f).map_err(|e| e.to_string())?,
            });
            if let Some((fam, v)) = &expansion {
                obj["expand_in"] = json!(fam.tag());
                obj["coefficients"] = terms_json(v);
            }
            ok(json_line(obj))
        }
    }
}

pub fn pieri(a: &PieriArgs) -> Result<Outcome, String> {
    let c = &a.common;
    validate(c)?;
    if a.r > c.k {
        return Err(format!("--r must be at most k = {}", c.k));
    }
    let cache = FamilyCache::new(c.k);
    let terms = match (a.basis, a.direction) {
        (Family::Gk, DirectionArg::Horizontal) => pieri_h_terms(&cache, a.r, &c.lambda),
        (Family::Gtilde, DirectionArg::Horizontal) => pieri_appc(&cache, a.r, &c.lambda, Direction::Horizontal),
        (Family::Gtilde, DirectionArg::Vertical) => pieri_appc(&cache, a.r, &c.lambda, Direction::Vertical),
        (basis, dir) => {
            return Err(format!(
                "no Pieri rule for --basis {basis} --direction {}; use gk (horizontal) or gtilde",
                if dir == DirectionArg::Vertical { "vertical" } else { "horizontal" }
            ))
        }
    }
    .map_err(|e| e.to_string())?;
    match c.format {
        Format::Text => ok(format!("{}\n", format_terms(&terms))),
        Format::Json => ok(json_line(json!({
            "k": c.k,
            "lambda": c.lambda.parts(),
            "r": a.r,
            "basis": a.basis.tag(),
            "terms": terms_json(&terms),
        }))),
    }
}

pub fn bruhat(a: &BruhatArgs) -> Result<Outcome, String> {
    let c = &a.common;
    validate(c)?;
    let cache = FamilyCache::new(c.k);
    let x = cache.perm(&c.lambda).map_err(|e| e.to_string())?;
    if let Some(mu) = &a.mu {
        if !mu.is_k_bounded(c.k) {
            return Err(format!("{mu} is not {}-bounded", c.k));
        }
        let y = cache.perm(mu).map_err(|e| e.to_string())?;
        let strong = bruhat_leq(&y, &x);
        let weak = weak_leq_left(&y, &x);
        return match c.format {
            Format::Text => ok(format!(
                "x_λ = {}\nx_μ = {}\nx_μ ≤ x_λ (Bruhat): {strong}\nx_μ ≤_L x_λ (weak): {weak}\n",
                x.word_string(),
                y.word_string()
            )),
            Format::Json => ok(json_line(json!({
                "k": c.k,
                "lambda": c.lambda.parts(),
                "mu": mu.parts(),
                "x_lambda": x.word_string(),
                "x_mu": y.word_string(),
                "bruhat_leq": strong,
                "weak_leq": weak,
            }))),
        };
    }
    let lower = cache.lower_set(&c.lambda).map_err(|e| e.to_string())?;
    match c.format {
        Format::Text => {
            let word = format_word(&lm_word(c.k, &c.lambda));
            let mut out = format!("x_λ = {word} (length {})\nwindow {:?}\nlower set:", x.length(), x.window());
            for mu in &lower {
                write!(out, " {mu}").unwrap();
            }
            out.push('\n');
            ok(out)
        }
        Format::Json => ok(json_line(json!({
            "k": c.k,
            "lambda": c.lambda.parts(),
            "word": lm_word(c.k, &c.lambda),
            "window": x.window(),
            "length": x.length(),
            "lower_set": lower.iter().map(|m| m.parts().to_vec()).collect::<Vec<_>>(),
        }))),
    }
}

pub fn diagram(a: &DiagramArgs) -> Result<Outcome, String> {
    let c = &a.common;
    validate(c)?;
    let ell = a.ell.unwrap_or(c.lambda.len().max(1));
    if ell < c.lambda.len() {
        return Err(format!("--ell must be at least ℓ(λ) = {}", c.lambda.len()));
    }
    let t = match a.kind {
        TripleKind::Closed => KatalanTriple::closed(c.k, &c.lambda, ell),
        TripleKind::Kkschur => KatalanTriple::kkschur(c.k, &c.lambda, ell),
    };
    if a.json || c.format == Format::Json {
        return ok(json_line(serde_json::to_value(&t).map_err(|e| e.to_string())?));
    }
    ok(render_diagram(&t))
}

pub fn sh(a: &ShArgs) -> Result<Outcome, String> {
    check_k(a.k)?;
    let w = match (&a.window, &a.lambda, a.i) {
        (Some(win), _, _) => {
            if win.len() != a.k + 1 {
                return Err(format!("--window needs {} entries", a.k + 1));
            }
            AffinePerm::from_window(win.clone()).map_err(|e| e.to_string())?
        }
        (None, Some(l), Some(i)) => grassmannian_perm(l, i, a.k).map_err(|e| e.to_string())?,
        _ => return Err("give --window, or --lambda with --i".into()),
    };
    let shape = sh_of(&w).map_err(|e| e.to_string())?;
    let des = w.right_descents();
    match a.format {
        Format::Text => ok(format!("w = {}\nDes(w) = {des:?}\nsh(w) = {shape}\n", w.word_string())),
        Format::Json => ok(json_line(json!({
            "k": a.k,
            "window": w.window(),
            "descents": des,
            "sh": shape.parts(),
        }))),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome, String> {
    check_k(a.k)?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![a.suite.parse::<Suite>()?]
    };
    let config = SuiteConfig { max_k: a.k, max_size: a.max_size, parallel: a.parallel, seed: a.seed };
    let mut records: Vec<(Suite, VerificationRecord)> = Vec::new();
    for s in suites {
        records.extend(run_suite(s, &config).into_iter().map(|r| (s, r)));
    }
    Ok(report(&records, a.format))
}

/// Exit 0 with the listing when everything passed, otherwise exit 1 with the
/// failures appended as JSON.
fn report(records: &[(Suite, VerificationRecord)], format: Format) -> Outcome {
    let failed: Vec<&(Suite, VerificationRecord)> = records.iter().filter(|(_, r)| !r.passed()).collect();
    let passed = records.len() - failed.len();
    let mut out = String::new();
    match format {
        Format::Text => {
            for (s, r) in records {
                writeln!(out, "{s}: {}", r.to_text()).unwrap();
            }
            writeln!(out, "{passed} passed, {} failed", failed.len()).unwrap();
        }
        Format::Json => {
            let list: Vec<_> = records.iter().map(|(s, r)| record_json(*s, r)).collect();
            out.push_str(&json_line(json!({"records": list, "passed": passed, "failed": failed.len()})));
        }
    }
    if failed.is_empty() {
        return Outcome { code: 0, stdout: out };
    }
    if format == Format::Text {
        let list: Vec<_> = failed.iter().map(|(s, r)| record_json(*s, r)).collect();
        out.push_str(&json_line(json!({"failures": list})));
    }
    Outcome { code: 1, stdout: out }
}

fn record_json(s: Suite, r: &VerificationRecord) -> serde_json::Value {
    let mut v = serde_json::to_value(r).expect("records serialize");
    v["suite"] = json!(s.tag());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use kkschur::Partition;
    use num_bigint::BigInt;

    #[test]
    fn term_format() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let v = GcircVec::from([(p(&[2, 1, 1]), BigInt::from(-1)), (p(&[2, 1, 1, 1]), BigInt::from(1))]);
        assert_eq!(format_terms(&v), "+1·(2,1,1,1) \u{2212}1·(2,1,1)");
        assert_eq!(format_terms(&GcircVec::new()), "0");
    }

    #[test]
    fn failures_exit_one_with_json() {
        use kkschur::verify::Status;
        let rec = |status| VerificationRecord {
            identity: "h_1·gk".into(),
            k: 2,
            lambda: vec![1],
            status,
            lhs_terms: 1,
            rhs_terms: 2,
            elapsed_ms: 0,
            detail: None,
        };
        let good = [(Suite::Pieri, rec(Status::Pass))];
        assert_eq!(report(&good, Format::Text).code, 0);
        let bad = [(Suite::Pieri, rec(Status::Pass)), (Suite::Pieri, rec(Status::Fail))];
        let out = report(&bad, Format::Text);
        assert_eq!(out.code, 1);
        let last = out.stdout.lines().last().unwrap();
        let v: serde_json::Value = serde_json::from_str(last).unwrap();
        assert_eq!(v["failures"].as_array().unwrap().len(), 1);
        assert_eq!(v["failures"][0]["status"], "fail");
        let json = report(&bad, Format::Json);
        assert_eq!(json.code, 1);
        let v: serde_json::Value = serde_json::from_str(json.stdout.trim()).unwrap();
        assert_eq!(v["failed"], 1);
    }
}
