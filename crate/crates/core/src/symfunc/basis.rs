use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{HMonomial, SymFunc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("residual {0} is not in the span of the family")]
    NotInSpan(String),
    #[error("family is not triangular: {0}")]
    NotTriangular(String),
}

/// Pivot order: higher degree first, then within a degree the
/// lexicographically smaller h-monomial first.
fn pivot_key(m: &HMonomial) -> (usize, Reverse<Vec<usize>>) {
    (m.degree(), Reverse(m.parts()))
}

fn leading(f: &SymFunc) -> Option<(&HMonomial, &BigInt)> {
    f.terms().max_by(|a, b| pivot_key(a.0).cmp(&pivot_key(b.0)))
}

/// Writes `f` as an integer combination of the family by repeated
/// elimination of the leading monomial. The family must have pairwise
/// distinct leading monomials with coefficients dividing what they hit.
pub fn expand_in_family<L: Clone + Ord + Debug>(
    f: &SymFunc,
    family: &[(L, SymFunc)],
) -> Result<BTreeMap<L, BigInt>, BasisError> {
    let mut pivots: HashMap<HMonomial, usize> = HashMap::new();
    for (idx, (label, g)) in family.iter().enumerate() {
        let (m, _) = leading(g)
            .ok_or_else(|| BasisError::NotTriangular(format!("member {label:?} is zero")))?;
        if let Some(prev) = pivots.insert(m.clone(), idx) {
            return Err(BasisError::NotTriangular(format!(
                "members {:?} and {label:?} share leading monomial {m}",
                family[prev].0
            )));
        }
    }
    let mut residual = f.clone();
    let mut out: BTreeMap<L, BigInt> = BTreeMap::new();
    while let Some((m, c)) = leading(&residual).map(|(m, c)| (m.clone(), c.clone())) {
        let idx = *pivots.get(&m).ok_or_else(|| BasisError::NotInSpan(residual.to_text()))?;
        let (label, g) = &family[idx];
        let lc = g.coeff(&m);
        let q = div_exact(&c, &lc).ok_or_else(|| {
            BasisError::NotTriangular(format!("leading coefficient {lc} of {label:?} does not divide {c}"))
        })?;
        residual.add_scaled(g, &-&q);
        let slot = out.entry(label.clone()).or_insert_with(BigInt::zero);
        *slot += q;
        if slot.is_zero() {
            out.remove(label);
        }
    }
    Ok(out)
}

fn div_exact(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if b.is_zero() {
        return None;
    }
    let q = a / b;
    (&(&q * b) == a).then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{dual_grothendieck, Partition};

    #[test]
    fn grothendiecks_are_triangular() {
        let fam: Vec<(Partition, SymFunc)> = Partition::all_up_to(5, 5)
            .into_iter()
            .map(|p| {
                let g = dual_grothendieck(&p.padded(0));
                (p, g)
            })
            .collect();
        let target = &fam[5].1 * &fam[2].1;
        let coeffs = expand_in_family(&target, &fam).unwrap();
        let rebuilt: SymFunc = coeffs
            .iter()
            .map(|(l, c)| fam.iter().find(|(m, _)| m == l).unwrap().1.scale(c))
            .sum();
        assert_eq!(rebuilt, target);
        let unit = expand_in_family(&fam[3].1, &fam).unwrap();
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[&fam[3].0], BigInt::from(1));
    }

    #[test]
    fn span_failure() {
        let fam = vec![(0u8, SymFunc::h(1))];
        assert!(matches!(expand_in_family(&SymFunc::h(2), &fam), Err(BasisError::NotInSpan(_))));
        let dup = vec![(0u8, SymFunc::h(1)), (1u8, &SymFunc::h(1) + &SymFunc::one())];
        assert!(matches!(expand_in_family(&SymFunc::h(1), &dup), Err(BasisError::NotTriangular(_))));
    }
}
