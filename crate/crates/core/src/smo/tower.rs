//! Residue degrees along a cyclic tower `Q ⊂ F ⊂ ... ⊂ K` of abelian fields.

use serde::Serialize;

use super::SmoError;
use crate::primes::sieve::is_prime;
use crate::primes::{map_segments, FieldSpec};

const CHAIN_F: &str = include_str!("../../data/fields/q5_real.field");
const CHAIN_K: &str = include_str!("../../data/fields/q5.field");

/// The quadratic subfield of the 5th cyclotomic field and the full field.
pub fn bundled_chain() -> (FieldSpec, Vec<FieldSpec>) {
    let f = FieldSpec::parse(CHAIN_F).expect("bundled field parses");
    let k = FieldSpec::parse(CHAIN_K).expect("bundled field parses");
    (f, vec![k])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TowerReport {
    pub fields: Vec<String>,
    /// `[F:Q]`.
    pub p: u32,
    /// `[K:Q] = p^m`.
    pub m: u32,
    pub x: u64,
    /// Primes of degree `p` in `F` whose degree in `K` was checked.
    pub checked: u64,
    /// Unramified primes whose degree in `F` is not `p`.
    pub excluded: u64,
    pub ramified: Vec<u64>,
    pub counterexamples: Vec<(u64, u32)>,
}

pub fn tower_degree_check(f: &FieldSpec, chain: &[FieldSpec], x: u64) -> Result<TowerReport, SmoError> {
    let p = f.degree();
    if !is_prime(p as u64) {
        return Err(SmoError::NotPrimeDegree(p));
    }
    let k = chain.last().ok_or_else(|| SmoError::NotNested {
        reason: "empty chain".into(),
    })?;
    let mut lower = f;
    for upper in chain {
        if !lower.is_subfield_of(upper)? {
            return Err(SmoError::NotNested {
                reason: format!("{} is not contained in {}", lower.label(), upper.label()),
            });
        }
        if upper.degree() != lower.degree() * p {
            return Err(SmoError::NotNested {
                reason: format!(
                    "{} has degree {} over {}, expected {p}",
                    upper.label(),
                    upper.degree() / lower.degree().max(1),
                    lower.label()
                ),
            });
        }
        lower = upper;
    }
    let m = chain.len() as u32 + 1;
    if !k.is_cyclic() {
        return Err(SmoError::NotNested {
            reason: format!("{} is not cyclic", k.label()),
        });
    }
    let want = p.pow(m);
    let segments = map_segments(x, |ps| {
        let (mut checked, mut excluded) = (0u64, 0u64);
        let mut ramified = Vec::new();
        let mut bad = Vec::new();
        for &l in ps {
            if k.is_ramified(l) || f.is_ramified(l) {
                ramified.push(l);
                continue;
            }
            let (Ok(df), Ok(dk)) = (f.residue_degree(l), k.residue_degree(l)) else {
                ramified.push(l);
                continue;
            };
            if df != p {
                excluded += 1;
                continue;
            }
            checked += 1;
            if dk != want {
                bad.push((l, dk));
            }
        }
        (checked, excluded, ramified, bad)
    })?;
    let mut report = TowerReport {
        fields: std::iter::once(f).chain(chain).map(|g| g.label().to_string()).collect(),
        p,
        m,
        x,
        checked: 0,
        excluded: 0,
        ramified: Vec::new(),
        counterexamples: Vec::new(),
    };
    for (c, e, r, b) in segments {
        report.checked += c;
        report.excluded += e;
        report.ramified.extend(r);
        report.counterexamples.extend(b);
    }
    Ok(report)
}
