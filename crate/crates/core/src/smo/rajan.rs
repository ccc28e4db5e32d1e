//! Summability of `sum_{v in S} q_v^{-2/(n^2+1)}` decided per residue class.

use num_rational::Rational64;
use serde::Serialize;

use super::SmoError;
use crate::numeric::rational_to_f64;
use crate::primes::{map_segments, PrimeSelector};

pub const EVIDENCE_CUTOFFS: [f64; 6] = [1e2, 1e3, 1e4, 1e5, 1e6, 1e7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RajanVerdict {
    Summable,
    Divergent,
    /// The selector's modulus is too large to list its residue classes.
    Undecidable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeExponent {
    pub degree: u32,
    /// `2f/(n^2+1)`.
    pub exponent: String,
    pub exponent_approx: f64,
    pub summable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RajanReport {
    pub n: u32,
    pub verdict: RajanVerdict,
    pub finite: bool,
    pub degrees: Vec<DegreeExponent>,
    /// `(q cutoff, sum mult * q^{-2/(n^2+1)} over q <= cutoff)`.
    pub partial_sums: Vec<(f64, f64)>,
}

pub fn rajan_criterion(sel: &PrimeSelector, n: u32) -> Result<RajanReport, SmoError> {
    if n == 0 || n > 1000 {
        return Err(SmoError::InvalidArgument(format!("degree {n} outside 1..=1000")));
    }
    let base = Rational64::new(2, (n * n + 1) as i64);
    let finite = sel.is_finite();
    let classes = sel.residue_degrees();
    let degrees: Vec<DegreeExponent> = classes
        .iter()
        .flatten()
        .map(|&f| {
            let e = base * Rational64::from_integer(f as i64);
            DegreeExponent {
                degree: f,
                exponent: e.to_string(),
                exponent_approx: rational_to_f64(&e),
                summable: e > Rational64::from_integer(1),
            }
        })
        .collect();
    let verdict = if finite {
        RajanVerdict::Summable
    } else if classes.is_none() {
        RajanVerdict::Undecidable
    } else if degrees.iter().all(|d| d.summable) {
        RajanVerdict::Summable
    } else {
        RajanVerdict::Divergent
    };
    let exponent = rational_to_f64(&base);
    let top = *EVIDENCE_CUTOFFS.last().expect("nonempty");
    let segments = map_segments(top as u64, |ps| {
        let mut sums = [0.0; EVIDENCE_CUTOFFS.len()];
        for &p in ps {
            let Some(it) = sel.item(p) else { continue };
            let term = it.multiplicity as f64 * it.q.powf(-exponent);
            for (c, s) in EVIDENCE_CUTOFFS.iter().zip(sums.iter_mut()) {
                if it.q <= *c {
                    *s += term;
                }
            }
        }
        sums
    })?;
    let mut sums = [0.0; EVIDENCE_CUTOFFS.len()];
    for seg in segments {
        for (t, v) in sums.iter_mut().zip(seg) {
            *t += v;
        }
    }
    Ok(RajanReport {
        n,
        verdict,
        finite,
        degrees,
        partial_sums: EVIDENCE_CUTOFFS.iter().copied().zip(sums).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::selector_from_str;

    #[test]
    fn cubic_inert_primes_summable() {
        let sel = selector_from_str("degree:N=7;H=6:3").unwrap();
        let r = rajan_criterion(&sel, 2).unwrap();
        assert_eq!(r.verdict, RajanVerdict::Summable);
        assert_eq!(r.degrees[0].exponent, "6/5");
        let (last, prev) = (r.partial_sums[5].1, r.partial_sums[4].1);
        assert!(last - prev < 0.05);
    }

    #[test]
    fn quadratic_inert_primes_divergent() {
        let sel = selector_from_str("degree:N=4;H=:2").unwrap();
        let r = rajan_criterion(&sel, 2).unwrap();
        assert_eq!(r.verdict, RajanVerdict::Divergent);
        assert_eq!(r.degrees[0].exponent, "4/5");
        assert!(r.partial_sums.windows(2).all(|w| w[1].1 > w[0].1 + 0.2));
    }

    #[test]
    fn finite_and_mixed() {
        let r = rajan_criterion(&selector_from_str("list:2,3,5").unwrap(), 2).unwrap();
        assert_eq!(r.verdict, RajanVerdict::Summable);
        assert!((r.partial_sums[0].1 - [2f64, 3., 5.].iter().map(|p| p.powf(-0.4)).sum::<f64>()).abs() < 1e-12);
        let mixed = selector_from_str("degree:N=7;H=6:3 or mod:4:1").unwrap();
        assert_eq!(rajan_criterion(&mixed, 2).unwrap().verdict, RajanVerdict::Divergent);
        let r = rajan_criterion(&selector_from_str("degree:N=7;H=6:3").unwrap(), 1).unwrap();
        assert_eq!(r.verdict, RajanVerdict::Summable);
        let big = selector_from_str("mod:99991:1 and mod:99989:1").unwrap();
        assert_eq!(rajan_criterion(&big, 2).unwrap().verdict, RajanVerdict::Undecidable);
        assert_eq!(rajan_criterion(&PrimeSelector::none(), 2).unwrap().verdict, RajanVerdict::Summable);
    }
}
