//! Prime-by-prime comparison of local factors.

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use super::hecke::RepresentationData;
use super::SmoError;
use crate::numeric::rational_to_f64;
use crate::primes::map_segments;

const COEFF_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Threshold {
    pub name: String,
    pub value: String,
    pub approx: f64,
}

impl Threshold {
    pub fn new(name: &str, value: Rational64) -> Self {
        Threshold {
            name: name.to_string(),
            value: value.to_string(),
            approx: rational_to_f64(&value),
        }
    }
}

/// Density thresholds for a pair of degree-`n` representations: the proven
/// `1/8` and `1/4` (non-dihedral) bounds and the conjectural `1/(2n^2)`.
pub fn density_thresholds(n: usize) -> Vec<Threshold> {
    vec![
        Threshold::new("refined_multiplicity_one", Rational64::new(1, 8)),
        Threshold::new("non_dihedral", Rational64::new(1, 4)),
        Threshold::new("character_bound", Rational64::new(1, 2 * (n * n) as i64)),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AgreementReport {
    pub left: String,
    pub right: String,
    pub degree: usize,
    pub scan_limit: u64,
    /// `scan_limit` clamped to the data of both sides.
    pub effective_limit: u64,
    pub compared: u64,
    pub disagreements: Vec<u64>,
    pub first_disagreement: Option<u64>,
    /// Disagreeing fraction of compared primes.
    pub density: f64,
    /// `(x, fraction up to x)` at powers of ten and at the effective limit.
    pub density_profile: Vec<(u64, f64)>,
    pub thresholds: Vec<Threshold>,
}

fn coefficients_agree(a: &[Complex64], b: &[Complex64]) -> bool {
    let n = a.len().max(b.len());
    let zero = Complex64::new(0.0, 0.0);
    (0..n).all(|i| {
        let x = a.get(i).copied().unwrap_or(zero);
        let y = b.get(i).copied().unwrap_or(zero);
        (x - y).norm() <= COEFF_TOL * x.norm().max(y.norm()).max(1.0)
    })
}

/// Primes `p <= x` (within the data of both sides, unramified for both)
/// where the reciprocal local polynomials differ.
pub fn compare_local(a: &RepresentationData, b: &RepresentationData, x: u64) -> Result<AgreementReport, SmoError> {
    if a.degree != b.degree {
        return Err(SmoError::DegreeMismatch(a.degree, b.degree));
    }
    let limit = b.product.clamp(a.product.clamp(x));
    let ramified = |p: u64| a.ramified.contains(&p) || b.ramified.contains(&p);
    let segments = map_segments(limit, |ps| {
        let mut compared = Vec::new();
        let mut bad = Vec::new();
        for &p in ps {
            if ramified(p) {
                continue;
            }
            let (fa, fb) = (a.factor(p), b.factor(p));
            if fa.is_none() && fb.is_none() {
                continue;
            }
            compared.push(p);
            let agree = match (fa, fb) {
                (Some(fa), Some(fb)) => {
                    coefficients_agree(&fa.reciprocal_polynomial(), &fb.reciprocal_polynomial())
                }
                _ => false,
            };
            if !agree {
                bad.push(p);
            }
        }
        (compared, bad)
    })?;
    let (compared, disagreements): (Vec<Vec<u64>>, Vec<Vec<u64>>) = segments.into_iter().unzip();
    let compared: Vec<u64> = compared.concat();
    let disagreements: Vec<u64> = disagreements.concat();
    let fraction = |x: u64| {
        let c = compared.partition_point(|&p| p <= x);
        let d = disagreements.partition_point(|&p| p <= x);
        if c == 0 { 0.0 } else { d as f64 / c as f64 }
    };
    let mut marks: Vec<u64> = std::iter::successors(Some(10u64), |m| m.checked_mul(10))
        .take_while(|&m| m < limit)
        .collect();
    marks.push(limit);
    Ok(AgreementReport {
        left: a.label.clone(),
        right: b.label.clone(),
        degree: a.degree,
        scan_limit: x,
        effective_limit: limit,
        compared: compared.len() as u64,
        first_disagreement: disagreements.first().copied(),
        density: fraction(limit),
        density_profile: marks.into_iter().map(|m| (m, fraction(m))).collect(),
        disagreements,
        thresholds: density_thresholds(a.degree),
    })
}
