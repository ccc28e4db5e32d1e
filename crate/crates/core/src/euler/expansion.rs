//! Dirichlet coefficients of `log L` and positivity checks.

use num_complex::Complex64;
use serde::Serialize;

use super::product::EulerProduct;
use super::EulerError;
use crate::primes::{map_segments, PrimeSelector};

pub const MAX_EXPANSION: u64 = 100_000_000;
const POSITIVITY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LogExpansion {
    pub cutoff: u64,
    /// `(n, coefficient of n^-s)`, ascending in `n`, prime powers only.
    pub coefficients: Vec<(u64, Complex64)>,
    /// The product has no data beyond this prime, below the cutoff.
    pub support_limited_at: Option<u64>,
}

/// Residue-degree exponent `f` with `q = p^f`.
pub(crate) fn norm_exponent(p: u64, q: f64) -> u32 {
    ((q.ln() / (p as f64).ln()).round() as u32).max(1)
}

/// Coefficients `power_sum(m)/m` at `q^m <= M` over selected primes.
pub fn log_expansion(
    ep: &EulerProduct,
    sel: &PrimeSelector,
    m_max: u64,
) -> Result<LogExpansion, EulerError> {
    if m_max > MAX_EXPANSION {
        return Err(EulerError::LimitExceeded {
            value: m_max,
            limit: MAX_EXPANSION,
        });
    }
    let x = ep.clamp(m_max);
    let segments = map_segments(x, |ps| {
        let mut out = Vec::new();
        for &p in ps {
            if !sel.contains(p) {
                continue;
            }
            let Some(f) = ep.factor(p) else { continue };
            if f.alphas().is_empty() {
                continue;
            }
            let step = (p as u128).pow(norm_exponent(p, f.q()));
            let mut n = step;
            let mut m = 1;
            while n <= m_max as u128 {
                out.push((n as u64, f.log_coefficient(m)));
                n *= step;
                m += 1;
            }
        }
        out
    })?;
    let mut coefficients: Vec<(u64, Complex64)> = segments.concat();
    coefficients.sort_by_key(|c| c.0);
    Ok(LogExpansion {
        cutoff: m_max,
        coefficients,
        support_limited_at: (x < m_max).then_some(x),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PositivityReport {
    pub cutoff: u64,
    pub positive: bool,
    pub terms: usize,
    /// Smallest `n` whose coefficient has real part below `-1e-9` or
    /// imaginary part above `1e-9` in size.
    pub first_violation: Option<u64>,
    pub first_violation_value: Option<Complex64>,
    pub min_real_part: f64,
    pub support_limited_at: Option<u64>,
}

fn check_positive(exp: &LogExpansion) -> PositivityReport {
    let bad = exp
        .coefficients
        .iter()
        .find(|(_, c)| c.re < -POSITIVITY_TOL || c.im.abs() > POSITIVITY_TOL);
    PositivityReport {
        cutoff: exp.cutoff,
        positive: bad.is_none(),
        terms: exp.coefficients.len(),
        first_violation: bad.map(|b| b.0),
        first_violation_value: bad.map(|b| b.1),
        min_real_part: exp
            .coefficients
            .iter()
            .map(|c| c.1.re)
            .fold(f64::INFINITY, f64::min),
        support_limited_at: exp.support_limited_at,
    }
}

pub fn positive_type_check(
    ep: &EulerProduct,
    sel: &PrimeSelector,
    m_max: u64,
) -> Result<PositivityReport, EulerError> {
    Ok(check_positive(&log_expansion(ep, sel, m_max)?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LandauPoint {
    pub sigma: f64,
    /// `sum_n c_n n^-sigma`.
    pub log_value: f64,
    pub value: f64,
    pub at_least_one: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LandauReport {
    pub cutoff: u64,
    pub points: Vec<LandauPoint>,
    pub positivity: PositivityReport,
}

/// Evaluates the truncated `L(sigma) = exp(sum c_n n^-sigma)` for a series
/// of positive type; every value is then at least 1.
pub fn landau_region_check(
    ep: &EulerProduct,
    sel: &PrimeSelector,
    sigmas: &[f64],
    m_max: u64,
) -> Result<LandauReport, EulerError> {
    let exp = log_expansion(ep, sel, m_max)?;
    let positivity = check_positive(&exp);
    if !positivity.positive {
        return Err(EulerError::NotPositiveType {
            index: positivity.first_violation.unwrap_or(0),
        });
    }
    let points = sigmas
        .iter()
        .map(|&sigma| {
            let log_value: f64 = exp
                .coefficients
                .iter()
                .map(|(n, c)| c.re * (*n as f64).powf(-sigma))
                .sum();
            let value = log_value.exp();
            LandauPoint {
                sigma,
                log_value,
                value,
                at_least_one: value >= 1.0,
            }
        })
        .collect();
    Ok(LandauReport {
        cutoff: m_max,
        points,
        positivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::local::LocalFactor;
    use crate::primes::FieldSpec;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    #[test]
    fn zeta_coefficients() {
        let e = log_expansion(&EulerProduct::zeta(), &PrimeSelector::all(), 30).unwrap();
        let want: Vec<(u64, f64)> = vec![
            (2, 1.0), (3, 1.0), (4, 0.5), (5, 1.0), (7, 1.0), (8, 1.0 / 3.0), (9, 0.5),
            (11, 1.0), (13, 1.0), (16, 0.25), (17, 1.0), (19, 1.0), (23, 1.0), (25, 0.5),
            (27, 1.0 / 3.0), (29, 1.0),
        ];
        let got: Vec<(u64, f64)> = e.coefficients.iter().map(|(n, c)| (*n, c.re)).collect();
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            assert_eq!(g.0, w.0);
            assert!((g.1 - w.1).abs() < 1e-15);
        }
    }

    #[test]
    fn empty_selector() {
        let e = log_expansion(&EulerProduct::zeta(), &PrimeSelector::none(), 1000).unwrap();
        assert!(e.coefficients.is_empty());
    }

    #[test]
    fn dedekind_positivity() {
        let fs = Arc::new(FieldSpec::new(4, &[], "Q(i)").unwrap());
        let r = positive_type_check(&EulerProduct::dedekind(fs), &PrimeSelector::all(), 100_000).unwrap();
        assert!(r.positive);
    }

    #[test]
    fn negative_parameter_fails() {
        let mut t = BTreeMap::new();
        t.insert(3, LocalFactor::new(3.0, vec![Complex64::new(-1.0, 0.0)], 1).unwrap());
        let ep = EulerProduct::from_table("neg", 1, t, 3);
        let r = positive_type_check(&ep, &PrimeSelector::all(), 100).unwrap();
        assert_eq!(r.first_violation, Some(3));
        assert!(matches!(
            landau_region_check(&ep, &PrimeSelector::all(), &[2.0], 100),
            Err(EulerError::NotPositiveType { index: 3 })
        ));
    }

    #[test]
    fn landau_for_zeta() {
        let r = landau_region_check(&EulerProduct::zeta(), &PrimeSelector::all(), &[2.0], 100_000).unwrap();
        let v = r.points[0].value;
        assert!(v >= 1.0 && v < std::f64::consts::PI.powi(2) / 6.0 + 1e-9);
        assert!(v > 1.64);
        assert!(LocalFactor::trivial(2.0, 1).alphas().is_empty());
    }
}
