//! Pole-order proxy: slope of truncated `log L_S(1 + eps)` against
//! `log(1/eps)`.

use num_rational::Rational64;
use serde::Serialize;

use super::compare::{density_thresholds, Threshold};
use super::hecke::RepresentationData;
use super::SmoError;
use crate::euler::expansion::norm_exponent;
use crate::euler::EulerProduct;
use crate::numeric::{exp_integral_e1, fit_line, rational_to_f64, t_quantile_95, LineFit};
use crate::primes::{map_segments, PrimeSelector};

pub const DEFAULT_EPS_GRID: [f64; 4] = [1.0 / 16.0, 1.0 / 12.0, 1.0 / 10.0, 1.0 / 8.0];
/// Smallest `eps` whose cutoff `exp(1/eps)` stays within the sieve limit.
pub const MIN_EPS: f64 = 1.0 / 20.0;
const MAX_COUPLED_CUTOFF: f64 = 1e8;

/// `max(min(1e8, ceil(exp(1.5/eps))), ceil(exp(1/eps)))`.
pub fn pole_cutoff(eps: f64) -> Result<u64, SmoError> {
    if !(eps >= MIN_EPS) || !eps.is_finite() {
        return Err(SmoError::InfeasibleEpsilon { eps });
    }
    let coupled = (1.5 / eps).exp().ceil().min(MAX_COUPLED_CUTOFF);
    Ok(coupled.max((1.0 / eps).exp().ceil()) as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleOrderEstimate {
    pub label: String,
    pub eps: Vec<f64>,
    pub log_inv_eps: Vec<f64>,
    /// Coupled cutoffs before clamping to the data.
    pub wanted_cutoffs: Vec<u64>,
    pub cutoffs: Vec<u64>,
    /// `Re sum_{p in S, p <= x} log L_p(1 + eps)`.
    pub raw_values: Vec<f64>,
    /// Mean first coefficient near `x` times `E1(eps log x)`.
    pub tail_weights: Vec<f64>,
    pub tail_corrections: Vec<f64>,
    pub values: Vec<f64>,
    pub fit: LineFit,
    pub slope: f64,
    pub slope_ci95: (f64, f64),
    pub raw_slope: f64,
    pub data_limited: bool,
}

pub fn pole_order_estimate(
    ep: &EulerProduct,
    sel: &PrimeSelector,
    eps: &[f64],
) -> Result<PoleOrderEstimate, SmoError> {
    if eps.len() < 3 {
        return Err(SmoError::InvalidArgument("at least 3 eps values are needed".into()));
    }
    let mut sorted = eps.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(SmoError::InvalidArgument("eps values must be distinct".into()));
    }
    let wanted = eps.iter().map(|&e| pole_cutoff(e)).collect::<Result<Vec<u64>, _>>()?;
    let cutoffs: Vec<u64> = wanted.iter().map(|&x| ep.clamp(x)).collect();
    let data_limited = cutoffs != wanted;
    let k = eps.len();
    let x_max = cutoffs.iter().copied().max().unwrap_or(0);
    // Per eps: raw sum, tail coefficient sum, prime count in (x/2, x].
    let segments = map_segments(x_max, |ps| {
        let mut acc = vec![0.0; 3 * k];
        for &p in ps {
            let selected = sel.contains(p);
            let factor = if selected { ep.factor(p) } else { None };
            for i in 0..k {
                let x = cutoffs[i];
                if p > x {
                    continue;
                }
                if 2 * p > x {
                    acc[2 * k + i] += 1.0;
                }
                let Some(f) = &factor else { continue };
                acc[i] += f.log_value(1.0 + eps[i]).re;
                if 2 * p > x && norm_exponent(p, f.q()) == 1 {
                    acc[k + i] += f.power_sum(1).re;
                }
            }
        }
        acc
    })?;
    let mut total = vec![0.0; 3 * k];
    for seg in segments {
        for (t, v) in total.iter_mut().zip(seg) {
            *t += v;
        }
    }
    let raw_values = total[..k].to_vec();
    let tail_weights: Vec<f64> = (0..k)
        .map(|i| {
            let n = total[2 * k + i];
            if n > 0.0 { total[k + i] / n } else { 0.0 }
        })
        .collect();
    let tail_corrections: Vec<f64> = (0..k)
        .map(|i| {
            let x = cutoffs[i].max(2) as f64;
            tail_weights[i] * exp_integral_e1(eps[i] * x.ln())
        })
        .collect();
    let values: Vec<f64> = raw_values.iter().zip(&tail_corrections).map(|(r, t)| r + t).collect();
    let log_inv_eps: Vec<f64> = eps.iter().map(|e| (1.0 / e).ln()).collect();
    let fit = fit_line(&log_inv_eps, &values);
    let raw_slope = fit_line(&log_inv_eps, &raw_values).slope;
    let half = t_quantile_95(k - 2) * fit.slope_stderr;
    Ok(PoleOrderEstimate {
        label: ep.label().to_string(),
        eps: eps.to_vec(),
        log_inv_eps,
        wanted_cutoffs: wanted,
        cutoffs,
        raw_values,
        tail_weights,
        tail_corrections,
        values,
        slope: fit.slope,
        slope_ci95: (fit.slope - half, fit.slope + half),
        fit,
        raw_slope,
        data_limited,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TemperedBoundReport {
    pub label: String,
    pub degree: usize,
    pub density: String,
    pub density_approx: f64,
    /// `n^2 * density`.
    pub bound: f64,
    pub slope: f64,
    pub pass: bool,
    /// Selected primes with some `|alpha| != 1`.
    pub non_tempered: Vec<u64>,
    pub estimate: PoleOrderEstimate,
    pub thresholds: Vec<Threshold>,
}

/// Measures the pole order of `L_S(s, A x conj A)` and compares it with
/// `n^2 delta(S)`.
pub fn tempered_bound_check(
    a: &RepresentationData,
    sel: &PrimeSelector,
    eps: &[f64],
) -> Result<TemperedBoundReport, SmoError> {
    let density = sel
        .exact_density()
        .ok_or_else(|| SmoError::InvalidArgument("selector modulus too large for an exact density".into()))?;
    let n = a.degree;
    let x = eps
        .iter()
        .map(|&e| pole_cutoff(e))
        .collect::<Result<Vec<u64>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let scan = map_segments(a.product.clamp(x), |ps| {
        let mut soft = Vec::new();
        for &p in ps {
            if !sel.contains(p) {
                continue;
            }
            let Some(f) = a.factor(p) else { continue };
            if f.max_abs() > f.q().sqrt() * (1.0 + 1e-12) {
                return Err(SmoError::NotTempered { p, abs: f.max_abs() });
            }
            if !f.is_tempered() {
                soft.push(p);
            }
        }
        Ok(soft)
    })?;
    let mut non_tempered = Vec::new();
    for seg in scan {
        non_tempered.extend(seg?);
    }
    let rs = EulerProduct::rankin_selberg(&a.product, &a.product, true);
    let estimate = pole_order_estimate(&rs, sel, eps)?;
    let bound = rational_to_f64(&(density * Rational64::from_integer((n * n) as i64)));
    Ok(TemperedBoundReport {
        label: a.label.clone(),
        degree: n,
        density: density.to_string(),
        density_approx: rational_to_f64(&density),
        bound,
        slope: estimate.slope,
        pass: estimate.slope <= bound + 0.1,
        non_tempered,
        estimate,
        thresholds: density_thresholds(n),
    })
}
