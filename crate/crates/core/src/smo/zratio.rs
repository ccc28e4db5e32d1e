//! `Z_S(s) = L(A x A~) L(B x B~) / (L(A x B~) L(B x A~))` over `p in S`,
//! truncated at a cutoff and computed two independent ways.

use num_complex::Complex64;
use serde::Serialize;

use super::hecke::RepresentationData;
use super::SmoError;
use crate::euler::{rankin_selberg_local, LocalFactor};
use crate::primes::{map_segments, PrimeSelector};

pub const AGREEMENT_TOL: f64 = 1e-6;
const SERIES_TOL: f64 = 1e-18;
const MAX_TERMS: u32 = 400;
const POSITIVITY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZPoint {
    pub s: f64,
    /// Product of local ratios.
    pub direct: Complex64,
    /// `exp sum_p sum_m |a_m - b_m|^2 / m q^-ms` with `a_m`, `b_m` power sums.
    pub via_log: f64,
    pub abs_diff: f64,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZRatioReport {
    pub left: String,
    pub right: String,
    pub cutoff: u64,
    pub effective_cutoff: u64,
    pub primes_used: u64,
    pub points: Vec<ZPoint>,
    pub all_agree: bool,
    /// Log coefficients of `L(A x A~) L(B x B~) L(A x B~) L(B x A~)` at
    /// `q^m <= cutoff`.
    pub d_coefficients_checked: u64,
    pub d_min_coefficient: f64,
    pub d_positive: bool,
}

struct Local {
    q: f64,
    a: LocalFactor,
    b: LocalFactor,
}

impl Local {
    fn rs(&self) -> Result<[LocalFactor; 4], SmoError> {
        let (a, b) = (&self.a, &self.b);
        Ok([
            rankin_selberg_local(a, a, true)?,
            rankin_selberg_local(b, b, true)?,
            rankin_selberg_local(a, b, true)?,
            rankin_selberg_local(b, a, true)?,
        ])
    }

    fn direct(&self, rs: &[LocalFactor; 4], s: f64) -> Result<Complex64, SmoError> {
        let s = Complex64::new(s, 0.0);
        Ok(rs[0].eval(s)? * rs[1].eval(s)? / (rs[2].eval(s)? * rs[3].eval(s)?))
    }

    fn log_route(&self, s: f64) -> f64 {
        let r = self.a.max_abs().max(self.b.max_abs());
        let scale = (self.a.alphas().len() + self.b.alphas().len()) as f64;
        let x = r * r * self.q.powf(-s);
        let mut total = 0.0;
        for m in 1..=MAX_TERMS {
            let d = self.a.power_sum(m) - self.b.power_sum(m);
            total += d.norm_sqr() / m as f64 * self.q.powf(-s * m as f64);
            if x < 1.0 && scale * scale * x.powi(m as i32 + 1) < SERIES_TOL {
                break;
            }
        }
        total
    }
}

/// Sampled `Z_S` for real `s > 1`, plus the positivity of `D_S`.
pub fn z_ratio(
    a: &RepresentationData,
    b: &RepresentationData,
    sel: &PrimeSelector,
    s_grid: &[f64],
    cutoff: u64,
) -> Result<ZRatioReport, SmoError> {
    if a.degree != b.degree {
        return Err(SmoError::DegreeMismatch(a.degree, b.degree));
    }
    if let Some(s) = s_grid.iter().find(|&&s| !(s > 1.0) || !s.is_finite()) {
        return Err(SmoError::InvalidArgument(format!("s = {s} must exceed 1")));
    }
    let limit = b.product.clamp(a.product.clamp(cutoff));
    let k = s_grid.len();
    let segments = map_segments(limit, |ps| -> Result<_, SmoError> {
        let mut direct = vec![Complex64::new(1.0, 0.0); k];
        let mut logs = vec![0.0; k];
        let mut used = 0u64;
        let mut checked = 0u64;
        let mut d_min = f64::INFINITY;
        let mut d_bad = false;
        for &p in ps {
            if !sel.contains(p) || a.ramified.contains(&p) || b.ramified.contains(&p) {
                continue;
            }
            let (Some(fa), Some(fb)) = (a.factor(p), b.factor(p)) else { continue };
            let local = Local { q: fa.q(), a: fa, b: fb };
            let rs = local.rs()?;
            used += 1;
            for (i, &s) in s_grid.iter().enumerate() {
                direct[i] *= local.direct(&rs, s)?;
                logs[i] += local.log_route(s);
            }
            let mut qm = local.q;
            let mut m = 1;
            while qm <= limit as f64 {
                let c: Complex64 = rs.iter().map(|f| f.power_sum(m)).sum::<Complex64>() / m as f64;
                checked += 1;
                d_min = d_min.min(c.re);
                if c.re < -POSITIVITY_TOL || c.im.abs() > POSITIVITY_TOL {
                    d_bad = true;
                }
                qm *= local.q;
                m += 1;
            }
        }
        Ok((direct, logs, used, checked, d_min, d_bad))
    })?;
    let mut direct = vec![Complex64::new(1.0, 0.0); k];
    let mut logs = vec![0.0; k];
    let (mut used, mut checked, mut d_min, mut d_bad) = (0, 0, f64::INFINITY, false);
    for seg in segments {
        let (d, l, u, c, m, bad) = seg?;
        for i in 0..k {
            direct[i] *= d[i];
            logs[i] += l[i];
        }
        used += u;
        checked += c;
        d_min = d_min.min(m);
        d_bad |= bad;
    }
    let points: Vec<ZPoint> = s_grid
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let via_log = logs[i].exp();
            let abs_diff = (direct[i] - via_log).norm();
            ZPoint {
                s,
                direct: direct[i],
                via_log,
                abs_diff,
                agree: abs_diff <= AGREEMENT_TOL,
            }
        })
        .collect();
    Ok(ZRatioReport {
        left: a.label.clone(),
        right: b.label.clone(),
        cutoff,
        effective_cutoff: limit,
        primes_used: used,
        all_agree: points.iter().all(|p| p.agree),
        points,
        d_coefficients_checked: checked,
        d_min_coefficient: if checked == 0 { 0.0 } else { d_min },
        d_positive: !d_bad,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smo::hecke::{parse_hecke, synthetic_tempered};
    use crate::smo::tau::{generate_tau, tau_csv};

    fn tau() -> RepresentationData {
        parse_hecke(&tau_csv(&generate_tau(5000).unwrap()), 12, "tau", "mem").unwrap()
    }

    #[test]
    fn same_data_gives_one() {
        let a = tau();
        let r = z_ratio(&a, &a, &PrimeSelector::all(), &[1.25, 1.5, 3.0], 10_000).unwrap();
        for p in &r.points {
            assert_eq!(p.via_log, 1.0);
            assert!((p.direct - 1.0).norm() < 1e-12);
        }
        assert!(r.d_positive);
        assert_eq!(r.effective_cutoff, 4999);
    }

    #[test]
    fn routes_agree_against_synthetic() {
        let a = tau();
        let b = synthetic_tempered(7, 2).unwrap();
        let r = z_ratio(&a, &b, &PrimeSelector::all(), &[1.25, 1.5], 10_000).unwrap();
        assert!(r.all_agree, "{:?}", r.points);
        assert!(r.points[0].via_log > r.points[1].via_log);
        assert!(r.points[1].via_log > 1.0);
        assert!(r.d_positive && r.d_min_coefficient >= -1e-9);
        assert!(r.d_coefficients_checked > r.primes_used);
    }

    #[test]
    fn empty_selector_and_errors() {
        let a = tau();
        let b = synthetic_tempered(7, 2).unwrap();
        let r = z_ratio(&a, &b, &PrimeSelector::none(), &[1.25], 10_000).unwrap();
        assert_eq!(r.points[0].via_log, 1.0);
        assert_eq!(r.primes_used, 0);
        assert!(z_ratio(&a, &b, &PrimeSelector::all(), &[1.0], 100).is_err());
        let c = synthetic_tempered(7, 3).unwrap();
        assert_eq!(
            z_ratio(&a, &c, &PrimeSelector::all(), &[2.0], 100).unwrap_err(),
            SmoError::DegreeMismatch(2, 3)
        );
    }
}
