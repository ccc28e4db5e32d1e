//! Bounds towards Ramanujan, abscissae of absolute convergence over primes
//! of fixed residue degree, and a numerical convergence probe.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::Serialize;

use super::EulerError;
use crate::numeric::rational_to_f64;
use crate::primes::sieve::MAX_X;
use crate::primes::{map_segments, PrimeSelector};

/// Known exponents `delta` with `|alpha| <= q^delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrcProfile {
    /// Jacquet-Shalika, 1/2.
    Js,
    /// Gelbart-Jacquet, 1/4.
    Gj,
    /// Kim-Shahidi, 1/9.
    KSh,
    /// Kim-Sarnak with Blomer-Brumley, 7/64.
    KSaBb,
    /// Luo-Rudnick-Sarnak in degree n, 1/2 - 1/(n^2+1).
    Lrs(u32),
}

impl GrcProfile {
    pub fn exponent(&self) -> Rational64 {
        match *self {
            GrcProfile::Js => Rational64::new(1, 2),
            GrcProfile::Gj => Rational64::new(1, 4),
            GrcProfile::KSh => Rational64::new(1, 9),
            GrcProfile::KSaBb => Rational64::new(7, 64),
            GrcProfile::Lrs(n) => {
                let n = n as i64;
                Rational64::new(1, 2) - Rational64::new(1, n * n + 1)
            }
        }
    }

    pub fn exponent_f64(&self) -> f64 {
        rational_to_f64(&self.exponent())
    }
}

impl fmt::Display for GrcProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrcProfile::Js => f.write_str("JS"),
            GrcProfile::Gj => f.write_str("GJ"),
            GrcProfile::KSh => f.write_str("KSh"),
            GrcProfile::KSaBb => f.write_str("KSa-BB"),
            GrcProfile::Lrs(n) => write!(f, "LRS({n})"),
        }
    }
}

impl FromStr for GrcProfile {
    type Err = EulerError;

    /// Accepts `JS`, `GJ`, `KSh`, `KSa-BB` and `LRS(n)` (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "js" => GrcProfile::Js,
            "gj" => GrcProfile::Gj,
            "ksh" => GrcProfile::KSh,
            "ksa-bb" | "ksabb" | "ksa_bb" => GrcProfile::KSaBb,
            _ => {
                let n = t
                    .strip_prefix("lrs(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|n| n.trim().parse::<u32>().ok())
                    .filter(|&n| (1..=1000).contains(&n))
                    .ok_or_else(|| EulerError::UnknownProfile(s.to_string()))?;
                GrcProfile::Lrs(n)
            }
        })
    }
}

/// Looks up a profile by name; `n` fills in the degree for `LRS`.
pub fn grc_profile(name: &str, n: u32) -> Result<GrcProfile, EulerError> {
    if name.trim().eq_ignore_ascii_case("lrs") {
        return Ok(GrcProfile::Lrs(n));
    }
    name.parse()
}

/// `delta + 1/j`.
pub fn key_observation_abscissa(delta: f64, j: u32) -> f64 {
    delta + 1.0 / j as f64
}

pub fn key_observation_abscissa_exact(delta: Rational64, j: u32) -> Rational64 {
    delta + Rational64::new(1, j as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    /// Last increment below `1e-6`.
    Stabilized,
    /// Increments shrink faster than those of the exponent-1 sum.
    Converging,
    /// Increments shrink no faster than those of the exponent-1 sum.
    Growing,
    /// Too few cutoffs to compare increments.
    Inconclusive,
}

pub const STABILIZED_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeRow {
    pub cutoff: f64,
    pub partial_sum: f64,
    pub increment: Option<f64>,
    /// `sum mult * p^-1` over the same items.
    pub reference_sum: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeSeries {
    pub sigma: f64,
    pub rows: Vec<ProbeRow>,
    pub growth: Growth,
    /// Last increment over the one before.
    pub increment_ratio: Option<f64>,
    pub reference_ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub delta: f64,
    /// Smallest residue degree among selected classes.
    pub degree: Option<u32>,
    /// `delta + 1/j` for that degree.
    pub analytic_abscissa: Option<f64>,
    pub series: Vec<ProbeSeries>,
}

/// Partial sums of `sum_{q <= c} mult * sum_m q^{-(sigma-delta) m}/m` over
/// the selected primes, with every `|alpha| = q^delta`.
pub fn convergence_probe(
    sel: &PrimeSelector,
    delta: f64,
    sigmas: &[f64],
    q_cutoffs: &[f64],
) -> Result<ProbeReport, EulerError> {
    if q_cutoffs.is_empty() || q_cutoffs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EulerError::InvalidArgument("cutoffs must be strictly ascending".into()));
    }
    if let Some(s) = sigmas.iter().find(|&&s| !(s > delta)) {
        return Err(EulerError::InvalidArgument(format!("sigma {s} must exceed delta {delta}")));
    }
    // Norms are at least p^f for the smallest selected residue degree f.
    let f_min = sel
        .residue_degrees()
        .and_then(|d| d.first().copied())
        .unwrap_or(1)
        .max(1);
    let top = q_cutoffs.last().expect("nonempty");
    let max_p = (top.powf(1.0 / f_min as f64) * (1.0 + 1e-12)).floor();
    if max_p > MAX_X as f64 {
        return Err(EulerError::LimitExceeded {
            value: max_p.min(u64::MAX as f64) as u64,
            limit: MAX_X,
        });
    }
    let max_p = max_p as u64;
    let ns = sigmas.len();
    let nc = q_cutoffs.len();
    let segments = map_segments(max_p, |ps| {
        // Per sigma and cutoff, then the reference sums per cutoff.
        let mut sums = vec![0.0; ns * nc + nc];
        for &p in ps {
            let Some(it) = sel.item(p) else { continue };
            let first = q_cutoffs.partition_point(|&c| c < it.q);
            if first == nc {
                continue;
            }
            let mult = it.multiplicity as f64;
            for (i, &sigma) in sigmas.iter().enumerate() {
                let term = -mult * (-it.q.powf(-(sigma - delta))).ln_1p();
                for c in first..nc {
                    sums[i * nc + c] += term;
                }
            }
            let r = mult / p as f64;
            for c in first..nc {
                sums[ns * nc + c] += r;
            }
        }
        sums
    })?;
    let mut total = vec![0.0; ns * nc + nc];
    for seg in segments {
        for (t, v) in total.iter_mut().zip(seg) {
            *t += v;
        }
    }
    let reference = &total[ns * nc..];
    let series = sigmas
        .iter()
        .enumerate()
        .map(|(i, &sigma)| {
            let sums = &total[i * nc..(i + 1) * nc];
            let rows: Vec<ProbeRow> = (0..nc)
                .map(|c| ProbeRow {
                    cutoff: q_cutoffs[c],
                    partial_sum: sums[c],
                    increment: (c > 0).then(|| sums[c] - sums[c - 1]),
                    reference_sum: reference[c],
                })
                .collect();
            classify(sigma, rows, reference)
        })
        .collect();
    let degree = sel.residue_degrees().and_then(|d| d.first().copied());
    Ok(ProbeReport {
        delta,
        degree,
        analytic_abscissa: degree.map(|j| key_observation_abscissa(delta, j)),
        series,
    })
}

fn classify(sigma: f64, rows: Vec<ProbeRow>, reference: &[f64]) -> ProbeSeries {
    let n = rows.len();
    let last_inc = rows.last().and_then(|r| r.increment);
    let ratio = |v: &[f64]| -> Option<f64> {
        if v.len() < 3 {
            return None;
        }
        let a = v[v.len() - 2] - v[v.len() - 3];
        let b = v[v.len() - 1] - v[v.len() - 2];
        (a > 0.0).then(|| b / a)
    };
    let sums: Vec<f64> = rows.iter().map(|r| r.partial_sum).collect();
    let increment_ratio = ratio(&sums);
    let reference_ratio = ratio(reference);
    let growth = match last_inc {
        Some(inc) if inc < STABILIZED_TOL => Growth::Stabilized,
        _ if n < 3 => Growth::Inconclusive,
        _ => match (increment_ratio, reference_ratio) {
            (Some(r), Some(rr)) if r < rr => Growth::Converging,
            (Some(_), Some(_)) => Growth::Growing,
            _ => Growth::Inconclusive,
        },
    };
    ProbeSeries {
        sigma,
        rows,
        growth,
        increment_ratio,
        reference_ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::selector_from_str;

    #[test]
    fn profiles() {
        assert_eq!(grc_profile("KSa-BB", 2).unwrap().exponent(), Rational64::new(7, 64));
        assert_eq!(grc_profile("LRS", 2).unwrap().exponent(), Rational64::new(3, 10));
        assert_eq!("LRS(2)".parse::<GrcProfile>().unwrap(), GrcProfile::Lrs(2));
        assert_eq!(grc_profile("JS", 2).unwrap().exponent(), Rational64::new(1, 2));
        assert!(grc_profile("XYZ", 2).is_err());
        let order: Vec<Rational64> = ["KSa-BB", "KSh", "GJ", "LRS(2)", "JS"]
            .iter()
            .map(|n| n.parse::<GrcProfile>().unwrap().exponent())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        for p in ["JS", "GJ", "KSh", "KSa-BB", "LRS(3)"] {
            assert_eq!(p.parse::<GrcProfile>().unwrap().to_string(), p);
        }
    }

    #[test]
    fn abscissae() {
        assert_eq!(key_observation_abscissa(0.0, 2), 0.5);
        assert_eq!(key_observation_abscissa(0.25, 2), 0.75);
        assert_eq!(
            key_observation_abscissa_exact(Rational64::new(3, 5), 3),
            Rational64::new(14, 15)
        );
    }

    #[test]
    fn probe_of_zeta_at_one_and_a_half() {
        let r = convergence_probe(&PrimeSelector::all(), 0.0, &[1.5], &[1e3, 1e4, 1e5]).unwrap();
        assert_eq!(r.analytic_abscissa, Some(1.0));
        let s = &r.series[0];
        assert_eq!(s.growth, Growth::Converging);
        assert!(s.rows.windows(2).all(|w| w[1].partial_sum >= w[0].partial_sum));
        let r = convergence_probe(&PrimeSelector::all(), 0.0, &[1.5], &[1e4, 1e5, 1e6]).unwrap();
        assert!(r.series[0].rows[2].increment.unwrap() < 1e-3);
    }

    #[test]
    fn probe_detects_growth() {
        let sel = selector_from_str("degree:N=4;H=:2").unwrap();
        let r = convergence_probe(&sel, 0.25, &[0.70, 0.80], &[1e4, 1e5, 1e6]).unwrap();
        assert_eq!(r.degree, Some(2));
        assert_eq!(r.series[0].growth, Growth::Growing);
        assert_eq!(r.series[1].growth, Growth::Converging);
        assert!(convergence_probe(&sel, 0.25, &[0.2], &[1e4]).is_err());
        let short = convergence_probe(&sel, 0.25, &[0.9], &[1e4, 1e5]).unwrap();
        assert_eq!(short.series[0].growth, Growth::Inconclusive);
    }
}
