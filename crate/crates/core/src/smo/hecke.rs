//! Coefficient data for degree-n representations: Hecke eigenvalue files and
//! seeded synthetic Satake parameters.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::SmoError;
use crate::euler::{EulerProduct, GrcProfile, LocalFactor};
use crate::primes::sieve::is_prime;

const RAMANUJAN_TOL: f64 = 1e-9;

const TAU_10000: &str = include_str!("../../data/hecke/tau_10000.csv");

/// Ramanujan's tau at primes up to 10^4, as written by `data gen-tau`.
pub fn bundled_tau_csv() -> &'static str {
    TAU_10000
}

/// The bundled tau table as weight-12 Hecke data labelled `tau`.
pub fn bundled_tau() -> RepresentationData {
    parse_hecke(TAU_10000, 12, "tau", "bundled:tau_10000.csv").expect("bundled data parses")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DataSource {
    HeckeFile {
        path: String,
        weight: u32,
        level_one: bool,
    },
    SyntheticTempered {
        seed: u64,
    },
    SyntheticWithProfile {
        seed: u64,
        profile: String,
        delta: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Normalization {
    /// `a_p` is divided by `p^exponent`.
    pub exponent: f64,
    /// Primes with `|a_p| > 2 p^exponent`.
    pub ramanujan_violations: Vec<u64>,
    /// Largest relative error of `a_p` rebuilt from its Satake pair.
    pub max_roundtrip_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationData {
    pub label: String,
    pub degree: usize,
    pub source: DataSource,
    pub ramified: Vec<u64>,
    pub normalization: Option<Normalization>,
    pub warnings: Vec<String>,
    /// Number of primes with data, `None` when unbounded.
    pub support: Option<usize>,
    #[serde(skip)]
    pub product: EulerProduct,
}

impl RepresentationData {
    pub fn factor(&self, p: u64) -> Option<LocalFactor> {
        self.product.factor(p)
    }

    /// Largest prime with data, `None` when unbounded.
    pub fn support_limit(&self) -> Option<u64> {
        self.product.support_limit()
    }
}

/// Satake pair `{alpha, 1/alpha}` with `alpha + 1/alpha = lambda`.
pub fn satake_pair(lambda: f64) -> (Complex64, Complex64) {
    let l = Complex64::new(lambda, 0.0);
    let alpha = (l + (l * l - 4.0).sqrt()) / 2.0;
    (alpha, alpha.inv())
}

/// Rows `(line, p, a_p)` of a `p,a_p` file, header optional.
pub fn parse_hecke_rows(text: &str) -> Result<Vec<(usize, u64, f64)>, SmoError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, u64, f64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| SmoError::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            msg: e.to_string(),
        })?;
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if i == 0 && rec.get(0).is_some_and(|f| f.eq_ignore_ascii_case("p")) {
            continue;
        }
        if rec.len() != 2 {
            return Err(SmoError::Parse {
                line,
                msg: format!("expected 2 fields, found {}", rec.len()),
            });
        }
        let p: u64 = rec[0].parse().map_err(|_| SmoError::Parse {
            line,
            msg: format!("bad prime {:?}", &rec[0]),
        })?;
        let a: f64 = rec[1]
            .parse()
            .ok()
            .filter(|a: &f64| a.is_finite())
            .ok_or_else(|| SmoError::Parse {
                line,
                msg: format!("bad coefficient {:?}", &rec[1]),
            })?;
        if !is_prime(p) {
            return Err(SmoError::NonPrimeRow { line, p });
        }
        if !seen.insert(p) {
            return Err(SmoError::DuplicatePrime { line, p });
        }
        if rows.last().is_some_and(|r| r.1 > p) {
            return Err(SmoError::Parse {
                line,
                msg: format!("{p} is out of ascending order"),
            });
        }
        rows.push((line, p, a));
    }
    Ok(rows)
}

/// Builds degree-2 data from `p,a_p` text of a weight-`k` eigenform.
pub fn parse_hecke(text: &str, weight: u32, label: &str, path: &str) -> Result<RepresentationData, SmoError> {
    if weight == 0 {
        return Err(SmoError::InvalidArgument("weight must be positive".into()));
    }
    let rows = parse_hecke_rows(text)?;
    let exponent = (weight as f64 - 1.0) / 2.0;
    let mut table = BTreeMap::new();
    let mut violations = Vec::new();
    let mut max_err: f64 = 0.0;
    for &(line, p, a) in &rows {
        let scale = (p as f64).powf(exponent);
        let lambda = a / scale;
        if lambda.abs() > 2.0 + RAMANUJAN_TOL {
            violations.push(p);
        }
        let (alpha, beta) = satake_pair(lambda);
        let rebuilt = (alpha + beta).re * scale;
        max_err = max_err.max((rebuilt - a).abs() / a.abs().max(1.0));
        let f = LocalFactor::new(p as f64, vec![alpha, beta], 2)
            .map_err(|e| SmoError::Parse { line, msg: e.to_string() })?;
        table.insert(p, f);
    }
    let warnings = violations
        .iter()
        .map(|p| format!("|a_p| exceeds 2 p^{exponent} at p = {p}"))
        .collect();
    let limit = rows.last().map_or(1, |r| r.1);
    Ok(RepresentationData {
        label: label.to_string(),
        degree: 2,
        source: DataSource::HeckeFile {
            path: path.to_string(),
            weight,
            level_one: true,
        },
        ramified: Vec::new(),
        normalization: Some(Normalization {
            exponent,
            ramanujan_violations: violations,
            max_roundtrip_error: max_err,
        }),
        warnings,
        support: Some(rows.len()),
        product: EulerProduct::from_table(label, 2, table, limit),
    })
}

pub fn load_hecke(path: &Path, weight: u32) -> Result<RepresentationData, SmoError> {
    let text = std::fs::read_to_string(path).map_err(|e| SmoError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    let label = path
        .file_stem()
        .map_or_else(|| "hecke".to_string(), |s| s.to_string_lossy().into_owned());
    parse_hecke(&text, weight, &label, &path.display().to_string())
}

fn rng_at(seed: u64, p: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(p);
    rng
}

/// Parameters as conjugate pairs `e^{+-i theta}` with angles drawn per
/// prime from the seed, plus `1` when `degree` is odd.
pub fn synthetic_tempered(seed: u64, degree: usize) -> Result<RepresentationData, SmoError> {
    synthetic(seed, degree, None)
}

/// Pairs `{p^t e^{i theta}, p^-t e^{-i theta}}` with `t` uniform in
/// `[0, delta)` for the profile exponent `delta`.
pub fn synthetic_with_profile(
    seed: u64,
    degree: usize,
    profile: GrcProfile,
) -> Result<RepresentationData, SmoError> {
    synthetic(seed, degree, Some(profile))
}

fn synthetic(seed: u64, degree: usize, profile: Option<GrcProfile>) -> Result<RepresentationData, SmoError> {
    if degree == 0 || degree > 64 {
        return Err(SmoError::InvalidArgument(format!("degree {degree} outside 1..=64")));
    }
    let delta = profile.map_or(0.0, |g| g.exponent_f64());
    let f = move |p: u64| {
        let mut rng = rng_at(seed, p);
        let mut alphas = Vec::with_capacity(degree);
        for _ in 0..degree / 2 {
            let theta = rng.random_range(0.0..PI);
            let t = if delta > 0.0 { rng.random_range(0.0..delta) } else { 0.0 };
            let r = (p as f64).powf(t);
            alphas.push(Complex64::from_polar(r, theta));
            alphas.push(Complex64::from_polar(1.0 / r, -theta));
        }
        if degree % 2 == 1 {
            alphas.push(Complex64::new(1.0, 0.0));
        }
        LocalFactor::new(p as f64, alphas, degree).ok()
    };
    let (label, source) = match profile {
        None => (format!("tempered({seed})"), DataSource::SyntheticTempered { seed }),
        Some(g) => (
            format!("profile({g},{seed})"),
            DataSource::SyntheticWithProfile {
                seed,
                profile: g.to_string(),
                delta,
            },
        ),
    };
    Ok(RepresentationData {
        label: label.clone(),
        degree,
        source,
        ramified: Vec::new(),
        normalization: None,
        warnings: Vec::new(),
        support: None,
        product: EulerProduct::from_fn(label, degree, None, Arc::new(f)),
    })
}
