//! Euler products as maps from rational primes to local factors.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::local::{rankin_selberg_local, LocalFactor};
use super::EulerError;
use crate::primes::sieve::is_prime;
use crate::primes::FieldSpec;

pub type FactorFn = dyn Fn(u64) -> Option<LocalFactor> + Send + Sync;

#[derive(Clone)]
pub enum FactorSource {
    /// `alpha = 1` at `q = p`.
    Zeta,
    /// Dedekind zeta of an abelian field: at unramified `p` of residue degree
    /// `f` the `f`-th roots of unity, each `d/f` times, at `q = p`.
    Dedekind(Arc<FieldSpec>),
    /// Explicit factors keyed by `p`.
    Table(Arc<BTreeMap<u64, LocalFactor>>),
    RankinSelberg {
        left: Arc<EulerProduct>,
        right: Arc<EulerProduct>,
        conjugate: bool,
    },
    Function(Arc<FactorFn>),
}

impl fmt::Debug for FactorSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorSource::Zeta => f.write_str("Zeta"),
            FactorSource::Dedekind(fs) => write!(f, "Dedekind({fs})"),
            FactorSource::Table(t) => write!(f, "Table({} primes)", t.len()),
            FactorSource::RankinSelberg { left, right, conjugate } => {
                write!(f, "RankinSelberg({}, {}, {conjugate})", left.label, right.label)
            }
            FactorSource::Function(_) => f.write_str("Function"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EulerProduct {
    label: String,
    degree: usize,
    source: FactorSource,
    ramified: Vec<u64>,
    /// Largest prime with data, `None` for unbounded sources.
    support_limit: Option<u64>,
}

impl EulerProduct {
    pub fn zeta() -> Self {
        EulerProduct {
            label: "zeta".into(),
            degree: 1,
            source: FactorSource::Zeta,
            ramified: Vec::new(),
            support_limit: None,
        }
    }

    pub fn dedekind(fs: Arc<FieldSpec>) -> Self {
        let ramified = crate::primes::sieve::prime_divisors(fs.modulus());
        EulerProduct {
            label: format!("dedekind({fs})"),
            degree: fs.degree() as usize,
            source: FactorSource::Dedekind(fs),
            ramified,
            support_limit: None,
        }
    }

    pub fn from_table(
        label: impl Into<String>,
        degree: usize,
        factors: BTreeMap<u64, LocalFactor>,
        support_limit: u64,
    ) -> Self {
        EulerProduct {
            label: label.into(),
            degree,
            source: FactorSource::Table(Arc::new(factors)),
            ramified: Vec::new(),
            support_limit: Some(support_limit),
        }
    }

    pub fn from_fn(
        label: impl Into<String>,
        degree: usize,
        support_limit: Option<u64>,
        f: Arc<FactorFn>,
    ) -> Self {
        EulerProduct {
            label: label.into(),
            degree,
            source: FactorSource::Function(f),
            ramified: Vec::new(),
            support_limit,
        }
    }

    /// `L(s, a x c(b))`, `c` complex conjugation when `conjugate` is set.
    pub fn rankin_selberg(a: &EulerProduct, b: &EulerProduct, conjugate: bool) -> Self {
        let mut ramified: Vec<u64> = a.ramified.iter().chain(&b.ramified).copied().collect();
        ramified.sort_unstable();
        ramified.dedup();
        let support_limit = match (a.support_limit, b.support_limit) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        let bar = if conjugate { "~" } else { "" };
        EulerProduct {
            label: format!("{} x {}{bar}", a.label, b.label),
            degree: a.degree * b.degree,
            source: FactorSource::RankinSelberg {
                left: Arc::new(a.clone()),
                right: Arc::new(b.clone()),
                conjugate,
            },
            ramified,
            support_limit,
        }
    }

    pub fn with_ramified(mut self, primes: &[u64]) -> Self {
        self.ramified.extend_from_slice(primes);
        self.ramified.sort_unstable();
        self.ramified.dedup();
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ramified(&self) -> &[u64] {
        &self.ramified
    }

    pub fn support_limit(&self) -> Option<u64> {
        self.support_limit
    }

    /// Cutoff clamped to the data support.
    pub fn clamp(&self, x: u64) -> u64 {
        self.support_limit.map_or(x, |s| x.min(s))
    }

    pub fn source(&self) -> &FactorSource {
        &self.source
    }

    /// Local factor at the prime `p`, `None` outside the support.
    pub fn factor(&self, p: u64) -> Option<LocalFactor> {
        if self.support_limit.is_some_and(|s| p > s) {
            return None;
        }
        let q = p as f64;
        match &self.source {
            FactorSource::Zeta => LocalFactor::new(q, vec![Complex64::new(1.0, 0.0)], 1).ok(),
            FactorSource::Dedekind(fs) => {
                let d = fs.degree() as usize;
                let Ok(f) = fs.residue_degree(p) else {
                    return Some(LocalFactor::trivial(q, d));
                };
                let f = f as usize;
                let alphas: Vec<Complex64> = (0..f)
                    .flat_map(|k| {
                        std::iter::repeat_n(Complex64::from_polar(1.0, TAU * k as f64 / f as f64), d / f)
                    })
                    .collect();
                LocalFactor::new(q, alphas, d).ok()
            }
            FactorSource::Table(t) => t.get(&p).cloned(),
            FactorSource::RankinSelberg {
                left,
                right,
                conjugate,
            } => {
                let (a, b) = (left.factor(p)?, right.factor(p)?);
                rankin_selberg_local(&a, &b, *conjugate).ok()
            }
            FactorSource::Function(f) => f(p),
        }
    }

    /// Parses Satake data: rows `p, q, alpha_re_1, alpha_im_1, ...` with an
    /// optional header row starting with `p` and `#` comments.
    pub fn from_satake_csv(
        text: &str,
        degree: Option<usize>,
        label: impl Into<String>,
    ) -> Result<Self, EulerError> {
        let rows = parse_satake_rows(text)?;
        let k_max = rows.iter().map(|r| r.2.len()).max().unwrap_or(0);
        let degree = degree.unwrap_or(k_max.max(1));
        let mut table = BTreeMap::new();
        for (line, p, alphas, q) in rows {
            let f = LocalFactor::new(q, alphas, degree)
                .map_err(|e| EulerError::Parse { line, msg: e.to_string() })?;
            table.insert(p, f);
        }
        let limit = table.keys().next_back().copied().unwrap_or(1);
        Ok(Self::from_table(label, degree, table, limit))
    }
}

pub type SatakeRow = (usize, u64, Vec<Complex64>, f64);

/// Most parameters accepted per row.
pub const MAX_SATAKE_PARAMS: usize = 64;

/// Rows as `(line, p, parameters, q)`.
pub fn parse_satake_rows(text: &str) -> Result<Vec<SatakeRow>, EulerError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out: Vec<SatakeRow> = Vec::new();
    let mut first = true;
    for rec in reader.records() {
        let rec = rec.map_err(|e| EulerError::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            msg: e.to_string(),
        })?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let err = |msg: String| EulerError::Parse { line, msg };
        if first && rec.get(0).is_some_and(|f| f.eq_ignore_ascii_case("p")) {
            first = false;
            continue;
        }
        first = false;
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rec.len() < 2 || rec.len() % 2 != 0 {
            return Err(err(format!("expected p, q and pairs of parameters, got {} fields", rec.len())));
        }
        let p: u64 = rec[0].parse().map_err(|_| err(format!("bad prime {:?}", &rec[0])))?;
        if !is_prime(p) {
            return Err(EulerError::NonPrimeRow { line, p });
        }
        if let Some(&(_, last, _, _)) = out.last() {
            if p == last {
                return Err(EulerError::DuplicatePrime { line, p });
            }
            if p < last {
                return Err(err(format!("prime {p} after {last}: rows must ascend")));
            }
        }
        let q: f64 = rec[1].parse().map_err(|_| err(format!("bad norm {:?}", &rec[1])))?;
        let f = (q.ln() / (p as f64).ln()).round();
        if !(f >= 1.0) || ((p as f64).powf(f) - q).abs() > 1e-9 * q {
            return Err(err(format!("norm {q} is not a power of {p}")));
        }
        let nums: Vec<f64> = (2..rec.len())
            .map(|i| rec[i].parse::<f64>().map_err(|_| err(format!("bad number {:?}", &rec[i]))))
            .collect::<Result<_, _>>()?;
        if nums.len() / 2 > MAX_SATAKE_PARAMS {
            return Err(err(format!("more than {MAX_SATAKE_PARAMS} parameters")));
        }
        let alphas = nums.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
        out.push((line, p, alphas, q));
    }
    Ok(out)
}
