//! Local factors `prod_i (1 - alpha_i q^-s)^-1` and their Rankin-Selberg
//! convolution.

use num_complex::Complex64;
use serde::Serialize;

use super::EulerError;

const TEMPERED_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalFactor {
    q: f64,
    alphas: Vec<Complex64>,
    degree: usize,
    tempered: bool,
}

impl LocalFactor {
    pub fn new(q: f64, alphas: Vec<Complex64>, degree: usize) -> Result<Self, EulerError> {
        if !(q > 1.0) || !q.is_finite() {
            return Err(EulerError::InvalidFactor(format!("norm {q} must exceed 1")));
        }
        if alphas.len() > degree {
            return Err(EulerError::InvalidFactor(format!(
                "{} parameters exceed degree {degree}",
                alphas.len()
            )));
        }
        if let Some(a) = alphas.iter().find(|a| !(a.norm() > 0.0) || !a.is_finite()) {
            return Err(EulerError::InvalidFactor(format!("parameter {a} is not a nonzero number")));
        }
        let tempered = alphas.iter().all(|a| (a.norm() - 1.0).abs() <= TEMPERED_TOL);
        Ok(LocalFactor {
            q,
            alphas,
            degree,
            tempered,
        })
    }

    /// Factor with no parameters, identically 1.
    pub fn trivial(q: f64, degree: usize) -> Self {
        LocalFactor {
            q,
            alphas: Vec::new(),
            degree,
            tempered: true,
        }
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alphas(&self) -> &[Complex64] {
        &self.alphas
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All parameters on the unit circle (within 1e-9).
    pub fn is_tempered(&self) -> bool {
        self.tempered
    }

    /// Largest `|alpha|`, or 0 without parameters.
    pub fn max_abs(&self) -> f64 {
        self.alphas.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64, EulerError> {
        let qs = Complex64::new(self.q, 0.0).powc(-s);
        let mut v = Complex64::new(1.0, 0.0);
        for (i, a) in self.alphas.iter().enumerate() {
            let d = 1.0 - a * qs;
            if d.norm() < 1e-12 {
                return Err(EulerError::PoleHit(i));
            }
            v /= d;
        }
        Ok(v)
    }

    /// Coefficients of `prod_i (1 - alpha_i T)`, constant term first.
    pub fn reciprocal_polynomial(&self) -> Vec<Complex64> {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for a in &self.alphas {
            let mut next = c.clone();
            next.push(Complex64::new(0.0, 0.0));
            for (k, ck) in c.iter().enumerate() {
                next[k + 1] -= a * ck;
            }
            c = next;
        }
        c
    }

    /// Rightmost pole line `max log|alpha| / log q`.
    pub fn first_pole_line(&self) -> Option<f64> {
        if self.alphas.is_empty() {
            return None;
        }
        Some(self.max_abs().ln() / self.q.ln())
    }

    /// `sum_i alpha_i^m`.
    pub fn power_sum(&self, m: u32) -> Complex64 {
        self.alphas.iter().map(|a| a.powi(m as i32)).sum()
    }

    /// Coefficient of `q^{-ms}` in `log L`: `power_sum(m) / m`.
    pub fn log_coefficient(&self, m: u32) -> Complex64 {
        self.power_sum(m) / m as f64
    }

    /// `log L(s)` for real `s` where `|alpha| q^-s < 1` for every parameter.
    pub fn log_value(&self, s: f64) -> Complex64 {
        let qs = self.q.powf(-s);
        self.alphas.iter().map(|a| -(1.0 - a * qs).ln()).sum()
    }

    /// Every parameter multiplied by `q^t`.
    pub fn shifted(&self, t: f64) -> Self {
        let scale = self.q.powf(t);
        let alphas: Vec<Complex64> = self.alphas.iter().map(|a| a * scale).collect();
        let tempered = alphas.iter().all(|a| (a.norm() - 1.0).abs() <= TEMPERED_TOL);
        LocalFactor {
            q: self.q,
            alphas,
            degree: self.degree,
            tempered,
        }
    }
}

/// Parameters `alpha_i c(beta_j)` where `c` is complex conjugation when
/// `conjugate_second` is set.
pub fn rankin_selberg_local(
    f: &LocalFactor,
    g: &LocalFactor,
    conjugate_second: bool,
) -> Result<LocalFactor, EulerError> {
    if (f.q - g.q).abs() > 1e-9 * f.q.max(g.q) {
        return Err(EulerError::NormMismatch { left: f.q, right: g.q });
    }
    let mut alphas = Vec::with_capacity(f.alphas.len() * g.alphas.len());
    for a in &f.alphas {
        for b in &g.alphas {
            alphas.push(a * if conjugate_second { b.conj() } else { *b });
        }
    }
    Ok(LocalFactor {
        q: f.q,
        alphas,
        degree: f.degree * g.degree,
        tempered: f.tempered && g.tempered,
    })
}

/// First Rankin-Selberg log coefficient of a factor with itself.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RsLeading {
    /// The convention requested.
    pub value: Complex64,
    /// `sum_{i,j} alpha_i conj(alpha_j) = |sum alpha|^2`.
    pub conjugated: f64,
    /// `sum_{i,j} alpha_i alpha_j = (sum alpha)^2`.
    pub unconjugated: Complex64,
}

pub fn rs_leading_coefficient(f: &LocalFactor, conjugated: bool) -> RsLeading {
    let s = f.power_sum(1);
    let conj = s.norm_sqr();
    let unconj = s * s;
    RsLeading {
        value: if conjugated { Complex64::new(conj, 0.0) } else { unconj },
        conjugated: conj,
        unconjugated: unconj,
    }
}
