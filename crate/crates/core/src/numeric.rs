//! Small numerical helpers shared across modules.

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;

/// Best rational approximation `p/q` of `x` with `1 <= q <= max_den`
/// (continued fractions with semiconvergents).
pub fn best_rational(x: f64, max_den: u64) -> (i64, i64) {
    let max_den = max_den.max(1) as i128;
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let a = a as i128;
        let q2 = q0 + a * q1;
        if q2 > max_den {
            // Largest admissible semiconvergent, kept if it beats p1/q1.
            let k = (max_den - q0) / q1;
            let (ps, qs) = (p0 + k * p1, q0 + k * q1);
            let target = x.abs();
            if (ps as f64 / qs as f64 - target).abs() < (p1 as f64 / q1 as f64 - target).abs() {
                return ((sign * ps) as i64, qs as i64);
            }
            break;
        }
        let p2 = p0 + a * p1;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a as f64;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return ((sign * x.abs().round() as i128) as i64, 1);
    }
    ((sign * p1) as i64, q1 as i64)
}

/// Replaces `x` by the nearest rational with denominator at most `max_den`
/// when it is within `tol`.
pub fn snap(x: f64, max_den: u64, tol: f64) -> f64 {
    let (p, q) = best_rational(x, max_den);
    let r = p as f64 / q as f64;
    if (x - r).abs() <= tol {
        r
    } else {
        x
    }
}

/// Least-squares line fit `y = intercept + slope * x`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Standard error of the slope (0 when the fit is exact or has 2 points).
    pub slope_stderr: f64,
}

pub fn fit_line(xs: &[f64], ys: &[f64]) -> LineFit {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let slope_stderr = if xs.len() > 2 && sxx > 0.0 {
        let rss: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| {
                let r = y - intercept - slope * x;
                r * r
            })
            .sum();
        (rss / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    LineFit {
        slope,
        intercept,
        slope_stderr,
    }
}

/// Least-squares solution of `design * beta = y` (columns are regressors).
pub fn least_squares(design: &[Vec<f64>], y: &[f64]) -> Option<Vec<f64>> {
    let rows = y.len();
    let cols = design.len();
    if rows < cols || cols == 0 {
        return None;
    }
    let a = DMatrix::from_fn(rows, cols, |i, j| design[j][i]);
    let b = DVector::from_column_slice(y);
    let svd = a.svd(true, true);
    let beta = svd.solve(&b, 1e-12).ok()?;
    Some(beta.iter().copied().collect())
}

/// Two-sided 95% Student-t quantile for `dof` degrees of freedom.
pub fn t_quantile_95(dof: usize) -> f64 {
    const TABLE: [f64; 10] = [
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    ];
    match dof {
        0 => f64::INFINITY,
        1..=10 => TABLE[dof - 1],
        11..=30 => 2.228 - (dof as f64 - 10.0) * (2.228 - 2.042) / 20.0,
        _ => 1.96,
    }
}

/// Exponential integral `E1(x) = int_x^inf e^-t / t dt` for `x > 0`.
pub fn exp_integral_e1(x: f64) -> f64 {
    assert!(x > 0.0, "E1 needs x > 0");
    if x <= 1.0 {
        const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..200 {
            term *= -x / k as f64;
            let add = -term / k as f64;
            sum += add;
            if add.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else {
        // Modified Lentz continued fraction.
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..500 {
            let an = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        h * (-x).exp()
    }
}

/// Parses `7/64`, `-3`, or a decimal into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational64> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().ok()?;
        let d: i64 = d.trim().parse().ok()?;
        if d == 0 || n == i64::MIN || d == i64::MIN {
            return None;
        }
        return Some(Rational64::new(n, d));
    }
    if let Ok(n) = t.parse::<i64>() {
        return Some(Rational64::from_integer(n));
    }
    let (int, frac) = t.split_once('.')?;
    if frac.len() > 15 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let neg = int.starts_with('-');
    let int_part: i64 = if int.is_empty() || int == "-" {
        0
    } else {
        int.parse().ok()?
    };
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let frac_part: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let num = int_part.abs().checked_mul(den)?.checked_add(frac_part)?;
    Some(Rational64::new(if neg { -num } else { num }, den))
}

pub fn rational_to_f64(r: &Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
