//! Ramanujan's tau from the product `q prod (1 - q^n)^24`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use super::SmoError;
use crate::primes::primes_up_to;

pub const MAX_TAU_LIMIT: u64 = 100_000;

/// `prod_{n>=1} (1 - q^n)` up to `q^len-1` as `(exponent, sign)` pairs.
fn pentagonal(len: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0, 1)];
    for k in 1.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let a = k * (3 * k - 1) / 2;
        if a >= len {
            break;
        }
        terms.push((a, sign));
        let b = k * (3 * k + 1) / 2;
        if b < len {
            terms.push((b, sign));
        }
    }
    terms.sort_unstable();
    terms
}

fn times_sparse<T>(dense: &[T], sparse: &[(usize, i64)]) -> Option<Vec<T>>
where
    T: Clone + Zero + CheckedAdd + CheckedMul + From<i64>,
{
    let len = dense.len();
    let mut out = vec![T::zero(); len];
    for (i, c) in dense.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(e, s) in sparse {
            if i + e >= len {
                break;
            }
            let t = c.checked_mul(&T::from(s))?;
            out[i + e] = out[i + e].checked_add(&t)?;
        }
    }
    Some(out)
}

fn power_24<T>(len: usize) -> Option<Vec<T>>
where
    T: Clone + Zero + CheckedAdd + CheckedMul + From<i64>,
{
    let p = pentagonal(len);
    let mut acc = vec![T::zero(); len];
    if len > 0 {
        acc[0] = T::from(1);
    }
    for _ in 0..24 {
        acc = times_sparse(&acc, &p)?;
    }
    Some(acc)
}

/// `tau(1..=limit)`; index 0 holds `tau(1)`.
pub fn tau_series(limit: u64) -> Result<Vec<BigInt>, SmoError> {
    if limit > MAX_TAU_LIMIT {
        return Err(SmoError::LimitExceeded {
            value: limit,
            limit: MAX_TAU_LIMIT,
        });
    }
    let len = limit as usize;
    Ok(match power_24::<i128>(len) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => power_24::<BigInt>(len).expect("big integers do not overflow"),
    })
}

/// `(p, tau(p))` for primes `p <= limit`.
pub fn generate_tau(limit: u64) -> Result<Vec<(u64, BigInt)>, SmoError> {
    let series = tau_series(limit)?;
    let primes = primes_up_to(limit)?;
    Ok(primes
        .into_iter()
        .map(|p| (p, series[p as usize - 1].clone()))
        .collect())
}

/// CSV with header `p,a_p`.
pub fn tau_csv(rows: &[(u64, BigInt)]) -> String {
    let mut s = String::from("p,a_p\n");
    for (p, t) in rows {
        let _ = writeln!(s, "{p},{t}");
    }
    s
}
