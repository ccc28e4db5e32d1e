//! Segmented sieve of Eratosthenes with deterministic parallel reduction.

use rayon::prelude::*;

use super::PrimesError;

pub const SEGMENT: u64 = 1 << 20;
pub const MAX_X: u64 = 1_000_000_000;

fn check_limit(x: u64) -> Result<(), PrimesError> {
    if x > MAX_X {
        Err(PrimesError::LimitExceeded { x, limit: MAX_X })
    } else {
        Ok(())
    }
}

/// Plain sieve for the base primes.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let len = (hi - lo) as usize;
    let mut flags = vec![true; len];
    for v in lo..hi.min(2) {
        flags[(v - lo) as usize] = false;
    }
    for &q in base {
        if q * q >= hi {
            break;
        }
        let mut m = (q * q).max(lo.div_ceil(q) * q);
        while m < hi {
            flags[(m - lo) as usize] = false;
            m += q;
        }
    }
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Applies `f` to the primes of each segment of `[0, x]` in parallel and
/// returns the results in segment order.
pub fn map_segments<T, F>(x: u64, f: F) -> Result<Vec<T>, PrimesError>
where
    T: Send,
    F: Fn(&[u64]) -> T + Sync,
{
    check_limit(x)?;
    if x < 2 {
        return Ok(Vec::new());
    }
    let base = small_primes(x.isqrt());
    let segments = x / SEGMENT + 1;
    Ok((0..segments)
        .into_par_iter()
        .map(|k| {
            let lo = k * SEGMENT;
            let hi = (lo + SEGMENT).min(x + 1);
            f(&sieve_segment(lo, hi, &base))
        })
        .collect())
}

/// All primes `<= x`, ascending.
pub fn primes_up_to(x: u64) -> Result<Vec<u64>, PrimesError> {
    Ok(map_segments(x, |ps| ps.to_vec())?.concat())
}

/// `pi(x)`.
pub fn prime_count(x: u64) -> Result<u64, PrimesError> {
    Ok(map_segments(x, |ps| ps.len() as u64)?.iter().sum())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
