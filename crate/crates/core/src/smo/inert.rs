//! Abscissa arithmetic for sets of inert primes in a cyclic field of prime
//! degree `p`, with a numerical probe on the actual inert primes.

use std::sync::Arc;

use num_rational::Rational64;
use serde::Serialize;

use super::SmoError;
use crate::euler::{convergence_probe, GrcProfile, ProbeReport};
use crate::numeric::rational_to_f64;
use crate::primes::sieve::is_prime;
use crate::primes::{FieldSpec, PrimeSelector};

/// Decade exponents `k` of the probe; norm cutoffs are `(10^k)^p`.
pub const PROBE_DECADES: [i32; 3] = [4, 5, 6];
const PROBE_OFFSET: f64 = 0.05;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Abscissa {
    pub value: String,
    pub approx: f64,
    /// Line the abscissa must lie left of.
    pub target: String,
    pub sufficient: bool,
}

impl Abscissa {
    fn new(value: Rational64, target: Rational64) -> Self {
        Abscissa {
            value: value.to_string(),
            approx: rational_to_f64(&value),
            target: target.to_string(),
            sufficient: value < target,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InertReport {
    pub field: String,
    /// Field degree `p`.
    pub p: u32,
    pub n: u32,
    pub profile: String,
    pub profile_exponent: String,
    /// Density `(p-1)/p` of inert primes.
    pub inert_density: String,
    /// `2 delta + 1/p` for the Rankin-Selberg parameters, against 1.
    pub main: Abscissa,
    /// Smallest prime degree with a sufficient main abscissa.
    pub smallest_sufficient_p: Option<u32>,
    /// `2 delta + 1/p` for a chosen `delta`, against 1/2.
    pub step_one_delta: String,
    pub step_one: Abscissa,
    pub probe: Option<ProbeReport>,
}

/// Fields the probe runs on: `(modulus, generators of H)` for prime degrees
/// 2, 3 and 5.
pub const INERT_TEST_FIELDS: [(u64, &[u64]); 3] = [(4, &[]), (7, &[6]), (11, &[10])];

pub fn inert_experiment(
    fs: &FieldSpec,
    n: u32,
    profile: Option<GrcProfile>,
    step_one_delta: Option<Rational64>,
    probe: bool,
) -> Result<InertReport, SmoError> {
    let p = fs.degree();
    if !is_prime(p as u64) {
        return Err(SmoError::NotPrimeDegree(p));
    }
    if n == 0 || n > 1000 {
        return Err(SmoError::InvalidArgument(format!("degree {n} outside 1..=1000")));
    }
    let profile = profile.unwrap_or(GrcProfile::Lrs(n));
    let delta = profile.exponent();
    let inv_p = Rational64::new(1, p as i64);
    let main_value = delta * 2 + inv_p;
    let one = Rational64::from_integer(1);
    let gap = one - delta * 2;
    let smallest_sufficient_p = (gap > Rational64::from_integer(0))
        .then(|| (2u32..=1000).find(|&q| is_prime(q as u64) && Rational64::new(1, q as i64) < gap))
        .flatten();
    let d1 = step_one_delta.unwrap_or(delta);
    let probe = if probe {
        let sel = PrimeSelector::degree_equals(Arc::new(fs.clone()), p);
        let centre = rational_to_f64(&main_value);
        let rs_delta = rational_to_f64(&(delta * 2));
        let offset = PROBE_OFFSET.min(0.5 / p as f64);
        let cutoffs: Vec<f64> = PROBE_DECADES
            .iter()
            .map(|&k| 10f64.powi(k).powi(p as i32))
            .collect();
        Some(convergence_probe(&sel, rs_delta, &[centre - offset, centre + offset], &cutoffs)?)
    } else {
        None
    };
    Ok(InertReport {
        field: fs.label().to_string(),
        p,
        n,
        profile: profile.to_string(),
        profile_exponent: delta.to_string(),
        inert_density: Rational64::new(p as i64 - 1, p as i64).to_string(),
        main: Abscissa::new(main_value, one),
        smallest_sufficient_p,
        step_one_delta: d1.to_string(),
        step_one: Abscissa::new(d1 * 2 + inv_p, Rational64::new(1, 2)),
        probe,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::Growth;

    fn field(i: usize) -> FieldSpec {
        let (n, h) = INERT_TEST_FIELDS[i];
        FieldSpec::new(n, h, format!("test{i}")).unwrap()
    }

    #[test]
    fn abscissae_for_small_degrees() {
        let want = [("11/10", false), ("14/15", true), ("4/5", true)];
        for (i, (v, ok)) in want.iter().enumerate() {
            let r = inert_experiment(&field(i), 2, None, None, false).unwrap();
            assert_eq!(r.main.value, *v);
            assert_eq!(r.main.sufficient, *ok);
        }
        let r = inert_experiment(&field(0), 2, None, None, false).unwrap();
        assert_eq!(r.main.approx, 1.1);
        assert_eq!(r.smallest_sufficient_p, Some(3));
        assert_eq!(r.inert_density, "1/2");
    }

    #[test]
    fn step_one_variant() {
        let r = inert_experiment(&field(0), 2, None, Some(Rational64::new(7, 64)), false).unwrap();
        assert_eq!(r.step_one.value, "23/32");
        assert!(!r.step_one.sufficient);
        let r = inert_experiment(&field(0), 2, Some(GrcProfile::KSaBb), None, false).unwrap();
        assert_eq!(r.step_one.value, "23/32");
        assert_eq!(r.main.value, "23/32");
        assert!(r.main.sufficient);
    }

    #[test]
    fn non_prime_degree() {
        let f = FieldSpec::new(5, &[], "Q(zeta5)").unwrap();
        assert_eq!(inert_experiment(&f, 2, None, None, false).unwrap_err(), SmoError::NotPrimeDegree(4));
    }

    #[test]
    fn probe_on_inert_primes() {
        let r = inert_experiment(&field(1), 2, None, None, true).unwrap();
        let probe = r.probe.unwrap();
        assert_eq!(probe.degree, Some(3));
        assert_eq!(probe.series.len(), 2);
        assert_ne!(probe.series[1].growth, Growth::Growing);
    }
}
