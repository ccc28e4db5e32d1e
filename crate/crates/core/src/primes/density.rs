//! Natural and Dirichlet density estimates, the truncated prime zeta function
//! and Frobenius tallies.

use serde::Serialize;

use super::field::FieldSpec;
use super::selector::PrimeSelector;
use super::sieve::{map_segments, MAX_X};
use super::PrimesError;
use crate::numeric::{exp_integral_e1, least_squares};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimand {
    Natural,
    Dirichlet,
}

/// What a selected prime contributes to a Dirichlet sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Counting {
    /// `multiplicity * q^-s` over primes of the field with norm `q <= x`.
    Norms,
    /// `p^-s` once per underlying rational prime `p <= x`.
    RationalPrimes,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityEstimate {
    pub estimand: Estimand,
    pub sample_points: Vec<f64>,
    pub partial_values: Vec<f64>,
    pub extrapolated: f64,
    pub diagnostics: DensityDiagnostics,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DensityDiagnostics {
    /// Natural: selected primes up to each grid point.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub selected_counts: Vec<u64>,
    /// Natural: unramified primes up to each grid point.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unramified_counts: Vec<u64>,
    /// Dirichlet: cutoff used for every `s`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u64>,
    /// Dirichlet: `exp(4/(s-1))`, the cutoff each `s` would want.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub wanted_cutoffs: Vec<f64>,
    /// Dirichlet: cutoff below the wanted value.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub truncated: Vec<bool>,
    /// Dirichlet: the raw sums over the selector.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub raw_sums: Vec<f64>,
    /// Dirichlet: prime zeta truncated at the same cutoff.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub prime_zeta: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counting: Option<Counting>,
    pub method: String,
}

fn check_grid_u64(grid: &[u64]) -> Result<(), PrimesError> {
    if grid.is_empty() {
        return Err(PrimesError::InvalidGrid("empty grid".into()));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(PrimesError::InvalidGrid("grid must be strictly ascending".into()));
    }
    let last = *grid.last().expect("nonempty");
    if last > MAX_X {
        return Err(PrimesError::LimitExceeded { x: last, limit: MAX_X });
    }
    Ok(())
}

/// `#{p in S, p <= x} / #{unramified p <= x}` at each grid point.
pub fn natural_density_estimate(
    sel: &PrimeSelector,
    x_grid: &[u64],
) -> Result<DensityEstimate, PrimesError> {
    check_grid_u64(x_grid)?;
    let max = *x_grid.last().expect("nonempty");
    let per_segment = map_segments(max, |ps| {
        let mut out = vec![(0u64, 0u64); x_grid.len()];
        for &p in ps {
            if sel.is_excluded(p) {
                continue;
            }
            let hit = sel.contains(p) as u64;
            let first = x_grid.partition_point(|&g| g < p);
            for slot in &mut out[first..] {
                slot.0 += hit;
                slot.1 += 1;
            }
        }
        out
    })?;
    let mut sel_counts = vec![0u64; x_grid.len()];
    let mut den_counts = vec![0u64; x_grid.len()];
    for seg in per_segment {
        for (i, (a, b)) in seg.into_iter().enumerate() {
            sel_counts[i] += a;
            den_counts[i] += b;
        }
    }
    let partial_values: Vec<f64> = sel_counts
        .iter()
        .zip(&den_counts)
        .map(|(&a, &b)| if b == 0 { 0.0 } else { a as f64 / b as f64 })
        .collect();
    Ok(DensityEstimate {
        estimand: Estimand::Natural,
        sample_points: x_grid.iter().map(|&x| x as f64).collect(),
        extrapolated: *partial_values.last().expect("nonempty"),
        partial_values,
        diagnostics: DensityDiagnostics {
            selected_counts: sel_counts,
            unramified_counts: den_counts,
            method: "ratio at the largest grid point".into(),
            ..Default::default()
        },
    })
}

fn check_s_grid(s_grid: &[f64]) -> Result<(), PrimesError> {
    if s_grid.is_empty() {
        return Err(PrimesError::InvalidGrid("empty s grid".into()));
    }
    if s_grid.iter().any(|&s| !(s > 1.0 && s <= 2.0)) {
        return Err(PrimesError::InvalidGrid("every s must lie in (1, 2]".into()));
    }
    let desc = s_grid.windows(2).all(|w| w[0] > w[1]);
    let asc = s_grid.windows(2).all(|w| w[0] < w[1]);
    if !desc && !asc {
        return Err(PrimesError::InvalidGrid("s grid must be strictly monotone".into()));
    }
    Ok(())
}

/// Sums over the selector and over all primes, for each `s`, up to `cutoff`.
fn dirichlet_sums(
    sel: &PrimeSelector,
    s_grid: &[f64],
    cutoff: u64,
    counting: Counting,
) -> Result<(Vec<f64>, Vec<f64>), PrimesError> {
    let g = s_grid.len();
    let x = cutoff as f64;
    let per_segment = map_segments(cutoff, |ps| {
        let mut sums = vec![0.0; 2 * g];
        for &p in ps {
            let pf = p as f64;
            for (i, &s) in s_grid.iter().enumerate() {
                sums[g + i] += pf.powf(-s);
            }
            let Some(item) = sel.item(p) else { continue };
            let (base, weight) = match counting {
                Counting::Norms if item.q <= x => (item.q, item.multiplicity as f64),
                Counting::Norms => continue,
                Counting::RationalPrimes => (pf, 1.0),
            };
            for (i, &s) in s_grid.iter().enumerate() {
                sums[i] += weight * base.powf(-s);
            }
        }
        sums
    })?;
    let mut total = vec![0.0; 2 * g];
    for seg in per_segment {
        for (t, v) in total.iter_mut().zip(seg) {
            *t += v;
        }
    }
    let zeta = total.split_off(g);
    Ok((total, zeta))
}

/// Ratio `sum_{v in S, q_v <= x} q_v^-s / log(1/(s-1))` at each `s`; the
/// extrapolated value is the coefficient `delta` in the least-squares fit
/// `sum_S(s) = delta * P_x(s) + a + b (s - 1)` with `P_x` the prime zeta
/// function truncated at the same cutoff (needs three or more `s` values,
/// otherwise the ratio nearest to `s = 1` is used).
pub fn dirichlet_density_estimate(
    sel: &PrimeSelector,
    s_grid: &[f64],
    cutoff: u64,
    counting: Counting,
) -> Result<DensityEstimate, PrimesError> {
    check_s_grid(s_grid)?;
    if cutoff > MAX_X {
        return Err(PrimesError::LimitExceeded { x: cutoff, limit: MAX_X });
    }
    let (raw, zeta) = dirichlet_sums(sel, s_grid, cutoff, counting)?;
    let partial_values: Vec<f64> = s_grid
        .iter()
        .zip(&raw)
        .map(|(&s, &v)| v / (1.0 / (s - 1.0)).ln())
        .collect();
    let wanted: Vec<f64> = s_grid.iter().map(|&s| (4.0 / (s - 1.0)).exp()).collect();
    let truncated: Vec<bool> = wanted.iter().map(|&w| (cutoff as f64) < w).collect();

    let nearest = s_grid
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("nonempty");
    let (extrapolated, method) = if s_grid.len() >= 3 {
        let design = vec![
            zeta.clone(),
            vec![1.0; s_grid.len()],
            s_grid.iter().map(|s| s - 1.0).collect(),
        ];
        match least_squares(&design, &raw) {
            Some(beta) => (beta[0], "least squares against truncated prime zeta".to_string()),
            None => (partial_values[nearest], "ratio nearest s = 1".to_string()),
        }
    } else {
        (partial_values[nearest], "ratio nearest s = 1".to_string())
    };
    Ok(DensityEstimate {
        estimand: Estimand::Dirichlet,
        sample_points: s_grid.to_vec(),
        partial_values,
        extrapolated,
        diagnostics: DensityDiagnostics {
            cutoff: Some(cutoff),
            wanted_cutoffs: wanted,
            truncated,
            raw_sums: raw,
            prime_zeta: zeta,
            counting: Some(counting),
            method,
            ..Default::default()
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PrimeZeta {
    pub s: f64,
    pub cutoff: u64,
    /// `sum_{p <= x} p^-s`.
    pub value: f64,
    /// `log(1/(s-1))`.
    pub log_pole: f64,
    /// `value - log_pole`.
    pub deviation: f64,
    /// Estimated tail `E1((s-1) log x)`.
    pub tail_estimate: f64,
    /// Upper bound `1.25506 s E1((s-1) log x)` on the tail.
    pub tail_bound: f64,
}

pub fn prime_zeta(s: f64, cutoff: u64) -> Result<PrimeZeta, PrimesError> {
    if !(s > 1.0) {
        return Err(PrimesError::InvalidGrid("prime zeta needs s > 1".into()));
    }
    let value: f64 = map_segments(cutoff, |ps| ps.iter().map(|&p| (p as f64).powf(-s)).sum::<f64>())?
        .iter()
        .sum();
    let log_pole = (1.0 / (s - 1.0)).ln();
    let x = (cutoff.max(2)) as f64;
    let tail_estimate = exp_integral_e1((s - 1.0) * x.ln());
    Ok(PrimeZeta {
        s,
        cutoff,
        value,
        log_pole,
        deviation: value - log_pole,
        tail_estimate,
        tail_bound: 1.25506 * s * tail_estimate,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrobeniusStats {
    pub modulus: u64,
    pub x: u64,
    /// Least residue of each class of `(Z/N)^x / H`.
    pub class_reps: Vec<u64>,
    pub class_orders: Vec<u32>,
    pub counts: Vec<u64>,
    pub fractions: Vec<f64>,
    pub unramified: u64,
    /// First prime landing in each class.
    pub first_hits: Vec<Option<u64>>,
    /// `x` from which every class is nonempty.
    pub all_classes_hit_by: Option<u64>,
}

pub fn frobenius_statistics(fs: &FieldSpec, x: u64) -> Result<FrobeniusStats, PrimesError> {
    let d = fs.degree() as usize;
    let per_segment = map_segments(x, |ps| {
        let mut counts = vec![0u64; d];
        let mut first = vec![None; d];
        for &p in ps {
            if fs.is_ramified(p) {
                continue;
            }
            let c = fs.coset_of(p).expect("unramified primes are units");
            counts[c] += 1;
            first[c].get_or_insert(p);
        }
        (counts, first)
    })?;
    let mut counts = vec![0u64; d];
    let mut first_hits: Vec<Option<u64>> = vec![None; d];
    for (c, f) in per_segment {
        for i in 0..d {
            counts[i] += c[i];
            if first_hits[i].is_none() {
                first_hits[i] = f[i];
            }
        }
    }
    let unramified: u64 = counts.iter().sum();
    let fractions = counts
        .iter()
        .map(|&c| if unramified == 0 { 0.0 } else { c as f64 / unramified as f64 })
        .collect();
    let all_classes_hit_by = first_hits
        .iter()
        .try_fold(0u64, |m, h| h.map(|p| m.max(p)));
    Ok(FrobeniusStats {
        modulus: fs.modulus(),
        x,
        class_reps: fs.coset_reps().to_vec(),
        class_orders: fs.coset_orders().to_vec(),
        counts,
        fractions,
        unramified,
        first_hits,
        all_classes_hit_by,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::selector::selector_from_str;

    #[test]
    fn natural_trivial_cases() {
        let all = natural_density_estimate(&PrimeSelector::all(), &[10, 100]).unwrap();
        assert_eq!(all.partial_values, vec![1.0, 1.0]);
        let none = natural_density_estimate(&PrimeSelector::none(), &[100]).unwrap();
        assert_eq!(none.extrapolated, 0.0);
        assert!(natural_density_estimate(&PrimeSelector::all(), &[100, 10]).is_err());
    }

    #[test]
    fn natural_counts_small() {
        // Primes <= 30 other than 2: 3 5 7 11 13 17 19 23 29; 1 mod 4: 5 13 17 29.
        let est = natural_density_estimate(&selector_from_str("mod:4:1").unwrap(), &[30]).unwrap();
        assert_eq!(est.diagnostics.selected_counts, vec![4]);
        assert_eq!(est.diagnostics.unramified_counts, vec![9]);
    }

    #[test]
    fn prime_zeta_small() {
        let z = prime_zeta(2.0, 10).unwrap();
        let direct = 1.0 / 4.0 + 1.0 / 9.0 + 1.0 / 25.0 + 1.0 / 49.0;
        assert!((z.value - direct).abs() < 1e-15);
        assert_eq!(prime_zeta(2.0, 1).unwrap().value, 0.0);
        assert!(prime_zeta(1.0, 10).is_err());
    }

    #[test]
    fn frobenius_of_q_i() {
        let fs = FieldSpec::new(4, &[], "Q(i)").unwrap();
        let st = frobenius_statistics(&fs, 100).unwrap();
        assert_eq!(st.class_reps, vec![1, 3]);
        assert_eq!(st.counts.iter().sum::<u64>(), 24);
        assert_eq!(st.first_hits, vec![Some(5), Some(3)]);
        assert_eq!(st.all_classes_hit_by, Some(5));
    }

    #[test]
    fn dirichlet_grid_validation() {
        let all = PrimeSelector::all();
        assert!(dirichlet_density_estimate(&all, &[1.0], 100, Counting::Norms).is_err());
        assert!(dirichlet_density_estimate(&all, &[1.5, 1.5], 100, Counting::Norms).is_err());
        assert!(dirichlet_density_estimate(&all, &[1.5, 1.2, 1.3], 100, Counting::Norms).is_err());
    }
}
