//! Irreducible characters via simultaneous diagonalisation of the class
//! algebra.
//!
//! With `e_i = K_i / sqrt(h_i)` the left-multiplication matrices of the class
//! sums satisfy `A_j^* = A_{j'}` where `j'` is the inverse class, so a random
//! complex combination `W` gives a Hermitian `W + W^*` whose eigenvectors are
//! the central idempotents. An eigenvector `u` has `u_i / sqrt(h_i)`
//! proportional to `conj(chi(g_i))`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::classes::{conjugacy_classes, ConjugacyClassPartition};
use super::group::FiniteGroup;
use super::GroupError;
use crate::numeric::snap;

/// Relative eigenvalue gap below which eigenspaces count as merged.
pub const SEPARATION_TOL: f64 = 1e-8;
/// Distance within which values are moved onto the rational grid.
pub const SNAP_TOL: f64 = 1e-7;
/// Equality tolerance for character values.
pub const VALUE_TOL: f64 = 1e-9;
const ATTEMPTS: usize = 5;
const WEIGHT_RANGE: i64 = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Character {
    degree: u32,
    values: Vec<Complex64>,
    integer_values: Option<Vec<i64>>,
    #[serde(skip)]
    classes: u64,
}

impl Character {
    /// Class function with the given per-class values; `classes` is the
    /// fingerprint of the partition the values refer to.
    pub fn new(values: Vec<Complex64>, classes: u64) -> Self {
        let degree = values.first().map_or(0, |v| v.re.round().max(0.0) as u32);
        let integer_values = values
            .iter()
            .map(|v| (v.im == 0.0 && v.re.fract() == 0.0 && v.re.abs() < 1e15).then_some(v.re as i64))
            .collect();
        Character {
            degree,
            values,
            integer_values,
            classes,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Exact values when every value is a rational integer.
    pub fn integer_values(&self) -> Option<&[i64]> {
        self.integer_values.as_deref()
    }

    pub fn class_fingerprint(&self) -> u64 {
        self.classes
    }

    /// Value-wise equality within [`VALUE_TOL`].
    pub fn same_values(&self, other: &Character) -> bool {
        match (&self.integer_values, &other.integer_values) {
            (Some(a), Some(b)) => a == b,
            _ => {
                self.values.len() == other.values.len()
                    && self
                        .values
                        .iter()
                        .zip(&other.values)
                        .all(|(a, b)| (a - b).norm() <= VALUE_TOL)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    label: String,
    classes: ConjugacyClassPartition,
    rows: Vec<Character>,
}

impl CharacterTable {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn classes(&self) -> &ConjugacyClassPartition {
        &self.classes
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn group_order(&self) -> usize {
        self.classes.group_order()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.rows.iter().map(Character::degree).collect()
    }

    /// Indices of the rows of degree `n`.
    pub fn rows_of_degree(&self, n: u32) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i].degree == n).collect()
    }

    /// Largest deviation of `sum_g chi_i(g) conj(chi_j(g))` from `|G| [i=j]`.
    pub fn row_orthogonality_error(&self) -> f64 {
        row_error(&self.rows, self.classes.class_sizes(), self.group_order())
    }

    /// Largest deviation of `sum_chi chi(g_a) conj(chi(g_b))` from
    /// `[a=b] |G| / h_a`.
    pub fn column_orthogonality_error(&self) -> f64 {
        let r = self.classes.len();
        let n = self.group_order() as f64;
        let mut worst: f64 = 0.0;
        for a in 0..r {
            for b in 0..r {
                let s: Complex64 = self
                    .rows
                    .iter()
                    .map(|c| c.values[a] * c.values[b].conj())
                    .sum();
                let expect = if a == b {
                    n / self.classes.class_sizes()[a] as f64
                } else {
                    0.0
                };
                worst = worst.max((s - expect).norm());
            }
        }
        worst
    }
}

fn row_error(rows: &[Character], sizes: &[usize], order: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate().skip(i) {
            let s: Complex64 = sizes
                .iter()
                .enumerate()
                .map(|(k, &h)| a.values[k] * b.values[k].conj() * h as f64)
                .sum();
            let expect = if i == j { order as f64 } else { 0.0 };
            worst = worst.max((s - expect).norm());
        }
    }
    worst
}

pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable, GroupError> {
    let classes = conjugacy_classes(group);
    let mut smallest_gap = f64::INFINITY;
    for attempt in 0..ATTEMPTS {
        match attempt_table(group, &classes, attempt as u64) {
            Ok(rows) => {
                return Ok(CharacterTable {
                    label: group.label().to_string(),
                    classes,
                    rows,
                })
            }
            Err(gap) => smallest_gap = smallest_gap.min(gap),
        }
    }
    Err(GroupError::NumericalDegeneracy {
        attempts: ATTEMPTS,
        gap: smallest_gap,
    })
}

/// One randomised diagonalisation; `Err(gap)` when it failed to separate.
fn attempt_table(
    group: &FiniteGroup,
    classes: &ConjugacyClassPartition,
    attempt: u64,
) -> Result<Vec<Character>, f64> {
    let n = group.order();
    let r = classes.len();
    let sizes = classes.class_sizes();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9_7f4a_7c15 ^ attempt);
    let weights: Vec<(i64, i64)> = (0..r)
        .map(|_| {
            (
                rng.random_range(-WEIGHT_RANGE..=WEIGHT_RANGE),
                rng.random_range(-WEIGHT_RANGE..=WEIGHT_RANGE),
            )
        })
        .collect();

    // Exact integer accumulation of sum_j w_j c_{jik}: every x with
    // x^-1 z_k in class i contributes w_{class(x)}.
    let w_rows: Vec<Vec<(i64, i64)>> = classes
        .representatives()
        .par_iter()
        .map(|&z| {
            let mut row = vec![(0i64, 0i64); r];
            for x in 0..n {
                let y = group.mul(group.inv(x), z);
                let (a, b) = weights[classes.class_of(x)];
                let cell = &mut row[classes.class_of(y)];
                cell.0 += a;
                cell.1 += b;
            }
            row
        })
        .collect();

    let w = DMatrix::from_fn(r, r, |k, i| {
        let scale = (sizes[k] as f64 / sizes[i] as f64).sqrt();
        Complex64::new(w_rows[k][i].0 as f64, w_rows[k][i].1 as f64) * scale
    });
    let h = &w + w.adjoint();
    let eig = h.symmetric_eigen();

    let mut eigen: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigen.sort_by(f64::total_cmp);
    let scale = eigen.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let gap = eigen
        .windows(2)
        .map(|p| p[1] - p[0])
        .fold(f64::INFINITY, f64::min);
    if r > 1 && gap <= SEPARATION_TOL * scale {
        return Err(gap / scale);
    }

    let max_den = n as u64;
    let mut rows = Vec::with_capacity(r);
    for col in eig.eigenvectors.column_iter() {
        let x: Vec<Complex64> = (0..r).map(|i| col[i] / (sizes[i] as f64).sqrt()).collect();
        let y: Vec<Complex64> = x.iter().map(|xi| (xi / x[0]).conj()).collect();
        let norm: f64 = y.iter().zip(sizes).map(|(v, &h)| v.norm_sqr() * h as f64).sum();
        let degree = (n as f64 / norm).sqrt().round();
        let values: Vec<Complex64> = y
            .iter()
            .map(|v| {
                let v = v * degree;
                Complex64::new(snap(v.re, max_den, SNAP_TOL), snap(v.im, max_den, SNAP_TOL))
            })
            .collect();
        rows.push(Character::new(values, classes.fingerprint()));
    }
    rows.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            for (u, v) in a.values.iter().zip(&b.values) {
                let o = v.re.total_cmp(&u.re).then(v.im.total_cmp(&u.im));
                if o.is_ne() {
                    return o;
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let degree_sum: u64 = rows.iter().map(|c| (c.degree as u64).pow(2)).sum();
    let bounded = rows.iter().all(|c| {
        c.degree >= 1 && c.values.iter().all(|v| v.norm() <= c.degree as f64 + VALUE_TOL)
    });
    if degree_sum != n as u64 || !bounded || row_error(&rows, sizes, n) > 1e-6 * n as f64 {
        return Err(gap / scale);
    }
    Ok(rows)
}
