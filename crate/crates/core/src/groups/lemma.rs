//! Agreement of irreducible characters and the `1 - 1/(2n^2)` bound.

use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use super::chartable::{Character, CharacterTable, VALUE_TOL};
use super::GroupError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaVerdict {
    ForcedEqual,
    BelowThreshold,
}

fn check_classes(a: &Character, b: &Character, table: &CharacterTable) -> Result<(), GroupError> {
    let fp = table.classes().fingerprint();
    let r = table.classes().len();
    if a.class_fingerprint() != fp
        || b.class_fingerprint() != fp
        || a.values().len() != r
        || b.values().len() != r
    {
        return Err(GroupError::ClassMismatch);
    }
    Ok(())
}

/// `(1/|G|) sum_g a(g) conj(b(g))`.
pub fn inner_product(
    a: &Character,
    b: &Character,
    table: &CharacterTable,
) -> Result<Complex64, GroupError> {
    check_classes(a, b, table)?;
    let sizes = table.classes().class_sizes();
    let s: Complex64 = (0..sizes.len())
        .map(|k| a.values()[k] * b.values()[k].conj() * sizes[k] as f64)
        .sum();
    Ok(s / table.group_order() as f64)
}

/// Fraction of group elements on which the two characters agree.
pub fn agreement_fraction(
    a: &Character,
    b: &Character,
    table: &CharacterTable,
) -> Result<Rational64, GroupError> {
    check_classes(a, b, table)?;
    let sizes = table.classes().class_sizes();
    let agree: usize = (0..sizes.len())
        .filter(|&k| match (a.integer_values(), b.integer_values()) {
            (Some(x), Some(y)) => x[k] == y[k],
            _ => (a.values()[k] - b.values()[k]).norm() <= VALUE_TOL,
        })
        .map(|k| sizes[k])
        .sum();
    Ok(Rational64::new(agree as i64, table.group_order() as i64))
}

/// `1 - 1/(2n^2)`.
pub fn lemma_threshold(n: u32) -> Rational64 {
    let n = n as i64;
    Rational64::from_integer(1) - Rational64::new(1, 2 * n * n)
}

pub fn lemma_check(
    a: &Character,
    b: &Character,
    table: &CharacterTable,
) -> Result<LemmaVerdict, GroupError> {
    if a.degree() != b.degree() {
        return Err(GroupError::DegreeMismatch(a.degree(), b.degree()));
    }
    let fraction = agreement_fraction(a, b, table)?;
    let threshold = lemma_threshold(a.degree());
    if fraction <= threshold {
        return Ok(LemmaVerdict::BelowThreshold);
    }
    if !a.same_values(b) {
        return Err(GroupError::LemmaViolation {
            fraction: fraction.to_string(),
            threshold: threshold.to_string(),
        });
    }
    Ok(LemmaVerdict::ForcedEqual)
}

/// Both sides of the bound used on the disagreement set `Y`:
/// `(sum_{g in Y} |a(g) conj(b(g))|, |Y| n^2)`.
pub fn lemma_proof_bound(
    a: &Character,
    b: &Character,
    table: &CharacterTable,
) -> Result<(f64, f64), GroupError> {
    check_classes(a, b, table)?;
    let sizes = table.classes().class_sizes();
    let n = a.degree().max(b.degree()) as f64;
    let mut lhs = 0.0;
    let mut y = 0usize;
    for k in 0..sizes.len() {
        if (a.values()[k] - b.values()[k]).norm() > VALUE_TOL {
            lhs += (a.values()[k] * b.values()[k].conj()).norm() * sizes[k] as f64;
            y += sizes[k];
        }
    }
    Ok((lhs, y as f64 * n * n))
}

/// Best agreement among distinct degree-n irreducibles of one table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Extremal {
    pub fraction: Rational64,
    /// Row indices, first index smaller.
    pub witness: (usize, usize),
}

pub fn extremal_search(table: &CharacterTable, n: u32) -> Option<Extremal> {
    let rows = table.rows_of_degree(n);
    let pairs: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(k, &i)| rows[k + 1..].iter().map(move |&j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let f = agreement_fraction(&table.rows()[i], &table.rows()[j], table)
                .expect("rows share the table's classes");
            Extremal {
                fraction: f,
                witness: (i, j),
            }
        })
        .reduce_with(|a, b| {
            if b.fraction > a.fraction || (b.fraction == a.fraction && b.witness < a.witness) {
                b
            } else {
                a
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::{catalog, parse_catalog_expr};
    use crate::groups::chartable::character_table;

    fn table(expr: &str) -> CharacterTable {
        character_table(&catalog(&parse_catalog_expr(expr).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn c2_products() {
        let t = table("cyclic(2)");
        let (triv, sign) = (&t.rows()[0], &t.rows()[1]);
        assert!((inner_product(triv, triv, &t).unwrap() - 1.0).norm() < 1e-12);
        assert!(inner_product(triv, sign, &t).unwrap().norm() < 1e-12);
        assert_eq!(agreement_fraction(triv, sign, &t).unwrap(), Rational64::new(1, 2));
        assert_eq!(lemma_check(triv, sign, &t).unwrap(), LemmaVerdict::BelowThreshold);
        assert_eq!(lemma_check(triv, triv, &t).unwrap(), LemmaVerdict::ForcedEqual);
    }

    #[test]
    fn thresholds() {
        assert_eq!(lemma_threshold(1), Rational64::new(1, 2));
        assert_eq!(lemma_threshold(2), Rational64::new(7, 8));
    }

    #[test]
    fn q8_degree_two_norm() {
        let t = table("quaternion8");
        let chi = &t.rows()[4];
        assert!((inner_product(chi, chi, &t).unwrap() - 1.0).norm() < 1e-12);
        assert_eq!(extremal_search(&t, 2), None);
    }

    #[test]
    fn q8_times_c2_reaches_seven_eighths() {
        let t = table("direct_product(quaternion8, cyclic(2))");
        let best = extremal_search(&t, 2).unwrap();
        assert_eq!(best.fraction, Rational64::new(7, 8));
        let (a, b) = (&t.rows()[best.witness.0], &t.rows()[best.witness.1]);
        assert_eq!(lemma_check(a, b, &t).unwrap(), LemmaVerdict::BelowThreshold);
    }

    #[test]
    fn c4_extremal() {
        let t = table("cyclic(4)");
        assert_eq!(extremal_search(&t, 1).unwrap().fraction, Rational64::new(1, 2));
    }

    #[test]
    fn mismatches() {
        let t2 = table("cyclic(2)");
        let t3 = table("symmetric(3)");
        assert_eq!(
            inner_product(&t2.rows()[0], &t3.rows()[0], &t3),
            Err(GroupError::ClassMismatch)
        );
        assert_eq!(
            lemma_check(&t3.rows()[0], &t3.rows()[2], &t3),
            Err(GroupError::DegreeMismatch(1, 2))
        );
    }

    #[test]
    fn fabricated_violation_is_reported() {
        // Not a character: agrees with the trivial one on 3/4 of C4.
        let t = table("cyclic(4)");
        let one = Complex64::new(1.0, 0.0);
        let fake = Character::new(vec![one, one, one, -one], t.classes().fingerprint());
        assert!(matches!(
            lemma_check(&t.rows()[0], &fake, &t),
            Err(GroupError::LemmaViolation { .. })
        ));
    }
}
