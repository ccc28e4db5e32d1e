use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;

use smolab::euler::{rankin_selberg_local, GrcProfile, LocalFactor};
use smolab::groups::catalog::{catalog, parse_catalog_expr, CatalogEntry};
use smolab::groups::lemma::agreement_fraction;
use smolab::groups::{character_table, lemma_threshold, parse_group_spec, Permutation};
use smolab::numeric::{parse_rational, rational_to_f64};
use smolab::primes::{parse_selector_expr, FieldSpec};
use smolab::smo::hecke::{parse_hecke_rows, satake_pair};

fn small_entry() -> impl Strategy<Value = CatalogEntry> {
    prop_oneof![
        (1u32..=12).prop_map(CatalogEntry::Cyclic),
        (2u32..=8).prop_map(CatalogEntry::Dihedral),
        Just(CatalogEntry::Quaternion8),
        (2u32..=4).prop_map(CatalogEntry::Symmetric),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_display_round_trips(images in Just((0u32..9).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(images).unwrap();
        let q = Permutation::parse(&p.to_string()).unwrap().extended(p.degree());
        prop_assert_eq!(q, p.clone());
        prop_assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn agreement_never_exceeds_bound(a in small_entry(), b in small_entry()) {
        let g = catalog(&CatalogEntry::DirectProduct(Box::new(a), Box::new(b)));
        prop_assume!(g.is_ok());
        let t = character_table(&g.unwrap()).unwrap();
        let sum_sq: usize = t.degrees().iter().map(|&d| (d * d) as usize).sum();
        prop_assert_eq!(sum_sq, t.group_order());
        for n in t.degrees() {
            let rows = t.rows_of_degree(n);
            for (k, &i) in rows.iter().enumerate() {
                for &j in &rows[k + 1..] {
                    let f = agreement_fraction(&t.rows()[i], &t.rows()[j], &t).unwrap();
                    prop_assert!(f <= lemma_threshold(n));
                }
            }
        }
    }

    #[test]
    fn catalog_display_round_trips(a in small_entry(), b in small_entry()) {
        let e = CatalogEntry::DirectProduct(Box::new(a), Box::new(b));
        prop_assert_eq!(parse_catalog_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn rational_text_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = Rational64::new(n, d);
        prop_assert_eq!(parse_rational(&r.to_string()), Some(r));
    }

    #[test]
    fn satake_pair_rebuilds_lambda(lambda in -2.0f64..2.0) {
        let (a, b) = satake_pair(lambda);
        prop_assert!(((a + b).re - lambda).abs() < 1e-12);
        prop_assert!((a * b - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        prop_assert!((a.norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn self_rankin_selberg_first_coefficient_is_nonnegative(
        q in 2.0f64..1000.0,
        angles in proptest::collection::vec(0.0f64..std::f64::consts::TAU, 1..5),
    ) {
        let alphas: Vec<Complex64> = angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect();
        let f = LocalFactor::new(q, alphas.clone(), alphas.len()).unwrap();
        let rs = rankin_selberg_local(&f, &f, true).unwrap();
        let c = rs.log_coefficient(1);
        prop_assert!(c.re >= -1e-9 && c.im.abs() < 1e-9);
        prop_assert!(rs.is_tempered());
    }

    #[test]
    fn lrs_exponent_matches_formula(n in 1u32..=50) {
        let e = GrcProfile::Lrs(n).exponent();
        let want = Rational64::new(1, 2) - Rational64::new(1, (n * n + 1) as i64);
        prop_assert_eq!(e, want);
        prop_assert!((GrcProfile::Lrs(n).exponent_f64() - rational_to_f64(&want)).abs() < 1e-15);
    }

    #[test]
    fn parsers_reject_or_accept_without_panicking(text in "\\PC{0,80}") {
        let _ = parse_group_spec(&text);
        let _ = Permutation::parse(&text);
        let _ = parse_catalog_expr(&text);
        let _ = FieldSpec::parse(&text);
        let _ = parse_selector_expr(&text);
        let _ = parse_hecke_rows(&text);
        let _ = parse_rational(&text);
    }

    #[test]
    fn residue_degree_is_order_of_coset(n in 3u64..60, p in 2u64..2000) {
        let fs = FieldSpec::new(n, &[], "cyclotomic").unwrap();
        prop_assume!(smolab::primes::sieve::is_prime(p) && !fs.is_ramified(p));
        let f = fs.residue_degree(p).unwrap();
        let order = (1..=n).find(|&k| num_pow_mod(p, k, n) == 1).unwrap();
        prop_assert_eq!(f as u64, order);
    }
}

fn num_pow_mod(b: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1 % m, |acc, _| acc * (b % m) % m)
}
