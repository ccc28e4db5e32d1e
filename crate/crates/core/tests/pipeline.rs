use std::sync::Arc;

use num_rational::Rational64;
use tempfile::tempdir;

use smolab::euler::{positive_type_check, EulerProduct};
use smolab::groups::{bundled_catalog, character_table, extremal_search};
use smolab::primes::{natural_density_estimate, selector_from_str, FieldSpec, PrimeSelector};
use smolab::report::{emit, Format, Report, ReportError};
use smolab::smo::{
    bundled_tau, compare_local, inert_experiment, parse_hecke, pole_order_estimate, tower_degree_check, z_ratio,
    SmoError,
};

#[test]
fn catalog_two_groups_reach_seven_eighths() {
    let hits: Vec<String> = bundled_catalog()
        .unwrap()
        .iter()
        .filter(|g| g.order().is_power_of_two())
        .filter_map(|g| {
            let t = character_table(g).unwrap();
            let e = extremal_search(&t, 2)?;
            (e.fraction == Rational64::new(7, 8)).then(|| g.label().to_string())
        })
        .collect();
    assert!(!hits.is_empty());
}

#[test]
fn tau_against_itself_and_a_flipped_copy() {
    let t = bundled_tau();
    let text = smolab::smo::hecke::bundled_tau_csv().replace("\n7,-16744\n", "\n7,16744\n");
    let flipped = parse_hecke(&text, 12, "flipped", "mem").unwrap();
    let r = compare_local(&t, &flipped, 10_000).unwrap();
    assert_eq!(r.disagreements, vec![7]);
    let same = z_ratio(&t, &t, &PrimeSelector::all(), &[1.5], 10_000).unwrap();
    assert!((same.points[0].direct.re - 1.0).abs() < 1e-12);
}

#[test]
fn tau_square_is_positive_type_and_pole_order_is_small_off_density() {
    let t = bundled_tau();
    let rs = EulerProduct::rankin_selberg(&t.product, &t.product, true);
    assert!(positive_type_check(&rs, &PrimeSelector::all(), 100_000).unwrap().positive);
    let est = pole_order_estimate(&EulerProduct::zeta(), &selector_from_str("mod:3:1").unwrap(), &[0.0625, 0.1, 0.125])
        .unwrap();
    assert!((est.slope - 0.5).abs() < 0.15, "slope {}", est.slope);
}

#[test]
fn dedekind_zeta_of_gaussian_field_has_full_density() {
    let fs = Arc::new(FieldSpec::parse("N=4\nH=").unwrap());
    let ep = EulerProduct::dedekind(fs.clone());
    let split = PrimeSelector::degree_equals(fs, 1);
    let est = natural_density_estimate(&split, &[100_000]).unwrap();
    assert!((est.partial_values[0] - 0.5).abs() < 0.01);
    assert!(positive_type_check(&ep, &PrimeSelector::all(), 10_000).unwrap().positive);
}

#[test]
fn inert_cubic_and_tower() {
    let fs = FieldSpec::parse("N=7;H=6").unwrap();
    let r = inert_experiment(&fs, 2, None, None, false).unwrap();
    assert_eq!(r.main.value, "14/15");
    let quartic = FieldSpec::parse("N=5;H=").unwrap();
    assert_eq!(
        inert_experiment(&quartic, 2, None, None, false).unwrap_err(),
        SmoError::NotPrimeDegree(4)
    );
    let (f, chain) = smolab::smo::tower::bundled_chain();
    assert!(tower_degree_check(&f, &chain, 20_000).unwrap().counterexamples.is_empty());
}

#[test]
fn report_file_round_trip() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("r.json");
    let r = Report::new("demo", &serde_json::json!({"x": 1}), &["anchor"])
        .unwrap()
        .values(&vec![1.5, 2.5])
        .unwrap();
    emit(&r, Format::Json, Some(&path)).unwrap();
    let back = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, r);
    let bad = dir.path().join("missing").join("r.json");
    assert!(matches!(emit(&r, Format::Json, Some(&bad)), Err(ReportError::Io { .. })));
}
