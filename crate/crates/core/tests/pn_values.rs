use ice_colors::algebra::{int, rat, Poly, RatFun};
use ice_colors::lattice::count_table;
use ice_colors::pn::{
    pn_consistent, pn_consistent_with, pn_from_counts, positivity_report, symmetry_check, PnError,
    Variant,
};

#[test]
fn n1_raw_sums() {
    let t = count_table(1).unwrap();
    // Binomials at n = 1: A needs m = 1, B and C need m = 0.
    assert_eq!(Variant::A.binomial(1, 1), 1.into());
    assert_eq!(Variant::A.binomial(1, 0), 0.into());
    assert_eq!(pn_from_counts(&t, 1, 1, Variant::A).unwrap(), RatFun::one());
    assert_eq!(
        pn_from_counts(&t, 1, 0, Variant::A).unwrap(),
        RatFun::zero()
    );
    for v in [Variant::B, Variant::C] {
        assert_eq!(v.binomial(1, 0), 1.into());
        assert_eq!(pn_from_counts(&t, 1, 0, v).unwrap(), RatFun::one());
    }
}

#[test]
fn mismatched_table_is_rejected() {
    let t = count_table(2).unwrap();
    assert!(matches!(
        pn_from_counts(&t, 3, 0, Variant::A),
        Err(PnError::TableMismatch {
            table: 2,
            requested: 3
        })
    ));
    assert!(matches!(pn_consistent(0), Err(PnError::EmptyLattice)));
}

#[test]
fn every_variant_agrees_with_t_route() {
    let frozen: [&[i64]; 3] = [&[1], &[1, 1, 2], &[1, 2, 7, 10, 21, 12, 11]];
    for (i, coeffs) in frozen.iter().enumerate() {
        let n = i + 1;
        let report = pn_consistent(n).unwrap();
        assert_eq!(report.poly, Poly::from_ints(coeffs));
        assert!(report.all_ok());
        let checked = report.variants_checked.len() + report.zero_sums_checked.len();
        assert_eq!(checked, 3 * (n + 1));
        assert!(!report.variants_checked.is_empty());
    }
}

#[test]
fn report_json_shape() {
    let report = pn_consistent_with(&count_table(2).unwrap()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "1", "2"]));
    assert_eq!(v["symmetry_ok"], true);
    assert_eq!(v["negative_coeffs"], serde_json::json!([]));
}

#[test]
fn symmetry_holds_for_known_values_only() {
    assert!(symmetry_check(&Poly::one(), 1));
    assert!(symmetry_check(&Poly::from_ints(&[1, 1, 2]), 2));
    assert!(symmetry_check(
        &Poly::from_ints(&[1, 2, 7, 10, 21, 12, 11]),
        3
    ));
    assert!(!symmetry_check(&Poly::z(), 2));
    assert!(!symmetry_check(&Poly::from_ints(&[1, 1, 3]), 2));
    // Degree above the bound cannot satisfy the functional equation.
    assert!(!symmetry_check(&Poly::from_ints(&[1, 0, 0, 1]), 2));
}

#[test]
fn positivity_reports_negative_entries() {
    assert!(positivity_report(&Poly::from_ints(&[1, 1, 2])).is_empty());
    assert_eq!(positivity_report(&Poly::linear(1, -1)), vec![(1, int(-1))]);
    let p = Poly::new(vec![rat(-1, 2), int(0), int(3), int(-4)]);
    assert_eq!(positivity_report(&p), vec![(0, rat(-1, 2)), (3, int(-4))]);
}
