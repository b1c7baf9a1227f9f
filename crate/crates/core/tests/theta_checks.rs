use ice_colors::theta::{
    filali_suite, partition_brute, partition_filali, rel_residual, specialization_check, BrutePlan,
    ModelParams, ThetaError, MAX_CANCELLATION,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn conditioned_sum_agrees_or_refuses() {
    let plan = BrutePlan::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let params = ModelParams::random(2, &mut rng);
        let (total, scale) = plan.partition_with_scale(&params).unwrap();
        assert!(scale >= total.norm());
        match plan.partition_conditioned(&params) {
            Ok(z) => {
                assert_eq!(z, total);
                assert!(scale <= MAX_CANCELLATION * total.norm());
            }
            Err(e) => assert!(matches!(e, ThetaError::NearSingular(_))),
        }
    }
}

#[test]
fn brute_force_matches_determinant_at_one_draw() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let params = ModelParams::random(3, &mut rng);
    let r = rel_residual(
        partition_brute(3, &params).unwrap(),
        partition_filali(3, &params).unwrap(),
    );
    assert!(r < 1e-8, "{r}");
}

#[test]
fn size_mismatch_is_an_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let params = ModelParams::random(2, &mut rng);
    assert!(partition_filali(3, &params).is_err());
}

#[test]
fn small_suites_pass() {
    assert!(filali_suite(&[1, 2], 10, 5).pass);
    let report = specialization_check(&[1], 10, 5);
    assert!(report.pass, "{}", report.to_json());
    assert_eq!(report.checks.len(), 3);
}
