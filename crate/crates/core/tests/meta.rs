//! Cross-identity consistency, determinism and truncation soundness.

use hlq_core::identities::bailey::{bailey_at_one, drie_lhs, drie_rhs, verify_drie, Shift};
use hlq_core::identities::bounded::{cartan_sum, pps_lhs, verify_cor4};
use hlq_core::identities::deformed::{verify_limit, verify_subset_sum};
use hlq_core::identities::pid::{verify_cor1, verify_main};
use hlq_core::identities::rr::{family_rhs, rr_e3, verify_modulus_family, verify_rr_a2, FamilyVariant};
use hlq_core::identities::VerifyReport;
use hlq_core::parallel;
use hlq_core::qalgebra::pochhammer::eta_quotient;
use hlq_core::qalgebra::rational::ratio;
use hlq_core::qalgebra::InverseQpochTable;
use hlq_core::Partition;

#[test]
fn bounded_pair_sum_is_the_invariant_sum_at_its_bounds() {
    let cap = 15;
    let t = InverseQpochTable::new(8, cap);
    for (n, m) in [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)] {
        let r = cartan_sum(Some(&[n, m]), &[3, 3], cap);
        for i in 0..=3 {
            for j in 0..=3 {
                let lhs = pps_lhs(n, m, i, j, &t);
                let rv = r.get(&vec![i, j]).cloned().unwrap_or_default();
                assert_eq!(lhs.truncate(cap), rv.truncate(cap), "(n,m)=({n},{m}) a^{i} b^{j}");
            }
        }
    }
}

#[test]
fn modulus_seven_product_matches_the_family_at_n_two() {
    let cap = 40;
    let qinf = eta_quotient(1, &[(1, 1)], cap);
    assert_eq!(qinf.mul_trunc(&family_rhs(2, FamilyVariant::Plus, cap), cap), rr_e3(cap));
}

#[test]
fn shifted_form_at_a_b_one_matches_the_transformation() {
    let q = ratio(2, 7);
    for m in [[0, 0], [1, 1], [2, 1], [2, 2]] {
        for k in Shift::all(2) {
            let (l, r) = bailey_at_one(m, k, &q).unwrap();
            assert_eq!(drie_lhs(m, k).unwrap().eval(&q).unwrap(), l, "M={m:?} k={k:?}");
            assert_eq!(drie_rhs(m, k).unwrap().eval(&q).unwrap(), r, "M={m:?} k={k:?}");
        }
    }
}

fn runs() -> Vec<Box<dyn Fn() -> VerifyReport>> {
    vec![
        Box::new(|| verify_main(2, 1, 4, 7).unwrap()),
        Box::new(|| verify_rr_a2(20, 7).unwrap()),
        Box::new(|| verify_drie([2, 1], Shift([1, 0, -1]), 7).unwrap()),
        Box::new(|| verify_subset_sum(2, 2, 6, 7).unwrap()),
        Box::new(|| verify_cor4(2, 1, 3, 3, 12, 7).unwrap()),
    ]
}

#[test]
fn identical_inputs_give_identical_reports() {
    for run in runs() {
        let a = run().canonical_json();
        assert_eq!(a, run().canonical_json());
        parallel::set_sequential(true);
        let seq = run().canonical_json();
        parallel::set_sequential(false);
        assert_eq!(a, seq);
    }
}

#[test]
fn doubling_the_truncation_keeps_passing() {
    let pairs: Vec<(VerifyReport, VerifyReport)> = vec![
        (verify_main(2, 1, 3, 0).unwrap(), verify_main(2, 1, 6, 0).unwrap()),
        (verify_cor1(&Partition::row(1), 2, 1, 2, 0).unwrap(), verify_cor1(&Partition::row(1), 2, 1, 4, 0).unwrap()),
        (verify_cor4(1, 1, 2, 2, 8, 0).unwrap(), verify_cor4(1, 1, 2, 2, 16, 0).unwrap()),
        (verify_rr_a2(15, 0).unwrap(), verify_rr_a2(30, 0).unwrap()),
        (
            verify_modulus_family(2, FamilyVariant::Minus, 12, 0).unwrap(),
            verify_modulus_family(2, FamilyVariant::Minus, 24, 0).unwrap(),
        ),
        (verify_limit(1, 1, 10, 0).unwrap(), verify_limit(1, 1, 20, 0).unwrap()),
    ];
    for (small, big) in pairs {
        assert!(small.passed(), "{}", small.identity_id);
        assert!(big.passed(), "{} doubled", big.identity_id);
    }
}
