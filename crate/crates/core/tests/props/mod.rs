//! Property checks shared by the `properties` test target and the acceptance
//! run. Each takes a case count and reports the first failure as a string.

use std::collections::BTreeMap;

use hlq_core::hallittlewood::{hl_p, hl_p_symmetrization, spec_principal_p};
use hlq_core::identities::pid::{verify_cauchy, verify_skew_cauchy, verify_sqspec};
use hlq_core::partition::{
    enumerate_partitions, is_horizontal_strip, partitions_up_to, strips_over, strips_under, subpartitions,
};
use hlq_core::qalgebra::pochhammer::{infinite_product, ProductFactor};
use hlq_core::qalgebra::rational::poly_gcd;
use hlq_core::qalgebra::{qbinom, LaurentQ, RationalQ};
use hlq_core::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub type Property = fn(u32) -> Result<(), String>;

pub fn all() -> Vec<(&'static str, Property)> {
    vec![
        ("partition conjugation is an involution", conjugation_involution),
        ("n(λ) row and column formulas agree", n_stat_formulas),
        ("multiplicities recover length and weight", multiplicity_sums),
        ("strip enumeration matches brute force", strip_enumeration),
        ("Laurent ring laws", laurent_ring_laws),
        ("truncated products are coherent", truncation_coherence),
        ("q-binomial Pascal recurrences and symmetry", pascal_recurrence),
        ("1/(q;q)_inf counts partitions", partition_generating_function),
        ("rational functions are canonical", rational_canonical),
        ("branching equals symmetrization", branching_vs_symmetrization),
        ("branching equals symmetrization for every |λ| <= 6, n <= 4", branching_exhaustive),
        ("P_λ is stable under x_n = 0", stability),
        ("principal specialization closed form", principal_specialization),
        ("P_λ at q = 1 is m_λ", q_one_monomial),
        ("Cauchy identity", cauchy),
        ("skew Cauchy identity", skew_cauchy),
        ("skew Q sum against the single-alphabet kernel", sqspec),
    ]
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted positive parts")
    })
}

fn bounded_partition(max_weight: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    let all: Vec<Partition> = partitions_up_to(max_weight, Some(max_len), None);
    prop::sample::select(all)
}

pub fn laurent(power_series: bool) -> impl Strategy<Value = LaurentQ> {
    let lo = if power_series { 0..1i64 } else { -3..3i64 };
    (lo, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(m, c)| LaurentQ::from_i64s(m, &c))
}

fn conjugation_involution(cases: u32) -> Result<(), String> {
    run(cases, partition(8, 8), |l| {
        let c = l.conjugate();
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.weight(), l.weight());
        prop_assert_eq!(c.len(), l.first());
        Ok(())
    })
}

fn n_stat_formulas(cases: u32) -> Result<(), String> {
    run(cases, partition(8, 8), |l| {
        let rows: usize = l.parts().iter().enumerate().map(|(i, p)| i * p).sum();
        let cols: usize = l.conjugate().parts().iter().map(|c| c * (c - 1) / 2).sum();
        prop_assert_eq!(l.n_stat(), rows);
        prop_assert_eq!(l.n_stat(), cols);
        let c = l.conjugate();
        prop_assert_eq!(c.dot(&c), 2 * l.n_stat() + l.weight());
        Ok(())
    })
}

fn multiplicity_sums(cases: u32) -> Result<(), String> {
    run(cases, partition(8, 8), |l| {
        let len: usize = (1..=l.first()).map(|i| l.multiplicity(i)).sum();
        let weight: usize = (1..=l.first()).map(|i| i * l.multiplicity(i)).sum();
        prop_assert_eq!(len, l.len());
        prop_assert_eq!(weight, l.weight());
        Ok(())
    })
}

fn strip_enumeration(cases: u32) -> Result<(), String> {
    run(cases, (partition(5, 4), 0usize..4), |(mu, r)| {
        let mut fast = strips_over(&mu, r, None);
        fast.sort();
        let mut slow: Vec<Partition> = enumerate_partitions(mu.weight() + r, None, None)
            .into_iter()
            .filter(|l| is_horizontal_strip(l, &mu))
            .collect();
        slow.sort();
        prop_assert_eq!(fast, slow);
        let mut under = strips_under(&mu);
        under.sort();
        let mut brute: Vec<Partition> =
            subpartitions(&mu).into_iter().filter(|n| is_horizontal_strip(&mu, n)).collect();
        brute.sort();
        prop_assert_eq!(under, brute);
        Ok(())
    })
}

fn laurent_ring_laws(cases: u32) -> Result<(), String> {
    run(cases, (laurent(false), laurent(false), laurent(false)), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentQ::one(), a.clone());
        Ok(())
    })
}

fn truncation_coherence(cases: u32) -> Result<(), String> {
    run(cases, (laurent(true), laurent(true), 0i64..8), |(a, b, k)| {
        let full = (&a * &b).truncate(k);
        prop_assert_eq!(a.mul_trunc(&b, k), full.clone());
        prop_assert_eq!(a.truncate(k).mul_trunc(&b.truncate(k), k), full);
        Ok(())
    })
}

fn pascal_recurrence(cases: u32) -> Result<(), String> {
    run(cases, (1i64..14, 0i64..14), |(n, k)| {
        let k = k.min(n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        if k >= 1 {
            let lower = &qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(k);
            let upper = &qbinom(n - 1, k - 1).shift(n - k) + &qbinom(n - 1, k);
            prop_assert_eq!(qbinom(n, k), lower);
            prop_assert_eq!(qbinom(n, k), upper);
        }
        Ok(())
    })
}

fn partition_generating_function(cases: u32) -> Result<(), String> {
    run(cases, 0i64..40, |cap| {
        let s = infinite_product(&[ProductFactor { start: 1, step: 1, power: -1 }], cap);
        for w in 0..=cap {
            let count = enumerate_partitions(w as usize, None, None).len();
            prop_assert_eq!(s.coeff(w), BigInt::from(count));
        }
        Ok(())
    })
}

fn rational_canonical(cases: u32) -> Result<(), String> {
    run(cases, (laurent(false), laurent(false), laurent(false)), |(a, b, c)| {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let r = RationalQ::new(a.clone(), b.clone()).unwrap();
        let scaled = RationalQ::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&r, &scaled);
        prop_assert!(poly_gcd(r.numer(), r.denom()).is_constant());
        Ok(())
    })
}

fn terms_of(s: &hlq_core::MultiSeries) -> BTreeMap<Vec<u32>, LaurentQ> {
    s.terms().clone()
}

fn branching_vs_symmetrization(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(6, 4), 1usize..=4), |(l, n)| {
        let b = hl_p(&l, n, None).value;
        let s = hl_p_symmetrization(&l, n).unwrap().value;
        prop_assert_eq!(terms_of(&b), terms_of(&s), "λ={} n={}", l, n);
        Ok(())
    })
}

fn branching_exhaustive(_cases: u32) -> Result<(), String> {
    for n in 1..=4 {
        for l in partitions_up_to(6, None, None) {
            let b = hl_p(&l, n, None).value;
            let s = hl_p_symmetrization(&l, n).map_err(|e| e.to_string())?.value;
            if terms_of(&b) != terms_of(&s) {
                return Err(format!("λ={l} n={n}"));
            }
        }
    }
    Ok(())
}

fn stability(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(6, 3), 1usize..=3), |(l, n)| {
        let bigger = hl_p(&l, n + 1, None).value.drop_var(n);
        let projected: BTreeMap<Vec<u32>, LaurentQ> =
            bigger.terms().iter().map(|(m, c)| (m[..n].to_vec(), c.clone())).collect();
        prop_assert_eq!(projected, terms_of(&hl_p(&l, n, None).value));
        Ok(())
    })
}

fn principal_specialization(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(6, 4), 1usize..=4), |(l, n)| {
        let powers: Vec<i64> = (0..n as i64).collect();
        let direct = hl_p(&l, n, None).value.specialize_q_powers(&powers);
        prop_assert_eq!(spec_principal_p(&l, n), RationalQ::from_laurent(direct));
        Ok(())
    })
}

fn q_one_monomial(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(6, 4), 1usize..=4), |(l, n)| {
        let p = hl_p(&l, n, None).value;
        let one = BigRational::one();
        let mut seen = 0;
        for (m, c) in p.terms() {
            let mut sorted: Vec<usize> = m.iter().map(|&e| e as usize).filter(|&e| e > 0).collect();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let at_one = c.eval(&one).unwrap();
            if sorted == l.parts() {
                prop_assert_eq!(at_one, one.clone());
                seen += 1;
            } else {
                prop_assert!(at_one.is_zero(), "λ={} monomial {:?}", l, m);
            }
        }
        // m_λ has one monomial per distinct arrangement of λ's parts among n slots
        if l.len() <= n {
            prop_assert!(seen > 0);
        }
        Ok(())
    })
}

fn cauchy(cases: u32) -> Result<(), String> {
    run(cases, (1usize..=3, 1usize..=3, 2u32..=4), |(n, m, d)| {
        let r = verify_cauchy(n, m, d, 0).unwrap();
        prop_assert!(r.passed(), "{:?}", r.first_mismatch);
        Ok(())
    })
}

fn skew_cauchy(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(2, 2), bounded_partition(2, 2), 1usize..=2, 1u32..=3), |(mu, nu, n, d)| {
        let r = verify_skew_cauchy(&mu, &nu, n, n, d, 0).unwrap();
        prop_assert!(r.status != hlq_core::identities::Status::Fail, "{:?}", r.first_mismatch);
        Ok(())
    })
}

fn sqspec(cases: u32) -> Result<(), String> {
    run(cases, (bounded_partition(3, 2), 1usize..=3, 1u32..=4), |(mu, n, d)| {
        let r = verify_sqspec(&mu, n, d, 0).unwrap();
        prop_assert!(r.status != hlq_core::identities::Status::Fail, "{:?}", r.first_mismatch);
        Ok(())
    })
}
