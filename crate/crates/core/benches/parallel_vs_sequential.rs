use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hlq_core::identities::deformed::verify_subset_sum;
use hlq_core::identities::pid::verify_main;
use hlq_core::identities::rr::{family_lhs, FamilyVariant};
use hlq_core::parallel;

fn modes(c: &mut Criterion, name: &str, mut work: impl FnMut()) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    for (label, sequential) in [("parallel", false), ("sequential", true)] {
        parallel::set_sequential(sequential);
        group.bench_function(BenchmarkId::from_parameter(label), |b| b.iter(&mut work));
    }
    parallel::set_sequential(false);
    group.finish();
}

fn benches(c: &mut Criterion) {
    modes(c, "two_alphabet_sum_2_2_5", || {
        verify_main(2, 2, 5, 0).unwrap();
    });
    modes(c, "modulus_family_n3_to_q80", || {
        std::hint::black_box(family_lhs(3, FamilyVariant::Plus, 80));
    });
    modes(c, "subset_sum_n4", || {
        verify_subset_sum(4, 3, 6, 0).unwrap();
    });
}

criterion_group!(parallel_vs_sequential, benches);
criterion_main!(parallel_vs_sequential);
