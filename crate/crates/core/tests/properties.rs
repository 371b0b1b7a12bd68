mod props;

const CASES: u32 = 48;

fn check(name: &str) {
    let (_, prop) = props::all().into_iter().find(|(n, _)| *n == name).expect("known property");
    if let Err(e) = prop(CASES) {
        panic!("{name}: {e}");
    }
}

macro_rules! property_tests {
    ($($test:ident => $name:expr),* $(,)?) => {
        $(#[test] fn $test() { check($name); })*

        #[test]
        fn every_property_has_a_test() {
            let listed = [$($name),*];
            for (name, _) in props::all() {
                assert!(listed.contains(&name), "no test for {name}");
            }
        }
    };
}

property_tests! {
    conjugation => "partition conjugation is an involution",
    n_stat => "n(λ) row and column formulas agree",
    multiplicities => "multiplicities recover length and weight",
    strips => "strip enumeration matches brute force",
    ring_laws => "Laurent ring laws",
    truncation => "truncated products are coherent",
    pascal => "q-binomial Pascal recurrences and symmetry",
    partition_counts => "1/(q;q)_inf counts partitions",
    rational => "rational functions are canonical",
    branching => "branching equals symmetrization",
    branching_exhaustive => "branching equals symmetrization for every |λ| <= 6, n <= 4",
    stability => "P_λ is stable under x_n = 0",
    principal => "principal specialization closed form",
    q_one => "P_λ at q = 1 is m_λ",
    cauchy => "Cauchy identity",
    skew_cauchy => "skew Cauchy identity",
    sqspec => "skew Q sum against the single-alphabet kernel",
}
