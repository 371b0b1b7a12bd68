//! Acceptance run: one line per criterion with its measured time against a
//! pinned limit. All comparisons are exact; the only tolerance is wall time.

#[path = "../../core/tests/props/mod.rs"]
mod props;

use std::time::{Duration, Instant};

use hlq_cli::{suite, Profile};
use hlq_core::hallittlewood::{phi_coeff, psi_coeff};
use hlq_core::identities::bailey::{
    verify_bailey_points, verify_drie, verify_euler_a2, verify_it1, EulerVariant, Shift, ShiftRange,
};
use hlq_core::identities::bounded::{verify_cor4, verify_hua};
use hlq_core::identities::deformed::{
    verify_a3, verify_bounded_rows, verify_deformed_strips, verify_deformed_sum, verify_limit,
    verify_principal_bounded, verify_rank_extension, verify_subset_sum, BoundedRows, DeformedReduction, PrincipalForm,
};
use hlq_core::identities::hall::verify_hall;
use hlq_core::identities::pid::{verify_cor1, verify_cor2, verify_cor3, verify_main};
use hlq_core::identities::proof::{pell_count, verify_ab2, verify_lemma41, verify_psiphi, AbConvention};
use hlq_core::identities::rr::{
    family_lhs, rr_pair_sum, verify_macdonald_a2, verify_modulus_family, verify_rr_a2, verify_rr_classical,
    verify_vandermonde, FamilyVariant, MacdonaldInstance,
};
use hlq_core::identities::strips::verify_strip_coefficients;
use hlq_core::identities::{Status, VerifyReport};
use hlq_core::partition::partitions_up_to;
use hlq_core::qalgebra::eval::DEFAULT_POINTS;
use hlq_core::qalgebra::LaurentQ;
use hlq_core::{Partition, StripMask};

const SEED: u64 = 0x484C51;

/// Collects failures for one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn report(&mut self, r: VerifyReport) {
        self.checks += 1;
        if r.status != Status::Pass {
            self.failures.push(format!(
                "{} {} -> {} {}",
                r.identity_id,
                serde_json::to_string(&r.params).unwrap(),
                r.status.as_str(),
                r.first_mismatch.map(|m| serde_json::to_string(&m).unwrap()).unwrap_or_default()
            ));
        }
    }

    fn result(&mut self, what: &str, r: hlq_core::Result<VerifyReport>) {
        match r {
            Ok(r) => self.report(r),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{what}: error {e}"));
            }
        }
    }

    /// Runs `f` and records a failure if it takes longer than `limit`.
    fn timed<T>(&mut self, what: &str, limit: Duration, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        self.checks += 1;
        if took > limit {
            self.failures.push(format!("{what}: {:.3} s exceeds {} s", took.as_secs_f64(), limit.as_secs_f64()));
        }
        out
    }

    fn assert(&mut self, what: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(what.to_string());
        }
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce(&mut Tally)) -> bool {
    let start = Instant::now();
    let mut t = Tally::default();
    body(&mut t);
    let took = start.elapsed();
    let ok = t.failures.is_empty() && took <= limit;
    println!(
        "criterion {id:>2}: {}  {title}  ({} checks, {:.3} s, limit {} s)",
        if ok { "PASS" } else { "FAIL" },
        t.checks,
        took.as_secs_f64(),
        limit.as_secs_f64()
    );
    for f in t.failures.iter().take(5) {
        println!("              {f}");
    }
    if took > limit {
        println!("              over the time limit");
    }
    ok
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// `B` in `(1 + √2)^n = A + B√2`, the closed form of the term counts.
fn pell_closed_form(k: usize) -> u64 {
    let (mut a, mut b) = (1u64, 0u64);
    for _ in 0..=k {
        (a, b) = (a + 2 * b, a + b);
    }
    b
}

fn main() {
    let mut all = true;

    all &= criterion(1, "strip coefficient worked example (phi/psi under 1 ms)", secs(60), |t| {
        let (lambda, mu) = (p("5,3,2,2"), p("3,3,2"));
        let (phi, psi) = t.timed("phi/psi", Duration::from_millis(1), || {
            (phi_coeff(&lambda, &mu).unwrap(), psi_coeff(&lambda, &mu).unwrap())
        });
        t.assert("phi = (1-q^2)(1-q)", phi == &LaurentQ::one_minus(1, 2) * &LaurentQ::one_minus(1, 1));
        t.assert("psi = 1-q^2", psi == LaurentQ::one_minus(1, 2));
        t.result("hl.strip", verify_strip_coefficients(&lambda, &mu, SEED));
    });

    all &= criterion(2, "two-alphabet sum at (2,2,6) and (3,2,5), 60 s each", secs(120), |t| {
        for (n, m, d) in [(2, 2, 6), (3, 2, 5)] {
            let r = t.timed(&format!("n={n} m={m} D={d}"), secs(60), || verify_main(n, m, d, SEED).unwrap());
            t.assert("certified q-window recorded", r.bound("q_window").is_some() && r.bound("plan").is_some());
            t.report(r);
        }
    });

    all &= criterion(3, "skew corollaries at n=m=2, D=4..5 and Hall's identity", secs(60), |t| {
        let small: Vec<Partition> = partitions_up_to(2, None, None);
        for d in 4..=5 {
            for nu in &small {
                t.result("cor1", verify_cor1(nu, 2, 2, d, SEED));
            }
            for j in 0..=2 {
                t.result("cor3", verify_cor3(j, 2, d, SEED));
            }
        }
        for nu in &small {
            for eta in &small {
                t.result("cor2", verify_cor2(nu, eta, 2, 2, 4, SEED));
            }
        }
        for k in 0..=5 {
            for j in 0..=k {
                for n in 0..=5 {
                    t.result("hall", verify_hall(k, j, Some(n), SEED));
                }
                t.result("hall inf", verify_hall(k, j, None, SEED));
            }
        }
    });

    all &= criterion(4, "bounded-length double sum, degrees <= 5, N=30", secs(120), |t| {
        for (n, m) in [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)] {
            let r = verify_cor4(n, m, 5, 5, 30, SEED);
            // (0,0) only has the constant coefficient, so it is inconclusive by design
            match r {
                Ok(r) if n == 0 && m == 0 => {
                    t.assert("(0,0) has no mismatch", r.first_mismatch.is_none() && r.status != Status::Fail)
                }
                other => t.result("cor4", other),
            }
        }
    });

    let bounds = [[0, 0], [1, 1], [2, 1], [2, 2], [3, 2]];
    all &= criterion(5, "two-parameter transformation, shifted form and a=b=1 form", secs(120), |t| {
        for m in bounds {
            for k in Shift::all(2) {
                t.result("bl", verify_bailey_points(m, k, ShiftRange::Extended, DEFAULT_POINTS, SEED));
            }
            for k in Shift::all(3) {
                t.result("drie", verify_drie(m, k, SEED));
            }
        }
    });

    all &= criterion(6, "A2 Euler identity (3 variants, M <= 6) and its transform (M <= 4)", secs(120), |t| {
        for m1 in 0..=6 {
            for m2 in 0..=6 {
                for v in [EulerVariant::Standard, EulerVariant::QInverse, EulerVariant::Modulus3nSeed] {
                    t.result("euler", verify_euler_a2([m1, m2], v, SEED));
                }
                if m1 <= 4 && m2 <= 4 {
                    t.result("it1", verify_it1([m1, m2], SEED));
                }
            }
        }
    });

    all &= criterion(7, "Rogers-Ramanujan: A2 triple, classical pair, modulus families", secs(300), |t| {
        t.result("rr.a2", verify_rr_a2(60, SEED));
        t.result("rr.classical", verify_rr_classical(60, SEED));
        for n in [2, 3] {
            for v in [FamilyVariant::Plus, FamilyVariant::Minus, FamilyVariant::Zero] {
                t.result("family", verify_modulus_family(n, v, 40, SEED));
            }
        }
        t.assert(
            "n=2, 3n+1 sum equals the A2 pair sum to q^60",
            family_lhs(2, FamilyVariant::Plus, 60) == rr_pair_sum(60),
        );
    });

    all &= criterion(8, "Cartan-form sums, A2 Macdonald to q^80, Vandermonde", secs(120), |t| {
        for rank in 1..=3 {
            t.result("hua", verify_hua(rank, &vec![4; rank], 20, SEED));
        }
        t.result("macdonald", verify_macdonald_a2(80, MacdonaldInstance::Modulus7, SEED));
        t.result("vandermonde", verify_vandermonde(SEED));
    });

    all &= criterion(9, "strip-sum lemmas and the two-alphabet Laurent identity", secs(120), |t| {
        let four = partitions_up_to(4, None, None);
        for lambda in &four {
            for mu in &four {
                t.result("psiphi", verify_psiphi(lambda, mu, 4, SEED));
            }
        }
        for mu in partitions_up_to(5, None, None) {
            for len in 1..=3 {
                for mask in StripMask::all(len) {
                    t.result("lemma41", verify_lemma41(&mu, &mask, 4, SEED));
                }
            }
        }
        t.assert("T_1 = 2 and T_2 = 5", pell_count(1) == 2 && pell_count(2) == 5);
        for k in 1..=6 {
            t.assert(&format!("term count recurrence = closed form at k={k}"), pell_count(k) == pell_closed_form(k));
            for conv in [AbConvention::WithKInI, AbConvention::Without] {
                t.result("ab2", verify_ab2(k, conv, SEED));
            }
        }
    });

    all &= criterion(10, "(q,t) strips, bounded-row sums, chained extensions", secs(300), |t| {
        for n in 1..=3 {
            t.result("npsom2", verify_deformed_sum(n, 4, DeformedReduction::QZero, SEED));
        }
        for mu in partitions_up_to(3, None, None) {
            t.result("psiqt", verify_deformed_strips(&mu, 4, DEFAULT_POINTS, true, SEED));
        }
        for n in 1..=4 {
            t.result("thmpf", verify_subset_sum(n, 4, DEFAULT_POINTS, SEED));
        }
        for n in 1..=3 {
            for rows in [BoundedRows::Even, BoundedRows::All] {
                t.result("stem/md", verify_bounded_rows(n, 3, rows, DEFAULT_POINTS, SEED));
            }
        }
        for n in 1..=4 {
            for k in 1..=3 {
                for form in [PrincipalForm::ClosedForm, PrincipalForm::Branching] {
                    // every z-coefficient is a polynomial in q and is compared in full
                    t.result("st", verify_principal_bounded(n, k, 6, form, DEFAULT_POINTS, SEED));
                }
            }
        }
        for k in 1..=3 {
            for s in 1..=2 {
                t.result("fulman", verify_limit(k, s, 30, SEED));
            }
        }
        for rank in 2..=4 {
            t.result("an_ext", verify_rank_extension(rank, 4, 15, SEED));
        }
        t.result("a3", verify_a3(4, 15, SEED));
    });

    all &= criterion(11, "property suites and the quick suite", secs(300), |t| {
        for (name, prop) in props::all() {
            let r = prop(64);
            t.assert(&format!("{name}: {}", r.as_ref().err().cloned().unwrap_or_default()), r.is_ok());
        }
        let s = suite(Profile::Quick, None);
        let ids: Vec<&str> = s.members.iter().map(|m| m.identity_id.as_str()).collect();
        let catalog: Vec<&str> = hlq_cli::catalog().iter().map(|e| e.id).collect();
        t.assert("quick suite covers every id exactly once", ids == catalog);
        t.assert(&format!("quick suite exit code {}", s.exit_code()), s.exit_code() == 0);
    });

    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILURES" });
    if !all {
        std::process::exit(1);
    }
}
