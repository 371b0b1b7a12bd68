//! The identity catalog. Every id, its description and its quick/full
//! default parameters live in this one table.

use hlq_core::identities::bailey::{self, EulerVariant, Shift, ShiftRange};
use hlq_core::identities::deformed::{self, BoundedRows, DeformedReduction, PrincipalForm};
use hlq_core::identities::proof::{self, AbConvention};
use hlq_core::identities::rr::{self, FamilyVariant, MacdonaldInstance};
use hlq_core::identities::{bounded, hall, pid, strips, VerifyReport};

use crate::args::{bad_choice, CliError, Params};

pub type Runner = fn(&Params) -> Result<VerifyReport, CliError>;

pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub quick: &'static str,
    pub full: &'static str,
    pub run: Runner,
}

macro_rules! entry {
    ($id:expr, $anchor:expr, quick: $q:expr, full: $f:expr, $run:expr) => {
        Entry { id: $id, anchor: $anchor, quick: $q, full: $f, run: $run }
    };
}

fn two_vars(p: &Params) -> Result<(usize, usize), CliError> {
    let v = p.vars(2)?;
    Ok((v[0], v[1]))
}

fn one_var(p: &Params) -> Result<usize, CliError> {
    Ok(p.vars(1)?[0])
}

fn euler_variant(s: &str) -> Result<EulerVariant, CliError> {
    match s {
        "standard" => Ok(EulerVariant::Standard),
        "q_inverse" => Ok(EulerVariant::QInverse),
        "modulus3n_seed" => Ok(EulerVariant::Modulus3nSeed),
        _ => Err(bad_choice("--variant", s, &["standard", "q_inverse", "modulus3n_seed"])),
    }
}

fn family(id: &'static str) -> Runner {
    match id {
        "family.3n+1" => |p| family_run(p, FamilyVariant::Plus),
        "family.3n-1" => |p| family_run(p, FamilyVariant::Minus),
        _ => |p| family_run(p, FamilyVariant::Zero),
    }
}

fn family_run(p: &Params, v: FamilyVariant) -> Result<VerifyReport, CliError> {
    Ok(rr::verify_modulus_family(p.index(1)?[0], v, p.degree()?, p.seed())?)
}

fn bounded_rows(p: &Params, rows: BoundedRows) -> Result<VerifyReport, CliError> {
    Ok(deformed::verify_bounded_rows(one_var(p)?, p.index(1)?[0], rows, p.points(), p.seed())?)
}

fn principal(p: &Params, form: PrincipalForm) -> Result<VerifyReport, CliError> {
    let dz = p.xdeg()? as usize;
    Ok(deformed::verify_principal_bounded(one_var(p)?, p.index(1)?[0], dz, form, p.points(), p.seed())?)
}

pub fn catalog() -> Vec<Entry> {
    vec![
        entry!("hl.strip", "single-variable strip coefficients phi/psi against symmetrized branching",
        quick: "--partition 3,1,1 --partition 1,1",
        full: "--partition 5,3,2,2 --partition 3,3,2",
        |p| {
            let l = p.partitions(2)?;
            Ok(strips::verify_strip_coefficients(&l[0], &l[1], p.seed())?)
        }),
        entry!("pid.main", "two-alphabet Hall-Littlewood sum equals the product kernel",
        quick: "--vars 2,2 -D 4",
        full: "--vars 3,2 -D 5",
        |p| {
            let (n, m) = two_vars(p)?;
            Ok(pid::verify_main(n, m, p.xdeg()?, p.seed())?)
        }),
        entry!("pid.cor1", "skew P_{lambda/nu} form of the two-alphabet sum",
        quick: "--partition 1 --vars 2,2 -D 4",
        full: "--partition 2 --vars 2,2 -D 5",
        |p| {
            let (n, m) = two_vars(p)?;
            Ok(pid::verify_cor1(&p.partitions(1)?[0], n, m, p.xdeg()?, p.seed())?)
        }),
        entry!("pid.cor2", "skew form with Q_{eta/mu}(x/q) on the product side",
        quick: "--partition 1 --partition 1 --vars 2,2 -D 4",
        full: "--partition 1,1 --partition 1 --vars 2,2 -D 4",
        |p| {
            let (n, m) = two_vars(p)?;
            let l = p.partitions(2)?;
            Ok(pid::verify_cor2(&l[0], &l[1], n, m, p.xdeg()?, p.seed())?)
        }),
        entry!("pid.genx", "two-alphabet sum with every y set to zero",
        quick: "--partition 1 --partition 1 --vars 2 -D 4",
        full: "--partition 2 --partition 1 --vars 3 -D 5",
        |p| {
            let l = p.partitions(2)?;
            Ok(pid::verify_genx(&l[0], &l[1], one_var(p)?, p.xdeg()?, p.seed())?)
        }),
        entry!("pid.cor3", "single-alphabet sum with a linear exponent correction",
            quick: "-k 1 --vars 2 -D 5",
            full: "-k 2 --vars 3 -D 6",
            |p| Ok(pid::verify_cor3(p.index(1)?[0], one_var(p)?, p.xdeg()?, p.seed())?)),
        entry!("hl.cauchy", "Cauchy identity for P and Q",
        quick: "--vars 2,2 -D 4",
        full: "--vars 3,3 -D 6",
        |p| {
            let (n, m) = two_vars(p)?;
            Ok(pid::verify_cauchy(n, m, p.xdeg()?, p.seed())?)
        }),
        entry!("hl.skew_cauchy", "skew Cauchy identity",
        quick: "--partition 1 --partition 1 --vars 2,2 -D 4",
        full: "--partition 2,1 --partition 1 --vars 2,2 -D 5",
        |p| {
            let (n, m) = two_vars(p)?;
            let l = p.partitions(2)?;
            Ok(pid::verify_skew_cauchy(&l[0], &l[1], n, m, p.xdeg()?, p.seed())?)
        }),
        entry!("hl.sqspec", "sum of skew Q_{lambda/mu} against the single-alphabet kernel",
            quick: "--partition 1 --vars 2 -D 4",
            full: "--partition 2,1 --vars 3 -D 5",
            |p| Ok(pid::verify_sqspec(&p.partitions(1)?[0], one_var(p)?, p.xdeg()?, p.seed())?)),
        entry!("hall.linear", "Hall's partition sum with a linear exponent correction, finite n or n = inf",
        quick: "-k 3,1 --vars 3",
        full: "-k 5,2 --vars 5",
        |p| {
            let kj = p.index(2)?;
            let n = match p.raw.variant.as_deref() {
                Some("inf") => None,
                Some("finite") | None => Some(one_var(p)?),
                Some(s) => return Err(bad_choice("--variant", s, &["finite", "inf"])),
            };
            Ok(hall::verify_hall(kj[0], kj[1], n, p.seed())?)
        }),
        entry!("cor4.pps", "bounded-length double sum equals a Pochhammer quotient",
        quick: "--vars 2,1 -D 3 -N 15",
        full: "--vars 3,2 -D 5 -N 30",
        |p| {
            let (n, m) = two_vars(p)?;
            let d = p.xdeg()?;
            Ok(bounded::verify_cor4(n, m, d, d, p.degree()?, p.seed())?)
        }),
        entry!("hua", "Cartan-form sum over partition tuples equals the positive-root product",
        quick: "-k 2 -D 2 -N 12",
        full: "-k 3 -D 4 -N 20",
        |p| {
            let rank = p.index(1)?[0];
            Ok(bounded::verify_hua(rank, &vec![p.xdeg()?; rank], p.degree()?, p.seed())?)
        }),
        entry!("lemma.inv", "invariance of the bounded A2 sum under the summation kernel",
        quick: "--bound 1,1 -D 2 -N 12",
        full: "--bound 1,1 -D 4 -N 25",
        |p| {
            let m = p.bound()?;
            let d = p.xdeg()?;
            Ok(bounded::verify_lemma_inv([m[0] as usize, m[1] as usize], d, d, p.degree()?, p.seed())?)
        }),
        entry!("bl.bailey", "two-parameter A2 transformation, random points or (a,b)-series",
        quick: "--bound 2,1 --strategy random_points --points 5",
        full: "--bound 3,2 --strategy random_points",
        |p| {
            let m = p.bound()?;
            match p.strategy()? {
                "random_points" => {
                    Ok(bailey::verify_bailey_points(m, Shift::zero(), ShiftRange::Extended, p.points(), p.seed())?)
                }
                "series" => Ok(bailey::verify_bailey_series(
                    m,
                    p.raw.xdeg.unwrap_or(3),
                    p.raw.degree.unwrap_or(12),
                    p.seed(),
                )?),
                s => Err(bad_choice("--strategy", s, &["random_points", "series"])),
            }
        }),
        entry!("bl.type2", "shifted form of the two-parameter transformation",
        quick: "--bound 2,1 --shift 1,0,-1 --variant extended --points 5",
        full: "--bound 3,2 --shift -2,1,1 --variant extended",
        |p| {
            let range = match p.variant()? {
                "extended" => ShiftRange::Extended,
                "literal" => ShiftRange::Literal,
                s => return Err(bad_choice("--variant", s, &["extended", "literal"])),
            };
            Ok(bailey::verify_bailey_points(p.bound()?, Shift::new(p.shift()?)?, range, p.points(), p.seed())?)
        }),
        entry!("bl.drie", "shifted transformation at a = b = 1 as rational functions of q",
            quick: "--bound 2,2 --shift 1,0,-1",
            full: "--bound 3,2 --shift 3,-1,-2",
            |p| Ok(bailey::verify_drie(p.bound()?, Shift::new(p.shift()?)?, p.seed())?)),
        entry!("euler.a2", "A2 Euler-type signed sum over the lattice equals a q-binomial",
            quick: "--bound 3,2 --variant standard",
            full: "--bound 6,6 --variant q_inverse",
            |p| Ok(bailey::verify_euler_a2(p.bound()?, euler_variant(p.variant()?)?, p.seed())?)),
        entry!("euler.it1", "Euler-transformed double sum against the hypergeometric double sum",
            quick: "--bound 2,2",
            full: "--bound 4,4",
            |p| Ok(bailey::verify_it1(p.bound()?, p.seed())?)),
        entry!("rr.a2", "A2 Rogers-Ramanujan: sum, transformed sum and modulus-7 product",
            quick: "-N 30",
            full: "-N 60",
            |p| Ok(rr::verify_rr_a2(p.degree()?, p.seed())?)),
        entry!("rr.classical", "both classical Rogers-Ramanujan identities",
            quick: "-N 30",
            full: "-N 60",
            |p| Ok(rr::verify_rr_classical(p.degree()?, p.seed())?)),
        entry!("macdonald.a2", "A2 Macdonald identity specialized to a single q-series",
        quick: "-N 40 --variant modulus7",
        full: "-N 80 --variant modulus7",
        |p| {
            let instance = match p.variant()? {
                "modulus7" => MacdonaldInstance::Modulus7,
                "general" => MacdonaldInstance::General(p.index(1)?[0] as i64),
                s => return Err(bad_choice("--variant", s, &["modulus7", "general"])),
            };
            Ok(rr::verify_macdonald_a2(p.degree()?, instance, p.seed())?)
        }),
        entry!("vandermonde.a2", "three-variable alternating sum equals the Vandermonde product",
            quick: "",
            full: "",
            |p| Ok(rr::verify_vandermonde(p.seed())?)),
        entry!("family.3n+1", "pair sum with bounded lengths against a modulus 3n+1 product",
            quick: "-k 2 -N 25",
            full: "-k 3 -N 40",
            family("family.3n+1")),
        entry!("family.3n-1", "pair sum with bounded lengths against a modulus 3n-1 product",
            quick: "-k 2 -N 25",
            full: "-k 3 -N 40",
            family("family.3n-1")),
        entry!("family.3n", "pair sum with bounded lengths against a modulus 3n product",
            quick: "-k 2 -N 25",
            full: "-k 3 -N 40",
            family("family.3n")),
        entry!("proof.psiphi", "strip sums over nu containing mu against strips under lambda",
        quick: "--partition 2,1 --partition 1 -D 3",
        full: "--partition 2,2 --partition 2,1 -D 4",
        |p| {
            let l = p.partitions(2)?;
            Ok(proof::verify_psiphi(&l[0], &l[1], p.xdeg()? as usize, p.seed())?)
        }),
        entry!("proof.lemma41", "strip sum with a prescribed column pattern in closed form",
            quick: "--partition 2,2,1 --mask 01 -D 3",
            full: "--partition 3,1,1 --mask 101 -D 4",
            |p| Ok(proof::verify_lemma41(&p.partitions(1)?[0], p.mask()?, p.xdeg()? as usize, p.seed())?)),
        entry!("proof.ab2", "two-alphabet Laurent identity with Pell-number term counts",
        quick: "-k 3 --variant with_k_in_i",
        full: "-k 6 --variant with_k_in_i",
        |p| {
            let conv = match p.variant()? {
                "with_k_in_i" => AbConvention::WithKInI,
                "without" => AbConvention::Without,
                s => return Err(bad_choice("--variant", s, &["with_k_in_i", "without"])),
            };
            Ok(proof::verify_ab2(p.index(1)?[0], conv, p.seed())?)
        }),
        entry!("s6.npsom2", "(q,t) single-alphabet sum, checked in its q = 0 reduction",
        quick: "--vars 2 -D 4 --variant q0",
        full: "--vars 3 -D 5 --variant q0",
        |p| {
            let r = match p.variant()? {
                "q0" => DeformedReduction::QZero,
                "full" => DeformedReduction::Full,
                s => return Err(bad_choice("--variant", s, &["q0", "full"])),
            };
            Ok(deformed::verify_deformed_sum(one_var(p)?, p.xdeg()?, r, p.seed())?)
        }),
        entry!("s6.psiqt", "(q,t) strip sum over nu containing mu",
        quick: "--partition 1 -D 3 --points 5 --strategy symbolic",
        full: "--partition 2,1 -D 4 --strategy random_points",
        |p| {
            let symbolic = match p.strategy()? {
                "symbolic" => true,
                "random_points" => false,
                s => return Err(bad_choice("--strategy", s, &["random_points", "symbolic"])),
            };
            let mu = &p.partitions(1)?[0];
            Ok(deformed::verify_deformed_strips(mu, p.xdeg()? as usize, p.points(), symbolic, p.seed())?)
        }),
        entry!("s6.an_ext", "chained sum with principally specialized inner alphabets",
            quick: "-k 3 -D 3 -N 8",
            full: "-k 4 -D 4 -N 15",
            |p| Ok(deformed::verify_rank_extension(p.index(1)?[0], p.xdeg()?, p.degree()?, p.seed())?)),
        entry!("s6.a3", "three-alphabet chain with specialized outer alphabets",
            quick: "-D 3 -N 8",
            full: "-D 4 -N 15",
            |p| Ok(deformed::verify_a3(p.xdeg()?, p.degree()?, p.seed())?)),
        entry!("s6.stem", "sum of P_{2 lambda} with lambda_1 <= k against a signed kernel sum",
            quick: "--vars 2 -k 2 --points 5",
            full: "--vars 3 -k 3",
            |p| bounded_rows(p, BoundedRows::Even)),
        entry!("s6.md", "sum of P_lambda with lambda_1 <= k against a signed kernel sum",
            quick: "--vars 2 -k 2 --points 5",
            full: "--vars 3 -k 3",
            |p| bounded_rows(p, BoundedRows::All)),
        entry!("s6.thmpf", "row-bounded single-alphabet sum as a sum over subsets",
            quick: "--vars 2 -k 2 --points 5",
            full: "--vars 4 -k 4",
            |p| Ok(deformed::verify_subset_sum(one_var(p)?, p.index(1)?[0], p.points(), p.seed())?)),
        entry!("s6.st", "row-bounded sum at x_i = z q^(i-1), closed-form side",
            quick: "--vars 3 -k 2 -D 4",
            full: "--vars 4 -k 2 -D 6",
            |p| principal(p, PrincipalForm::ClosedForm)),
        entry!("s6.st2", "row-bounded sum at x_i = z q^(i-1) through branching, with the subset form",
            quick: "--vars 3 -k 2 -D 4 --points 5",
            full: "--vars 4 -k 2 -D 6",
            |p| principal(p, PrincipalForm::Branching)),
        entry!("s6.fulman", "n -> inf limit of the row-bounded sum at z = q or q^2",
        quick: "-k 1,1 -N 20",
        full: "-k 2,2 -N 30",
        |p| {
            let ks = p.index(2)?;
            Ok(deformed::verify_limit(ks[0], ks[1] as i64, p.degree()?, p.seed())?)
        }),
    ]
}

pub fn find(id: &str) -> Option<Entry> {
    catalog().into_iter().find(|e| e.id == id)
}
