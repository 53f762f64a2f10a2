//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout; the
//! process exits non-zero if any criterion fails.

use octoeig::random;
use octoeig::spectral::eigensystem;
use octoeig::verify::{self, sample_rng, CheckSet};
use octoeig::{Hermitian3, MatrixClassTag, DEFAULT_TOLERANCE};

const TOL: f64 = DEFAULT_TOLERANCE;

struct Outcome {
    pass: bool,
    detail: String,
}

fn summarize(set: &CheckSet) -> Outcome {
    let worst = set
        .checks
        .iter()
        .filter(|c| c.bound == verify::Bound::Upper)
        .max_by(|a, b| (a.residual / a.tolerance.max(1e-300)).total_cmp(&(b.residual / b.tolerance.max(1e-300))));
    let failed: Vec<&str> = set.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let mut detail = match worst {
        Some(c) => format!("{} checks, worst '{}' {:.2e} (tol {:.0e})", set.checks.len(), c.name, c.residual, c.tolerance),
        None => format!("{} checks", set.checks.len()),
    };
    if !failed.is_empty() {
        detail.push_str(&format!("; failed: {}", failed.join(", ")));
    }
    for e in &set.errors {
        detail.push_str(&format!("; error: {e}"));
    }
    Outcome { pass: set.pass() && !set.checks.is_empty(), detail }
}

fn octonionic(seed: u64, i: u64) -> (Hermitian3, random::SampleRng) {
    let mut rng = sample_rng(seed, i);
    let a = random::hermitian(&mut rng, MatrixClassTag::Octonionic);
    (a, rng)
}

fn algebra() -> Outcome {
    let mut set = CheckSet::new();
    let mut rng = sample_rng(1, 0);
    for _ in 0..10_000 {
        let p = random::octonion(&mut rng);
        let q = random::octonion(&mut rng);
        verify::algebra_checks(&mut set, &p, &q);
    }
    summarize(&set)
}

/// Runs `f` on `n` random octonionic matrices together with their
/// eigensystems.
fn with_systems(
    seed: u64,
    n: u64,
    mut f: impl FnMut(&mut CheckSet, &mut random::SampleRng, &Hermitian3, &octoeig::EigenSystem),
) -> Outcome {
    let mut set = CheckSet::new();
    for i in 0..n {
        let (a, mut rng) = octonionic(seed, i);
        match eigensystem(&a) {
            Ok(sys) => f(&mut set, &mut rng, &a, &sys),
            Err(e) => set.error(&format!("sample {i}"), e),
        }
    }
    summarize(&set)
}

fn with_matrices(seed: u64, n: u64, mut f: impl FnMut(&mut CheckSet, &mut random::SampleRng, &Hermitian3)) -> Outcome {
    let mut set = CheckSet::new();
    for i in 0..n {
        let (a, mut rng) = octonionic(seed, i);
        f(&mut set, &mut rng, &a);
    }
    summarize(&set)
}

fn basis_invariance() -> Outcome {
    let mut set = CheckSet::new();
    for i in 0..100 {
        let (a, mut rng) = octonionic(10, i);
        verify::basis_invariance_checks(&mut set, &mut rng, &a, TOL);
    }
    let mut out = summarize(&set);
    let both = set.get("det M > 0: s₁, s₂ unchanged").is_some() && set.get("det M < 0: s₁ ↔ s₂").is_some();
    if !both {
        out.pass = false;
        out.detail.push_str("; only one sign of det M was sampled");
    }
    out
}

fn negative_control() -> Outcome {
    const NAME: &str = "K diagonal: K[x] matrix form = componentwise K";
    let mut clean = CheckSet::new();
    let mut corrupted = CheckSet::new();
    for i in 0..100 {
        let (a, mut rng) = octonionic(12, i);
        let mut twin = rng.clone();
        verify::k_checks(&mut clean, &mut rng, &a, TOL, 0.0);
        let mut one = CheckSet::new();
        verify::k_checks(&mut one, &mut twin, &a, TOL, 1e-3);
        let r = one.get(NAME).map_or(0.0, |c| c.residual);
        // every corrupted sample must be caught, not just the worst one
        corrupted.record_at_least("corrupted residual", r, TOL);
    }
    let clean_check = clean.get(NAME).expect("recorded");
    let caught = corrupted.get("corrupted residual").expect("recorded");
    Outcome {
        pass: clean_check.pass && caught.pass,
        detail: format!(
            "intact det: worst {:.2e}; det + 1e-3: smallest {:.2e} (tol {:.0e}), flagged in {}/{} samples",
            clean_check.residual,
            caught.residual,
            TOL,
            if caught.pass { caught.samples } else { 0 },
            caught.samples
        ),
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("algebra: |pq| = |p||q| and alternativity on 10000 pairs", Box::new(algebra)),
        (
            "root identities on 500 matrices",
            Box::new(|| with_systems(2, 500, |set, _, a, sys| verify::root_checks(set, a, sys, TOL))),
        ),
        (
            "K identities on 100 (A, p, q)",
            Box::new(|| with_matrices(3, 100, |set, rng, a| verify::k_checks(set, rng, a, TOL, 0.0))),
        ),
        (
            "projector algebra on 100 (A, p)",
            Box::new(|| with_matrices(4, 100, |set, rng, a| verify::projector_checks(set, rng, a, TOL))),
        ),
        (
            "eigendecompositions of 200 matrices",
            Box::new(|| with_systems(5, 200, |set, _, a, sys| verify::decomposition_checks(set, a, sys, TOL))),
        ),
        (
            "generalized projector idempotence on 200 matrices",
            Box::new(|| {
                with_systems(6, 200, |set, rng, a, sys| verify::idempotence_checks(set, rng, a, sys, TOL))
            }),
        ),
        (
            "six-way projection of 200 (A, x)",
            Box::new(|| {
                with_systems(7, 200, |set, rng, a, sys| {
                    verify::six_way_checks(set, rng, a, sys, TOL);
                })
            }),
        ),
        (
            "r = λμν − det A on 100 orthonormal triples",
            Box::new(|| {
                // each matrix contributes one triple per family
                with_systems(8, 50, |set, rng, _, sys| verify::family_relation_checks(set, rng, sys, TOL))
            }),
        ),
        (
            "quaternionic path on 100 matrices",
            Box::new(|| {
                let mut set = CheckSet::new();
                for i in 0..100 {
                    verify::quaternionic_checks(&mut set, &mut sample_rng(9, i), TOL);
                }
                summarize(&set)
            }),
        ),
        ("basis invariance under 100 real changes", Box::new(basis_invariance)),
        (
            "component identities of yy† and [v, v†, v] = 0 on 100 matrices",
            Box::new(|| with_matrices(11, 100, |set, rng, a| verify::component_identity_checks(set, rng, a, TOL))),
        ),
        ("negative control: det + 1e-3 breaks K diagonality", Box::new(negative_control)),
    ];

    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let out = run();
        if !out.pass {
            failures += 1;
        }
        println!("{} {:>2} {}: {}", if out.pass { "PASS" } else { "FAIL" }, i + 1, title, out.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
