//! Randomized identity suites and the run reports built from them.
//!
//! Every suite records residuals into a [`CheckSet`] under a name that spells
//! out the identity being checked. A check keeps the worst residual seen
//! over all samples. Residuals are relative: each suite divides by the
//! natural scale of the quantities involved (operand norms, powers of
//! `1 + ‖A‖` for polynomial expressions in `A`).
//!
//! Sample `i` of a run with seed `s` draws from the ChaCha8 stream seeded
//! with `s` and switched to stream number `i`, so samples are independent of
//! each other and of the sample count.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::hermitian::{Hermitian3, MatrixClassTag};
use crate::octonion::{assoc3form, associator, Octonion};
use crate::projection::{quaternionic_six_way_with, six_way_with, SixWayDecomposition};
use crate::random::{self, SampleRng};
use crate::spectral::{
    eigensystem, family_dimension_probe, k_vector, k_vector_with_det, same_family, t_m_basis,
    EigenSystem, FamilyEigen, SpectralPath,
};
use crate::subspace::{
    basis_invariance_check, cd_table_check, k_scalar, r_roots, FamilyContext, TBasis,
};
use crate::vector::OctVector3;

/// Tolerance for the octonion algebra checks, relative to operand norms.
pub const ALGEBRA_TOLERANCE: f64 = 1e-12;

/// Lower bound used when a check asserts that a quantity stays away from 0.
pub const SEPARATION_BOUND: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Passes when `residual ≤ tolerance`.
    Upper,
    /// Passes when `residual ≥ tolerance`.
    Lower,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Worst value over all samples: the largest for upper bounds, the
    /// smallest for lower bounds.
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub samples: usize,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, value: f64, tolerance: f64, bound: Bound) -> Check {
        let mut c = Check { name: name.to_owned(), residual: value, tolerance, bound, samples: 1, pass: false };
        c.pass = c.evaluate();
        c
    }

    fn evaluate(&self) -> bool {
        match self.bound {
            Bound::Upper => self.residual <= self.tolerance,
            Bound::Lower => self.residual >= self.tolerance,
        }
    }

    fn absorb(&mut self, value: f64) {
        self.samples += 1;
        // NaN must never look like a pass
        let worse = match self.bound {
            Bound::Upper => value.is_nan() || value > self.residual,
            Bound::Lower => value.is_nan() || value < self.residual,
        };
        if worse && !self.residual.is_nan() {
            self.residual = value;
        }
        self.pass = self.evaluate();
    }
}

/// Checks in first-recorded order, merged by name.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckSet {
    pub checks: Vec<Check>,
    /// Samples that could not be processed, with the reason.
    pub errors: Vec<String>,
}

impl CheckSet {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, name: &str, value: f64, tolerance: f64, bound: Bound) {
        match self.checks.iter_mut().find(|c| c.name == name) {
            Some(c) => c.absorb(value),
            None => self.checks.push(Check::new(name, value, tolerance, bound)),
        }
    }

    /// Records a residual that must stay at or below `tolerance`.
    pub fn record(&mut self, name: &str, residual: f64, tolerance: f64) {
        self.push(name, residual, tolerance, Bound::Upper);
    }

    /// Records a value that must stay at or above `bound`.
    pub fn record_at_least(&mut self, name: &str, value: f64, bound: f64) {
        self.push(name, value, bound, Bound::Lower);
    }

    pub fn error(&mut self, context: &str, err: impl std::fmt::Display) {
        self.errors.push(format!("{context}: {err}"));
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn pass(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    /// Worst ratio `residual / tolerance` over upper-bound checks.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.bound == Bound::Upper)
            .map(|c| c.residual / c.tolerance)
            .fold(0.0, f64::max)
    }

    pub fn extend(&mut self, other: CheckSet) {
        for c in other.checks {
            match self.checks.iter_mut().find(|d| d.name == c.name) {
                Some(d) => {
                    let samples = d.samples + c.samples - 1;
                    d.absorb(c.residual);
                    d.samples = samples;
                }
                None => self.checks.push(c),
            }
        }
        self.errors.extend(other.errors);
    }

    /// Fixed-width table, one row per check.
    pub fn table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(5).max(5);
        let mut out = format!("{:<width$}  {:>10}  {:>10}  {:>7}  result\n", "check", "worst", "tolerance", "samples");
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            let tol = match c.bound {
                Bound::Upper => format!("≤{:.1e}", c.tolerance),
                Bound::Lower => format!("≥{:.1e}", c.tolerance),
            };
            out.push_str(&format!(
                "{}{}  {:>10.3e}  {:>10}  {:>7}  {}\n",
                c.name,
                " ".repeat(pad),
                c.residual,
                tol,
                c.samples,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
        for e in &self.errors {
            out.push_str(&format!("error: {e}\n"));
        }
        out
    }
}

/// Machine-readable record of one command invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
    #[serde(default)]
    pub errors: Vec<String>,
    pub seed: Option<u64>,
    pub pass: bool,
}

impl RunReport {
    pub fn new(command: &str, seed: Option<u64>, inputs: Value, outputs: Value, set: CheckSet) -> Self {
        let pass = set.pass();
        RunReport {
            command: command.to_owned(),
            inputs,
            outputs,
            checks: set.checks,
            errors: set.errors,
            seed,
            pass,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn table(&self) -> String {
        CheckSet { checks: self.checks.clone(), errors: self.errors.clone() }.table()
    }
}

/// Scale of cubic expressions in `A`.
fn cubic_scale(a: &Hermitian3) -> f64 {
    (1.0 + a.frobenius()).powi(3)
}

fn linear_scale(a: &Hermitian3) -> f64 {
    1.0 + a.frobenius()
}

/// Independent sampling stream for sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> SampleRng {
    let mut rng = random::rng_from_seed(seed);
    rng.set_stream(index);
    rng
}

/// Random element of 𝕋ₘ.
fn random_in_family<R: Rng + ?Sized>(rng: &mut R, a: &Hermitian3, ctx: &FamilyContext) -> Octonion {
    ctx.project(a, &random::octonion(rng))
}

/// Random vector in `(𝕋ₘ)³`.
fn random_family_vector<R: Rng + ?Sized>(rng: &mut R, a: &Hermitian3, ctx: &FamilyContext) -> OctVector3 {
    random::vector(rng).map(|p| ctx.project(a, &p))
}

fn contexts(sys: &EigenSystem) -> Vec<(FamilyContext, &FamilyEigen)> {
    sys.families.iter().filter_map(|f| f.context.map(|c| (c, f))).collect()
}

/// Composition, alternativity and conjugation on one pair.
pub fn algebra_checks(set: &mut CheckSet, p: &Octonion, q: &Octonion) {
    let tol = ALGEBRA_TOLERANCE;
    let (np, nq) = (p.norm(), q.norm());
    let scale = (np * nq).max(f64::MIN_POSITIVE);
    set.record("|pq| = |p||q|", ((*p * *q).norm() - np * nq).abs() / scale, tol);
    set.record(
        "alternativity (pp)q = p(pq), (pq)q = p(qq)",
        associator(p, p, q).norm().max(associator(p, q, q).norm()) / (scale * np.max(nq).max(f64::MIN_POSITIVE)),
        tol,
    );
    set.record("conj(pq) = conj(q)conj(p)", ((*p * *q).conj() - q.conj() * p.conj()).norm() / scale, tol);
    set.record(
        "Φ(1, p, q) = 0",
        assoc3form(&Octonion::ONE, &p.im(), q).abs() / scale,
        tol,
    );
}

/// Roots of the `r` quadratic and the per-family eigenvalue cubics.
pub fn root_checks(set: &mut CheckSet, a: &Hermitian3, sys: &EigenSystem, tolerance: f64) {
    let phi = a.phi();
    let alpha_sq = a.alpha().norm_sqr();
    let scale = cubic_scale(a);
    match r_roots(a) {
        Ok((r1, r2)) => {
            set.record("r₁ + r₂ = −4Φ", (r1 + r2 + 4.0 * phi).abs() / scale, tolerance);
            set.record("r₁r₂ = −|α|²", (r1 * r2 + alpha_sq).abs() / (scale * scale), tolerance);
            for r in [r1, r2] {
                set.record("r² + 4Φr − |α|² = 0", (r * r + 4.0 * phi * r - alpha_sq).abs() / (scale * scale), tolerance);
            }
        }
        Err(e) => set.error("r roots", e),
    }
    for f in &sys.families {
        set.record("Σλ = tr A", f.residuals.trace / linear_scale(a), tolerance);
        set.record("Σ λᵢλⱼ = σ(A)", f.residuals.sigma / linear_scale(a).powi(2), tolerance);
        set.record("λ₁λ₂λ₃ = det A + r", f.residuals.product / scale, tolerance);
    }
    set.record(
        "σ(A) closed form = ((tr A)² − tr(A²))/2 via the realified square",
        (a.sigma() - a.sigma_from_square()).abs() / linear_scale(a).powi(2),
        tolerance,
    );
}

/// Identities of the characteristic operator `K`. `det_offset` perturbs the
/// determinant used in the matrix form of `K`; it is zero except in the
/// negative control.
pub fn k_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, a: &Hermitian3, tolerance: f64, det_offset: f64) {
    let scale = cubic_scale(a);
    let x = random::vector(rng);
    let matrix_form = k_vector_with_det(a, a.det() + det_offset, &x);
    let scalar_form = x.map(|p| k_scalar(a, &p));
    set.record(
        "K diagonal: K[x] matrix form = componentwise K",
        (matrix_form - scalar_form).norm() / (scale * x.norm()),
        tolerance,
    );

    let phi = a.phi();
    let alpha = a.alpha();
    let p = random::octonion(rng);
    let q = random::octonion(rng);
    let kp = k_scalar(a, &p);
    let kkp = k_scalar(a, &kp);
    set.record(
        "K² + 4ΦK − |α|² = 0",
        (kkp + kp * (4.0 * phi) - p * alpha.norm_sqr()).norm() / (scale * scale * p.norm()),
        tolerance,
    );
    set.record(
        "⟨K[p], q⟩ = ⟨p, K[q]⟩",
        (kp.inner(&q) - p.inner(&k_scalar(a, &q))).abs() / (scale * p.norm() * q.norm()),
        tolerance,
    );

    let t_basis = TBasis::new(a);
    let t: Octonion = t_basis.vectors.iter().map(|v| *v * rng.random_range(-1.0..=1.0)).sum();
    if t.norm() > 0.0 {
        set.record("K[t] = tα on 𝕋", (k_scalar(a, &t) - t * alpha).norm() / (scale * t.norm()), tolerance);
        let u = t * alpha;
        if u.norm() > 0.0 {
            let expected = -(u * (alpha + Octonion::real(4.0 * phi)));
            set.record(
                "K[u] = −u(α + 4Φ) on 𝕋α",
                (k_scalar(a, &u) - expected).norm() / (scale * u.norm()),
                tolerance,
            );
        }
    }
}

/// Family projectors `Kₘ`, the elements `sₘ` and the subspaces `𝕋ₘ`.
pub fn projector_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, a: &Hermitian3, tolerance: f64) {
    let [c1, c2] = match FamilyContext::pair(a) {
        Ok(p) => p,
        Err(e) => return set.error("family contexts", e),
    };
    let p = random::octonion(rng);
    let np = p.norm();
    let k1 = c1.project(a, &p);
    let k2 = c2.project(a, &p);
    set.record("K₁ + K₂ = 1", (k1 + k2 - p).norm() / np, tolerance);
    set.record(
        "K₁K₂ = K₂K₁ = 0",
        c1.project(a, &k2).norm().max(c2.project(a, &k1).norm()) / np,
        tolerance,
    );
    set.record(
        "Kₘ² = Kₘ",
        (c1.project(a, &k1) - k1).norm().max((c2.project(a, &k2) - k2).norm()) / np,
        tolerance,
    );
    // s₂ straight from its defining formula rather than as 1 − s₁
    let s2 = (Octonion::real(c2.r + 4.0 * c2.phi) + c2.alpha) / (2.0 * (c2.r + 2.0 * c2.phi));
    set.record("s₁ + s₂ = 1", (c1.s + s2 - Octonion::ONE).norm(), tolerance);

    let alpha = a.alpha();
    let t1 = t_m_basis(a, &c1);
    let t2 = t_m_basis(a, &c2);
    let t1_alpha = TBasis::span(&t1.vectors.iter().map(|v| *v * alpha).collect::<Vec<_>>());
    let spans_differ = t1_alpha
        .vectors
        .iter()
        .map(|v| t2.distance(v))
        .chain(t2.vectors.iter().map(|v| t1_alpha.distance(v)))
        .fold(0.0, f64::max);
    let dims_differ = t1_alpha.dim().abs_diff(t2.dim()) as f64;
    set.record("𝕋₂ = 𝕋₁α", spans_differ.max(dims_differ), tolerance);
}

/// Structure of 𝕋 and the product rules on 𝕋 ⊕ 𝕋α.
pub fn subspace_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, a: &Hermitian3, tolerance: f64) {
    let alpha = a.alpha();
    let t = TBasis::new(a);
    let t_alpha = TBasis::span(&t.vectors.iter().map(|v| *v * alpha).collect::<Vec<_>>());
    let gram = t
        .vectors
        .iter()
        .flat_map(|u| t_alpha.vectors.iter().map(move |w| u.inner(w).abs()))
        .fold(0.0, f64::max);
    let dims = (t.dim() + t_alpha.dim()).abs_diff(8) as f64;
    set.record("𝕋⊥ = 𝕋α", gram.max(dims), tolerance);

    let coeff = |rng: &mut R| -> Octonion {
        t.vectors.iter().map(|v| *v * rng.random_range(-1.0..=1.0)).sum()
    };
    let (t1, t2) = (coeff(rng), coeff(rng));
    let scale = (t1.norm() * t2.norm() * (1.0 + alpha.norm()).powi(2)).max(f64::MIN_POSITIVE);
    let [r1, r2, r3] = cd_table_check(a, &t1, &t2);
    set.record("t₁(t₂α) = (t₂t₁)α", r1 / scale, tolerance);
    set.record("(t₁α)t₂ = (t₁t̄₂)α", r2 / scale, tolerance);
    set.record("(t₁α)(t₂α) = −t̄₂t₁|α|²", r3 / scale, tolerance);

    if let Ok(ctxs) = FamilyContext::pair(a) {
        for ctx in &ctxs {
            let p = random_in_family(rng, a, ctx);
            let q = random_in_family(rng, a, ctx);
            let pq = p * q.conj();
            set.record("p q̄ ∈ 𝕋 for p, q ∈ 𝕋ₘ", t.distance(&pq) / (p.norm() * q.norm()), tolerance);
        }
    }
}

/// Per-family eigendecomposition identities.
pub fn decomposition_checks(set: &mut CheckSet, a: &Hermitian3, sys: &EigenSystem, tolerance: f64) {
    decomposition_checks_named(set, a, sys, tolerance, "");
}

fn decomposition_checks_named(set: &mut CheckSet, a: &Hermitian3, sys: &EigenSystem, tolerance: f64, prefix: &str) {
    let ls = linear_scale(a);
    for f in &sys.families {
        let r = &f.residuals;
        set.record(&format!("{prefix}Av = λv"), r.eigen / ls, tolerance);
        set.record(&format!("{prefix}K[v] = rₘv"), r.k_eigen / cubic_scale(a), tolerance);
        set.record(&format!("{prefix}v†v = 1"), r.normalization, tolerance);
        set.record(&format!("{prefix}𝕀 = Σ vₘvₘ†"), r.identity, tolerance);
        set.record(&format!("{prefix}A = Σ λₘ vₘvₘ†"), r.matrix / ls, tolerance);
        set.record(&format!("{prefix}(uₘuₘ†)vₘ = 0 for distinct eigenvectors"), r.orthogonality, tolerance);
        set.record(&format!("{prefix}three eigenvectors per family"), f.eigenvectors.len().abs_diff(3) as f64, 0.0);
    }
    let full = a.realify24().symmetric_eigenvalues();
    let mut full: Vec<f64> = full.iter().copied().collect();
    full.sort_by(f64::total_cmp);
    // each eigenvalue fills 24 / (number of eigenvalues) real dimensions
    let values = sys.eigenvalues();
    let copies = 24 / values.len().max(1);
    let mut ours: Vec<f64> = values.iter().flat_map(|&l| std::iter::repeat_n(l, copies)).collect();
    ours.sort_by(f64::total_cmp);
    let spectrum = if full.len() == ours.len() {
        full.iter().zip(&ours).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max) / ls
    } else {
        f64::INFINITY
    };
    set.record(&format!("{prefix}spectrum of the realified A = family eigenvalues with multiplicity"), spectrum, tolerance);
}

/// Idempotence of the generalized projectors.
pub fn idempotence_checks<R: Rng + ?Sized>(
    set: &mut CheckSet,
    rng: &mut R,
    a: &Hermitian3,
    sys: &EigenSystem,
    tolerance: f64,
) {
    for (ctx, fam) in contexts(sys) {
        for v in &fam.eigenvectors {
            let y = random_family_vector(rng, a, &ctx);
            let once = v.outer_apply(&y);
            let twice = v.outer_apply(&once);
            set.record(
                "(vv†)((vv†)y) = (v†v)(vv†)y for eigenvectors v, K[y] = rv",
                (twice - once * v.norm_sqr()).norm() / y.norm(),
                tolerance,
            );
        }
        let y = match random_family_vector(rng, a, &ctx).normalized() {
            Some(y) => y,
            None => continue,
        };
        let z = random_family_vector(rng, a, &ctx);
        let once = y.outer_apply(&z);
        let twice = y.outer_apply(&once);
        set.record(
            "(yy†)((yy†)z) = (y†y)(yy†)z for K[y] = ry, K[z] = rz",
            (twice - once * y.norm_sqr()).norm() / z.norm(),
            tolerance,
        );
        match same_family(&y, &z, tolerance) {
            Ok(true) => set.record("same_family accepts w in the family of u", 0.0, 0.0),
            Ok(false) => set.record("same_family accepts w in the family of u", 1.0, 0.0),
            Err(e) => set.error("same_family", e),
        }
    }
}

/// Six-way decomposition of `x` and `y`, including linearity.
pub fn six_way_checks<R: Rng + ?Sized>(
    set: &mut CheckSet,
    rng: &mut R,
    a: &Hermitian3,
    sys: &EigenSystem,
    tolerance: f64,
) -> SixWayDecomposition {
    let x = random::vector(rng);
    let y = random::vector(rng);
    let dx = six_way_with(a, sys, &x);
    let dy = six_way_with(a, sys, &y);
    let dxy = six_way_with(a, sys, &(x + y));
    six_way_part_checks(set, a, sys, &dx, tolerance, "");
    let linearity = dx
        .parts
        .iter()
        .zip(&dy.parts)
        .zip(&dxy.parts)
        .map(|((p, q), s)| (p.component + q.component - s.component).norm())
        .fold(0.0, f64::max);
    set.record("six_way(x + y) = six_way(x) + six_way(y)", linearity / (x.norm() + y.norm()), tolerance);
    dx
}

/// Reconstruction and per-part eigenvector residuals of a decomposition.
pub fn decomposition_result_checks(
    set: &mut CheckSet,
    a: &Hermitian3,
    d: &SixWayDecomposition,
    tolerance: f64,
    prefix: &str,
) {
    let nx = d.input.norm().max(f64::MIN_POSITIVE);
    set.record(&format!("{prefix}x = Σ parts"), d.reconstruction_residual / nx, tolerance);
    set.record(&format!("{prefix}A·part = λ·part"), d.max_eigen_residual() / (nx * linear_scale(a)), tolerance);
}

fn six_way_part_checks(
    set: &mut CheckSet,
    a: &Hermitian3,
    sys: &EigenSystem,
    d: &SixWayDecomposition,
    tolerance: f64,
    prefix: &str,
) {
    let nx = d.input.norm();
    decomposition_result_checks(set, a, d, tolerance, prefix);
    set.record(&format!("{prefix}six parts"), d.nonzero_parts().count().abs_diff(6) as f64, 0.0);
    let k = d
        .parts
        .iter()
        .filter_map(|p| sys.family(p.family).map(|f| (k_vector(a, &p.component) - p.component * f.r).norm()))
        .fold(0.0, f64::max);
    set.record(&format!("{prefix}K[part] = rₘ·part"), k / (nx * cubic_scale(a)), tolerance);
}

/// For orthonormal eigenvectors `u, v, w` of one family and arbitrary
/// `λ, μ, ν`, `B = λuu† + μvv† + νww†` satisfies `K_B = λμν − det B` on
/// each of them. Includes the rank-one case `B = vv†`.
pub fn family_relation_checks<R: Rng + ?Sized>(
    set: &mut CheckSet,
    rng: &mut R,
    sys: &EigenSystem,
    tolerance: f64,
) {
    for fam in &sys.families {
        if fam.eigenvectors.len() != 3 {
            continue;
        }
        let l: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let b = fam
            .eigenvectors
            .iter()
            .zip(l)
            .fold(Hermitian3::default(), |acc, (v, x)| acc + v.outer() * x);
        let r = l[0] * l[1] * l[2] - b.det();
        let scale = cubic_scale(&b);
        for (v, x) in fam.eigenvectors.iter().zip(l) {
            set.record("Bv = λv for B = Σ λ vv†", (b.mat_vec(v) - *v * x).norm() / linear_scale(&b), tolerance);
            set.record("r = λμν − det A", (k_vector(&b, v) - *v * r).norm() / scale, tolerance);
        }
        let v = fam.eigenvectors[0];
        let p = v.outer();
        set.record("A = vv†: Av = (v†v)v", (p.mat_vec(&v) - v * v.norm_sqr()).norm(), tolerance);
        set.record(
            "A = vv†: K[v] = −(det A)v",
            (k_vector(&p, &v) + v * p.det()).norm() / cubic_scale(&p),
            tolerance,
        );
    }
}

/// Component identities of `yy†` for `y ∈ (𝕋ₘ)³`, and the vector
/// associator `[v, v†, v] = 0` for arbitrary `v`.
pub fn component_identity_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, a: &Hermitian3, tolerance: f64) {
    let v = random::vector(rng);
    set.record(
        "[v, v†, v] = (vv†)v − v(v†v) = 0",
        (v.outer_apply(&v) - v * v.norm_sqr()).norm() / v.norm().powi(3),
        tolerance,
    );
    let Ok(ctxs) = FamilyContext::pair(a) else { return };
    for ctx in &ctxs {
        let Some(y) = random_family_vector(rng, a, ctx).normalized() else { continue };
        let z = random_family_vector(rng, a, ctx);
        let q = random_in_family(rng, a, ctx);
        let yy = y.outer();
        // yy† = [[d₁, t₃, t̄₂], [t̄₃, d₂, t₁], [t₂, t̄₁, d₃]]
        let d = [yy.d, yy.e, yy.f];
        let t = [yy.c, yy.b, yy.a];
        let (zn, qn) = (z.norm(), q.norm());
        for k in 0..3 {
            // indices (i, j, l) cycle through (0, 1, 2)
            let (i, j, l) = (k, (k + 1) % 3, (k + 2) % 3);
            set.record("dᵢdⱼ = |tₗ|² (cyclic)", (d[i] * d[j] - t[l].norm_sqr()).abs(), tolerance);
            set.record("t₃ = y₁ȳ₂ (cyclic)", (t[l] - y[i] * y[j].conj()).norm(), tolerance);
            let chain = t[j] * (t[l] * y[j]);
            set.record(
                "t₂(t₃y₂) = y₃|y₁|²|y₂|² = d₁t̄₁y₂ (cyclic)",
                (chain - y[l] * (d[i] * d[j])).norm().max((chain - t[i].conj() * y[j] * d[i]).norm()),
                tolerance,
            );
            set.record(
                "t₂(t₃z₂) = d₁t̄₁z₂ (cyclic)",
                (t[j] * (t[l] * z[j]) - t[i].conj() * z[j] * d[i]).norm() / zn,
                tolerance,
            );
            set.record(
                "t̄₁(t̄₃q) = d₂t₂q (cyclic)",
                (t[i].conj() * (t[l].conj() * q) - t[j] * q * d[j]).norm() / qn,
                tolerance,
            );
        }
    }
}

/// Invariance of `s₁, s₂` under real changes of the off-diagonal basis.
pub fn basis_invariance_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, a: &Hermitian3, tolerance: f64) {
    let change = random::invertible_change(rng, 0.1);
    let shifts: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
    let m = &change;
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let name = if det > 0.0 { "det M > 0: s₁, s₂ unchanged" } else { "det M < 0: s₁ ↔ s₂" };
    match basis_invariance_check(a, &change, &shifts) {
        Ok(res) => set.record(name, res, tolerance),
        Err(e) => set.error(name, e),
    }
}

/// Real dimensions of the solution sets of the family conditions for `vv†`.
pub fn family_dimension_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, sys: &EigenSystem) {
    let Some(v) = sys.families.first().and_then(|f| f.eigenvectors.first()) else { return };
    match family_dimension_probe(v, 24, rng) {
        Ok(dims) => set.record(
            "family of v: 12 real dimensions = 8 with (vv†)y = 0 + 4 with (vv†)y = y",
            (dims.total.abs_diff(12) + dims.orthogonal.abs_diff(8) + dims.phase.abs_diff(4)) as f64,
            0.0,
        ),
        Err(e) => set.error("family dimension probe", e),
    }
}

/// Least-squares distance of `w` from `{ (ℓu)p : p ∈ 𝕆 }`, relative to `|w|`.
fn right_multiple_distance(lu: &OctVector3, w: &OctVector3) -> f64 {
    let mut basis = DMatrix::zeros(24, 8);
    for i in 0..8 {
        basis.set_column(i, &lu.right_mul(&Octonion::unit(i)).to_dvector());
    }
    let target: DVector<f64> = w.to_dvector();
    let svd = basis.clone().svd(true, true);
    match svd.solve(&target, 1e-12) {
        Ok(coef) => (&basis * coef - &target).norm() / target.norm(),
        Err(_) => 1.0,
    }
}

/// Quaternionic path on a random quaternionic matrix.
pub fn quaternionic_checks<R: Rng + ?Sized>(set: &mut CheckSet, rng: &mut R, tolerance: f64) {
    let a = random::hermitian(rng, MatrixClassTag::Quaternionic);
    let sys = match eigensystem(&a) {
        Ok(s) => s,
        Err(e) => return set.error("quaternionic eigensystem", e),
    };
    if sys.path != SpectralPath::Quaternionic {
        return set.error("quaternionic eigensystem", format!("routed to {:?}", sys.path));
    }
    decomposition_checks_named(set, &a, &sys, tolerance, "quaternionic: ");
    let split = sys.split.expect("quaternionic path records the split");
    let conj = a.conj_entries();
    set.record(
        "quaternionic: r₂ = −4Φ on (ℓℍ)³",
        (sys.families[1].r + 4.0 * a.phi()).abs() / cubic_scale(&a),
        tolerance,
    );

    let x = random::vector(rng);
    let d = quaternionic_six_way_with(&a, &sys, &x);
    six_way_part_checks(set, &a, &sys, &d, tolerance, "quaternionic: ");

    let x2 = random::vector(rng).map(|p| split.project_h(&p));
    let fam2 = &sys.families[1];
    for (&lambda, lifted) in fam2.eigenvalues.iter().zip(&fam2.eigenvectors) {
        let u = lifted.left_mul(&split.ell.conj());
        set.record(
            "quaternionic: Āu = λu for u = ℓ̄·(lifted eigenvector)",
            (conj.mat_vec(&u) - u * lambda).norm() / linear_scale(&a),
            tolerance,
        );
        let w = u.outer_apply(&x2).left_mul(&split.ell);
        if w.norm() < 1e-9 * x2.norm() {
            continue;
        }
        set.record(
            "quaternionic: ℓ(uu†x₂) is an eigenvector of A",
            (a.mat_vec(&w) - w * lambda).norm() / (x2.norm() * linear_scale(&a)),
            tolerance,
        );
        set.record_at_least(
            "quaternionic: ℓ(uu†x₂) is not a right multiple of ℓu",
            right_multiple_distance(lifted, &w),
            SEPARATION_BOUND,
        );
    }
}

/// Settings of a `verify` run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    /// Added to `det A` in the matrix form of `K`. Nonzero only for the
    /// negative control.
    pub det_offset: f64,
}

impl VerifyOptions {
    pub fn new(seed: u64, samples: usize, tolerance: f64) -> Self {
        VerifyOptions { seed, samples, tolerance, det_offset: 0.0 }
    }
}

/// Algebra pairs drawn per verify sample.
pub const PAIRS_PER_SAMPLE: usize = 10;

/// All suites on one sample.
pub fn verify_sample(set: &mut CheckSet, opts: &VerifyOptions, index: u64) {
    let tol = opts.tolerance;
    let mut rng = sample_rng(opts.seed, index);
    for _ in 0..PAIRS_PER_SAMPLE {
        let p = random::octonion(&mut rng);
        let q = random::octonion(&mut rng);
        algebra_checks(set, &p, &q);
    }
    let a = random::hermitian(&mut rng, MatrixClassTag::Octonionic);
    k_checks(set, &mut rng, &a, tol, opts.det_offset);
    projector_checks(set, &mut rng, &a, tol);
    subspace_checks(set, &mut rng, &a, tol);
    component_identity_checks(set, &mut rng, &a, tol);
    basis_invariance_checks(set, &mut rng, &a, tol);
    match eigensystem(&a) {
        Ok(sys) => {
            root_checks(set, &a, &sys, tol);
            decomposition_checks(set, &a, &sys, tol);
            idempotence_checks(set, &mut rng, &a, &sys, tol);
            six_way_checks(set, &mut rng, &a, &sys, tol);
            family_relation_checks(set, &mut rng, &sys, tol);
            if index == 0 {
                family_dimension_checks(set, &mut rng, &sys);
            }
        }
        Err(e) => set.error(&format!("sample {index}: eigensystem"), e),
    }
    quaternionic_checks(set, &mut rng, tol);
}

/// Runs every suite on `samples` random instances.
pub fn verify(opts: &VerifyOptions) -> RunReport {
    let mut set = CheckSet::new();
    for i in 0..opts.samples as u64 {
        verify_sample(&mut set, opts, i);
    }
    let inputs = json!({
        "seed": opts.seed,
        "samples": opts.samples,
        "tolerance": opts.tolerance,
        "det_offset": opts.det_offset,
    });
    let outputs = json!({ "checks": set.checks.len(), "failed": set.checks.iter().filter(|c| !c.pass).count() });
    RunReport::new("verify", Some(opts.seed), inputs, outputs, set)
}

/// Matrix families sampled by `fuzz`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FuzzClass {
    Real,
    Complex,
    Quaternionic,
    Octonionic,
    /// Quaternionic matrices perturbed so that `|α|` straddles the
    /// classification threshold.
    Boundary,
}

impl std::str::FromStr for FuzzClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "REAL" => Ok(FuzzClass::Real),
            "COMPLEX" => Ok(FuzzClass::Complex),
            "QUATERNIONIC" => Ok(FuzzClass::Quaternionic),
            "OCTONIONIC" => Ok(FuzzClass::Octonionic),
            "BOUNDARY" => Ok(FuzzClass::Boundary),
            _ => Err(format!(
                "unknown class '{s}', expected REAL, COMPLEX, QUATERNIONIC, OCTONIONIC or BOUNDARY"
            )),
        }
    }
}

/// Residual bound for [`FuzzClass::Boundary`]. Below the classification
/// threshold the quaternionic path drops an octonionic part of size up to
/// about 10⁻⁷, and the residuals are of that order.
pub const BOUNDARY_TOLERANCE: f64 = 1e-6;

/// Quaternionic matrix plus an octonionic perturbation whose size is
/// log-uniform in `[10⁻¹¹, 10⁻⁷]`.
pub fn boundary_matrix<R: Rng + ?Sized>(rng: &mut R) -> Hermitian3 {
    let base = random::hermitian(rng, MatrixClassTag::Quaternionic);
    let mut dir = [0.0; 8];
    for i in [3, 5, 6, 7] {
        dir[i] = rng.random_range(-1.0..=1.0);
    }
    let dir = Octonion::new(dir);
    let size = 10f64.powf(rng.random_range(-11.0..=-7.0));
    let mut a = base;
    a.a += dir * (size / dir.norm().max(f64::MIN_POSITIVE));
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzOptions {
    pub seed: u64,
    pub samples: usize,
    pub class: FuzzClass,
    pub tolerance: f64,
}

/// End-to-end eigensystem and decomposition on random matrices of a class.
pub fn fuzz(opts: &FuzzOptions) -> RunReport {
    let tol = match opts.class {
        FuzzClass::Boundary => opts.tolerance.max(BOUNDARY_TOLERANCE),
        _ => opts.tolerance,
    };
    let mut set = CheckSet::new();
    let mut paths = [0usize; 3];
    for i in 0..opts.samples as u64 {
        let mut rng = sample_rng(opts.seed, i);
        let a = match opts.class {
            FuzzClass::Real => random::hermitian(&mut rng, MatrixClassTag::Real),
            FuzzClass::Complex => random::hermitian(&mut rng, MatrixClassTag::Complex),
            FuzzClass::Quaternionic => random::hermitian(&mut rng, MatrixClassTag::Quaternionic),
            FuzzClass::Octonionic => random::hermitian(&mut rng, MatrixClassTag::Octonionic),
            FuzzClass::Boundary => boundary_matrix(&mut rng),
        };
        let sys = match eigensystem(&a) {
            Ok(s) => s,
            Err(e) => {
                set.error(&format!("sample {i}"), e);
                continue;
            }
        };
        paths[match sys.path {
            SpectralPath::Octonionic => 0,
            SpectralPath::Quaternionic => 1,
            SpectralPath::Complex => 2,
        }] += 1;
        let ls = linear_scale(&a);
        let worst = |pick: fn(&crate::spectral::FamilyResiduals) -> f64| {
            sys.families.iter().map(|f| pick(&f.residuals)).fold(0.0, f64::max)
        };
        set.record("worst ‖Av − λv‖", worst(|r| r.eigen) / ls, tol);
        set.record("worst ‖𝕀 − Σ vv†‖", worst(|r| r.identity), tol);
        set.record("worst ‖A − Σ λ vv†‖", worst(|r| r.matrix) / ls, tol);
        set.record("worst ‖(uu†)v‖ between distinct eigenvectors", worst(|r| r.orthogonality), tol);
        if sys.path != SpectralPath::Complex {
            set.record("worst ‖K[v] − rv‖", worst(|r| r.k_eigen) / cubic_scale(&a), tol);
        }
        let x = random::vector(&mut rng);
        let d = crate::projection::decompose_with(&a, &sys, &x);
        set.record("worst reconstruction ‖Σ parts − x‖", d.reconstruction_residual / x.norm(), tol);
        set.record("worst part residual ‖A·part − λ·part‖", d.max_eigen_residual() / (x.norm() * ls), tol);
    }
    let inputs = json!({
        "seed": opts.seed,
        "samples": opts.samples,
        "class": opts.class,
        "tolerance": opts.tolerance,
    });
    let outputs = json!({
        "tolerance_applied": tol,
        "paths": { "octonionic": paths[0], "quaternionic": paths[1], "complex": paths[2] },
    });
    RunReport::new("fuzz", Some(opts.seed), inputs, outputs, set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_keep_the_worst_value() {
        let mut set = CheckSet::new();
        set.record("x", 1e-12, 1e-8);
        set.record("x", 1e-9, 1e-8);
        set.record("x", 1e-10, 1e-8);
        let c = set.get("x").unwrap();
        assert_eq!((c.residual, c.samples, c.pass), (1e-9, 3, true));
        set.record("x", 1e-7, 1e-8);
        assert!(!set.pass());
    }

    #[test]
    fn nan_fails() {
        let mut set = CheckSet::new();
        set.record("x", 0.0, 1e-8);
        set.record("x", f64::NAN, 1e-8);
        assert!(!set.pass());
    }

    #[test]
    fn lower_bounds_keep_the_smallest_value() {
        let mut set = CheckSet::new();
        set.record_at_least("y", 0.3, 1e-6);
        set.record_at_least("y", 0.1, 1e-6);
        assert_eq!(set.get("y").unwrap().residual, 0.1);
        assert!(set.pass());
        set.record_at_least("y", 0.0, 1e-6);
        assert!(!set.pass());
    }

    #[test]
    fn errors_fail_the_set() {
        let mut set = CheckSet::new();
        set.record("x", 0.0, 1e-8);
        set.error("sample 0", "boom");
        assert!(!set.pass());
    }

    #[test]
    fn sample_streams_differ() {
        let mut a = sample_rng(1, 0);
        let mut b = sample_rng(1, 1);
        assert_ne!(random::octonion(&mut a), random::octonion(&mut b));
    }
}
