//! Six-way decomposition of vectors in 𝕆³ into eigenvectors.
//!
//! `x` is first split by the family projectors, `x = K₁[x] + K₂[x]`, and each
//! piece is expanded along its family's orthonormal eigenvectors,
//! `xₘ = Σ (vv†)xₘ`. Each of the six terms is an eigenvector of `A`.

use serde::{Deserialize, Serialize};

use crate::error::{OctoError, Result};
use crate::hermitian::{Hermitian3, MatrixClassTag};
use crate::spectral::{eigensystem, k_vector, EigenSystem, SpectralPath};
use crate::subspace::{r_roots, Family};
use crate::vector::OctVector3;

/// Parts below this fraction of `|x|` are reported as exact zeros.
pub const ZERO_PART: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Part {
    pub family: Family,
    pub lambda: f64,
    pub component: OctVector3,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SixWayDecomposition {
    pub path: SpectralPath,
    /// Set when the matrix is complex and only one family exists.
    pub degenerate: bool,
    pub input: OctVector3,
    /// Family 1 then family 2, eigenvalues ascending within each.
    pub parts: Vec<Part>,
    /// ‖Σ parts − x‖
    pub reconstruction_residual: f64,
    /// ‖A·part − λ·part‖ per part
    pub eigen_residuals: Vec<f64>,
    /// SHA-256 of the matrix's canonical JSON.
    pub fingerprint: String,
}

impl SixWayDecomposition {
    pub fn sum(&self) -> OctVector3 {
        self.parts.iter().fold(OctVector3::ZERO, |acc, p| acc + p.component)
    }

    pub fn nonzero_parts(&self) -> impl Iterator<Item = &Part> {
        self.parts.iter().filter(|p| p.component != OctVector3::ZERO)
    }

    pub fn max_eigen_residual(&self) -> f64 {
        self.eigen_residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// `(vv†)y`, after checking that `y` shares the K-eigenvalue of `v`.
pub fn project_along(a: &Hermitian3, v: &OctVector3, y: &OctVector3) -> Result<OctVector3> {
    let vn = v.norm_sqr();
    if vn == 0.0 {
        return Err(OctoError::ZeroVector);
    }
    let r = k_vector(a, v).inner(v) / vn;
    let residual = (k_vector(a, y) - *y * r).norm();
    let gap = match r_roots(a) {
        Ok((r1, r2)) => r1 - r2,
        Err(_) => 4.0 * a.phi().abs(),
    };
    let allowed = (1e-6 * gap + 1e-12 * a.frobenius().powi(3).max(1.0)) * y.norm();
    if residual > allowed {
        return Err(OctoError::FamilyMismatch { residual });
    }
    Ok(v.outer_apply(y))
}

fn finish(a: &Hermitian3, sys: &EigenSystem, x: &OctVector3, mut parts: Vec<Part>) -> SixWayDecomposition {
    let scale = x.norm();
    for p in parts.iter_mut() {
        if p.component.norm() < ZERO_PART * scale {
            p.component = OctVector3::ZERO;
        }
    }
    let eigen_residuals = parts
        .iter()
        .map(|p| (a.mat_vec(&p.component) - p.component * p.lambda).norm())
        .collect();
    let sum = parts.iter().fold(OctVector3::ZERO, |acc, p| acc + p.component);
    SixWayDecomposition {
        path: sys.path,
        degenerate: sys.is_degenerate(),
        input: *x,
        reconstruction_residual: (sum - *x).norm(),
        eigen_residuals,
        parts,
        fingerprint: a.fingerprint(),
    }
}

/// Six-way decomposition using a precomputed octonionic eigensystem.
pub fn six_way_with(a: &Hermitian3, sys: &EigenSystem, x: &OctVector3) -> SixWayDecomposition {
    let mut parts = Vec::with_capacity(6);
    for fam in &sys.families {
        let ctx = fam.context.expect("octonionic families carry a context");
        let xm = x.map(|p| ctx.project(a, &p));
        parts.extend(fam.pairs().map(|pair| Part {
            family: fam.family,
            lambda: pair.lambda,
            component: pair.v.outer_apply(&xm),
        }));
    }
    finish(a, sys, x, parts)
}

/// Six-way decomposition of `x` for an octonionic matrix.
pub fn six_way(a: &Hermitian3, x: &OctVector3) -> Result<SixWayDecomposition> {
    r_roots(a)?;
    let sys = eigensystem(a)?;
    Ok(six_way_with(a, &sys, x))
}

/// Quaternionic case: `x = x₁ + ℓx₂`, with `x₁` expanded along the
/// eigenvectors of `A` and `ℓx₂` along the lifted eigenvectors `ℓu`.
pub fn quaternionic_six_way_with(a: &Hermitian3, sys: &EigenSystem, x: &OctVector3) -> SixWayDecomposition {
    let split = sys.split.expect("quaternionic systems carry their split");
    let x1 = x.map(|p| split.split(&p).0);
    let ell_x2 = *x - x1;
    let mut parts = Vec::with_capacity(6);
    for fam in &sys.families {
        let piece = if fam.family == Family::One { x1 } else { ell_x2 };
        parts.extend(fam.pairs().map(|pair| Part {
            family: fam.family,
            lambda: pair.lambda,
            component: pair.v.outer_apply(&piece),
        }));
    }
    finish(a, sys, x, parts)
}

pub fn quaternionic_six_way(a: &Hermitian3, x: &OctVector3) -> Result<SixWayDecomposition> {
    let class = a.classify().tag;
    if class != MatrixClassTag::Quaternionic {
        return Err(OctoError::NotQuaternionic(class));
    }
    let sys = eigensystem(a)?;
    Ok(quaternionic_six_way_with(a, &sys, x))
}

/// Decomposition routed by class. Complex matrices give three parts and the
/// `degenerate` flag.
pub fn decompose_with(a: &Hermitian3, sys: &EigenSystem, x: &OctVector3) -> SixWayDecomposition {
    match sys.path {
        SpectralPath::Octonionic => six_way_with(a, sys, x),
        SpectralPath::Quaternionic => quaternionic_six_way_with(a, sys, x),
        SpectralPath::Complex => {
            let fam = &sys.families[0];
            let parts = fam
                .pairs()
                .map(|pair| Part { family: fam.family, lambda: pair.lambda, component: pair.v.outer_apply(x) })
                .collect();
            finish(a, sys, x, parts)
        }
    }
}

pub fn decompose(a: &Hermitian3, x: &OctVector3) -> Result<SixWayDecomposition> {
    let sys = eigensystem(a)?;
    Ok(decompose_with(a, &sys, x))
}
