//! Real eigenvalues and orthonormal eigenvectors, family by family.
//!
//! For an octonionic matrix the realified operator `M` of `x ↦ Ax` is a
//! symmetric 24×24 matrix and the characteristic operator is the real
//! polynomial `K = M³ − (tr A)M² + σ(A)M − (det A)`. Each K-eigenspace
//! `(𝕋ₘ)³` is 12-dimensional and splits into three 4-dimensional eigenspaces
//! of `M`, whose eigenvalues solve `λ³ − (tr A)λ² + σ(A)λ − det A = rₘ`.
//!
//! Extraction: nullspace of `M − λ` by SVD, filter by `Kₘ`, then pick
//! normalized representatives and complete them with the generalized
//! projector `y ↦ (vv†)y`.

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cubic;
use crate::error::{OctoError, Result};
use crate::hermitian::{Hermitian3, MatrixClass, MatrixClassTag};
use crate::linalg;
use crate::octonion::Octonion;
use crate::random;
use crate::subspace::{quaternionic_split, Family, FamilyContext, QuaternionicSplit, TBasis};
use crate::vector::OctVector3;

/// Relative gap under which two roots count as one repeated eigenvalue.
pub const CLUSTER_GAP: f64 = 1e-6;

/// Singular-value threshold for eigenspaces, relative to `‖A‖`.
pub const NULLSPACE_THRESHOLD: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralPath {
    /// Two families labelled by the roots of the `r` quadratic.
    Octonionic,
    /// Eigenvectors of `A` over ℍ, and `ℓu` for eigenvectors `u` of `Ā`.
    Quaternionic,
    /// A single family of complex eigenvectors.
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub lambda: f64,
    pub v: OctVector3,
    pub family: Family,
}

/// Residual diagnostics of one family. All are absolute.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FamilyResiduals {
    /// max ‖Av − λv‖
    pub eigen: f64,
    /// max ‖K[v] − rv‖
    pub k_eigen: f64,
    /// max |v†v − 1|
    pub normalization: f64,
    /// ‖𝕀 − Σ vv†‖
    pub identity: f64,
    /// ‖A − Σ λ vv†‖
    pub matrix: f64,
    /// max over pairs of ‖(uu†)v‖
    pub orthogonality: f64,
    /// |Σλ − tr A|
    pub trace: f64,
    /// |Σ λᵢλⱼ − σ(A)|
    pub sigma: f64,
    /// |Πλ − det A − r|
    pub product: f64,
}

impl FamilyResiduals {
    pub fn max(&self) -> f64 {
        [
            self.eigen,
            self.k_eigen,
            self.normalization,
            self.identity,
            self.matrix,
            self.orthogonality,
            self.trace,
            self.sigma,
            self.product,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyEigen {
    pub family: Family,
    /// K-eigenvalue shared by the family's eigenvectors.
    pub r: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<FamilyContext>,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<OctVector3>,
    pub residuals: FamilyResiduals,
}

impl FamilyEigen {
    pub fn pairs(&self) -> impl Iterator<Item = EigenPair> + '_ {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(move |(&lambda, &v)| EigenPair { lambda, v, family: self.family })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenSystem {
    pub path: SpectralPath,
    pub class: MatrixClass,
    pub families: Vec<FamilyEigen>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<QuaternionicSplit>,
}

impl EigenSystem {
    pub fn family(&self, m: Family) -> Option<&FamilyEigen> {
        self.families.iter().find(|f| f.family == m)
    }

    pub fn pairs(&self) -> impl Iterator<Item = EigenPair> + '_ {
        self.families.iter().flat_map(FamilyEigen::pairs)
    }

    /// All eigenvalues, family 1 first.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.families.iter().flat_map(|f| f.eigenvalues.iter().copied()).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.families.iter().map(|f| f.residuals.max()).fold(0.0, f64::max)
    }

    pub fn is_degenerate(&self) -> bool {
        self.path == SpectralPath::Complex
    }
}

/// Roots of `λ³ − (tr A)λ² + σ(A)λ − (det A + r)`, ascending.
pub fn lambda_roots(a: &Hermitian3, r: f64) -> Result<[f64; 3]> {
    cubic::real_roots(-a.trace(), a.sigma(), -(a.det() + r))
}

/// `K[x] = A(A(Ax)) − (tr A)A(Ax) + σ(A)Ax − (det A)x`.
pub fn k_vector(a: &Hermitian3, x: &OctVector3) -> OctVector3 {
    k_vector_with_det(a, a.det(), x)
}

/// [`k_vector`] with the determinant supplied by the caller.
pub fn k_vector_with_det(a: &Hermitian3, det: f64, x: &OctVector3) -> OctVector3 {
    let ax = a.mat_vec(x);
    let aax = a.mat_vec(&ax);
    let aaax = a.mat_vec(&aax);
    aaax - aax * a.trace() + ax * a.sigma() - *x * det
}

/// Picks `count` normalized, mutually orthogonal (in the generalized sense)
/// vectors from the space spanned by the orthonormal columns of `space`.
///
/// The first is the normalized projection of the first coordinate axis with a
/// non-negligible projection, scanning the real parts of the components
/// before the imaginary coordinates. Each further vector is the axis
/// projection with the largest remainder after subtracting `(vv†)y` for the
/// vectors already chosen.
fn generalized_orthonormal(space: &DMatrix<f64>, count: usize) -> Vec<OctVector3> {
    let axis_order: Vec<usize> = [0, 8, 16].into_iter().chain((0..24).filter(|k| k % 8 != 0)).collect();
    let project = |y: &nalgebra::DVector<f64>| space * (space.transpose() * y);
    let axis_projection = |k: usize| space * space.row(k).transpose();

    let mut chosen: Vec<OctVector3> = Vec::with_capacity(count);
    while chosen.len() < count {
        let mut best: Option<(f64, OctVector3)> = None;
        for &k in &axis_order {
            let mut y = OctVector3::from(&axis_projection(k));
            for _ in 0..2 {
                for v in &chosen {
                    y = y - v.outer_apply(&y);
                }
                y = OctVector3::from(&project(&y.to_dvector()));
            }
            let n = y.norm();
            if chosen.is_empty() && n > 1e-3 {
                best = Some((n, y));
                break;
            }
            if best.as_ref().is_none_or(|(m, _)| n > *m) {
                best = Some((n, y));
            }
        }
        match best {
            Some((n, y)) if n > 0.0 => chosen.push(y * (1.0 / n)),
            _ => break,
        }
    }
    chosen
}

fn a_scale(a: &Hermitian3) -> f64 {
    a.frobenius().max(f64::MIN_POSITIVE)
}

/// Eigenvectors of an octonionic matrix for eigenvalue `lambda` in family
/// `ctx.m`, `multiplicity` of them.
pub fn eigenvectors(
    a: &Hermitian3,
    ctx: &FamilyContext,
    lambda: f64,
    multiplicity: usize,
) -> Result<Vec<EigenPair>> {
    let mut shifted = a.realify24();
    for i in 0..24 {
        shifted[(i, i)] -= lambda;
    }
    let (null, singular_values) = linalg::nullspace(&shifted, NULLSPACE_THRESHOLD * a_scale(a));
    let mut filtered = DMatrix::zeros(24, null.ncols());
    for j in 0..null.ncols() {
        let v = OctVector3::from(&null.column(j).into_owned());
        let p = v.map(|x| ctx.project(a, &x));
        filtered.set_column(j, &p.to_dvector());
    }
    // Kₘ is an orthogonal projector commuting with M: its restriction has
    // singular values 0 or 1
    let space = linalg::orthonormal_range(&filtered, 0.5);
    let expected = 4 * multiplicity;
    if space.ncols() < expected {
        return Err(OctoError::ExtractionFailure {
            lambda,
            family: ctx.m.into(),
            found: space.ncols(),
            expected,
            singular_values: singular_values.into_iter().take(expected + 1).collect(),
        });
    }
    Ok(generalized_orthonormal(&space, multiplicity)
        .into_iter()
        .map(|v| EigenPair { lambda, v, family: ctx.m })
        .collect())
}

/// Eigenpairs of the realified operator restricted to an invariant subspace
/// with orthonormal columns `basis`, whose eigenvalues each come with
/// real multiplicity `block`.
fn restricted_pairs(
    m: &DMatrix<f64>,
    basis: &DMatrix<f64>,
    block: usize,
    family: Family,
) -> Result<Vec<EigenPair>> {
    let eig = linalg::restricted_symmetric_eigen(m, basis);
    let values: Vec<f64> = eig.iter().map(|(l, _)| *l).collect();
    let mut out = Vec::new();
    let mut start = 0;
    for (lambda, count) in linalg::cluster(&values, CLUSTER_GAP) {
        if count % block != 0 {
            return Err(OctoError::ExtractionFailure {
                lambda,
                family: family.into(),
                found: count,
                expected: block * count.div_ceil(block),
                singular_values: Vec::new(),
            });
        }
        let mut space = DMatrix::zeros(24, count);
        for (j, (_, v)) in eig[start..start + count].iter().enumerate() {
            space.set_column(j, v);
        }
        start += count;
        out.extend(
            generalized_orthonormal(&space, count / block)
                .into_iter()
                .map(|v| EigenPair { lambda, v, family }),
        );
    }
    Ok(out)
}

/// Columns `(component i) ⊗ (basis vector)` spanning `S³` for `S ⊂ 𝕆`.
fn component_basis(units: &[Octonion]) -> DMatrix<f64> {
    let mut b = DMatrix::zeros(24, 3 * units.len());
    for i in 0..3 {
        for (k, u) in units.iter().enumerate() {
            for j in 0..8 {
                b[(8 * i + j, units.len() * i + k)] = u[j];
            }
        }
    }
    b
}

fn family_from_pairs(
    a: &Hermitian3,
    family: Family,
    r: f64,
    context: Option<FamilyContext>,
    pairs: Vec<EigenPair>,
) -> FamilyEigen {
    let eigenvalues: Vec<f64> = pairs.iter().map(|p| p.lambda).collect();
    let eigenvectors: Vec<OctVector3> = pairs.iter().map(|p| p.v).collect();
    let residuals = family_residuals(a, r, &eigenvalues, &eigenvectors);
    FamilyEigen { family, r, context, eigenvalues, eigenvectors, residuals }
}

/// Residuals of every per-family identity for the given eigenpairs.
pub fn family_residuals(
    a: &Hermitian3,
    r: f64,
    eigenvalues: &[f64],
    eigenvectors: &[OctVector3],
) -> FamilyResiduals {
    let mut res = FamilyResiduals::default();
    let mut identity = Hermitian3::default();
    let mut matrix = Hermitian3::default();
    for (&lambda, v) in eigenvalues.iter().zip(eigenvectors) {
        res.eigen = res.eigen.max((a.mat_vec(v) - *v * lambda).norm());
        res.k_eigen = res.k_eigen.max((k_vector(a, v) - *v * r).norm());
        res.normalization = res.normalization.max((v.norm_sqr() - 1.0).abs());
        let outer = v.outer();
        identity = identity + outer;
        matrix = matrix + outer * lambda;
    }
    res.identity = (identity - Hermitian3::identity()).frobenius();
    res.matrix = (matrix - *a).frobenius();
    for (i, u) in eigenvectors.iter().enumerate() {
        for (j, v) in eigenvectors.iter().enumerate() {
            if i != j {
                res.orthogonality = res.orthogonality.max(u.outer_apply(v).norm());
            }
        }
    }
    if let [l1, l2, l3] = eigenvalues {
        res.trace = (l1 + l2 + l3 - a.trace()).abs();
        res.sigma = (l1 * l2 + l2 * l3 + l3 * l1 - a.sigma()).abs();
        res.product = (l1 * l2 * l3 - a.det() - r).abs();
    }
    res
}

fn octonionic_system(a: &Hermitian3, class: MatrixClass) -> Result<EigenSystem> {
    let contexts = FamilyContext::pair(a)?;
    let mut families = Vec::with_capacity(2);
    for ctx in contexts {
        let roots = lambda_roots(a, ctx.r)?;
        let mut pairs = Vec::with_capacity(3);
        for (lambda, multiplicity) in linalg::cluster(&roots, CLUSTER_GAP) {
            pairs.extend(eigenvectors(a, &ctx, lambda, multiplicity)?);
        }
        families.push(family_from_pairs(a, ctx.m, ctx.r, Some(ctx), pairs));
    }
    Ok(EigenSystem { path: SpectralPath::Octonionic, class, families, split: None })
}

fn quaternionic_system(a: &Hermitian3, class: MatrixClass) -> Result<EigenSystem> {
    let split = quaternionic_split(a)?;
    let basis = component_basis(&split.basis);
    let own = restricted_pairs(&a.realify24(), &basis, 4, Family::One)?;
    let conj = a.conj_entries();
    let lifted: Vec<EigenPair> = restricted_pairs(&conj.realify24(), &basis, 4, Family::Two)?
        .into_iter()
        .map(|p| EigenPair { v: p.v.left_mul(&split.ell), ..p })
        .collect();
    // K vanishes on ℍ³ and is −4Φ on (ℓℍ)³; det Ā − det A gives the latter
    let r2 = conj.det() - a.det();
    Ok(EigenSystem {
        path: SpectralPath::Quaternionic,
        class,
        families: vec![
            family_from_pairs(a, Family::One, 0.0, None, own),
            family_from_pairs(a, Family::Two, r2, None, lifted),
        ],
        split: Some(split),
    })
}

/// Unit imaginary `u` with `a, b, c ∈ span{1, u}`; `e₁` for real matrices.
fn complex_unit(a: &Hermitian3) -> Octonion {
    let tol = 1e-9 * (1.0 + a.a.norm() + a.b.norm() + a.c.norm());
    [a.a.im(), a.b.im(), a.c.im()]
        .into_iter()
        .find(|p| p.norm() > tol)
        .map(|p| p / p.norm())
        .unwrap_or_else(|| Octonion::unit(1))
}

fn complex_system(a: &Hermitian3, class: MatrixClass) -> Result<EigenSystem> {
    let basis = component_basis(&[Octonion::ONE, complex_unit(a)]);
    let pairs = restricted_pairs(&a.realify24(), &basis, 2, Family::One)?;
    Ok(EigenSystem {
        path: SpectralPath::Complex,
        class,
        families: vec![family_from_pairs(a, Family::One, 0.0, None, pairs)],
        split: None,
    })
}

/// Full eigensystem, routed by the matrix class.
pub fn eigensystem(a: &Hermitian3) -> Result<EigenSystem> {
    let class = a.classify();
    match class.tag {
        MatrixClassTag::Octonionic => octonionic_system(a, class),
        MatrixClassTag::Quaternionic => quaternionic_system(a, class),
        MatrixClassTag::Real | MatrixClassTag::Complex => complex_system(a, class),
    }
}

/// Whether `w` lies in the family of `u`: `uu†((uu†)w) = (uu†)w` with `u`
/// normalized, up to `tolerance·|w|`.
pub fn same_family(u: &OctVector3, w: &OctVector3, tolerance: f64) -> Result<bool> {
    let u = u.normalized().ok_or(OctoError::ZeroVector)?;
    let projector = u.outer();
    if matches!(projector.classify().tag, MatrixClassTag::Real | MatrixClassTag::Complex) {
        return Err(OctoError::ComplexProjector);
    }
    let once = projector.mat_vec(w);
    let twice = projector.mat_vec(&once);
    Ok((twice - once).norm() <= tolerance * w.norm().max(f64::MIN_POSITIVE))
}

/// Estimated real dimensions of the family determined by `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDimensions {
    /// Solutions of `vv†((vv†)y) = (vv†)y`.
    pub total: usize,
    /// Vectors with `(vv†)y = 0`.
    pub orthogonal: usize,
    /// Vectors with `(vv†)y = y`.
    pub phase: usize,
}

/// Samples random vectors, projects them onto each solution set of the
/// linear family conditions for `B = vv†`, and reports the rank of the
/// samples. With at least 12 samples a generic `v` gives 12 = 8 + 4.
pub fn family_dimension_probe<R: Rng + ?Sized>(
    v: &OctVector3,
    samples: usize,
    rng: &mut R,
) -> Result<FamilyDimensions> {
    let v = v.normalized().ok_or(OctoError::ZeroVector)?;
    let b = v.outer();
    if matches!(b.classify().tag, MatrixClassTag::Real | MatrixClassTag::Complex) {
        return Err(OctoError::ComplexProjector);
    }
    let m = b.realify24();
    let id = DMatrix::<f64>::identity(24, 24);
    let conditions = [&m * &m - &m, m.clone(), &m - &id];
    let draws: Vec<_> = (0..samples).map(|_| random::vector(rng).to_dvector()).collect();
    let dims: Vec<usize> = conditions
        .iter()
        .map(|c| {
            let (null, _) = linalg::nullspace(c, 1e-8);
            let mut sampled = DMatrix::zeros(24, samples);
            for (j, y) in draws.iter().enumerate() {
                sampled.set_column(j, &(&null * (null.transpose() * y)));
            }
            linalg::rank(&sampled, 1e-8)
        })
        .collect();
    Ok(FamilyDimensions { total: dims[0], orthogonal: dims[1], phase: dims[2] })
}

/// Orthonormal basis of 𝕋ₘ = 𝕋sₘ.
pub fn t_m_basis(a: &Hermitian3, ctx: &FamilyContext) -> TBasis {
    let t = TBasis::new(a);
    TBasis::span(&t.vectors.iter().map(|p| *p * ctx.s).collect::<Vec<_>>())
}
