//! The subspace 𝕋 = ⟨1, a, b, c⟩ and the decomposition 𝕆 = 𝕋s₁ ⊕ 𝕋s₂.
//!
//! On single octonions the characteristic operator is
//!
//! ```text
//! K[p] = c(b(ap)) + ā(b̄(c̄p)) − 2 Re(c(ba)) p
//! ```
//!
//! It satisfies `K² + 4ΦK − |α|² = 0`, so its two eigenvalues are the roots
//! `r₁ > 0 > r₂` of the same quadratic. The eigenspaces are `𝕋ₘ = 𝕋sₘ` and
//! `Kₘ = (K + rₘ + 4Φ) / (2(rₘ + 2Φ))` projects onto them.

use serde::{Deserialize, Serialize};

use crate::error::{OctoError, Result};
use crate::hermitian::{Hermitian3, MatrixClassTag};
use crate::octonion::Octonion;

/// Family label. Family 1 carries the larger root of the `r` quadratic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Family {
    One,
    Two,
}

impl Family {
    pub const BOTH: [Family; 2] = [Family::One, Family::Two];

    pub fn index(self) -> usize {
        match self {
            Family::One => 0,
            Family::Two => 1,
        }
    }

    pub fn other(self) -> Family {
        match self {
            Family::One => Family::Two,
            Family::Two => Family::One,
        }
    }
}

impl From<Family> for u8 {
    fn from(f: Family) -> u8 {
        f.index() as u8 + 1
    }
}

impl TryFrom<u8> for Family {
    type Error = String;

    fn try_from(m: u8) -> std::result::Result<Self, String> {
        match m {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            _ => Err(format!("family index must be 1 or 2, got {m}")),
        }
    }
}

/// Orthonormal basis of 𝕋, Gram–Schmidt of `(1, a, b, c)` in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct TBasis {
    pub vectors: Vec<Octonion>,
}

impl TBasis {
    pub fn new(a: &Hermitian3) -> Self {
        TBasis::span(&[Octonion::ONE, a.a, a.b, a.c])
    }

    /// Orthonormal basis of the span of `generators`, in order.
    pub fn span(generators: &[Octonion]) -> Self {
        let scale = generators.iter().map(Octonion::norm).fold(1.0, f64::max);
        let mut vectors: Vec<Octonion> = Vec::with_capacity(generators.len());
        for g in generators {
            let mut r = *g;
            // classical Gram–Schmidt, twice
            for _ in 0..2 {
                let proj: Octonion = vectors.iter().map(|q| *q * q.inner(&r)).sum();
                r -= proj;
            }
            let n = r.norm();
            if n > 1e-9 * scale {
                vectors.push(r / n);
            }
        }
        TBasis { vectors }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Orthogonal projection onto the span.
    pub fn project(&self, p: &Octonion) -> Octonion {
        self.vectors.iter().map(|q| *q * q.inner(p)).sum()
    }

    /// Distance from `p` to the span.
    pub fn distance(&self, p: &Octonion) -> f64 {
        (*p - self.project(p)).norm()
    }

    /// `p ∈ span` up to `10⁻⁸·|p|`.
    pub fn contains(&self, p: &Octonion) -> bool {
        self.distance(p) <= 1e-8 * p.norm()
    }
}

/// Per-family scalar data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyContext {
    pub m: Family,
    pub r: f64,
    pub phi: f64,
    pub alpha: Octonion,
    pub s: Octonion,
}

impl FamilyContext {
    /// Both family contexts of an octonionic matrix.
    pub fn pair(a: &Hermitian3) -> Result<[FamilyContext; 2]> {
        let (r1, r2) = r_roots(a)?;
        let phi = a.phi();
        let alpha = a.alpha();
        let s1 = s_element(r1, phi, &alpha);
        let s2 = Octonion::ONE - s1;
        Ok([
            FamilyContext { m: Family::One, r: r1, phi, alpha, s: s1 },
            FamilyContext { m: Family::Two, r: r2, phi, alpha, s: s2 },
        ])
    }

    pub fn for_family(a: &Hermitian3, m: Family) -> Result<FamilyContext> {
        Ok(FamilyContext::pair(a)?[m.index()])
    }

    /// `Kₘ[p] = (K[p] + (rₘ + 4Φ)p) / (2(rₘ + 2Φ))`.
    pub fn project(&self, a: &Hermitian3, p: &Octonion) -> Octonion {
        (k_scalar(a, p) + *p * (self.r + 4.0 * self.phi)) / (2.0 * (self.r + 2.0 * self.phi))
    }

    /// Residual of the quadratic `r² + 4Φr − |α|²`.
    pub fn quadratic_residual(&self) -> f64 {
        self.r * self.r + 4.0 * self.phi * self.r - self.alpha.norm_sqr()
    }
}

fn s_element(r: f64, phi: f64, alpha: &Octonion) -> Octonion {
    (Octonion::real(r + 4.0 * phi) + *alpha) / (2.0 * (r + 2.0 * phi))
}

fn require_octonionic(a: &Hermitian3) -> Result<()> {
    let alpha_norm = a.alpha().norm();
    if alpha_norm > a.alpha_tolerance() {
        Ok(())
    } else {
        Err(OctoError::DegenerateFamily { alpha_norm, class: a.classify().tag })
    }
}

/// Roots `r₁ > r₂` of `r² + 4Φr − |α|² = 0`.
pub fn r_roots(a: &Hermitian3) -> Result<(f64, f64)> {
    require_octonionic(a)?;
    let phi = a.phi();
    let alpha_sq = a.alpha().norm_sqr();
    let disc = (4.0 * phi * phi + alpha_sq).sqrt();
    // avoid cancellation in the smaller-magnitude root; r₁r₂ = −|α|²
    Ok(if phi > 0.0 {
        let r2 = -2.0 * phi - disc;
        (-alpha_sq / r2, r2)
    } else {
        let r1 = -2.0 * phi + disc;
        (r1, -alpha_sq / r1)
    })
}

/// `sₘ = (rₘ + 4Φ + α) / (2(rₘ + 2Φ))`, with `s₂ = 1 − s₁`.
pub fn s_elements(a: &Hermitian3) -> Result<(Octonion, Octonion)> {
    let [f1, f2] = FamilyContext::pair(a)?;
    Ok((f1.s, f2.s))
}

/// The characteristic operator acting on a single octonion.
pub fn k_scalar(a: &Hermitian3, p: &Octonion) -> Octonion {
    let (x, y, z) = (a.a, a.b, a.c);
    let forward = z * (y * (x * *p));
    let backward = x.conj() * (y.conj() * (z.conj() * *p));
    forward + backward - *p * (2.0 * (z * (y * x)).re())
}

/// `Kₘ[p]`.
pub fn project_km(a: &Hermitian3, m: Family, p: &Octonion) -> Result<Octonion> {
    Ok(FamilyContext::for_family(a, m)?.project(a, p))
}

/// Residual norms of the three product rules on 𝕋 ⊕ 𝕋α:
///
/// * `t₁(t₂α) = (t₂t₁)α`
/// * `(t₁α)t₂ = (t₁t̄₂)α`
/// * `(t₁α)(t₂α) = −t̄₂t₁|α|²`
pub fn cd_table_check(a: &Hermitian3, t1: &Octonion, t2: &Octonion) -> [f64; 3] {
    let alpha = a.alpha();
    let (t1, t2) = (*t1, *t2);
    [
        (t1 * (t2 * alpha) - (t2 * t1) * alpha).norm(),
        ((t1 * alpha) * t2 - (t1 * t2.conj()) * alpha).norm(),
        ((t1 * alpha) * (t2 * alpha) + (t2.conj() * t1) * alpha.norm_sqr()).norm(),
    ]
}

/// The decomposition 𝕆 = ℍ ⊕ ℓℍ for a quaternionic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuaternionicSplit {
    /// Orthonormal basis of ℍ, starting with 1.
    pub basis: [Octonion; 4],
    pub ell: Octonion,
}

impl QuaternionicSplit {
    pub fn project_h(&self, p: &Octonion) -> Octonion {
        self.basis.iter().map(|h| *h * h.inner(p)).sum()
    }

    /// `p = p₁ + ℓp₂` with `p₁, p₂ ∈ ℍ`.
    pub fn split(&self, p: &Octonion) -> (Octonion, Octonion) {
        let p1 = self.project_h(p);
        let p2 = self.ell.conj() * (*p - p1);
        (p1, self.project_h(&p2))
    }
}

/// Quaternionic subalgebra ℍ ∋ a, b, c together with a unit ℓ ⊥ ℍ.
pub fn quaternionic_split(a: &Hermitian3) -> Result<QuaternionicSplit> {
    let class = a.classify().tag;
    match class {
        MatrixClassTag::Quaternionic => {}
        MatrixClassTag::Octonionic => return Err(OctoError::NotQuaternionic(class)),
        MatrixClassTag::Real | MatrixClassTag::Complex => {
            return Err(OctoError::AmbiguousSubalgebra(class))
        }
    }
    // ℍ = span{1, u, v, uv} from the two dominant imaginary directions; unlike
    // span{1, a, b, c} this is closed under products even when the entries
    // carry a tiny octonionic part
    let ims = [a.a.im(), a.b.im(), a.c.im()];
    let largest = |ps: [Octonion; 3]| {
        ps.into_iter().max_by(|p, q| p.norm_sqr().total_cmp(&q.norm_sqr())).expect("three entries")
    };
    let u = largest(ims);
    let u = u / u.norm();
    let v = largest(ims.map(|p| p - u * u.inner(&p)));
    let v = v / v.norm();
    let basis = [Octonion::ONE, u, v, u * v];
    let h = TBasis { vectors: basis.to_vec() };
    // smallest-index unit with a substantial component orthogonal to ℍ; the
    // four-dimensional complement guarantees one with residual ≥ √(4/7)
    let ell = (1..8)
        .map(|i| {
            let e = Octonion::unit(i);
            let mut r = e - h.project(&e);
            r -= h.project(&r);
            r
        })
        .find(|r| r.norm() > 0.5)
        .map(|r| r / r.norm())
        .expect("ℍ has a four-dimensional orthogonal complement");
    Ok(QuaternionicSplit { basis, ell })
}

/// Entrywise conjugate `Ā`, defined when the entries share a quaternionic
/// subalgebra.
pub fn conj_matrix(a: &Hermitian3) -> Result<Hermitian3> {
    let class = a.classify().tag;
    if class == MatrixClassTag::Octonionic {
        return Err(OctoError::NotQuaternionic(class));
    }
    Ok(a.conj_entries())
}

/// Replaces the off-diagonal entries by `shifts + change·(a, b, c)` and
/// returns the largest `|s′ₘ − sₘ|`, pairing families by the sign of
/// `det(change)`.
pub fn basis_invariance_check(
    a: &Hermitian3,
    change: &[[f64; 3]; 3],
    shifts: &[f64; 3],
) -> Result<f64> {
    let m = change;
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det.abs() < 1e-9 {
        return Err(OctoError::SingularChange(det));
    }
    let old = [a.a, a.b, a.c];
    let new: [Octonion; 3] = std::array::from_fn(|i| {
        Octonion::real(shifts[i]) + (0..3).map(|j| old[j] * m[i][j]).sum::<Octonion>()
    });
    let changed = Hermitian3::new(a.d, a.e, a.f, new[0], new[1], new[2]);
    let (s1, s2) = s_elements(a)?;
    let (t1, t2) = s_elements(&changed)?;
    let (u1, u2) = if det > 0.0 { (s1, s2) } else { (s2, s1) };
    Ok((t1 - u1).norm().max((t2 - u2).norm()))
}
