//! Column vectors in 𝕆³.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::hermitian::Hermitian3;
use crate::octonion::Octonion;

/// A vector `(v₁, v₂, v₃)` of octonions. Serialized as three 8-arrays.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OctVector3(pub [Octonion; 3]);

impl OctVector3 {
    pub const ZERO: OctVector3 = OctVector3([Octonion::ZERO; 3]);

    pub const fn new(v1: Octonion, v2: Octonion, v3: Octonion) -> Self {
        OctVector3([v1, v2, v3])
    }

    /// The `k`-th coordinate axis of ℝ²⁴ (component `k / 8`, unit `k % 8`).
    pub fn axis(k: usize) -> Self {
        let mut v = OctVector3::ZERO;
        v.0[k / 8] = Octonion::unit(k % 8);
        v
    }

    pub fn components(&self) -> &[Octonion; 3] {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(Octonion::norm_sqr).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `self / |self|`, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        (n > 0.0).then(|| *self * (1.0 / n))
    }

    /// `v†w = Σ v̄ᵢ wᵢ`.
    pub fn dagger_dot(&self, w: &OctVector3) -> Octonion {
        self.0.iter().zip(w.0.iter()).map(|(v, w)| v.conj() * *w).sum()
    }

    /// ℝ²⁴ inner product, the real part of `v†w`.
    pub fn inner(&self, w: &OctVector3) -> f64 {
        self.0.iter().zip(w.0.iter()).map(|(v, w)| v.inner(w)).sum()
    }

    /// The Hermitian matrix `vv†`, with entries `vᵢ v̄ⱼ`.
    pub fn outer(&self) -> Hermitian3 {
        let [v1, v2, v3] = self.0;
        Hermitian3::new(
            v1.norm_sqr(),
            v2.norm_sqr(),
            v3.norm_sqr(),
            v1 * v2.conj(),
            v3 * v1.conj(),
            v2 * v3.conj(),
        )
    }

    /// `(vv†)y`: the product of the matrix `vv†` with `y`.
    pub fn outer_apply(&self, y: &OctVector3) -> OctVector3 {
        self.outer().mat_vec(y)
    }

    /// Componentwise `q·vᵢ`.
    pub fn left_mul(&self, q: &Octonion) -> OctVector3 {
        self.map(|v| *q * v)
    }

    /// Componentwise `vᵢ·q`.
    pub fn right_mul(&self, q: &Octonion) -> OctVector3 {
        self.map(|v| v * *q)
    }

    pub fn map(&self, f: impl Fn(Octonion) -> Octonion) -> OctVector3 {
        OctVector3(self.0.map(f))
    }

    pub fn to_dvector(&self) -> DVector<f64> {
        DVector::from_iterator(24, self.0.iter().flat_map(|o| o.coords().iter().copied()))
    }

    pub fn from_slice(s: &[f64]) -> OctVector3 {
        OctVector3([
            Octonion::from_slice(&s[0..8]),
            Octonion::from_slice(&s[8..16]),
            Octonion::from_slice(&s[16..24]),
        ])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Octonion::is_finite)
    }
}

impl Add for OctVector3 {
    type Output = OctVector3;

    fn add(self, rhs: OctVector3) -> OctVector3 {
        OctVector3([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl AddAssign for OctVector3 {
    fn add_assign(&mut self, rhs: OctVector3) {
        *self = *self + rhs;
    }
}

impl Sub for OctVector3 {
    type Output = OctVector3;

    fn sub(self, rhs: OctVector3) -> OctVector3 {
        OctVector3([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for OctVector3 {
    type Output = OctVector3;

    fn neg(self) -> OctVector3 {
        self.map(|v| -v)
    }
}

impl Mul<f64> for OctVector3 {
    type Output = OctVector3;

    fn mul(self, rhs: f64) -> OctVector3 {
        self.map(|v| v * rhs)
    }
}

impl Index<usize> for OctVector3 {
    type Output = Octonion;

    fn index(&self, i: usize) -> &Octonion {
        &self.0[i]
    }
}

impl IndexMut<usize> for OctVector3 {
    fn index_mut(&mut self, i: usize) -> &mut Octonion {
        &mut self.0[i]
    }
}

impl From<&DVector<f64>> for OctVector3 {
    fn from(v: &DVector<f64>) -> Self {
        OctVector3::from_slice(v.as_slice())
    }
}
