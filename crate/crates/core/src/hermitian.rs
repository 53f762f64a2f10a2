//! 3×3 octonionic Hermitian matrices.
//!
//! Layout:
//!
//! ```text
//!     ⎛ d  a  b̄ ⎞
//! A = ⎜ ā  e  c ⎟
//!     ⎝ b  c̄  f ⎠
//! ```

use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::linalg;
use crate::octonion::{assoc3form, associator, Octonion};
use crate::vector::OctVector3;

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Hermitian3 {
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub a: Octonion,
    pub b: Octonion,
    pub c: Octonion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatrixClassTag {
    Real,
    Complex,
    Quaternionic,
    Octonionic,
}

impl std::str::FromStr for MatrixClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "real" => Ok(MatrixClassTag::Real),
            "complex" => Ok(MatrixClassTag::Complex),
            "quaternionic" => Ok(MatrixClassTag::Quaternionic),
            "octonionic" => Ok(MatrixClassTag::Octonionic),
            other => Err(format!("unknown matrix class `{other}`")),
        }
    }
}

/// Classification of a matrix together with `dim 𝕋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixClass {
    pub tag: MatrixClassTag,
    pub dim_t: usize,
}

impl Hermitian3 {
    pub const fn new(d: f64, e: f64, f: f64, a: Octonion, b: Octonion, c: Octonion) -> Self {
        Hermitian3 { d, e, f, a, b, c }
    }

    pub const fn diag(d: f64, e: f64, f: f64) -> Self {
        Hermitian3::new(d, e, f, Octonion::ZERO, Octonion::ZERO, Octonion::ZERO)
    }

    pub const fn identity() -> Self {
        Hermitian3::diag(1.0, 1.0, 1.0)
    }

    pub fn entry(&self, i: usize, j: usize) -> Octonion {
        match (i, j) {
            (0, 0) => Octonion::real(self.d),
            (1, 1) => Octonion::real(self.e),
            (2, 2) => Octonion::real(self.f),
            (0, 1) => self.a,
            (1, 0) => self.a.conj(),
            (0, 2) => self.b.conj(),
            (2, 0) => self.b,
            (1, 2) => self.c,
            (2, 1) => self.c.conj(),
            _ => panic!("Hermitian3 index ({i}, {j}) out of range"),
        }
    }

    pub fn entries(&self) -> [[Octonion; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    pub fn trace(&self) -> f64 {
        self.d + self.e + self.f
    }

    /// `de + ef + fd − |a|² − |b|² − |c|²`.
    pub fn sigma(&self) -> f64 {
        self.d * self.e + self.e * self.f + self.f * self.d
            - self.a.norm_sqr()
            - self.b.norm_sqr()
            - self.c.norm_sqr()
    }

    /// `½((tr A)² − tr(A²))` with `tr(A²)` read off the realified square.
    pub fn sigma_from_square(&self) -> f64 {
        let m = self.realify24();
        let tr_sq = (&m * &m).trace() / 8.0;
        0.5 * (self.trace().powi(2) - tr_sq)
    }

    /// `def − d|c|² − e|b|² − f|a|² + 2 Re((cb)a)`.
    pub fn det(&self) -> f64 {
        self.d * self.e * self.f
            - self.d * self.c.norm_sqr()
            - self.e * self.b.norm_sqr()
            - self.f * self.a.norm_sqr()
            + 2.0 * ((self.c * self.b) * self.a).re()
    }

    /// Φ = Φ(a, b, c).
    pub fn phi(&self) -> f64 {
        assoc3form(&self.a, &self.b, &self.c)
    }

    /// α = [a, b, c].
    pub fn alpha(&self) -> Octonion {
        associator(&self.a, &self.b, &self.c)
    }

    /// Tolerance below which `|α|` counts as zero.
    pub fn alpha_tolerance(&self) -> f64 {
        1e-9 * (1.0 + self.a.norm()) * (1.0 + self.b.norm()) * (1.0 + self.c.norm())
    }

    /// Real dimension of 𝕋 = ⟨1, a, b, c⟩.
    pub fn dim_t(&self) -> usize {
        let rows = [Octonion::ONE, self.a, self.b, self.c];
        let m = DMatrix::from_fn(4, 8, |i, j| rows[i][j]);
        linalg::rank(&m, 1e-9)
    }

    pub fn classify(&self) -> MatrixClass {
        let dim_t = self.dim_t();
        let tag = if self.alpha().norm() > self.alpha_tolerance() {
            MatrixClassTag::Octonionic
        } else {
            match dim_t {
                1 => MatrixClassTag::Real,
                2 => MatrixClassTag::Complex,
                _ => MatrixClassTag::Quaternionic,
            }
        };
        MatrixClass { tag, dim_t }
    }

    /// `(Ax)ᵢ = Σⱼ Aᵢⱼ xⱼ`.
    pub fn mat_vec(&self, x: &OctVector3) -> OctVector3 {
        let [x1, x2, x3] = x.0;
        OctVector3::new(
            x1 * self.d + self.a * x2 + self.b.conj() * x3,
            self.a.conj() * x1 + x2 * self.e + self.c * x3,
            self.b * x1 + self.c.conj() * x2 + x3 * self.f,
        )
    }

    /// The 24×24 real matrix of `x ↦ Ax` on 𝕆³ ≅ ℝ²⁴.
    pub fn realify24(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(24, 24);
        for k in 0..24 {
            let col = self.mat_vec(&OctVector3::axis(k));
            for (i, o) in col.0.iter().enumerate() {
                for (j, &x) in o.coords().iter().enumerate() {
                    m[(8 * i + j, k)] = x;
                }
            }
        }
        m
    }

    /// Entrywise conjugate `Ā`.
    pub fn conj_entries(&self) -> Hermitian3 {
        Hermitian3::new(self.d, self.e, self.f, self.a.conj(), self.b.conj(), self.c.conj())
    }

    /// Frobenius norm of the full 3×3 matrix.
    pub fn frobenius(&self) -> f64 {
        (self.d * self.d
            + self.e * self.e
            + self.f * self.f
            + 2.0 * (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr()))
        .sqrt()
    }

    pub fn is_finite(&self) -> bool {
        [self.d, self.e, self.f].iter().all(|x| x.is_finite())
            && self.a.is_finite()
            && self.b.is_finite()
            && self.c.is_finite()
    }

    /// SHA-256 of the canonical JSON serialization, hex encoded.
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_string(self).expect("Hermitian3 serializes");
        let digest = Sha256::digest(canonical.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Add for Hermitian3 {
    type Output = Hermitian3;

    fn add(self, o: Hermitian3) -> Hermitian3 {
        Hermitian3::new(self.d + o.d, self.e + o.e, self.f + o.f, self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for Hermitian3 {
    type Output = Hermitian3;

    fn sub(self, o: Hermitian3) -> Hermitian3 {
        Hermitian3::new(self.d - o.d, self.e - o.e, self.f - o.f, self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Mul<f64> for Hermitian3 {
    type Output = Hermitian3;

    fn mul(self, s: f64) -> Hermitian3 {
        Hermitian3::new(self.d * s, self.e * s, self.f * s, self.a * s, self.b * s, self.c * s)
    }
}
