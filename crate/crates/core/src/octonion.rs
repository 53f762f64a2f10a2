//! Real octonions in the basis `1, e₁, …, e₇`.
//!
//! The multiplication table is the cyclic one, `eᵢeᵢ₊₁ = eᵢ₊₃` with indices
//! taken mod 7 in `1..=7`. The seven quaternionic triples are therefore
//! `(1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3)`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};

use nalgebra::{SMatrix, SVector};
use serde::{Deserialize, Serialize};

/// `TABLE[i][j] = (sign, k)` means `eᵢ eⱼ = sign · eₖ`.
const TABLE: [[(i8, u8); 8]; 8] = build_table();

const fn build_table() -> [[(i8, u8); 8]; 8] {
    let mut t = [[(0i8, 0u8); 8]; 8];
    let mut i = 0;
    while i < 8 {
        t[0][i] = (1, i as u8);
        t[i][0] = (1, i as u8);
        if i > 0 {
            t[i][i] = (-1, 0);
        }
        i += 1;
    }
    let mut n = 1;
    while n <= 7 {
        let a = n;
        let b = n % 7 + 1;
        let c = (n + 2) % 7 + 1;
        let triple = [(a, b, c), (b, c, a), (c, a, b)];
        let mut k = 0;
        while k < 3 {
            let (x, y, z) = triple[k];
            t[x][y] = (1, z as u8);
            t[y][x] = (-1, z as u8);
            k += 1;
        }
        n += 1;
    }
    t
}

/// An element of the real octonions; coordinate 0 is the real part.
#[derive(Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion([f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub const fn new(coords: [f64; 8]) -> Self {
        Octonion(coords)
    }

    pub const fn real(x: f64) -> Self {
        Octonion([x, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    /// Basis unit `eᵢ` (`e₀ = 1`).
    ///
    /// Panics if `i > 7`.
    pub fn unit(i: usize) -> Self {
        assert!(i < 8, "octonion basis index {i} out of range");
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub fn coords(&self) -> &[f64; 8] {
        &self.0
    }

    pub fn into_coords(self) -> [f64; 8] {
        self.0
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    /// The imaginary part, `(p − p̄)/2`.
    pub fn im(&self) -> Octonion {
        let mut c = self.0;
        c[0] = 0.0;
        Octonion(c)
    }

    pub fn conj(&self) -> Octonion {
        let mut c = self.0.map(|x| -x);
        c[0] = self.0[0];
        Octonion(c)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean inner product on ℝ⁸, `(p q̄ + q p̄)/2`.
    pub fn inner(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(x, y)| x * y).sum()
    }

    /// `p̄ / |p|²`. Returns `None` for zero.
    pub fn inverse(&self) -> Option<Octonion> {
        let n = self.norm_sqr();
        if n == 0.0 {
            None
        } else {
            Some(self.conj() / n)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Matrix of `x ↦ q·x` acting on coordinate vectors.
    pub fn left_mul_matrix(&self) -> Real8Matrix {
        let mut m = SMatrix::<f64, 8, 8>::zeros();
        for j in 0..8 {
            let col = *self * Octonion::unit(j);
            for i in 0..8 {
                m[(i, j)] = col.0[i];
            }
        }
        Real8Matrix(m)
    }

    /// Matrix of `x ↦ x·q` acting on coordinate vectors.
    pub fn right_mul_matrix(&self) -> Real8Matrix {
        let mut m = SMatrix::<f64, 8, 8>::zeros();
        for j in 0..8 {
            let col = Octonion::unit(j) * *self;
            for i in 0..8 {
                m[(i, j)] = col.0[i];
            }
        }
        Real8Matrix(m)
    }

    pub fn to_svector(&self) -> SVector<f64, 8> {
        SVector::from(self.0)
    }

    pub fn from_slice(s: &[f64]) -> Octonion {
        let mut c = [0.0; 8];
        c.copy_from_slice(&s[..8]);
        Octonion(c)
    }
}

/// Associator `[a, b, c] = (ab)c − a(bc)`.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    (*a * *b) * *c - *a * (*b * *c)
}

/// The associative 3-form `½ Re(a(b̄c) − c(b̄a))`.
pub fn assoc3form(a: &Octonion, b: &Octonion, c: &Octonion) -> f64 {
    let bc = b.conj();
    0.5 * ((*a * (bc * *c)).re() - (*c * (bc * *a)).re())
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, &x) in self.0.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (j, &y) in rhs.0.iter().enumerate() {
                let (sign, k) = TABLE[i][j];
                out[k as usize] += f64::from(sign) * x * y;
            }
        }
        Octonion(out)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: f64) -> Octonion {
        Octonion(self.0.map(|x| x * rhs))
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        rhs * self
    }
}

impl Div<f64> for Octonion {
    type Output = Octonion;

    fn div(self, rhs: f64) -> Octonion {
        Octonion(self.0.map(|x| x / rhs))
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Octonion(c)
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0) {
            *x -= y;
        }
        Octonion(c)
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        Octonion(self.0.map(|x| -x))
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Sum for Octonion {
    fn sum<I: Iterator<Item = Octonion>>(iter: I) -> Octonion {
        iter.fold(Octonion::ZERO, |acc, x| acc + x)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl From<f64> for Octonion {
    fn from(x: f64) -> Self {
        Octonion::real(x)
    }
}

impl From<[f64; 8]> for Octonion {
    fn from(c: [f64; 8]) -> Self {
        Octonion(c)
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion{:?}", self.0)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0[0])?;
        for i in 1..8 {
            let x = self.0[i];
            if x != 0.0 {
                let sign = if x < 0.0 { '-' } else { '+' };
                write!(f, " {sign} {}e{i}", x.abs())?;
            }
        }
        Ok(())
    }
}

/// Real 8×8 matrix acting on octonion coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real8Matrix(pub SMatrix<f64, 8, 8>);

impl Real8Matrix {
    pub fn identity() -> Self {
        Real8Matrix(SMatrix::identity())
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        let v = self.0 * x.to_svector();
        Octonion::from_slice(v.as_slice())
    }

    pub fn transpose(&self) -> Self {
        Real8Matrix(self.0.transpose())
    }

    pub fn max_abs_diff(&self, other: &Real8Matrix) -> f64 {
        (self.0 - other.0).amax()
    }
}

impl Mul for Real8Matrix {
    type Output = Real8Matrix;

    fn mul(self, rhs: Real8Matrix) -> Real8Matrix {
        Real8Matrix(self.0 * rhs.0)
    }
}
