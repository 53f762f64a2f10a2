//! Seeded sampling of octonions, vectors and matrices.
//!
//! All sampling goes through [`rng_from_seed`], a ChaCha8 stream seeded from
//! a `u64`, with coordinates drawn uniformly from `[-1, 1]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hermitian::{Hermitian3, MatrixClassTag};
use crate::octonion::Octonion;
use crate::vector::OctVector3;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    Octonion::new(std::array::from_fn(|_| rng.random_range(-1.0..=1.0)))
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R) -> OctVector3 {
    OctVector3::new(octonion(rng), octonion(rng), octonion(rng))
}

/// Keeps only the coordinates listed in `units`.
fn restrict(p: Octonion, units: &[usize]) -> Octonion {
    let mut c = [0.0; 8];
    for &i in units {
        c[i] = p[i];
    }
    Octonion::new(c)
}

/// Basis units spanning the subalgebra used for each class.
pub fn class_units(class: MatrixClassTag) -> &'static [usize] {
    match class {
        MatrixClassTag::Real => &[0],
        MatrixClassTag::Complex => &[0, 1],
        MatrixClassTag::Quaternionic => &[0, 1, 2, 4],
        MatrixClassTag::Octonionic => &[0, 1, 2, 3, 4, 5, 6, 7],
    }
}

/// Diagonal uniform in `[-1, 1]`, off-diagonal entries uniform in
/// `[-1, 1]⁸` projected onto the subalgebra of `class`.
pub fn hermitian<R: Rng + ?Sized>(rng: &mut R, class: MatrixClassTag) -> Hermitian3 {
    let units = class_units(class);
    let d = rng.random_range(-1.0..=1.0);
    let e = rng.random_range(-1.0..=1.0);
    let f = rng.random_range(-1.0..=1.0);
    let a = restrict(octonion(rng), units);
    let b = restrict(octonion(rng), units);
    let c = restrict(octonion(rng), units);
    Hermitian3::new(d, e, f, a, b, c)
}

/// Random real 3×3 matrix with entries in `[-1, 1]` and `|det| ≥ min_det`.
pub fn invertible_change<R: Rng + ?Sized>(rng: &mut R, min_det: f64) -> [[f64; 3]; 3] {
    loop {
        let m: [[f64; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-1.0..=1.0)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det.abs() >= min_det {
            return m;
        }
    }
}
