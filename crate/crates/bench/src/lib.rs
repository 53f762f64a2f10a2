//! Fixed inputs shared by the benchmarks.

use octoeig::random::{self, rng_from_seed};
use octoeig::{Hermitian3, MatrixClassTag, OctVector3, Octonion};

pub fn octonion_pair(seed: u64) -> (Octonion, Octonion) {
    let mut rng = rng_from_seed(seed);
    (random::octonion(&mut rng), random::octonion(&mut rng))
}

pub fn matrix(seed: u64, class: MatrixClassTag) -> Hermitian3 {
    random::hermitian(&mut rng_from_seed(seed), class)
}

pub fn vector(seed: u64) -> OctVector3 {
    random::vector(&mut rng_from_seed(seed))
}
