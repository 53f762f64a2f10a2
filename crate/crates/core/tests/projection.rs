use octoeig::projection::{decompose, project_along, quaternionic_six_way, six_way, ZERO_PART};
use octoeig::random::{self, rng_from_seed};
use octoeig::spectral::eigensystem;
use octoeig::subspace::{Family, FamilyContext};
use octoeig::{Hermitian3, MatrixClassTag, OctVector3, OctoError, SpectralPath};

fn octonionic(seed: u64) -> Hermitian3 {
    random::hermitian(&mut rng_from_seed(seed), MatrixClassTag::Octonionic)
}

#[test]
fn projecting_an_eigenvector_onto_itself() {
    let a = octonionic(1);
    let sys = eigensystem(&a).unwrap();
    for pair in sys.pairs() {
        let p = project_along(&a, &pair.v, &pair.v).unwrap();
        assert!((p - pair.v).norm() < 1e-12);
    }
}

#[test]
fn generalized_orthogonal_vectors_project_to_zero() {
    let a = octonionic(2);
    let sys = eigensystem(&a).unwrap();
    for fam in &sys.families {
        let [u, v, _] = fam.eigenvectors[..] else { panic!("three eigenvectors") };
        assert!(project_along(&a, &u, &v).unwrap().norm() < 1e-12);
    }
}

#[test]
fn project_along_is_idempotent_and_rejects_other_families() {
    let a = octonionic(3);
    let sys = eigensystem(&a).unwrap();
    let mut rng = rng_from_seed(30);
    let [c1, _] = FamilyContext::pair(&a).unwrap();
    let v = sys.family(Family::One).unwrap().eigenvectors[0];
    let y = random::vector(&mut rng).map(|p| c1.project(&a, &p));
    let once = project_along(&a, &v, &y).unwrap();
    let twice = project_along(&a, &v, &once).unwrap();
    assert!((twice - once).norm() < 1e-8 * y.norm());
    // vv† has eigenvalue 1 on the projection
    assert!((v.outer().mat_vec(&once) - once).norm() < 1e-10);

    let w = sys.family(Family::Two).unwrap().eigenvectors[0];
    assert!(matches!(project_along(&a, &v, &w), Err(OctoError::FamilyMismatch { .. })));
    assert!(matches!(project_along(&a, &OctVector3::ZERO, &w), Err(OctoError::ZeroVector)));
}

#[test]
fn eigenvector_input_gives_a_single_part() {
    let a = octonionic(4);
    let sys = eigensystem(&a).unwrap();
    for pair in sys.pairs() {
        let d = six_way(&a, &pair.v).unwrap();
        let nonzero: Vec<_> = d.nonzero_parts().collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!((nonzero[0].family, nonzero[0].lambda), (pair.family, pair.lambda));
        assert!((nonzero[0].component - pair.v).norm() < 1e-10);
    }
}

#[test]
fn random_vector_has_six_parts_that_are_eigenvectors() {
    let mut rng = rng_from_seed(50);
    for seed in 0..20 {
        let a = octonionic(100 + seed);
        let x = random::vector(&mut rng);
        let d = six_way(&a, &x).unwrap();
        assert_eq!(d.parts.len(), 6);
        assert_eq!(d.nonzero_parts().count(), 6);
        assert!(d.reconstruction_residual < 1e-8 * x.norm());
        for p in &d.parts {
            assert!((a.mat_vec(&p.component) - p.component * p.lambda).norm() < 1e-8 * p.component.norm());
        }
        // family 1 first, ascending eigenvalues within a family
        assert!(d.parts[..3].iter().all(|p| p.family == Family::One));
        assert!(d.parts.windows(2).all(|w| w[0].family != w[1].family || w[0].lambda <= w[1].lambda));
        assert_eq!(d.fingerprint, a.fingerprint());
    }
}

#[test]
fn decomposing_a_part_returns_it_in_its_own_slot() {
    let a = octonionic(5);
    let x = random::vector(&mut rng_from_seed(51));
    let d = six_way(&a, &x).unwrap();
    for (i, part) in d.parts.iter().enumerate() {
        let again = six_way(&a, &part.component).unwrap();
        for (j, q) in again.parts.iter().enumerate() {
            let expected = if i == j { part.component } else { OctVector3::ZERO };
            assert!((q.component - expected).norm() < 1e-8 * x.norm(), "slot {j} of part {i}");
        }
    }
}

#[test]
fn tiny_parts_are_exact_zeros() {
    let a = octonionic(6);
    let sys = eigensystem(&a).unwrap();
    let v = sys.families[0].eigenvectors[1];
    let d = six_way(&a, &v).unwrap();
    for p in &d.parts {
        let n = p.component.norm();
        assert!(n == 0.0 || n >= ZERO_PART * v.norm());
    }
}

#[test]
fn quaternionic_expansion() {
    let a = random::hermitian(&mut rng_from_seed(7), MatrixClassTag::Quaternionic);
    let sys = eigensystem(&a).unwrap();
    let split = sys.split.unwrap();

    // quaternionic x: nothing in family 2
    let x = random::vector(&mut rng_from_seed(70)).map(|p| split.project_h(&p));
    let d = quaternionic_six_way(&a, &x).unwrap();
    assert!(d.parts.iter().filter(|p| p.family == Family::Two).all(|p| p.component == OctVector3::ZERO));
    assert!(d.reconstruction_residual < 1e-12);

    // x = ℓu for an eigenvector u of Ā: a single part
    let lifted = sys.family(Family::Two).unwrap().eigenvectors[2];
    let d = quaternionic_six_way(&a, &lifted).unwrap();
    assert_eq!(d.nonzero_parts().count(), 1);

    // x = x₁ + ℓx₂ in general
    let x = random::vector(&mut rng_from_seed(71));
    let d = quaternionic_six_way(&a, &x).unwrap();
    assert_eq!(d.nonzero_parts().count(), 6);
    assert!(d.reconstruction_residual < 1e-12);
    assert!(d.max_eigen_residual() < 1e-12);
}

#[test]
fn wrong_class_errors() {
    let a = octonionic(8);
    let x = random::vector(&mut rng_from_seed(80));
    assert!(matches!(quaternionic_six_way(&a, &x), Err(OctoError::NotQuaternionic(_))));
    let q = random::hermitian(&mut rng_from_seed(81), MatrixClassTag::Quaternionic);
    assert!(matches!(six_way(&q, &x), Err(OctoError::DegenerateFamily { .. })));
}

#[test]
fn complex_matrices_give_three_parts_and_the_degenerate_flag() {
    let a = random::hermitian(&mut rng_from_seed(9), MatrixClassTag::Complex);
    let x = random::vector(&mut rng_from_seed(90));
    let d = decompose(&a, &x).unwrap();
    assert_eq!(d.path, SpectralPath::Complex);
    assert!(d.degenerate);
    assert_eq!(d.parts.len(), 3);
    assert!(d.max_eigen_residual() < 1e-12);
}

#[test]
fn json_round_trip() {
    let a = octonionic(10);
    let d = six_way(&a, &random::vector(&mut rng_from_seed(100))).unwrap();
    let text = serde_json::to_string(&d).unwrap();
    let back: octoeig::SixWayDecomposition = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
    assert!(text.contains("\"family\":1"));
}
