use octoeig::verify::{fuzz, verify, FuzzClass, FuzzOptions, VerifyOptions};
use octoeig::DEFAULT_TOLERANCE;

#[test]
fn verify_passes_on_seed_42() {
    let report = verify(&VerifyOptions::new(42, 20, DEFAULT_TOLERANCE));
    println!("{}", report.table());
    assert!(report.pass);
}

#[test]
fn verify_is_deterministic() {
    let opts = VerifyOptions::new(9, 2, DEFAULT_TOLERANCE);
    let a = serde_json::to_string(&verify(&opts)).unwrap();
    let b = serde_json::to_string(&verify(&opts)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn fuzz_every_class() {
    for class in [
        FuzzClass::Real,
        FuzzClass::Complex,
        FuzzClass::Quaternionic,
        FuzzClass::Octonionic,
        FuzzClass::Boundary,
    ] {
        let report = fuzz(&FuzzOptions { seed: 5, samples: 30, class, tolerance: DEFAULT_TOLERANCE });
        println!("{class:?} {}\n{}", report.outputs, report.table());
        assert!(report.pass, "{class:?}");
    }
}
