use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use octoeig::random::{self, rng_from_seed};
use octoeig::{EigenSystem, Hermitian3, MatrixClassTag, RunReport, SixWayDecomposition};
use tempfile::TempDir;

fn octoeig() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_octoeig"));
    cmd.env_remove("OCTO_TOLERANCE");
    cmd
}

fn run(args: &[&str]) -> Output {
    octoeig().args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_matrix(dir: &TempDir, name: &str, a: &Hermitian3) -> PathBuf {
    write(dir, name, &serde_json::to_string(a).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eigen_of_a_diagonal_matrix_takes_the_complex_path() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(&dir, "m.json", &Hermitian3::diag(1.0, 2.0, 3.0));
    let out = run(&["eigen", s(&m)]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
    assert!(stderr(&out).contains("complex path"));
    let sys: EigenSystem = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sys.families.len(), 1);
    for (x, y) in sys.families[0].eigenvalues.iter().zip([1.0, 2.0, 3.0]) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn eigen_of_a_random_octonionic_matrix() {
    let dir = TempDir::new().unwrap();
    let a = random::hermitian(&mut rng_from_seed(1), MatrixClassTag::Octonionic);
    let m = write_matrix(&dir, "m.json", &a);
    let out_path = dir.path().join("sys.json");
    let out = run(&["eigen", s(&m), "--out", s(&out_path)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(!stderr(&out).contains("FAIL"));
    let sys: EigenSystem = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(sys.eigenvalues().len(), 6);
    assert!(sys.max_residual() < 1e-8);
}

#[test]
fn truncated_json_names_the_missing_field() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", r#"{"d": 1.0, "e": 2.0, "f": 3.0, "a": [0,0,0,0,0,0,0,0], "b": [0,0,0,0,0,0,0,0]}"#);
    let out = run(&["eigen", s(&m)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("missing field `c`"), "{}", stderr(&out));

    let cut = write(&dir, "cut.json", r#"{"d": 1.0, "e": 2.0,"#);
    let out = run(&["eigen", s(&cut)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn wrong_vector_shape_is_rejected() {
    let dir = TempDir::new().unwrap();
    let m = write_matrix(&dir, "m.json", &Hermitian3::identity());
    let v = write(&dir, "v.json", "[[1,0,0,0,0,0,0,0],[0,0,0,0,0,0,0]]");
    let out = run(&["project", s(&m), s(&v)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("invalid vector"), "{}", stderr(&out));
}

#[test]
fn project_random_inputs() {
    let dir = TempDir::new().unwrap();
    let mut rng = rng_from_seed(2);
    let a = random::hermitian(&mut rng, MatrixClassTag::Octonionic);
    let x = random::vector(&mut rng);
    let m = write_matrix(&dir, "m.json", &a);
    let v = write(&dir, "v.json", &serde_json::to_string(&x).unwrap());
    let out = run(&["project", s(&m), s(&v)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let d: SixWayDecomposition = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(d.nonzero_parts().count(), 6);
    assert!(d.reconstruction_residual < 1e-8 * x.norm());
}

#[test]
fn project_an_eigenvector_gives_one_part() {
    let dir = TempDir::new().unwrap();
    let a = random::hermitian(&mut rng_from_seed(3), MatrixClassTag::Octonionic);
    let v = octoeig::spectral::eigensystem(&a).unwrap().families[1].eigenvectors[0];
    let m = write_matrix(&dir, "m.json", &a);
    let vp = write(&dir, "v.json", &serde_json::to_string(&v).unwrap());
    let out = run(&["project", s(&m), s(&vp)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let d: SixWayDecomposition = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(d.nonzero_parts().count(), 1);
}

#[test]
fn project_with_a_complex_matrix_flags_the_single_family() {
    let dir = TempDir::new().unwrap();
    let mut rng = rng_from_seed(4);
    let a = random::hermitian(&mut rng, MatrixClassTag::Complex);
    let m = write_matrix(&dir, "m.json", &a);
    let v = write(&dir, "v.json", &serde_json::to_string(&random::vector(&mut rng)).unwrap());
    let out = run(&["project", s(&m), s(&v)]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
    let d: SixWayDecomposition = serde_json::from_slice(&out.stdout).unwrap();
    assert!(d.degenerate);
    assert_eq!(d.parts.len(), 3);
}

#[test]
fn verify_seed_42_passes() {
    let out = run(&["verify", "--seed", "42", "--samples", "100"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).ends_with("verify: PASS\n"));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let (p, q) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let a = run(&["verify", "--seed", "7", "--samples", "3", "--out", s(&p)]);
    let b = run(&["verify", "--seed", "7", "--samples", "3", "--out", s(&q)]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&q).unwrap());
    let report: RunReport = serde_json::from_slice(&std::fs::read(&p).unwrap()).unwrap();
    assert_eq!((report.command.as_str(), report.seed, report.pass), ("verify", Some(7), true));
}

#[test]
fn corrupted_determinant_fails_verify() {
    let out = run(&["verify", "--seed", "42", "--samples", "5", "--det-offset", "1e-3"]);
    assert_eq!(code(&out), 1);
    let line = stdout(&out).lines().find(|l| l.starts_with("K diagonal")).unwrap().to_owned();
    assert!(line.ends_with("FAIL"), "{line}");
}

#[test]
fn verify_rejects_zero_samples() {
    assert_eq!(code(&run(&["verify", "--samples", "0"])), 1);
}

#[test]
fn fuzz_classes() {
    for class in ["OCTONIONIC", "QUATERNIONIC", "COMPLEX", "REAL", "boundary"] {
        let out = run(&["fuzz", "--seed", "3", "--samples", "40", "--class", class]);
        assert_eq!(code(&out), 0, "{class}: {}", stdout(&out));
    }
    assert_eq!(code(&run(&["fuzz", "--class", "SEDENION"])), 1);
}

#[test]
fn tolerance_flag_beats_environment() {
    // a tolerance of 1e-20 is below double-precision noise and must fail
    let strict = octoeig().env("OCTO_TOLERANCE", "1e-20").args(["fuzz", "--samples", "3"]).output().unwrap();
    assert_eq!(code(&strict), 1);
    let flag = octoeig()
        .env("OCTO_TOLERANCE", "1e-20")
        .args(["fuzz", "--samples", "3", "--tolerance", "1e-8"])
        .output()
        .unwrap();
    assert_eq!(code(&flag), 0, "{}", stdout(&flag));
    let bad = octoeig().env("OCTO_TOLERANCE", "abc").args(["fuzz", "--samples", "1"]).output().unwrap();
    assert_eq!(code(&bad), 1);
    assert_eq!(code(&run(&["fuzz", "--samples", "1", "--tolerance", "-1"])), 1);
}
