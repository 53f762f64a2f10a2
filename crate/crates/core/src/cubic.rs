//! Real roots of cubics known to have three real roots.

use crate::error::{OctoError, Result};

/// Slack allowed on the trigonometric argument before the discriminant is
/// declared negative.
const ARGUMENT_SLACK: f64 = 1e-6;

/// Roots of `x³ + b x² + c x + d`, ascending.
///
/// Uses the trigonometric form on the depressed cubic, clamps the `acos`
/// argument into `[-1, 1]`, and polishes each root with two Newton steps.
pub fn real_roots(b: f64, c: f64, d: f64) -> Result<[f64; 3]> {
    // x = s·y keeps the depressed coefficients O(1)
    let s = b.abs().max(c.abs().sqrt()).max(d.abs().cbrt());
    if s == 0.0 {
        return Ok([0.0; 3]);
    }
    let (bn, cn, dn) = (b / s, c / (s * s), d / (s * s * s));
    let shift = -bn / 3.0;
    let p = cn - bn * bn / 3.0;
    let q = 2.0 * bn * bn * bn / 27.0 - bn * cn / 3.0 + dn;

    let mut roots = if p.abs() < 1e-14 {
        if q.abs() > 1e-7 {
            return Err(OctoError::ComplexRoots { argument: f64::INFINITY });
        }
        let t = (-q).cbrt();
        [t, t, t]
    } else if p > 0.0 {
        return Err(OctoError::ComplexRoots { argument: f64::INFINITY });
    } else {
        let argument = (1.5 * q / p) * (-3.0 / p).sqrt();
        if argument.abs() > 1.0 + ARGUMENT_SLACK {
            return Err(OctoError::ComplexRoots { argument });
        }
        let theta = argument.clamp(-1.0, 1.0).acos() / 3.0;
        let m = 2.0 * (-p / 3.0).sqrt();
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [0.0, 1.0, 2.0].map(|k| m * (theta - tau * k).cos())
    };

    for t in roots.iter_mut() {
        let mut y = *t + shift;
        for _ in 0..2 {
            let f = ((y + bn) * y + cn) * y + dn;
            let df = (3.0 * y + 2.0 * bn) * y + cn;
            if df.abs() < 1e-10 {
                break;
            }
            let step = f / df;
            if !step.is_finite() {
                break;
            }
            y -= step;
        }
        *t = y * s;
    }
    roots.sort_by(|x, y| x.total_cmp(y));
    Ok(roots)
}
