//! Gauss hypergeometric function on z in [0, 1).
//!
//! Everything the angular problem needs has parameters of the symmetric form
//! a = (s - mu)/2, b = (s + mu)/2 with real s and mu either real or purely
//! imaginary, so the series and the z -> 1-z connection formula can be
//! evaluated entirely in real arithmetic: the term recurrence only sees
//! (a+n)(b+n) = (n + s/2)^2 - mu^2/4.

use crate::error::{Error, Result};
use crate::specfun::gamma::{ln_abs_gamma_signed, ln_gamma};
use num_complex::Complex64;

const SERIES_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 4000;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Gamma(u + mu/2) Gamma(u - mu/2) as (ln |.|, sign); `None` when a factor
/// sits on a pole (the reciprocal vanishes there).
fn pair_ln(u: f64, musq: f64) -> Option<(f64, f64)> {
    if musq >= 0.0 {
        let half = 0.5 * musq.sqrt();
        let a = ln_abs_gamma_signed(u + half).ok()?;
        let b = ln_abs_gamma_signed(u - half).ok()?;
        Some((a.0 + b.0, a.1 * b.1))
    } else {
        let half = 0.5 * (-musq).sqrt();
        let lg = ln_gamma(Complex64::new(u, half)).ok()?;
        Some((2.0 * lg.re, 1.0))
    }
}

/// Series sum of F((s-mu)/2, (s+mu)/2; c; z) for z <= 1/2.
fn series(s: f64, musq: f64, c: f64, z: f64) -> Result<f64> {
    let ab = 0.25 * (s * s - musq);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut small_streak = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let num = nf * nf + s * nf + ab;
        let den = (c + nf) * (nf + 1.0);
        term *= num / den * z;
        sum += term;
        if term.abs() <= SERIES_TOL * sum.abs().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "2F1 series",
    })
}

/// Core evaluation with the symmetric parameter set. Accepts z = 1 when
/// c - a - b > 0, where the value is the classical Gauss limit (used for
/// the sector-midpoint values of the angular modes).
pub(crate) fn gauss_2f1_sym(s: f64, musq: f64, c: f64, z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::InvalidInput(format!(
            "2F1 argument z = {z} outside [0, 1]"
        )));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::GammaPole { re: c, im: 0.0 });
    }
    if z <= 0.5 {
        return series(s, musq, c, z);
    }
    // linear transformation in w = 1 - z; requires d = c - a - b non-integer
    let d = c - s;
    if d == d.round() {
        return Err(Error::InvalidInput(format!(
            "2F1 connection formula needs non-integer c-a-b, got {d}"
        )));
    }
    if z == 1.0 && d <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "2F1 divergent at z = 1 for c-a-b = {d} <= 0"
        )));
    }
    let w = 1.0 - z;
    let (lc, sc) = ln_abs_gamma_signed(c)?;
    let (ld, sd) = ln_abs_gamma_signed(d)?;
    let (lmd, smd) = ln_abs_gamma_signed(-d)?;

    let mut total = 0.0;
    if let Some((lp, sp)) = pair_ln(c - 0.5 * s, musq) {
        let coeff = sc * sd * sp * (lc + ld - lp).exp();
        if coeff != 0.0 {
            total += coeff * series(s, musq, s - c + 1.0, w)?;
        }
    }
    if let Some((lp, sp)) = pair_ln(0.5 * s, musq) {
        let coeff = sc * smd * sp * (lc + lmd - lp).exp();
        if coeff != 0.0 {
            total += coeff * w.powf(d) * series(2.0 * c - s, musq, d + 1.0, w)?;
        }
    }
    Ok(total)
}

/// F(a, b; c; z) for real parameters and 0 <= z < 1.
///
/// The series is used for z <= 1/2 and the (1-z) connection formula beyond;
/// integer c-a-b is unsupported there (never needed for the angular modes,
/// where c-a-b = 1/2).
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if z >= 1.0 {
        return Err(Error::InvalidInput(format!(
            "2F1 argument z = {z} outside [0, 1)"
        )));
    }
    let diff = b - a;
    gauss_2f1_sym(a + b, diff * diff, c, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma;
    use crate::specfun::poly::gegenbauer;
    use approx::assert_relative_eq;

    #[test]
    fn unit_value_at_origin() {
        for &(a, b, c) in &[(0.3, 1.7, 0.9), (-2.0, 5.0, 1.1), (0.0, 0.0, 2.3)] {
            assert_eq!(gauss_2f1(a, b, c, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn matches_reference_values() {
        // mpmath references
        assert_relative_eq!(
            gauss_2f1(0.2, 0.7, 1.3, 0.31).unwrap(),
            1.0390658992268337242,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            gauss_2f1(-0.35, 1.15, 1.3, 0.97).unwrap(),
            0.42717208530621698256,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            gauss_2f1(0.45, -0.8, 0.7, 0.55).unwrap(),
            0.70007432976173725654,
            max_relative = 1e-11
        );
    }

    #[test]
    fn gegenbauer_reduction() {
        // F(-l/2, l/2 + nu, nu + 1/2; sin^2 3phi)
        //   = l! Gamma(2 nu) / Gamma(l + 2 nu) * C_l^nu(|cos 3phi|)
        let check = |l: u32, nu: f64, phi: f64, tol: f64| {
            let z = (3.0 * phi).sin().powi(2);
            let lhs = gauss_2f1(-(l as f64) / 2.0, l as f64 / 2.0 + nu, nu + 0.5, z).unwrap();
            let fact: f64 = (1..=l).map(|k| k as f64).product();
            let scale = fact * gamma(2.0 * nu).unwrap() / gamma(l as f64 + 2.0 * nu).unwrap();
            let rhs = scale * gegenbauer(l, nu, (3.0 * phi).cos().abs());
            assert!(
                (lhs - rhs).abs() <= tol * rhs.abs().max(1.0),
                "l={l} nu={nu} phi={phi}: {lhs} vs {rhs}"
            );
        };
        check(2, 0.8, 0.1, 1e-10);
        check(4, 0.8, 0.07, 1e-10);
    }

    #[test]
    fn nu_one_reduces_to_sinc() {
        // v_{1,mu}(phi) = sin(3 mu phi)/mu at nu = 1
        let mu = 1.4_f64;
        let phi = 0.09_f64;
        let z = (3.0 * phi).sin().powi(2);
        let v1 = (3.0 * phi).sin().abs()
            * gauss_2f1((1.0 - mu) / 2.0, (1.0 + mu) / 2.0, 1.5, z).unwrap();
        assert_relative_eq!(v1, (3.0 * mu * phi).sin() / mu, max_relative = 1e-10);
    }

    #[test]
    fn continuity_across_method_switch() {
        // same value from the series branch and the transformed branch at z = 1/2
        for &(a, b, c) in &[(0.35, 1.15, 1.3), (-0.6, 1.4, 0.9), (0.25, 0.85, 1.05)] {
            let left = gauss_2f1(a, b, c, 0.5).unwrap();
            let right = {
                // force the transformation path by stepping just past 1/2
                let eps = 1e-12;
                gauss_2f1(a, b, c, 0.5 + eps).unwrap()
            };
            assert!(
                (left - right).abs() < 1e-10,
                "discontinuity at z=1/2 for ({a},{b},{c}): {left} vs {right}"
            );
        }
    }

    #[test]
    fn imaginary_mu_parameters_are_real() {
        // conjugate-pair parameters: F((nu - ix)/2, (nu + ix)/2; c; z)
        let v = gauss_2f1_sym(0.8, -1.69, 1.3, 0.42).unwrap();
        assert!(v.is_finite());
        // agreement with a direct complex series (oracle computed termwise here)
        let a = Complex64::new(0.4, -0.65);
        let b = Complex64::new(0.4, 0.65);
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(1.0, 0.0);
        for n in 0..200 {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((1.3 + nf) * (nf + 1.0)) * 0.42;
            sum += term;
        }
        assert!(sum.im.abs() < 1e-14);
        assert_relative_eq!(v, sum.re, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gauss_2f1(0.3, 0.7, -2.0, 0.2).is_err());
        assert!(gauss_2f1(0.3, 0.7, 1.1, 1.0).is_err());
        assert!(gauss_2f1(0.3, 0.7, 1.1, -0.1).is_err());
        // integer c-a-b only fails on the transformed branch
        assert!(gauss_2f1(0.5, 0.5, 2.0, 0.7).is_err());
        assert!(gauss_2f1(0.5, 0.5, 2.0, 0.3).is_ok());
    }
}
