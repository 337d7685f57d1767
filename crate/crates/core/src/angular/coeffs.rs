//! Limiting values a_i(mu), b_i(mu) of the basic angular modes at the sector
//! midpoint, their products, and the local mode functions v_1, v_2.

use std::f64::consts::PI;

use crate::angular::{Coupling, MuValue};
use crate::error::Result;
use crate::specfun::{gauss_2f1_sym, ln_abs_gamma_signed, ln_gamma_pair};

/// The four limiting values of the basic modes and their derivatives at
/// phi = pi/6; real for both real and purely imaginary mu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbCoeffs {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
}

impl AbCoeffs {
    /// a = a1 + i a2, b = b1 + i b2 as used by the transport matrix.
    pub fn a_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.a1, self.a2)
    }

    pub fn b_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.b1, self.b2)
    }
}

/// Gamma(num) sqrt(pi) / (Gamma(u + mu/2) Gamma(u - mu/2)) in plain f64,
/// with all magnitudes combined in log space first. The reciprocal pair is
/// entire: a pole of a denominator factor is an exact zero of the quotient.
fn gamma_quotient(num_arg: f64, u: f64, mu: &MuValue, scale: f64) -> Result<f64> {
    let (ln_num, s_num) = ln_abs_gamma_signed(num_arg)?;
    let (ln_pair, s_pair) = ln_gamma_pair(u, mu);
    if ln_pair.is_infinite() {
        return Ok(0.0);
    }
    let ln_half = 0.5 * PI.ln();
    Ok(scale * s_num * s_pair * (ln_num + ln_half - ln_pair).exp())
}

/// The coefficients a_1, a_2, b_1, b_2; for imaginary mu the conjugate-pair
/// gamma arguments make every value real.
pub fn ab_coeffs(c: &Coupling, mu: &MuValue) -> Result<AbCoeffs> {
    let nu = c.nu();
    Ok(AbCoeffs {
        a1: gamma_quotient(nu + 0.5, 0.5 * (nu + 1.0), mu, 1.0)?,
        a2: gamma_quotient(1.5 - nu, 0.5 * (2.0 - nu), mu, 1.0)?,
        b1: gamma_quotient(nu + 0.5, 0.5 * nu, mu, 6.0)?,
        b2: gamma_quotient(1.5 - nu, 0.5 * (1.0 - nu), mu, 6.0)?,
    })
}

/// a_1(mu) b_1(mu) = 6 Gamma^2(nu + 1/2) 2^{2(nu-1)} / (Gamma(nu+mu) Gamma(nu-mu)).
pub(crate) fn product_a1b1(c: &Coupling, mu: &MuValue) -> Result<f64> {
    let nu = c.nu();
    let (ln_g, _) = ln_abs_gamma_signed(nu + 0.5)?;
    let double = double_mu(mu);
    let (ln_pair, s_pair) = ln_gamma_pair(nu, &double);
    if ln_pair.is_infinite() {
        return Ok(0.0);
    }
    let ln = 6.0_f64.ln() + 2.0 * ln_g + 2.0 * (nu - 1.0) * std::f64::consts::LN_2 - ln_pair;
    Ok(s_pair * ln.exp())
}

/// a_2(mu) b_2(mu) = 6 Gamma^2(3/2 - nu) 2^{-2 nu} / (Gamma(1-nu+mu) Gamma(1-nu-mu)).
pub(crate) fn product_a2b2(c: &Coupling, mu: &MuValue) -> Result<f64> {
    let nu = c.nu();
    let (ln_g, _) = ln_abs_gamma_signed(1.5 - nu)?;
    let double = double_mu(mu);
    let (ln_pair, s_pair) = ln_gamma_pair(1.0 - nu, &double);
    if ln_pair.is_infinite() {
        return Ok(0.0);
    }
    let ln = 6.0_f64.ln() + 2.0 * ln_g - 2.0 * nu * std::f64::consts::LN_2 - ln_pair;
    Ok(s_pair * ln.exp())
}

fn double_mu(mu: &MuValue) -> MuValue {
    match *mu {
        MuValue::Real(m) => MuValue::Real(2.0 * m),
        MuValue::Imaginary(x) => MuValue::Imaginary(2.0 * x),
    }
}

/// cos(pi mu) extended to imaginary mu, where it becomes cosh(pi x).
pub(crate) fn cos_pi_mu(mu: &MuValue) -> f64 {
    match *mu {
        MuValue::Real(m) => crate::specfun::cos_pi(m),
        MuValue::Imaginary(x) => (PI * x).cosh(),
    }
}

/// Basic mode v_{1,mu}(phi) = |sin 3phi|^nu F((nu-mu)/2, (nu+mu)/2, nu+1/2; sin^2 3phi).
pub(crate) fn v1(c: &Coupling, mu: &MuValue, phi: f64) -> Result<f64> {
    let nu = c.nu();
    let s3 = (3.0 * phi).sin().abs();
    let z = (s3 * s3).min(1.0);
    let f = gauss_2f1_sym(nu, mu.mu_squared(), nu + 0.5, z)?;
    Ok(s3.powf(nu) * f)
}

/// Basic mode v_{2,mu}(phi) = |sin 3phi|^{1-nu} F((1-nu-mu)/2, (1-nu+mu)/2, 3/2-nu; sin^2 3phi).
pub(crate) fn v2(c: &Coupling, mu: &MuValue, phi: f64) -> Result<f64> {
    let nu = c.nu();
    let s3 = (3.0 * phi).sin().abs();
    let z = (s3 * s3).min(1.0);
    let f = gauss_2f1_sym(1.0 - nu, mu.mu_squared(), 1.5 - nu, z)?;
    Ok(s3.powf(1.0 - nu) * f)
}
