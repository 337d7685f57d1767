//! Type-2 eigenvalue equation F_2(mu) = +-1/2 for non-separating boundary
//! conditions: evaluation on the real and imaginary axes, the exponential
//! decomposition of F_2(ix) used to certify a finite scan window for the
//! finitely many negative eigenvalues, and the root scanner.

use std::f64::consts::PI;

use crate::angular::coeffs::{cos_pi_mu, product_a1b1, product_a2b2};
use crate::angular::{
    sort_levels, AngularLevel, ConnectionMatrix, Coupling, MuValue, Series, MU_TOL,
};
use crate::error::{Error, Result};
use crate::roots::uniform_grid;
use crate::specfun::{abs_gamma_sq, cos_pi, gamma};

/// Re(tau) = +-1/2 selecting the defining or the twisted two-dimensional
/// representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReTau {
    PlusHalf,
    MinusHalf,
}

impl ReTau {
    pub fn value(&self) -> f64 {
        match self {
            ReTau::PlusHalf => 0.5,
            ReTau::MinusHalf => -0.5,
        }
    }

    pub fn series(&self) -> Series {
        match self {
            ReTau::PlusHalf => Series::Type2Plus,
            ReTau::MinusHalf => Series::Type2Minus,
        }
    }
}

/// Trigonometric prefactors of the three terms of F_2.
fn f2_prefactors(c: &Coupling, u: &ConnectionMatrix) -> Result<(f64, f64, f64)> {
    if u.is_separating() {
        return Err(Error::SeparatingInput);
    }
    let nu = c.nu();
    let (alpha, beta) = (u.alpha(), u.beta());
    let sb = beta.sin();
    let k0 = alpha.sin() / (sb * cos_pi(nu));
    let km = (beta.cos() - alpha.cos()) / ((6.0 * nu - 3.0) * sb);
    let kp = (beta.cos() + alpha.cos()) / ((6.0 * nu - 3.0) * sb);
    Ok((k0, km, kp))
}

/// The type-2 spectral function
/// F_2(mu) = sin(a)/sin(b) cos(pi mu)/cos(pi nu)
///         + (cos b - cos a)/((6nu-3) sin b) a1 b1
///         + (cos b + cos a)/((6nu-3) sin b) a2 b2.
///
/// On the imaginary axis each piece saturates to a signed infinity instead
/// of overflowing; crossings of +-1/2 are unaffected since they occur where
/// |F_2| is order one.
pub fn f2(c: &Coupling, u: &ConnectionMatrix, mu: &MuValue) -> Result<f64> {
    let (k0, km, kp) = f2_prefactors(c, u)?;
    let t0 = k0 * cos_pi_mu(mu);
    let t1 = km * product_a1b1(c, mu)?;
    let t2 = kp * product_a2b2(c, mu)?;
    let sum = t0 + t1 + t2;
    if sum.is_nan() && (t0.is_infinite() || t1.is_infinite() || t2.is_infinite()) {
        // saturation: report the sign of the dominant exponential piece
        let dominant = [t0, t1, t2]
            .into_iter()
            .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
            .unwrap();
        return Ok(dominant);
    }
    Ok(sum)
}

/// The decomposition F_2(ix) = e^{pi x} [kappa_0 K_0 + kappa_- x^{1-2nu} K_-
/// + kappa_+ x^{2nu-1} K_+] with K_a > 0 and K_a -> 1; returns
/// (kappa_0, kappa_-, kappa_+).
pub(crate) fn stability_kappas(c: &Coupling, u: &ConnectionMatrix) -> Result<(f64, f64, f64)> {
    if u.is_separating() {
        return Err(Error::SeparatingInput);
    }
    let nu = c.nu();
    let (alpha, beta) = (u.alpha(), u.beta());
    let sb = beta.sin();
    let k0 = alpha.sin() / (2.0 * cos_pi(nu) * sb);
    let g1 = gamma(nu + 0.5)?;
    let g2 = gamma(1.5 - nu)?;
    let km = g1 * g1 * 2.0_f64.powf(2.0 * (nu - 1.0)) / (PI * (2.0 * nu - 1.0))
        * (beta.cos() - alpha.cos())
        / sb;
    let kp = g2 * g2 * 2.0_f64.powf(-2.0 * nu) / (PI * (2.0 * nu - 1.0))
        * (beta.cos() + alpha.cos())
        / sb;
    Ok((k0, km, kp))
}

/// The normalized profiles K_0, K_-, K_+ at x > 0.
pub(crate) fn stability_profiles(c: &Coupling, x: f64) -> Result<(f64, f64, f64)> {
    let nu = c.nu();
    // K_0 = 2 e^{-pi x} cosh(pi x) = 1 + e^{-2 pi x}
    let k0 = 1.0 + (-2.0 * PI * x).exp();
    // K_- = 2 pi x^{2nu-1} e^{-pi x} / |Gamma(nu + ix)|^2, in log form
    let lg_m = abs_gamma_sq(nu, x)?.ln();
    let km = ((2.0 * PI).ln() + (2.0 * nu - 1.0) * x.ln() - PI * x - lg_m).exp();
    // K_+ = 2 pi x^{1-2nu} e^{-pi x} / |Gamma(1 - nu + ix)|^2
    let lg_p = abs_gamma_sq(1.0 - nu, x)?.ln();
    let kp = ((2.0 * PI).ln() + (1.0 - 2.0 * nu) * x.ln() - PI * x - lg_p).exp();
    Ok((k0, km, kp))
}

/// Certify a scan cutoff x_max beyond which |F_2(ix)| > 1 is guaranteed by
/// the exponential lower bound: the dominant term minus the worst case of
/// the other two, sampled across the doubling interval. Starts at 10 and
/// doubles; capped at 320 with `certified = false`.
pub(crate) fn certify_imaginary_cutoff(
    c: &Coupling,
    u: &ConnectionMatrix,
) -> Result<(f64, bool)> {
    let nu = c.nu();
    let (k0, km, kp) = stability_kappas(c, u)?;
    let mut x_max: f64 = 10.0;
    while x_max <= 320.0 {
        let mut ok = true;
        for x in uniform_grid(x_max, 2.0 * x_max, 0.25) {
            let (p0, pm, pp) = stability_profiles(c, x)?;
            let t0 = k0 * p0;
            let tm = km * x.powf(1.0 - 2.0 * nu) * pm;
            let tp = kp * x.powf(2.0 * nu - 1.0) * pp;
            // dominant term by asymptotic priority: x^{2nu-1} beats the
            // constant beats x^{1-2nu}
            let lower = if kp != 0.0 {
                tp.abs() - t0.abs() - tm.abs()
            } else if k0 != 0.0 {
                t0.abs() - tm.abs()
            } else {
                tm.abs()
            };
            // e^{pi x} lower > 1; evaluated in log space to dodge overflow
            if lower <= 0.0 || PI * x + lower.ln() <= 0.0 {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok((x_max, true));
        }
        x_max *= 2.0;
    }
    Ok((320.0, false))
}

/// Zeros of the large-mu envelope f_2(mu) = (1-nu+mu)^{2nu-1} sin(pi(mu+nu)):
/// the real type-2 roots cluster around mu = k - nu.
fn envelope_zeros(nu: f64, mu_max: f64) -> Vec<f64> {
    let mut zeros = Vec::new();
    let mut k = 1;
    loop {
        let z = k as f64 - nu;
        if z > mu_max {
            break zeros;
        }
        if z > 0.0 {
            zeros.push(z);
        }
        k += 1;
    }
}

fn scan_grid(nu: f64, mu_max: f64) -> Vec<f64> {
    // coarse 1e-2 grid, refined to 1e-4 near the predicted envelope zeros
    let mut grid = uniform_grid(0.0, mu_max, 1e-2);
    for z in envelope_zeros(nu, mu_max) {
        let lo = (z - 0.06).max(0.0);
        grid.extend(uniform_grid(lo, (z + 0.06).min(mu_max), 1e-4));
    }
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid.dedup();
    grid
}

/// All imaginary-axis roots of F_2(ix) = target on the certified window.
pub(crate) fn imaginary_roots(
    c: &Coupling,
    u: &ConnectionMatrix,
    target: f64,
) -> Result<Vec<f64>> {
    let (x_max, certified) = certify_imaginary_cutoff(c, u)?;
    if !certified {
        eprintln!(
            "warning: type-2 imaginary scan window capped at x = {x_max} without certification \
             (nu = {}, alpha = {}, beta = {})",
            c.nu(),
            u.alpha(),
            u.beta()
        );
    }
    let g = |x: f64| -> Result<f64> { Ok(f2(c, u, &MuValue::Imaginary(x))? - target) };
    let grid = uniform_grid(0.0, x_max, 1e-3);
    let roots = crate::roots::scan_sign_changes(g, &grid, MU_TOL)?;
    Ok(roots.into_iter().filter(|&x| x > 0.0).collect())
}

/// Type-2 levels for one Re(tau) = +-1/2, sorted ascending by lambda, each
/// reported once per conjugate tau-pair with multiplicity 2.
///
/// Real roots are located by a sign-change scan refined near the asymptotic
/// zero pattern of the envelope; negative eigenvalues by the certified
/// imaginary-axis scan.
pub fn solve_type2(
    c: &Coupling,
    u: &ConnectionMatrix,
    re_tau: ReTau,
    n_levels: usize,
) -> Result<Vec<AngularLevel>> {
    if u.is_separating() {
        return Err(Error::SeparatingInput);
    }
    if n_levels == 0 {
        return Ok(Vec::new());
    }
    let target = re_tau.value();
    let tag = re_tau.series();
    let mut levels: Vec<AngularLevel> = imaginary_roots(c, u, target)?
        .into_iter()
        .map(|x| AngularLevel::new(MuValue::Imaginary(x), tag))
        .collect();

    // real roots: about one per unit mu per target for large mu
    let mut mu_max = (n_levels as f64) + 4.0;
    loop {
        let g = |m: f64| -> Result<f64> { Ok(f2(c, u, &MuValue::Real(m))? - target) };
        let real_roots = crate::roots::scan_sign_changes(g, &scan_grid(c.nu(), mu_max), MU_TOL)?;
        if real_roots.len() + levels.len() >= n_levels || mu_max > 8.0 * (n_levels as f64 + 4.0) {
            levels.extend(
                real_roots
                    .into_iter()
                    .filter(|&m| m > 0.0)
                    .map(|m| AngularLevel::new(MuValue::Real(m), tag)),
            );
            break;
        }
        mu_max *= 2.0;
    }

    sort_levels(&mut levels);
    levels.truncate(n_levels);
    Ok(levels)
}
