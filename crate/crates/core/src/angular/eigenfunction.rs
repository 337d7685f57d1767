//! Eigenfunction assembly from sector coefficients, evaluation on
//! S^1 \ S, L2 normalization, and the boundary-condition residual check
//! through the analytic Wronskian boundary vectors.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::angular::coeffs::{ab_coeffs, v1, v2, AbCoeffs};
use crate::angular::transport::{projector, transport_matrix, Mat2};
use crate::angular::{AngularLevel, ConnectionMatrix, Coupling, MuValue, Series};
use crate::error::{Error, Result};
use crate::quad::integrate;

const SECTOR: f64 = PI / 3.0;
const HALF_SECTOR: f64 = PI / 6.0;

/// An eigenfunction of M^U, stored as the twelve sector coefficients
/// C_+^k, C_-^k together with the mode data needed to evaluate it.
#[derive(Debug, Clone)]
pub struct AngularEigenfunction {
    coupling: Coupling,
    mu: MuValue,
    ab: AbCoeffs,
    /// (C_+^k, C_-^k) for sectors k = 1..6, after L2 normalization.
    coeffs: [(Complex64, Complex64); 6],
}

impl AngularEigenfunction {
    pub fn mu(&self) -> &MuValue {
        &self.mu
    }

    pub fn coefficients(&self) -> &[(Complex64, Complex64); 6] {
        &self.coeffs
    }

    /// The two sector-1 mode profiles (eta^1_+, eta^1_-) at local angle
    /// t in (0, pi/3).
    fn sector_modes(&self, t: f64) -> Result<(f64, f64)> {
        let (arg, minus_sign) = if t <= HALF_SECTOR {
            (t, 1.0)
        } else {
            (SECTOR - t, -1.0)
        };
        let w1 = v1(&self.coupling, &self.mu, arg)?;
        let w2 = v2(&self.coupling, &self.mu, arg)?;
        let plus = self.ab.b2 * w1 - self.ab.b1 * w2;
        let minus = minus_sign * (self.ab.a2 * w1 - self.ab.a1 * w2);
        Ok((plus, minus))
    }

    /// Evaluate at phi (radians, any branch); errors on the singular set.
    pub fn eval(&self, phi: f64) -> Result<Complex64> {
        let wrapped = phi.rem_euclid(2.0 * PI);
        let k = ((wrapped / SECTOR).floor() as usize).min(5);
        let t = wrapped - k as f64 * SECTOR;
        if t.abs() < 1e-13 || (SECTOR - t).abs() < 1e-13 {
            return Err(Error::InvalidInput(format!(
                "phi = {phi} lies on the singular set"
            )));
        }
        let (plus, minus) = self.sector_modes(t)?;
        let (cp, cm) = self.coeffs[k];
        Ok(cp * plus + cm * minus)
    }
}

/// L2 norm^2 over the circle. Reflection symmetry reduces it to two base
/// integrals over half a sector; the integrable endpoint singularity
/// |phi|^{2 min(nu, 1-nu)} is removed by the substitution u = phi^p with
/// p = min(nu, 1-nu) + 1/2.
fn norm_squared(
    c: &Coupling,
    mu: &MuValue,
    ab: &AbCoeffs,
    coeffs: &[(Complex64, Complex64); 6],
) -> Result<f64> {
    let nu = c.nu();
    let p = nu.min(1.0 - nu) + 0.5;
    let u_max = HALF_SECTOR.powf(p);
    let base = |which_plus: bool| -> Result<f64> {
        integrate(
            |u: f64| {
                if u <= 0.0 {
                    return Ok(0.0);
                }
                let t = u.powf(1.0 / p);
                let w1 = v1(c, mu, t)?;
                let w2 = v2(c, mu, t)?;
                let val = if which_plus {
                    ab.b2 * w1 - ab.b1 * w2
                } else {
                    ab.a2 * w1 - ab.a1 * w2
                };
                // dt = (1/p) u^{1/p - 1} du
                Ok(val * val * u.powf(1.0 / p - 1.0) / p)
            },
            0.0,
            u_max,
            1e-11,
        )
    };
    let ip = base(true)?;
    let im = base(false)?;
    let sum_p: f64 = coeffs.iter().map(|(cp, _)| cp.norm_sqr()).sum();
    let sum_m: f64 = coeffs.iter().map(|(_, cm)| cm.norm_sqr()).sum();
    Ok(2.0 * (sum_p * ip + sum_m * im))
}

/// Construct the eigenfunction of a solved level.
///
/// `which` selects within the eigenvalue multiplicity: the sector for
/// separating levels (0..6), the sign of Im(tau) for type-2 levels (0..2),
/// and must be 0 for the non-degenerate type-1 levels.
pub fn build_eigenfunction(
    level: &AngularLevel,
    c: &Coupling,
    u: &ConnectionMatrix,
    which: usize,
) -> Result<AngularEigenfunction> {
    if which >= level.multiplicity as usize {
        return Err(Error::InvalidInput(format!(
            "which = {which} exceeds multiplicity {}",
            level.multiplicity
        )));
    }
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut coeffs = [(zero, zero); 6];
    match level.series {
        Series::APlus | Series::AMinus | Series::BPlus | Series::BMinus => {
            let alternating = matches!(level.series, Series::APlus | Series::BMinus);
            let is_a = matches!(level.series, Series::APlus | Series::AMinus);
            for (k, slot) in coeffs.iter_mut().enumerate() {
                let sign = if alternating && k % 2 == 1 { -one } else { one };
                if is_a {
                    slot.1 = sign;
                } else {
                    slot.0 = sign;
                }
            }
        }
        Series::SepA => coeffs[which].1 = one,
        Series::SepB => coeffs[which].0 = one,
        Series::Type2Plus | Series::Type2Minus => {
            let re = level.series.re_tau().unwrap();
            let im = if which == 0 {
                0.75_f64.sqrt()
            } else {
                -0.75_f64.sqrt()
            };
            let tau = Complex64::new(re, im);
            let t = transport_matrix(c, u, &level.mu)?;
            let pi_tau = projector(tau, &t)?;
            let scale = pi_tau.norm_max().max(1e-300);
            let mut seed = pi_tau.mul_vec([one, zero]);
            if (seed[0].norm() + seed[1].norm()) < 1e-12 * scale {
                seed = pi_tau.mul_vec([zero, one]);
            }
            if (seed[0].norm() + seed[1].norm()) < 1e-12 * scale {
                return Err(Error::ZeroEigenvector);
            }
            let mut cur = seed;
            for slot in coeffs.iter_mut() {
                *slot = (cur[0], cur[1]);
                cur = [tau * cur[0], tau * cur[1]];
            }
        }
    }
    let ab = ab_coeffs(c, &level.mu)?;
    let mut psi = AngularEigenfunction {
        coupling: *c,
        mu: level.mu,
        ab,
        coeffs,
    };
    let n2 = norm_squared(c, &level.mu, &psi.ab, &psi.coeffs)?;
    if !(n2.is_finite() && n2 > 0.0) {
        return Err(Error::QuadratureFailure {
            what: "eigenfunction normalization",
        });
    }
    let inv = Complex64::new(1.0 / n2.sqrt(), 0.0);
    for slot in psi.coeffs.iter_mut() {
        slot.0 *= inv;
        slot.1 *= inv;
    }
    Ok(psi)
}

/// Boundary vectors (B_theta, B'_theta) at the singular point theta_j =
/// j pi/3, computed analytically from the coefficient representation.
fn boundary_vectors(
    psi: &AngularEigenfunction,
    j: usize,
) -> ([Complex64; 2], [Complex64; 2]) {
    let nu = psi.coupling.nu();
    let s = (3.0 * (2.0 * nu - 1.0)).sqrt();
    let shift = |k: usize| psi.coeffs[(k + j) % 6];
    let (cp1, cm1) = shift(0);
    let (cp6, cm6) = shift(5);
    let ab = &psi.ab;
    let mut b = [
        s * (-cp1 * ab.b1 - cm1 * ab.a1),
        s * (-cp6 * ab.b1 + cm6 * ab.a1),
    ];
    let mut bp = [
        s * (cp1 * ab.b2 + cm1 * ab.a2),
        s * (cp6 * ab.b2 - cm6 * ab.a2),
    ];
    if j % 2 == 1 {
        b.swap(0, 1);
        bp.swap(0, 1);
    }
    (b, bp)
}

/// Max over the six singular points of ||(U - 1) B_theta + i (U + 1) B'_theta||,
/// normalized by the largest boundary-data norm. Wronskian limits enter
/// analytically through the coefficient representation, not by numerical
/// differentiation.
pub fn boundary_residual(
    psi: &AngularEigenfunction,
    c: &Coupling,
    u: &ConnectionMatrix,
) -> Result<f64> {
    if (c.nu() - psi.coupling.nu()).abs() > 1e-14 {
        return Err(Error::InvalidInput(
            "eigenfunction was built for a different coupling".into(),
        ));
    }
    let um = u.matrix();
    let id = Mat2::identity();
    let u_minus = um.sub(&id);
    let u_plus = um.add(&id);
    let mut worst = 0.0_f64;
    let mut scale = 0.0_f64;
    for j in 0..6 {
        let (b, bp) = boundary_vectors(psi, j);
        let lhs = u_minus.mul_vec(b);
        let rhs = u_plus.mul_vec(bp);
        let r = [
            lhs[0] + Complex64::i() * rhs[0],
            lhs[1] + Complex64::i() * rhs[1],
        ];
        let res = (r[0].norm_sqr() + r[1].norm_sqr()).sqrt();
        let sc = (b[0].norm_sqr() + b[1].norm_sqr() + bp[0].norm_sqr() + bp[1].norm_sqr()).sqrt();
        worst = worst.max(res);
        scale = scale.max(sc);
    }
    if scale == 0.0 {
        return Err(Error::InvalidInput("vanishing boundary data".into()));
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::explicit::delta_nu;
    use crate::angular::{
        explicit_spectrum, separating_spectrum, solve_type1, solve_type2, ExplicitCase, ReTau,
        SignPart, Type1Series,
    };
    use crate::specfun::gamma;

    fn sign_factor_t(phi: f64) -> f64 {
        let t = (3.0 * phi).tan();
        t.signum()
    }

    #[test]
    fn dirichlet_bosonic_b_state_is_v1() {
        // sum over sectors of the B basis functions with equal weights
        // equals v_{1,mu} globally
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::dirichlet();
        let levels = separating_spectrum(&c, PI, 2).unwrap();
        let level = levels.iter().find(|l| l.series == Series::SepB).unwrap();
        let parts: Vec<_> = (0..6)
            .map(|k| build_eigenfunction(level, &c, &u, k).unwrap())
            .collect();
        let mut ratio0: Option<f64> = None;
        for i in 0..24 {
            let phi = 0.07 + i as f64 * (2.0 * PI - 0.14) / 24.0;
            if (phi / SECTOR - (phi / SECTOR).round()).abs() < 0.02 {
                continue;
            }
            let total: Complex64 = parts.iter().map(|p| p.eval(phi).unwrap()).sum();
            let w1 = v1(&c, &level.mu, phi).unwrap();
            assert!(total.im.abs() < 1e-12);
            let ratio = total.re / w1;
            match ratio0 {
                None => ratio0 = Some(ratio),
                Some(r0) => assert!(
                    (ratio - r0).abs() < 1e-8 * r0.abs(),
                    "phi = {phi}: ratio {ratio} vs {r0}"
                ),
            }
        }
    }

    #[test]
    fn dirichlet_fermionic_a_state_is_t_v1() {
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::dirichlet();
        let levels = separating_spectrum(&c, PI, 2).unwrap();
        let level = levels.iter().find(|l| l.series == Series::SepA).unwrap();
        let parts: Vec<_> = (0..6)
            .map(|k| build_eigenfunction(level, &c, &u, k).unwrap())
            .collect();
        let mut ratio0: Option<f64> = None;
        for i in 0..24 {
            let phi = 0.09 + i as f64 * (2.0 * PI - 0.18) / 24.0;
            if (phi / HALF_SECTOR - (phi / HALF_SECTOR).round()).abs() < 0.05 {
                continue;
            }
            let total: Complex64 = parts.iter().map(|p| p.eval(phi).unwrap()).sum();
            let w = sign_factor_t(phi) * v1(&c, &level.mu, phi).unwrap();
            let ratio = total.re / w;
            match ratio0 {
                None => ratio0 = Some(ratio),
                Some(r0) => assert!(
                    (ratio - r0).abs() < 1e-8 * r0.abs(),
                    "phi = {phi}: ratio {ratio} vs {r0}"
                ),
            }
        }
    }

    #[test]
    fn solved_levels_have_small_residual() {
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::new(0.7, 0.9);
        for series in [Type1Series::A, Type1Series::B] {
            for sign in [SignPart::Plus, SignPart::Minus] {
                let levels = solve_type1(&c, &u, series, sign, 2).unwrap();
                for level in &levels {
                    let psi = build_eigenfunction(level, &c, &u, 0).unwrap();
                    let r = boundary_residual(&psi, &c, &u).unwrap();
                    assert!(r < 1e-8, "{:?}: residual {r}", level.series);
                }
            }
        }
        for re_tau in [ReTau::PlusHalf, ReTau::MinusHalf] {
            let levels = solve_type2(&c, &u, re_tau, 2).unwrap();
            for level in &levels {
                for which in 0..2 {
                    let psi = build_eigenfunction(level, &c, &u, which).unwrap();
                    let r = boundary_residual(&psi, &c, &u).unwrap();
                    assert!(r < 1e-8, "{:?}/{which}: residual {r}", level.series);
                }
            }
        }
    }

    #[test]
    fn dirichlet_state_fails_neumann_condition() {
        let c = Coupling::new(0.8).unwrap();
        let dirichlet = ConnectionMatrix::dirichlet();
        let neumann = ConnectionMatrix::neumann();
        let levels = separating_spectrum(&c, PI, 1).unwrap();
        let psi = build_eigenfunction(&levels[0], &c, &dirichlet, 0).unwrap();
        assert!(boundary_residual(&psi, &c, &dirichlet).unwrap() < 1e-8);
        assert!(boundary_residual(&psi, &c, &neumann).unwrap() > 0.1);
    }

    #[test]
    fn residual_grows_linearly_off_root() {
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::new(0.7, 0.9);
        let levels = solve_type1(&c, &u, Type1Series::B, SignPart::Plus, 1).unwrap();
        let mu0 = match levels[0].mu {
            MuValue::Real(m) => m,
            _ => panic!(),
        };
        let residual_at = |delta: f64| {
            let level = AngularLevel::new(MuValue::Real(mu0 + delta), Series::BPlus);
            let psi = build_eigenfunction(&level, &c, &u, 0).unwrap();
            boundary_residual(&psi, &c, &u).unwrap()
        };
        let r1 = residual_at(1e-3);
        let r2 = residual_at(2e-3);
        assert!(r1 > 1e-6, "residual barely moves: {r1}");
        let slope_ratio = r2 / r1;
        assert!(
            (slope_ratio - 2.0).abs() < 0.2,
            "not linear: r(2h)/r(h) = {slope_ratio}"
        );
    }

    #[test]
    fn free_case_type2_matches_closed_form() {
        // sector-1 restriction is proportional to -i q(mu)/Im(tau) v1 + v2
        let nu = 0.8;
        let c = Coupling::new(nu).unwrap();
        let u = ConnectionMatrix::sigma1();
        let levels = solve_type2(&c, &u, ReTau::MinusHalf, 1).unwrap();
        let level = &levels[0];
        let mu = match level.mu {
            MuValue::Real(m) => m,
            _ => panic!(),
        };
        let q = 3.0 * crate::specfun::cos_pi(nu).powi(2) / (2.0 * PI * PI)
            * 2.0_f64.powf(-2.0 * nu)
            * gamma(0.5 - nu).unwrap()
            * gamma(1.5 - nu).unwrap()
            * gamma(nu + mu).unwrap()
            * gamma(nu - mu).unwrap();
        for which in 0..2 {
            let im_tau = if which == 0 {
                0.75_f64.sqrt()
            } else {
                -0.75_f64.sqrt()
            };
            let psi = build_eigenfunction(level, &c, &u, which).unwrap();
            let mut ratio0: Option<Complex64> = None;
            for i in 1..8 {
                let phi = HALF_SECTOR * i as f64 / 8.0;
                let closed = Complex64::new(0.0, -q / im_tau) * v1(&c, &level.mu, phi).unwrap()
                    + v2(&c, &level.mu, phi).unwrap();
                let got = psi.eval(phi).unwrap();
                let ratio = got / closed;
                match ratio0 {
                    None => ratio0 = Some(ratio),
                    Some(r0) => assert!(
                        (ratio - r0).norm() < 1e-8 * r0.norm(),
                        "which={which} phi={phi}: {ratio} vs {r0}"
                    ),
                }
            }
        }
    }

    #[test]
    fn oscillator_limit_type2_is_plane_wave() {
        // nu -> 1: the free-case type-2 state reduces to exp(+-3 i mu phi)
        let c = Coupling::new(1.0 - 1e-9).unwrap();
        let u = ConnectionMatrix::sigma1();
        let d = delta_nu(c.nu());
        let mu = 1.0 - d; // lowest Re(tau) = +1/2 level
        let level = AngularLevel::new(MuValue::Real(mu), Series::Type2Plus);
        let mut matched = [false; 2];
        for which in 0..2 {
            let psi = build_eigenfunction(&level, &c, &u, which).unwrap();
            for (si, sign) in [1.0, -1.0].iter().enumerate() {
                let mut ok = true;
                let phi0 = 0.11;
                let base = psi.eval(phi0).unwrap();
                for i in 0..40 {
                    let phi = 0.05 + i as f64 * (2.0 * PI - 0.1) / 40.0;
                    if (phi / SECTOR - (phi / SECTOR).round()).abs() < 0.03 {
                        continue;
                    }
                    let got = psi.eval(phi).unwrap() / base;
                    let want = (Complex64::i() * 3.0 * mu * sign * (phi - phi0)).exp();
                    if (got - want).norm() > 1e-8 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    matched[si] = true;
                }
            }
        }
        assert!(
            matched[0] && matched[1],
            "plane-wave limits not matched: {matched:?}"
        );
    }

    #[test]
    fn explicit_and_solver_levels_agree_for_eigenfunctions() {
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::sigma1();
        let explicit = explicit_spectrum(ExplicitCase::FreeSigma1, &c, 6);
        for level in explicit.iter().filter(|l| l.multiplicity == 1) {
            let psi = build_eigenfunction(level, &c, &u, 0).unwrap();
            let r = boundary_residual(&psi, &c, &u).unwrap();
            assert!(r < 1e-8, "{:?}: residual {r}", level.series);
        }
    }
}
