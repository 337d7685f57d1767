//! Type-1 eigenvalue equations F_A(mu) = rhs, F_B(mu) = rhs: evaluation,
//! pole ladders, analytic bracketing and the bisection solver, including
//! the at-most-one negative eigenvalue per equation.

use crate::angular::{
    AngularLevel, ConnectionMatrix, Coupling, MuValue, Series, DIVERGENT_TAN_TOL, MU_TOL,
};
use crate::error::{Error, Result};
use crate::roots::bisect;
use crate::specfun::{gamma_ratio, ln_gamma_pair};

/// Which family of modes the equation constrains: A (odd under the mirror
/// reflections) or B (even).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Type1Series {
    A,
    B,
}

/// The +- sign in tan((alpha +- beta)/2); fixes the exchange-S3 parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPart {
    Plus,
    Minus,
}

impl SignPart {
    fn apply(&self, alpha: f64, beta: f64) -> f64 {
        match self {
            SignPart::Plus => alpha + beta,
            SignPart::Minus => alpha - beta,
        }
    }
}

/// Right-hand side of a type-1 equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rhs {
    Finite(f64),
    /// cos((alpha +- beta)/2) = 0: the equation collapses to the explicit
    /// ladder a_1(mu) = 0 resp. b_1(mu) = 0.
    Divergent,
}

/// Series tag of the level produced by (series, sign).
pub(crate) fn series_tag(series: Type1Series, sign: SignPart) -> Series {
    match (series, sign) {
        (Type1Series::A, SignPart::Plus) => Series::APlus,
        (Type1Series::A, SignPart::Minus) => Series::AMinus,
        (Type1Series::B, SignPart::Plus) => Series::BPlus,
        (Type1Series::B, SignPart::Minus) => Series::BMinus,
    }
}

/// F_A(mu) or F_B(mu); for imaginary mu this is the manifestly positive
/// modulus-squared form. The zeros sit at denominator-pair poles; the
/// poles of F itself (numerator-pair poles) raise the pole error.
pub fn f_type1(series: Type1Series, c: &Coupling, mu: &MuValue) -> Result<f64> {
    let nu = c.nu();
    let (u_num, u_den) = match series {
        Type1Series::A => (0.5 * (1.0 + nu), 0.5 * (2.0 - nu)),
        Type1Series::B => (0.5 * nu, 0.5 * (1.0 - nu)),
    };
    let (ln_num, s_num) = ln_gamma_pair(u_num, mu);
    let (ln_den, s_den) = ln_gamma_pair(u_den, mu);
    if ln_num.is_infinite() {
        return Err(Error::GammaPole {
            re: u_num,
            im: 0.0,
        });
    }
    if ln_den.is_infinite() {
        return Ok(0.0);
    }
    Ok(s_num * s_den * (ln_num - ln_den).exp())
}

/// The constant Gamma(nu + 1/2)/Gamma(3/2 - nu) tan((alpha +- beta)/2),
/// with the divergent-tangent branch flagged rather than evaluated.
pub fn rhs_type1(c: &Coupling, u: &ConnectionMatrix, sign: SignPart) -> Rhs {
    let half = 0.5 * sign.apply(u.alpha(), u.beta());
    if half.cos().abs() < DIVERGENT_TAN_TOL {
        return Rhs::Divergent;
    }
    let scale = gamma_ratio(c.nu() + 0.5, 1.5 - c.nu())
        .expect("gamma arguments are positive inside the coupling range");
    Rhs::Finite(scale * half.tan())
}

/// Pole ladder of the equation: mu_m^inf (F_A) or mubar_m^inf (F_B).
pub(crate) fn pole(series: Type1Series, nu: f64, m: u32) -> f64 {
    match series {
        Type1Series::A => nu + 1.0 + 2.0 * m as f64,
        Type1Series::B => nu + 2.0 * m as f64,
    }
}

/// Closed-form ladder for the divergent-tangent branch (a_1 = 0 / b_1 = 0).
pub(crate) fn divergent_ladder(series: Type1Series, nu: f64, n: u32) -> f64 {
    match series {
        Type1Series::A => 2.0 * n as f64 + 1.0 + nu,
        Type1Series::B => 2.0 * n as f64 + nu,
    }
}

/// Whether the strict inequality F(0) < rhs holds, i.e. whether the
/// equation contributes exactly one negative eigenvalue.
pub(crate) fn negative_root_exists(series: Type1Series, c: &Coupling, rhs: f64) -> Result<bool> {
    Ok(f_type1(series, c, &MuValue::Real(0.0))? < rhs)
}

/// Solve the single negative root on the imaginary axis by bisection of the
/// strictly increasing x -> F(ix), growing the upper bracket geometrically
/// (F(ix) ~ (x/2)^(2 nu - 1) guarantees escape).
pub(crate) fn solve_negative_root(series: Type1Series, c: &Coupling, rhs: f64) -> Result<f64> {
    let g = |x: f64| -> Result<f64> { Ok(f_type1(series, c, &MuValue::Imaginary(x))? - rhs) };
    let mut hi = 1.0;
    let mut tries = 0;
    while g(hi)? < 0.0 {
        hi *= 2.0;
        tries += 1;
        if tries > 400 {
            return Err(Error::BracketingFailure {
                what: format!("F(ix) failed to exceed rhs = {rhs} below x = {hi}"),
            });
        }
    }
    bisect(g, 0.0, hi, MU_TOL)
}

/// One real root inside the open interval between two consecutive poles
/// (or below the first pole when `left_pole` is `None`).
fn solve_in_interval(
    series: Type1Series,
    c: &Coupling,
    rhs: f64,
    left_pole: Option<f64>,
    right_pole: f64,
) -> Result<Option<f64>> {
    let g = |m: f64| -> Result<f64> { Ok(f_type1(series, c, &MuValue::Real(m))? - rhs) };
    let left_limit = left_pole.unwrap_or(0.0);
    let width = right_pole - left_limit;

    // left end: F -> +inf at pole+0 (or F(0) >= rhs for the first interval)
    let lo = if left_pole.is_some() {
        let mut delta = 0.25 * width;
        loop {
            let x = left_limit + delta;
            if g(x)? > 0.0 {
                break x;
            }
            delta /= 8.0;
            if delta < 1e-15 * right_pole.max(1.0) {
                return Err(Error::BracketingFailure {
                    what: format!("left bracket collapse at pole {left_limit}"),
                });
            }
        }
    } else {
        // interval [0, first pole): a root exists iff F(0) >= rhs
        if g(0.0)? < 0.0 {
            return Ok(None);
        }
        0.0
    };

    // right end: F -> -inf at pole-0
    let mut delta = 0.25 * width;
    let hi = loop {
        let x = right_pole - delta;
        if x > lo && g(x)? < 0.0 {
            break x;
        }
        delta /= 8.0;
        if delta < 1e-15 * right_pole.max(1.0) {
            return Err(Error::BracketingFailure {
                what: format!("right bracket collapse at pole {right_pole}"),
            });
        }
    };
    Ok(Some(bisect(g, lo, hi, MU_TOL)?))
}

/// All levels of one type-1 equation, ascending in lambda.
///
/// Real roots: exactly one per inter-pole interval (F is strictly
/// decreasing there), plus one below the first pole iff F(0) >= rhs.
/// Imaginary root: exactly one iff F(0) < rhs, found on the strictly
/// increasing imaginary axis. Divergent rhs dispatches to the explicit
/// ladder.
pub(crate) fn solve_type1_equation(
    series: Type1Series,
    c: &Coupling,
    rhs: Rhs,
    n_levels: usize,
    tag: Series,
) -> Result<Vec<AngularLevel>> {
    let nu = c.nu();
    let mut levels = Vec::with_capacity(n_levels);
    match rhs {
        Rhs::Divergent => {
            for n in 0..n_levels as u32 {
                levels.push(AngularLevel::new(
                    MuValue::Real(divergent_ladder(series, nu, n)),
                    tag,
                ));
            }
        }
        Rhs::Finite(r) => {
            if negative_root_exists(series, c, r)? {
                let x = solve_negative_root(series, c, r)?;
                levels.push(AngularLevel::new(MuValue::Imaginary(x), tag));
            } else if let Some(root) =
                solve_in_interval(series, c, r, None, pole(series, nu, 0))?
            {
                levels.push(AngularLevel::new(MuValue::Real(root), tag));
            }
            let mut m = 0;
            while levels.len() < n_levels {
                let root = solve_in_interval(
                    series,
                    c,
                    r,
                    Some(pole(series, nu, m)),
                    pole(series, nu, m + 1),
                )?
                .expect("inter-pole interval always brackets one root");
                levels.push(AngularLevel::new(MuValue::Real(root), tag));
                m += 1;
            }
        }
    }
    levels.truncate(n_levels);
    Ok(levels)
}

/// Type-1 levels of M^U for one (series, sign) pair of the non-separating
/// boundary condition, sorted ascending by lambda.
pub fn solve_type1(
    c: &Coupling,
    u: &ConnectionMatrix,
    series: Type1Series,
    sign: SignPart,
    n_levels: usize,
) -> Result<Vec<AngularLevel>> {
    if n_levels == 0 {
        return Ok(Vec::new());
    }
    let rhs = rhs_type1(c, u, sign);
    solve_type1_equation(series, c, rhs, n_levels, series_tag(series, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::uniform_grid;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn f_a_zero_at_two_minus_nu() {
        let c = Coupling::new(0.8).unwrap();
        let v = f_type1(Type1Series::A, &c, &MuValue::Real(1.2)).unwrap();
        assert!(v.abs() < 1e-10, "F_A(2 - nu) = {v}");
    }

    #[test]
    fn f_b_pole_with_sign_flip() {
        let c = Coupling::new(0.8).unwrap();
        let above = f_type1(Type1Series::B, &c, &MuValue::Real(0.8 + 1e-6)).unwrap();
        let below = f_type1(Type1Series::B, &c, &MuValue::Real(0.8 - 1e-6)).unwrap();
        assert!(above.abs() > 1e4 && below.abs() > 1e4);
        assert!(above > 0.0 && below < 0.0);
    }

    #[test]
    fn f_a_imaginary_growth_law() {
        // F_A(ix) ~ (x/2)^(2 nu - 1) as x -> infinity
        let c = Coupling::new(0.7).unwrap();
        let x = 80.0;
        let v = f_type1(Type1Series::A, &c, &MuValue::Imaginary(x)).unwrap();
        let want = (x / 2.0_f64).powf(2.0 * 0.7 - 1.0);
        assert!((v / want - 1.0).abs() < 0.03, "ratio = {}", v / want);
    }

    #[test]
    fn rhs_branches() {
        let c = Coupling::new(0.8).unwrap();
        // alpha = beta = 0: Neumann-type, rhs = 0
        let u = ConnectionMatrix::new(0.0, 0.0);
        match rhs_type1(&c, &u, SignPart::Plus) {
            Rhs::Finite(v) => assert_eq!(v, 0.0),
            _ => panic!("expected finite rhs"),
        }
        // alpha = pi, beta = 0: divergent branch
        let u = ConnectionMatrix::new(PI, 0.0);
        assert_eq!(rhs_type1(&c, &u, SignPart::Plus), Rhs::Divergent);
        // generic value: Gamma(1.3)/Gamma(0.7) tan(pi/4)
        let u = ConnectionMatrix::new(PI / 3.0, PI / 6.0);
        match rhs_type1(&c, &u, SignPart::Plus) {
            Rhs::Finite(v) => {
                let want = gamma_ratio(1.3, 0.7).unwrap();
                assert_relative_eq!(v, want, max_relative = 1e-12);
            }
            _ => panic!("expected finite rhs"),
        }
    }

    #[test]
    fn dirichlet_and_neumann_ladders() {
        let c = Coupling::new(0.8).unwrap();
        // Dirichlet limit: divergent rhs, series B -> mu = nu + 2n
        let levels =
            solve_type1_equation(Type1Series::B, &c, Rhs::Divergent, 3, Series::BMinus).unwrap();
        let mus: Vec<f64> = levels
            .iter()
            .map(|l| match l.mu {
                MuValue::Real(m) => m,
                _ => panic!("unexpected imaginary level"),
            })
            .collect();
        assert_relative_eq!(mus[0], 0.8, max_relative = 1e-12);
        assert_relative_eq!(mus[1], 2.8, max_relative = 1e-12);
        assert_relative_eq!(mus[2], 4.8, max_relative = 1e-12);

        // Neumann limit: rhs = 0, series B -> mu = |2n + (1 - nu)|
        let levels =
            solve_type1_equation(Type1Series::B, &c, Rhs::Finite(0.0), 3, Series::BPlus).unwrap();
        let want = [0.2, 2.2, 4.2];
        for (level, w) in levels.iter().zip(want) {
            match level.mu {
                MuValue::Real(m) => assert!((m - w).abs() < 1e-9, "mu = {m}, want {w}"),
                _ => panic!("unexpected imaginary level"),
            }
        }
    }

    #[test]
    fn negative_eigenvalue_exists_iff_predicate() {
        let c = Coupling::new(0.8).unwrap();
        let f0 = f_type1(Type1Series::A, &c, &MuValue::Real(0.0)).unwrap();
        // choose rhs just above F_A(0): exactly one imaginary level
        let rhs = Rhs::Finite(f0 + 0.5);
        let levels = solve_type1_equation(Type1Series::A, &c, rhs, 3, Series::APlus).unwrap();
        assert!(matches!(levels[0].mu, MuValue::Imaginary(_)));
        assert!(levels[1..].iter().all(|l| !l.mu.is_negative_eigenvalue()));

        // oracle: fine-grid scan of F(ix) - rhs must agree with bisection
        if let MuValue::Imaginary(x) = levels[0].mu {
            let grid = uniform_grid(0.0, 5.0, 1e-4);
            let mut crossing = None;
            for w in grid.windows(2) {
                let g0 = f_type1(Type1Series::A, &c, &MuValue::Imaginary(w[0])).unwrap()
                    - (f0 + 0.5);
                let g1 = f_type1(Type1Series::A, &c, &MuValue::Imaginary(w[1])).unwrap()
                    - (f0 + 0.5);
                if g0.signum() != g1.signum() {
                    crossing = Some(0.5 * (w[0] + w[1]));
                    break;
                }
            }
            let scan = crossing.expect("scan must find the root");
            assert!((x - scan).abs() < 1e-4, "bisect {x} vs scan {scan}");
        }

        // rhs below F_A(0): no imaginary level
        let rhs = Rhs::Finite(f0 - 0.5);
        let levels = solve_type1_equation(Type1Series::A, &c, rhs, 3, Series::APlus).unwrap();
        assert!(levels.iter().all(|l| !l.mu.is_negative_eigenvalue()));
    }

    #[test]
    fn interlacing_of_real_roots() {
        // roots respect mu_m^0 < mu_m^inf < mu_{m+1}^0
        let c = Coupling::new(1.2).unwrap();
        for series in [Type1Series::A, Type1Series::B] {
            let levels =
                solve_type1_equation(series, &c, Rhs::Finite(0.7), 6, Series::APlus).unwrap();
            let mut prev = -1.0;
            for level in &levels {
                if let MuValue::Real(m) = level.mu {
                    assert!(m > prev);
                    prev = m;
                }
            }
        }
    }

    #[test]
    fn free_case_type1_via_connection_matrix() {
        // U = sigma1: the minus sign is divergent, the plus sign has rhs = 0
        let c = Coupling::new(0.8).unwrap();
        let u = ConnectionMatrix::sigma1();
        assert_eq!(rhs_type1(&c, &u, SignPart::Minus), Rhs::Divergent);
        let am = solve_type1(&c, &u, Type1Series::A, SignPart::Minus, 2).unwrap();
        match am[0].mu {
            MuValue::Real(m) => assert_relative_eq!(m, 1.8, max_relative = 1e-12),
            _ => panic!(),
        }
        let bp = solve_type1(&c, &u, Type1Series::B, SignPart::Plus, 2).unwrap();
        match bp[0].mu {
            MuValue::Real(m) => assert!((m - 0.2).abs() < 1e-9),
            _ => panic!(),
        }
    }
}
