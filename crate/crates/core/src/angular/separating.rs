//! Spectrum for separating (diagonal) boundary conditions: the A and B
//! eigenvalue equations share the single constant cot(alpha/2), every level
//! has multiplicity 6, and the explicitly solvable phases e^{i alpha} = -+1
//! dispatch to their closed-form ladders.

use crate::angular::type1::{solve_type1_equation, Rhs, Type1Series};
use crate::angular::{
    sort_levels, AngularLevel, Coupling, MuValue, Series, DIVERGENT_TAN_TOL,
};
use crate::error::Result;
use crate::specfun::gamma_ratio;

/// Closed-form ladders for e^{i alpha} = -1 (Dirichlet) and +1 (Neumann).
fn explicit_ladder(series: Type1Series, dirichlet: bool, nu: f64, n: u32) -> f64 {
    let nf = n as f64;
    match (series, dirichlet) {
        (Type1Series::A, true) => 2.0 * nf + 1.0 + nu,
        (Type1Series::B, true) => 2.0 * nf + nu,
        (Type1Series::A, false) => 2.0 * nf + 1.0 + (1.0 - nu),
        (Type1Series::B, false) => (2.0 * nf + (1.0 - nu)).abs(),
    }
}

/// Merged A + B spectrum of a separating U = e^{i alpha} 1, sorted
/// ascending by lambda; `alpha` is the effective diagonal phase.
pub fn separating_spectrum(
    c: &Coupling,
    alpha: f64,
    n_levels: usize,
) -> Result<Vec<AngularLevel>> {
    if n_levels == 0 {
        return Ok(Vec::new());
    }
    let nu = c.nu();
    let half = 0.5 * alpha;
    let mut levels: Vec<AngularLevel> = Vec::new();

    let per_series = n_levels;
    if half.cos().abs() < DIVERGENT_TAN_TOL {
        // e^{i alpha} = -1: a_1 = 0 / b_1 = 0 ladders
        for n in 0..per_series as u32 {
            levels.push(AngularLevel::new(
                MuValue::Real(explicit_ladder(Type1Series::A, true, nu, n)),
                Series::SepA,
            ));
            levels.push(AngularLevel::new(
                MuValue::Real(explicit_ladder(Type1Series::B, true, nu, n)),
                Series::SepB,
            ));
        }
    } else if half.sin().abs() < DIVERGENT_TAN_TOL {
        // e^{i alpha} = 1: a_2 = 0 / b_2 = 0 ladders
        for n in 0..per_series as u32 {
            levels.push(AngularLevel::new(
                MuValue::Real(explicit_ladder(Type1Series::A, false, nu, n)),
                Series::SepA,
            ));
            levels.push(AngularLevel::new(
                MuValue::Real(explicit_ladder(Type1Series::B, false, nu, n)),
                Series::SepB,
            ));
        }
    } else {
        let rhs = Rhs::Finite(gamma_ratio(nu + 0.5, 1.5 - nu)? * half.tan());
        levels.extend(solve_type1_equation(
            Type1Series::A,
            c,
            rhs,
            per_series,
            Series::SepA,
        )?);
        levels.extend(solve_type1_equation(
            Type1Series::B,
            c,
            rhs,
            per_series,
            Series::SepB,
        )?);
    }

    sort_levels(&mut levels);
    levels.truncate(n_levels);
    Ok(levels)
}
