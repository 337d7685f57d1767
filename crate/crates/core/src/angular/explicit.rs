//! Closed-form spectra of the four explicitly solvable boundary conditions
//! U = -1, +1, sigma1, -sigma1.

use crate::angular::{sort_levels, AngularLevel, Coupling, MuValue, Series};
use crate::specfun::cos_pi;

/// The four explicitly solvable connection matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplicitCase {
    /// U = -1 (Dirichlet).
    DirichletMinusOne,
    /// U = +1 (Neumann).
    NeumannPlusOne,
    /// U = sigma1 (free).
    FreeSigma1,
    /// U = -sigma1.
    MinusSigma1,
}

impl ExplicitCase {
    pub fn name(&self) -> &'static str {
        match self {
            ExplicitCase::DirichletMinusOne => "dirichlet",
            ExplicitCase::NeumannPlusOne => "neumann",
            ExplicitCase::FreeSigma1 => "free",
            ExplicitCase::MinusSigma1 => "minus_sigma1",
        }
    }
}

/// Delta(nu) = (1/pi) arccos(cos(pi nu)/2), the non-integral offset of the
/// free-case type-2 ladders; 1/2 < Delta < 2/3 and Delta < nu on the
/// coupling range.
pub fn delta_nu(nu: f64) -> f64 {
    (0.5 * cos_pi(nu)).acos() / std::f64::consts::PI
}

fn push_ladder(
    levels: &mut Vec<AngularLevel>,
    series: Series,
    n_levels: usize,
    offset: impl Fn(u32) -> f64,
) {
    for n in 0..n_levels as u32 {
        levels.push(AngularLevel::new(MuValue::Real(offset(n)), series));
    }
}

/// The closed-form angular spectrum of an explicitly solvable case, with
/// representation labels and multiplicities, ascending in lambda.
pub fn explicit_spectrum(case: ExplicitCase, c: &Coupling, n_levels: usize) -> Vec<AngularLevel> {
    let nu = c.nu();
    let per = n_levels;
    let mut levels = Vec::new();
    match case {
        ExplicitCase::DirichletMinusOne => {
            push_ladder(&mut levels, Series::SepA, per, |n| 2.0 * n as f64 + 1.0 + nu);
            push_ladder(&mut levels, Series::SepB, per, |n| 2.0 * n as f64 + nu);
        }
        ExplicitCase::NeumannPlusOne => {
            push_ladder(&mut levels, Series::SepA, per, |n| {
                2.0 * n as f64 + 1.0 + (1.0 - nu)
            });
            push_ladder(&mut levels, Series::SepB, per, |n| {
                (2.0 * n as f64 + (1.0 - nu)).abs()
            });
        }
        ExplicitCase::FreeSigma1 => {
            let d = delta_nu(nu);
            push_ladder(&mut levels, Series::APlus, per, |n| {
                2.0 * n as f64 + 1.0 + (1.0 - nu)
            });
            push_ladder(&mut levels, Series::AMinus, per, |n| 2.0 * n as f64 + 1.0 + nu);
            push_ladder(&mut levels, Series::BPlus, per, |n| {
                (2.0 * n as f64 + (1.0 - nu)).abs()
            });
            push_ladder(&mut levels, Series::BMinus, per, |n| 2.0 * n as f64 + nu);
            // Re(tau) = +1/2
            push_ladder(&mut levels, Series::Type2Plus, per, |n| {
                2.0 * n as f64 + (1.0 - d)
            });
            push_ladder(&mut levels, Series::Type2Plus, per, |n| {
                2.0 * n as f64 + 1.0 + d
            });
            // Re(tau) = -1/2
            push_ladder(&mut levels, Series::Type2Minus, per, |n| 2.0 * n as f64 + d);
            push_ladder(&mut levels, Series::Type2Minus, per, |n| {
                2.0 * n as f64 + 1.0 + (1.0 - d)
            });
        }
        ExplicitCase::MinusSigma1 => {
            // same level set as the free case with the series labels
            // interchanged: A+- <-> A-+, B+- <-> B-+, type-2 targets swapped
            let d = delta_nu(nu);
            push_ladder(&mut levels, Series::AMinus, per, |n| {
                2.0 * n as f64 + 1.0 + (1.0 - nu)
            });
            push_ladder(&mut levels, Series::APlus, per, |n| 2.0 * n as f64 + 1.0 + nu);
            push_ladder(&mut levels, Series::BMinus, per, |n| {
                (2.0 * n as f64 + (1.0 - nu)).abs()
            });
            push_ladder(&mut levels, Series::BPlus, per, |n| 2.0 * n as f64 + nu);
            push_ladder(&mut levels, Series::Type2Minus, per, |n| {
                2.0 * n as f64 + (1.0 - d)
            });
            push_ladder(&mut levels, Series::Type2Minus, per, |n| {
                2.0 * n as f64 + 1.0 + d
            });
            push_ladder(&mut levels, Series::Type2Plus, per, |n| 2.0 * n as f64 + d);
            push_ladder(&mut levels, Series::Type2Plus, per, |n| {
                2.0 * n as f64 + 1.0 + (1.0 - d)
            });
        }
    }
    sort_levels(&mut levels);
    levels.truncate(n_levels);
    levels
}
