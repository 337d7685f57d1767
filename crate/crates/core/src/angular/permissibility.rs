//! Detection of negative angular eigenvalues: a boundary condition whose
//! M^U has any negative eigenvalue makes the energy spectrum unbounded
//! below and is physically impermissible.

use crate::angular::type1::{
    negative_root_exists, rhs_type1, solve_negative_root, Rhs, SignPart, Type1Series,
};
use crate::angular::type2::imaginary_roots;
use crate::angular::{
    sort_levels, AngularLevel, ConnectionMatrix, Coupling, MuValue, Series, DIVERGENT_TAN_TOL,
};
use crate::error::Result;
use crate::specfun::gamma_ratio;

/// Which negative-eigenvalue criterion fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeCriterion {
    /// F_A(0) < rhs for the given sign (type-1 series A).
    TypeOneA(SignPart),
    /// F_B(0) < rhs for the given sign (type-1 series B).
    TypeOneB(SignPart),
    /// The imaginary-axis type-2 scan found roots of F_2(ix) = +-1/2.
    TypeTwoScan,
}

/// Verdict on a boundary condition, with every negative level found.
#[derive(Debug, Clone)]
pub struct PermissibilityReport {
    pub permissible: bool,
    pub negative_levels: Vec<AngularLevel>,
    pub criteria_fired: Vec<NegativeCriterion>,
}

fn check_type1(
    c: &Coupling,
    series: Type1Series,
    rhs: Rhs,
    tag: Series,
    criterion: NegativeCriterion,
    report: &mut PermissibilityReport,
) -> Result<()> {
    if let Rhs::Finite(r) = rhs {
        if negative_root_exists(series, c, r)? {
            let x = solve_negative_root(series, c, r)?;
            report
                .negative_levels
                .push(AngularLevel::new(MuValue::Imaginary(x), tag));
            report.criteria_fired.push(criterion);
        }
    }
    Ok(())
}

/// Evaluate the negative-eigenvalue criteria for both type-1 equations and
/// both signs, plus the certified type-2 imaginary scan for non-separating
/// boundary conditions. Separating U uses the alpha-only variants.
pub fn permissibility(c: &Coupling, u: &ConnectionMatrix) -> Result<PermissibilityReport> {
    let mut report = PermissibilityReport {
        permissible: true,
        negative_levels: Vec::new(),
        criteria_fired: Vec::new(),
    };

    if let Some(alpha) = u.separating_alpha() {
        // diagonal U: equations depend on alpha alone; levels carry
        // multiplicity 6
        let half = 0.5 * alpha;
        if half.cos().abs() >= DIVERGENT_TAN_TOL {
            let rhs = Rhs::Finite(gamma_ratio(c.nu() + 0.5, 1.5 - c.nu())? * half.tan());
            check_type1(
                c,
                Type1Series::A,
                rhs,
                Series::SepA,
                NegativeCriterion::TypeOneA(SignPart::Plus),
                &mut report,
            )?;
            check_type1(
                c,
                Type1Series::B,
                rhs,
                Series::SepB,
                NegativeCriterion::TypeOneB(SignPart::Plus),
                &mut report,
            )?;
        }
    } else {
        for sign in [SignPart::Plus, SignPart::Minus] {
            let rhs = rhs_type1(c, u, sign);
            check_type1(
                c,
                Type1Series::A,
                rhs,
                match sign {
                    SignPart::Plus => Series::APlus,
                    SignPart::Minus => Series::AMinus,
                },
                NegativeCriterion::TypeOneA(sign),
                &mut report,
            )?;
            check_type1(
                c,
                Type1Series::B,
                rhs,
                match sign {
                    SignPart::Plus => Series::BPlus,
                    SignPart::Minus => Series::BMinus,
                },
                NegativeCriterion::TypeOneB(sign),
                &mut report,
            )?;
        }
        let mut found_type2 = false;
        for (target, tag) in [(0.5, Series::Type2Plus), (-0.5, Series::Type2Minus)] {
            for x in imaginary_roots(c, u, target)? {
                report
                    .negative_levels
                    .push(AngularLevel::new(MuValue::Imaginary(x), tag));
                found_type2 = true;
            }
        }
        if found_type2 {
            report.criteria_fired.push(NegativeCriterion::TypeTwoScan);
        }
    }

    sort_levels(&mut report.negative_levels);
    report.permissible = report.negative_levels.is_empty();
    Ok(report)
}
