//! The angular Hamiltonian: coefficient functions, the three eigenvalue
//! equations with guaranteed bracketing, negative-eigenvalue detection,
//! transport matrices and projectors, eigenfunction construction, boundary
//! residual verification and the explicitly solvable spectra.

mod coeffs;
mod eigenfunction;
mod explicit;
mod permissibility;
mod separating;
mod transport;
mod type1;
mod type2;

pub use coeffs::{ab_coeffs, AbCoeffs};
pub use eigenfunction::{boundary_residual, build_eigenfunction, AngularEigenfunction};
pub use explicit::{delta_nu, explicit_spectrum, ExplicitCase};
pub use permissibility::{permissibility, NegativeCriterion, PermissibilityReport};
pub use separating::separating_spectrum;
pub use transport::{projector, transport_matrix, Mat2, TransportMatrix};
pub use type1::{f_type1, rhs_type1, solve_type1, Rhs, SignPart, Type1Series};
pub use type2::{f2, solve_type2, ReTau};

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symmetry::{Parity, RepLabel};

/// Threshold below which |sin beta| marks a separating (diagonal) U.
pub const SEPARATING_TOL: f64 = 1e-12;
/// Threshold below which |cos((alpha +- beta)/2)| dispatches to the
/// closed-form (divergent tangent) branch.
pub const DIVERGENT_TAN_TOL: f64 = 1e-12;
/// Bisection tolerance on mu.
pub const MU_TOL: f64 = 1e-10;

/// Coupling parameter nu in (1/2, 3/2) \ {1}; g = 2 nu (nu - 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coupling {
    nu: f64,
}

impl Coupling {
    pub fn new(nu: f64) -> Result<Self> {
        if !(0.5 < nu && nu < 1.5) || nu == 1.0 {
            return Err(Error::InvalidCoupling { nu });
        }
        Ok(Coupling { nu })
    }

    /// The oscillator point nu = 1, admitted only by the dedicated
    /// oscillator-limit operations where closed forms replace the
    /// hypergeometric machinery.
    pub fn oscillator_limit() -> Self {
        Coupling { nu: 1.0 }
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn g(&self) -> f64 {
        2.0 * self.nu * (self.nu - 1.0)
    }
}

fn canonical_angle(x: f64) -> f64 {
    let mut a = x.rem_euclid(2.0 * PI);
    if a > PI {
        a -= 2.0 * PI;
    }
    a
}

/// Connection matrix U(alpha, beta) = e^{i alpha} (cos beta 1 + i sin beta sigma1),
/// the general U(2) element with sigma1 U sigma1 = U.
///
/// Angles are canonicalized to (-pi, pi]; the map (alpha, beta) -> U is
/// two-to-one via (alpha, beta) ~ (alpha + pi, beta + pi), and spectra
/// depend on U only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionMatrix {
    alpha: f64,
    beta: f64,
}

impl ConnectionMatrix {
    pub fn new(alpha: f64, beta: f64) -> Self {
        ConnectionMatrix {
            alpha: canonical_angle(alpha),
            beta: canonical_angle(beta),
        }
    }

    /// U = sigma1: A = 0, B = 1.
    pub fn sigma1() -> Self {
        ConnectionMatrix::new(-PI / 2.0, PI / 2.0)
    }

    /// U = -sigma1: A = 0, B = -1.
    pub fn minus_sigma1() -> Self {
        ConnectionMatrix::new(PI / 2.0, PI / 2.0)
    }

    /// U = -1 (Dirichlet).
    pub fn dirichlet() -> Self {
        ConnectionMatrix::new(PI, 0.0)
    }

    /// U = +1 (Neumann).
    pub fn neumann() -> Self {
        ConnectionMatrix::new(0.0, 0.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Diagonal entry A = e^{i alpha} cos beta.
    pub fn entry_a(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.alpha) * self.beta.cos()
    }

    /// Off-diagonal entry B = i e^{i alpha} sin beta.
    pub fn entry_b(&self) -> Complex64 {
        Complex64::i() * Complex64::from_polar(1.0, self.alpha) * self.beta.sin()
    }

    pub fn is_separating(&self) -> bool {
        self.beta.sin().abs() < SEPARATING_TOL
    }

    /// For a separating U, the effective diagonal phase: beta = 0 keeps
    /// alpha, beta = pi maps to alpha + pi.
    pub fn separating_alpha(&self) -> Option<f64> {
        if !self.is_separating() {
            return None;
        }
        if self.beta.cos() >= 0.0 {
            Some(self.alpha)
        } else {
            Some(canonical_angle(self.alpha + PI))
        }
    }

    /// The 2x2 unitary itself.
    pub fn matrix(&self) -> Mat2 {
        let a = self.entry_a();
        let b = self.entry_b();
        Mat2::new(a, b, b, a)
    }
}

/// The eigenvalue parameter: lambda = (3 mu)^2 with mu >= 0 real, or
/// mu = i x with x > 0 for negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MuValue {
    Real(f64),
    Imaginary(f64),
}

impl MuValue {
    pub fn lambda(&self) -> f64 {
        match *self {
            MuValue::Real(m) => 9.0 * m * m,
            MuValue::Imaginary(x) => -9.0 * x * x,
        }
    }

    /// mu^2 as a signed real (negative for imaginary mu).
    pub fn mu_squared(&self) -> f64 {
        self.lambda() / 9.0
    }

    pub fn is_negative_eigenvalue(&self) -> bool {
        matches!(self, MuValue::Imaginary(_))
    }

    pub fn as_complex(&self) -> Complex64 {
        match *self {
            MuValue::Real(m) => Complex64::new(m, 0.0),
            MuValue::Imaginary(x) => Complex64::new(0.0, x),
        }
    }
}

/// Series tag of an angular level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    APlus,
    AMinus,
    BPlus,
    BMinus,
    SepA,
    SepB,
    /// Type 2 level with Re(tau) = +1/2.
    Type2Plus,
    /// Type 2 level with Re(tau) = -1/2.
    Type2Minus,
}

impl Series {
    pub fn name(&self) -> &'static str {
        match self {
            Series::APlus => "A+",
            Series::AMinus => "A-",
            Series::BPlus => "B+",
            Series::BMinus => "B-",
            Series::SepA => "SepA",
            Series::SepB => "SepB",
            Series::Type2Plus => "T2+",
            Series::Type2Minus => "T2-",
        }
    }

    /// Representations carried by the eigenspace of a level in this series.
    pub fn reps(&self) -> Vec<RepLabel> {
        use Parity::*;
        match self {
            Series::APlus => vec![RepLabel::OneDim { rho: Minus, p: Plus }],
            Series::AMinus => vec![RepLabel::OneDim { rho: Minus, p: Minus }],
            Series::BPlus => vec![RepLabel::OneDim { rho: Plus, p: Plus }],
            Series::BMinus => vec![RepLabel::OneDim { rho: Plus, p: Minus }],
            Series::SepA => vec![
                RepLabel::OneDim { rho: Minus, p: Plus },
                RepLabel::OneDim { rho: Minus, p: Minus },
                RepLabel::TwoDimDefining,
                RepLabel::TwoDimTwisted,
            ],
            Series::SepB => vec![
                RepLabel::OneDim { rho: Plus, p: Plus },
                RepLabel::OneDim { rho: Plus, p: Minus },
                RepLabel::TwoDimDefining,
                RepLabel::TwoDimTwisted,
            ],
            Series::Type2Plus => vec![RepLabel::TwoDimDefining],
            Series::Type2Minus => vec![RepLabel::TwoDimTwisted],
        }
    }

    pub fn multiplicity(&self) -> u32 {
        match self {
            Series::SepA | Series::SepB => 6,
            Series::Type2Plus | Series::Type2Minus => 2,
            _ => 1,
        }
    }

    /// Re(tau) of the transport eigenvalue attached to this series, when
    /// defined (type 1 and type 2 non-separating series).
    pub fn re_tau(&self) -> Option<f64> {
        match self {
            Series::APlus => Some(-1.0),
            Series::AMinus => Some(1.0),
            Series::BPlus => Some(1.0),
            Series::BMinus => Some(-1.0),
            Series::Type2Plus => Some(0.5),
            Series::Type2Minus => Some(-0.5),
            _ => None,
        }
    }
}

/// One angular level: the eigenvalue parameter, its series, the D6
/// representations it carries and the eigenvalue multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularLevel {
    pub mu: MuValue,
    pub series: Series,
    pub reps: Vec<RepLabel>,
    pub multiplicity: u32,
}

impl AngularLevel {
    pub fn new(mu: MuValue, series: Series) -> Self {
        AngularLevel {
            mu,
            series,
            reps: series.reps(),
            multiplicity: series.multiplicity(),
        }
    }

    pub fn lambda(&self) -> f64 {
        self.mu.lambda()
    }
}

/// Ascending order in lambda, ties broken by the series tag.
pub fn sort_levels(levels: &mut [AngularLevel]) {
    levels.sort_by(|a, b| {
        a.lambda()
            .partial_cmp(&b.lambda())
            .unwrap_or(Ordering::Equal)
            .then(a.series.cmp(&b.series))
    });
}
