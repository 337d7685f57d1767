//! The transport matrix T(mu) propagating sector coefficients (C+, C-) to
//! the next sector, and the spectral projectors onto its type-2 eigenvectors.

use num_complex::Complex64;

use crate::angular::coeffs::ab_coeffs;
use crate::angular::{ConnectionMatrix, Coupling, MuValue};
use crate::error::{Error, Result};

/// Minimal complex 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Mat2 {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mat2::new(one, zero, zero, one)
    }

    pub fn zero() -> Self {
        let zero = Complex64::new(0.0, 0.0);
        Mat2::new(zero, zero, zero, zero)
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        out
    }

    pub fn mul_vec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        let mut out = *self;
        for row in &mut out.m {
            for e in row {
                *e *= s;
            }
        }
        out
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += other.m[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        let mut out = *self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= other.m[i][j];
            }
        }
        out
    }

    /// Max-abs norm of the entries.
    pub fn norm_max(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }
}

/// T(mu) = N_+^{-1} N_- together with its cached building blocks
/// x(mu), y(mu), z(mu) and det N_+.
#[derive(Debug, Clone, Copy)]
pub struct TransportMatrix {
    pub t: Mat2,
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub det_n_plus: Complex64,
}

impl TransportMatrix {
    /// x(mu)/det N_+, the quantity equal to Re(tau) at eigenvalues.
    pub fn re_tau_candidate(&self) -> f64 {
        (self.x / self.det_n_plus).re
    }

    /// T^k by repeated multiplication.
    pub fn power(&self, k: u32) -> Mat2 {
        let mut out = Mat2::identity();
        for _ in 0..k {
            out = out.mul(&self.t);
        }
        out
    }
}

/// Build T(mu) for a non-separating U. det N_+ = -2i(3-6nu)B never vanishes
/// there, and det T = 1 identically.
pub fn transport_matrix(
    c: &Coupling,
    u: &ConnectionMatrix,
    mu: &MuValue,
) -> Result<TransportMatrix> {
    if u.is_separating() {
        return Err(Error::SeparatingInput);
    }
    let ab = ab_coeffs(c, mu)?;
    let a = ab.a_complex();
    let b = ab.b_complex();
    let (ac, bc) = (a.conj(), b.conj());
    let ua = u.entry_a();
    let ub = u.entry_b();

    let x = -ac * bc * ub * ub + (ac * ua - a) * (bc * ua - b);
    let y = ac * ac * ub * ub - (ac * ua - a) * (ac * ua - a);
    let z = bc * bc * ub * ub - (bc * ua - b) * (bc * ua - b);
    let det_n_plus = Complex64::new(0.0, -2.0) * (3.0 - 6.0 * c.nu()) * ub;

    let inv = 1.0 / det_n_plus;
    let t = Mat2::new(x * inv, y * inv, z * inv, x * inv);
    Ok(TransportMatrix {
        t,
        x,
        y,
        z,
        det_n_plus,
    })
}

/// Spectral projector pi_tau = (1/6) sum_k conj(tau)^k T^k onto the
/// tau-eigenspace of T at a type-2 eigenvalue.
///
/// Validates T^6 = 1 (to 1e-8) and idempotency (to 1e-9); failing either
/// means mu is not a type-2 eigenvalue of this boundary condition.
pub fn projector(tau: Complex64, t: &TransportMatrix) -> Result<Mat2> {
    let t6 = t.power(6);
    let dev = t6.sub(&Mat2::identity()).norm_max();
    if dev > 1e-8 {
        return Err(Error::NotAnEigenvalue {
            what: format!("T^6 deviates from identity by {dev:.3e}"),
        });
    }
    let mut sum = Mat2::zero();
    let mut tk = Mat2::identity();
    let tau_bar = tau.conj();
    let mut phase = Complex64::new(1.0, 0.0);
    for _ in 1..=6 {
        tk = tk.mul(&t.t);
        phase *= tau_bar;
        sum = sum.add(&tk.scale(phase));
    }
    let pi = sum.scale(Complex64::new(1.0 / 6.0, 0.0));
    let dev = pi.mul(&pi).sub(&pi).norm_max();
    if dev > 1e-9 {
        return Err(Error::NotAnEigenvalue {
            what: format!("projector not idempotent: deviation {dev:.3e}"),
        });
    }
    Ok(pi)
}
