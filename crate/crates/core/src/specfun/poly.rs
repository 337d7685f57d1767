//! Generalized Laguerre and Gegenbauer polynomials by three-term recurrence.

/// Generalized Laguerre polynomial L_m^s(z).
pub fn laguerre(m: u32, s: f64, z: f64) -> f64 {
    match m {
        0 => 1.0,
        1 => 1.0 + s - z,
        _ => {
            let mut prev = 1.0;
            let mut cur = 1.0 + s - z;
            for k in 1..m {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0 + s - z) * cur - (kf + s) * prev) / (kf + 1.0);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Gegenbauer (ultraspherical) polynomial C_l^nu(x).
pub fn gegenbauer(l: u32, nu: f64, x: f64) -> f64 {
    match l {
        0 => 1.0,
        1 => 2.0 * nu * x,
        _ => {
            let mut prev = 1.0;
            let mut cur = 2.0 * nu * x;
            for k in 1..l {
                let kf = k as f64;
                let next = (2.0 * (kf + nu) * x * cur - (kf + 2.0 * nu - 1.0) * prev) / (kf + 1.0);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}
