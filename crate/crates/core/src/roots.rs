//! Bracketing root finders for the transcendental eigenvalue equations.
//!
//! All spectral conditions in this crate are reduced to sign changes of a
//! scalar function on an interval, so plain bisection with a guaranteed
//! bracket is the only machinery needed.

use crate::error::{Error, Result};

/// Bisect `f` on `[lo, hi]`, assuming `f(lo)` and `f(hi)` have opposite signs.
///
/// Returns the midpoint of the final bracket once its width drops below
/// `xtol`. Fails if the input bracket does not actually straddle a sign
/// change.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let flo = f(lo)?;
    let fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketingFailure {
            what: format!("no sign change on [{lo}, {hi}]: f = ({flo}, {fhi})"),
        });
    }
    let mut sign_lo = flo.signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < xtol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == sign_lo {
            lo = mid;
            sign_lo = fm.signum();
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Scan `f` over the grid points and bisect every detected sign change.
///
/// Grid points where `f` fails (e.g. a pole of a gamma ratio) are skipped;
/// non-finite values break the running bracket without being treated as
/// crossings.
pub fn scan_sign_changes<F>(mut f: F, grid: &[f64], xtol: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &x in grid {
        let fx = match f(x) {
            Ok(v) => v,
            Err(_) => {
                prev = None;
                continue;
            }
        };
        if !fx.is_finite() {
            prev = None;
            continue;
        }
        if fx == 0.0 {
            roots.push(x);
            prev = Some((x, fx));
            continue;
        }
        if let Some((px, pfx)) = prev {
            if pfx.signum() != fx.signum() {
                roots.push(bisect(&mut f, px, x, xtol)?);
            }
        }
        prev = Some((x, fx));
    }
    Ok(roots)
}

/// Uniform grid `[lo, lo+step, ..., >= hi]` including both endpoints.
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil() as usize;
    let mut g: Vec<f64> = (0..=n).map(|i| lo + step * i as f64).collect();
    if let Some(last) = g.last_mut() {
        if *last > hi {
            *last = hi;
        }
    }
    g
}
