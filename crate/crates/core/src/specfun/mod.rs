//! Self-contained special-function kernel: complex log-gamma, digamma,
//! Gauss hypergeometric on [0,1), confluent hypergeometric (Kummer and
//! Tricomi), Laguerre and Gegenbauer polynomials.
//!
//! All functions are pure and reentrant; poles raise typed errors rather
//! than returning non-finite values (except `gamma_ratio`, which may
//! overflow to a signed infinity, as documented).

mod confluent;
mod gamma;
mod hyp2f1;
mod poly;

pub use confluent::{kummer_m, tricomi_u};
pub use gamma::{
    abs_gamma_sq, cos_pi, digamma, gamma, gamma_ratio, ln_abs_gamma_signed, ln_gamma, sin_pi,
    testhook,
};
pub(crate) use gamma::ln_gamma_pair;
pub use hyp2f1::gauss_2f1;
pub(crate) use hyp2f1::gauss_2f1_sym;
pub use poly::{gegenbauer, laguerre};
