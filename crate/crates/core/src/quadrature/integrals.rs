use serde::{Deserialize, Serialize};

use super::{integrate, QuadratureResult, DEFAULT_TOLERANCE};
use crate::asymptotics::constants;
use crate::sum::NeumaierSum;
use crate::{Error, Result};

/// `(2 t^(5/2) - t^(-1/2)) / sqrt(1 + t^3)`.
fn f_integrand(t: f64) -> f64 {
    (2.0 * t * t * t.sqrt() - 1.0 / t.sqrt()) / (1.0 + t * t * t).sqrt()
}

/// The same integrand after `t = u^2`: `(4 u^6 - 2) / sqrt(1 + u^6)`.
fn f_integrand_substituted(u: f64) -> f64 {
    let u6 = u.powi(6);
    (4.0 * u6 - 2.0) / (1.0 + u6).sqrt()
}

fn check_y(y: f64) -> Result<()> {
    if (0.0..=0.5).contains(&y) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("F(y) is defined for 0 <= y <= 1/2, got {y}")))
    }
}

/// `F(y) = int_y^(1/2) (2 t^(5/2) - t^(-1/2)) / sqrt(1 + t^3) dt`.
///
/// For `y > 0` the integral is taken in `t` directly; `F(0)` goes through
/// [`eval_f_substituted`] since the integrand blows up at `t = 0`.
pub fn eval_f(y: f64) -> Result<f64> {
    check_y(y)?;
    if y == 0.0 {
        return eval_f_substituted(0.0);
    }
    if y == 0.5 {
        return Ok(0.0);
    }
    Ok(integrate(f_integrand, y, 0.5, DEFAULT_TOLERANCE)?.value)
}

/// `F(y)` as `int_(sqrt y)^(1/sqrt 2) (4 u^6 - 2) / sqrt(1 + u^6) du`, whose
/// integrand is analytic on the whole range.
pub fn eval_f_substituted(y: f64) -> Result<f64> {
    check_y(y)?;
    let lo = y.sqrt();
    let hi = std::f64::consts::FRAC_1_SQRT_2;
    if lo >= hi {
        return Ok(0.0);
    }
    Ok(integrate(f_integrand_substituted, lo, hi, DEFAULT_TOLERANCE)?.value)
}

/// `F(0)` at a caller-chosen absolute tolerance, with the error estimate.
pub fn f_zero(tol: f64) -> Result<QuadratureResult> {
    integrate(f_integrand_substituted, 0.0, std::f64::consts::FRAC_1_SQRT_2, tol)
}

/// `3/4 - 2^(2/3) sqrt(3) Gamma(1/3)^3 / (8 pi)`, which equals `3/4 - c1/2`
/// and should coincide with `F(0)`.
pub fn identity_rhs() -> f64 {
    0.75 - 0.5 * constants().c1.value
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FExpansionCheck {
    pub y: f64,
    pub f_y: f64,
    /// `F(y) - F(0) - 2 sqrt(y)`.
    pub deviation: f64,
}

/// Measures how far `F(y)` is from `F(0) + 2 sqrt(y)`.
///
/// The deviation is of order `y^(7/2)`, far below the rounding error of
/// `F(y) - F(0)` itself, so it is integrated directly:
/// `F(y) - F(0) - 2 sqrt(y) = -int_0^(sqrt y) g(u) du` with
/// `g(u) = u^6 (4 + 2 / (1 + sqrt(1 + u^6))) / sqrt(1 + u^6)`.
pub fn f_expansion_check(y: f64) -> Result<FExpansionCheck> {
    if !(y > 0.0 && y <= 0.01) {
        return Err(Error::InvalidArgument(format!("expansion check needs 0 < y <= 0.01, got {y}")));
    }
    let g = |u: f64| {
        let u6 = u.powi(6);
        let r = (1.0 + u6).sqrt();
        u6 * (4.0 + 2.0 / (1.0 + r)) / r
    };
    // Relative accuracy; g ~ 5 u^6 near zero.
    let tol = 1e-9 * y.powf(3.5);
    let deviation = -integrate(g, 0.0, y.sqrt(), tol)?.value;
    Ok(FExpansionCheck { y, f_y: eval_f(y)?, deviation })
}

/// `int_T^oo {t} t^(-3/2) dt` with `{t}` replaced by its mean `1/2`.
pub fn fractional_tail(t: u64) -> f64 {
    1.0 / (t as f64).sqrt()
}

/// `zeta(1/2) = -1 - (1/2) int_1^oo {t} t^(-3/2) dt`, truncated at `T`.
///
/// On `[k, k+1]` the integrand `(t - k) t^(-3/2)` has antiderivative
/// `2 sqrt(t) + 2k / sqrt(t)`; the difference of its endpoint values is
/// rewritten as `4 / (sqrt(k+1) (4k + 2 + 4 sqrt(k(k+1))))` to avoid
/// cancellation. The part beyond `T` is [`fractional_tail`], accurate to
/// `O(T^(-3/2))`.
pub fn zeta_half_integral(t: u64) -> Result<f64> {
    if t < 10 {
        return Err(Error::InvalidArgument(format!("zeta_half_integral needs T >= 10, got {t}")));
    }
    // Smallest terms first.
    let body: NeumaierSum = (1..t)
        .rev()
        .map(|k| unit_interval_integral(k as f64))
        .collect();
    Ok(-1.0 - 0.5 * (body.total() + fractional_tail(t)))
}

/// `int_k^(k+1) (t - k) t^(-3/2) dt`.
fn unit_interval_integral(k: f64) -> f64 {
    let r = (k + 1.0).sqrt();
    4.0 / (r * (4.0 * k + 2.0 + 4.0 * (k * (k + 1.0)).sqrt()))
}
