//! Scalar special functions behind every flux stencil: the Bernoulli
//! function `B(z) = z/(e^z - 1)`, the source weight
//! `W(z) = (e^{z/2} - 1 - z/2)/(z(e^z - 1))` and its shifted form
//! `W̃(z, q) = (e^{z/2+q} - 1 - z/2)/(z(e^z - 1))`.
//!
//! Péclet numbers in advection-dominated runs reach 1e8 and beyond, so all
//! three are evaluated in forms that never form `e^z` for large positive `z`.

use crate::error::{Error, Result};

/// Beyond this magnitude `B` switches to its asymptotic forms.
pub const OVERFLOW_THRESHOLD: f64 = 700.0;

/// `W` uses its Taylor series about 0 below this magnitude.
pub const W_SERIES_RADIUS: f64 = 1e-3;

/// `W̃(z, q)` with `q != 0` is rejected for `|z|` below this value.
pub const W_TILDE_GUARD: f64 = 10.0;

// Above this the exponentially scaled forms of W and W̃ are used.
const SCALED_BRANCH: f64 = 30.0;

fn finite(function: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain { function, value })
    }
}

fn check_result(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what })
    }
}

/// `e^a - 1 - a` without cancellation near zero.
pub(crate) fn expm1_minus_x(a: f64) -> f64 {
    if a.abs() < 0.5 {
        let mut term = a * a / 2.0;
        let mut sum = term;
        let mut k = 3.0;
        while term.abs() > 1e-18 * sum.abs() && k < 40.0 {
            term *= a / k;
            sum += term;
            k += 1.0;
        }
        sum
    } else {
        a.exp_m1() - a
    }
}

pub(crate) fn bernoulli_unchecked(z: f64) -> f64 {
    if z == 0.0 {
        1.0
    } else if z > OVERFLOW_THRESHOLD {
        z * (-z).exp()
    } else if z < -OVERFLOW_THRESHOLD {
        -z
    } else {
        z / z.exp_m1()
    }
}

/// Bernoulli function `B(z) = z/(e^z - 1)`, with `B(0) = 1`.
pub fn bernoulli(z: f64) -> Result<f64> {
    Ok(bernoulli_unchecked(finite("bernoulli", z)?))
}

/// `e^shift * B(z)` evaluated as one exponential, so that a huge factor
/// `e^shift` meeting a vanishing `B(z)` stays finite.
pub fn bernoulli_scaled(z: f64, shift: f64) -> Result<f64> {
    finite("bernoulli_scaled", z)?;
    finite("bernoulli_scaled", shift)?;
    if shift == 0.0 {
        return Ok(bernoulli_unchecked(z));
    }
    let value = if z == 0.0 {
        shift.exp()
    } else if z > 0.0 {
        z * (shift - z).exp() / -(-z).exp_m1()
    } else {
        -z * shift.exp() / -z.exp_m1()
    };
    check_result("e^shift B(z)", value)
}

fn w_series(z: f64) -> f64 {
    const C: [f64; 5] = [
        1.0 / 8.0,
        -1.0 / 24.0,
        1.0 / 384.0,
        1.0 / 1440.0,
        -1.0 / 15360.0,
    ];
    C.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

fn w_unchecked(z: f64) -> f64 {
    if z.abs() < W_SERIES_RADIUS {
        w_series(z)
    } else if z > SCALED_BRANCH {
        ((-0.5 * z).exp() - (1.0 + 0.5 * z) * (-z).exp()) / (z * -(-z).exp_m1())
    } else {
        expm1_minus_x(0.5 * z) / (z * z.exp_m1())
    }
}

/// Source weight `W(z)`; `W(0) = 1/8`.
pub fn w_weight(z: f64) -> Result<f64> {
    Ok(w_unchecked(finite("w_weight", z)?))
}

/// Shifted source weight `W̃(z, q)`. Reduces to [`w_weight`] at `q = 0`.
///
/// For `q != 0` the function has a double pole at `z = 0`; arguments with
/// `|z| <` [`W_TILDE_GUARD`] are refused with [`Error::SchemePolicy`].
pub fn w_tilde(z: f64, q: f64) -> Result<f64> {
    finite("w_tilde", z)?;
    finite("w_tilde", q)?;
    if q == 0.0 {
        return Ok(w_unchecked(z));
    }
    if z.abs() < W_TILDE_GUARD {
        return Err(Error::SchemePolicy { z, q });
    }
    let value = if z > SCALED_BRANCH {
        ((q - 0.5 * z).exp() - (1.0 + 0.5 * z) * (-z).exp()) / (z * -(-z).exp_m1())
    } else {
        (expm1_minus_x(0.5 * z + q) + q) / (z * z.exp_m1())
    };
    check_result("w_tilde", value)
}
