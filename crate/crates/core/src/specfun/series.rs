//! Convergent ascending series for spherical Bessel functions of real order.
//!
//! `j_nu(z) = sqrt(pi/(2z)) J_{nu+1/2}(z)` with the cylindrical function
//! expanded as `(z/2)^mu / Gamma(mu+1) * sum_k (-z^2/4)^k / (k! (mu+1)_k)`.
//! The sum is carried in double-double so that the cancellation between
//! terms (up to ~1e20 at `|z| = 45`) leaves ~1e-12 relative accuracy.

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use super::SpecfunError;
use crate::dd::{ComplexDD, DoubleDouble};

const MAX_TERMS: usize = 500;
const TERM_TOL: f64 = 1e-17;
const HALF_SQRT_PI: f64 = 0.886_226_925_452_758;

/// `sum_k (-z^2/4)^k / (k! (mu+1)_k)`.
pub(crate) fn ascending_sum(mu: DoubleDouble, z: Complex64) -> Result<Complex64, SpecfunError> {
    // -z^2/4, exact in double-double.
    let x2 = DoubleDouble::product(z.re, z.re);
    let y2 = DoubleDouble::product(z.im, z.im);
    let xy = DoubleDouble::product(z.re, z.im);
    let w = ComplexDD::new((y2 - x2) * 0.25, xy * -0.5);
    let w_mag = 0.25 * z.norm_sqr();

    let mut term = ComplexDD::one();
    let mut sum = ComplexDD::one();
    for k in 1..=MAX_TERMS {
        let kf = k as f64;
        let denom = (mu + kf) * kf;
        term = (term * w).scale_inv(denom);
        sum = sum + term;
        let decreasing = denom.hi.abs() > w_mag;
        if decreasing && term.norm_hi() <= TERM_TOL * sum.norm_hi() {
            return Ok(sum.to_c64());
        }
    }
    Err(SpecfunError::NonConvergence { terms: MAX_TERMS })
}

fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        0.0
    } else {
        1.0 / gamma(x)
    }
}

pub(crate) fn j_series(nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    let mu = DoubleDouble::from_f64(nu) + 0.5;
    let prefactor = (z * 0.5).powf(nu) * (HALF_SQRT_PI * recip_gamma(nu + 1.5));
    Ok(prefactor * ascending_sum(mu, z)?)
}

pub(crate) fn y_series(nu: f64, z: Complex64) -> Result<Complex64, SpecfunError> {
    let mu = DoubleDouble::from_f64(nu) + 0.5;
    let mu_f = mu.to_f64();
    if mu_f.fract() == 0.0 {
        return Err(SpecfunError::IntegerOrder { mu: mu_f });
    }
    let j = j_series(nu, z)?;
    let j_neg = (z * 0.5).powf(-nu - 1.0) * (HALF_SQRT_PI * recip_gamma(0.5 - nu)) * ascending_sum(-mu, z)?;
    let (s, c) = (mu_f * std::f64::consts::PI).sin_cos();
    Ok((j * c - j_neg) / s)
}
