//! Large-argument expansions of `j_nu` and `h_nu^(1)`.
//!
//! With `theta = z - pi nu / 2`, `P = sum_s (-1)^s A_{2s}/z^{2s}` and
//! `Q = sum_s (-1)^s A_{2s+1}/z^{2s+1}`:
//!
//! ```text
//! j_nu(z)     = [sin(theta) P + cos(theta) Q] / z
//! h_nu^(1)(z) = e^{i theta} [Q - i P] / z
//! ```
//!
//! Both sums come from one divergent sequence `A_k / z^k`, truncated at its
//! smallest term.

use num_complex::Complex64;

use super::{Argument, Kind, SpecfunError};
use crate::dd::DoubleDouble;

const NEGLIGIBLE: f64 = 1e-17;
const ACCURACY_LOSS: f64 = 1e-12;

/// Even and odd parts of the truncated asymptotic sum.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AsymptoticSums {
    pub p: Complex64,
    pub q: Complex64,
}

pub(crate) fn sums(nu: f64, z: Complex64, max_terms: usize) -> Result<AsymptoticSums, SpecfunError> {
    let inv = z.inv();
    let mut coeff = 1.0;
    let mut power = Complex64::new(1.0, 0.0);
    let mut p = Complex64::new(0.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut smallest = f64::INFINITY;
    let mut converged = false;

    for k in 0..max_terms.max(1) {
        let term = power * coeff;
        let mag = term.norm();
        if k > 0 && mag >= smallest {
            break;
        }
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += term * sign;
        } else {
            q += term * sign;
        }
        smallest = mag;
        if mag == 0.0 || mag <= NEGLIGIBLE * (p.norm() + q.norm()) {
            converged = true;
            break;
        }
        let kf = k as f64;
        coeff *= (nu + kf + 1.0) * (nu - kf) / (2.0 * (kf + 1.0));
        power *= inv;
    }

    let scale = p.norm() + q.norm();
    if !converged && smallest > ACCURACY_LOSS * scale {
        return Err(SpecfunError::AccuracyLoss {
            smallest_term: smallest / scale,
        });
    }
    Ok(AsymptoticSums { p, q })
}

/// `sin` and `cos` of `theta = z - pi nu / 2`, with the real part reduced in
/// double-double before the f64 trigonometry.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Phase {
    pub sin: Complex64,
    pub cos: Complex64,
}

impl Phase {
    pub fn new(arg: &Argument, nu: f64) -> Self {
        let re = (arg.re_dd() - DoubleDouble::HALF_PI * nu).rem_two_pi().to_f64();
        let theta = Complex64::new(re, arg.value().im);
        Self {
            sin: theta.sin(),
            cos: theta.cos(),
        }
    }

    /// Phase for order `nu + offset` given the phase for `nu`, using exact
    /// quarter-turn identities.
    pub fn shifted(self, offset: i32) -> Self {
        match offset.rem_euclid(4) {
            0 => self,
            1 => Self {
                sin: -self.cos,
                cos: self.sin,
            },
            2 => Self {
                sin: -self.sin,
                cos: -self.cos,
            },
            _ => Self {
                sin: self.cos,
                cos: -self.sin,
            },
        }
    }

    pub fn exp_i(&self) -> Complex64 {
        self.cos + Complex64::i() * self.sin
    }
}

pub(crate) fn combine(kind: Kind, z: Complex64, phase: &Phase, s: &AsymptoticSums) -> Complex64 {
    let j = (phase.sin * s.p + phase.cos * s.q) / z;
    let h1 = phase.exp_i() * (s.q - Complex64::i() * s.p) / z;
    match kind {
        Kind::J => j,
        Kind::H1 => h1,
        Kind::H2 => j * 2.0 - h1,
        Kind::Y => -Complex64::i() * (h1 - j),
    }
}
