//! Spectral singularities of a spherical gain medium: special functions,
//! scattering amplitudes, closed-form and exact mode solutions, and
//! reflection spectra.

pub mod cli;
mod dd;
pub mod gainmodel;
pub mod perturbation;
pub mod report;
pub mod scattering;
pub mod solver;
pub mod specfun;
pub mod units;
