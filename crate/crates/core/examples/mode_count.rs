// How many spectral singularities each built-in medium supports under its
// gain cap, and the wavelength span they cover.

use spherical_singularities::gainmodel::{DispersionMode, GainMediumSpec};
use spherical_singularities::scattering::SphereGeometry;
use spherical_singularities::solver::{enumerate_singularities, SolverConfig};
use spherical_singularities::units::{mm_to_nm, NM_PER_UM};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (GainMediumSpec::rose_bengal_dmso(), mm_to_nm(3.3)),
        (GainMediumSpec::diode(), 150.0 * NM_PER_UM),
    ];
    for (medium, a_nm) in cases {
        let geom = SphereGeometry::with_radius(a_nm)?;
        let config = SolverConfig {
            dispersion: DispersionMode::Full,
            ..SolverConfig::default()
        };
        let modes = enumerate_singularities(&medium, &geom, &config, true)?;
        let sols = modes.solutions();
        let m_lo = sols.iter().map(|s| s.m).min().unwrap_or(0);
        let m_hi = sols.iter().map(|s| s.m).max().unwrap_or(0);
        let lam = |f: fn(f64, f64) -> f64, init| sols.iter().map(|s| s.lambda_nm).fold(init, f);
        println!(
            "{}: {} modes, m in [{m_lo}, {m_hi}], lambda in [{:.6}, {:.6}] nm, {} refinement failures",
            medium.name,
            sols.len(),
            lam(f64::min, f64::INFINITY),
            lam(f64::max, 0.0),
            modes.failures().count()
        );
        if let Some(s) = sols.iter().find(|s| s.m == 679) {
            println!(
                "  m = 679: lambda = {:.4} nm, g0 = {:.4} cm^-1",
                s.lambda_nm, s.g0_per_cm
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
