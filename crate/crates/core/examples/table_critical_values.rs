// First critical gain values of a 3.3 mm Rose Bengal-DMSO sphere:
// closed-form wavelength, refined wavelength and threshold gain per mode.

use spherical_singularities::gainmodel::GainMediumSpec;
use spherical_singularities::scattering::SphereGeometry;
use spherical_singularities::solver::{enumerate_singularities, SolverConfig};
use spherical_singularities::units::mm_to_nm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let medium = GainMediumSpec::rose_bengal_dmso();
    let geom = SphereGeometry::with_radius(mm_to_nm(3.3))?;
    let modes = enumerate_singularities(&medium, &geom, &SolverConfig::default(), true)?;

    println!(
        "{:>2} {:>6} {:>10} {:>14} {:>14} {:>10}",
        "l", "m", "g0/cm", "lambda_pert", "lambda_exact", "|F|/k"
    );
    for (l, entry) in modes.entries.iter().take(7).enumerate() {
        let exact = entry.best();
        println!(
            "{:>2} {:>6} {:>10.6} {:>14.8} {:>14.8} {:>10.1e}",
            l + 1,
            entry.seed.m,
            exact.g0_per_cm,
            entry.seed.lambda_nm,
            exact.lambda_nm,
            exact.residual_mag
        );
    }
    println!("{} modes below {} cm^-1", modes.len(), medium.g0_max_per_cm);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
