// Complex refractive index of the pumped dye across its gain line, full and
// first-order in the pump strength.

use spherical_singularities::gainmodel::{dispersion_index, DispersionMode, GainMediumSpec, GainState};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let medium = GainMediumSpec::rose_bengal_dmso();
    let pump = GainState::new(4.981546, &medium);
    println!("kappa0 = {:.6e}", pump.kappa0);
    println!(
        "{:>8} {:>20} {:>14} {:>10}",
        "lambda", "eta - n0", "kappa", "|full-lin|"
    );
    for lambda in [530.0, 545.0, 549.0, 553.0, 570.0] {
        let full = dispersion_index(lambda, &medium, pump.kappa0, DispersionMode::Full)?;
        let lin = dispersion_index(lambda, &medium, pump.kappa0, DispersionMode::Linearized)?;
        let diff = (full.as_complex() - lin.as_complex()).norm();
        println!(
            "{lambda:>8.1} {:>20.6e} {:>14.6e} {diff:>10.2e}",
            full.eta - medium.n0,
            full.kappa
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
