// Smallest sphere that reaches threshold under each medium's gain cap, and
// how it scales when the cap is raised.

use spherical_singularities::gainmodel::{min_radius, GainMediumSpec};
use spherical_singularities::specfun::BesselOrder;
use spherical_singularities::units::nm_to_mm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let nu = BesselOrder::default().value();
    for medium in [GainMediumSpec::rose_bengal_dmso(), GainMediumSpec::diode()] {
        for scale in [1.0, 2.0] {
            let capped = GainMediumSpec {
                g0_max_per_cm: medium.g0_max_per_cm * scale,
                ..medium.clone()
            };
            let r = min_radius(&capped, nu);
            println!(
                "{:<17} g0_max = {:>6} cm^-1: a_min = {:.7} mm (mode {}, {:.4} nm), envelope {:.7} mm",
                capped.name,
                capped.g0_max_per_cm,
                nm_to_mm(r.radius_nm),
                r.m,
                r.lambda_nm,
                nm_to_mm(r.envelope_nm)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
