// Reflection coefficient of the dye sphere pumped at its first critical gain,
// with peaks located and classified.

use spherical_singularities::gainmodel::GainMediumSpec;
use spherical_singularities::scattering::SphereGeometry;
use spherical_singularities::solver::{reflection_scan, ScanConfig};
use spherical_singularities::units::mm_to_nm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let medium = GainMediumSpec::rose_bengal_dmso();
    let geom = SphereGeometry::with_radius(mm_to_nm(3.3))?;
    let scan = reflection_scan(
        &medium,
        &geom,
        4.981546,
        (548.9, 549.1),
        2000,
        true,
        &ScanConfig::default(),
    )?;

    let floor = scan.samples.iter().map(|s| s.r).fold(f64::INFINITY, f64::min);
    println!("{} samples, min R = {floor:.3e}", scan.samples.len());
    for p in &scan.peaks {
        println!(
            "{:>15.9} nm  R = {:>9.3e}  refined {:>9.3e}  {:?}",
            p.lambda_nm, p.r, p.r_refined, p.kind
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
