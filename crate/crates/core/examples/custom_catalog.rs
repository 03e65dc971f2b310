// Loading a user gain medium from catalog text and enumerating its modes
// without refinement.

use spherical_singularities::gainmodel::{DispersionMode, MediaCatalog};
use spherical_singularities::scattering::SphereGeometry;
use spherical_singularities::solver::seed_modes;
use spherical_singularities::units::Length;

const CATALOG: &str = "\
# Nd:glass-like host, generous pump
name = nd-glass
n0 = 1.52
lambda0_nm = 1054
gamma_hat = 0.025
g0_max_per_cm = 3.4
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut catalog = MediaCatalog::builtin();
    catalog.merge(MediaCatalog::parse(CATALOG)?);
    let medium = catalog.get("nd-glass").ok_or("missing medium")?;

    let radius: Length = "5mm".parse()?;
    let geom = SphereGeometry::with_radius(radius.nm())?;
    let seeds = seed_modes(medium, &geom, DispersionMode::Linearized)?;
    println!("{}: {} modes at a = {} mm", medium.name, seeds.len(), radius.mm());
    if let (Some(first), Some(last)) = (seeds.first(), seeds.last()) {
        println!(
            "  m {}..{}, lambda {:.4}..{:.4} nm",
            first.m, last.m, last.lambda_nm, first.lambda_nm
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
