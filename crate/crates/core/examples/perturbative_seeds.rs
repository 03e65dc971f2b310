// Closed-form singularities `(kappa, x)` along a fixed-eta mode family, and
// how far they sit from the exact condition as the sphere grows.

use spherical_singularities::perturbation::{tan_condition_residual, ModeSeed};
use spherical_singularities::scattering::{singularity_residual, SphereGeometry};
use spherical_singularities::specfun::BesselOrder;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let nu = BesselOrder::default().value();
    let eta = 1.479;
    let lambda_nm = 549.0;
    println!(
        "{:>7} {:>14} {:>12} {:>12} {:>12}",
        "m", "kappa", "x", "|tan res|", "|F|/k"
    );
    for m in [500, 2000, 17779, 71116] {
        let seed = ModeSeed::new(eta, m, nu)?;
        let tan = tan_condition_residual(&seed.index(), seed.x, nu)?;
        let geom = SphereGeometry::with_radius(seed.x * lambda_nm / std::f64::consts::TAU)?;
        let f = singularity_residual(&seed.index(), &geom, lambda_nm)?;
        println!(
            "{m:>7} {:>14.6e} {:>12.3} {:>12.3e} {:>12.3e}",
            seed.kappa,
            seed.x,
            tan.norm(),
            f.norm()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
