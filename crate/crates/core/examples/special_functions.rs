// Spherical Bessel and Hankel functions of order sqrt(5)/2 at small and
// very large complex arguments, with the Wronskian as a self-check.

use num_complex::Complex64;
use spherical_singularities::specfun::{family, BesselOrder, Kind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let nu = BesselOrder::default().value();
    for z in [
        Complex64::new(3.0, 0.5),
        Complex64::new(40.0, 0.0),
        Complex64::new(37768.0, -0.82),
    ] {
        let j = family(Kind::J, nu, z)?;
        let y = family(Kind::Y, nu, z)?;
        let h1 = family(Kind::H1, nu, z)?;
        let wronskian = j.center * y.derivative() - j.derivative() * y.center;
        println!("z = {z}");
        println!("  j  = {:.15e}", j.center);
        println!("  y  = {:.15e}", y.center);
        println!("  h1 = {:.15e}  h1' = {:.15e}", h1.center, h1.derivative());
        println!("  z^2 W[j, y] - 1 = {:.2e}", (wronskian * z * z - 1.0).norm());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
