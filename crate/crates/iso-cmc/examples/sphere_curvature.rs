//! Sample a sphere of isotropic space (a rotational paraboloid graph)
//! over a polar grid, propagate a lightlike Gauss map along the net,
//! and recover the mean curvature 1/r on every quad.
//!
//! Run with `cargo run --example sphere_curvature`.

use iso_cmc::curvature::DEFAULT_LOOP_TOL;
use iso_cmc::{
    lightcone_point, mean_curvature_quad, propagate_gauss, Complex64, GridDomain, IsoPoint,
    IsoSphere, Result, SurfaceNet,
};

fn main() -> Result<()> {
    let center = IsoPoint::new(0.25, -0.5, 0.75);
    let domain = GridDomain::new(0, 6, 0, 8)?;

    for radius in [0.5, 1.0, 3.0] {
        let sphere = IsoSphere::new(center, radius)?;
        // Ring radii grow linearly and the angles sweep a sector, so
        // every planar quad is an isosceles trapezoid: concircular, and
        // the lifted quads are planar.
        let planar = |m: i64, n: i64| {
            let rho = 1.0 + 0.15 * m as f64;
            let theta = n as f64 * (2.0 * std::f64::consts::PI / 24.0);
            (center.x + rho * theta.cos(), center.y + rho * theta.sin())
        };
        let net = SurfaceNet::from_fn(domain, |m, n| {
            let (x, y) = planar(m, n);
            IsoPoint::new(sphere.height(x, y), x, y)
        });

        // Seed from the graph gradient at the base vertex and propagate.
        let (x0, y0) = planar(0, 0);
        let phi = Complex64::new(x0 - center.x, -(y0 - center.y)) / radius;
        let gauss = propagate_gauss(&net, (0, 0), lightcone_point(phi), DEFAULT_LOOP_TOL)?;

        let mut worst = 0.0_f64;
        for quad in domain.quads() {
            let qc = mean_curvature_quad(&net, &gauss, quad)?;
            worst = worst.max((qc.mean_curvature - sphere.mean_curvature()).abs());
        }
        println!(
            "r = {radius:>3}: expected H = {:+.6}, worst deviation {worst:.3e}",
            sphere.mean_curvature()
        );
    }
    Ok(())
}
