//! Zero-mean-curvature baseline: integrate the Weierstrass 1-form of a
//! scaled identity grid and confirm that every quad has mean curvature
//! zero.
//!
//! Run with `cargo run --example zmc_weierstrass`.

use iso_cmc::weierstrass::zmc_oneform;
use iso_cmc::{
    identity_scaling, lightcone_from_phi, mean_curvature_quad, GridDomain, IsoPoint, Result,
};

fn main() -> Result<()> {
    let domain = GridDomain::new(-8, 8, -8, 8)?;
    let g = identity_scaling(1.0, 6, 2, domain)?;

    let form = zmc_oneform(&g)?;
    let (closure, _) = form.max_closure_residual();
    println!("1-form closure residual: {closure:.3e}");

    let net = form.integrate((-8, -8), IsoPoint::ORIGIN, 1e-9)?;

    // The lightlike Gauss map of the zero-curvature net comes from the
    // grid function itself.
    let gauss = lightcone_from_phi(domain, |m, n| g.value(m, n).unwrap());
    let mut worst = 0.0_f64;
    for quad in domain.quads() {
        let qc = mean_curvature_quad(&net, &gauss, quad)?;
        worst = worst.max(qc.mean_curvature.abs());
    }
    println!("worst |H| over {} quads: {worst:.3e}", domain.quad_count());

    for (m, n) in [(-8, -8), (0, 0), (4, -3), (8, 8)] {
        let p = net.point(m, n)?;
        println!("X({m:>2}, {n:>2}) = ({:+.5}, {:+.5}, {:+.5})", p.l, p.x, p.y);
    }
    Ok(())
}
