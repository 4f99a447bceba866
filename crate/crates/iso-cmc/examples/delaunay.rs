//! Discrete Delaunay-type surfaces of revolution: closed form, the
//! 2N-periodicity of the profile, and constant mean curvature.
//!
//! Run with `cargo run --example delaunay`.

use iso_cmc::{
    mean_curvature_quad, ExampleSpec, FamilyParams, GridDomain, Result,
};

fn main() -> Result<()> {
    let n_div = 4;
    let spec = ExampleSpec {
        mean_curvature: 1.0,
        params: FamilyParams::Delaunay { n_div, c: -0.5 },
        domain: GridDomain::new(-5, 5, 0, 2 * n_div)?,
    };
    let net = spec.closed_form()?;

    // One full revolution: n and n + 2N give the same vertex.
    let mut period_defect = 0.0_f64;
    for m in -5..=5 {
        let a = net.point(m, 0)?;
        let b = net.point(m, 2 * n_div)?;
        period_defect = period_defect.max((a - b).euclidean_norm());
    }
    println!("2N-periodicity defect over all meridians: {period_defect:.3e}");

    // Ring radii of the surface of revolution.
    for m in [-5, -2, 0, 2, 5] {
        let p = net.point(m, 0)?;
        let radius = p.planar().norm();
        println!("ring m = {m:>2}: radius {radius:.6}, height {:.6}", p.l);
    }

    let gauss = spec.gauss_map()?;
    let mut worst = 0.0_f64;
    for quad in spec.domain.quads() {
        let qc = mean_curvature_quad(&net, &gauss, quad)?;
        worst = worst.max((qc.mean_curvature - spec.mean_curvature).abs());
    }
    println!(
        "worst |H - {}| over {} quads: {worst:.3e}",
        spec.mean_curvature,
        spec.domain.quad_count()
    );
    Ok(())
}
