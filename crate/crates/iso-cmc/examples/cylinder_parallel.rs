//! The cmc cylinder and its parallel surface: adding the Gauss map over
//! the curvature flips the sign of the mean curvature.
//!
//! Run with `cargo run --example cylinder_parallel`.

use iso_cmc::{
    mean_curvature_quad, parallel_surface, ExampleSpec, FamilyParams, GridDomain, Result,
};

fn main() -> Result<()> {
    let spec = ExampleSpec {
        mean_curvature: 1.0,
        params: FamilyParams::Cylinder { m_div: 4 },
        domain: GridDomain::new(-6, 6, -6, 6)?,
    };
    let cylinder = spec.closed_form()?;
    let gauss = spec.gauss_map()?;
    let nu = gauss.nu(1e-10)?;
    let parallel = parallel_surface(&cylinder, &nu, spec.mean_curvature)?;

    // The parallel net keeps the Gauss map and carries curvature -H.
    let mut h_range = (f64::INFINITY, f64::NEG_INFINITY);
    for quad in spec.domain.quads() {
        let qc = mean_curvature_quad(&parallel, &gauss, quad)?;
        h_range.0 = h_range.0.min(qc.mean_curvature);
        h_range.1 = h_range.1.max(qc.mean_curvature);
    }
    println!(
        "parallel surface mean curvature range [{:.12}, {:.12}] (original H = {})",
        h_range.0, h_range.1, spec.mean_curvature
    );

    for m in [-4, 0, 4] {
        let y = cylinder.point(m, 0)?;
        let p = parallel.point(m, 0)?;
        println!(
            "m = {m:>2}: cylinder ({:+.4}, {:+.4}, {:+.4})  parallel ({:+.4}, {:+.4}, {:+.4})",
            y.l, y.x, y.y, p.l, p.x, p.y
        );
    }
    Ok(())
}
