//! Lightlike Gauss maps of a cmc net: edge propagation versus the
//! pointwise closed form, loop consistency, and the beta parallelism
//! `dN = beta dY`.
//!
//! Run with `cargo run --example gauss_map`.

use iso_cmc::curvature::{beta_value, DEFAULT_LOOP_TOL};
use iso_cmc::{
    beta_check, propagate_gauss, Edge, ExampleSpec, FamilyParams, GridDomain, Result,
};

fn main() -> Result<()> {
    let spec = ExampleSpec {
        mean_curvature: 1.0,
        params: FamilyParams::DoublyChannel { m_div: 6, n_div: 2 },
        domain: GridDomain::new(-6, 6, -6, 6)?,
    };
    let net = spec.closed_form()?;
    let (g, _) = spec.weierstrass_data()?;
    let closed = spec.gauss_map()?;

    // Propagate from the closed-form value at the base vertex; the loop
    // consistency around every quad is verified internally.
    let base = (spec.domain.m_min(), spec.domain.n_min());
    let propagated = propagate_gauss(&net, base, closed.value(base.0, base.1)?, DEFAULT_LOOP_TOL)?;
    let mut worst = 0.0_f64;
    for (m, n) in spec.domain.vertices() {
        let d = (propagated.value(m, n)? - closed.value(m, n)?).euclidean_norm();
        worst = worst.max(d);
    }
    println!("propagated vs closed-form Gauss map: max deviation {worst:.3e}");

    // The Gauss map image lies on the isotropic unit sphere.
    let nu = closed.nu(1e-10)?;
    let mut sphere_defect = 0.0_f64;
    for (m, n) in spec.domain.vertices() {
        let p = nu.point(m, n)?;
        sphere_defect = sphere_defect.max((p.l + 0.5 * (p.x * p.x + p.y * p.y)).abs());
    }
    println!("unit-sphere defect of the Gauss map image: {sphere_defect:.3e}");

    let report = beta_check(&g, spec.mean_curvature, &net, &closed)?;
    println!("beta parallelism dN = beta dY: max edge residual {:.3e}", report.max_residual);
    let beta_h = beta_value(&g, Edge::Horizontal { m: 0, n: 0 }, spec.mean_curvature)?;
    let beta_v = beta_value(&g, Edge::Vertical { m: 0, n: 0 }, spec.mean_curvature)?;
    println!("beta on horizontal edges: {beta_h:+.6}; on vertical edges: {beta_v:+.6}");
    Ok(())
}
