//! Christoffel duals of discrete holomorphic grids: the dual of the
//! discrete exponential, the vanishing mixed area with the conjugated
//! grid, and the involution property of dualizing twice.
//!
//! Run with `cargo run --example christoffel_dual`.

use iso_cmc::holomorphic::{christoffel_dual, verify_holomorphic};
use iso_cmc::{
    discrete_exponential, mixed_area_planar, Complex64, GridDomain, Result,
};

fn main() -> Result<()> {
    let domain = GridDomain::new(-4, 4, 0, 8)?;
    let mean_curvature = 1.0;
    let g = discrete_exponential(4, -0.5, domain)?;
    println!(
        "discrete exponential holomorphic: max cross-ratio residual {:.3e}",
        verify_holomorphic(&g, 1e-9).max_residual
    );

    let base = (domain.m_min(), domain.n_min());
    let zero = Complex64::new(0.0, 0.0);
    let h = christoffel_dual(&g, mean_curvature, base, zero, 1e-9)?;

    // The dual pairs to zero mixed area with the conjugated grid.
    let g_conj = g.conjugated();
    let mut worst_area = 0.0_f64;
    for quad in domain.quads() {
        let area = mixed_area_planar(
            &h.quad_values(quad)?,
            &g_conj.quad_values(quad)?,
            1e-8,
        )?;
        worst_area = worst_area.max(area.abs());
    }
    println!("max |A(h, conj g)| over all quads: {worst_area:.3e}");

    // Dualizing twice with the same labels recovers the grid up to an
    // additive constant (the defining edge relation is an involution).
    let h_relabeled = h.with_labels(g.labels().clone())?;
    let g2 = christoffel_dual(
        &h_relabeled,
        mean_curvature,
        base,
        g.value(base.0, base.1)?,
        1e-9,
    )?;
    let mut worst_dual = 0.0_f64;
    for (m, n) in domain.vertices() {
        worst_dual = worst_dual.max((g2.value(m, n)? - g.value(m, n)?).norm());
    }
    println!("dual-of-dual deviation from the original grid: {worst_dual:.3e}");
    Ok(())
}
