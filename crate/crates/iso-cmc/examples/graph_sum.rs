//! Sum of nets as graphs: a zero-mean-curvature net plus the sphere
//! term built from the Christoffel dual gives the cmc net, and mean
//! curvatures add quad by quad.
//!
//! Run with `cargo run --example graph_sum`.

use iso_cmc::weierstrass::zmc_oneform;
use iso_cmc::{
    gauss_closed_form, lightcone_from_phi, mean_curvature_quad, sphere_term, ExampleSpec,
    FamilyParams, GridDomain, IsoPoint, Result,
};

fn main() -> Result<()> {
    let spec = ExampleSpec {
        mean_curvature: 1.0,
        params: FamilyParams::DoublyChannel { m_div: 6, n_div: 2 },
        domain: GridDomain::new(-6, 6, -6, 6)?,
    };
    let domain = spec.domain;
    let (g, h) = spec.weierstrass_data()?;
    let base = (domain.m_min(), domain.n_min());

    // Anchor the zero-curvature net so its planar part matches the
    // sphere term's.
    let z0 = h.value(base.0, base.1)? / spec.mean_curvature;
    let x = zmc_oneform(&g)?.integrate(base, IsoPoint::new(0.0, z0.re, z0.im), 1e-9)?;
    let s = sphere_term(&h, spec.mean_curvature)?;
    let y = x.graph_sum(&s, 1e-10)?;

    let gauss_x = lightcone_from_phi(domain, |m, n| g.value(m, n).unwrap());
    let gauss_s = lightcone_from_phi(domain, |m, n| h.value(m, n).unwrap().conj());
    let gauss_y = gauss_closed_form(&g, &h)?;

    let mut worst = 0.0_f64;
    let probe = iso_cmc::Quad { m: 0, n: 0 };
    for quad in domain.quads() {
        let hx = mean_curvature_quad(&x, &gauss_x, quad)?.mean_curvature;
        let hs = mean_curvature_quad(&s, &gauss_s, quad)?.mean_curvature;
        let hy = mean_curvature_quad(&y, &gauss_y, quad)?.mean_curvature;
        worst = worst.max((hy - hx - hs).abs());
        if quad == probe {
            println!("quad (0,0): H(X) = {hx:+.9}, H(S) = {hs:+.9}, H(X +gr S) = {hy:+.9}");
        }
    }
    println!(
        "worst additivity defect |H(X +gr S) - H(X) - H(S)| over {} quads: {worst:.3e}",
        domain.quad_count()
    );
    Ok(())
}
