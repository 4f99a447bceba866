//! Shared builders for the integration suites.
#![allow(dead_code)]

use iso_cmc::holomorphic::christoffel_dual;
use iso_cmc::weierstrass::cmc_oneform;
use iso_cmc::{
    ExampleSpec, FamilyParams, GridDomain, HolomorphicGrid, IsoPoint, SurfaceNet,
};

pub fn channel_spec(mean_curvature: f64, m_div: i64, n_div: i64, domain: GridDomain) -> ExampleSpec {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::DoublyChannel { m_div, n_div },
        domain,
    }
}

pub fn cylinder_spec(mean_curvature: f64, m_div: i64, domain: GridDomain) -> ExampleSpec {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::Cylinder { m_div },
        domain,
    }
}

pub fn delaunay_spec(mean_curvature: f64, n_div: i64, c: f64, domain: GridDomain) -> ExampleSpec {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::Delaunay { n_div, c },
        domain,
    }
}

/// The three acceptance families on their standard domains.
pub fn standard_specs(mean_curvature: f64) -> Vec<(&'static str, ExampleSpec)> {
    vec![
        (
            "doubly-channel",
            channel_spec(
                mean_curvature,
                6,
                2,
                GridDomain::new(-10, 10, -10, 10).unwrap(),
            ),
        ),
        (
            "cylinder",
            cylinder_spec(mean_curvature, 4, GridDomain::new(-10, 10, -10, 10).unwrap()),
        ),
        (
            "delaunay",
            delaunay_spec(
                mean_curvature,
                4,
                -0.5,
                GridDomain::new(-5, 5, 0, 8).unwrap(),
            ),
        ),
    ]
}

/// Fully recursive pipeline: integrated Christoffel dual, cmc 1-form,
/// integration anchored at the closed-form base vertex.
pub fn pipeline_net(spec: &ExampleSpec) -> SurfaceNet {
    let (g, h) = recursive_data(spec);
    let base = (spec.domain.m_min(), spec.domain.n_min());
    let form = cmc_oneform(&g, &h, spec.mean_curvature, 1e-9).unwrap();
    form.integrate(base, spec.closed_form_point(base.0, base.1).unwrap(), 1e-9)
        .unwrap()
}

/// Weierstrass data with the dual obtained by integration rather than
/// from its closed form (the closed form only anchors the base value).
pub fn recursive_data(spec: &ExampleSpec) -> (HolomorphicGrid, HolomorphicGrid) {
    let (g, h_closed) = spec.weierstrass_data().unwrap();
    let base = (spec.domain.m_min(), spec.domain.n_min());
    let h = christoffel_dual(
        &g,
        spec.mean_curvature,
        base,
        h_closed.value(base.0, base.1).unwrap(),
        1e-9,
    )
    .unwrap();
    (g, h)
}

pub fn max_vertex_error(a: &SurfaceNet, b: &SurfaceNet) -> f64 {
    assert_eq!(a.domain(), b.domain());
    a.domain()
        .vertices()
        .map(|(m, n)| (a.point(m, n).unwrap() - b.point(m, n).unwrap()).euclidean_norm())
        .fold(0.0, f64::max)
}

pub fn max_vertex_norm(a: &SurfaceNet) -> f64 {
    a.domain()
        .vertices()
        .map(|(m, n)| a.point(m, n).unwrap().euclidean_norm())
        .fold(0.0, f64::max)
}

/// Largest normalized wedge between corresponding edge increments of
/// two nets; zero increments count as parallel.
pub fn edge_parallel_residual(a: &SurfaceNet, b: &SurfaceNet) -> f64 {
    assert_eq!(a.domain(), b.domain());
    let mut worst = 0.0_f64;
    for edge in a.domain().edges() {
        let u = a.edge_increment(edge).unwrap().embed();
        let v = b.edge_increment(edge).unwrap().embed();
        let scale = u.euclidean_norm() * v.euclidean_norm();
        if scale == 0.0 {
            continue;
        }
        worst = worst.max(u.wedge(v).norm() / scale);
    }
    worst
}

/// Base point for a zero-mean-curvature net whose planar part matches
/// the sphere term of `h`.
pub fn zmc_base_point(h: &HolomorphicGrid, mean_curvature: f64, base: (i64, i64)) -> IsoPoint {
    let z = h.value(base.0, base.1).unwrap() / mean_curvature;
    IsoPoint::new(0.0, z.re, z.im)
}

/// One printed pass/fail line per acceptance criterion.
pub fn criterion(name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {name} failed: {detail}");
}

/// Circumcenter of three planar points as complex numbers; `None` for
/// collinear triples.
pub fn circumcenter(
    a: iso_cmc::Complex64,
    b: iso_cmc::Complex64,
    c: iso_cmc::Complex64,
) -> Option<iso_cmc::Complex64> {
    let denom = a.conj() * (b - c) + b.conj() * (c - a) + c.conj() * (a - b);
    if denom.norm() == 0.0 {
        return None;
    }
    let num = a.norm_sqr() * (b - c) + b.norm_sqr() * (c - a) + c.norm_sqr() * (a - b);
    Some(num / denom)
}

/// A quad mapped to the unit circle: the four corner angles of its
/// planar circumcircle. Heights drop out (an isotropic shear plus a
/// planar similarity maps the original onto this one).
pub fn unit_circle_quad(net: &SurfaceNet, quad: iso_cmc::Quad) -> Option<[f64; 4]> {
    let z = net.quad_planar(quad).ok()?;
    let center = circumcenter(z[0], z[1], z[2])?;
    Some([
        (z[0] - center).arg(),
        (z[1] - center).arg(),
        (z[2] - center).arg(),
        (z[3] - center).arg(),
    ])
}

/// The quad with corners `(0, cos t, sin t)` as a 2x2 net.
pub fn quad_net_from_angles(thetas: [f64; 4]) -> SurfaceNet {
    let corner = |m: i64, n: i64| {
        let idx = match (m, n) {
            (0, 0) => 0,
            (1, 0) => 1,
            (1, 1) => 2,
            _ => 3,
        };
        IsoPoint::new(0.0, thetas[idx].cos(), thetas[idx].sin())
    };
    SurfaceNet::from_fn(GridDomain::new(0, 1, 0, 1).unwrap(), corner)
}

/// Lightcone-slice seed at the unit-circle point with angle `theta`,
/// written in the tangent/normal frame there with coefficients `(a, b)`.
pub fn frame_seed(theta: f64, a: f64, b: f64) -> iso_cmc::Vec4 {
    let tangent = iso_cmc::Vec4::new(0.0, -theta.sin(), theta.cos(), 0.0);
    let normal = iso_cmc::Vec4::new(0.0, -theta.cos(), -theta.sin(), 0.0);
    tangent * a + normal * b + iso_cmc::Vec4::P * (-0.5 * (a * a + b * b))
        + iso_cmc::Vec4::PTILDE
}
