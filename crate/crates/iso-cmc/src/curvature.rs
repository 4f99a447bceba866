//! Discrete lightlike Gauss maps, mixed areas, and per-quad mean
//! curvature of circular nets in isotropic 3-space.
//!
//! A lightlike Gauss map assigns to every vertex a null vector `N` with
//! `<N, P> = 1`, edge-parallel to the net. Along an edge it propagates
//! by reflecting through the lightcone,
//!
//! ```text
//! N_next = N + alpha dX,    alpha = -2 <dX, N> / <dX, dX>,
//! ```
//!
//! which is consistent around the quads of a circular net. For nets
//! built from Weierstrass data `(g, h)` it also has the pointwise closed
//! form determined by `phi = conj(h) + g`.
//!
//! Mean curvature is defined per quad by `A(X,N) + H A(X,X) = 0` in the
//! bivector space; on nets in isotropic space this reduces to the planar
//! scalar equation `A(x,n) + H A(x,x) = 0`, which is the form computed
//! here, with the bivector equation reported as a residual cross-check.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Edge, GridDomain, Quad, VertexField};
use crate::holomorphic::HolomorphicGrid;
use crate::minkowski::{Bivector4, IsoPoint, Vec4};
use crate::weierstrass::SurfaceNet;

/// Membership tolerance for the lightcone slice `<N,N> = 0, <N,P> = 1`.
pub const DEFAULT_LIGHTCONE_TOL: f64 = 1e-10;

/// Propagation aborts when `|alpha|` falls below this bound; the edge
/// then carries no information about the next vertex.
pub const ALPHA_TOL: f64 = 1e-12;

/// Default tolerance for quad-loop consistency of the propagation.
pub const DEFAULT_LOOP_TOL: f64 = 1e-10;

/// Default relative tolerance for edge-parallelism checks.
pub const DEFAULT_PARALLEL_TOL: f64 = 1e-8;

/// Vertex field of null vectors on the affine slice `<N, P> = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LightconeNet {
    values: VertexField<Vec4>,
}

impl LightconeNet {
    /// Builds the field without checking the slice membership; see
    /// [`LightconeNet::validate`].
    pub fn from_fn(domain: GridDomain, f: impl FnMut(i64, i64) -> Vec4) -> Self {
        Self { values: VertexField::from_fn(domain, f) }
    }

    pub fn domain(&self) -> GridDomain {
        self.values.domain()
    }

    pub fn value(&self, m: i64, n: i64) -> Result<Vec4> {
        self.values.get(m, n)
    }

    pub fn set_value(&mut self, m: i64, n: i64, v: Vec4) -> Result<()> {
        self.values.set(m, n, v)
    }

    /// Forward edge increment.
    pub fn edge_increment(&self, edge: Edge) -> Result<Vec4> {
        let ((m0, n0), (m1, n1)) = edge.endpoints();
        Ok(self.values.get(m1, n1)? - self.values.get(m0, n0)?)
    }

    pub fn quad_values(&self, quad: Quad) -> Result<[Vec4; 4]> {
        let [i, j, k, l] = quad.corners();
        Ok([
            self.values.get(i.0, i.1)?,
            self.values.get(j.0, j.1)?,
            self.values.get(k.0, k.1)?,
            self.values.get(l.0, l.1)?,
        ])
    }

    /// Checks `|<N,N>| <= tol` and `|<N,P> - 1| <= tol` at every vertex.
    pub fn validate(&self, tol: f64) -> Result<()> {
        for (m, n) in self.domain().vertices() {
            let v = self.values.get(m, n)?;
            let form_nn = v.form(v);
            let form_np = v.form(Vec4::P);
            if form_nn.abs() > tol || (form_np - 1.0).abs() > tol {
                return Err(Error::NotLightcone { m, n, form_nn, form_np });
            }
        }
        Ok(())
    }

    /// The Gauss map `nu = N - PTILDE`, valued in the isotropic unit
    /// sphere `l = -(x^2 + y^2)/2`. Fails where `<N, P>` deviates from 1
    /// by more than `tol`.
    pub fn nu(&self, tol: f64) -> Result<SurfaceNet> {
        let mut points = Vec::with_capacity(self.domain().vertex_count());
        for (m, n) in self.domain().vertices() {
            let v = self.values.get(m, n)?;
            let form_np = v.form(Vec4::P);
            if (form_np - 1.0).abs() > tol {
                return Err(Error::NotLightcone { m, n, form_nn: v.form(v), form_np });
            }
            points.push(IsoPoint::extract(v - Vec4::PTILDE, tol)?);
        }
        SurfaceNet::from_points(self.domain(), points)
    }
}

/// Point of the lightcone slice with planar part `(a, b)`:
/// `(-(a^2+b^2)/2, a, b)` lifted by `PTILDE`. This parameterizes the
/// slice globally and is how random propagation seeds are drawn.
pub fn lightcone_from_planar(a: f64, b: f64) -> Vec4 {
    IsoPoint::new(-0.5 * (a * a + b * b), a, b).embed() + Vec4::PTILDE
}

/// Closed-form lightlike Gauss map value
/// `N = -1/2 (1 + |phi|^2, 2 Re phi, -2 Im phi, -1 + |phi|^2)`.
pub fn lightcone_point(phi: Complex64) -> Vec4 {
    lightcone_from_planar(-phi.re, phi.im)
}

/// Pointwise lightlike Gauss map from a `phi` grid function.
pub fn lightcone_from_phi(
    domain: GridDomain,
    mut phi: impl FnMut(i64, i64) -> Complex64,
) -> LightconeNet {
    LightconeNet::from_fn(domain, |m, n| lightcone_point(phi(m, n)))
}

/// Closed-form lightlike Gauss map of the Weierstrass pair `(g, h)`,
/// with `phi = conj(h) + g`.
pub fn gauss_closed_form(g: &HolomorphicGrid, h: &HolomorphicGrid) -> Result<LightconeNet> {
    if g.domain() != h.domain() {
        return Err(Error::DomainMismatch);
    }
    Ok(lightcone_from_phi(g.domain(), |m, n| {
        h.value(m, n).unwrap().conj() + g.value(m, n).unwrap()
    }))
}

/// Propagation coefficient `alpha = -2 <dx, n> / <dx, dx>`, or `None`
/// when the squared edge length vanishes.
pub fn propagation_coefficient(dx: Vec4, n: Vec4) -> Option<f64> {
    let dd = dx.form(dx);
    if dd == 0.0 {
        return None;
    }
    Some(-2.0 * dx.form(n) / dd)
}

fn step(dx: Vec4, n: Vec4, edge: Edge) -> Result<(Vec4, f64)> {
    let alpha = propagation_coefficient(dx, n).ok_or(Error::NullEdge(edge))?;
    Ok((n + dx * alpha, alpha))
}

/// Propagates a seed around one quad (`i -> j -> k -> l -> i`) and
/// returns the value carried back to the first corner. Edges where
/// `|alpha| < ALPHA_TOL` are tangent to the lightcone and leave the
/// value unchanged (the double root of the propagation quadratic).
pub fn propagate_around_quad(x: &SurfaceNet, quad: Quad, seed: Vec4) -> Result<Vec4> {
    let corners = quad.corners();
    let [ij, jk, lk, il] = quad.boundary();
    let walk = [ij, jk, lk, il];
    let mut n = seed;
    for c in 0..4 {
        let (m0, n0) = corners[c];
        let (m1, n1) = corners[(c + 1) % 4];
        let dx = x.embedded(m1, n1)? - x.embedded(m0, n0)?;
        let (next, alpha) = step(dx, n, walk[c])?;
        n = if alpha.abs() < ALPHA_TOL { n } else { next };
    }
    Ok(n)
}

/// Propagates a lightlike Gauss map over the whole net from one seed,
/// breadth-first with row-major tie-breaking, then verifies loop
/// consistency around every quad within `loop_tol`, relative to the
/// local Gauss map magnitude above unit scale (the values grow like the
/// squared planar extent). The seed must lie on the lightcone slice;
/// edges must have nonzero squared length and `|alpha| >= ALPHA_TOL`.
pub fn propagate_gauss(
    x: &SurfaceNet,
    seed_vertex: (i64, i64),
    seed: Vec4,
    loop_tol: f64,
) -> Result<LightconeNet> {
    let domain = x.domain();
    domain.vertex_index(seed_vertex.0, seed_vertex.1)?;
    let form_nn = seed.form(seed);
    let form_np = seed.form(Vec4::P);
    if form_nn.abs() > DEFAULT_LIGHTCONE_TOL || (form_np - 1.0).abs() > DEFAULT_LIGHTCONE_TOL {
        return Err(Error::SeedOffLightcone { form_nn, form_np });
    }

    let mut values = VertexField::from_fn(domain, |_, _| Vec4::ZERO);
    let mut visited = VertexField::from_fn(domain, |_, _| false);
    values.set(seed_vertex.0, seed_vertex.1, seed)?;
    visited.set(seed_vertex.0, seed_vertex.1, true)?;

    let mut queue = std::collections::VecDeque::from([seed_vertex]);
    while let Some((m, n)) = queue.pop_front() {
        let current = values.get(m, n)?;
        // Row-major neighbor order keeps the sweep deterministic.
        let neighbors = [(m, n - 1), (m - 1, n), (m + 1, n), (m, n + 1)];
        for (mm, nn) in neighbors {
            if !domain.contains_vertex(mm, nn) || visited.get(mm, nn)? {
                continue;
            }
            let edge = if mm != m {
                Edge::Horizontal { m: m.min(mm), n }
            } else {
                Edge::Vertical { m, n: n.min(nn) }
            };
            let dx = x.embedded(mm, nn)? - x.embedded(m, n)?;
            let (next, alpha) = step(dx, current, edge)?;
            if alpha.abs() < ALPHA_TOL {
                return Err(Error::DegeneratePropagation { edge, alpha, tol: ALPHA_TOL });
            }
            values.set(mm, nn, next)?;
            visited.set(mm, nn, true)?;
            queue.push_back((mm, nn));
        }
    }

    let net = LightconeNet { values };
    for quad in domain.quads() {
        let seed_here = net.value(quad.m, quad.n)?;
        let returned = propagate_around_quad(x, quad, seed_here)?;
        let residual =
            (returned - seed_here).euclidean_norm() / seed_here.euclidean_norm().max(1.0);
        if residual > loop_tol {
            return Err(Error::GaussLoopInconsistent {
                m: quad.m,
                n: quad.n,
                residual,
                tol: loop_tol,
            });
        }
    }
    Ok(net)
}

fn diagonal_cross_bivector(xa: &[Vec4; 4], xb: &[Vec4; 4]) -> Bivector4 {
    let first = (xa[0] - xa[2]).wedge(xb[1] - xb[3]);
    let second = (xa[1] - xa[3]).wedge(xb[0] - xb[2]);
    (first - second) * 0.25
}

/// 2D wedge `u_x v_y - u_y v_x` of planar points as complex numbers.
fn wedge2(u: Complex64, v: Complex64) -> f64 {
    (u.conj() * v).im
}

fn diagonal_cross_planar(xa: &[Complex64; 4], xb: &[Complex64; 4]) -> f64 {
    0.25 * (wedge2(xa[0] - xa[2], xb[1] - xb[3]) - wedge2(xa[1] - xa[3], xb[0] - xb[2]))
}

/// Mixed area of two edge-parallel quads in the bivector space. The
/// edge-parallelism hypothesis is checked within `tol` (relative);
/// zero edges are parallel to anything.
pub fn mixed_area_bivector(xa: &[Vec4; 4], xb: &[Vec4; 4], tol: f64) -> Result<Bivector4> {
    for c in 0..4 {
        let u = xa[(c + 1) % 4] - xa[c];
        let v = xb[(c + 1) % 4] - xb[c];
        let scale = u.euclidean_norm() * v.euclidean_norm();
        if scale == 0.0 {
            continue;
        }
        let residual = u.wedge(v).norm() / scale;
        if residual > tol {
            return Err(Error::NotEdgeParallel { corner: c, residual, tol });
        }
    }
    Ok(diagonal_cross_bivector(xa, xb))
}

/// Planar mixed area of two edge-parallel planar quads. `A(x, x)` is
/// the signed area of the quad.
pub fn mixed_area_planar(xa: &[Complex64; 4], xb: &[Complex64; 4], tol: f64) -> Result<f64> {
    for c in 0..4 {
        let u = xa[(c + 1) % 4] - xa[c];
        let v = xb[(c + 1) % 4] - xb[c];
        let scale = u.norm() * v.norm();
        if scale == 0.0 {
            continue;
        }
        let residual = wedge2(u, v).abs() / scale;
        if residual > tol {
            return Err(Error::NotEdgeParallel { corner: c, residual, tol });
        }
    }
    Ok(diagonal_cross_planar(xa, xb))
}

/// Planar mixed areas `(A(x,x), A(x,n))` of one quad, without the
/// parallelism check; `A(x,x) = 0` marks the quad as degenerate for the
/// curvature relation.
pub fn quad_planar_areas(
    x: &SurfaceNet,
    gauss: &LightconeNet,
    quad: Quad,
) -> Result<(f64, f64)> {
    let planar = x.quad_planar(quad)?;
    let n_planar = gauss.quad_values(quad)?.map(|v| Complex64::new(v.x, v.y));
    Ok((
        diagonal_cross_planar(&planar, &planar),
        diagonal_cross_planar(&planar, &n_planar),
    ))
}

/// Per-quad curvature data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadCurvature {
    pub quad: Quad,
    /// Mean curvature from the planar relation `A(x,n) + H A(x,x) = 0`.
    pub mean_curvature: f64,
    /// Planar self mixed area `A(x, x)`.
    pub area_xx: f64,
    /// Planar mixed area `A(x, n)` with the Gauss image.
    pub area_xn: f64,
    /// Norm of `A(X,N) + H A(X,X)` in the bivector space; cross-checks
    /// the defining relation at the scale of the squared edge lengths.
    pub bivector_residual: f64,
}

/// Mean curvature of one quad of `x` with lightlike Gauss map `gauss`.
/// Assumes the pair is edge-parallel (a propagated or closed-form Gauss
/// map of a circular net); violations surface in `bivector_residual`.
/// Fails when the planar self mixed area vanishes.
pub fn mean_curvature_quad(
    x: &SurfaceNet,
    gauss: &LightconeNet,
    quad: Quad,
) -> Result<QuadCurvature> {
    let planar = x.quad_planar(quad)?;
    let n_values = gauss.quad_values(quad)?;
    let n_planar = n_values.map(|v| Complex64::new(v.x, v.y));

    let area_xx = diagonal_cross_planar(&planar, &planar);
    if area_xx == 0.0 {
        return Err(Error::DegenerateQuadArea(quad));
    }
    let area_xn = diagonal_cross_planar(&planar, &n_planar);
    let mean_curvature = -area_xn / area_xx;

    let embedded = x.quad_embedded(quad)?;
    let residual = diagonal_cross_bivector(&embedded, &n_values)
        + diagonal_cross_bivector(&embedded, &embedded) * mean_curvature;

    Ok(QuadCurvature {
        quad,
        mean_curvature,
        area_xx,
        area_xn,
        bivector_residual: residual.norm(),
    })
}

/// Edge function `beta = -m |dg|^2 - H` of the Weierstrass data; the
/// Gauss map of the associated net satisfies `dN = beta dY` edge-wise.
pub fn beta_value(g: &HolomorphicGrid, edge: Edge, mean_curvature: f64) -> Result<f64> {
    let label = g.labels().label(edge)?;
    let dg = g.edge_difference(edge)?;
    Ok(-label * dg.norm_sqr() - mean_curvature)
}

/// Per-edge residuals of `dN = beta dY`.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaReport {
    pub edges: Vec<(Edge, f64)>,
    pub max_residual: f64,
}

/// Checks the parallelism `dN = beta dY` on every edge for a net `y`
/// and Gauss map built from Weierstrass data `(g, h)` with curvature
/// `H`; residuals are absolute, component-wise over the embedding.
pub fn beta_check(
    g: &HolomorphicGrid,
    mean_curvature: f64,
    y: &SurfaceNet,
    gauss: &LightconeNet,
) -> Result<BetaReport> {
    if g.domain() != y.domain() || g.domain() != gauss.domain() {
        return Err(Error::DomainMismatch);
    }
    let mut edges = Vec::with_capacity(g.domain().h_edge_count() + g.domain().v_edge_count());
    let mut max_residual = 0.0_f64;
    for edge in g.domain().edges() {
        let beta = beta_value(g, edge, mean_curvature)?;
        let dn = gauss.edge_increment(edge)?;
        let dy = y.edge_increment(edge)?.embed();
        let residual = (dn - dy * beta).euclidean_norm();
        max_residual = max_residual.max(residual);
        edges.push((edge, residual));
    }
    Ok(BetaReport { edges, max_residual })
}

/// Residuals of the circular-net conditions on one quad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularityResidual {
    /// Tetrahedron volume of the four points divided by the cubed mean
    /// edge length; zero iff coplanar.
    pub coplanarity: f64,
    /// `|Im cr|` of the planar projections; zero iff concircular or
    /// collinear, infinite when the cross-ratio degenerates.
    pub concircularity: f64,
}

/// Checks one quad of a net for coplanarity and planar concircularity.
pub fn circularity_check(x: &SurfaceNet, quad: Quad) -> Result<CircularityResidual> {
    let p = x.quad_points(quad)?;
    let e1 = p[1] - p[0];
    let e2 = p[2] - p[0];
    let e3 = p[3] - p[0];
    let det = e1.l * (e2.x * e3.y - e2.y * e3.x) - e1.x * (e2.l * e3.y - e2.y * e3.l)
        + e1.y * (e2.l * e3.x - e2.x * e3.l);
    let mean_edge = (0..4)
        .map(|c| (p[(c + 1) % 4] - p[c]).euclidean_norm())
        .sum::<f64>()
        / 4.0;
    let coplanarity = if mean_edge > 0.0 {
        det.abs() / 6.0 / (mean_edge * mean_edge * mean_edge)
    } else {
        0.0
    };

    let z = p.map(IsoPoint::planar);
    let concircularity = match crate::holomorphic::cross_ratio(z[0], z[1], z[2], z[3]) {
        Ok(cr) => cr.im.abs(),
        Err(_) => f64::INFINITY,
    };

    Ok(CircularityResidual { coplanarity, concircularity })
}
