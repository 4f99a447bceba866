//! Discrete holomorphic functions on rectangular grids.
//!
//! A complex grid function is discrete holomorphic when the cross-ratio
//! of every elementary quadrilateral factorizes as the ratio
//! `m_il / m_ij` of its vertical and horizontal edge labels. The module
//! provides the cross-ratio, a verification report, Christoffel duals
//! (`dh = H / (m dg)` edge-wise), and the two generator families used by
//! the closed-form surfaces: scaled identity grids and discrete
//! exponential grids, both with cross-ratio -1.
//!
//! Edge differences are stored in forward orientation: `dg` on the edge
//! `(m,n) -> (m+1,n)` means `g(m+1,n) - g(m,n)`. All edge formulas in
//! this crate are odd in the edge difference, so they take the same
//! shape in either orientation convention.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Edge, EdgeLabels, GridDomain, Quad, VertexField};

/// Default verification tolerance, relative to the cross-ratio target
/// of each quad.
pub const DEFAULT_HOLOMORPHIC_TOL: f64 = 1e-9;

/// Complex cross-ratio `(zi - zj)/(zj - zk) * (zk - zl)/(zl - zi)`.
///
/// Fails when a denominator vanishes (`zj = zk` or `zl = zi`).
pub fn cross_ratio(
    zi: Complex64,
    zj: Complex64,
    zk: Complex64,
    zl: Complex64,
) -> Result<Complex64> {
    let d1 = zj - zk;
    let d2 = zl - zi;
    if d1.norm_sqr() == 0.0 || d2.norm_sqr() == 0.0 {
        return Err(Error::CrossRatioDegenerate);
    }
    Ok((zi - zj) / d1 * ((zk - zl) / d2))
}

/// Complex-valued grid function together with its strip edge labels.
#[derive(Debug, Clone, PartialEq)]
pub struct HolomorphicGrid {
    values: VertexField<Complex64>,
    labels: EdgeLabels,
}

impl HolomorphicGrid {
    pub fn from_fn(labels: EdgeLabels, f: impl FnMut(i64, i64) -> Complex64) -> Self {
        Self {
            values: VertexField::from_fn(labels.domain(), f),
            labels,
        }
    }

    pub fn domain(&self) -> GridDomain {
        self.values.domain()
    }

    pub fn labels(&self) -> &EdgeLabels {
        &self.labels
    }

    pub fn value(&self, m: i64, n: i64) -> Result<Complex64> {
        self.values.get(m, n)
    }

    /// Same values with different labels (domains must agree).
    pub fn with_labels(&self, labels: EdgeLabels) -> Result<Self> {
        if labels.domain() != self.domain() {
            return Err(Error::DomainMismatch);
        }
        Ok(Self {
            values: self.values.clone(),
            labels,
        })
    }

    /// Complex conjugate of every value, same labels.
    pub fn conjugated(&self) -> Self {
        Self {
            values: self.values.map(|z| z.conj()),
            labels: self.labels.clone(),
        }
    }

    /// Forward edge difference `g(to) - g(from)`.
    pub fn edge_difference(&self, edge: Edge) -> Result<Complex64> {
        let ((m0, n0), (m1, n1)) = edge.endpoints();
        Ok(self.values.get(m1, n1)? - self.values.get(m0, n0)?)
    }

    /// Edge midpoint value `(g(from) + g(to)) / 2`.
    pub fn edge_midpoint(&self, edge: Edge) -> Result<Complex64> {
        let ((m0, n0), (m1, n1)) = edge.endpoints();
        Ok((self.values.get(m0, n0)? + self.values.get(m1, n1)?) * 0.5)
    }

    /// Values at the four corners of a quad in `i, j, k, l` order.
    pub fn quad_values(&self, quad: Quad) -> Result<[Complex64; 4]> {
        let [i, j, k, l] = quad.corners();
        Ok([
            self.values.get(i.0, i.1)?,
            self.values.get(j.0, j.1)?,
            self.values.get(k.0, k.1)?,
            self.values.get(l.0, l.1)?,
        ])
    }
}

/// Outcome of the cross-ratio check on one quad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadStatus {
    /// `|cr - m_il/m_ij|`.
    Residual(f64),
    /// The cross-ratio is undefined on this quad.
    Degenerate(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResidual {
    pub quad: Quad,
    pub status: QuadStatus,
}

/// Per-quad residuals of the holomorphicity check.
#[derive(Debug, Clone, PartialEq)]
pub struct HolomorphicReport {
    pub quads: Vec<QuadResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

/// Checks `cr = m_il / m_ij` on every quad. A quad passes when the
/// residual is at most `tol * |m_il / m_ij|`; degenerate quads fail
/// with a reason.
pub fn verify_holomorphic(g: &HolomorphicGrid, tol: f64) -> HolomorphicReport {
    let mut quads = Vec::with_capacity(g.domain().quad_count());
    let mut max_residual = 0.0_f64;
    let mut pass = true;
    for quad in g.domain().quads() {
        let [zi, zj, zk, zl] = g.quad_values(quad).expect("quad in domain");
        let target = g.labels.cross_ratio_target(quad).expect("quad in domain");
        let status = match cross_ratio(zi, zj, zk, zl) {
            Ok(cr) => {
                let residual = (cr - Complex64::new(target, 0.0)).norm();
                max_residual = max_residual.max(residual);
                if residual > tol * target.abs() {
                    pass = false;
                }
                QuadStatus::Residual(residual)
            }
            Err(_) => {
                pass = false;
                QuadStatus::Degenerate("coincident cross-ratio arguments")
            }
        };
        quads.push(QuadResidual { quad, status });
    }
    HolomorphicReport { quads, max_residual, pass }
}

/// Christoffel dual of `g`: integrates `dh = H / (m dg)` from
/// `base_value` at `base`. The dual 1-form is checked for closure on
/// every quad (relative residual at most `tol`) before integration, so
/// the result is path-independent; the returned grid carries the
/// reciprocal labels `1/m`.
pub fn christoffel_dual(
    g: &HolomorphicGrid,
    mean_curvature: f64,
    base: (i64, i64),
    base_value: Complex64,
    tol: f64,
) -> Result<HolomorphicGrid> {
    if mean_curvature == 0.0 {
        return Err(Error::ZeroMeanCurvature);
    }
    let domain = g.domain();
    domain.vertex_index(base.0, base.1)?;

    let mut dual_diff = std::collections::HashMap::new();
    for edge in domain.edges() {
        let dg = g.edge_difference(edge)?;
        if dg.norm_sqr() == 0.0 {
            return Err(Error::ZeroEdgeDifference(edge));
        }
        let label = g.labels.label(edge)?;
        dual_diff.insert(edge, mean_curvature / (label * dg));
    }

    // Closure of dh around each quad, relative to the largest increment.
    for quad in domain.quads() {
        let [ij, jk, lk, il] = quad.boundary();
        let sum = dual_diff[&ij] + dual_diff[&jk] - dual_diff[&lk] - dual_diff[&il];
        let scale = [ij, jk, lk, il]
            .iter()
            .map(|e| dual_diff[e].norm())
            .fold(0.0_f64, f64::max);
        let residual = if scale > 0.0 { sum.norm() / scale } else { sum.norm() };
        if residual > tol {
            return Err(Error::NotClosed {
                m: quad.m,
                n: quad.n,
                residual,
                tol,
            });
        }
    }

    let values = integrate_complex(domain, base, base_value, |edge| dual_diff[&edge]);
    Ok(HolomorphicGrid {
        values,
        labels: g.labels.reciprocal(),
    })
}

/// Sweeps the grid from the base vertex: along the base row first, then
/// each column away from the base row. The base vertex keeps its value
/// bit-exactly and every other vertex is written exactly once.
fn integrate_complex(
    domain: GridDomain,
    base: (i64, i64),
    base_value: Complex64,
    incr: impl Fn(Edge) -> Complex64,
) -> VertexField<Complex64> {
    let mut field = VertexField::from_fn(domain, |_, _| Complex64::new(0.0, 0.0));
    let (bm, bn) = base;
    field.set(bm, bn, base_value).expect("base in domain");
    for m in bm..domain.m_max() {
        let v = field.get(m, bn).unwrap() + incr(Edge::Horizontal { m, n: bn });
        field.set(m + 1, bn, v).unwrap();
    }
    for m in (domain.m_min()..bm).rev() {
        let v = field.get(m + 1, bn).unwrap() - incr(Edge::Horizontal { m, n: bn });
        field.set(m, bn, v).unwrap();
    }
    for m in domain.m_min()..=domain.m_max() {
        for n in bn..domain.n_max() {
            let v = field.get(m, n).unwrap() + incr(Edge::Vertical { m, n });
            field.set(m, n + 1, v).unwrap();
        }
        for n in (domain.n_min()..bn).rev() {
            let v = field.get(m, n + 1).unwrap() - incr(Edge::Vertical { m, n });
            field.set(m, n, v).unwrap();
        }
    }
    field
}

/// Scaled identity grid `g(m,n) = A (m + i n) / M` with labels
/// `m_ij = M N / A` and `m_il = -M N / A`; its cross-ratios are -1.
/// The label constant `N` matches the normalization of the closed-form
/// channel surfaces.
pub fn identity_scaling(
    amplitude: f64,
    m_div: i64,
    n_div: i64,
    domain: GridDomain,
) -> Result<HolomorphicGrid> {
    if amplitude == 0.0 {
        return Err(Error::InvalidFamilyParams(
            "identity scaling amplitude must be nonzero".into(),
        ));
    }
    if m_div < 1 || n_div < 1 {
        return Err(Error::InvalidFamilyParams(format!(
            "identity scaling requires M, N >= 1, got M = {m_div}, N = {n_div}"
        )));
    }
    let label = (m_div * n_div) as f64 / amplitude;
    let labels = EdgeLabels::constant(domain, label, -label)?;
    let step = amplitude / m_div as f64;
    Ok(HolomorphicGrid::from_fn(labels, |m, n| {
        Complex64::new(m as f64 * step, n as f64 * step)
    }))
}

/// Growth rate of the discrete exponential: `acosh(2 - cos(pi/N))`.
/// This is the unique rate for which the cross-ratios are -1.
pub fn exponential_rate(n_div: i64) -> f64 {
    (2.0 - (std::f64::consts::PI / n_div as f64).cos()).acosh()
}

/// Discrete exponential grid
/// `g(m,n) = c exp(-alpha m + i (pi/N) n)` with
/// `alpha = acosh(2 - cos(pi/N))`, labels
/// `m_ij = -m_il = -(1/4c) csc^2(pi/2N)`, and cross-ratios -1. The grid
/// is 2N-periodic in the n-direction.
pub fn discrete_exponential(n_div: i64, c: f64, domain: GridDomain) -> Result<HolomorphicGrid> {
    if n_div < 2 {
        return Err(Error::InvalidFamilyParams(format!(
            "discrete exponential requires N >= 2, got N = {n_div}"
        )));
    }
    if c == 0.0 {
        return Err(Error::InvalidFamilyParams(
            "discrete exponential requires c != 0".into(),
        ));
    }
    let alpha = exponential_rate(n_div);
    let beta = std::f64::consts::PI / n_div as f64;
    let half = (0.5 * beta).sin();
    let label = -1.0 / (4.0 * c * half * half);
    let labels = EdgeLabels::constant(domain, label, -label)?;
    Ok(HolomorphicGrid::from_fn(labels, |m, n| {
        Complex64::from_polar((-alpha * m as f64).exp(), beta * n as f64) * c
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(re: f64, imag: f64) -> Complex64 {
        Complex64::new(re, imag)
    }

    #[test]
    fn cross_ratio_of_unit_square() {
        let cr = cross_ratio(im(0.0, 0.0), im(1.0, 0.0), im(1.0, 1.0), im(0.0, 1.0)).unwrap();
        assert!((cr - im(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cross_ratio_of_collinear_points() {
        let cr = cross_ratio(im(0.0, 0.0), im(1.0, 0.0), im(2.0, 0.0), im(3.0, 0.0)).unwrap();
        assert!((cr - im(-1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cross_ratio_rejects_coincident_points() {
        let r = cross_ratio(im(0.0, 0.0), im(1.0, 0.0), im(1.0, 0.0), im(0.0, 0.0));
        assert!(matches!(r, Err(Error::CrossRatioDegenerate)));
    }

    #[test]
    fn identity_scaling_values_and_cross_ratios() {
        let domain = GridDomain::new(0, 4, 0, 4).unwrap();
        let g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let z = g.value(2, 3).unwrap();
        assert!((z - im(1.0 / 3.0, 0.5)).norm() < 1e-15);

        let report = verify_holomorphic(&g, DEFAULT_HOLOMORPHIC_TOL);
        assert!(report.pass);
        assert!(report.max_residual < 1e-14);

        let g2 = identity_scaling(2.0, 1, 1, domain).unwrap();
        assert!((g2.value(1, 0).unwrap() - im(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn identity_scaling_labels() {
        let domain = GridDomain::new(0, 2, 0, 2).unwrap();
        let g = identity_scaling(1.0, 2, 2, domain).unwrap();
        let h_label = g.labels().label(Edge::Horizontal { m: 0, n: 0 }).unwrap();
        let v_label = g.labels().label(Edge::Vertical { m: 0, n: 0 }).unwrap();
        assert_eq!(h_label, 4.0);
        assert_eq!(v_label, -4.0);
    }

    #[test]
    fn exponential_rate_matches_its_defining_equation() {
        let alpha = exponential_rate(4);
        assert!((alpha - 0.747819401588806).abs() < 1e-12);
        assert!((alpha.cosh() - 1.2928932).abs() < 1e-6);
    }

    #[test]
    fn exponential_grid_is_holomorphic_and_periodic() {
        let domain = GridDomain::new(-3, 3, 0, 9).unwrap();
        let g = discrete_exponential(4, -0.5, domain).unwrap();
        let report = verify_holomorphic(&g, 1e-10);
        assert!(report.pass, "max residual {}", report.max_residual);

        let a = g.value(-2, 1).unwrap();
        let b = g.value(-2, 9).unwrap();
        assert!((a - b).norm() < 1e-12, "period defect {}", (a - b).norm());
    }

    #[test]
    fn perturbed_grid_fails_verification_on_adjacent_quads() {
        let domain = GridDomain::new(0, 3, 0, 3).unwrap();
        let mut g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let z = g.value(1, 1).unwrap();
        g.values.set(1, 1, z + im(0.1, 0.0)).unwrap();

        let report = verify_holomorphic(&g, DEFAULT_HOLOMORPHIC_TOL);
        assert!(!report.pass);
        for qr in &report.quads {
            let touches = (qr.quad.m..=qr.quad.m + 1).contains(&1)
                && (qr.quad.n..=qr.quad.n + 1).contains(&1);
            match qr.status {
                QuadStatus::Residual(r) => assert_eq!(touches, r > 1e-9, "quad {:?}", qr.quad),
                QuadStatus::Degenerate(_) => panic!("unexpected degenerate quad"),
            }
        }
    }

    #[test]
    fn channel_dual_has_constant_horizontal_step() {
        let domain = GridDomain::new(0, 5, 0, 5).unwrap();
        let g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let h = christoffel_dual(&g, 1.0, (0, 0), im(0.0, 0.0), DEFAULT_HOLOMORPHIC_TOL).unwrap();
        for edge in domain.h_edges() {
            let dh = h.edge_difference(edge).unwrap();
            assert!((dh - im(0.5, 0.0)).norm() < 1e-14);
        }
        for edge in domain.v_edges() {
            let dh = h.edge_difference(edge).unwrap();
            assert!((dh - im(0.0, 0.5)).norm() < 1e-14);
        }
        // The dual carries the reciprocal labels and verifies against them.
        let h_label = h.labels().label(Edge::Horizontal { m: 0, n: 0 }).unwrap();
        assert_eq!(h_label, 1.0 / 12.0);
        assert!(verify_holomorphic(&h, DEFAULT_HOLOMORPHIC_TOL).pass);
    }

    #[test]
    fn dual_of_dual_recovers_the_grid() {
        let domain = GridDomain::new(-2, 3, -1, 4).unwrap();
        let g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let base_value = im(0.25, -0.125);
        let h = christoffel_dual(&g, 1.0, (0, 0), im(0.0, 0.0), DEFAULT_HOLOMORPHIC_TOL).unwrap();
        // The defining relation dh = H/(m dg) inverts to dg = H/(m dh)
        // with the same labels m, so the second dual runs with them.
        let h = h.with_labels(g.labels().clone()).unwrap();
        let g2 =
            christoffel_dual(&h, 1.0, (0, 0), base_value, DEFAULT_HOLOMORPHIC_TOL).unwrap();
        let shift = g2.value(0, 0).unwrap() - g.value(0, 0).unwrap();
        for (m, n) in domain.vertices() {
            let expected = g.value(m, n).unwrap() + shift;
            let got = g2.value(m, n).unwrap();
            assert!((got - expected).norm() < 1e-13);
        }
    }

    #[test]
    fn exponential_dual_matches_reflected_exponential() {
        let domain = GridDomain::new(-4, 4, 0, 8).unwrap();
        let mean_curvature = 1.0;
        let c = -0.5;
        let n_div = 4;
        let g = discrete_exponential(n_div, c, domain).unwrap();

        // Reference value of the reflected exponential at the base.
        let alpha = exponential_rate(n_div);
        let beta = std::f64::consts::PI / n_div as f64;
        let closed = |m: i64, n: i64| {
            Complex64::from_polar(
                mean_curvature * (alpha * m as f64).exp(),
                -beta * n as f64,
            )
        };
        let h = christoffel_dual(&g, mean_curvature, (-4, 0), closed(-4, 0), 1e-9).unwrap();
        for (m, n) in domain.vertices() {
            let expected = closed(m, n);
            let got = h.value(m, n).unwrap();
            assert!(
                (got - expected).norm() < 1e-10 * expected.norm().max(1.0),
                "dual mismatch at ({m}, {n}): {got} vs {expected}"
            );
        }
    }

    #[test]
    fn dual_rejects_constant_grid() {
        let domain = GridDomain::new(0, 2, 0, 2).unwrap();
        let labels = EdgeLabels::constant(domain, 1.0, -1.0).unwrap();
        let g = HolomorphicGrid::from_fn(labels, |_, _| im(1.0, 1.0));
        let r = christoffel_dual(&g, 1.0, (0, 0), im(0.0, 0.0), 1e-9);
        assert!(matches!(r, Err(Error::ZeroEdgeDifference(_))));
    }

    #[test]
    fn dual_rejects_non_holomorphic_grid() {
        let domain = GridDomain::new(0, 3, 0, 3).unwrap();
        let mut g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let z = g.value(1, 1).unwrap();
        g.values.set(1, 1, z + im(0.05, 0.0)).unwrap();
        let r = christoffel_dual(&g, 1.0, (0, 0), im(0.0, 0.0), 1e-9);
        assert!(matches!(r, Err(Error::NotClosed { .. })));
    }
}
