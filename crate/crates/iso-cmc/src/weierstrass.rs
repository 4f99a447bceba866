//! Discrete Weierstrass 1-forms and their integration into quad nets in
//! isotropic 3-space.
//!
//! The zero-mean-curvature form of a discrete holomorphic `g` is
//!
//! ```text
//! dX = (1/m) Re((g_e, 1, -i) / dg)          (per edge, component order l, x, y)
//! ```
//!
//! and the constant-mean-curvature form of a Christoffel pair `(g, h)`
//! with `dh = H / (m dg)` is
//!
//! ```text
//! dY = Re((conj(h_e) + g_e, 1, -i) w),      w = dh / H.
//! ```
//!
//! `g_e`, `h_e` are edge midpoints. Increments are stored forward
//! (value at the head minus value at the tail of the oriented edge);
//! both formulas are odd in the edge difference, so they hold verbatim
//! in this orientation, and integrating them from an anchored base
//! vertex reproduces the closed-form surfaces.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Edge, GridDomain, Quad, VertexField};
use crate::holomorphic::HolomorphicGrid;
use crate::minkowski::{IsoPoint, Vec4};

/// Default relative tolerance for quad closure of a 1-form.
pub const DEFAULT_CLOSURE_TOL: f64 = 1e-9;

/// Default relative tolerance for the Christoffel-pair check
/// `dh m dg = H` inside [`cmc_oneform`].
pub const DEFAULT_DUAL_TOL: f64 = 1e-9;

/// Default absolute tolerance on planar-part agreement in
/// [`SurfaceNet::graph_sum`].
pub const DEFAULT_PLANAR_TOL: f64 = 1e-10;

/// Quad net in isotropic 3-space, one [`IsoPoint`] per grid vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceNet {
    points: VertexField<IsoPoint>,
}

impl SurfaceNet {
    pub fn from_fn(domain: GridDomain, f: impl FnMut(i64, i64) -> IsoPoint) -> Self {
        Self { points: VertexField::from_fn(domain, f) }
    }

    pub fn from_points(domain: GridDomain, points: Vec<IsoPoint>) -> Result<Self> {
        Ok(Self { points: VertexField::from_values(domain, points)? })
    }

    pub fn domain(&self) -> GridDomain {
        self.points.domain()
    }

    pub fn point(&self, m: i64, n: i64) -> Result<IsoPoint> {
        self.points.get(m, n)
    }

    /// Replaces a single vertex; used to inject defects in checks.
    pub fn set_point(&mut self, m: i64, n: i64, p: IsoPoint) -> Result<()> {
        self.points.set(m, n, p)
    }

    pub fn embedded(&self, m: i64, n: i64) -> Result<Vec4> {
        Ok(self.points.get(m, n)?.embed())
    }

    /// Planar part of a vertex as a complex number.
    pub fn planar(&self, m: i64, n: i64) -> Result<Complex64> {
        Ok(self.points.get(m, n)?.planar())
    }

    /// Forward edge increment `point(head) - point(tail)`.
    pub fn edge_increment(&self, edge: Edge) -> Result<IsoPoint> {
        let ((m0, n0), (m1, n1)) = edge.endpoints();
        Ok(self.points.get(m1, n1)? - self.points.get(m0, n0)?)
    }

    pub fn quad_points(&self, quad: Quad) -> Result<[IsoPoint; 4]> {
        let [i, j, k, l] = quad.corners();
        Ok([
            self.points.get(i.0, i.1)?,
            self.points.get(j.0, j.1)?,
            self.points.get(k.0, k.1)?,
            self.points.get(l.0, l.1)?,
        ])
    }

    pub fn quad_embedded(&self, quad: Quad) -> Result<[Vec4; 4]> {
        Ok(self.quad_points(quad)?.map(IsoPoint::embed))
    }

    pub fn quad_planar(&self, quad: Quad) -> Result<[Complex64; 4]> {
        Ok(self.quad_points(quad)?.map(IsoPoint::planar))
    }

    /// Sum as graphs: planar parts must agree vertex-wise within `tol`
    /// (absolute), heights add, and the planar part of `self` is kept.
    pub fn graph_sum(&self, other: &SurfaceNet, tol: f64) -> Result<SurfaceNet> {
        if self.domain() != other.domain() {
            return Err(Error::DomainMismatch);
        }
        for (m, n) in self.domain().vertices() {
            let a = self.points.get(m, n)?;
            let b = other.points.get(m, n)?;
            let deviation = (a.planar() - b.planar()).norm();
            if deviation > tol {
                return Err(Error::PlanarPartMismatch { m, n, deviation, tol });
            }
        }
        Ok(SurfaceNet::from_fn(self.domain(), |m, n| {
            let a = self.points.get(m, n).unwrap();
            let b = other.points.get(m, n).unwrap();
            IsoPoint::new(a.l + b.l, a.x, a.y)
        }))
    }

    /// Every point shifted by a constant offset.
    pub fn translated(&self, offset: IsoPoint) -> SurfaceNet {
        SurfaceNet { points: self.points.map(|p| p + offset) }
    }

    /// Points of the grid row `n = const`, ordered by `m`.
    pub fn row_points(&self, n: i64) -> Result<Vec<IsoPoint>> {
        (self.domain().m_min()..=self.domain().m_max())
            .map(|m| self.points.get(m, n))
            .collect()
    }

    /// Points of the grid column `m = const`, ordered by `n`.
    pub fn column_points(&self, m: i64) -> Result<Vec<IsoPoint>> {
        (self.domain().n_min()..=self.domain().n_max())
            .map(|n| self.points.get(m, n))
            .collect()
    }
}

/// Isotropic-point-valued discrete 1-form: one forward increment per
/// oriented edge of the domain.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoOneForm {
    domain: GridDomain,
    h: Vec<IsoPoint>,
    v: Vec<IsoPoint>,
}

impl IsoOneForm {
    pub fn try_from_fn(
        domain: GridDomain,
        mut f: impl FnMut(Edge) -> Result<IsoPoint>,
    ) -> Result<Self> {
        let h = domain.h_edges().map(&mut f).collect::<Result<Vec<_>>>()?;
        let v = domain.v_edges().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self { domain, h, v })
    }

    pub fn from_fn(domain: GridDomain, mut f: impl FnMut(Edge) -> IsoPoint) -> Self {
        Self::try_from_fn(domain, |e| Ok(f(e))).expect("infallible")
    }

    pub fn domain(&self) -> GridDomain {
        self.domain
    }

    fn index(&self, edge: Edge) -> Result<(bool, usize)> {
        if !self.domain.contains_edge(edge) {
            return Err(Error::EdgeOutOfDomain(edge));
        }
        let width = self.domain.width();
        Ok(match edge {
            Edge::Horizontal { m, n } => (
                true,
                (n - self.domain.n_min()) as usize * (width - 1)
                    + (m - self.domain.m_min()) as usize,
            ),
            Edge::Vertical { m, n } => (
                false,
                (n - self.domain.n_min()) as usize * width
                    + (m - self.domain.m_min()) as usize,
            ),
        })
    }

    pub fn increment(&self, edge: Edge) -> Result<IsoPoint> {
        let (horizontal, idx) = self.index(edge)?;
        Ok(if horizontal { self.h[idx] } else { self.v[idx] })
    }

    /// Overwrites one increment; used to inject closure defects.
    pub fn set_increment(&mut self, edge: Edge, value: IsoPoint) -> Result<()> {
        let (horizontal, idx) = self.index(edge)?;
        if horizontal {
            self.h[idx] = value;
        } else {
            self.v[idx] = value;
        }
        Ok(())
    }

    /// Boundary sum of a quad divided by its largest increment norm
    /// (plain norm when all increments vanish).
    pub fn closure_residual(&self, quad: Quad) -> Result<f64> {
        let [ij, jk, lk, il] = quad.boundary();
        let sum = self.increment(ij)? + self.increment(jk)?
            - self.increment(lk)?
            - self.increment(il)?;
        let scale = [ij, jk, lk, il]
            .iter()
            .map(|&e| self.increment(e).unwrap().euclidean_norm())
            .fold(0.0_f64, f64::max);
        let norm = sum.euclidean_norm();
        Ok(if scale > 0.0 { norm / scale } else { norm })
    }

    /// Largest closure residual and the quad attaining it.
    pub fn max_closure_residual(&self) -> (f64, Option<Quad>) {
        let mut worst = (0.0_f64, None);
        for quad in self.domain.quads() {
            let r = self.closure_residual(quad).expect("quad in domain");
            if r > worst.0 || worst.1.is_none() {
                worst = (r, Some(quad));
            }
        }
        worst
    }

    /// Integrates the form into a net anchored at `base_point`. Fails
    /// on the worst quad if any closure residual exceeds `tol`
    /// (relative); afterwards the sweep order (base row first, then the
    /// columns) is immaterial and the base vertex keeps its value
    /// bit-exactly.
    pub fn integrate(
        &self,
        base: (i64, i64),
        base_point: IsoPoint,
        tol: f64,
    ) -> Result<SurfaceNet> {
        self.domain.vertex_index(base.0, base.1)?;
        for quad in self.domain.quads() {
            let residual = self.closure_residual(quad)?;
            if residual > tol {
                let (worst, at) = self.max_closure_residual();
                let at = at.unwrap_or(quad);
                return Err(Error::NotClosed { m: at.m, n: at.n, residual: worst, tol });
            }
        }

        let d = self.domain;
        let (bm, bn) = base;
        let mut points = VertexField::from_fn(d, |_, _| IsoPoint::ORIGIN);
        points.set(bm, bn, base_point)?;
        for m in bm..d.m_max() {
            let p = points.get(m, bn)? + self.increment(Edge::Horizontal { m, n: bn })?;
            points.set(m + 1, bn, p)?;
        }
        for m in (d.m_min()..bm).rev() {
            let p = points.get(m + 1, bn)? - self.increment(Edge::Horizontal { m, n: bn })?;
            points.set(m, bn, p)?;
        }
        for m in d.m_min()..=d.m_max() {
            for n in bn..d.n_max() {
                let p = points.get(m, n)? + self.increment(Edge::Vertical { m, n })?;
                points.set(m, n + 1, p)?;
            }
            for n in (d.n_min()..bn).rev() {
                let p = points.get(m, n + 1)? - self.increment(Edge::Vertical { m, n })?;
                points.set(m, n, p)?;
            }
        }
        Ok(SurfaceNet { points })
    }
}

/// Zero-mean-curvature Weierstrass form of a discrete holomorphic `g`.
/// Fails on the first edge with a vanishing difference.
pub fn zmc_oneform(g: &HolomorphicGrid) -> Result<IsoOneForm> {
    IsoOneForm::try_from_fn(g.domain(), |edge| {
        let dg = g.edge_difference(edge)?;
        if dg.norm_sqr() == 0.0 {
            return Err(Error::ZeroEdgeDifference(edge));
        }
        let label = g.labels().label(edge)?;
        let mid = g.edge_midpoint(edge)?;
        let inv = dg.inv();
        Ok(IsoPoint::new(
            (mid * inv).re / label,
            inv.re / label,
            inv.im / label,
        ))
    })
}

/// Constant-mean-curvature Weierstrass form of a Christoffel pair.
/// Verifies `dh m dg = H` on every edge within `tol * |H|` before
/// evaluating.
pub fn cmc_oneform(
    g: &HolomorphicGrid,
    h: &HolomorphicGrid,
    mean_curvature: f64,
    tol: f64,
) -> Result<IsoOneForm> {
    if mean_curvature == 0.0 {
        return Err(Error::ZeroMeanCurvature);
    }
    if g.domain() != h.domain() {
        return Err(Error::DomainMismatch);
    }
    IsoOneForm::try_from_fn(g.domain(), |edge| {
        let dg = g.edge_difference(edge)?;
        if dg.norm_sqr() == 0.0 {
            return Err(Error::ZeroEdgeDifference(edge));
        }
        let dh = h.edge_difference(edge)?;
        let label = g.labels().label(edge)?;
        let residual = (dh * dg * label - mean_curvature).norm();
        if residual > tol * mean_curvature.abs() {
            return Err(Error::DualMismatch { edge, residual, tol });
        }
        let omega = dh / mean_curvature;
        let phi = h.edge_midpoint(edge)?.conj() + g.edge_midpoint(edge)?;
        Ok(IsoPoint::new((phi * omega).re, omega.re, omega.im))
    })
}

/// Pointwise sphere term of the cmc construction: the net
/// `(|h|^2 / 2H, Re h / H, Im h / H)`, which lies on the origin-centered
/// sphere `l = (H/2)(x^2 + y^2)` of mean curvature `H`.
pub fn sphere_term(h: &HolomorphicGrid, mean_curvature: f64) -> Result<SurfaceNet> {
    if mean_curvature == 0.0 {
        return Err(Error::ZeroMeanCurvature);
    }
    Ok(SurfaceNet::from_fn(h.domain(), |m, n| {
        let z = h.value(m, n).expect("vertex in domain");
        let x = z.re / mean_curvature;
        let y = z.im / mean_curvature;
        IsoPoint::new(0.5 * mean_curvature * (x * x + y * y), x, y)
    }))
}
