//! Rectangular integer grid domains with deterministic enumeration of
//! vertices, oriented edges, and elementary quadrilaterals, plus
//! strip-stored edge labels.
//!
//! Every elementary quadrilateral is traversed in the fixed corner order
//! `i = (m,n)`, `j = (m+1,n)`, `k = (m+1,n+1)`, `l = (m,n+1)`.

use crate::error::{Error, Result};

/// Inclusive rectangle `[m_min, m_max] x [n_min, n_max]` in `Z^2`.
///
/// Single-row and single-column strips are allowed; they have edges but
/// no quads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridDomain {
    m_min: i64,
    m_max: i64,
    n_min: i64,
    n_max: i64,
}

impl GridDomain {
    pub fn new(m_min: i64, m_max: i64, n_min: i64, n_max: i64) -> Result<Self> {
        if m_max < m_min || n_max < n_min {
            return Err(Error::DegenerateDomain(format!(
                "empty range [{m_min}, {m_max}] x [{n_min}, {n_max}]"
            )));
        }
        Ok(Self { m_min, m_max, n_min, n_max })
    }

    pub fn m_min(&self) -> i64 {
        self.m_min
    }

    pub fn m_max(&self) -> i64 {
        self.m_max
    }

    pub fn n_min(&self) -> i64 {
        self.n_min
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    /// Vertex count in the m-direction.
    pub fn width(&self) -> usize {
        (self.m_max - self.m_min + 1) as usize
    }

    /// Vertex count in the n-direction.
    pub fn height(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.width() * self.height()
    }

    pub fn h_edge_count(&self) -> usize {
        (self.width() - 1) * self.height()
    }

    pub fn v_edge_count(&self) -> usize {
        self.width() * (self.height() - 1)
    }

    pub fn quad_count(&self) -> usize {
        (self.width() - 1) * (self.height() - 1)
    }

    pub fn contains_vertex(&self, m: i64, n: i64) -> bool {
        (self.m_min..=self.m_max).contains(&m) && (self.n_min..=self.n_max).contains(&n)
    }

    pub fn contains_edge(&self, edge: Edge) -> bool {
        let ((m0, n0), (m1, n1)) = edge.endpoints();
        self.contains_vertex(m0, n0) && self.contains_vertex(m1, n1)
    }

    pub fn contains_quad(&self, quad: Quad) -> bool {
        self.contains_vertex(quad.m, quad.n) && self.contains_vertex(quad.m + 1, quad.n + 1)
    }

    /// Row-major index of a vertex (n varies slowest).
    pub fn vertex_index(&self, m: i64, n: i64) -> Result<usize> {
        if !self.contains_vertex(m, n) {
            return Err(Error::VertexOutOfDomain(m, n));
        }
        Ok((n - self.n_min) as usize * self.width() + (m - self.m_min) as usize)
    }

    /// Row-major vertices: n from `n_min` to `n_max`, m inner.
    pub fn vertices(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.n_min..=self.n_max)
            .flat_map(move |n| (self.m_min..=self.m_max).map(move |m| (m, n)))
    }

    pub fn h_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (self.n_min..=self.n_max)
            .flat_map(move |n| (self.m_min..self.m_max).map(move |m| Edge::Horizontal { m, n }))
    }

    pub fn v_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (self.n_min..self.n_max)
            .flat_map(move |n| (self.m_min..=self.m_max).map(move |m| Edge::Vertical { m, n }))
    }

    /// All oriented edges, horizontal strips first.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.h_edges().chain(self.v_edges())
    }

    /// Row-major elementary quadrilaterals keyed by lower-left corner.
    pub fn quads(&self) -> impl Iterator<Item = Quad> + '_ {
        (self.n_min..self.n_max)
            .flat_map(move |n| (self.m_min..self.m_max).map(move |m| Quad { m, n }))
    }
}

/// Oriented grid edge; horizontal edges run `(m,n) -> (m+1,n)` and
/// vertical edges `(m,n) -> (m,n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Edge {
    Horizontal { m: i64, n: i64 },
    Vertical { m: i64, n: i64 },
}

impl Edge {
    pub fn endpoints(self) -> ((i64, i64), (i64, i64)) {
        match self {
            Edge::Horizontal { m, n } => ((m, n), (m + 1, n)),
            Edge::Vertical { m, n } => ((m, n), (m, n + 1)),
        }
    }
}

/// Elementary quadrilateral keyed by its lower-left corner `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quad {
    pub m: i64,
    pub n: i64,
}

impl Quad {
    /// Corners in the fixed order `i, j, k, l`.
    pub fn corners(self) -> [(i64, i64); 4] {
        [
            (self.m, self.n),
            (self.m + 1, self.n),
            (self.m + 1, self.n + 1),
            (self.m, self.n + 1),
        ]
    }

    /// The four boundary edges in the order `ij`, `jk`, `lk`, `il`
    /// (all in their stored forward orientation).
    pub fn boundary(self) -> [Edge; 4] {
        [
            Edge::Horizontal { m: self.m, n: self.n },
            Edge::Vertical { m: self.m + 1, n: self.n },
            Edge::Horizontal { m: self.m, n: self.n + 1 },
            Edge::Vertical { m: self.m, n: self.n },
        ]
    }
}

/// Real nonzero edge labels stored per strip: every horizontal edge in
/// column `m` carries `h[m]`, every vertical edge in row `n` carries
/// `v[n]`. Opposite edges of a quad therefore carry equal labels by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLabels {
    domain: GridDomain,
    h: Vec<f64>,
    v: Vec<f64>,
}

impl EdgeLabels {
    pub fn new(domain: GridDomain, h: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        let (eh, ev) = (domain.width() - 1, domain.height() - 1);
        if h.len() != eh || v.len() != ev {
            return Err(Error::LabelStripLength {
                expected: eh,
                expected_v: ev,
                got: h.len(),
                got_v: v.len(),
            });
        }
        if h.iter().chain(v.iter()).any(|&x| x == 0.0 || !x.is_finite()) {
            return Err(Error::ZeroEdgeLabel);
        }
        Ok(Self { domain, h, v })
    }

    /// Constant label on all horizontal edges and another on all
    /// vertical edges.
    pub fn constant(domain: GridDomain, h: f64, v: f64) -> Result<Self> {
        Self::new(
            domain,
            vec![h; domain.width() - 1],
            vec![v; domain.height() - 1],
        )
    }

    pub fn domain(&self) -> GridDomain {
        self.domain
    }

    pub fn label(&self, edge: Edge) -> Result<f64> {
        if !self.domain.contains_edge(edge) {
            return Err(Error::EdgeOutOfDomain(edge));
        }
        Ok(match edge {
            Edge::Horizontal { m, .. } => self.h[(m - self.domain.m_min) as usize],
            Edge::Vertical { n, .. } => self.v[(n - self.domain.n_min) as usize],
        })
    }

    /// Labels `1/m` on every strip.
    pub fn reciprocal(&self) -> EdgeLabels {
        EdgeLabels {
            domain: self.domain,
            h: self.h.iter().map(|x| 1.0 / x).collect(),
            v: self.v.iter().map(|x| 1.0 / x).collect(),
        }
    }

    /// Every label multiplied by a nonzero constant.
    pub fn scaled(&self, factor: f64) -> Result<EdgeLabels> {
        if factor == 0.0 || !factor.is_finite() {
            return Err(Error::ZeroEdgeLabel);
        }
        Ok(EdgeLabels {
            domain: self.domain,
            h: self.h.iter().map(|x| factor * x).collect(),
            v: self.v.iter().map(|x| factor * x).collect(),
        })
    }

    /// Cross-ratio target `m_il / m_ij` of a quad: vertical label over
    /// horizontal label.
    pub fn cross_ratio_target(&self, quad: Quad) -> Result<f64> {
        let h = self.label(Edge::Horizontal { m: quad.m, n: quad.n })?;
        let v = self.label(Edge::Vertical { m: quad.m, n: quad.n })?;
        Ok(v / h)
    }
}

/// Per-vertex storage over a [`GridDomain`] in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexField<T> {
    domain: GridDomain,
    values: Vec<T>,
}

impl<T: Copy> VertexField<T> {
    pub fn from_fn(domain: GridDomain, f: impl FnMut(i64, i64) -> T) -> Self {
        let mut f = f;
        let values = domain.vertices().map(|(m, n)| f(m, n)).collect();
        Self { domain, values }
    }

    pub fn from_values(domain: GridDomain, values: Vec<T>) -> Result<Self> {
        if values.len() != domain.vertex_count() {
            return Err(Error::DegenerateDomain(format!(
                "value count {} does not match domain vertex count {}",
                values.len(),
                domain.vertex_count()
            )));
        }
        Ok(Self { domain, values })
    }

    pub fn domain(&self) -> GridDomain {
        self.domain
    }

    pub fn get(&self, m: i64, n: i64) -> Result<T> {
        Ok(self.values[self.domain.vertex_index(m, n)?])
    }

    pub fn set(&mut self, m: i64, n: i64, value: T) -> Result<()> {
        let idx = self.domain.vertex_index(m, n)?;
        self.values[idx] = value;
        Ok(())
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> VertexField<U> {
        VertexField {
            domain: self.domain,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_small_grids() {
        let d = GridDomain::new(0, 1, 0, 1).unwrap();
        assert_eq!(
            (d.vertex_count(), d.h_edge_count(), d.v_edge_count(), d.quad_count()),
            (4, 2, 2, 1)
        );

        let d = GridDomain::new(0, 2, 0, 1).unwrap();
        assert_eq!(
            (d.vertex_count(), d.h_edge_count(), d.v_edge_count(), d.quad_count()),
            (6, 4, 3, 2)
        );
    }

    #[test]
    fn strip_has_edges_but_no_quads() {
        let d = GridDomain::new(0, 0, 0, 4).unwrap();
        assert_eq!(d.quad_count(), 0);
        assert_eq!(d.quads().count(), 0);
        assert_eq!(d.h_edge_count(), 0);
        assert_eq!(d.v_edge_count(), 4);
    }

    #[test]
    fn empty_range_is_rejected() {
        assert!(GridDomain::new(3, 2, 0, 1).is_err());
        assert!(GridDomain::new(0, 1, 5, 1).is_err());
    }

    #[test]
    fn enumeration_is_row_major_and_stable() {
        let d = GridDomain::new(-1, 1, 2, 3).unwrap();
        let first: Vec<_> = d.vertices().collect();
        let second: Vec<_> = d.vertices().collect();
        assert_eq!(first, second);
        assert_eq!(first[0], (-1, 2));
        assert_eq!(first[1], (0, 2));
        assert_eq!(first[3], (-1, 3));
        assert_eq!(d.vertex_index(0, 3).unwrap(), 4);

        let quads: Vec<_> = d.quads().collect();
        assert_eq!(quads, vec![Quad { m: -1, n: 2 }, Quad { m: 0, n: 2 }]);
    }

    #[test]
    fn strip_label_lookup() {
        let d = GridDomain::new(0, 4, 0, 9).unwrap();
        let mut h = vec![1.0; 4];
        h[2] = 5.0;
        let labels = EdgeLabels::new(d, h, vec![-1.0; 9]).unwrap();
        assert_eq!(labels.label(Edge::Horizontal { m: 2, n: 7 }).unwrap(), 5.0);
        assert_eq!(labels.label(Edge::Vertical { m: 4, n: 3 }).unwrap(), -1.0);
        assert!(labels.label(Edge::Horizontal { m: 4, n: 0 }).is_err());
    }

    #[test]
    fn opposite_edges_share_labels() {
        let d = GridDomain::new(0, 3, 0, 3).unwrap();
        let labels = EdgeLabels::new(
            d,
            vec![1.0, 2.0, 3.0],
            vec![-1.0, -2.0, -3.0],
        )
        .unwrap();
        for q in d.quads() {
            let [ij, jk, lk, il] = q.boundary();
            assert_eq!(labels.label(ij).unwrap(), labels.label(lk).unwrap());
            assert_eq!(labels.label(il).unwrap(), labels.label(jk).unwrap());
        }
    }

    #[test]
    fn zero_label_is_rejected() {
        let d = GridDomain::new(0, 1, 0, 1).unwrap();
        assert!(matches!(
            EdgeLabels::new(d, vec![0.0], vec![1.0]),
            Err(Error::ZeroEdgeLabel)
        ));
    }

    #[test]
    fn constant_labels_have_opposite_ratio_target() {
        let d = GridDomain::new(0, 2, 0, 2).unwrap();
        let labels = EdgeLabels::constant(d, 2.5, -2.5).unwrap();
        for q in d.quads() {
            assert_eq!(labels.cross_ratio_target(q).unwrap(), -1.0);
        }
    }
}
