//! Crate-wide error type.

use crate::grid::{Edge, Quad};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("point is not isotropic: <X, P> = {form_value:e} exceeds tolerance {tol:e}")]
    NotIsotropic { form_value: f64, tol: f64 },

    #[error("sphere radius must be nonzero")]
    ZeroRadius,

    #[error("grid domain is degenerate: {0}")]
    DegenerateDomain(String),

    #[error("edge labels must be nonzero reals")]
    ZeroEdgeLabel,

    #[error("edge label strips have wrong length: expected {expected} horizontal / {expected_v} vertical, got {got} / {got_v}")]
    LabelStripLength {
        expected: usize,
        expected_v: usize,
        got: usize,
        got_v: usize,
    },

    #[error("{0:?} lies outside the grid domain")]
    EdgeOutOfDomain(Edge),

    #[error("vertex ({0}, {1}) lies outside the grid domain")]
    VertexOutOfDomain(i64, i64),

    #[error("grid domains do not match")]
    DomainMismatch,

    #[error("cross-ratio is undefined: coincident points in a denominator")]
    CrossRatioDegenerate,

    #[error("zero edge difference on {0:?}")]
    ZeroEdgeDifference(Edge),

    #[error("grid fails the holomorphicity check: max residual {max_residual:e} exceeds tolerance {tol:e}")]
    NotHolomorphic { max_residual: f64, tol: f64 },

    #[error("1-form is not closed on quad ({m}, {n}): residual {residual:e} exceeds tolerance {tol:e}")]
    NotClosed {
        m: i64,
        n: i64,
        residual: f64,
        tol: f64,
    },

    #[error("grids are not a Christoffel pair on {edge:?}: |dh m dg - H| = {residual:e} exceeds tolerance {tol:e}")]
    DualMismatch {
        edge: Edge,
        residual: f64,
        tol: f64,
    },

    #[error("mean curvature must be nonzero")]
    ZeroMeanCurvature,

    #[error("planar parts differ at vertex ({m}, {n}) by {deviation:e} (tolerance {tol:e}); nets cannot be added as graphs")]
    PlanarPartMismatch {
        m: i64,
        n: i64,
        deviation: f64,
        tol: f64,
    },

    #[error("seed is not on the lightcone slice: <N,N> = {form_nn:e}, <N,P> = {form_np}")]
    SeedOffLightcone { form_nn: f64, form_np: f64 },

    #[error("degenerate edge {0:?}: the squared edge length vanishes")]
    NullEdge(Edge),

    #[error("Gauss map propagation around quad ({m}, {n}) does not close: residual {residual:e} exceeds tolerance {tol:e}; the net is not circular there")]
    GaussLoopInconsistent {
        m: i64,
        n: i64,
        residual: f64,
        tol: f64,
    },

    #[error("propagation is degenerate on {edge:?}: |alpha| = {alpha:e} below {tol:e}")]
    DegeneratePropagation { edge: Edge, alpha: f64, tol: f64 },

    #[error("lightcone field is invalid at vertex ({m}, {n}): <N,N> = {form_nn:e}, <N,P> = {form_np}")]
    NotLightcone { m: i64, n: i64, form_nn: f64, form_np: f64 },

    #[error("quads are not edge-parallel on corner edge {corner}: residual {residual:e} exceeds tolerance {tol:e}")]
    NotEdgeParallel {
        corner: usize,
        residual: f64,
        tol: f64,
    },

    #[error("quad ({0:?}) is degenerate: the planar self mixed area vanishes")]
    DegenerateQuadArea(Quad),

    #[error("invalid surface parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("failed to read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed mesh file {path}: {message}")]
    MalformedMesh { path: String, message: String },
}
