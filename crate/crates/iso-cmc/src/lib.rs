//! Discrete isothermic constant mean curvature surfaces in isotropic
//! 3-space.
//!
//! Isotropic 3-space is modeled as the hyperplane `<X, P> = 0` of
//! Minkowski 4-space; its spheres are rotational paraboloid graphs with
//! mean curvature `1/r`. On rectangular quad grids the crate builds:
//!
//! * discrete holomorphic functions with strip edge labels and their
//!   Christoffel duals ([`holomorphic`]),
//! * Weierstrass 1-forms whose integrals are zero- and constant-mean-
//!   curvature circular nets ([`weierstrass`]),
//! * discrete lightlike Gauss maps by propagation or in closed form,
//!   with curvature via mixed areas ([`curvature`]),
//! * closed-form example families (channel surfaces, cylinders,
//!   Delaunay-type surfaces of revolution) and parallel cmc surfaces
//!   ([`surfaces`]),
//! * OBJ export, curvature tables, verification reports, and a job
//!   runner behind the `iso-cmc` binary ([`io`], [`cli`]).
//!
//! The closed-form families double as oracles: integrating their
//! Weierstrass data reproduces them to near machine precision, and
//! every generated net passes the circularity, Gauss map, and constant
//! curvature checks. The `examples/` directory has one runnable program
//! per capability.

pub mod cli;
pub mod curvature;
pub mod error;
pub mod grid;
pub mod holomorphic;
pub mod io;
pub mod minkowski;
pub mod surfaces;
pub mod weierstrass;

pub use num_complex::Complex64;

pub use curvature::{
    beta_check, circularity_check, gauss_closed_form, lightcone_from_phi,
    lightcone_from_planar, lightcone_point, mean_curvature_quad, mixed_area_bivector,
    mixed_area_planar, propagate_around_quad, propagate_gauss, LightconeNet, QuadCurvature,
};
pub use error::{Error, Result};
pub use grid::{Edge, EdgeLabels, GridDomain, Quad};
pub use holomorphic::{
    christoffel_dual, cross_ratio, discrete_exponential, identity_scaling,
    verify_holomorphic, HolomorphicGrid,
};
pub use minkowski::{Bivector4, IsoPoint, IsoSphere, Vec4};
pub use surfaces::{
    cmc_cylinder, delaunay, doubly_channel, parallel_surface, ExampleSpec, FamilyParams,
};
pub use weierstrass::{
    cmc_oneform, sphere_term, zmc_oneform, IsoOneForm, SurfaceNet,
};
