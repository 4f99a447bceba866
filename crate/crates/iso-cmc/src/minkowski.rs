//! Linear algebra of Minkowski 4-space and the lightcone model of
//! isotropic 3-space.
//!
//! Coordinates are ordered `(t, x, y, z)` and the bilinear form has
//! signature `(- + + +)`, so
//!
//! ```text
//! <a, b> = -a.t b.t + a.x b.x + a.y b.y + a.z b.z.
//! ```
//!
//! Two null vectors are distinguished: [`Vec4::P`] `= (1,0,0,1)` and
//! [`Vec4::PTILDE`] `= (-1/2,0,0,1/2)`, normalized so that
//! `<P, PTILDE> = 1`. Isotropic 3-space is the hyperplane `<X, P> = 0`;
//! it carries the chart `(l, x, y) -> (l, x, y, l)` with `l` the
//! "vertical" (unmeasured) coordinate.

use crate::error::{Error, Result};

/// Default absolute tolerance for membership tests; quantities in this
/// crate are O(1) at desk scale.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Point of Minkowski 4-space `R^{3,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec4 {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec4 {
    pub const ZERO: Vec4 = Vec4::new(0.0, 0.0, 0.0, 0.0);

    /// Distinguished null vector spanning the degenerate direction of
    /// isotropic space.
    pub const P: Vec4 = Vec4::new(1.0, 0.0, 0.0, 1.0);

    /// Complementary null vector with `<P, PTILDE> = 1`.
    pub const PTILDE: Vec4 = Vec4::new(-0.5, 0.0, 0.0, 0.5);

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    /// Bilinear form of signature `(- + + +)`.
    pub fn form(self, other: Vec4) -> f64 {
        -self.t * other.t + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Wedge product into the six-dimensional bivector space.
    pub fn wedge(self, other: Vec4) -> Bivector4 {
        let a = self;
        let b = other;
        Bivector4::new([
            a.t * b.x - a.x * b.t,
            a.t * b.y - a.y * b.t,
            a.t * b.z - a.z * b.t,
            a.x * b.y - a.y * b.x,
            a.x * b.z - a.z * b.x,
            a.y * b.z - a.z * b.y,
        ])
    }

    /// Splits `X` as `plane + a P + b PTILDE` where `plane` pairs to zero
    /// with both `P` and `PTILDE`. Returns `(plane, a, b)`; the
    /// coefficients are `a = <X, PTILDE>` and `b = <X, P>`.
    pub fn project_components(self) -> (Vec4, f64, f64) {
        let p_coeff = self.form(Vec4::PTILDE);
        let ptilde_coeff = self.form(Vec4::P);
        let plane = self - Vec4::P * p_coeff - Vec4::PTILDE * ptilde_coeff;
        (plane, p_coeff, ptilde_coeff)
    }

    /// Orthoprojection onto the spacelike plane of the splitting, as a
    /// complex number `x + iy`.
    pub fn planar(self) -> num_complex::Complex64 {
        let (plane, _, _) = self.project_components();
        num_complex::Complex64::new(plane.x, plane.y)
    }

    /// Euclidean norm of the coordinate 4-tuple, used as a magnitude
    /// scale for residual normalization (not the Minkowski length).
    pub fn euclidean_norm(self) -> f64 {
        (self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

impl std::ops::Add for Vec4 {
    type Output = Vec4;
    fn add(self, rhs: Vec4) -> Vec4 {
        Vec4::new(self.t + rhs.t, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: Vec4) -> Vec4 {
        Vec4::new(self.t - rhs.t, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, s: f64) -> Vec4 {
        Vec4::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }
}

impl std::ops::Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        self * -1.0
    }
}

/// Point of isotropic 3-space in chart coordinates `(l, x, y)` with `l`
/// the vertical (height) coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IsoPoint {
    pub l: f64,
    pub x: f64,
    pub y: f64,
}

impl IsoPoint {
    pub const ORIGIN: IsoPoint = IsoPoint::new(0.0, 0.0, 0.0);

    pub const fn new(l: f64, x: f64, y: f64) -> Self {
        Self { l, x, y }
    }

    /// Chart embedding `(l, x, y) -> (l, x, y, l)`; lands in the
    /// hyperplane `<X, P> = 0` exactly.
    pub fn embed(self) -> Vec4 {
        Vec4::new(self.l, self.x, self.y, self.l)
    }

    /// Inverse of [`IsoPoint::embed`] on the isotropic hyperplane.
    /// Rejects input with `|<X, P>| > tol`.
    pub fn extract(v: Vec4, tol: f64) -> Result<IsoPoint> {
        let form_value = v.form(Vec4::P);
        if form_value.abs() > tol {
            return Err(Error::NotIsotropic { form_value, tol });
        }
        Ok(IsoPoint::new(v.t, v.x, v.y))
    }

    /// Planar part as a complex number `x + iy`.
    pub fn planar(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.x, self.y)
    }

    pub fn euclidean_norm(self) -> f64 {
        (self.l * self.l + self.x * self.x + self.y * self.y).sqrt()
    }
}

impl std::ops::Add for IsoPoint {
    type Output = IsoPoint;
    fn add(self, rhs: IsoPoint) -> IsoPoint {
        IsoPoint::new(self.l + rhs.l, self.x + rhs.x, self.y + rhs.y)
    }
}

impl std::ops::Sub for IsoPoint {
    type Output = IsoPoint;
    fn sub(self, rhs: IsoPoint) -> IsoPoint {
        IsoPoint::new(self.l - rhs.l, self.x - rhs.x, self.y - rhs.y)
    }
}

impl std::ops::Mul<f64> for IsoPoint {
    type Output = IsoPoint;
    fn mul(self, s: f64) -> IsoPoint {
        IsoPoint::new(self.l * s, self.x * s, self.y * s)
    }
}

impl std::ops::Neg for IsoPoint {
    type Output = IsoPoint;
    fn neg(self) -> IsoPoint {
        self * -1.0
    }
}

/// Sphere of isotropic 3-space: the graph of a rotational paraboloid
/// `l = (1/2r)|(x,y) - (c1,c2)|^2 + c0`, cut out of the isotropic
/// hyperplane by an affine lightcone. Its mean curvature is `1/r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoSphere {
    center: IsoPoint,
    radius: f64,
}

impl IsoSphere {
    /// Requires a nonzero radius.
    pub fn new(center: IsoPoint, radius: f64) -> Result<Self> {
        if radius == 0.0 {
            return Err(Error::ZeroRadius);
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> IsoPoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Mean curvature of the sphere, `1/r`.
    pub fn mean_curvature(&self) -> f64 {
        1.0 / self.radius
    }

    /// Graph height of the sphere at planar position `(x, y)`.
    pub fn height(&self, x: f64, y: f64) -> f64 {
        let dx = x - self.center.x;
        let dy = y - self.center.y;
        (dx * dx + dy * dy) / (2.0 * self.radius) + self.center.l
    }

    /// Lightcone apex of the sphere, `center + r PTILDE`; every sphere
    /// point `X` satisfies `<X - apex, X - apex> = 0`.
    pub fn lightcone_apex(&self) -> Vec4 {
        self.center.embed() + Vec4::PTILDE * self.radius
    }
}

/// Element of the bivector space over `R^{3,1}`, with components on the
/// ordered basis `e_t^e_x, e_t^e_y, e_t^e_z, e_x^e_y, e_x^e_z, e_y^e_z`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bivector4 {
    pub components: [f64; 6],
}

impl Bivector4 {
    pub const ZERO: Bivector4 = Bivector4::new([0.0; 6]);

    pub const fn new(components: [f64; 6]) -> Self {
        Self { components }
    }

    /// Euclidean norm of the six components.
    pub fn norm(self) -> f64 {
        self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

impl std::ops::Add for Bivector4 {
    type Output = Bivector4;
    fn add(self, rhs: Bivector4) -> Bivector4 {
        let mut c = [0.0; 6];
        for (i, v) in c.iter_mut().enumerate() {
            *v = self.components[i] + rhs.components[i];
        }
        Bivector4::new(c)
    }
}

impl std::ops::Sub for Bivector4 {
    type Output = Bivector4;
    fn sub(self, rhs: Bivector4) -> Bivector4 {
        self + rhs * -1.0
    }
}

impl std::ops::Mul<f64> for Bivector4 {
    type Output = Bivector4;
    fn mul(self, s: f64) -> Bivector4 {
        let mut c = self.components;
        for v in &mut c {
            *v *= s;
        }
        Bivector4::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinguished_null_vectors() {
        assert_eq!(Vec4::P.form(Vec4::P), 0.0);
        assert_eq!(Vec4::PTILDE.form(Vec4::PTILDE), 0.0);
        assert_eq!(Vec4::P.form(Vec4::PTILDE), 1.0);
    }

    #[test]
    fn form_evaluates_with_minus_on_t() {
        let a = Vec4::new(1.0, 2.0, 3.0, 4.0);
        let b = Vec4::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(a.form(b), -1.0);
        assert_eq!(a.form(b), b.form(a));
    }

    #[test]
    fn projection_of_distinguished_vectors() {
        let (plane, a, b) = Vec4::P.project_components();
        assert_eq!(plane, Vec4::ZERO);
        assert_eq!((a, b), (1.0, 0.0));

        let (plane, a, b) = Vec4::PTILDE.project_components();
        assert_eq!(plane, Vec4::ZERO);
        assert_eq!((a, b), (0.0, 1.0));
    }

    #[test]
    fn projection_of_chart_points() {
        let p = IsoPoint::new(2.5, 1.0, -3.0).embed();
        let (plane, a, b) = p.project_components();
        assert_eq!(plane, Vec4::new(0.0, 1.0, -3.0, 0.0));
        assert_eq!(a, 2.5);
        assert_eq!(b, 0.0);
    }

    #[test]
    fn embed_extract_round_trip() {
        assert_eq!(IsoPoint::ORIGIN.embed(), Vec4::ZERO);
        assert_eq!(
            IsoPoint::new(2.0, 1.0, -1.0).embed(),
            Vec4::new(2.0, 1.0, -1.0, 2.0)
        );
        let back = IsoPoint::extract(Vec4::new(2.0, 1.0, -1.0, 2.0), DEFAULT_TOL).unwrap();
        assert_eq!(back, IsoPoint::new(2.0, 1.0, -1.0));
    }

    #[test]
    fn extract_rejects_non_isotropic_input() {
        let err = IsoPoint::extract(Vec4::new(1.0, 0.0, 0.0, 0.0), DEFAULT_TOL);
        assert!(matches!(err, Err(Error::NotIsotropic { .. })));
    }

    #[test]
    fn wedge_of_coordinate_axes() {
        let ex = Vec4::new(0.0, 1.0, 0.0, 0.0);
        let ey = Vec4::new(0.0, 0.0, 1.0, 0.0);
        assert_eq!(
            ex.wedge(ey),
            Bivector4::new([0.0, 0.0, 0.0, 1.0, 0.0, 0.0])
        );
    }

    #[test]
    fn wedge_is_alternating() {
        let a = Vec4::new(1.0, -2.0, 0.5, 3.0);
        assert_eq!(a.wedge(a), Bivector4::ZERO);
    }

    #[test]
    fn wedge_of_p_and_ptilde() {
        assert_eq!(
            Vec4::P.wedge(Vec4::PTILDE),
            Bivector4::new([0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
        );
    }

    #[test]
    fn sphere_heights() {
        let unit = IsoSphere::new(IsoPoint::ORIGIN, 1.0).unwrap();
        assert_eq!(unit.height(0.0, 0.0), 0.0);
        assert_eq!(unit.height(1.0, 1.0), 1.0);

        let s = IsoSphere::new(IsoPoint::new(3.0, 1.0, 2.0), 2.0).unwrap();
        assert_eq!(s.height(1.0, 2.0), 3.0);
        assert_eq!(s.mean_curvature(), 0.5);
    }

    #[test]
    fn sphere_rejects_zero_radius() {
        assert!(matches!(
            IsoSphere::new(IsoPoint::ORIGIN, 0.0),
            Err(Error::ZeroRadius)
        ));
    }

    #[test]
    fn sphere_points_lie_on_affine_lightcone() {
        let s = IsoSphere::new(IsoPoint::new(-0.5, 0.25, 1.5), 1.75).unwrap();
        let apex = s.lightcone_apex();
        for (x, y) in [(0.0, 0.0), (1.0, -2.0), (3.5, 0.125), (-4.0, 4.0)] {
            let p = IsoPoint::new(s.height(x, y), x, y).embed();
            let d = p - apex;
            assert!(d.form(d).abs() < 1e-12, "off the cone: {}", d.form(d));
        }
    }
}
