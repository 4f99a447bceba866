//! Closed-form generators for the example families of discrete cmc
//! surfaces, and the parallel-surface construction.
//!
//! Each family comes with explicit Weierstrass data `(g, h)` whose
//! integrated 1-form reproduces the closed form, so the families double
//! as end-to-end oracles for the recursive pipeline:
//!
//! * doubly channel surfaces from scaled identity grids; every
//!   curvature line lies on a vertical-axis parabola,
//! * cmc cylinders, the `M = N` special case with straight n-curves,
//! * Delaunay-type surfaces of revolution from discrete exponentials,
//!   with period `2N` in the n-direction.

use num_complex::Complex64;

use crate::curvature::{gauss_closed_form, LightconeNet};
use crate::error::{Error, Result};
use crate::grid::GridDomain;
use crate::holomorphic::{
    discrete_exponential, exponential_rate, identity_scaling, HolomorphicGrid,
};
use crate::minkowski::IsoPoint;
use crate::weierstrass::SurfaceNet;

/// Family selector and parameters of an example surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyParams {
    /// Doubly channel surface with identity-grid subdivisions `M`, `N`.
    DoublyChannel { m_div: i64, n_div: i64 },
    /// Cylinder: the doubly channel surface with `M = N`.
    Cylinder { m_div: i64 },
    /// Delaunay-type surface with rotational period `2N` and
    /// exponential amplitude `c`.
    Delaunay { n_div: i64, c: f64 },
}

/// Full description of one generated example.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleSpec {
    pub mean_curvature: f64,
    pub params: FamilyParams,
    pub domain: GridDomain,
}

impl ExampleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.mean_curvature == 0.0 {
            return Err(Error::InvalidFamilyParams(
                "mean curvature H must be nonzero".into(),
            ));
        }
        match self.params {
            FamilyParams::DoublyChannel { m_div, n_div } => {
                if m_div < 1 || n_div < 1 {
                    return Err(Error::InvalidFamilyParams(format!(
                        "doubly channel requires M, N >= 1, got M = {m_div}, N = {n_div}"
                    )));
                }
            }
            FamilyParams::Cylinder { m_div } => {
                if m_div < 1 {
                    return Err(Error::InvalidFamilyParams(format!(
                        "cylinder requires M >= 1, got M = {m_div}"
                    )));
                }
            }
            FamilyParams::Delaunay { n_div, c } => {
                if n_div < 2 {
                    return Err(Error::InvalidFamilyParams(format!(
                        "Delaunay family requires N >= 2, got N = {n_div}"
                    )));
                }
                if c == 0.0 {
                    return Err(Error::InvalidFamilyParams(
                        "Delaunay family requires c != 0".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Closed-form vertex position.
    pub fn closed_form_point(&self, m: i64, n: i64) -> Result<IsoPoint> {
        self.validate()?;
        let h = self.mean_curvature;
        Ok(match self.params {
            FamilyParams::DoublyChannel { m_div, n_div } => {
                channel_point(h, m_div, n_div, m, n)
            }
            FamilyParams::Cylinder { m_div } => channel_point(h, m_div, m_div, m, n),
            FamilyParams::Delaunay { n_div, c } => delaunay_point(h, n_div, c, m, n),
        })
    }

    /// Closed-form net over the whole domain.
    pub fn closed_form(&self) -> Result<SurfaceNet> {
        self.validate()?;
        Ok(SurfaceNet::from_fn(self.domain, |m, n| {
            self.closed_form_point(m, n).expect("validated")
        }))
    }

    /// The Weierstrass data `(g, h)` of the family in closed form:
    /// `g` carries the family's canonical labels and `h` their
    /// reciprocals, and `dh = H / (m dg)` holds edge-wise.
    pub fn weierstrass_data(&self) -> Result<(HolomorphicGrid, HolomorphicGrid)> {
        self.validate()?;
        let mean_curvature = self.mean_curvature;
        match self.params {
            FamilyParams::DoublyChannel { m_div, n_div } => {
                channel_data(mean_curvature, m_div, n_div, self.domain)
            }
            FamilyParams::Cylinder { m_div } => {
                channel_data(mean_curvature, m_div, m_div, self.domain)
            }
            FamilyParams::Delaunay { n_div, c } => {
                let g = discrete_exponential(n_div, c, self.domain)?;
                let alpha = exponential_rate(n_div);
                let beta = std::f64::consts::PI / n_div as f64;
                let h = HolomorphicGrid::from_fn(g.labels().reciprocal(), |m, n| {
                    Complex64::from_polar((alpha * m as f64).exp(), -beta * n as f64)
                        * mean_curvature
                });
                Ok((g, h))
            }
        }
    }

    /// Closed-form lightlike Gauss map of the family.
    pub fn gauss_map(&self) -> Result<LightconeNet> {
        let (g, h) = self.weierstrass_data()?;
        gauss_closed_form(&g, &h)
    }
}

fn channel_point(mean_curvature: f64, m_div: i64, n_div: i64, m: i64, n: i64) -> IsoPoint {
    let (mm, nn) = (m_div as f64, n_div as f64);
    let u = m as f64 / nn;
    let v = n as f64 / nn;
    IsoPoint::new(
        mean_curvature / (2.0 * mm) * ((mm + nn) * u * u + (mm - nn) * v * v),
        u,
        v,
    )
}

fn delaunay_point(mean_curvature: f64, n_div: i64, c: f64, m: i64, n: i64) -> IsoPoint {
    let alpha = exponential_rate(n_div);
    let beta = std::f64::consts::PI / n_div as f64;
    let radial = (alpha * m as f64).exp();
    let angle = beta * n as f64;
    IsoPoint::new(
        0.5 * mean_curvature * radial * radial + c * alpha.sinh() * m as f64,
        radial * angle.cos(),
        -radial * angle.sin(),
    )
}

fn channel_data(
    mean_curvature: f64,
    m_div: i64,
    n_div: i64,
    domain: GridDomain,
) -> Result<(HolomorphicGrid, HolomorphicGrid)> {
    let g = identity_scaling(mean_curvature, m_div, n_div, domain)?;
    let step = mean_curvature / n_div as f64;
    let h = HolomorphicGrid::from_fn(g.labels().reciprocal(), |m, n| {
        Complex64::new(m as f64 * step, n as f64 * step)
    });
    Ok((g, h))
}

/// Doubly channel cmc surface
/// `Y(m,n) = ((H/2M)((M+N)(m/N)^2 + (M-N)(n/N)^2), m/N, n/N)`.
pub fn doubly_channel(
    mean_curvature: f64,
    m_div: i64,
    n_div: i64,
    domain: GridDomain,
) -> Result<SurfaceNet> {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::DoublyChannel { m_div, n_div },
        domain,
    }
    .closed_form()
}

/// Cmc cylinder `Y(m,n) = (H(m/M)^2, m/M, n/M)`, the doubly channel
/// surface with `M = N`.
pub fn cmc_cylinder(mean_curvature: f64, m_div: i64, domain: GridDomain) -> Result<SurfaceNet> {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::Cylinder { m_div },
        domain,
    }
    .closed_form()
}

/// Delaunay-type surface of revolution
/// `Y(m,n) = ((H/2)e^{2am} + c sinh(a) m, e^{am} cos(pi n/N), -e^{am} sin(pi n/N))`
/// with `a = acosh(2 - cos(pi/N))`.
pub fn delaunay(
    mean_curvature: f64,
    n_div: i64,
    c: f64,
    domain: GridDomain,
) -> Result<SurfaceNet> {
    ExampleSpec {
        mean_curvature,
        params: FamilyParams::Delaunay { n_div, c },
        domain,
    }
    .closed_form()
}

/// Parallel surface `Y + nu / H`; for a cmc-`H` net with Gauss map `nu`
/// from the same Weierstrass data this is a cmc-`(-H)` net, edge-parallel
/// to the original.
pub fn parallel_surface(
    y: &SurfaceNet,
    nu: &SurfaceNet,
    mean_curvature: f64,
) -> Result<SurfaceNet> {
    if mean_curvature == 0.0 {
        return Err(Error::ZeroMeanCurvature);
    }
    if y.domain() != nu.domain() {
        return Err(Error::DomainMismatch);
    }
    Ok(SurfaceNet::from_fn(y.domain(), |m, n| {
        y.point(m, n).unwrap() + nu.point(m, n).unwrap() * (1.0 / mean_curvature)
    }))
}

/// Largest distance of interior points from the line through the first
/// and last point (all in chart coordinates).
pub fn collinearity_residual(points: &[IsoPoint]) -> f64 {
    if points.len() < 3 {
        return 0.0;
    }
    let first = points[0];
    let chord = *points.last().unwrap() - first;
    let len = chord.euclidean_norm();
    if len == 0.0 {
        return f64::INFINITY;
    }
    let dir = chord * (1.0 / len);
    points
        .iter()
        .map(|&p| {
            let d = p - first;
            let t = d.l * dir.l + d.x * dir.x + d.y * dir.y;
            (d - dir * t).euclidean_norm()
        })
        .fold(0.0, f64::max)
}

/// Deviations of a polyline from a parabola with vertical axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaFit {
    /// Largest distance of the planar projections from their chord.
    pub planar_deviation: f64,
    /// Largest height deviation from the quadratic interpolating the
    /// first, middle, and last point.
    pub height_deviation: f64,
}

/// Fits the planar projections with a straight line and the heights
/// with the quadratic through three of the points; a curvature line of
/// a channel surface fits both exactly.
pub fn vertical_parabola_fit(points: &[IsoPoint]) -> Result<ParabolaFit> {
    if points.len() < 3 {
        return Ok(ParabolaFit { planar_deviation: 0.0, height_deviation: 0.0 });
    }
    let first = points[0].planar();
    let chord = points.last().unwrap().planar() - first;
    if chord.norm() == 0.0 {
        return Err(Error::DegenerateDomain(
            "curvature line has coincident planar endpoints".into(),
        ));
    }
    let dir = chord / chord.norm();
    let mut planar_deviation = 0.0_f64;
    let mut params = Vec::with_capacity(points.len());
    for p in points {
        let d = p.planar() - first;
        let t = (d * dir.conj()).re;
        planar_deviation = planar_deviation.max((d - dir * t).norm());
        params.push(t);
    }

    let pick = [0, points.len() / 2, points.len() - 1];
    let (t0, t1, t2) = (params[pick[0]], params[pick[1]], params[pick[2]]);
    let (l0, l1, l2) = (
        points[pick[0]].l,
        points[pick[1]].l,
        points[pick[2]].l,
    );
    let denom = (t0 - t1) * (t0 - t2) * (t1 - t2);
    if denom == 0.0 {
        return Err(Error::DegenerateDomain(
            "curvature line has coincident fit parameters".into(),
        ));
    }
    let quadratic = |t: f64| {
        l0 * ((t - t1) * (t - t2)) / ((t0 - t1) * (t0 - t2))
            + l1 * ((t - t0) * (t - t2)) / ((t1 - t0) * (t1 - t2))
            + l2 * ((t - t0) * (t - t1)) / ((t2 - t0) * (t2 - t1))
    };
    let height_deviation = points
        .iter()
        .zip(&params)
        .map(|(p, &t)| (p.l - quadratic(t)).abs())
        .fold(0.0, f64::max);

    Ok(ParabolaFit { planar_deviation, height_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn channel_closed_form_values() {
        let domain = GridDomain::new(0, 4, 0, 4).unwrap();
        let y = doubly_channel(1.0, 6, 2, domain).unwrap();
        assert_eq!(y.point(0, 0).unwrap(), IsoPoint::ORIGIN);
        let p = y.point(2, 3).unwrap();
        let expected = IsoPoint::new(17.0 / 12.0, 1.0, 1.5);
        assert!((p - expected).euclidean_norm() < 1e-15, "{p:?}");
    }

    #[test]
    fn channel_curvature_lines_are_parabolic() {
        let domain = GridDomain::new(-5, 5, -5, 5).unwrap();
        let y = doubly_channel(1.0, 6, 2, domain).unwrap();
        for n in -5..=5 {
            let fit = vertical_parabola_fit(&y.row_points(n).unwrap()).unwrap();
            assert!(fit.planar_deviation < 1e-13 && fit.height_deviation < 1e-13);
        }
        for m in -5..=5 {
            let fit = vertical_parabola_fit(&y.column_points(m).unwrap()).unwrap();
            assert!(fit.planar_deviation < 1e-13 && fit.height_deviation < 1e-13);
        }
    }

    #[test]
    fn cylinder_closed_form_values() {
        let domain = GridDomain::new(0, 4, 0, 5).unwrap();
        let y = cmc_cylinder(1.0, 4, domain).unwrap();
        let p = y.point(2, 5).unwrap();
        let expected = IsoPoint::new(0.25, 0.5, 1.25);
        assert!((p - expected).euclidean_norm() < 1e-15, "{p:?}");
    }

    #[test]
    fn cylinder_is_the_square_channel_case() {
        let domain = GridDomain::new(-3, 3, -3, 3).unwrap();
        let a = cmc_cylinder(0.5, 4, domain).unwrap();
        let b = doubly_channel(0.5, 4, 4, domain).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cylinder_n_curves_are_straight() {
        let domain = GridDomain::new(-3, 3, -3, 3).unwrap();
        let y = cmc_cylinder(1.0, 4, domain).unwrap();
        for m in -3..=3 {
            let r = collinearity_residual(&y.column_points(m).unwrap());
            assert!(r < 1e-14, "column {m}: residual {r}");
        }
    }

    #[test]
    fn delaunay_closed_form_values() {
        let domain = GridDomain::new(-2, 2, 0, 8).unwrap();
        let y = delaunay(1.0, 4, -0.5, domain).unwrap();
        let p = y.point(0, 0).unwrap();
        let expected = IsoPoint::new(0.5, 1.0, 0.0);
        assert!((p - expected).euclidean_norm() < 1e-15, "{p:?}");
    }

    #[test]
    fn delaunay_is_a_surface_of_revolution() {
        let n_div = 4;
        let beta = std::f64::consts::PI / n_div as f64;
        let turn = Complex64::from_polar(1.0, -beta);
        let domain = GridDomain::new(-3, 3, 0, 8).unwrap();
        let y = delaunay(1.0, n_div, -0.5, domain).unwrap();
        for (m, n) in domain.vertices() {
            if n + 1 > domain.n_max() {
                continue;
            }
            let a = y.point(m, n).unwrap();
            let b = y.point(m, n + 1).unwrap();
            assert!((a.l - b.l).abs() < 1e-12);
            let rotated = a.planar() * turn;
            assert!((rotated - b.planar()).norm() < 1e-12);
        }
        // Full rotational period 2N.
        for m in -3..=3 {
            let a = y.point(m, 0).unwrap();
            let b = y.point(m, 8).unwrap();
            assert!((a - b).euclidean_norm() < 1e-12);
        }
    }

    #[test]
    fn family_weierstrass_data_is_a_christoffel_pair() {
        let specs = [
            ExampleSpec {
                mean_curvature: 1.0,
                params: FamilyParams::DoublyChannel { m_div: 6, n_div: 2 },
                domain: GridDomain::new(-4, 4, -4, 4).unwrap(),
            },
            ExampleSpec {
                mean_curvature: -0.5,
                params: FamilyParams::Cylinder { m_div: 3 },
                domain: GridDomain::new(-4, 4, -4, 4).unwrap(),
            },
            ExampleSpec {
                mean_curvature: 1.0,
                params: FamilyParams::Delaunay { n_div: 4, c: -0.5 },
                domain: GridDomain::new(-4, 4, 0, 8).unwrap(),
            },
        ];
        for spec in specs {
            let (g, h) = spec.weierstrass_data().unwrap();
            for edge in spec.domain.edges() {
                let lhs = h.edge_difference(edge).unwrap()
                    * g.edge_difference(edge).unwrap()
                    * g.labels().label(edge).unwrap();
                let defect = (lhs - Complex64::new(spec.mean_curvature, 0.0)).norm();
                assert!(
                    defect < 1e-10 * spec.mean_curvature.abs(),
                    "dual defect {defect} on {edge:?} for {:?}",
                    spec.params
                );
            }
        }
    }

    #[test]
    fn parallel_cylinder_matches_its_closed_form() {
        let domain = GridDomain::new(-4, 4, -4, 4).unwrap();
        let m_div = 4;
        for mean_curvature in [1.0, -1.0, 0.5] {
            let spec = ExampleSpec {
                mean_curvature,
                params: FamilyParams::Cylinder { m_div },
                domain,
            };
            let y = spec.closed_form().unwrap();
            let nu = spec
                .gauss_map()
                .unwrap()
                .nu(crate::curvature::DEFAULT_LIGHTCONE_TOL)
                .unwrap();
            let parallel = parallel_surface(&y, &nu, mean_curvature).unwrap();
            for (m, n) in domain.vertices() {
                let u = m as f64 / m_div as f64;
                let expected =
                    IsoPoint::new(-mean_curvature * u * u, -u, n as f64 / m_div as f64);
                let got = parallel.point(m, n).unwrap();
                assert!(
                    (got - expected).euclidean_norm() < 1e-12,
                    "({m},{n}): {got:?} vs {expected:?}"
                );
            }
        }
    }

    #[test]
    fn double_parallel_returns_the_original_up_to_vertical_shift() {
        let specs = [
            ExampleSpec {
                mean_curvature: 1.0,
                params: FamilyParams::DoublyChannel { m_div: 6, n_div: 2 },
                domain: GridDomain::new(-5, 5, -5, 5).unwrap(),
            },
            ExampleSpec {
                mean_curvature: 1.0,
                params: FamilyParams::Delaunay { n_div: 4, c: -0.5 },
                domain: GridDomain::new(-4, 4, 0, 8).unwrap(),
            },
        ];
        for spec in specs {
            let y = spec.closed_form().unwrap();
            // The parallel surface keeps phi, hence the same Gauss map;
            // applying the construction with H and then -H returns the
            // original net up to a constant vertical translation.
            let nu = spec
                .gauss_map()
                .unwrap()
                .nu(crate::curvature::DEFAULT_LIGHTCONE_TOL)
                .unwrap();
            let once = parallel_surface(&y, &nu, spec.mean_curvature).unwrap();
            let twice = parallel_surface(&once, &nu, -spec.mean_curvature).unwrap();
            let offset = twice.point(spec.domain.m_min(), spec.domain.n_min()).unwrap()
                - y.point(spec.domain.m_min(), spec.domain.n_min()).unwrap();
            assert!(offset.x.abs() < 1e-12 && offset.y.abs() < 1e-12);
            for (m, n) in spec.domain.vertices() {
                let d = twice.point(m, n).unwrap() - (y.point(m, n).unwrap() + offset);
                assert!(d.euclidean_norm() < 1e-9, "defect at ({m},{n})");
            }
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let domain = GridDomain::new(0, 1, 0, 1).unwrap();
        assert!(doubly_channel(0.0, 6, 2, domain).is_err());
        assert!(doubly_channel(1.0, 0, 2, domain).is_err());
        assert!(delaunay(1.0, 1, -0.5, domain).is_err());
        assert!(delaunay(1.0, 4, 0.0, domain).is_err());
    }
}
