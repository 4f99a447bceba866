//! Per-quad curvature table as CSV.
//!
//! One row per elementary quadrilateral, keyed by its lower-left corner,
//! with the fixed header
//!
//! ```text
//! m,n,H,area_xx,area_xn,bivector_residual,coplanarity,concircularity
//! ```
//!
//! Numbers use the shortest representation that round-trips. Degenerate
//! quads (vanishing planar self mixed area) carry `nan` in the `H` and
//! `bivector_residual` columns; `area_xx = 0` marks them.

use std::path::Path;

use crate::curvature::{
    circularity_check, mean_curvature_quad, quad_planar_areas, LightconeNet,
};
use crate::error::{Error, Result};
use crate::grid::Quad;
use crate::weierstrass::SurfaceNet;

pub const TABLE_HEADER: &str =
    "m,n,H,area_xx,area_xn,bivector_residual,coplanarity,concircularity";

/// One table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureRow {
    pub quad: Quad,
    pub mean_curvature: f64,
    pub area_xx: f64,
    pub area_xn: f64,
    pub bivector_residual: f64,
    pub coplanarity: f64,
    pub concircularity: f64,
}

/// Computes all rows in row-major quad order.
pub fn curvature_rows(net: &SurfaceNet, gauss: &LightconeNet) -> Result<Vec<CurvatureRow>> {
    if net.domain() != gauss.domain() {
        return Err(Error::DomainMismatch);
    }
    let mut rows = Vec::with_capacity(net.domain().quad_count());
    for quad in net.domain().quads() {
        let circ = circularity_check(net, quad)?;
        let row = match mean_curvature_quad(net, gauss, quad) {
            Ok(qc) => CurvatureRow {
                quad,
                mean_curvature: qc.mean_curvature,
                area_xx: qc.area_xx,
                area_xn: qc.area_xn,
                bivector_residual: qc.bivector_residual,
                coplanarity: circ.coplanarity,
                concircularity: circ.concircularity,
            },
            Err(Error::DegenerateQuadArea(_)) => {
                let (area_xx, area_xn) = quad_planar_areas(net, gauss, quad)?;
                CurvatureRow {
                    quad,
                    mean_curvature: f64::NAN,
                    area_xx,
                    area_xn,
                    bivector_residual: f64::NAN,
                    coplanarity: circ.coplanarity,
                    concircularity: circ.concircularity,
                }
            }
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(rows)
}

fn fmt(value: f64) -> String {
    if value.is_nan() {
        "nan".to_string()
    } else {
        format!("{value}")
    }
}

/// Serializes rows into the CSV document.
pub fn table_string(rows: &[CurvatureRow]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.quad.m,
            r.quad.n,
            fmt(r.mean_curvature),
            fmt(r.area_xx),
            fmt(r.area_xn),
            fmt(r.bivector_residual),
            fmt(r.coplanarity),
            fmt(r.concircularity),
        ));
    }
    out
}

/// Computes the table and writes it atomically to `path`.
pub fn write_curvature_table(
    net: &SurfaceNet,
    gauss: &LightconeNet,
    path: &Path,
) -> Result<()> {
    let rows = curvature_rows(net, gauss)?;
    super::atomic_write(path, &table_string(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridDomain;
    use crate::surfaces::{ExampleSpec, FamilyParams};

    #[test]
    fn channel_table_has_constant_curvature_column() {
        let spec = ExampleSpec {
            mean_curvature: 1.0,
            params: FamilyParams::DoublyChannel { m_div: 6, n_div: 2 },
            domain: GridDomain::new(0, 4, 0, 4).unwrap(),
        };
        let net = spec.closed_form().unwrap();
        let gauss = spec.gauss_map().unwrap();
        let rows = curvature_rows(&net, &gauss).unwrap();
        assert_eq!(rows.len(), 16);
        for row in &rows {
            assert!((row.mean_curvature - 1.0).abs() < 1e-9);
        }
        let text = table_string(&rows);
        assert!(text.starts_with(TABLE_HEADER));
        assert_eq!(text.lines().count(), 17);
    }

    #[test]
    fn zmc_table_has_zero_curvature_column() {
        use crate::holomorphic::identity_scaling;
        use crate::minkowski::IsoPoint;
        let domain = GridDomain::new(-4, 4, -4, 4).unwrap();
        let g = identity_scaling(1.0, 6, 2, domain).unwrap();
        let net = crate::weierstrass::zmc_oneform(&g)
            .unwrap()
            .integrate((-4, -4), IsoPoint::ORIGIN, 1e-9)
            .unwrap();
        let gauss =
            crate::curvature::lightcone_from_phi(domain, |m, n| g.value(m, n).unwrap());
        for row in curvature_rows(&net, &gauss).unwrap() {
            assert!(row.mean_curvature.abs() < 1e-9);
        }
    }

    #[test]
    fn degenerate_quads_emit_nan() {
        use crate::minkowski::{IsoPoint, Vec4};
        let domain = GridDomain::new(0, 1, 0, 1).unwrap();
        // All four vertices on one planar line: A(x,x) = 0.
        let net = SurfaceNet::from_fn(domain, |m, n| {
            IsoPoint::new(0.0, (m + n) as f64, 0.0)
        });
        let gauss = LightconeNet::from_fn(domain, |_, _| Vec4::PTILDE);
        let rows = curvature_rows(&net, &gauss).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].mean_curvature.is_nan());
        assert_eq!(rows[0].area_xx, 0.0);
        let text = table_string(&rows);
        assert!(text.contains(",nan,"), "{text}");
    }
}
