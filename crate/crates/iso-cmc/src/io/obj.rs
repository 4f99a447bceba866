//! Wavefront OBJ emission and re-ingestion of this tool's own dialect.
//!
//! Vertices are written in row-major grid order, one `v x y l` line per
//! vertex: the height `l` maps to the third spatial coordinate so the
//! vertical direction renders as up. Every elementary quadrilateral
//! becomes one 1-indexed `f` line in `i j k l` corner order. Numbers
//! carry 17 significant digits, which round-trips `f64` exactly.

use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::GridDomain;
use crate::minkowski::IsoPoint;
use crate::weierstrass::SurfaceNet;

/// Serializes a net into the OBJ dialect.
pub fn obj_string(net: &SurfaceNet) -> String {
    let domain = net.domain();
    let mut out = String::new();
    for (m, n) in domain.vertices() {
        let p = net.point(m, n).expect("vertex in domain");
        out.push_str(&format!("v {:.16e} {:.16e} {:.16e}\n", p.x, p.y, p.l));
    }
    for quad in domain.quads() {
        let [i, j, k, l] = quad.corners();
        out.push_str(&format!(
            "f {} {} {} {}\n",
            domain.vertex_index(i.0, i.1).unwrap() + 1,
            domain.vertex_index(j.0, j.1).unwrap() + 1,
            domain.vertex_index(k.0, k.1).unwrap() + 1,
            domain.vertex_index(l.0, l.1).unwrap() + 1,
        ));
    }
    out
}

/// Writes the net atomically to `path`.
pub fn write_obj(net: &SurfaceNet, path: &Path) -> Result<()> {
    super::atomic_write(path, &obj_string(net))
}

/// Reads a net back from an OBJ file written by this tool. The vertex
/// count must match the domain; face lines are ignored.
pub fn read_obj(path: &Path, domain: GridDomain) -> Result<SurfaceNet> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.display().to_string(),
        source,
    })?;
    let malformed = |message: String| Error::MalformedMesh {
        path: path.display().to_string(),
        message,
    };

    let mut points = Vec::with_capacity(domain.vertex_count());
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if !line.starts_with("v ") {
            continue;
        }
        let coords = line[2..]
            .split_whitespace()
            .map(str::parse::<f64>)
            .collect::<std::result::Result<Vec<f64>, _>>()
            .map_err(|e| malformed(format!("line {}: {e}", lineno + 1)))?;
        if coords.len() != 3 {
            return Err(malformed(format!(
                "line {}: expected 3 vertex coordinates, got {}",
                lineno + 1,
                coords.len()
            )));
        }
        points.push(IsoPoint::new(coords[2], coords[0], coords[1]));
    }
    if points.len() != domain.vertex_count() {
        return Err(malformed(format!(
            "vertex count {} does not match the {}x{} grid ({} vertices)",
            points.len(),
            domain.width(),
            domain.height(),
            domain.vertex_count()
        )));
    }
    SurfaceNet::from_points(domain, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_net(domain: GridDomain) -> SurfaceNet {
        SurfaceNet::from_fn(domain, |m, n| {
            IsoPoint::new(
                (m as f64 / 3.0) * (n as f64) + 1.0 / 7.0,
                m as f64 + 1.0 / 3.0,
                n as f64 - 1.0 / 9.0,
            )
        })
    }

    #[test]
    fn two_by_two_layout() {
        let domain = GridDomain::new(0, 1, 0, 1).unwrap();
        let text = obj_string(&sample_net(domain));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[..4].iter().all(|l| l.starts_with("v ")));
        assert_eq!(lines[4], "f 1 2 4 3");
    }

    #[test]
    fn strip_has_no_faces() {
        let domain = GridDomain::new(0, 0, 0, 4).unwrap();
        let text = obj_string(&sample_net(domain));
        assert_eq!(text.lines().count(), 5);
        assert!(text.lines().all(|l| l.starts_with("v ")));
    }

    #[test]
    fn round_trip_is_exact() {
        let domain = GridDomain::new(-2, 3, 1, 4).unwrap();
        let net = sample_net(domain);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.obj");
        write_obj(&net, &path).unwrap();
        let back = read_obj(&path, domain).unwrap();
        for (m, n) in domain.vertices() {
            assert_eq!(net.point(m, n).unwrap(), back.point(m, n).unwrap());
        }
    }

    #[test]
    fn vertex_count_mismatch_is_rejected() {
        let domain = GridDomain::new(0, 1, 0, 1).unwrap();
        let net = sample_net(domain);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.obj");
        write_obj(&net, &path).unwrap();
        let bigger = GridDomain::new(0, 2, 0, 2).unwrap();
        assert!(matches!(
            read_obj(&path, bigger),
            Err(Error::MalformedMesh { .. })
        ));
    }

    #[test]
    fn unwritable_path_is_an_error() {
        let domain = GridDomain::new(0, 1, 0, 1).unwrap();
        let net = sample_net(domain);
        let r = write_obj(&net, Path::new("/nonexistent-dir/net.obj"));
        assert!(matches!(r, Err(Error::Write { .. })));
    }
}
