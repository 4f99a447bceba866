//! Aggregated verification report.
//!
//! `verify_net` runs exactly the module-level checks over a net and its
//! Weierstrass data: holomorphicity of `g`, closure of the cmc 1-form,
//! circularity of every quad, Gauss map loop consistency, the beta
//! edge-parallelism, and per-quad mean curvature statistics against the
//! target. The report serializes as TOML with stable key names.

use std::path::Path;

use serde::Serialize;

use crate::curvature::{
    beta_check, circularity_check, gauss_closed_form, mean_curvature_quad,
    propagate_around_quad,
};
use crate::error::Result;
use crate::holomorphic::{verify_holomorphic, HolomorphicGrid};
use crate::io::config::Tolerances;
use crate::weierstrass::{cmc_oneform, SurfaceNet};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    pub max_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircularityChecks {
    pub pass: bool,
    pub max_coplanarity: f64,
    pub max_concircularity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureStats {
    pub pass: bool,
    pub target: f64,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub overall_pass: bool,
    pub failed_checks: Vec<String>,
    pub holomorphicity: CheckResult,
    pub closure: CheckResult,
    pub circularity: CircularityChecks,
    pub gauss_loop: CheckResult,
    pub beta_parallelism: CheckResult,
    pub mean_curvature: CurvatureStats,
}

impl VerifyReport {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }

    /// One `name: pass/FAIL` line per check.
    pub fn summary_lines(&self) -> Vec<String> {
        let line = |name: &str, pass: bool, detail: String| {
            format!(
                "{name}: {} ({detail})",
                if pass { "pass" } else { "FAIL" }
            )
        };
        vec![
            line(
                "holomorphicity",
                self.holomorphicity.pass,
                format!("max residual {:e}", self.holomorphicity.max_residual),
            ),
            line(
                "closure",
                self.closure.pass,
                format!("max residual {:e}", self.closure.max_residual),
            ),
            line(
                "circularity",
                self.circularity.pass,
                format!(
                    "max coplanarity {:e}, max concircularity {:e}",
                    self.circularity.max_coplanarity, self.circularity.max_concircularity
                ),
            ),
            line(
                "gauss_loop",
                self.gauss_loop.pass,
                format!("max residual {:e}", self.gauss_loop.max_residual),
            ),
            line(
                "beta_parallelism",
                self.beta_parallelism.pass,
                format!("max residual {:e}", self.beta_parallelism.max_residual),
            ),
            line(
                "mean_curvature",
                self.mean_curvature.pass,
                format!(
                    "target {}, range [{}, {}]",
                    self.mean_curvature.target,
                    self.mean_curvature.min,
                    self.mean_curvature.max
                ),
            ),
        ]
    }
}

/// Runs every check on `net` against the Weierstrass data `(g, h)` and
/// target curvature. Check failures are reported, not propagated as
/// errors; `Err` is reserved for structural problems (domain
/// mismatches).
pub fn verify_net(
    net: &SurfaceNet,
    g: &HolomorphicGrid,
    h: &HolomorphicGrid,
    mean_curvature: f64,
    tol: &Tolerances,
) -> Result<VerifyReport> {
    let domain = net.domain();

    let holo = verify_holomorphic(g, tol.holomorphic);
    let holomorphicity = CheckResult {
        pass: holo.pass,
        max_residual: holo.max_residual,
    };

    let closure = match cmc_oneform(g, h, mean_curvature, tol.dual) {
        Ok(form) => {
            let (max_residual, _) = form.max_closure_residual();
            CheckResult {
                pass: max_residual <= tol.closure,
                max_residual,
            }
        }
        Err(_) => CheckResult {
            pass: false,
            max_residual: f64::INFINITY,
        },
    };

    let mut max_coplanarity = 0.0_f64;
    let mut max_concircularity = 0.0_f64;
    for quad in domain.quads() {
        let r = circularity_check(net, quad)?;
        max_coplanarity = max_coplanarity.max(r.coplanarity);
        max_concircularity = max_concircularity.max(r.concircularity);
    }
    let circularity = CircularityChecks {
        pass: max_coplanarity <= tol.coplanarity && max_concircularity <= tol.concircularity,
        max_coplanarity,
        max_concircularity,
    };

    let gauss = gauss_closed_form(g, h)?;

    let mut max_loop = 0.0_f64;
    for quad in domain.quads() {
        let seed = gauss.value(quad.m, quad.n)?;
        match propagate_around_quad(net, quad, seed) {
            Ok(returned) => {
                let residual =
                    (returned - seed).euclidean_norm() / seed.euclidean_norm().max(1.0);
                max_loop = max_loop.max(residual);
            }
            Err(_) => {
                max_loop = f64::INFINITY;
            }
        }
    }
    let gauss_loop = CheckResult {
        pass: max_loop <= tol.gauss_loop,
        max_residual: max_loop,
    };

    let beta = beta_check(g, mean_curvature, net, &gauss)?;
    let beta_parallelism = CheckResult {
        pass: beta.max_residual <= tol.beta,
        max_residual: beta.max_residual,
    };

    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut degenerate = false;
    for quad in domain.quads() {
        match mean_curvature_quad(net, &gauss, quad) {
            Ok(qc) => {
                min = min.min(qc.mean_curvature);
                max = max.max(qc.mean_curvature);
                sum += qc.mean_curvature;
                count += 1;
            }
            Err(_) => degenerate = true,
        }
    }
    let (min, max, mean) = if count > 0 {
        (min, max, sum / count as f64)
    } else {
        (f64::NAN, f64::NAN, f64::NAN)
    };
    let scale = if mean_curvature != 0.0 {
        mean_curvature.abs()
    } else {
        1.0
    };
    let curvature_pass = !degenerate
        && count == domain.quad_count()
        && (min - mean_curvature).abs() <= tol.mean_curvature * scale
        && (max - mean_curvature).abs() <= tol.mean_curvature * scale;
    let mean_curvature_stats = CurvatureStats {
        pass: curvature_pass,
        target: mean_curvature,
        min,
        max,
        mean,
    };

    let mut failed_checks = Vec::new();
    for (name, pass) in [
        ("holomorphicity", holomorphicity.pass),
        ("closure", closure.pass),
        ("circularity", circularity.pass),
        ("gauss_loop", gauss_loop.pass),
        ("beta_parallelism", beta_parallelism.pass),
        ("mean_curvature", mean_curvature_stats.pass),
    ] {
        if !pass {
            failed_checks.push(name.to_string());
        }
    }

    Ok(VerifyReport {
        overall_pass: failed_checks.is_empty(),
        failed_checks,
        holomorphicity,
        closure,
        circularity,
        gauss_loop,
        beta_parallelism,
        mean_curvature: mean_curvature_stats,
    })
}

/// Writes the report atomically as TOML.
pub fn write_report(report: &VerifyReport, path: &Path) -> Result<()> {
    super::atomic_write(path, &report.to_toml())
}
