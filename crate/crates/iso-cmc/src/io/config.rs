//! TOML job configuration.
//!
//! A job file is a single TOML document:
//!
//! ```toml
//! mode = "generate"            # optional; must match the subcommand
//!
//! [surface]
//! family = "doubly-channel"    # doubly-channel | cylinder | delaunay
//! h = 1.0                      # mean curvature H
//! m = 6                        # M (channel, cylinder)
//! n = 2                        # N (channel, delaunay)
//! c = -0.5                     # c (delaunay)
//!
//! [grid]
//! m_min = -10
//! m_max = 10
//! n_min = -10
//! n_max = 10
//!
//! [input]
//! mesh = "in.obj"              # re-ingested by verify/curvature/export
//!
//! [output]
//! mesh = "out.obj"
//! report = "report.toml"
//! table = "curvature.csv"
//!
//! [labels]
//! scale = 1.0                  # multiplies the family's canonical labels
//!
//! [tolerances]                 # any subset; positive reals
//! holomorphic = 1e-9
//! ```
//!
//! Unknown keys are schema violations. Field requirements depend on the
//! mode and are checked when the job runs.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridDomain;
use crate::surfaces::{ExampleSpec, FamilyParams};

/// Execution mode; mirrored one-to-one by the CLI subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Generate,
    Weierstrass,
    Verify,
    Curvature,
    Export,
    Parallel,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Generate => "generate",
            Mode::Weierstrass => "weierstrass",
            Mode::Verify => "verify",
            Mode::Curvature => "curvature",
            Mode::Export => "export",
            Mode::Parallel => "parallel",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    DoublyChannel,
    Cylinder,
    Delaunay,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mode: Option<Mode>,
    surface: Option<RawSurface>,
    grid: Option<RawGrid>,
    input: Option<RawInput>,
    output: Option<RawOutput>,
    labels: Option<RawLabels>,
    tolerances: Option<RawTolerances>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    family: Family,
    h: Option<f64>,
    m: Option<i64>,
    n: Option<i64>,
    c: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    m_min: Option<i64>,
    m_max: Option<i64>,
    n_min: Option<i64>,
    n_max: Option<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    mesh: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    mesh: Option<PathBuf>,
    report: Option<PathBuf>,
    table: Option<PathBuf>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabels {
    scale: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    holomorphic: Option<f64>,
    closure: Option<f64>,
    dual: Option<f64>,
    coplanarity: Option<f64>,
    concircularity: Option<f64>,
    gauss_loop: Option<f64>,
    beta: Option<f64>,
    mean_curvature: Option<f64>,
    membership: Option<f64>,
}

/// Tolerance set used by the verification checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Cross-ratio residual, relative to the quad's label ratio.
    pub holomorphic: f64,
    /// Quad closure residual of 1-forms, relative to the increments.
    pub closure: f64,
    /// Christoffel-pair residual `|dh m dg - H|`, relative to `|H|`.
    pub dual: f64,
    /// Normalized tetrahedron volume per quad.
    pub coplanarity: f64,
    /// `|Im cr|` of the planar projections per quad.
    pub concircularity: f64,
    /// Gauss map loop-consistency residual per quad, relative to the
    /// Gauss map magnitude above unit scale.
    pub gauss_loop: f64,
    /// `|dN - beta dY|` residual per edge (absolute).
    pub beta: f64,
    /// Per-quad mean curvature deviation, relative to the target.
    pub mean_curvature: f64,
    /// Lightcone and isotropic-hyperplane membership (absolute).
    pub membership: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            holomorphic: 1e-9,
            closure: 1e-9,
            dual: 1e-9,
            coplanarity: 1e-9,
            concircularity: 1e-9,
            gauss_loop: 1e-10,
            beta: 1e-10,
            mean_curvature: 1e-9,
            membership: 1e-10,
        }
    }
}

impl Tolerances {
    /// Replaces every tolerance with one value (the CLI `--tol` flag).
    pub fn override_all(&mut self, tol: f64) {
        *self = Self {
            holomorphic: tol,
            closure: tol,
            dual: tol,
            coplanarity: tol,
            concircularity: tol,
            gauss_loop: tol,
            beta: tol,
            mean_curvature: tol,
            membership: tol,
        };
    }

    fn validate(&self) -> Result<()> {
        let fields = [
            ("tolerances.holomorphic", self.holomorphic),
            ("tolerances.closure", self.closure),
            ("tolerances.dual", self.dual),
            ("tolerances.coplanarity", self.coplanarity),
            ("tolerances.concircularity", self.concircularity),
            ("tolerances.gauss_loop", self.gauss_loop),
            ("tolerances.beta", self.beta),
            ("tolerances.mean_curvature", self.mean_curvature),
            ("tolerances.membership", self.membership),
        ];
        for (field, value) in fields {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::Config {
                    field: field.into(),
                    message: format!("must be a positive real, got {value}"),
                });
            }
        }
        Ok(())
    }
}

/// Surface selector of a job; parameter requirements depend on the
/// family and the mean curvature `H` on the mode, so they stay optional
/// until the job resolves them via [`SurfaceConfig::example_spec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceConfig {
    pub family: Family,
    pub mean_curvature: Option<f64>,
    pub m_div: Option<i64>,
    pub n_div: Option<i64>,
    pub c: Option<f64>,
}

impl SurfaceConfig {
    /// Resolves the family parameters into a validated [`ExampleSpec`],
    /// naming any missing field.
    pub fn example_spec(&self, domain: GridDomain) -> Result<ExampleSpec> {
        let require = |field: &str, value: Option<f64>| {
            value.ok_or_else(|| Error::Config {
                field: format!("surface.{field}"),
                message: "required for this mode and family".into(),
            })
        };
        let require_int = |field: &str, value: Option<i64>| {
            value.ok_or_else(|| Error::Config {
                field: format!("surface.{field}"),
                message: "required for this mode and family".into(),
            })
        };
        let mean_curvature = self.mean_curvature.ok_or_else(|| Error::Config {
            field: "surface.h".into(),
            message: "the mean curvature H is required for this mode".into(),
        })?;
        let params = match self.family {
            Family::DoublyChannel => FamilyParams::DoublyChannel {
                m_div: require_int("m", self.m_div)?,
                n_div: require_int("n", self.n_div)?,
            },
            Family::Cylinder => {
                let m_div = require_int("m", self.m_div)?;
                if let Some(n_div) = self.n_div {
                    if n_div != m_div {
                        return Err(Error::Config {
                            field: "surface.n".into(),
                            message: format!(
                                "a cylinder has M = N, got m = {m_div}, n = {n_div}"
                            ),
                        });
                    }
                }
                FamilyParams::Cylinder { m_div }
            }
            Family::Delaunay => FamilyParams::Delaunay {
                n_div: require_int("n", self.n_div)?,
                c: require("c", self.c)?,
            },
        };
        let spec = ExampleSpec { mean_curvature, params, domain };
        spec.validate()?;
        Ok(spec)
    }
}

/// Default output paths when the config leaves them unset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputPaths {
    pub mesh: PathBuf,
    pub report: PathBuf,
    pub table: PathBuf,
}

impl Default for OutputPaths {
    fn default() -> Self {
        Self {
            mesh: "out.obj".into(),
            report: "report.toml".into(),
            table: "curvature.csv".into(),
        }
    }
}

/// Validated job configuration with defaults filled.
#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub mode: Option<Mode>,
    pub surface: Option<SurfaceConfig>,
    pub domain: GridDomain,
    pub input_mesh: Option<PathBuf>,
    pub output: OutputPaths,
    pub label_scale: f64,
    pub tolerances: Tolerances,
}

impl JobConfig {
    /// Loads and validates a TOML job file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Parses a TOML job document.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config {
            field: "config".into(),
            message: e.to_string(),
        })?;

        let grid = raw.grid.unwrap_or(RawGrid {
            m_min: None,
            m_max: None,
            n_min: None,
            n_max: None,
        });
        let domain = GridDomain::new(
            grid.m_min.unwrap_or(0),
            grid.m_max.unwrap_or(10),
            grid.n_min.unwrap_or(0),
            grid.n_max.unwrap_or(10),
        )
        .map_err(|e| Error::Config {
            field: "grid".into(),
            message: e.to_string(),
        })?;

        let surface = raw.surface.map(|s| SurfaceConfig {
            family: s.family,
            mean_curvature: s.h,
            m_div: s.m,
            n_div: s.n,
            c: s.c,
        });

        let mut output = OutputPaths::default();
        if let Some(o) = raw.output {
            if let Some(p) = o.mesh {
                output.mesh = p;
            }
            if let Some(p) = o.report {
                output.report = p;
            }
            if let Some(p) = o.table {
                output.table = p;
            }
        }

        let label_scale = raw.labels.and_then(|l| l.scale).unwrap_or(1.0);
        if label_scale == 0.0 || !label_scale.is_finite() {
            return Err(Error::Config {
                field: "labels.scale".into(),
                message: format!("must be a nonzero real, got {label_scale}"),
            });
        }

        let mut tolerances = Tolerances::default();
        if let Some(t) = raw.tolerances {
            let d = &mut tolerances;
            if let Some(v) = t.holomorphic {
                d.holomorphic = v;
            }
            if let Some(v) = t.closure {
                d.closure = v;
            }
            if let Some(v) = t.dual {
                d.dual = v;
            }
            if let Some(v) = t.coplanarity {
                d.coplanarity = v;
            }
            if let Some(v) = t.concircularity {
                d.concircularity = v;
            }
            if let Some(v) = t.gauss_loop {
                d.gauss_loop = v;
            }
            if let Some(v) = t.beta {
                d.beta = v;
            }
            if let Some(v) = t.mean_curvature {
                d.mean_curvature = v;
            }
            if let Some(v) = t.membership {
                d.membership = v;
            }
        }
        tolerances.validate()?;

        Ok(JobConfig {
            mode: raw.mode,
            surface,
            domain,
            input_mesh: raw.input.and_then(|i| i.mesh),
            output,
            label_scale,
            tolerances,
        })
    }

    /// The surface section, required by most modes.
    pub fn surface_required(&self) -> Result<&SurfaceConfig> {
        self.surface.as_ref().ok_or_else(|| Error::Config {
            field: "surface".into(),
            message: "a [surface] section is required for this mode".into(),
        })
    }
}
