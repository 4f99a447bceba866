//! Command-line driver: one subcommand per job mode, each reading a
//! TOML configuration.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage or
//! configuration errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::holomorphic::{christoffel_dual, HolomorphicGrid};
use crate::io::config::{JobConfig, Mode};
use crate::io::{obj, report, table};
use crate::minkowski::IsoPoint;
use crate::surfaces::{parallel_surface, ExampleSpec};
use crate::weierstrass::{cmc_oneform, SurfaceNet};

#[derive(Debug, Parser)]
#[command(
    name = "iso-cmc",
    version,
    about = "Discrete cmc surfaces in isotropic 3-space: generate, verify, and export quad nets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a closed-form family net and write it as OBJ
    Generate(JobArgs),
    /// Integrate the family's Weierstrass 1-form and write the net as OBJ
    Weierstrass(JobArgs),
    /// Run all verification checks and write a TOML report
    Verify(JobArgs),
    /// Write the per-quad curvature table as CSV
    Curvature(JobArgs),
    /// Write a net as OBJ, re-ingesting an input mesh when configured
    Export(JobArgs),
    /// Generate the parallel surface of a family net and write it as OBJ
    Parallel(JobArgs),
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Path to the TOML job configuration
    #[arg(long)]
    pub config: PathBuf,
    /// Override the mode's primary output path
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override every tolerance with one value
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
}

/// Runs the parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let (mode, args) = match cli.command {
        Command::Generate(a) => (Mode::Generate, a),
        Command::Weierstrass(a) => (Mode::Weierstrass, a),
        Command::Verify(a) => (Mode::Verify, a),
        Command::Curvature(a) => (Mode::Curvature, a),
        Command::Export(a) => (Mode::Export, a),
        Command::Parallel(a) => (Mode::Parallel, a),
    };
    match execute(mode, &args) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Loads the configuration, applies command-line overrides, and runs
/// the job.
pub fn execute(mode: Mode, args: &JobArgs) -> Result<Outcome> {
    let mut config = JobConfig::load(&args.config)?;
    if let Some(declared) = config.mode {
        if declared != mode {
            return Err(Error::Config {
                field: "mode".into(),
                message: format!(
                    "config declares mode `{}` but subcommand `{}` was invoked",
                    declared.name(),
                    mode.name()
                ),
            });
        }
    }
    if let Some(tol) = args.tol {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::Config {
                field: "--tol".into(),
                message: format!("must be a positive real, got {tol}"),
            });
        }
        config.tolerances.override_all(tol);
    }
    if let Some(out) = &args.out {
        match mode {
            Mode::Verify => config.output.report = out.clone(),
            Mode::Curvature => config.output.table = out.clone(),
            _ => config.output.mesh = out.clone(),
        }
    }
    dispatch(mode, &config)
}

fn dispatch(mode: Mode, config: &JobConfig) -> Result<Outcome> {
    match mode {
        Mode::Generate => {
            let spec = config.surface_required()?.example_spec(config.domain)?;
            let net = spec.closed_form()?;
            obj::write_obj(&net, &config.output.mesh)?;
            println!("wrote {}", config.output.mesh.display());
            Ok(Outcome::Success)
        }
        Mode::Weierstrass => {
            let spec = config.surface_required()?.example_spec(config.domain)?;
            let net = pipeline_net(&spec, config)?;
            obj::write_obj(&net, &config.output.mesh)?;
            println!("wrote {}", config.output.mesh.display());
            Ok(Outcome::Success)
        }
        Mode::Verify => {
            let spec = config.surface_required()?.example_spec(config.domain)?;
            let (g, h) = family_data(&spec, config)?;
            let net = source_net(&spec, config)?;
            let rep =
                report::verify_net(&net, &g, &h, spec.mean_curvature, &config.tolerances)?;
            report::write_report(&rep, &config.output.report)?;
            for line in rep.summary_lines() {
                println!("{line}");
            }
            println!("report written to {}", config.output.report.display());
            if rep.overall_pass {
                Ok(Outcome::Success)
            } else {
                println!("failed checks: {}", rep.failed_checks.join(", "));
                Ok(Outcome::VerificationFailed)
            }
        }
        Mode::Curvature => {
            let spec = config.surface_required()?.example_spec(config.domain)?;
            let (g, h) = family_data(&spec, config)?;
            let net = source_net(&spec, config)?;
            let gauss = crate::curvature::gauss_closed_form(&g, &h)?;
            table::write_curvature_table(&net, &gauss, &config.output.table)?;
            println!("wrote {}", config.output.table.display());
            Ok(Outcome::Success)
        }
        Mode::Export => {
            let net = if let Some(path) = &config.input_mesh {
                obj::read_obj(path, config.domain)?
            } else {
                let spec = config.surface_required()?.example_spec(config.domain)?;
                spec.closed_form()?
            };
            obj::write_obj(&net, &config.output.mesh)?;
            println!("wrote {}", config.output.mesh.display());
            Ok(Outcome::Success)
        }
        Mode::Parallel => {
            let spec = config.surface_required()?.example_spec(config.domain)?;
            let y = spec.closed_form()?;
            let nu = spec.gauss_map()?.nu(config.tolerances.membership)?;
            let parallel = parallel_surface(&y, &nu, spec.mean_curvature)?;
            obj::write_obj(&parallel, &config.output.mesh)?;
            println!("wrote {}", config.output.mesh.display());
            Ok(Outcome::Success)
        }
    }
}

/// Weierstrass data of the family, rescaled when `labels.scale` is not
/// one; the rescaled dual is integrated from the canonical one.
fn family_data(
    spec: &ExampleSpec,
    config: &JobConfig,
) -> Result<(HolomorphicGrid, HolomorphicGrid)> {
    let (g, h) = spec.weierstrass_data()?;
    if config.label_scale == 1.0 {
        return Ok((g, h));
    }
    let g = g.with_labels(g.labels().scaled(config.label_scale)?)?;
    let base = (spec.domain.m_min(), spec.domain.n_min());
    let base_value = h.value(base.0, base.1)? / config.label_scale;
    let h = christoffel_dual(
        &g,
        spec.mean_curvature,
        base,
        base_value,
        config.tolerances.closure,
    )?;
    Ok((g, h))
}

/// The fully recursive route: Christoffel dual by integration, cmc
/// 1-form, integration into a net anchored at the closed form (origin
/// when the labels are rescaled away from the family normalization).
fn pipeline_net(spec: &ExampleSpec, config: &JobConfig) -> Result<SurfaceNet> {
    let (g, h_closed) = spec.weierstrass_data()?;
    let scale = config.label_scale;
    let g = if scale == 1.0 {
        g
    } else {
        g.with_labels(g.labels().scaled(scale)?)?
    };
    let base = (spec.domain.m_min(), spec.domain.n_min());
    let base_value = h_closed.value(base.0, base.1)? / scale;
    let h = christoffel_dual(
        &g,
        spec.mean_curvature,
        base,
        base_value,
        config.tolerances.closure,
    )?;
    let form = cmc_oneform(&g, &h, spec.mean_curvature, config.tolerances.dual)?;
    let base_point = if scale == 1.0 {
        spec.closed_form_point(base.0, base.1)?
    } else {
        IsoPoint::ORIGIN
    };
    form.integrate(base, base_point, config.tolerances.closure)
}

/// Net under inspection: a re-ingested mesh when configured, otherwise
/// the closed form (or the pipeline net when the labels are rescaled).
fn source_net(spec: &ExampleSpec, config: &JobConfig) -> Result<SurfaceNet> {
    if let Some(path) = &config.input_mesh {
        obj::read_obj(path, config.domain)
    } else if config.label_scale == 1.0 {
        spec.closed_form()
    } else {
        pipeline_net(spec, config)
    }
}
