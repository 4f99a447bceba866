//! Configuration ingestion and mesh/report emission.

pub mod config;
pub mod obj;
pub mod report;
pub mod table;

use std::path::Path;

use crate::error::{Error, Result};

/// Whole-file atomic write: the contents land in a sibling `.tmp` file
/// which is then renamed over the target.
pub(crate) fn atomic_write(path: &Path, contents: &str) -> Result<()> {
    let wrap = |source: std::io::Error| Error::Write {
        path: path.display().to_string(),
        source,
    };
    let mut tmp_name = path
        .file_name()
        .ok_or_else(|| wrap(std::io::Error::other("path has no file name")))?
        .to_os_string();
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    std::fs::write(&tmp, contents).map_err(wrap)?;
    std::fs::rename(&tmp, path).map_err(wrap)
}
