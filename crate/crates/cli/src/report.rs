//! Output plumbing: artifact directory handling, two-decimal rounding for
//! the ratio tables, and small text tables.

use std::fs;
use std::path::{Path, PathBuf};

use crate::CliError;

pub struct OutputContext {
    dir: PathBuf,
}

impl OutputContext {
    pub fn new(dir: &Path) -> Self {
        Self {
            dir: dir.to_path_buf(),
        }
    }

    /// Writes one artifact, creating the output directory on first use.
    pub fn write(&self, name: &str, contents: &str) -> Result<PathBuf, CliError> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| CliError::Config(format!("cannot create {:?}: {e}", self.dir)))?;
        let path = self.dir.join(name);
        fs::write(&path, contents)
            .map_err(|e| CliError::Config(format!("cannot write {path:?}: {e}")))?;
        println!("wrote {}", path.display());
        Ok(path)
    }
}

/// Rounds half away from zero at two decimals, matching the published
/// tables' formatting.
pub fn round2(v: f64) -> f64 {
    (v * 100.0).round() / 100.0
}

pub fn fmt2(v: f64) -> String {
    format!("{:.2}", round2(v))
}

/// Renders an aligned text table with one header row.
pub fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(cell.len());
            }
        }
    }
    let render = |cells: &[String]| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = render(header);
    out.push('\n');
    out.push_str(&"-".repeat(out.len().saturating_sub(1)));
    out.push('\n');
    for row in rows {
        out.push_str(&render(row));
        out.push('\n');
    }
    out
}
