//! The on-disk point-set format: a JSON document with `points` (array of
//! `[x, y, z]`), optional `radii` (positive, same length), and an optional
//! free-form `meta` object.
//!
//! Reading goes through serde; writing is hand-rendered so every float
//! carries 17 significant digits, which is exactly enough to reproduce an
//! f64 bit-for-bit on re-read.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetFile {
    pub points: Vec<[f64; 3]>,
    #[serde(default)]
    pub radii: Option<Vec<f64>>,
    #[serde(default)]
    pub meta: Option<serde_json::Value>,
}

impl PointSetFile {
    pub fn read(path: &Path) -> Result<PointSetFile> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file: PointSetFile =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(radii) = &file.radii {
            if radii.len() != file.points.len() {
                bail!("{}: {} points but {} radii", path.display(), file.points.len(), radii.len());
            }
        }
        for (k, p) in file.points.iter().enumerate() {
            if p.iter().any(|c| !c.is_finite()) {
                bail!("{}: point {k} has a non-finite coordinate", path.display());
            }
        }
        Ok(file)
    }
}

/// One f64 with 17 significant digits — enough for a bit-exact round trip.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders the document; LF line endings and a trailing newline.
pub fn render_point_set(
    points: &[[f64; 3]],
    radii: Option<&[f64]>,
    meta: Option<&serde_json::Value>,
) -> String {
    let mut out = String::from("{\n  \"points\": [\n");
    for (k, p) in points.iter().enumerate() {
        let comma = if k + 1 < points.len() { "," } else { "" };
        let _ =
            writeln!(out, "    [{}, {}, {}]{comma}", fmt_f64(p[0]), fmt_f64(p[1]), fmt_f64(p[2]));
    }
    out.push_str("  ]");
    if let Some(radii) = radii {
        out.push_str(",\n  \"radii\": [\n");
        for (k, r) in radii.iter().enumerate() {
            let comma = if k + 1 < radii.len() { "," } else { "" };
            let _ = writeln!(out, "    {}{comma}", fmt_f64(*r));
        }
        out.push_str("  ]");
    }
    if let Some(meta) = meta {
        out.push_str(",\n  \"meta\": ");
        out.push_str(&serde_json::to_string(meta).expect("meta serializes"));
    }
    out.push_str("\n}\n");
    out
}

pub fn write_point_set(
    path: &Path,
    points: &[[f64; 3]],
    radii: Option<&[f64]>,
    meta: Option<&serde_json::Value>,
) -> Result<()> {
    std::fs::write(path, render_point_set(points, radii, meta))
        .with_context(|| format!("writing {}", path.display()))
}
