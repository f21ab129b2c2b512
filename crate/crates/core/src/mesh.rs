//! Export of sampled surfaces as CSV or JSON Lines.
//!
//! Numbers are written in scientific notation with 17 significant digits
//! (`{:.16e}`), negative zero is written as zero, and rows keep the grid
//! order, so identical inputs give byte-identical files. Missing values are
//! `nan` in CSV and `null` in JSON.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::simultaneity::SurfaceSample;

pub const CSV_HEADER: &str = "x1,x2,x3,x0,S4,l,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Csv,
    JsonLines,
}

/// Fixed-width scientific formatting with 17 significant digits.
pub fn format_number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn csv_field(x: Option<f64>) -> String {
    x.filter(|v| v.is_finite())
        .map_or_else(|| "nan".to_string(), format_number)
}

fn json_field(x: Option<f64>) -> String {
    x.filter(|v| v.is_finite())
        .map_or_else(|| "null".to_string(), format_number)
}

pub fn csv_row(s: &SurfaceSample) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        format_number(s.offset.x1),
        format_number(s.offset.x2),
        format_number(s.offset.x3),
        csv_field(s.x0),
        csv_field(s.s4),
        csv_field(s.l),
        s.status.as_str()
    )
}

pub fn json_row(s: &SurfaceSample) -> String {
    format!(
        "{{\"x1\":{},\"x2\":{},\"x3\":{},\"x0\":{},\"S4\":{},\"l\":{},\"status\":\"{}\"}}",
        format_number(s.offset.x1),
        format_number(s.offset.x2),
        format_number(s.offset.x3),
        json_field(s.x0),
        json_field(s.s4),
        json_field(s.l),
        s.status.as_str()
    )
}

pub fn write_mesh<W: Write>(mut out: W, samples: &[SurfaceSample], format: MeshFormat) -> io::Result<()> {
    if format == MeshFormat::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for s in samples {
        let row = match format {
            MeshFormat::Csv => csv_row(s),
            MeshFormat::JsonLines => json_row(s),
        };
        writeln!(out, "{row}")?;
    }
    out.flush()
}

pub fn render_mesh(samples: &[SurfaceSample], format: MeshFormat) -> String {
    let mut buf = Vec::new();
    write_mesh(&mut buf, samples, format).expect("writing to memory");
    String::from_utf8(buf).expect("mesh output is ASCII")
}

/// Writes through `fill` into a temporary sibling of `path`, then renames it
/// into place, so `path` never holds partial output.
pub fn write_atomic(path: &Path, fill: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> io::Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = path.with_file_name(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = fs::File::create(&tmp)
        .and_then(|f| {
            let mut w = io::BufWriter::new(f);
            fill(&mut w)?;
            w.flush()
        })
        .and_then(|_| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

pub fn write_mesh_file(path: &Path, samples: &[SurfaceSample], format: MeshFormat) -> io::Result<()> {
    write_atomic(path, |w| write_mesh(w, samples, format))
}
