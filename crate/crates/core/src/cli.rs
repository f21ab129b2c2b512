//! The `h4` command-line front end.
//!
//! Each subcommand prints records, one JSON object per line by default or
//! CSV with a header row. The `surface` subcommand writes a mesh instead,
//! CSV by default.
//!
//! Exit codes: 0 on success, 2 on domain or configuration errors, 3 on I/O
//! errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{cone_classify, to_isotropic, Event4, IsotropicEvent4};
use crate::error::Error;
use crate::kinematics::{velocity_modulus_h4, w_form, Velocity3, VelocityClass};
use crate::mesh::{format_number, write_atomic, write_mesh, MeshFormat};
use crate::metric::{
    fourth_root, interval2_minkowski, interval2_minkowski_isotropiclike, interval4_h4_orthonormal,
    interval4_minkowski, interval_h4_isotropic,
};
use crate::minkowski::{mink_distance_on_surface, mink_velocity_modulus};
use crate::simultaneity::{
    s4_on_surface, sample_flat_surface, sample_surface_with_tolerance, simultaneity_residual,
    simultaneity_x0, distance_h4, AxisRange, GridSpec, ObserverScale, SpatialOffset,
    DEFAULT_RESIDUAL_TOLERANCE,
};
use crate::transforms::{
    add_velocities, apply_group, group_from_velocity, inverse_group_from_velocity,
    modulus_after_boost, time_dilation_factor, FrameVelocity,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "h4", version, about = "Intervals, distances and frame changes in the Berwald-Moor space H4")]
pub struct Cli {
    /// Output format; records default to json, meshes to csv.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Residual tolerance for the simultaneity cubic, scaled by max(T^3, 1).
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Geometry {
    H4,
    Minkowski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Isotropic,
    Orthonormal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interval of a single event or displacement.
    #[command(allow_negative_numbers = true)]
    Interval {
        #[arg(long, value_enum, default_value = "h4")]
        geometry: Geometry,
        #[arg(long, value_enum, default_value = "orthonormal")]
        basis: Basis,
        #[arg(num_args = 4, value_names = ["C0", "C1", "C2", "C3"], required = true)]
        coords: Vec<f64>,
    },
    /// Distance from the time axis to the parallel world line at (x1, x2, x3).
    #[command(allow_negative_numbers = true)]
    Distance {
        #[arg(long = "T")]
        t: f64,
        #[arg(num_args = 3, value_names = ["X1", "X2", "X3"], required = true)]
        offset: Vec<f64>,
        #[arg(long, value_enum, default_value = "h4")]
        geometry: Geometry,
        /// Also report the distance back from the world line at -x.
        #[arg(long)]
        asymmetry: bool,
    },
    /// H4 and SR velocity moduli with the cone factors.
    #[command(allow_negative_numbers = true)]
    Speed {
        #[arg(num_args = 3, value_names = ["V1", "V2", "V3"], required = true)]
        v: Vec<f64>,
    },
    /// Transform events from a file by the frame change with velocity V.
    #[command(allow_negative_numbers = true)]
    Boost {
        #[arg(num_args = 3, value_names = ["V1", "V2", "V3"], required = true)]
        v: Vec<f64>,
        /// Whitespace-separated 4-tuples, one per line; `#` starts a comment.
        #[arg(long)]
        events: PathBuf,
        #[arg(long, value_enum, default_value = "forward")]
        direction: Direction,
    },
    /// Velocity v seen after the frame change with velocity V.
    #[command(allow_negative_numbers = true)]
    AddVelocities {
        #[arg(num_args = 6, value_names = ["v1", "v2", "v3", "V1", "V2", "V3"], required = true)]
        values: Vec<f64>,
    },
    /// Sample the simultaneity surface on a grid and write a mesh.
    #[command(allow_negative_numbers = true)]
    Surface {
        #[arg(long = "T")]
        t: f64,
        /// MIN:MAX:COUNT or a single value.
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        x1: AxisRange,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        x2: AxisRange,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        x3: AxisRange,
        #[arg(long, value_enum, default_value = "h4")]
        geometry: Geometry,
    },
}

/// A scalar in an output record.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Text(String),
    Null,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Null, Value::Num)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl Value {
    fn json(&self) -> String {
        match self {
            Value::Num(x) if x.is_finite() => format_number(*x),
            Value::Num(_) | Value::Null => "null".into(),
            Value::Text(s) => serde_json::to_string(s).expect("string serialization"),
        }
    }

    fn csv(&self) -> String {
        match self {
            Value::Num(x) if x.is_finite() => format_number(*x),
            Value::Num(_) | Value::Null => String::new(),
            Value::Text(s) => csv_escape(s),
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One command result: echoed inputs, outputs and a status word.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(String, Value)>,
    pub outputs: Vec<(String, Value)>,
    pub status: String,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            status: "ok".into(),
        }
    }

    fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.push((key.into(), v.into()));
        self
    }

    fn output(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.outputs.push((key.into(), v.into()));
        self
    }

    fn status(mut self, s: &str) -> Self {
        self.status = s.into();
        self
    }

    pub fn output_value(&self, key: &str) -> Option<&Value> {
        self.outputs.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> String {
        let obj = |fields: &[(String, Value)]| {
            let body: Vec<String> = fields
                .iter()
                .map(|(k, v)| format!("{}:{}", Value::Text(k.clone()).json(), v.json()))
                .collect();
            format!("{{{}}}", body.join(","))
        };
        format!(
            "{{\"command\":{},\"inputs\":{},\"outputs\":{},\"status\":{}}}",
            Value::Text(self.command.clone()).json(),
            obj(&self.inputs),
            obj(&self.outputs),
            Value::Text(self.status.clone()).json()
        )
    }

    pub fn csv_header(&self) -> String {
        let mut cols = vec!["command".to_string()];
        cols.extend(self.inputs.iter().map(|(k, _)| csv_escape(k)));
        cols.extend(self.outputs.iter().map(|(k, _)| csv_escape(k)));
        cols.push("status".into());
        cols.join(",")
    }

    pub fn to_csv(&self) -> String {
        let mut cols = vec![csv_escape(&self.command)];
        cols.extend(self.inputs.iter().map(|(_, v)| v.csv()));
        cols.extend(self.outputs.iter().map(|(_, v)| v.csv()));
        cols.push(csv_escape(&self.status));
        cols.join(",")
    }
}

/// Renders records as JSON Lines or as CSV with the first record's header.
pub fn render_records(records: &[OutputRecord], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => {
            for r in records {
                let _ = writeln!(s, "{}", r.to_json());
            }
        }
        Format::Csv => {
            if let Some(first) = records.first() {
                let _ = writeln!(s, "{}", first.csv_header());
            }
            for r in records {
                let _ = writeln!(s, "{}", r.to_csv());
            }
        }
    }
    s
}

#[derive(Debug)]
enum Failure {
    Domain(Error, Option<OutputRecord>),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e, None)
    }
}

enum Output {
    Records(Vec<OutputRecord>),
    Mesh(Vec<crate::simultaneity::SurfaceSample>),
}

fn with_record(rec: OutputRecord) -> impl FnOnce(Error) -> Failure {
    move |e| {
        let status = e.kind();
        Failure::Domain(e, Some(rec.status(status)))
    }
}

fn coords_input(rec: OutputRecord, names: &[&str], values: &[f64]) -> OutputRecord {
    names.iter().zip(values).fold(rec, |r, (n, v)| r.input(n, *v))
}

fn cmd_interval(geometry: Geometry, basis: Basis, c: &[f64]) -> Result<OutputRecord, Failure> {
    let names: &[&str] = match basis {
        Basis::Isotropic => &["xi1", "xi2", "xi3", "xi4"],
        Basis::Orthonormal => &["x0", "x1", "x2", "x3"],
    };
    let rec = coords_input(OutputRecord::new("interval"), names, c)
        .input("geometry", geometry_name(geometry))
        .input("basis", match basis {
            Basis::Isotropic => "isotropic",
            Basis::Orthonormal => "orthonormal",
        });
    let arr = [c[0], c[1], c[2], c[3]];
    match geometry {
        Geometry::H4 => {
            let xi = match basis {
                Basis::Isotropic => IsotropicEvent4::from_array(arr),
                Basis::Orthonormal => to_isotropic(Event4::from_array(arr)),
            };
            let class = cone_classify(xi).as_str();
            let s4 = match basis {
                Basis::Isotropic => interval_h4_isotropic(xi)
                    .map_err(with_record(rec.clone().output("cone", class)))?
                    .fourth_power,
                Basis::Orthonormal => interval4_h4_orthonormal(Event4::from_array(arr)),
            };
            if s4 < 0.0 {
                return Err(with_record(rec.output("S4", s4).output("cone", class))(
                    Error::NegativeQuarticForm { product: s4 },
                ));
            }
            Ok(rec
                .output("S", fourth_root(s4))
                .output("S4", s4)
                .output("cone", class))
        }
        Geometry::Minkowski => {
            let s2 = match basis {
                Basis::Orthonormal => interval2_minkowski(Event4::from_array(arr)),
                Basis::Isotropic => interval2_minkowski_isotropiclike(IsotropicEvent4::from_array(arr)),
            };
            let class = if s2 > 0.0 {
                "timelike"
            } else if s2 == 0.0 {
                "lightlike"
            } else {
                "spacelike"
            };
            let mut rec = rec.output("S", (s2 >= 0.0).then(|| s2.sqrt())).output("S2", s2);
            if basis == Basis::Orthonormal {
                rec = rec.output("S4", interval4_minkowski(Event4::from_array(arr)));
            }
            Ok(rec.output("class", class))
        }
    }
}

fn geometry_name(g: Geometry) -> &'static str {
    match g {
        Geometry::H4 => "h4",
        Geometry::Minkowski => "minkowski",
    }
}

fn cmd_distance(
    t: f64,
    c: &[f64],
    geometry: Geometry,
    asymmetry: bool,
    tolerance: f64,
) -> Result<OutputRecord, Failure> {
    let rec = coords_input(OutputRecord::new("distance").input("T", t), &["x1", "x2", "x3"], c)
        .input("geometry", geometry_name(geometry));
    let scale = ObserverScale::new(t).map_err(with_record(rec.clone()))?;
    let d = SpatialOffset::new(c[0], c[1], c[2]);
    match geometry {
        Geometry::H4 => {
            let x0 = simultaneity_x0(scale, d).map_err(with_record(rec.clone()))?;
            let s4 = s4_on_surface(scale, d, x0);
            let residual = simultaneity_residual(scale, d, x0);
            let with_point = rec.clone().output("x0", x0).output("S4", s4);
            if residual.abs() > tolerance * (t * t * t).max(1.0) {
                return Err(Failure::Domain(
                    Error::Domain(format!("cubic residual {residual:e} exceeds tolerance")),
                    Some(with_point.output("residual", residual).status("residual_exceeded")),
                ));
            }
            let l = distance_h4(scale, d).map_err(with_record(with_point.clone()))?;
            let mut out = with_point.output("l", l).output("residual", residual);
            if asymmetry {
                let back = distance_h4(scale, -d).map_err(with_record(out.clone()))?;
                out = out.output("l_reverse", back).output("l_difference", l - back);
            }
            Ok(out)
        }
        Geometry::Minkowski => {
            let l = mink_distance_on_surface(scale, d).map_err(with_record(rec.clone()))?;
            let s2 = (t - l) * (t + l);
            let mut out = rec.output("x0", 0.0).output("S2", s2).output("l", l);
            if asymmetry {
                let back = mink_distance_on_surface(scale, -d)?;
                out = out.output("l_reverse", back).output("l_difference", l - back);
            }
            Ok(out)
        }
    }
}

fn cmd_speed(c: &[f64]) -> OutputRecord {
    let v = Velocity3::new(c[0], c[1], c[2]);
    let w = w_form(v);
    let class = v.classify();
    let mut rec = coords_input(OutputRecord::new("speed"), &["v1", "v2", "v3"], c)
        .output("h4", velocity_modulus_h4(v).ok())
        .output("sr", mink_velocity_modulus(v))
        .output("W", w.w);
    for (k, f) in w.factors.iter().enumerate() {
        rec = rec.output(&format!("factor{}", k + 1), *f);
    }
    rec = rec.output("class", class.as_str());
    if class == VelocityClass::Superluminal {
        rec.status("superluminal")
    } else {
        rec
    }
}

fn parse_event_line(line: &str) -> Option<Result<Event4, String>> {
    let content = line.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return None;
    }
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 4 {
        return Some(Err(format!("expected 4 coordinates, found {}", fields.len())));
    }
    let mut x = [0.0; 4];
    for (slot, f) in x.iter_mut().zip(&fields) {
        match f.parse::<f64>() {
            Ok(v) if v.is_finite() => *slot = v,
            _ => return Some(Err(format!("invalid coordinate '{f}'"))),
        }
    }
    Some(Ok(Event4::from_array(x)))
}

fn cmd_boost(c: &[f64], events: &Path, direction: Direction) -> Result<Vec<OutputRecord>, Failure> {
    let frame = FrameVelocity::from_components(c[0], c[1], c[2])?;
    let g = match direction {
        Direction::Forward => group_from_velocity(frame),
        Direction::Inverse => inverse_group_from_velocity(frame),
    };
    let text = fs::read_to_string(events)
        .map_err(|e| Failure::Io(format!("cannot read events file {}: {e}", events.display())))?;
    let dir = match direction {
        Direction::Forward => "forward",
        Direction::Inverse => "inverse",
    };
    let mut records = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let Some(parsed) = parse_event_line(line) else {
            continue;
        };
        let base = OutputRecord::new("boost")
            .input("V1", c[0])
            .input("V2", c[1])
            .input("V3", c[2])
            .input("direction", dir)
            .input("line", (n + 1) as f64);
        let rec = match parsed {
            Ok(e) => {
                let x = apply_group(&g, e);
                coords_input(base, &["x0", "x1", "x2", "x3"], &e.to_array())
                    .output("x0", x.x0)
                    .output("x1", x.x1)
                    .output("x2", x.x2)
                    .output("x3", x.x3)
                    .output("S4_before", interval4_h4_orthonormal(e))
                    .output("S4_after", interval4_h4_orthonormal(x))
            }
            Err(msg) => {
                let mut r = base;
                for k in ["x0", "x1", "x2", "x3"] {
                    r = r.input(k, Value::Null);
                }
                for k in ["x0", "x1", "x2", "x3", "S4_before", "S4_after"] {
                    r = r.output(k, Value::Null);
                }
                r.output("error", msg.as_str()).status("malformed")
            }
        };
        records.push(rec);
    }
    Ok(records)
}

fn cmd_add_velocities(c: &[f64]) -> Result<OutputRecord, Failure> {
    let v = Velocity3::new(c[0], c[1], c[2]);
    let big = Velocity3::new(c[3], c[4], c[5]);
    let rec = coords_input(OutputRecord::new("add-velocities"), &["v1", "v2", "v3", "V1", "V2", "V3"], c);
    if v.classify() != VelocityClass::Subluminal {
        return Err(with_record(rec)(Error::Superluminal { min_factor: v.min_factor() }));
    }
    let frame = FrameVelocity::new(big).map_err(with_record(rec.clone()))?;
    let out = add_velocities(v, frame).map_err(with_record(rec.clone()))?;
    let modulus = modulus_after_boost(v, frame)?;
    let dilation = time_dilation_factor(v, frame)?;
    // SR reference for parallel v and V
    let cross = [
        v.v2 * big.v3 - v.v3 * big.v2,
        v.v3 * big.v1 - v.v1 * big.v3,
        v.v1 * big.v2 - v.v2 * big.v1,
    ];
    let sr = (cross.iter().all(|x| x.abs() <= 1e-15)).then(|| {
        let den = 1.0 + v.v1 * big.v1 + v.v2 * big.v2 + v.v3 * big.v3;
        [(v.v1 + big.v1) / den, (v.v2 + big.v2) / den, (v.v3 + big.v3) / den]
    });
    Ok(rec
        .output("v1'", out.v1)
        .output("v2'", out.v2)
        .output("v3'", out.v3)
        .output("modulus", modulus)
        .output("time_dilation", dilation)
        .output("sr_v1'", sr.map(|s| s[0]))
        .output("sr_v2'", sr.map(|s| s[1]))
        .output("sr_v3'", sr.map(|s| s[2]))
        .output("sr_modulus", sr.map(|s| (s[0] * s[0] + s[1] * s[1] + s[2] * s[2]).sqrt())))
}

fn cmd_surface(
    t: f64,
    axes: [AxisRange; 3],
    geometry: Geometry,
    tolerance: f64,
) -> Result<Vec<crate::simultaneity::SurfaceSample>, Failure> {
    let scale = ObserverScale::new(t)?;
    let grid = GridSpec::new(axes[0], axes[1], axes[2])?;
    Ok(match geometry {
        Geometry::H4 => sample_surface_with_tolerance(scale, &grid, tolerance),
        Geometry::Minkowski => sample_flat_surface(scale, &grid),
    })
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let tolerance = match cli.tolerance {
        Some(t) if t > 0.0 && t.is_finite() => t,
        Some(t) => return Err(Error::Config(format!("tolerance must be positive, got {t}")).into()),
        None => DEFAULT_RESIDUAL_TOLERANCE,
    };
    Ok(match &cli.command {
        Command::Interval { geometry, basis, coords } => {
            Output::Records(vec![cmd_interval(*geometry, *basis, coords)?])
        }
        Command::Distance { t, offset, geometry, asymmetry } => {
            Output::Records(vec![cmd_distance(*t, offset, *geometry, *asymmetry, tolerance)?])
        }
        Command::Speed { v } => Output::Records(vec![cmd_speed(v)]),
        Command::Boost { v, events, direction } => Output::Records(cmd_boost(v, events, *direction)?),
        Command::AddVelocities { values } => Output::Records(vec![cmd_add_velocities(values)?]),
        Command::Surface { t, x1, x2, x3, geometry } => {
            Output::Mesh(cmd_surface(*t, [*x1, *x2, *x3], *geometry, tolerance)?)
        }
    })
}

fn emit(cli: &Cli, out: &mut dyn Write, fill: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), String> {
    match &cli.out {
        Some(path) => write_atomic(path, fill).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => fill(out).map_err(|e| format!("cannot write output: {e}")),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_DOMAIN } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli);
    let (records, mesh, code) = match result {
        Ok(Output::Records(r)) => (Some(r), None, EXIT_OK),
        Ok(Output::Mesh(m)) => (None, Some(m), EXIT_OK),
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "h4: I/O error: {msg}");
            return EXIT_IO;
        }
        Err(Failure::Domain(e, rec)) => {
            let _ = writeln!(err, "h4: {}: {e}", e.kind());
            (rec.map(|r| vec![r]), None, EXIT_DOMAIN)
        }
    };
    let written = if let Some(samples) = mesh {
        let format = match cli.format {
            Some(Format::Json) => MeshFormat::JsonLines,
            _ => MeshFormat::Csv,
        };
        emit(&cli, out, |w| write_mesh(w, &samples, format))
    } else if let Some(records) = records {
        let text = render_records(&records, cli.format.unwrap_or(Format::Json));
        emit(&cli, out, |w| w.write_all(text.as_bytes()))
    } else {
        Ok(())
    };
    match written {
        Ok(()) => code,
        Err(msg) => {
            let _ = writeln!(err, "h4: I/O error: {msg}");
            EXIT_IO
        }
    }
}
