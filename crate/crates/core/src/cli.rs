//! The `dotgroup` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 I/O or unreadable input, 4 geometry.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::geometry::delaunay;
use crate::grouping::{group_surface_thresholded, score_edges, GroupingError, Method};
use crate::io::{GroupingRecord, PointSetFile};
use crate::render::{
    inside_triangles, render_grouping, render_points, render_triangles, RenderMode,
};
use crate::retrieval::{retrieve, RetrievalError, DEFAULT_RETRIEVAL_CAP};
use crate::shapes::{
    builtin_db, builtin_shape, load_db, read_shape_file, sample_uniform, save_db, BuiltinShape,
    DenseOutline, ShapeDb, ShapeError, BUILTIN_DB_SHAPES,
};
use crate::sweep::{run_sweep, SweepConfig};

/// Dense point count used for `builtin:NAME` sources.
pub const BUILTIN_DENSITY: usize = 1000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Geometry(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Geometry(_) => 4,
        }
    }
}

impl From<ShapeError> for CliError {
    fn from(e: ShapeError) -> Self {
        match e {
            ShapeError::KTooSmall(_) => CliError::Usage("K must be at least 3".into()),
            ShapeError::KExceedsOutline { .. } | ShapeError::BadParameter(_) => {
                CliError::Usage(e.to_string())
            }
            ShapeError::InvalidOutline(_) => CliError::Geometry(e.to_string()),
            ShapeError::MalformedFile { .. }
            | ShapeError::DuplicateName(_)
            | ShapeError::Io { .. } => CliError::Io(e.to_string()),
        }
    }
}

impl From<GroupingError> for CliError {
    fn from(e: GroupingError) -> Self {
        match e {
            GroupingError::BadThreshold(_) => CliError::Usage(e.to_string()),
            _ => CliError::Geometry(e.to_string()),
        }
    }
}

impl From<RetrievalError> for CliError {
    fn from(e: RetrievalError) -> Self {
        match e {
            RetrievalError::UnknownShape(_) | RetrievalError::TooFewShapes(_) => {
                CliError::Usage(e.to_string())
            }
            RetrievalError::Shape(s) => s.into(),
            RetrievalError::Grouping(g) => g.into(),
            _ => CliError::Geometry(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dotgroup", version, about = "Group dots into shape boundaries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample K points uniformly from a shape outline.
    Sample {
        /// `builtin:NAME` or a shape file.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Group a point set and write the result record.
    Group {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value = "surface")]
        method: Method,
        /// Only remove edges flatter than this (surface only).
        #[arg(long)]
        stop_flatness: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Score every shape in a database over a range of K and write CSV.
    Sweep {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, default_value = "surface,mst", value_delimiter = ',')]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 10)]
        kmin: usize,
        #[arg(long, default_value_t = 200)]
        kmax: usize,
        #[arg(long, default_value_t = 10)]
        kstep: usize,
        #[arg(long, default_value_t = DEFAULT_RETRIEVAL_CAP)]
        cap: usize,
        /// Fill the runtime_ms column (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Find the smallest sample size at which a shape is retrievable.
    Retrieve {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = DEFAULT_RETRIEVAL_CAP)]
        cap: usize,
        /// Write the per-step log as JSON.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Draw a point set, its triangles, or a grouping result as SVG.
    Render {
        #[arg(long, conflicts_with = "shape")]
        points: Option<PathBuf>,
        #[arg(long, requires = "k")]
        shape: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mode: RenderMode,
        /// Grouping method for `--mode grouping`.
        #[arg(long, default_value = "surface")]
        method: Method,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the builtin shape database to a directory.
    InitDb {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = BUILTIN_DENSITY)]
        n: usize,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Sample { shape, k, out } => {
            let outline = load_shape_source(&shape)?;
            let sample = sample_uniform(&outline, k)?;
            write_file(&out, &PointSetFile::from_sample(&sample).to_json())
        }
        Command::Group {
            points,
            method,
            stop_flatness,
            out,
        } => {
            let file = read_points(&points)?;
            let mut record = match (method, stop_flatness) {
                (Method::Mst, Some(_)) => {
                    return Err(CliError::Usage(
                        "--stop-flatness applies only to --method surface".into(),
                    ))
                }
                (Method::Surface, Some(tau)) => {
                    GroupingRecord::from(&group_surface_thresholded(&file.points, tau)?)
                }
                (method, None) => GroupingRecord::from(&method.group(&file.points)?),
            };
            if let Some(truth) = file.truth_set() {
                let xi = score_edges(&record.edges, &truth)?;
                record.xi = Some(xi);
                writeln!(stdout, "xi={xi:.6}").map_err(|e| CliError::Io(e.to_string()))?;
            }
            write_file(&out, &record.to_json())
        }
        Command::Sweep {
            db,
            methods,
            kmin,
            kmax,
            kstep,
            cap,
            timing,
            out,
        } => {
            if kmin < 3 || kstep == 0 || kmin > kmax {
                return Err(CliError::Usage(format!(
                    "invalid grid: need 3 <= kmin <= kmax and kstep > 0 (got {kmin}, {kmax}, {kstep})"
                )));
            }
            let db = load_db(&db).map_err(|e| CliError::Io(e.to_string()))?;
            let config = SweepConfig {
                methods,
                grid: (kmin..=kmax).step_by(kstep).collect(),
                timing,
                retrieval_cap: cap,
                ..SweepConfig::default()
            };
            write_file(&out, &run_sweep(&db, &config).to_csv())
        }
        Command::Retrieve { db, id, cap, log } => {
            let db = load_db(&db).map_err(|e| CliError::Io(e.to_string()))?;
            let outcome = retrieve(&db, &id, cap)?;
            if let Some(path) = log {
                let text =
                    serde_json::to_string_pretty(&outcome).expect("retrieval log serializes");
                write_file(&path, &text)?;
            }
            let line = outcome
                .n
                .map_or("NO-TERMINATION".to_string(), |n| format!("n={n}"));
            writeln!(stdout, "{line}").map_err(|e| CliError::Io(e.to_string()))
        }
        Command::Render {
            points,
            shape,
            k,
            mode,
            method,
            out,
        } => {
            let (pts, outline) = match (points, shape, k) {
                (Some(path), None, _) => (read_points(&path)?.points, None),
                (None, Some(src), Some(k)) => {
                    let outline = load_shape_source(&src)?;
                    (sample_uniform(&outline, k)?.points, Some(outline))
                }
                _ => {
                    return Err(CliError::Usage(
                        "give either --points FILE or --shape SRC --k INT".into(),
                    ))
                }
            };
            let svg = match mode {
                RenderMode::Points => render_points(&pts),
                RenderMode::AllTriangles => {
                    let graph = delaunay(&pts).map_err(|e| CliError::Geometry(e.to_string()))?;
                    render_triangles(&pts, &graph.alive_triangles().collect::<Vec<_>>())
                }
                RenderMode::Triangles => {
                    let outline = outline.ok_or_else(|| {
                        CliError::Usage(
                            "--mode triangles needs the dense outline: use --shape".into(),
                        )
                    })?;
                    let graph = delaunay(&pts).map_err(|e| CliError::Geometry(e.to_string()))?;
                    render_triangles(&pts, &inside_triangles(&graph, outline.points()))
                }
                RenderMode::Grouping => render_grouping(&pts, &method.group(&pts)?.selected_edges),
            };
            write_file(&out, &svg)
        }
        Command::InitDb { out, n } => {
            let db = if n == BUILTIN_DENSITY {
                builtin_db()
            } else {
                let outlines = BUILTIN_DB_SHAPES
                    .iter()
                    .map(|&s| builtin_shape(s, n))
                    .collect::<Result<Vec<_>, _>>()?;
                ShapeDb::from_outlines(outlines)?
            };
            save_db(&db, &out)?;
            writeln!(stdout, "wrote {} shapes to {}", db.len(), out.display())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// `builtin:NAME` or a path to a shape file.
pub fn load_shape_source(source: &str) -> Result<DenseOutline, CliError> {
    match source.strip_prefix("builtin:") {
        Some(name) => {
            let kind: BuiltinShape = name
                .parse()
                .map_err(|e: ShapeError| CliError::Usage(e.to_string()))?;
            Ok(builtin_shape(kind, BUILTIN_DENSITY)?)
        }
        None => Ok(read_shape_file(Path::new(source))?.outline),
    }
}

fn read_points(path: &Path) -> Result<PointSetFile, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    PointSetFile::parse(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
