use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{DenseOutline, ShapeError};
use crate::geometry::Point2;
use crate::retrieval::{descriptor, Descriptor, DESCRIPTOR_LEN};

/// On-disk form of one database entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeFile {
    pub name: String,
    pub points: Vec<Point2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DbEntry {
    pub outline: DenseOutline,
    pub descriptor: Descriptor,
}

/// Named outlines with precomputed descriptors. Names are unique.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ShapeDb {
    entries: Vec<DbEntry>,
}

impl ShapeDb {
    pub fn new(entries: Vec<DbEntry>) -> Result<Self, ShapeError> {
        let mut names = BTreeSet::new();
        for e in &entries {
            if !names.insert(e.outline.name()) {
                return Err(ShapeError::DuplicateName(e.outline.name().to_string()));
            }
        }
        Ok(Self { entries })
    }

    /// Computes each descriptor from the full dense outline.
    pub fn from_outlines(outlines: Vec<DenseOutline>) -> Result<Self, ShapeError> {
        let entries = outlines
            .into_iter()
            .map(|outline| {
                let descriptor = descriptor(outline.points())
                    .map_err(|e| ShapeError::InvalidOutline(format!("{}: {e}", outline.name())))?;
                Ok(DbEntry {
                    outline,
                    descriptor,
                })
            })
            .collect::<Result<Vec<_>, ShapeError>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[DbEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.outline.name() == name)
    }

    pub fn get(&self, name: &str) -> Option<&DbEntry> {
        self.position(name).map(|i| &self.entries[i])
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.outline.name())
    }
}

/// Loads every `*.json` shape file in `dir`, in lexicographic filename
/// order. Files without a stored descriptor get one computed.
pub fn load_db(dir: &Path) -> Result<ShapeDb, ShapeError> {
    let io_err = |source| ShapeError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    paths.sort_by(|a, b| a.file_name().cmp(&b.file_name()));

    let entries = paths
        .iter()
        .map(|p| read_shape_file(p))
        .collect::<Result<Vec<_>, _>>()?;
    ShapeDb::new(entries)
}

/// Reads a single shape file, computing the descriptor if it is absent.
pub fn read_shape_file(path: &Path) -> Result<DbEntry, ShapeError> {
    let malformed = |reason: String| ShapeError::MalformedFile {
        path: path.to_path_buf(),
        reason,
    };
    let text = fs::read_to_string(path).map_err(|source| ShapeError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: ShapeFile = serde_json::from_str(&text).map_err(|e| malformed(e.to_string()))?;
    let outline =
        DenseOutline::new(file.name, file.points).map_err(|e| malformed(e.to_string()))?;
    let descriptor = match file.descriptor {
        Some(values) => {
            let values: [f64; DESCRIPTOR_LEN] = values.try_into().map_err(|v: Vec<f64>| {
                malformed(format!(
                    "descriptor has {} components, expected {DESCRIPTOR_LEN}",
                    v.len()
                ))
            })?;
            Descriptor::new(values).map_err(|e| malformed(e.to_string()))?
        }
        None => descriptor(outline.points()).map_err(|e| malformed(e.to_string()))?,
    };
    Ok(DbEntry {
        outline,
        descriptor,
    })
}

/// Writes one `<name>.json` file per entry, creating `dir` if needed.
pub fn save_db(db: &ShapeDb, dir: &Path) -> Result<(), ShapeError> {
    fs::create_dir_all(dir).map_err(|source| ShapeError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    for entry in &db.entries {
        let name = entry.outline.name();
        if name.contains(['/', '\\']) || name.starts_with('.') {
            return Err(ShapeError::BadParameter(format!(
                "{name:?} is not usable as a file name"
            )));
        }
        let file = ShapeFile {
            name: name.to_string(),
            points: entry.outline.points().to_vec(),
            descriptor: Some(entry.descriptor.values().to_vec()),
        };
        let path = dir.join(format!("{name}.json"));
        let text = serde_json::to_string_pretty(&file).expect("shape file serializes");
        fs::write(&path, text).map_err(|source| ShapeError::Io { path, source })?;
    }
    Ok(())
}
