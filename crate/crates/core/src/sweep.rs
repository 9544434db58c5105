//! Full K sweeps over a shape database, written as CSV.

use std::time::Instant;

use rayon::prelude::*;

use crate::grouping::{grouping_score, Method};
use crate::retrieval::{m_from_trace, retrieve, DEFAULT_M_THRESHOLD, DEFAULT_RETRIEVAL_CAP};
use crate::shapes::{sample_uniform, ShapeDb};

pub const CSV_HEADER: &str = "shape,method,K,xi,hamiltonian,runtime_ms";
pub const SUMMARY_HEADER: &str = "shape,method,m,n";

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub methods: Vec<Method>,
    pub grid: Vec<usize>,
    /// Record wall-clock time per cell.
    pub timing: bool,
    pub retrieval_cap: usize,
    pub threshold: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            methods: vec![Method::Surface, Method::Mst],
            grid: (10..=200).step_by(10).collect(),
            timing: false,
            retrieval_cap: DEFAULT_RETRIEVAL_CAP,
            threshold: DEFAULT_M_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellScore {
    pub xi: f64,
    /// `None` for methods that do not produce a cycle.
    pub hamiltonian: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub shape: String,
    pub method: Method,
    pub k: usize,
    /// Error message when the cell could not be computed.
    pub outcome: Result<CellScore, String>,
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RetrievalSummary {
    NotApplicable,
    Found(usize),
    NoTermination,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub shape: String,
    pub method: Method,
    pub m: Option<usize>,
    pub n: RetrievalSummary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
    pub summary: Vec<SweepSummary>,
}

fn method_key(m: Method) -> &'static str {
    m.name()
}

fn run_cell(db: &ShapeDb, shape: usize, method: Method, k: usize, timing: bool) -> SweepRecord {
    let outline = &db.entries()[shape].outline;
    let start = Instant::now();
    let outcome = (|| {
        let sample = sample_uniform(outline, k).map_err(|e| e.to_string())?;
        let result = method.group(&sample.points).map_err(|e| e.to_string())?;
        let xi = grouping_score(&result, &sample).map_err(|e| e.to_string())?;
        let hamiltonian = (method == Method::Surface).then_some(result.hamiltonian);
        Ok(CellScore { xi, hamiltonian })
    })();
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    SweepRecord {
        shape: outline.name().to_string(),
        method,
        k,
        outcome,
        runtime_ms: timing.then_some(elapsed),
    }
}

/// Scores every `(shape, method, K)` cell, then derives m per shape and
/// method and the retrievable sample size per shape.
pub fn run_sweep(db: &ShapeDb, config: &SweepConfig) -> SweepReport {
    let mut grid = config.grid.clone();
    grid.sort_unstable();
    grid.dedup();
    let mut methods = config.methods.clone();
    methods.sort_by_key(|&m| method_key(m));
    methods.dedup();

    let mut cells = Vec::with_capacity(db.len() * methods.len() * grid.len());
    for s in 0..db.len() {
        for &m in &methods {
            cells.extend(grid.iter().map(|&k| (s, m, k)));
        }
    }
    let mut records: Vec<SweepRecord> = cells
        .par_iter()
        .map(|&(s, m, k)| run_cell(db, s, m, k, config.timing))
        .collect();
    records.sort_by(|a, b| {
        (a.shape.as_str(), method_key(a.method), a.k).cmp(&(
            b.shape.as_str(),
            method_key(b.method),
            b.k,
        ))
    });

    let mut names: Vec<&str> = db.names().collect();
    names.sort_unstable();
    let retrievals: Vec<RetrievalSummary> = names
        .par_iter()
        .map(|name| {
            if !methods.contains(&Method::Surface) || db.len() < 2 {
                return RetrievalSummary::NotApplicable;
            }
            match retrieve(db, name, config.retrieval_cap) {
                Ok(outcome) => outcome
                    .n
                    .map_or(RetrievalSummary::NoTermination, RetrievalSummary::Found),
                Err(e) => RetrievalSummary::Failed(e.to_string()),
            }
        })
        .collect();

    let mut summary = Vec::new();
    for (name, retrieval) in names.iter().zip(retrievals) {
        for &method in &methods {
            // Failed cells count as falling below the threshold.
            let trace: Vec<(usize, f64)> = records
                .iter()
                .filter(|r| r.shape == *name && r.method == method)
                .map(|r| (r.k, r.outcome.as_ref().map_or(f64::NEG_INFINITY, |c| c.xi)))
                .collect();
            summary.push(SweepSummary {
                shape: name.to_string(),
                method,
                m: m_from_trace(&trace, config.threshold),
                n: if method == Method::Surface {
                    retrieval.clone()
                } else {
                    RetrievalSummary::NotApplicable
                },
            });
        }
    }
    SweepReport { records, summary }
}

fn write_block<I, R>(header: &str, rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(header.split(',')).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

impl SweepReport {
    /// Rows, then a blank line and the summary block. An empty report is
    /// the header line alone.
    pub fn to_csv(&self) -> String {
        let rows = self.records.iter().map(|r| {
            let (xi, ham) = match &r.outcome {
                Ok(c) => (
                    format!("{:.6}", c.xi),
                    c.hamiltonian.map_or("n/a".to_string(), |h| h.to_string()),
                ),
                Err(e) => (format!("ERROR: {e}"), "n/a".to_string()),
            };
            let runtime = r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default();
            [
                r.shape.clone(),
                r.method.to_string(),
                r.k.to_string(),
                xi,
                ham,
                runtime,
            ]
        });
        let mut out = write_block(CSV_HEADER, rows);
        if self.records.is_empty() && self.summary.is_empty() {
            return out;
        }
        let summary = self.summary.iter().map(|s| {
            let n = match &s.n {
                RetrievalSummary::NotApplicable => "-".to_string(),
                RetrievalSummary::Found(n) => n.to_string(),
                RetrievalSummary::NoTermination => "NO-TERMINATION".to_string(),
                RetrievalSummary::Failed(e) => format!("ERROR: {e}"),
            };
            [
                s.shape.clone(),
                s.method.to_string(),
                s.m.map_or("NA".to_string(), |m| m.to_string()),
                n,
            ]
        });
        out.push('\n');
        out.push_str(&write_block(SUMMARY_HEADER, summary));
        out
    }

    /// Mean score over shapes for one method at each grid size, skipping
    /// failed cells.
    pub fn mean_xi(&self, method: Method) -> Vec<(usize, f64)> {
        let mut by_k: std::collections::BTreeMap<usize, (f64, usize)> = Default::default();
        for r in self.records.iter().filter(|r| r.method == method) {
            if let Ok(c) = &r.outcome {
                let slot = by_k.entry(r.k).or_default();
                slot.0 += c.xi;
                slot.1 += 1;
            }
        }
        by_k.into_iter()
            .map(|(k, (sum, n))| (k, sum / n as f64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{builtin_shape, BuiltinShape};

    fn small_db() -> ShapeDb {
        ShapeDb::from_outlines(vec![
            builtin_shape(BuiltinShape::Square, 200).unwrap(),
            builtin_shape(BuiltinShape::Circle, 200).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn empty_db_is_header_only() {
        let db = ShapeDb::new(Vec::new()).unwrap();
        let report = run_sweep(&db, &SweepConfig::default());
        assert_eq!(report.to_csv(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn rows_are_sorted_and_complete() {
        let config = SweepConfig {
            grid: vec![30, 10, 20],
            ..SweepConfig::default()
        };
        let report = run_sweep(&small_db(), &config);
        let keys: Vec<(String, &str, usize)> = report
            .records
            .iter()
            .map(|r| (r.shape.clone(), r.method.name(), r.k))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(keys.len(), 2 * 2 * 3);
        assert_eq!(keys[0], ("circle".to_string(), "mst", 10));
        assert!(report.records.iter().all(|r| r.runtime_ms.is_none()));
    }

    #[test]
    fn summary_block_follows_blank_line() {
        let config = SweepConfig {
            grid: vec![30, 40],
            ..SweepConfig::default()
        };
        let csv = run_sweep(&small_db(), &config).to_csv();
        let (rows, summary) = csv.split_once("\n\n").unwrap();
        assert_eq!(rows.lines().count(), 1 + 8);
        let summary: Vec<&str> = summary.lines().collect();
        assert_eq!(summary[0], SUMMARY_HEADER);
        assert_eq!(summary.len(), 1 + 4);
        assert!(summary[1].starts_with("circle,mst,"));
        assert!(summary[1].ends_with(",-"));
        assert_eq!(summary[2], "circle,surface,30,30");
    }

    #[test]
    fn bad_cells_are_marked_in_row() {
        let config = SweepConfig {
            grid: vec![2, 30],
            methods: vec![Method::Surface],
            ..SweepConfig::default()
        };
        let report = run_sweep(&small_db(), &config);
        assert!(report.records[0].outcome.is_err());
        assert!(report
            .to_csv()
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("circle,surface,2,\"ERROR: K must be at least 3"));
    }
}
