use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use chiforge_core::{write_graph6, Graph, VertexWeights};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Failures kept in a report; the count covers all of them.
pub const MAX_RECORDED_FAILURES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub detail: String,
}

impl Failure {
    pub fn new(g: &Graph, detail: impl Into<String>) -> Self {
        Failure { graph6: write_graph6(g), weights: None, detail: detail.into() }
    }

    pub fn weighted(g: &Graph, q: &VertexWeights, detail: impl Into<String>) -> Self {
        Failure { graph6: write_graph6(g), weights: Some(q.as_slice().to_vec()), detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub omega: u32,
    pub max_chi: u32,
    pub witness_graph6: String,
    /// Largest order considered, for per-order tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// Which class of a comparison the row belongs to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
}

/// Outcome of one sweep. `passed` is true exactly when `failure_count` is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub source: String,
    pub checked: u64,
    pub passed: bool,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub table: Vec<TableRow>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn new(theorem: &str, source: impl Into<String>, tally: Tally, table: Vec<TableRow>) -> Self {
        VerificationReport {
            theorem: theorem.to_string(),
            source: source.into(),
            checked: tally.checked,
            passed: tally.failure_count == 0,
            failure_count: tally.failure_count,
            failures: tally.failures,
            table,
            notes: Vec::new(),
            seed: None,
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| HarnessError::Encode(e.to_string()))
    }

    /// The extremal table as `omega,max_chi,witness_graph6` (plus `n` and
    /// `side` columns when any row carries them).
    pub fn to_csv(&self) -> Result<String> {
        let extra = self.table.iter().any(|r| r.n.is_some() || r.side.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let enc = |e: csv::Error| HarnessError::Encode(e.to_string());
        if extra {
            w.write_record(["omega", "max_chi", "witness_graph6", "n", "side"]).map_err(enc)?;
        } else {
            w.write_record(["omega", "max_chi", "witness_graph6"]).map_err(enc)?;
        }
        for r in &self.table {
            let mut rec = vec![r.omega.to_string(), r.max_chi.to_string(), r.witness_graph6.clone()];
            if extra {
                rec.push(r.n.map(|n| n.to_string()).unwrap_or_default());
                rec.push(r.side.clone().unwrap_or_default());
            }
            w.write_record(&rec).map_err(enc)?;
        }
        let bytes = w.into_inner().map_err(|e| HarnessError::Encode(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of ASCII fields"))
    }

    /// Writes `<theorem>.json` and `<theorem>.csv` into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<(PathBuf, PathBuf)> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| HarnessError::Io { path, source }
        };
        std::fs::create_dir_all(dir).map_err(io(dir))?;
        let stem: String = self
            .theorem
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
            .collect();
        let json = dir.join(format!("{stem}.json"));
        let csv = dir.join(format!("{stem}.csv"));
        std::fs::write(&json, self.to_json()? + "\n").map_err(io(&json))?;
        std::fs::write(&csv, self.to_csv()?).map_err(io(&csv))?;
        Ok((json, csv))
    }
}

/// Accumulator shared by the sweeps; merging is commutative so parallel
/// folds give identical reports.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub failure_count: u64,
    /// Sorted, at most [`MAX_RECORDED_FAILURES`] of them.
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn check(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, f: Failure) {
        self.failure_count += 1;
        let at = self.failures.binary_search(&f).unwrap_or_else(|i| i);
        if at < MAX_RECORDED_FAILURES {
            self.failures.insert(at, f);
            self.failures.truncate(MAX_RECORDED_FAILURES);
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.failures.truncate(MAX_RECORDED_FAILURES);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Best {
    chi: u32,
    n: usize,
    graph6: String,
}

/// Per-ω maximum of χ with a canonical witness: among graphs attaining the
/// maximum, the one with fewest vertices, then the smallest graph6 string.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Extremal {
    rows: BTreeMap<u32, Best>,
}

impl Extremal {
    pub fn observe(&mut self, omega: u32, chi: u32, g: &Graph) {
        let better = match self.rows.get(&omega) {
            None => true,
            Some(b) => {
                chi > b.chi || (chi == b.chi && (g.n() < b.n || (g.n() == b.n && write_graph6(g) < b.graph6)))
            }
        };
        if better {
            self.rows.insert(omega, Best { chi, n: g.n(), graph6: write_graph6(g) });
        }
    }

    pub fn merge(mut self, other: Extremal) -> Extremal {
        for (omega, b) in other.rows {
            let keep = match self.rows.get(&omega) {
                None => true,
                Some(a) => (b.chi, std::cmp::Reverse((b.n, &b.graph6))) > (a.chi, std::cmp::Reverse((a.n, &a.graph6))),
            };
            if keep {
                self.rows.insert(omega, b);
            }
        }
        self
    }

    pub fn max_chi(&self, omega: u32) -> Option<u32> {
        self.rows.get(&omega).map(|b| b.chi)
    }

    pub fn witness(&self, omega: u32) -> Option<&str> {
        self.rows.get(&omega).map(|b| b.graph6.as_str())
    }

    pub fn omegas(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.rows
            .iter()
            .map(|(&omega, b)| TableRow {
                omega,
                max_chi: b.chi,
                witness_graph6: b.graph6.clone(),
                n: None,
                side: None,
            })
            .collect()
    }
}
