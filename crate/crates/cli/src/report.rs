use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::config::Suite;
use crate::error::Result;

pub const VERSION: &str = concat!("twin-cli ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A budget or the wall-clock limit stopped the case.
    Resource,
    /// Statistical probe; recorded, never judged.
    Info,
}

/// How `value` is judged against `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
    /// The case passes or fails on structural checks recorded in `note`.
    Structural,
}

impl Relation {
    pub fn holds(self, value: f64, bound: f64) -> bool {
        match self {
            Relation::AtLeast => value >= bound,
            Relation::AtMost => value <= bound,
            Relation::Equal => value == bound,
            Relation::Structural => true,
        }
    }
}

/// A file written next to the report for a case that needs one.
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub file_name: String,
    pub contents: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub case_id: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub value: Option<f64>,
    pub bound: Option<f64>,
    pub relation: Relation,
    pub status: Status,
    pub witness_file: Option<String>,
    pub note: String,
    #[serde(skip)]
    pub artifact: Option<Artifact>,
}

impl CaseRecord {
    pub fn new(case_id: String, seed: u64, relation: Relation) -> Self {
        Self {
            case_id,
            params: BTreeMap::new(),
            seed,
            value: None,
            bound: None,
            relation,
            status: Status::Pass,
            witness_file: None,
            note: String::new(),
            artifact: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Sets value and bound and judges them; `problems` from structural checks
    /// also fail the case.
    pub fn judge(mut self, value: f64, bound: f64, problems: Vec<String>) -> Self {
        self.value = Some(value);
        self.bound = Some(bound);
        let ok = self.relation.holds(value, bound) && problems.is_empty();
        self.status = if ok { Status::Pass } else { Status::Fail };
        if !problems.is_empty() {
            self.note = join_note(&self.note, &problems.join("; "));
        }
        self
    }

    pub fn info(mut self, value: f64, bound: Option<f64>) -> Self {
        self.value = Some(value);
        self.bound = bound;
        self.status = Status::Info;
        self
    }

    pub fn resource(mut self, msg: impl std::fmt::Display) -> Self {
        self.status = Status::Resource;
        self.note = join_note(&self.note, &msg.to_string());
        self
    }

    pub fn failed(mut self, msg: impl std::fmt::Display) -> Self {
        self.status = Status::Fail;
        self.note = join_note(&self.note, &msg.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = join_note(&self.note, &note.into());
        self
    }

    pub fn with_artifact(mut self, file_name: String, contents: String) -> Self {
        self.witness_file = Some(file_name.clone());
        self.artifact = Some(Artifact { file_name, contents });
        self
    }

    /// Whether `status` agrees with `value`, `bound` and `relation`.
    pub fn is_consistent(&self) -> bool {
        match (self.status, self.value, self.bound) {
            (Status::Pass, Some(v), Some(b)) => self.relation.holds(v, b),
            (Status::Pass, _, _) => self.relation == Relation::Structural,
            _ => true,
        }
    }
}

fn join_note(old: &str, new: &str) -> String {
    if old.is_empty() {
        new.to_string()
    } else {
        format!("{old}; {new}")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub resource: usize,
    pub info: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: Suite,
    pub version: String,
    pub master_seed: u64,
    pub counts: Counts,
    pub records: Vec<CaseRecord>,
    /// Extra files written with the report, such as `tables.csv`.
    #[serde(skip)]
    pub attachments: Vec<Artifact>,
}

/// One row of `cases.csv`.
#[derive(Serialize)]
struct CsvRow<'a> {
    case_id: &'a str,
    params: String,
    seed: u64,
    value: String,
    bound: String,
    relation: Relation,
    status: Status,
    witness_file: &'a str,
    note: &'a str,
}

fn number(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl RunReport {
    pub fn new(suite: Suite, master_seed: u64, records: Vec<CaseRecord>) -> Self {
        let mut counts = Counts::default();
        for r in &records {
            match r.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Resource => counts.resource += 1,
                Status::Info => counts.info += 1,
            }
        }
        Self { suite, version: VERSION.to_string(), master_seed, counts, records, attachments: Vec::new() }
    }

    /// True iff some assertion-class case failed.
    pub fn has_failures(&self) -> bool {
        self.counts.fail > 0
    }

    pub fn record(&self, case_id: &str) -> Option<&CaseRecord> {
        self.records.iter().find(|r| r.case_id == case_id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Columns: `case_id,params,seed,value,bound,relation,status,witness_file,note`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            let params = r
                .params
                .iter()
                .map(|(k, v)| match v {
                    serde_json::Value::String(text) => format!("{k}={text}"),
                    other => format!("{k}={other}"),
                })
                .collect::<Vec<_>>()
                .join(";");
            w.serialize(CsvRow {
                case_id: &r.case_id,
                params,
                seed: r.seed,
                value: number(r.value),
                bound: number(r.bound),
                relation: r.relation,
                status: r.status,
                witness_file: r.witness_file.as_deref().unwrap_or(""),
                note: &r.note,
            })?;
        }
        let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Counts, then every failed or resource-limited case and every
    /// informational case that carries a note.
    pub fn summary(&self) -> String {
        let c = &self.counts;
        let mut s = String::new();
        let _ = writeln!(s, "suite {} ({}), master seed {}", self.suite.name(), self.version, self.master_seed);
        let _ = writeln!(s, "{:>8} {:>8} {:>8} {:>8}", "pass", "fail", "resource", "info");
        let _ = writeln!(s, "{:>8} {:>8} {:>8} {:>8}", c.pass, c.fail, c.resource, c.info);
        let listed = |r: &&CaseRecord| match r.status {
            Status::Pass => false,
            Status::Info => !r.note.is_empty(),
            Status::Fail | Status::Resource => true,
        };
        for r in self.records.iter().filter(listed) {
            let _ = writeln!(
                s,
                "{:<8} {}  value={} bound={} {}",
                format!("{:?}", r.status).to_lowercase(),
                r.case_id,
                number(r.value),
                number(r.bound),
                r.note
            );
        }
        s
    }

    /// Writes `report.json`, `cases.csv`, `summary.txt` and any witness files
    /// into `dir`, returning the paths written.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        let mut put = |name: &str, contents: &str| -> Result<()> {
            let path = dir.join(name);
            if let Some(parent) = path.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, contents)?;
            written.push(path);
            Ok(())
        };
        put("report.json", &self.to_json()?)?;
        put("cases.csv", &self.to_csv()?)?;
        put("summary.txt", &self.summary())?;
        let artifacts = self.records.iter().filter_map(|r| r.artifact.as_ref()).chain(&self.attachments);
        for a in artifacts {
            put(&a.file_name, &a.contents)?;
        }
        Ok(written)
    }
}
