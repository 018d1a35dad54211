//! Case expansion and execution for every suite.
//!
//! Case ids look like `guarantees/builder=general/n=40/r=2/i=3/seed=…`: the
//! suite name followed by `key=value` parts. Per-case seeds are derived from
//! the master seed and the case's grid coordinates (never its position in the
//! run), so growing a grid does not move existing cases.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use twin_core::builder::{binary_bound, build_twin_binary, build_twin_general, general_bound, BuildOutcome};
use twin_core::constructions::{
    check_twin_bound, composite_coloring, decompose_composite_twin, verify_block_claims, BlockProfile, CompositeSpec,
};
use twin_core::io::write_coloring;
use twin_core::oracle::{exact_f, exact_f_string, exact_f_weak, fold_twins, ColoringRule};
use twin_core::random::{case_seed, permutation_with, random_coloring, rng};
use twin_core::sequences::lcs_length;
use twin_core::{validate_twin, Color, EdgeColoring, LetterString, TwinError, TwinPair};

use crate::config::{Budgets, Suite, SuiteConfig};
use crate::error::{HarnessError, Result};
use crate::report::{Artifact, CaseRecord, Relation, RunReport};

/// Block profiles longer than this are refused by the block-claims suite.
pub const MAX_BLOCK_PROFILE_LEN: usize = 15;

/// Composite colorings up to this size have every twin decomposed; larger
/// ones only the maximum witness and its mirror.
pub const FULL_DECOMPOSITION_MAX_N: usize = 12;

/// Mixes grid coordinates into the master seed one at a time.
pub fn derive_seed(master: u64, coords: &[u64]) -> u64 {
    coords.iter().fold(master, |s, &c| case_seed(s, c))
}

fn case_id(suite: Suite, parts: &[(&str, String)]) -> String {
    let mut id = suite.name().to_string();
    for (k, v) in parts {
        id.push('/');
        id.push_str(k);
        id.push('=');
        id.push_str(v);
    }
    id
}

fn parse_case_id(id: &str) -> Result<(Suite, BTreeMap<String, String>)> {
    let bad = || HarnessError::CaseId(id.to_string());
    let mut parts = id.split('/');
    let suite = parts.next().and_then(Suite::from_name).ok_or_else(bad)?;
    let mut map = BTreeMap::new();
    for part in parts {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        map.insert(k.to_string(), v.to_string());
    }
    Ok((suite, map))
}

fn field<T: std::str::FromStr>(id: &str, map: &BTreeMap<String, String>, key: &str) -> Result<T> {
    map.get(key).and_then(|v| v.parse().ok()).ok_or_else(|| HarnessError::CaseId(id.to_string()))
}

fn witness_name(case_id: &str) -> String {
    let safe: String = case_id.chars().map(|c| if c.is_ascii_alphanumeric() || c == '=' { c } else { '_' }).collect();
    format!("witnesses/{safe}.json")
}

fn artifact_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("artifact serializes")
}

/// Runs `run` on every case in order on the current pool; cases that have
/// not started when the wall-clock limit passes become resource records.
fn run_cases<K: Sync>(
    keys: &[K],
    budgets: &Budgets,
    placeholder: impl Fn(&K) -> CaseRecord + Sync,
    run: impl Fn(&K) -> CaseRecord + Sync,
) -> Vec<CaseRecord> {
    let start = Instant::now();
    let limit = budgets.wall_clock_secs as f64;
    keys.par_iter()
        .map(|k| {
            if start.elapsed().as_secs_f64() > limit {
                placeholder(k).resource(format!("wall-clock limit of {limit} s reached before the case started"))
            } else {
                run(k)
            }
        })
        .collect()
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| std::io::Error::other(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Validates `config` and runs its suite, optionally on `jobs` worker threads.
pub fn run_suite(config: &SuiteConfig, jobs: Option<usize>) -> Result<RunReport> {
    config.validate()?;
    in_pool(jobs, || match config.suite {
        Suite::Guarantees => cmd_guarantees(config),
        Suite::Tables => cmd_tables(config),
        Suite::Twinbound => cmd_twinbound(config),
        Suite::LcsTail => cmd_lcs_tail(config),
        Suite::Blockclaims => cmd_blockclaims(config),
    })?
}

/// Re-runs a single case from its id.
pub fn replay(id: &str, budgets: &Budgets) -> Result<CaseRecord> {
    let (suite, map) = parse_case_id(id)?;
    let record = match suite {
        Suite::Guarantees => {
            let builder = map.get("builder").map(String::as_str);
            let key = GuaranteeCase {
                binary: match builder {
                    Some("general") => false,
                    Some("binary") => true,
                    _ => return Err(HarnessError::CaseId(id.to_string())),
                },
                n: field(id, &map, "n")?,
                r: field(id, &map, "r")?,
                index: field(id, &map, "i")?,
                seed: field(id, &map, "seed")?,
            };
            run_guarantee(&key)
        }
        Suite::Tables => {
            let n = field(id, &map, "n")?;
            match map.get("kind").map(String::as_str) {
                Some("f") => run_table(&TableCase::F { n, r: field(id, &map, "r")? }, budgets).0,
                Some("string") => run_table(&TableCase::String { n, r: field(id, &map, "r")? }, budgets).0,
                Some("weak") => run_table(&TableCase::Weak { n }, budgets).0,
                Some("dominance") => {
                    let (f, _) = run_table(&TableCase::F { n, r: 2 }, budgets);
                    let (weak, _) = run_table(&TableCase::Weak { n }, budgets);
                    dominance_record(n, &f, &weak).ok_or_else(|| HarnessError::CaseId(id.to_string()))?
                }
                _ => return Err(HarnessError::CaseId(id.to_string())),
            }
        }
        Suite::Twinbound => run_twinbound(
            &TwinboundCase {
                r: field(id, &map, "r")?,
                m: field(id, &map, "m")?,
                index: field(id, &map, "i")?,
                seed: field(id, &map, "seed")?,
            },
            budgets,
        ),
        Suite::LcsTail => {
            if map.contains_key("summary") {
                return Err(HarnessError::CaseId(format!("{id} aggregates a whole run; rerun the suite")));
            }
            run_lcs(&LcsCase { r: field(id, &map, "r")?, index: field(id, &map, "i")?, seed: field(id, &map, "seed")? })
        }
        Suite::Blockclaims => {
            let letters: Vec<Color> = map
                .get("x")
                .ok_or_else(|| HarnessError::CaseId(id.to_string()))?
                .split('.')
                .map(|l| l.parse().map_err(|_| HarnessError::CaseId(id.to_string())))
                .collect::<Result<_>>()?;
            run_block(&BlockCase { r: field(id, &map, "r")?, letters })
        }
    };
    Ok(record)
}

// ---------------------------------------------------------------- guarantees

struct GuaranteeCase {
    binary: bool,
    n: usize,
    r: Color,
    index: usize,
    seed: u64,
}

impl GuaranteeCase {
    fn record(&self) -> CaseRecord {
        let builder = if self.binary { "binary" } else { "general" };
        let id = case_id(
            Suite::Guarantees,
            &[
                ("builder", builder.into()),
                ("n", self.n.to_string()),
                ("r", self.r.to_string()),
                ("i", self.index.to_string()),
                ("seed", self.seed.to_string()),
            ],
        );
        CaseRecord::new(id, self.seed, Relation::AtLeast)
            .param("builder", builder)
            .param("n", self.n)
            .param("r", self.r)
    }
}

#[derive(Serialize)]
struct ColoringWitness<'a> {
    coloring: String,
    twin: &'a TwinPair,
}

fn run_guarantee(case: &GuaranteeCase) -> CaseRecord {
    let record = case.record();
    let c = random_coloring(case.n, case.r, case.seed);
    let (outcome, bound) = if case.binary {
        match build_twin_binary(&c) {
            Ok(o) => (o, binary_bound(case.n)),
            Err(e) => return record.failed(e),
        }
    } else {
        (build_twin_general(&c), general_bound(case.n, case.r as usize))
    };
    let problems = build_problems(&c, &outcome);
    let record = record.judge(outcome.twin.len() as f64, bound as f64, problems);
    if record.status == crate::report::Status::Fail {
        let name = witness_name(&record.case_id);
        let body = artifact_json(&ColoringWitness { coloring: write_coloring(&c), twin: &outcome.twin });
        return record.with_artifact(name, body);
    }
    record
}

fn build_problems(c: &EdgeColoring, outcome: &BuildOutcome) -> Vec<String> {
    let mut problems = Vec::new();
    match validate_twin(c, &outcome.twin) {
        Ok(v) if v.is_valid() => {}
        Ok(v) => problems.push(format!("output is not a twin: {v:?}")),
        Err(e) => problems.push(e.to_string()),
    }
    if let Err(e) = outcome.ladder.verify(c) {
        problems.push(format!("ladder check failed: {e}"));
    }
    problems
}

/// Samples colorings over `ns × rs` and checks both builders' guarantees
/// (the binary builder only when `r = 2`).
pub fn cmd_guarantees(config: &SuiteConfig) -> Result<RunReport> {
    config.validate()?;
    let mut keys = Vec::new();
    for &n in &config.ns {
        for &r in &config.rs {
            for index in 0..config.samples {
                let seed = derive_seed(config.seed, &[n as u64, r as u64, index as u64]);
                keys.push(GuaranteeCase { binary: false, n, r, index, seed });
                if r == 2 {
                    keys.push(GuaranteeCase { binary: true, n, r, index, seed });
                }
            }
        }
    }
    let records = run_cases(&keys, &config.budgets, GuaranteeCase::record, run_guarantee);
    Ok(RunReport::new(Suite::Guarantees, config.seed, records))
}

// -------------------------------------------------------------------- tables

#[derive(Clone, Copy)]
enum TableCase {
    F { n: usize, r: Color },
    Weak { n: usize },
    String { n: usize, r: Color },
}

/// One computed table row, kept for `tables.csv` and the dominance checks.
#[derive(Clone, Debug)]
struct TableRow {
    kind: &'static str,
    n: usize,
    r: Option<Color>,
    value: Option<usize>,
    witness_file: Option<String>,
}

impl TableCase {
    fn parts(&self) -> (&'static str, usize, Option<Color>) {
        match *self {
            TableCase::F { n, r } => ("f", n, Some(r)),
            TableCase::Weak { n } => ("weak", n, None),
            TableCase::String { n, r } => ("string", n, Some(r)),
        }
    }

    fn record(&self) -> CaseRecord {
        let (kind, n, r) = self.parts();
        let mut parts = vec![("kind", kind.to_string()), ("n", n.to_string())];
        if let Some(r) = r {
            parts.push(("r", r.to_string()));
        }
        let relation = match *self {
            TableCase::F { .. } => Relation::AtLeast,
            TableCase::String { r: 1, .. } => Relation::Equal,
            _ => Relation::AtMost,
        };
        let record = CaseRecord::new(case_id(Suite::Tables, &parts), 0, relation).param("kind", kind).param("n", n);
        match r {
            Some(r) => record.param("r", r),
            None => record,
        }
    }
}

#[derive(Serialize)]
struct TableWitness<T: Serialize> {
    value: usize,
    minimizer: T,
    witness: TwinPair,
    enumerated: u64,
}

fn run_table(case: &TableCase, budgets: &Budgets) -> (CaseRecord, TableRow) {
    let (kind, n, r) = case.parts();
    let record = case.record();
    let mut row = TableRow { kind, n, r, value: None, witness_file: None };
    let budget = budgets.oracle();
    let half = (n / 2) as f64;
    let computed: std::result::Result<(usize, String), TwinError> = match *case {
        TableCase::F { n, r } => exact_f(n, r, &budget).map(|e| {
            let w = TableWitness {
                value: e.value,
                minimizer: write_coloring(&e.minimizer),
                witness: e.witness,
                enumerated: e.enumerated as u64,
            };
            (e.value, artifact_json(&w))
        }),
        TableCase::Weak { n } => exact_f_weak(n, &budget).map(|e| {
            let w = TableWitness {
                value: e.value,
                minimizer: e.minimizer,
                witness: e.witness,
                enumerated: e.enumerated as u64,
            };
            (e.value, artifact_json(&w))
        }),
        TableCase::String { n, r } => exact_f_string(n, r, &budget).map(|e| {
            let w = TableWitness {
                value: e.value,
                minimizer: e.minimizer,
                witness: e.witness,
                enumerated: e.enumerated as u64,
            };
            (e.value, artifact_json(&w))
        }),
    };
    let (value, body) = match computed {
        Ok(v) => v,
        Err(e @ TwinError::Resource { .. }) => return (record.resource(e), row),
        Err(e) => return (record.failed(e), row),
    };
    row.value = Some(value);
    let v = value as f64;
    let mut problems = Vec::new();
    let record = match *case {
        TableCase::F { n, r } => {
            let lower = if r == 2 { binary_bound(n) } else { general_bound(n, r as usize) };
            if v > half {
                problems.push(format!("value exceeds floor(n/2) = {half}"));
            }
            if n == 2 && value != 1 {
                problems.push("F(2, r) must be 1".to_string());
            }
            if r == 1 && v != half {
                problems.push("a single color admits floor(n/2)".to_string());
            }
            record.judge(v, lower as f64, problems)
        }
        TableCase::Weak { .. } => record.judge(v, half, problems),
        TableCase::String { .. } => record.judge(v, half, problems),
    };
    let name = match r {
        Some(r) => format!("witnesses/tables-{kind}-n{n}-r{r}.json"),
        None => format!("witnesses/tables-{kind}-n{n}.json"),
    };
    row.witness_file = Some(name.clone());
    (record.with_artifact(name, body), row)
}

fn dominance_record(n: usize, f: &CaseRecord, weak: &CaseRecord) -> Option<CaseRecord> {
    let (fv, wv) = (f.value?, weak.value?);
    let id = case_id(Suite::Tables, &[("kind", "dominance".into()), ("n", n.to_string())]);
    Some(
        CaseRecord::new(id, 0, Relation::AtLeast)
            .param("kind", "dominance")
            .param("n", n)
            .with_note("F_weak(n) against F_2(n)")
            .judge(wv, fv, vec![]),
    )
}

#[derive(Serialize)]
struct TableCsvRow<'a> {
    kind: &'a str,
    n: usize,
    r: String,
    value: String,
    witness_file: &'a str,
}

fn tables_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(TableCsvRow {
            kind: row.kind,
            n: row.n,
            r: row.r.map(|r| r.to_string()).unwrap_or_default(),
            value: row.value.map(|v| v.to_string()).unwrap_or_default(),
            witness_file: row.witness_file.as_deref().unwrap_or(""),
        })?;
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Exact minima over `ns` (and `rs` for colorings and strings), with the
/// envelope and weak-dominance cross-checks. Also emits `tables.csv`
/// with columns `kind,n,r,value,witness_file`.
pub fn cmd_tables(config: &SuiteConfig) -> Result<RunReport> {
    config.validate()?;
    let mut keys = Vec::new();
    for &n in &config.ns {
        for &r in &config.rs {
            keys.push(TableCase::F { n, r });
        }
        keys.push(TableCase::Weak { n });
        for &r in &config.rs {
            keys.push(TableCase::String { n, r });
        }
    }
    let start = Instant::now();
    let limit = config.budgets.wall_clock_secs as f64;
    let results: Vec<(CaseRecord, TableRow)> = keys
        .par_iter()
        .map(|k| {
            if start.elapsed().as_secs_f64() > limit {
                let (kind, n, r) = k.parts();
                let row = TableRow { kind, n, r, value: None, witness_file: None };
                (k.record().resource(format!("wall-clock limit of {limit} s reached before the case started")), row)
            } else {
                run_table(k, &config.budgets)
            }
        })
        .collect();
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for &n in &config.ns {
        let of_n: Vec<&(CaseRecord, TableRow)> = results.iter().filter(|(_, row)| row.n == n).collect();
        let f2 = of_n.iter().find(|(_, row)| row.kind == "f" && row.r == Some(2));
        let weak = of_n.iter().find(|(_, row)| row.kind == "weak");
        for (rec, row) in &of_n {
            records.push(rec.clone());
            rows.push(row.clone());
        }
        if let (Some((f, _)), Some((w, _))) = (f2, weak) {
            records.extend(dominance_record(n, f, w));
        }
    }
    let mut report = RunReport::new(Suite::Tables, config.seed, records);
    report.attachments.push(Artifact { file_name: "tables.csv".into(), contents: tables_csv(&rows)? });
    Ok(report)
}

// ----------------------------------------------------------------- twinbound

struct TwinboundCase {
    r: Color,
    m: usize,
    index: usize,
    seed: u64,
}

impl TwinboundCase {
    fn record(&self) -> CaseRecord {
        let id = case_id(
            Suite::Twinbound,
            &[
                ("r", self.r.to_string()),
                ("m", self.m.to_string()),
                ("i", self.index.to_string()),
                ("seed", self.seed.to_string()),
            ],
        );
        CaseRecord::new(id, self.seed, Relation::AtMost).param("r", self.r).param("m", self.m)
    }
}

fn run_twinbound(case: &TwinboundCase, budgets: &Budgets) -> CaseRecord {
    let record = case.record();
    let spec = match CompositeSpec::random(case.r, case.m, case.seed) {
        Ok(s) => s,
        Err(e) => return record.failed(e),
    };
    if spec.n() < 2 {
        return record.with_note("fewer than two vertices; nothing to check").judge(0.0, 0.0, vec![]);
    }
    let check = match check_twin_bound(&spec, &budgets.oracle()) {
        Ok(c) => c,
        Err(e @ TwinError::Resource { .. }) => return record.resource(e),
        Err(e) => return record.failed(e),
    };
    let problems = match decomposition_problems(&spec, &check.witness, check.f_string_x, check.f_string_y) {
        Ok(p) => p,
        Err(e) => vec![e.to_string()],
    };
    let note = format!(
        "f(x)={} f(y)={} maxLCS={}{}",
        check.f_string_x,
        check.f_string_y,
        check.max_lcs,
        if spec.n() <= FULL_DECOMPOSITION_MAX_N { ", all twins decomposed" } else { ", witness decomposed" }
    );
    let record = record.with_note(note).judge(check.f_c as f64, check.rhs as f64, problems);
    if record.status == crate::report::Status::Fail {
        #[derive(Serialize)]
        struct SpecWitness<'a> {
            spec: &'a CompositeSpec,
            twin: &'a TwinPair,
        }
        let name = witness_name(&record.case_id);
        return record.with_artifact(name, artifact_json(&SpecWitness { spec: &spec, twin: &check.witness }));
    }
    record
}

fn decomposition_problems(spec: &CompositeSpec, witness: &TwinPair, fx: usize, fy: usize) -> Result<Vec<String>> {
    let check_one = |t: &TwinPair| -> Vec<String> {
        match decompose_composite_twin(spec, t) {
            Ok(d) => {
                let mut p = d.structural_issues(spec);
                p.extend(d.bound_issues(spec, fx, fy));
                p.into_iter().map(|msg| format!("{t:?}: {msg}")).collect()
            }
            Err(e) => vec![format!("{t:?}: {e}")],
        }
    };
    if spec.n() <= FULL_DECOMPOSITION_MAX_N {
        let c = composite_coloring(spec)?;
        let mut found = fold_twins(
            &ColoringRule::new(&c),
            Vec::new,
            |acc: &mut Vec<String>, t| acc.extend(check_one(t)),
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        found.truncate(5);
        Ok(found)
    } else {
        let mut found = check_one(witness);
        found.extend(check_one(&witness.swapped()));
        Ok(found)
    }
}

/// Samples composite specs over `rs × ms` and checks the twin bound and the
/// decomposition bounds.
pub fn cmd_twinbound(config: &SuiteConfig) -> Result<RunReport> {
    config.validate()?;
    if let Some(&r) = config.rs.iter().find(|&&r| r % 2 != 0) {
        return Err(TwinError::Precondition(format!("composite palette must be even, got {r}")).into());
    }
    let mut keys = Vec::new();
    for &r in &config.rs {
        for &m in &config.ms {
            for index in 0..config.samples {
                let seed = derive_seed(config.seed, &[r as u64, m as u64, index as u64]);
                keys.push(TwinboundCase { r, m, index, seed });
            }
        }
    }
    let budgets = config.budgets.clone();
    let records = run_cases(&keys, &config.budgets, TwinboundCase::record, |k| run_twinbound(k, &budgets));
    Ok(RunReport::new(Suite::Twinbound, config.seed, records))
}

// ------------------------------------------------------------------ lcs-tail

struct LcsCase {
    r: usize,
    index: usize,
    seed: u64,
}

impl LcsCase {
    fn record(&self) -> CaseRecord {
        let id = case_id(
            Suite::LcsTail,
            &[("r", self.r.to_string()), ("i", self.index.to_string()), ("seed", self.seed.to_string())],
        );
        CaseRecord::new(id, self.seed, Relation::AtMost).param("r", self.r)
    }
}

fn lcs_threshold(r: usize) -> f64 {
    3.0 * (r as f64).sqrt()
}

fn run_lcs(case: &LcsCase) -> CaseRecord {
    let mut g = rng(case.seed);
    let a = permutation_with(case.r, &mut g);
    let b = permutation_with(case.r, &mut g);
    let lcs = lcs_length(&a, &b).expect("equal lengths");
    case.record().info(lcs as f64, Some(lcs_threshold(case.r)))
}

/// Monte Carlo over random permutation pairs of each length in `rs`; every
/// pair and the per-length exceedance count are informational.
pub fn cmd_lcs_tail(config: &SuiteConfig) -> Result<RunReport> {
    config.validate()?;
    let mut records = Vec::new();
    for &r in &config.rs {
        let r = r as usize;
        let keys: Vec<LcsCase> = (0..config.samples)
            .map(|index| LcsCase { r, index, seed: derive_seed(config.seed, &[r as u64, index as u64]) })
            .collect();
        let pairs = run_cases(&keys, &config.budgets, LcsCase::record, run_lcs);
        let threshold = lcs_threshold(r);
        let measured: Vec<f64> = pairs.iter().filter_map(|p| p.value).collect();
        let exceed = measured.iter().filter(|&&v| v > threshold).count();
        let max = measured.iter().copied().fold(0.0, f64::max);
        let id = case_id(Suite::LcsTail, &[("summary", "exceedances".into()), ("r", r.to_string())]);
        let summary = CaseRecord::new(id, config.seed, Relation::AtMost)
            .param("r", r)
            .param("samples", config.samples)
            .with_note(format!(
                "{exceed} of {} pairs exceed 3*sqrt(r) = {threshold}; largest LCS {max}",
                measured.len()
            ))
            .info(exceed as f64, Some(0.0));
        records.extend(pairs);
        records.push(summary);
    }
    Ok(RunReport::new(Suite::LcsTail, config.seed, records))
}

// --------------------------------------------------------------- blockclaims

struct BlockCase {
    r: Color,
    letters: Vec<Color>,
}

impl BlockCase {
    fn x_label(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(".")
    }

    fn record(&self) -> CaseRecord {
        let id = case_id(Suite::Blockclaims, &[("r", self.r.to_string()), ("x", self.x_label())]);
        CaseRecord::new(id, 0, Relation::AtMost).param("r", self.r).param("x", self.x_label())
    }
}

fn run_block(case: &BlockCase) -> CaseRecord {
    let record = case.record();
    let profile = match LetterString::new(case.r, case.letters.clone()).and_then(BlockProfile::new) {
        Ok(p) => p,
        Err(e @ TwinError::Resource { .. }) => return record.resource(e),
        Err(e) => return record.failed(e),
    };
    let record = record.param("points", profile.len());
    match verify_block_claims(&profile, MAX_BLOCK_PROFILE_LEN) {
        Ok(summary) => {
            let record = record.with_note(format!("{} twins checked", summary.twins_checked)).judge(
                summary.violation_count as f64,
                0.0,
                vec![],
            );
            if summary.violation_count > 0 {
                let name = witness_name(&record.case_id);
                return record.with_artifact(name, artifact_json(&summary.violations));
            }
            record
        }
        Err(e @ TwinError::Resource { .. }) => record.resource(e),
        Err(e) => record.failed(e),
    }
}

/// Every word in `[r]^m` for `r ∈ rs`, `m ∈ ms`, in lexicographic order.
fn words(r: Color, m: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=r).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Enumerates all twins of every block coloring with `x ∈ [r]^m` and checks
/// the four structural block claims; profiles over the length cap are
/// recorded as resource errors.
pub fn cmd_blockclaims(config: &SuiteConfig) -> Result<RunReport> {
    config.validate()?;
    let keys: Vec<BlockCase> = config
        .rs
        .iter()
        .flat_map(|&r| {
            config.ms.iter().flat_map(move |&m| words(r, m).into_iter().map(move |letters| BlockCase { r, letters }))
        })
        .collect();
    let records = run_cases(&keys, &config.budgets, BlockCase::record, run_block);
    Ok(RunReport::new(Suite::Blockclaims, config.seed, records))
}
