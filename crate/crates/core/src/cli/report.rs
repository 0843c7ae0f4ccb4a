//! Report encodings: pretty JSON, TSV and a human table.
//!
//! JSON and TSV carry the same fields. [`from_tsv`] inverts [`to_tsv`], which
//! is how the tests check that claim.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::ParamTuple;
use crate::exact::BigRational;
use crate::verifier::{Failure, GridSpec, IntRange, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSet {
    pub reports: Vec<VerificationReport>,
    pub total_failures: u64,
}

impl ReportSet {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        let total_failures = reports.iter().map(|r| r.failures.len() as u64).sum();
        Self { reports, total_failures }
    }
}

pub fn to_json(set: &ReportSet) -> String {
    let mut s = serde_json::to_string_pretty(set).expect("reports serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<ReportSet> {
    serde_json::from_str(text)
}

pub const TSV_HEADER: &str =
    "identity_id\ttuples_tested\ttuples_skipped\tn_range\tr_range\ts_range\tt_range\tseed\tfailures";

fn tuple_key(p: &ParamTuple) -> String {
    format!("{},{},{},{}", p.n, p.r, p.s, p.t)
}

fn encode_failure(f: &Failure) -> String {
    let mid = f.mid.as_ref().map_or_else(|| "-".to_owned(), ToString::to_string);
    format!("{}:{}|{}|{}", tuple_key(&f.tuple), f.lhs, mid, f.rhs)
}

/// One header line, then one row per report. Failures are `;`-separated
/// `n,r,s,t:lhs|mid|rhs` with `-` for a missing middle or an empty list.
pub fn to_tsv(set: &ReportSet) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in &set.reports {
        let failures = if r.failures.is_empty() {
            "-".to_owned()
        } else {
            r.failures.iter().map(encode_failure).collect::<Vec<_>>().join(";")
        };
        let seed = r.seed.map_or_else(|| "-".to_owned(), |s| s.to_string());
        let g = &r.grid;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.identity_id, r.tuples_tested, r.tuples_skipped, g.n_range, g.r_range, g.s_range, g.t_range, seed, failures
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tsv line {line}: {msg}")]
pub struct TsvError {
    pub line: usize,
    pub msg: String,
}

pub fn parse_range(text: &str) -> Option<IntRange> {
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.trim().parse().ok()?, hi.trim().parse().ok()?),
        None => {
            let v = text.trim().parse().ok()?;
            (v, v)
        }
    };
    Some(IntRange::new(lo, hi))
}

fn decode_failure(text: &str) -> Option<Failure> {
    let (key, sides) = text.split_once(':')?;
    let k: Vec<&str> = key.split(',').collect();
    let [n, r, s, t] = k.as_slice() else { return None };
    let tuple = ParamTuple::new(n.parse().ok()?, r.parse().ok()?, s.parse().ok()?, t.parse().ok()?);
    let mut parts = sides.split('|');
    let lhs: BigRational = parts.next()?.parse().ok()?;
    let mid = match parts.next()? {
        "-" => None,
        m => Some(m.parse().ok()?),
    };
    let rhs = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some(Failure { tuple, lhs, mid, rhs })
}

pub fn from_tsv(text: &str) -> Result<ReportSet, TsvError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == TSV_HEADER => {}
        _ => return Err(TsvError { line: 1, msg: "missing header".into() }),
    }
    let mut reports = Vec::new();
    for (i, line) in lines {
        let err = |msg: &str| TsvError { line: i + 1, msg: msg.to_owned() };
        let cols: Vec<&str> = line.split('\t').collect();
        let [id, tested, skipped, n, r, s, t, seed, failures] = cols.as_slice() else {
            return Err(err("expected 9 columns"));
        };
        let range = |c: &str| parse_range(c).ok_or_else(|| err("bad range"));
        let grid = GridSpec { n_range: range(n)?, r_range: range(r)?, s_range: range(s)?, t_range: range(t)? };
        let failures = if *failures == "-" {
            Vec::new()
        } else {
            failures.split(';').map(|f| decode_failure(f).ok_or_else(|| err("bad failure"))).collect::<Result<_, _>>()?
        };
        reports.push(VerificationReport {
            identity_id: (*id).to_owned(),
            tuples_tested: tested.parse().map_err(|_| err("bad count"))?,
            tuples_skipped: skipped.parse().map_err(|_| err("bad count"))?,
            failures,
            wall_time: Default::default(),
            grid,
            seed: if *seed == "-" { None } else { Some(seed.parse().map_err(|_| err("bad seed"))?) },
        });
    }
    Ok(ReportSet::new(reports))
}

/// Aligned table with the minimal counterexample inline and a total line.
pub fn to_human(set: &ReportSet) -> String {
    let width = set.reports.iter().map(|r| r.identity_id.len()).max().unwrap_or(2).max(8);
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:>8}  {:>8}  {:>8}  {:>8}  status  minimal counterexample", "identity", "tested", "skipped", "failures", "ms").unwrap();
    for r in &set.reports {
        let (status, cex) = match r.minimal_counterexample() {
            None => ("pass", String::new()),
            Some(f) => {
                let mid = f.mid.as_ref().map(|m| format!(" mid={m}")).unwrap_or_default();
                ("FAIL", format!("{} lhs={}{mid} rhs={}", f.tuple, f.lhs, f.rhs))
            }
        };
        writeln!(
            out,
            "{:<width$}  {:>8}  {:>8}  {:>8}  {:>8}  {status:<6}  {cex}",
            r.identity_id,
            r.tuples_tested,
            r.tuples_skipped,
            r.failures.len(),
            r.wall_time.as_millis(),
        )
        .unwrap();
    }
    writeln!(out, "total failures: {}", set.total_failures).unwrap();
    out
}
