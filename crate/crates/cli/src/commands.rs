use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::Context;
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use partition_minors::excitation::{enumerate_excited_diagrams, excitation_factor};
use partition_minors::lab::{compute_g, e2_conjugate_gap, family_lambda, mrc_check, GnRecord, LabError};
use partition_minors::partition::{hook_grid, Partition};
use partition_minors::sonar::{double_sonar_report, query_budget, sonar_trace, ESequence, MinorOracle, SonarError};
use partition_minors::syt::{count_skew_syt_naruse, naruse_counts, SkewCounter};

use crate::cache::CountCache;
use crate::config::{Config, Format};
use crate::failure::{self, ceiling, mismatch, usage};
use crate::verify::Suite;
use crate::Method;

/// Command output in both renderings, plus the exit status.
#[derive(Debug, Default)]
pub struct Report {
    pub text: String,
    pub records: Vec<Value>,
    pub code: u8,
    pub failure: Option<String>,
}

impl Report {
    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    fn record(&mut self, value: Value) {
        self.records.push(value);
    }

    fn fail(&mut self, code: u8, message: impl Into<String>) {
        self.code = code;
        self.failure = Some(message.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Records => self.records.iter().map(|r| format!("{r}\n")).collect(),
        }
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn pair_json(pair: &Option<(Partition, Partition)>) -> Value {
    match pair {
        Some((a, b)) => json!([a.to_string(), b.to_string()]),
        None => Value::Null,
    }
}

fn lab_failure(err: LabError) -> anyhow::Error {
    match err {
        LabError::ResourceCeiling { .. } => ceiling(err.to_string()).into(),
        other => usage(other.to_string()).into(),
    }
}

fn sonar_failure(err: SonarError) -> anyhow::Error {
    match err {
        SonarError::MalformedSequence(_) => usage(err.to_string()).into(),
        other => mismatch(other.to_string()).into(),
    }
}

pub fn hooks(partition: &Partition) -> Report {
    let grid = hook_grid(partition);
    let mut report = Report::default();
    for row in grid.rows() {
        report.line(strings(row).join(" "));
    }
    report.record(json!({
        "command": "hooks",
        "partition": partition.to_string(),
        "rows": grid.rows(),
    }));
    report
}

fn open_cache(config: &Config) -> anyhow::Result<Option<CountCache>> {
    config.cache_dir.as_deref().map(CountCache::open).transpose()
}

/// Counts for each inner shape, answered from the cache where possible.
fn cached_counts(
    config: &Config,
    outer: &Partition,
    inners: &[Partition],
    method: Method,
) -> anyhow::Result<Vec<BigUint>> {
    let mut cache = open_cache(config)?;
    let mut counts: Vec<Option<BigUint>> = inners
        .iter()
        .map(|inner| cache.as_ref().and_then(|c| c.get(outer, inner)))
        .collect();
    let missing: Vec<usize> = (0..inners.len()).filter(|&i| counts[i].is_none()).collect();
    let wanted: Vec<Partition> = missing.iter().map(|&i| inners[i].clone()).collect();
    let fresh = match method {
        Method::Naruse => naruse_counts(outer, &wanted),
        _ => {
            let mut counter = SkewCounter::default();
            wanted.iter().map(|inner| counter.count(outer, inner)).collect()
        }
    };
    for (&i, value) in missing.iter().zip(fresh) {
        if let Some(cache) = cache.as_mut() {
            cache.insert(outer, &inners[i], &value);
        }
        counts[i] = Some(value);
    }
    if let Some(cache) = cache.as_mut() {
        cache.save()?;
    }
    Ok(counts.into_iter().map(|c| c.expect("filled")).collect())
}

pub fn count(config: &Config, outer: &Partition, inner: Option<&Partition>, method: Method) -> anyhow::Result<Report> {
    let inner = inner.cloned().unwrap_or_else(Partition::empty);
    let mut report = Report::default();
    let shape = format!("{outer}/{inner}");
    if method == Method::Both {
        let naruse = count_skew_syt_naruse(outer, &inner);
        let dp = SkewCounter::default().count(outer, &inner);
        report.line(format!("naruse {naruse}"));
        report.line(format!("dp {dp}"));
        let agree = naruse == dp;
        report.record(json!({
            "command": "count", "outer": outer.to_string(), "inner": inner.to_string(),
            "method": "both", "naruse": naruse.to_string(), "dp": dp.to_string(), "agree": agree,
        }));
        if !agree {
            report.fail(failure::MISMATCH, format!("counting methods disagree on {shape}"));
        }
        return Ok(report);
    }
    let value = cached_counts(config, outer, std::slice::from_ref(&inner), method)?.remove(0);
    report.line(value.to_string());
    report.record(json!({
        "command": "count", "outer": outer.to_string(), "inner": inner.to_string(),
        "method": if method == Method::Dp { "dp" } else { "naruse" }, "count": value.to_string(),
    }));
    Ok(report)
}

pub fn excite(outer: &Partition, inner: &Partition, list: bool) -> anyhow::Result<Report> {
    let factor = excitation_factor(outer, inner);
    let diagrams = enumerate_excited_diagrams(outer, inner);
    let mut report = Report::default();
    report.line(factor.to_string());
    report.record(json!({
        "command": "excite", "outer": outer.to_string(), "inner": inner.to_string(),
        "factor": factor.to_string(), "diagrams": diagrams.len(),
    }));
    if list {
        let grid = hook_grid(outer);
        report.line(format!("{} excited diagrams", diagrams.len()));
        for (i, d) in diagrams.iter().enumerate() {
            let product = d.hook_product(&grid);
            let cells = strings(d.cells());
            report.line(format!("{} product={product}", cells.join(" ")));
            report.record(json!({
                "command": "excite", "diagram": i + 1, "cells": cells, "product": product.to_string(),
            }));
        }
    }
    Ok(report)
}

pub fn sonar(sequence: &ESequence) -> anyhow::Result<Report> {
    let trace = sonar_trace(sequence).map_err(sonar_failure)?;
    let mut report = Report::default();
    report.line(format!("k {}", trace.k));
    report.line(format!("sigma {}", strings(&trace.sigma).join(",")));
    report.line(format!("hooks {}", strings(&trace.hooks).join(",")));
    report.line(trace.partition.to_string());
    report.record(json!({
        "command": "sonar", "sequence": sequence.to_string(), "k": trace.k,
        "sigma": strings(&trace.sigma), "hooks": trace.hooks, "partition": trace.partition.to_string(),
    }));
    Ok(report)
}

pub fn reconstruct(hidden: &Partition, show_queries: bool) -> anyhow::Result<Report> {
    let n = hidden.size();
    let budget = if n >= 2 { query_budget(n) } else { n };
    let mut answers: Vec<BigUint> = Vec::new();
    let (outcome, log) = {
        let mut oracle = MinorOracle::with_source(n, budget, |mu| {
            let c = count_skew_syt_naruse(hidden, mu);
            answers.push(c.clone());
            c
        });
        let outcome = double_sonar_report(&mut oracle);
        (outcome, oracle.query_log().to_vec())
    };
    let result = outcome.map_err(sonar_failure)?;
    let max_query = log.iter().map(Partition::size).max().unwrap_or(0);
    let rectangle = result.rectangle.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
    let mut report = Report::default();
    report.line(result.partition.to_string());
    report.line(format!("n {n} budget {budget} rectangle {rectangle} branch {:?}", result.branch).to_lowercase());
    report.line(format!("queries {} max-size {max_query}", log.len()));
    report.record(json!({
        "command": "reconstruct", "hidden": hidden.to_string(), "n": n, "budget": budget,
        "rectangle": rectangle, "branch": format!("{:?}", result.branch).to_lowercase(),
        "queries": log.len(), "max_query_size": max_query, "partition": result.partition.to_string(),
        "matches": result.partition == *hidden,
    }));
    if show_queries {
        for (i, (mu, count)) in log.iter().zip(&answers).enumerate() {
            report.line(format!("{mu} size={} count={count}", mu.size()));
            report.record(json!({
                "command": "query", "index": i + 1, "inner": mu.to_string(), "size": mu.size(),
                "count": count.to_string(),
            }));
        }
    }
    if result.partition != *hidden {
        report.fail(failure::MISMATCH, format!("reconstructed {} instead of {hidden}", result.partition));
    }
    Ok(report)
}

pub fn minors(config: &Config, partition: &Partition, k: usize, method: Method) -> anyhow::Result<Report> {
    if k > partition.size() {
        return Err(usage(format!("k={k} exceeds |{partition}|={}", partition.size())).into());
    }
    let all = partition.minors(k);
    let counts = if method == Method::Both {
        let naruse = naruse_counts(partition, &all);
        let dp = cached_counts(config, partition, &all, Method::Dp)?;
        if let Some(i) = (0..all.len()).find(|&i| naruse[i] != dp[i]) {
            return Err(mismatch(format!("counting methods disagree on {partition}/{}", all[i])).into());
        }
        naruse
    } else {
        cached_counts(config, partition, &all, method)?
    };
    let mut report = Report::default();
    report.line(format!("n={} k={k} source={partition}", partition.size()));
    report.record(json!({"command": "minors", "n": partition.size(), "k": k, "source": partition.to_string()}));
    for (minor, count) in all.iter().zip(&counts) {
        report.line(format!("{minor} {count}"));
        report.record(json!({"minor": minor.to_string(), "count": count.to_string()}));
    }
    Ok(report)
}

pub fn mrc(config: &Config, n: usize, k: usize) -> anyhow::Result<Report> {
    let verdict = config.pool()?.install(|| mrc_check(n, k, config.ceiling)).map_err(lab_failure)?;
    let mut report = Report::default();
    match &verdict.witness {
        None => report.line(format!("n={n} k={k} holds")),
        Some((a, b)) => report.line(format!("n={n} k={k} fails {a} {b}")),
    }
    report.record(json!({
        "command": "mrc", "n": n, "k": k, "holds": verdict.holds, "witness": pair_json(&verdict.witness),
    }));
    Ok(report)
}

/// `N` or an inclusive range `A-B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GnRange {
    pub start: usize,
    pub end: usize,
}

impl FromStr for GnRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("'{t}' is not a non-negative integer"));
        let (start, end) = match s.split_once('-') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range {start}-{end}"));
        }
        Ok(Self { start, end })
    }
}

pub fn gn(config: &Config, range: GnRange, witness: bool) -> anyhow::Result<Report> {
    let pool = config.pool()?;
    let records: Vec<GnRecord> = pool
        .install(|| (range.start..=range.end).map(|n| compute_g(n, config.ceiling)).collect::<Result<_, _>>())
        .map_err(lab_failure)?;
    let width = |f: &dyn Fn(&GnRecord) -> usize| records.iter().map(|r| f(r).to_string().len()).max().unwrap_or(1);
    let (wn, wg, wd) = (width(&|r| r.n), width(&|r| r.g), width(&|r| r.gap()));
    let mut report = Report::default();
    for rec in &records {
        let mut row = format!("{:>wn$} {:>wg$} {:>wd$} {}", rec.n, rec.g, rec.gap(), rec.method);
        if witness {
            if let Some((a, b)) = &rec.witness {
                write!(row, " {a} {b}").context("formatting")?;
            }
        }
        report.line(row);
        report.record(json!({
            "command": "gn", "n": rec.n, "G": rec.g, "gap": rec.gap(), "method": rec.method.to_string(),
            "witness": pair_json(&rec.witness),
        }));
    }
    Ok(report)
}

pub fn family(r: usize, u: usize, rho: &Partition) -> anyhow::Result<Report> {
    let lam = family_lambda(r, u, rho).map_err(lab_failure)?;
    let conj = lam.conjugate();
    let two = Partition::row(2);
    let e2 = excitation_factor(&lam, &two);
    let e2t = excitation_factor(&conj, &two);
    let gap = e2_conjugate_gap(&lam);
    let mut report = Report::default();
    report.line(lam.to_string());
    report.line(format!("size {}", lam.size()));
    report.line(format!("conjugate {conj}"));
    report.line(format!("E2 {e2} E2-conjugate {e2t} gap {gap}"));
    report.record(json!({
        "command": "family", "r": r, "u": u, "rho": rho.to_string(), "partition": lam.to_string(),
        "size": lam.size(), "conjugate": conj.to_string(), "e2": e2.to_string(),
        "e2_conjugate": e2t.to_string(), "gap": gap.to_string(),
    }));
    if gap != BigInt::from(0) || BigInt::from(e2) - BigInt::from(e2t) != gap {
        report.fail(failure::MISMATCH, "conjugate gap is not zero");
    }
    Ok(report)
}

pub fn verify(suite: Suite) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut report = Report::default();
    let mut failed = Vec::new();
    for s in suites {
        let (status, detail) = match s.run() {
            Ok(detail) => ("PASS", detail),
            Err(detail) => {
                failed.push(s.name());
                ("FAIL", detail)
            }
        };
        report.line(format!("{status} {}: {detail}", s.name()));
        report.record(json!({
            "command": "verify", "suite": s.name(), "status": status.to_lowercase(), "detail": detail,
        }));
    }
    if !failed.is_empty() {
        report.fail(failure::MISMATCH, format!("failed suites: {}", failed.join(", ")));
    }
    report
}
