//! Campaign runner: single-input classification, exhaustive grid scans with
//! closed-form-vs-oracle cross-validation, the odd-coefficient square-W
//! search, distinctness audits, and report emission.
//!
//! Grids are sharded by A-rows. With the `parallel` feature (default) and
//! `workers > 1` the rows run on a rayon pool; rows are merged back in
//! coefficient order either way, so output is byte-identical for a given
//! configuration regardless of worker count.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use crate::dedekind::{self, DedekindReport, MonogenicityVerdict};
use crate::error::{Error, Result};
use crate::galois::{self, QuarticGaloisClass};
use crate::numtheory;
use crate::polyint::IntPoly;
use crate::reciprocal::{
    self, Distinctness, Family, ReciprocalQuartic, WSet,
};

/// Record-level monogenicity status; `Unsupported` marks the `A = 0, B != 0`
/// row that the closed-form classification does not cover.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonogenicStatus {
    Yes,
    No { witness: u64 },
    Reducible,
    Unsupported,
}

impl MonogenicStatus {
    fn as_str(&self) -> &'static str {
        match self {
            MonogenicStatus::Yes => "yes",
            MonogenicStatus::No { .. } => "no",
            MonogenicStatus::Reducible => "reducible",
            MonogenicStatus::Unsupported => "unsupported",
        }
    }

    pub fn witness(&self) -> Option<u64> {
        match self {
            MonogenicStatus::No { witness } => Some(*witness),
            _ => None,
        }
    }
}

/// Full verdict bundle for one `(A, B)` cell.
#[derive(Clone, Debug)]
pub struct ClassificationRecord {
    pub a: i64,
    pub b: i64,
    pub wset: WSet,
    pub irreducible: bool,
    pub monogenic: MonogenicStatus,
    /// Closed-form Galois class; `None` when reducible.
    pub galois: Option<QuarticGaloisClass>,
    pub family: Family,
    /// Oracle verdicts, populated only when the scan runs with oracles;
    /// compared against the closed forms but never serialized.
    pub oracle_monogenic: Option<MonogenicityVerdict>,
    pub oracle_galois: Option<QuarticGaloisClass>,
}

pub const CSV_HEADER: &str = "A,B,W1,W2,W3,W,disc,irreducible,monogenic,witness_prime,galois,family";

impl ClassificationRecord {
    fn galois_str(&self) -> Option<String> {
        self.galois.map(|g| g.to_string())
    }

    fn family_str(&self) -> Option<&'static str> {
        match self.family {
            Family::F1 => Some("F1"),
            Family::F2 => Some("F2"),
            Family::F3 => Some("F3"),
            Family::F4 => Some("F4"),
            Family::F5 => Some("F5"),
            Family::NotApplicable => None,
        }
    }

    /// JSON object following the fixed record schema.
    pub fn to_json(&self) -> String {
        let witness = match self.monogenic.witness() {
            Some(p) => p.to_string(),
            None => "null".to_string(),
        };
        let galois = match self.galois_str() {
            Some(g) => format!("\"{g}\""),
            None => "null".to_string(),
        };
        let family = match self.family_str() {
            Some(f) => format!("\"{f}\""),
            None => "null".to_string(),
        };
        format!(
            "{{\"A\":{},\"B\":{},\"W1\":{},\"W2\":{},\"W3\":{},\"W\":{},\"disc\":{},\"irreducible\":{},\"monogenic\":\"{}\",\"witness_prime\":{},\"galois\":{},\"family\":{}}}",
            self.a,
            self.b,
            self.wset.w1,
            self.wset.w2,
            self.wset.w3,
            self.wset.w,
            self.wset.disc,
            self.irreducible,
            self.monogenic.as_str(),
            witness,
            galois,
            family
        )
    }

    /// CSV row in [`CSV_HEADER`] column order; empty fields stand for null.
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.a,
            self.b,
            self.wset.w1,
            self.wset.w2,
            self.wset.w3,
            self.wset.w,
            self.wset.disc,
            self.irreducible,
            self.monogenic.as_str(),
            self.monogenic
                .witness()
                .map(|p| p.to_string())
                .unwrap_or_default(),
            self.galois_str().unwrap_or_default(),
            self.family_str().unwrap_or_default()
        )
    }
}

/// Classifies one reciprocal quartic with the closed forms; the oracles are
/// attached when `with_oracle` is set.
pub fn classify_one(q: &ReciprocalQuartic, with_oracle: bool) -> Result<ClassificationRecord> {
    let wset = reciprocal::invariants(q);
    debug_assert_eq!(
        num_bigint::BigInt::from(wset.disc),
        q.expand().discriminant().expect("quartic has a discriminant"),
        "invariant discriminant disagrees with the resultant at {q}"
    );
    let irreducible = reciprocal::irreducible_closed_form(q).is_irreducible();
    let monogenic = match reciprocal::monogenic_closed_form(q) {
        Ok(MonogenicityVerdict::Monogenic) => MonogenicStatus::Yes,
        Ok(MonogenicityVerdict::NotMonogenic { witness }) => MonogenicStatus::No { witness },
        Ok(MonogenicityVerdict::Reducible) => MonogenicStatus::Reducible,
        Err(Error::UnsupportedCoefficientRow) => {
            if irreducible {
                MonogenicStatus::Unsupported
            } else {
                MonogenicStatus::Reducible
            }
        }
        Err(e) => return Err(e),
    };
    let galois = if irreducible {
        Some(reciprocal::galois_closed_form(q)?)
    } else {
        None
    };
    let family = reciprocal::family(q);
    let (oracle_monogenic, oracle_galois) = if with_oracle {
        let expanded = q.expand();
        let om = dedekind::monogenic_oracle(&expanded)?;
        let og = if irreducible {
            Some(galois::galois_group(&expanded)?)
        } else {
            None
        };
        (Some(om), og)
    } else {
        (None, None)
    };
    Ok(ClassificationRecord {
        a: q.a(),
        b: q.b(),
        wset,
        irreducible,
        monogenic,
        galois,
        family,
        oracle_monogenic,
        oracle_galois,
    })
}

/// Per-prime index-criterion reports and the resolvent trace for one input,
/// used by `--explain`.
#[derive(Clone, Debug)]
pub struct Explain {
    pub reports: Vec<DedekindReport>,
    pub resolvent: Option<IntPoly>,
}

pub fn explain_one(q: &ReciprocalQuartic) -> Result<Explain> {
    let record = classify_one(q, false)?;
    let mut reports = Vec::new();
    let mut resolvent = None;
    if record.irreducible {
        let expanded = q.expand();
        resolvent = Some(galois::resolvent_cubic(&expanded)?);
        for (p, e) in numtheory::factor(record.wset.disc)?.factors {
            if e < 2 {
                continue;
            }
            let p = u64::try_from(p).map_err(|_| Error::ValueTooLarge)?;
            reports.push(dedekind::dedekind_at(&expanded, p)?);
        }
    }
    Ok(Explain { reports, resolvent })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Csv,
    Json,
    Jsonl,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "jsonl" => Ok(OutputFormat::Jsonl),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// Grid scan configuration.
#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub a_min: i64,
    pub a_max: i64,
    pub b_min: i64,
    pub b_max: i64,
    pub run_oracle: bool,
    pub run_frobenius: bool,
    pub frobenius_samples: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub workers: usize,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            a_min: 0,
            a_max: 0,
            b_min: 0,
            b_max: 0,
            run_oracle: false,
            run_frobenius: false,
            frobenius_samples: 50,
            out: None,
            format: OutputFormat::Csv,
            workers: 1,
            seed: 0,
        }
    }
}

impl CampaignConfig {
    fn validate(&self) -> Result<()> {
        if self.a_min > self.a_max || self.b_min > self.b_max {
            return Err(Error::Config("empty coefficient range".to_string()));
        }
        if self.workers < 1 {
            return Err(Error::Config("worker count must be at least 1".to_string()));
        }
        if self.run_frobenius && self.frobenius_samples == 0 {
            return Err(Error::Config(
                "frobenius sampling needs at least one prime".to_string(),
            ));
        }
        ReciprocalQuartic::new(self.a_min, self.b_min)?;
        ReciprocalQuartic::new(self.a_max, self.b_max)?;
        Ok(())
    }
}

/// One disagreement between a closed form and its oracle.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub a: i64,
    pub b: i64,
    pub kind: &'static str,
    pub detail: String,
}

/// Scan summary: verdict counts, family counts, and the (expected empty)
/// mismatch list.
#[derive(Clone, Debug, Default)]
pub struct ScanSummary {
    pub cells: usize,
    pub irreducible: usize,
    pub monogenic: usize,
    pub not_monogenic: usize,
    pub reducible: usize,
    pub unsupported: usize,
    pub families: [usize; 5],
    pub mismatches: Vec<Mismatch>,
    pub seed: u64,
}

impl ScanSummary {
    fn absorb(&mut self, record: &ClassificationRecord) {
        self.cells += 1;
        if record.irreducible {
            self.irreducible += 1;
        }
        match record.monogenic {
            MonogenicStatus::Yes => self.monogenic += 1,
            MonogenicStatus::No { .. } => self.not_monogenic += 1,
            MonogenicStatus::Reducible => self.reducible += 1,
            MonogenicStatus::Unsupported => self.unsupported += 1,
        }
        match record.family {
            Family::F1 => self.families[0] += 1,
            Family::F2 => self.families[1] += 1,
            Family::F3 => self.families[2] += 1,
            Family::F4 => self.families[3] += 1,
            Family::F5 => self.families[4] += 1,
            Family::NotApplicable => {}
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "cells: {}", self.cells);
        let _ = writeln!(s, "irreducible: {}", self.irreducible);
        let _ = writeln!(
            s,
            "monogenic: {} (not: {}, reducible: {}, unsupported: {})",
            self.monogenic, self.not_monogenic, self.reducible, self.unsupported
        );
        let _ = writeln!(
            s,
            "families: F1={} F2={} F3={} F4={} F5={}",
            self.families[0], self.families[1], self.families[2], self.families[3],
            self.families[4]
        );
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "mismatches: {}", self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(s, "  MISMATCH ({}, {}) {}: {}", m.a, m.b, m.kind, m.detail);
        }
        s
    }
}

fn row_records(
    a: i64,
    config: &CampaignConfig,
    mismatches: &mut Vec<Mismatch>,
) -> Result<Vec<ClassificationRecord>> {
    let mut out = Vec::with_capacity((config.b_max - config.b_min + 1) as usize);
    for b in config.b_min..=config.b_max {
        let q = ReciprocalQuartic::new(a, b)?;
        let record = classify_one(&q, config.run_oracle)?;
        if config.run_oracle {
            check_oracle_agreement(&record, mismatches);
        }
        if config.run_frobenius && record.irreducible {
            let audit = galois::frobenius_audit(&q.expand(), config.frobenius_samples)?;
            for (p, pattern) in audit.contradictions {
                mismatches.push(Mismatch {
                    a,
                    b,
                    kind: "frobenius",
                    detail: format!("pattern {pattern:?} at p = {p} outside {}", audit.group),
                });
            }
        }
        out.push(record);
    }
    Ok(out)
}

fn check_oracle_agreement(record: &ClassificationRecord, mismatches: &mut Vec<Mismatch>) {
    if let Some(om) = record.oracle_monogenic {
        let closed = record.monogenic;
        let agree = match (closed, om) {
            (MonogenicStatus::Yes, MonogenicityVerdict::Monogenic) => true,
            (MonogenicStatus::No { witness }, MonogenicityVerdict::NotMonogenic { witness: w }) => {
                witness == w
            }
            (MonogenicStatus::Reducible, MonogenicityVerdict::Reducible) => true,
            // The closed form does not cover A = 0, B != 0; nothing to compare.
            (MonogenicStatus::Unsupported, _) => true,
            _ => false,
        };
        if !agree {
            mismatches.push(Mismatch {
                a: record.a,
                b: record.b,
                kind: "monogenic",
                detail: format!("closed form {closed:?} vs oracle {om:?}"),
            });
        }
    }
    if let (Some(cg), Some(og)) = (record.galois, record.oracle_galois) {
        if cg != og {
            mismatches.push(Mismatch {
                a: record.a,
                b: record.b,
                kind: "galois",
                detail: format!("closed form {cg} vs oracle {og}"),
            });
        }
    }
}

#[cfg(feature = "parallel")]
fn map_rows(
    config: &CampaignConfig,
) -> Result<Vec<(Vec<ClassificationRecord>, Vec<Mismatch>)>> {
    use rayon::prelude::*;
    let rows: Vec<i64> = (config.a_min..=config.a_max).collect();
    if config.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        return pool.install(|| {
            rows.par_iter()
                .map(|&a| {
                    let mut mm = Vec::new();
                    row_records(a, config, &mut mm).map(|r| (r, mm))
                })
                .collect()
        });
    }
    rows.into_iter()
        .map(|a| {
            let mut mm = Vec::new();
            row_records(a, config, &mut mm).map(|r| (r, mm))
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn map_rows(
    config: &CampaignConfig,
) -> Result<Vec<(Vec<ClassificationRecord>, Vec<Mismatch>)>> {
    (config.a_min..=config.a_max)
        .map(|a| {
            let mut mm = Vec::new();
            row_records(a, config, &mut mm).map(|r| (r, mm))
        })
        .collect()
}

/// Runs the grid scan and writes the requested report. Records come back in
/// `(A, B)` order; the summary carries the verdict counts and any closed-form
/// vs oracle disagreements.
pub fn scan(config: &CampaignConfig) -> Result<(Vec<ClassificationRecord>, ScanSummary)> {
    config.validate()?;
    let rows = map_rows(config)?;
    let mut records = Vec::new();
    let mut summary = ScanSummary {
        seed: config.seed,
        ..ScanSummary::default()
    };
    for (row, mm) in rows {
        for record in &row {
            summary.absorb(record);
        }
        summary.mismatches.extend(mm);
        records.extend(row);
    }
    if let Some(path) = &config.out {
        write_records(&records, config.format, path)?;
    }
    Ok((records, summary))
}

/// Serializes records to `path` in the chosen format.
pub fn write_records(
    records: &[ClassificationRecord],
    format: OutputFormat,
    path: &PathBuf,
) -> Result<()> {
    let mut body = String::new();
    match format {
        OutputFormat::Csv => {
            body.push_str(CSV_HEADER);
            body.push('\n');
            for r in records {
                body.push_str(&r.to_csv());
                body.push('\n');
            }
        }
        OutputFormat::Json => {
            body.push('[');
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    body.push(',');
                }
                body.push('\n');
                body.push_str(&r.to_json());
            }
            body.push_str("\n]\n");
        }
        OutputFormat::Jsonl => {
            for r in records {
                body.push_str(&r.to_json());
                body.push('\n');
            }
        }
    }
    fs::write(path, body).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// All monogenic members with odd nonzero `A` and `B` and square `W` inside
/// the box `|A|, |B| <= bound`, in `(A, B)` order. These carry Galois group
/// C4; the box `bound >= 31` reproduces the complete six-element set.
pub fn find_f5(bound: i64) -> Result<Vec<ReciprocalQuartic>> {
    if bound < 1 {
        return Err(Error::Config("bound must be positive".to_string()));
    }
    ReciprocalQuartic::new(bound, bound)?;
    let mut out = Vec::new();
    let mut a = -bound;
    // odd A only: 2 must not divide A*B
    if a % 2 == 0 {
        a += 1;
    }
    while a <= bound {
        let mut b = -bound;
        if b % 2 == 0 {
            b += 1;
        }
        while b <= bound {
            let q = ReciprocalQuartic::new(a, b)?;
            let ws = reciprocal::invariants(&q);
            if numtheory::is_perfect_square(ws.w)
                && reciprocal::monogenic_closed_form(&q)? == MonogenicityVerdict::Monogenic
            {
                out.push(q);
            }
            b += 2;
        }
        a += 2;
    }
    Ok(out)
}

/// Selector for the distinctness audit: either the `B = 0, A >= 2` branch or
/// one of the four parametric witness families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AuditSelector {
    BZeroPositive,
    Family(u8),
}

impl std::str::FromStr for AuditSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B0" | "b0" => Ok(AuditSelector::BZeroPositive),
            "F1" => Ok(AuditSelector::Family(1)),
            "F2" => Ok(AuditSelector::Family(2)),
            "F3" => Ok(AuditSelector::Family(3)),
            "F4" => Ok(AuditSelector::Family(4)),
            other => Err(Error::Config(format!(
                "unknown audit selector '{other}' (expected B0 or F1..F4)"
            ))),
        }
    }
}

/// Pairwise discriminant-distinctness report over the selected members.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub selector: AuditSelector,
    pub members: Vec<(i64, ReciprocalQuartic, i128)>,
    /// Non-mirror pairs with equal discriminants (expected none).
    pub inconclusive: Vec<(ReciprocalQuartic, ReciprocalQuartic)>,
    pub pairs_checked: usize,
}

/// Collects the selected members over `lo..=hi` (the `A` range for `B0`, the
/// `k` range for a family, clamped to the family's lower bound) and compares
/// their discriminants pairwise.
pub fn distinctness_audit(selector: AuditSelector, lo: i64, hi: i64) -> Result<AuditReport> {
    if lo > hi {
        return Err(Error::Config("empty audit range".to_string()));
    }
    let mut members: Vec<(i64, ReciprocalQuartic, i128)> = Vec::new();
    match selector {
        AuditSelector::BZeroPositive => {
            for a in lo.max(2)..=hi {
                let q = ReciprocalQuartic::new(a, 0)?;
                if reciprocal::monogenic_closed_form(&q)? == MonogenicityVerdict::Monogenic {
                    members.push((a, q, reciprocal::invariants(&q).disc));
                }
            }
        }
        AuditSelector::Family(i) => {
            let min = match i {
                1 => 3,
                2 => 2,
                3 => 5,
                4 => 1,
                other => return Err(Error::InvalidFamilyIndex(other)),
            };
            for k in lo.max(min)..=hi {
                if let Some(q) = reciprocal::family_witness(i, k)? {
                    members.push((k, q, reciprocal::invariants(&q).disc));
                }
            }
        }
    }
    let mut inconclusive = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            pairs_checked += 1;
            let (qi, qj) = (members[i].1, members[j].1);
            let mirror_pair = qi.a() == -qj.a() && qi.b() == qj.b();
            match reciprocal::distinct_by_discriminant(&qi, &qj)? {
                Distinctness::Distinct => {}
                Distinctness::Inconclusive if mirror_pair => {}
                Distinctness::Inconclusive => inconclusive.push((qi, qj)),
            }
        }
    }
    Ok(AuditReport {
        selector,
        members,
        inconclusive,
        pairs_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(a: i64, b: i64) -> ReciprocalQuartic {
        ReciprocalQuartic::new(a, b).unwrap()
    }

    #[test]
    fn classify_examples() {
        let r = classify_one(&rq(1, 1), true).unwrap();
        assert_eq!(r.monogenic, MonogenicStatus::Yes);
        assert_eq!(r.galois, Some(QuarticGaloisClass::C4));
        assert_eq!(r.family, Family::F5);
        assert_eq!(r.wset.disc, 125);
        assert_eq!(r.oracle_monogenic, Some(MonogenicityVerdict::Monogenic));
        assert_eq!(r.oracle_galois, Some(QuarticGaloisClass::C4));

        let r = classify_one(&rq(2, 0), false).unwrap();
        assert_eq!(r.monogenic, MonogenicStatus::Yes);
        assert_eq!(r.galois, Some(QuarticGaloisClass::D4));
        assert_eq!(r.family, Family::NotApplicable);
        assert_eq!(r.wset.disc, -1728);

        let r = classify_one(&rq(2, 3), false).unwrap();
        assert_eq!(r.monogenic, MonogenicStatus::Reducible);
        assert!(!r.irreducible);
        assert_eq!(r.galois, None);

        let r = classify_one(&rq(0, 5), false).unwrap();
        assert_eq!(r.monogenic, MonogenicStatus::Unsupported);
    }

    #[test]
    fn record_serialization() {
        let r = classify_one(&rq(9, 19), false).unwrap();
        assert_eq!(
            r.to_json(),
            "{\"A\":9,\"B\":19,\"W1\":3,\"W2\":39,\"W3\":13,\"W\":1521,\"disc\":19773,\"irreducible\":true,\"monogenic\":\"yes\",\"witness_prime\":null,\"galois\":\"C4\",\"family\":\"F5\"}"
        );
        assert_eq!(r.to_csv(), "9,19,3,39,13,1521,19773,true,yes,,C4,F5");
        let r = classify_one(&rq(8, 0), false).unwrap();
        assert_eq!(r.to_csv(), "8,0,-14,18,72,-18144,-1306368,true,no,3,D4,");
    }

    #[test]
    fn scan_small_grid() {
        let config = CampaignConfig {
            a_min: -5,
            a_max: 5,
            b_min: -5,
            b_max: 5,
            run_oracle: true,
            run_frobenius: false,
            workers: 1,
            ..CampaignConfig::default()
        };
        let (records, summary) = scan(&config).unwrap();
        assert_eq!(records.len(), 121);
        assert_eq!(summary.cells, 121);
        assert!(summary.mismatches.is_empty(), "{:?}", summary.mismatches);
        // records are ordered by (A, B)
        for w in records.windows(2) {
            assert!((w[0].a, w[0].b) < (w[1].a, w[1].b));
        }
    }

    #[test]
    fn scan_rejects_bad_config() {
        let config = CampaignConfig {
            a_min: 5,
            a_max: -5,
            ..CampaignConfig::default()
        };
        assert!(matches!(scan(&config), Err(Error::Config(_))));
        let config = CampaignConfig {
            workers: 0,
            ..CampaignConfig::default()
        };
        assert!(matches!(scan(&config), Err(Error::Config(_))));
    }

    #[test]
    fn find_f5_small_bounds() {
        let hits = find_f5(5).unwrap();
        assert_eq!(hits, vec![rq(-1, 1), rq(1, 1)]);
        let hits = find_f5(31).unwrap();
        assert_eq!(
            hits,
            vec![
                rq(-11, 31),
                rq(-9, 19),
                rq(-1, 1),
                rq(1, 1),
                rq(9, 19),
                rq(11, 31)
            ]
        );
    }

    #[test]
    fn audit_examples() {
        let report = distinctness_audit(AuditSelector::BZeroPositive, 2, 60).unwrap();
        assert!(!report.members.is_empty());
        assert!(report.inconclusive.is_empty());
        // single-member range is vacuously clean
        let report = distinctness_audit(AuditSelector::BZeroPositive, 2, 2).unwrap();
        assert_eq!(report.pairs_checked, 0);
        assert!(report.inconclusive.is_empty());
        let report = distinctness_audit(AuditSelector::Family(3), 5, 40).unwrap();
        assert!(!report.members.is_empty());
        assert!(report.inconclusive.is_empty());
        assert!(distinctness_audit(AuditSelector::Family(3), 10, 5).is_err());
    }

    #[test]
    fn explain_attaches_reports() {
        let e = explain_one(&rq(8, 0)).unwrap();
        assert!(e.resolvent.is_some());
        // disc = -1306368 = -2^7 * 3^6 * 14 ... primes with square divisors: 2, 3
        let primes: Vec<u64> = e.reports.iter().map(|r| r.prime).collect();
        assert!(primes.contains(&2) && primes.contains(&3));
        let failing: Vec<u64> = e
            .reports
            .iter()
            .filter(|r| r.p_divides_index)
            .map(|r| r.prime)
            .collect();
        assert_eq!(failing, vec![3]);
    }
}
