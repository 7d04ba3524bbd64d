//! The suite runner: enumerates instances, fans the checks out over a
//! bounded worker pool, and merges results back in enumeration order through
//! a single ledger writer.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use crate::colored::ColoredComplex;
use crate::error::Error;
use crate::harness::balanced::{random_color_shifted, BalancedConfig};
use crate::harness::checks::{balanced_reports, flag_reports, CheckId, FlagInstance};
use crate::harness::corpus::Corpus;
use crate::harness::ledger::{prepare_resume, read_reports, LedgerHeader, LedgerWriter};
use crate::homology::PrimeField;
use crate::report::{CheckReport, Verdict};
use crate::Result;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub corpus: Option<Corpus>,
    pub balanced: Option<BalancedConfig>,
    pub checks: BTreeSet<CheckId>,
    pub fields: Vec<u32>,
    pub workers: usize,
    /// Process at most this many instances (counted from the start of the
    /// enumeration); used to exercise interruption and resume.
    pub limit: Option<usize>,
    /// Stop scheduling new instances as soon as a theorem check fails; the
    /// ledger then ends with the failing instance's group, giving a minimal
    /// witness. Conjecture certificates never trigger this.
    pub fail_fast: bool,
}

impl SuiteConfig {
    pub fn new(corpus: Option<Corpus>, balanced: Option<BalancedConfig>) -> Self {
        SuiteConfig {
            corpus,
            balanced,
            checks: CheckId::ALL.into_iter().collect(),
            fields: vec![2],
            workers: std::thread::available_parallelism().map_or(4, |n| n.get().min(8)),
            limit: None,
            fail_fast: true,
        }
    }

    fn header(&self) -> LedgerHeader {
        LedgerHeader {
            kind: "verification-ledger".into(),
            version: 1,
            corpus: self.corpus.as_ref().map(Corpus::describe),
            balanced: self.balanced.as_ref().map(|b| {
                format!(
                    "count={} seed={} d<={} lambda<={}",
                    b.count, b.seed, b.d_max, b.lambda_max
                )
            }),
            checks: self.checks.iter().map(|c| c.name().to_string()).collect(),
            fields: self.fields.clone(),
        }
    }
}

enum Instance {
    Flag(Box<FlagInstance>),
    Balanced { cc: ColoredComplex, descriptor: String },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub pass: u64,
    pub equality: u64,
    pub fail: u64,
    pub certificate: u64,
    pub skipped: u64,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Equality => self.equality += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Certificate => self.certificate += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Debug, Default)]
pub struct Summary {
    pub per_check: BTreeMap<String, VerdictCounts>,
    pub failures: u64,
    pub first_failure: Option<CheckReport>,
    pub certificates: Vec<CheckReport>,
    pub equality_instances: Vec<CheckReport>,
    pub instances: u64,
    pub lines: u64,
}

impl Summary {
    fn from_reports(reports: Vec<CheckReport>) -> Summary {
        let mut s = Summary::default();
        let mut seen = BTreeSet::new();
        for r in reports {
            s.lines += 1;
            if let Some(i) = r.idx {
                seen.insert(i);
            }
            s.per_check.entry(r.check.clone()).or_default().add(r.verdict);
            match r.verdict {
                Verdict::Fail => {
                    s.failures += 1;
                    if s.first_failure.is_none() {
                        s.first_failure = Some(r);
                    }
                }
                Verdict::Certificate => s.certificates.push(r),
                Verdict::Equality => s.equality_instances.push(r),
                _ => {}
            }
        }
        s.instances = seen.len() as u64;
        s
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<10} {:>8} {:>9} {:>6} {:>12} {:>8}\n",
            "check", "pass", "equality", "fail", "certificate", "skipped"
        ));
        for (check, c) in &self.per_check {
            out.push_str(&format!(
                "{:<10} {:>8} {:>9} {:>6} {:>12} {:>8}\n",
                check, c.pass, c.equality, c.fail, c.certificate, c.skipped
            ));
        }
        out.push_str(&format!(
            "instances: {}  lines: {}  failures: {}  certificates: {}\n",
            self.instances,
            self.lines,
            self.failures,
            self.certificates.len()
        ));
        out
    }
}

fn fnv64(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn build_instances(cfg: &SuiteConfig) -> Result<Vec<Instance>> {
    let mut instances = Vec::new();
    if let Some(corpus) = &cfg.corpus {
        for g in corpus.graphs()? {
            instances.push(Instance::Flag(Box::new(FlagInstance::new(g))));
        }
    }
    if let Some(b) = &cfg.balanced {
        for i in 0..b.count {
            let cc = random_color_shifted(b, i as u64);
            let hash = fnv64(cc.to_json().to_string().as_bytes());
            let descriptor = format!("balanced:seed={}:idx={}:{:016x}", b.seed, i, hash);
            instances.push(Instance::Balanced { cc, descriptor });
        }
    }
    Ok(instances)
}

fn run_instance(inst: &Instance, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for &p in &cfg.fields {
        let field = PrimeField::new(p).expect("fields validated on entry");
        match inst {
            Instance::Flag(fi) => reports.extend(flag_reports(fi, &cfg.checks, field)),
            Instance::Balanced { cc, descriptor } => {
                reports.extend(balanced_reports(cc, descriptor, &cfg.checks, field))
            }
        }
    }
    reports
}

/// Runs the configured checks over the configured corpora, writing (or
/// extending, with `resume`) the JSONL ledger, and returns the summary of the
/// complete ledger.
pub fn run_suite(cfg: &SuiteConfig, ledger_path: &Path, resume: bool) -> Result<Summary> {
    for &p in &cfg.fields {
        PrimeField::new(p)?;
    }
    if cfg.fields.is_empty() {
        return Err(Error::Domain("need at least one field characteristic".into()));
    }
    let header = cfg.header();
    let instances = build_instances(cfg)?;

    let (mut writer, start) = if resume && ledger_path.exists() {
        let rp = prepare_resume(ledger_path, &header)?;
        (
            LedgerWriter::append(ledger_path, rp.lines_kept)?,
            rp.next_instance as usize,
        )
    } else {
        (LedgerWriter::create(ledger_path, &header)?, 0usize)
    };

    let end = cfg.limit.unwrap_or(instances.len()).min(instances.len());
    if start < end {
        let next = AtomicUsize::new(start);
        let (tx, rx) = mpsc::channel::<(usize, Vec<CheckReport>)>();
        let workers = cfg.workers.max(1);
        std::thread::scope(|scope| -> Result<()> {
            for _ in 0..workers {
                let tx = tx.clone();
                let next = &next;
                let instances = &instances;
                scope.spawn(move || loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= end {
                        break;
                    }
                    let reports = run_instance(&instances[i], cfg);
                    if tx.send((i, reports)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            // Single serialization point: reorder and write in corpus order.
            let mut pending: BTreeMap<usize, Vec<CheckReport>> = BTreeMap::new();
            let mut want = start;
            'recv: for (i, reports) in rx {
                pending.insert(i, reports);
                while let Some(reports) = pending.remove(&want) {
                    writer.write_group(want as u64, &reports).map_err(|e| {
                        Error::Ledger(format!(
                            "write failed at instance {want}; resume with --resume: {e}"
                        ))
                    })?;
                    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
                    want += 1;
                    if failed && cfg.fail_fast {
                        // The ledger ends with the failing instance's group;
                        // its reports carry both sides of the inequality.
                        break 'recv;
                    }
                }
            }
            Ok(())
        })?;
    }

    Ok(Summary::from_reports(read_reports(ledger_path)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> SuiteConfig {
        let mut cfg = SuiteConfig::new(
            Some(Corpus::Internal { n_max: 4 }),
            Some(BalancedConfig {
                count: 10,
                ..BalancedConfig::default()
            }),
        );
        cfg.fields = vec![2, 3];
        cfg
    }

    #[test]
    fn suite_runs_clean_on_tiny_corpus() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ledger.jsonl");
        let summary = run_suite(&small_config(), &path, false).unwrap();
        assert_eq!(summary.failures, 0);
        assert!(summary.certificates.is_empty());
        assert_eq!(summary.instances, 18 + 10);
        assert!(summary.per_check.contains_key("ZYKOV"));
    }

    #[test]
    fn ledgers_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.jsonl");
        let b = dir.path().join("b.jsonl");
        let cfg = small_config();
        run_suite(&cfg, &a, false).unwrap();
        run_suite(&cfg, &b, false).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }

    #[test]
    fn interrupted_run_resumes_to_identical_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let full = dir.path().join("full.jsonl");
        let cfg = small_config();
        run_suite(&cfg, &full, false).unwrap();

        let halted = dir.path().join("halted.jsonl");
        let mut half = cfg.clone();
        half.limit = Some(14);
        run_suite(&half, &halted, false).unwrap();
        run_suite(&cfg, &halted, true).unwrap();
        assert_eq!(std::fs::read(&full).unwrap(), std::fs::read(&halted).unwrap());
    }

    #[test]
    fn summary_tracks_failures_and_first_witness() {
        let mk = |check: &str, verdict: Verdict, inst: &str| {
            CheckReport::new(check, inst).with_p(2).with_verdict(verdict)
        };
        let summary = Summary::from_reports(vec![
            mk("ZYKOV", Verdict::Pass, "a"),
            mk("THM_1_2", Verdict::Fail, "b"),
            mk("THM_1_5", Verdict::Equality, "b"),
            mk("CONJ_6_2", Verdict::Certificate, "c"),
            mk("THM_1_2", Verdict::Fail, "c"),
        ]);
        assert_eq!(summary.failures, 2);
        assert_eq!(summary.first_failure.as_ref().unwrap().instance, "b");
        assert_eq!(summary.certificates.len(), 1);
        assert_eq!(summary.equality_instances.len(), 1);
        assert_eq!(summary.per_check["THM_1_2"].fail, 2);
    }

    #[test]
    fn empty_corpus_gives_empty_summary() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.jsonl");
        let cfg = SuiteConfig::new(None, None);
        let summary = run_suite(&cfg, &path, false).unwrap();
        assert_eq!(summary.lines, 0);
        assert_eq!(summary.instances, 0);
    }
}
