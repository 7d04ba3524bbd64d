//! JSONL ledger with deterministic content and prefix-safe resume.
//!
//! The first line is a header describing the run configuration; every other
//! line is one [`CheckReport`]. Reports carry the instance index and a
//! logical sequence number instead of wall-clock timestamps, so two runs of
//! the same configuration produce byte-identical ledgers and an interrupted
//! run resumes to exactly the bytes of an uninterrupted one.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::report::CheckReport;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerHeader {
    pub kind: String,
    pub version: u32,
    pub corpus: Option<String>,
    pub balanced: Option<String>,
    pub checks: Vec<String>,
    pub fields: Vec<u32>,
}

impl LedgerHeader {
    pub fn line(&self) -> String {
        serde_json::to_string(self).expect("header serializes")
    }
}

/// State recovered from an existing ledger: how many report lines are kept,
/// and which instance to re-run first.
#[derive(Debug)]
pub struct ResumePoint {
    pub next_instance: u64,
    pub lines_kept: u64,
}

/// Truncates the ledger so it ends just before the first report of the last
/// (possibly incomplete) instance, and returns where to resume. A trailing
/// partial line is discarded as well.
pub fn prepare_resume(path: &Path, header: &LedgerHeader) -> Result<ResumePoint> {
    let file = File::open(path)?;
    let mut reader = BufReader::new(file);

    let mut header_line = String::new();
    reader.read_line(&mut header_line)?;
    let on_disk: LedgerHeader = serde_json::from_str(header_line.trim_end()).map_err(|e| {
        Error::Ledger(format!("unreadable header line: {e}"))
    })?;
    if on_disk != *header {
        return Err(Error::Ledger(
            "ledger was written with a different configuration; refusing to resume".into(),
        ));
    }

    let mut offset = header_line.len() as u64;
    let mut last_instance: Option<u64> = None;
    let mut last_instance_offset = offset;
    let mut lines_before_last = 0u64;
    let mut lines_total = 0u64;
    loop {
        let mut line = String::new();
        let n = reader.read_line(&mut line)?;
        if n == 0 {
            break;
        }
        if !line.ends_with('\n') {
            break; // partial tail from an interrupted write
        }
        let report: CheckReport = match serde_json::from_str(line.trim_end()) {
            Ok(r) => r,
            Err(_) => break,
        };
        let idx = report
            .idx
            .ok_or_else(|| Error::Ledger("report line without instance index".into()))?;
        if last_instance != Some(idx) {
            last_instance = Some(idx);
            last_instance_offset = offset;
            lines_before_last = lines_total;
        }
        offset += n as u64;
        lines_total += 1;
    }

    // Drop the last instance's lines; it is re-run so that an interruption in
    // the middle of a group cannot leave it half-written.
    let (truncate_at, kept, next) = match last_instance {
        None => (offset, 0, 0),
        Some(idx) => (last_instance_offset, lines_before_last, idx),
    };
    let f = OpenOptions::new().write(true).open(path)?;
    f.set_len(truncate_at)?;
    Ok(ResumePoint {
        next_instance: next,
        lines_kept: kept,
    })
}

/// Append-mode writer positioned at the end of a prepared ledger.
pub struct LedgerWriter {
    file: File,
    pub seq: u64,
}

impl LedgerWriter {
    pub fn create(path: &Path, header: &LedgerHeader) -> Result<Self> {
        let mut file = File::create(path)?;
        file.write_all(header.line().as_bytes())?;
        file.write_all(b"\n")?;
        file.flush()?;
        Ok(LedgerWriter { file, seq: 0 })
    }

    pub fn append(path: &Path, seq: u64) -> Result<Self> {
        let mut file = OpenOptions::new().write(true).open(path)?;
        file.seek(SeekFrom::End(0))?;
        Ok(LedgerWriter { file, seq })
    }

    /// Writes one instance's reports as consecutive lines.
    pub fn write_group(&mut self, idx: u64, reports: &[CheckReport]) -> Result<()> {
        let mut buf = String::new();
        for r in reports {
            let mut r = r.clone();
            r.idx = Some(idx);
            r.seq = Some(self.seq);
            self.seq += 1;
            buf.push_str(&serde_json::to_string(&r)?);
            buf.push('\n');
        }
        self.file.write_all(buf.as_bytes())?;
        self.file.flush()?;
        Ok(())
    }
}

/// All report lines of a ledger (header skipped).
pub fn read_reports(path: &Path) -> Result<Vec<CheckReport>> {
    let mut contents = String::new();
    File::open(path)?.read_to_string(&mut contents)?;
    let mut out = Vec::new();
    for (i, line) in contents.lines().enumerate() {
        if i == 0 || line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(line)?);
    }
    Ok(out)
}
