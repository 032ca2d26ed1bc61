//! Append-only JSON-lines logs of atlas records, plus CSV and graph6 exports.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use super::{AtlasRecord, Relation, Verdict};
use crate::CODE_VERSION;

/// Records in a log file; a missing file is an empty log. Lines that do not
/// parse (for example a line cut short by an interrupted run) are skipped.
pub fn load_log(path: &Path) -> std::io::Result<Vec<AtlasRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        if let Ok(rec) = serde_json::from_str::<AtlasRecord>(&line?) {
            out.push(rec);
        }
    }
    Ok(out)
}

/// The last record for `(relation, v, k)` written by this code version.
pub fn find_record(records: &[AtlasRecord], relation: Relation, v: usize, k: usize) -> Option<&AtlasRecord> {
    records
        .iter()
        .rev()
        .find(|r| r.relation == relation && r.v == v && r.k == k && r.code_version == CODE_VERSION && r.verdict != Verdict::Undecided)
}

pub fn append_record(path: &Path, record: &AtlasRecord) -> std::io::Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(record).expect("serializable");
    writeln!(f, "{line}")
}

pub const CSV_HEADER: &str = "v,k,relation,verdict,witness_g,witness_g_prime";

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::S => "S",
        Relation::R => "R",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Member => "Member",
        Verdict::NonMember => "NonMember",
        Verdict::Undecided => "Undecided",
    }
}

/// One CSV row. graph6 never contains commas or quotes, so no escaping is needed.
pub fn csv_row(r: &AtlasRecord) -> String {
    let (a, b) = r.witness.clone().unwrap_or_default();
    format!("{},{},{},{},{a},{b}", r.v, r.k, relation_name(r.relation), verdict_name(r.verdict))
}

pub fn write_csv(path: &Path, records: &[AtlasRecord]) -> std::io::Result<()> {
    let mut text = String::from(CSV_HEADER);
    text.push('\n');
    for r in records {
        text.push_str(&csv_row(r));
        text.push('\n');
    }
    fs::write(path, text)
}

/// Writes the witness pair, one graph6 per line, to `<dir>/<relation>_<v>_<k>.g6`.
pub fn write_witness(dir: &Path, r: &AtlasRecord) -> std::io::Result<Option<PathBuf>> {
    let Some((a, b)) = &r.witness else {
        return Ok(None);
    };
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}_{}_{}.g6", relation_name(r.relation), r.v, r.k));
    fs::write(&path, format!("{a}\n{b}\n"))?;
    Ok(Some(path))
}
