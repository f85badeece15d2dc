//! On-disk and textual formats.
//!
//! Binary tables (`.lavr`): the bytes `LAVR`, a version byte `0x01`, one byte
//! `n`, then for `p = 1..2^n` the period as a little-endian `u32` followed by
//! that many little-endian `u32` row values.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::error::{LaverError, Result};
use crate::poset::DivisibilityPoset;
use crate::table::{Element, LaverTable};

pub const MAGIC: [u8; 4] = *b"LAVR";
pub const VERSION: u8 = 1;

pub fn encode_table(t: &LaverTable) -> Vec<u8> {
    let mut out = Vec::with_capacity(6 + 8 * t.size() as usize);
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(t.n() as u8);
    for p in 1..=t.size() {
        let row = t.row(p);
        out.extend_from_slice(&(row.len() as u32).to_le_bytes());
        for &v in row {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    out
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Cursor<'_> {
    fn take(&mut self, len: usize) -> Result<&[u8]> {
        let end = self.at.checked_add(len).filter(|&e| e <= self.bytes.len());
        let Some(end) = end else {
            return Err(LaverError::Format(format!("truncated at byte {}", self.bytes.len())));
        };
        let s = &self.bytes[self.at..end];
        self.at = end;
        Ok(s)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }
}

/// Parses a `.lavr` image; the rows are re-validated against a fresh build.
pub fn decode_table(bytes: &[u8], max_n: u32) -> Result<LaverTable> {
    let mut c = Cursor { bytes, at: 0 };
    if c.take(4)? != MAGIC {
        return Err(LaverError::Format("bad magic".into()));
    }
    let version = c.take(1)?[0];
    if version != VERSION {
        return Err(LaverError::Format(format!("unsupported version {version}")));
    }
    let n = u32::from(c.take(1)?[0]);
    if n > max_n {
        return Err(LaverError::SizeLimit {
            what: "table file",
            requested: n,
            cap: max_n,
        });
    }
    let size = 1u32 << n;
    let mut rows = Vec::with_capacity(size as usize);
    for p in 1..=size {
        let per = c.u32()?;
        if per == 0 || per > size || !per.is_power_of_two() {
            return Err(LaverError::Format(format!("row {p} has period {per}")));
        }
        let raw = c.take(4 * per as usize)?;
        rows.push(
            raw.chunks_exact(4)
                .map(|b| u32::from_le_bytes(b.try_into().expect("4 bytes")))
                .collect(),
        );
    }
    if c.at != bytes.len() {
        return Err(LaverError::Format(format!("{} trailing bytes", bytes.len() - c.at)));
    }
    LaverTable::from_periodic_rows(n, rows).map_err(|e| match e {
        LaverError::Format(_) => e,
        other => LaverError::Format(other.to_string()),
    })
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_table(t: &LaverTable, path: &Path) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(&encode_table(t))?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| LaverError::Io(e.error))?;
    Ok(())
}

pub fn read_table(path: &Path, max_n: u32) -> Result<LaverTable> {
    let mut bytes = Vec::new();
    fs::File::open(path)?.read_to_end(&mut bytes)?;
    decode_table(&bytes, max_n)
}

pub fn cache_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("A{n}.lavr"))
}

/// Reads `A_n` from `dir` if present and valid, otherwise builds it and
/// stores it there.
pub fn load_or_build(n: u32, max_n: u32, dir: &Path) -> Result<LaverTable> {
    let path = cache_path(dir, n);
    if let Ok(t) = read_table(&path, max_n) {
        if t.n() == n {
            return Ok(t);
        }
    }
    let t = LaverTable::build_capped(n, max_n)?;
    fs::create_dir_all(dir)?;
    write_table(&t, &path)?;
    Ok(t)
}

#[derive(Serialize)]
struct TableJson<'a> {
    n: u32,
    periods: Vec<u32>,
    rows: Vec<&'a [Element]>,
}

pub fn table_json(t: &LaverTable) -> String {
    let doc = TableJson {
        n: t.n(),
        periods: t.periods(),
        rows: (1..=t.size()).map(|p| t.row(p)).collect(),
    };
    serde_json::to_string(&doc).expect("table serializes")
}

/// Full `2^n × 2^n` table, rows in ascending or descending `p`.
pub fn table_text(t: &LaverTable, descending: bool) -> String {
    let size = t.size();
    let width = size.to_string().len();
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "");
    for q in 1..=size {
        let _ = write!(out, " {q:>width$}");
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 2 + (width + 1) * size as usize));
    out.push('\n');
    let ps: Vec<Element> = if descending {
        (1..=size).rev().collect()
    } else {
        (1..=size).collect()
    };
    for p in ps {
        let _ = write!(out, "{p:>width$} |");
        for q in 1..=size {
            let _ = write!(out, " {:>width$}", t.apply(p, q).expect("in range"));
        }
        out.push('\n');
    }
    out
}

pub fn cochain_json(phi: &Cochain) -> String {
    serde_json::to_string(phi).expect("cochain serializes")
}

#[derive(Deserialize)]
struct CochainJson {
    n: u32,
    k: u32,
    values: Vec<i64>,
}

pub fn parse_cochain_json(text: &str) -> Result<Cochain> {
    let raw: CochainJson = serde_json::from_str(text).map_err(|e| LaverError::Parse(e.to_string()))?;
    Cochain::from_values(raw.n, raw.k, raw.values)
}

/// A 2-cochain as a matrix: header `x,1,…,2^n`, then one line per first
/// argument.
pub fn cochain_csv(phi: &Cochain) -> Result<String> {
    if phi.arity() != 2 {
        return Err(LaverError::Arity {
            expected: 2,
            actual: phi.arity() as usize,
        });
    }
    let size = 1u32 << phi.n();
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("x".to_string()).chain((1..=size).map(|q| q.to_string()));
    w.write_record(header).map_err(csv_err)?;
    for p in 1..=size {
        let row = std::iter::once(p.to_string()).chain((1..=size).map(|q| phi.at(&[p, q]).to_string()));
        w.write_record(row).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| LaverError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("ascii"))
}

fn csv_err(e: csv::Error) -> LaverError {
    LaverError::Io(std::io::Error::other(e))
}

/// Hasse diagram of `◁_n`; nodes ascending, one line per cover.
pub fn poset_dot(poset: &DivisibilityPoset) -> String {
    let mut out = format!("digraph A{} {{\n", poset.n());
    for q in 1..=poset.size() {
        let _ = writeln!(out, "  {q};");
    }
    for (a, b) in poset.covers() {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
    out
}
