//! File formats: tables as JSON or CSV, generators, n-ary tables and posets
//! as JSON.

use std::fs;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::domain::BinTable;
use crate::error::{Error, Result};
use crate::gspec::{validate_gspec, GSpec, GSpecDraft};
use crate::verify::{NaryTable, NaryTableFile, Poset, PosetFile};

/// `{"k": 3, "table": [[...], ...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub k: usize,
    pub table: Vec<Vec<usize>>,
}

impl TableFile {
    pub fn from_table(t: &BinTable) -> Self {
        TableFile { k: t.size(), table: t.rows() }
    }

    pub fn into_table(self) -> Result<BinTable> {
        if self.table.len() != self.k {
            return Err(Error::ChainMismatch { expected: self.k, found: self.table.len() });
        }
        BinTable::from_rows(&self.table)
    }
}

/// One row per line.
pub fn table_to_json(t: &BinTable) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| format!("    {}", serde_json::to_string(r).expect("integers serialize")))
        .collect();
    format!("{{\n  \"k\": {},\n  \"table\": [\n{}\n  ]\n}}\n", t.size(), rows.join(",\n"))
}

pub fn table_from_json(text: &str) -> Result<BinTable> {
    serde_json::from_str::<TableFile>(text)?.into_table()
}

/// `k` lines of `k` comma-separated integers.
pub fn table_to_csv(t: &BinTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in t.rows() {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

pub fn table_from_csv(text: &str) -> Result<BinTable> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let rows = r.deserialize::<Vec<usize>>().collect::<std::result::Result<Vec<_>, _>>()?;
    BinTable::from_rows(&rows)
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

/// Reads a table, choosing CSV by the `.csv` extension and JSON otherwise.
pub fn read_table(path: impl AsRef<Path>) -> Result<BinTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    if is_csv(path) {
        table_from_csv(&text)
    } else {
        table_from_json(&text)
    }
}

pub fn write_table(path: impl AsRef<Path>, t: &BinTable) -> Result<()> {
    let path = path.as_ref();
    let text = if is_csv(path) { table_to_csv(t)? } else { table_to_json(t) };
    write_text(path, &text)
}

pub fn gspec_to_json(s: &GSpec) -> String {
    to_json(&s.to_draft())
}

/// Parses and validates; any issue is an error.
pub fn gspec_from_json(text: &str) -> Result<GSpec> {
    let draft: GSpecDraft = serde_json::from_str(text)?;
    validate_gspec(&draft).into_result()
}

pub fn read_gspec(path: impl AsRef<Path>) -> Result<GSpec> {
    gspec_from_json(&fs::read_to_string(path)?)
}

pub fn write_gspec(path: impl AsRef<Path>, s: &GSpec) -> Result<()> {
    write_text(path.as_ref(), &gspec_to_json(s))
}

pub fn read_nary(path: impl AsRef<Path>) -> Result<NaryTable> {
    NaryTable::from_file(read_json::<NaryTableFile>(path)?)
}

pub fn write_nary(path: impl AsRef<Path>, t: &NaryTable) -> Result<()> {
    write_text(path.as_ref(), &to_json(&t.to_file()))
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<Poset> {
    Poset::from_file(&read_json::<PosetFile>(path)?)
}

pub fn write_poset(path: impl AsRef<Path>, p: &Poset) -> Result<()> {
    write_text(path.as_ref(), &to_json(&p.to_file()))
}

pub fn read_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize + ?Sized>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    write_text(path.as_ref(), &to_json(value))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    Ok(fs::write(path, text)?)
}
