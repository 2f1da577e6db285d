//! Input documents: Lie rings and cocycle tables.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use liecohom::cohomology::Cocycle;
use liecohom::liering::LieRing;
use liecohom::FinAbGroup;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT: u32 = 1;

/// A Lie ring on generators `g1..gr` of the given orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieRingDocument {
    pub format: u32,
    pub orders: Vec<i64>,
    /// Keys `"i,j"` with `1 <= i < j <= r`; absent pairs bracket to zero.
    pub bracket: BTreeMap<String, Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LieSource {
    Path(String),
    Inline(LieRingDocument),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDocument {
    pub format: u32,
    pub lie: LieSource,
    pub coeff: Vec<i64>,
    /// `|L|` rows of `|L|` coefficient vectors.
    pub f: Vec<Vec<Vec<i64>>>,
    pub g: Vec<Vec<Vec<i64>>>,
}

/// File contents plus every byte that fed the computation, for the digest.
pub struct Loaded<T> {
    pub value: T,
    pub bytes: Vec<u8>,
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn doc_err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Document {
        path: path.to_string(),
        message: message.into(),
    }
}

fn check_format(path: &str, format: u32) -> Result<(), CliError> {
    if format != FORMAT {
        return Err(doc_err(
            path,
            format!("unsupported format {format}, expected {FORMAT}"),
        ));
    }
    Ok(())
}

fn parse_key(key: &str, rank: usize) -> Option<(usize, usize)> {
    let (a, b) = key.split_once(',')?;
    let i: usize = a.trim().parse().ok()?;
    let j: usize = b.trim().parse().ok()?;
    (1 <= i && i < j && j <= rank).then(|| (i - 1, j - 1))
}

impl LieRingDocument {
    pub fn parse(text: &str, path: &str) -> Result<Self, CliError> {
        let doc: LieRingDocument =
            serde_json::from_str(text).map_err(|e| doc_err(path, e.to_string()))?;
        check_format(path, doc.format)?;
        Ok(doc)
    }

    pub fn to_ring(&self, path: &str) -> Result<LieRing, CliError> {
        let r = self.orders.len();
        let mut entries = Vec::with_capacity(self.bracket.len());
        let mut seen = std::collections::BTreeSet::new();
        for (key, v) in &self.bracket {
            let ij = parse_key(key, r).ok_or_else(|| {
                doc_err(
                    path,
                    format!("bracket key \"{key}\" is not \"i,j\" with 1 <= i < j <= {r}"),
                )
            })?;
            if !seen.insert(ij) {
                return Err(doc_err(path, format!("bracket pair \"{key}\" given twice")));
            }
            if v.len() != r {
                return Err(doc_err(
                    path,
                    format!(
                        "bracket \"{key}\" has {} coefficients, expected {r}",
                        v.len()
                    ),
                ));
            }
            entries.push((ij, v.clone()));
        }
        Ok(LieRing::new(&self.orders, &entries)?)
    }

    pub fn from_ring(ring: &LieRing) -> Self {
        let bracket = ring
            .nonzero_brackets()
            .into_iter()
            .map(|((i, j), v)| {
                (
                    format!("{},{}", i + 1, j + 1),
                    v.into_iter().map(|c| c as i64).collect(),
                )
            })
            .collect();
        LieRingDocument {
            format: FORMAT,
            orders: ring.moduli().iter().map(|&d| d as i64).collect(),
            bracket,
        }
    }
}

pub fn load_ring(path: &str) -> Result<Loaded<LieRing>, CliError> {
    let bytes = read(Path::new(path))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| doc_err(path, "not UTF-8"))?;
    let ring = LieRingDocument::parse(&text, path)?.to_ring(path)?;
    Ok(Loaded { value: ring, bytes })
}

fn flatten(
    path: &str,
    name: &str,
    rows: &[Vec<Vec<i64>>],
    n: usize,
) -> Result<Vec<Vec<i64>>, CliError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(doc_err(
            path,
            format!("table {name} must be {n} rows of {n} entries"),
        ));
    }
    Ok(rows.iter().flatten().cloned().collect())
}

pub fn load_cocycle(path: &str) -> Result<Loaded<Cocycle>, CliError> {
    let mut bytes = read(Path::new(path))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| doc_err(path, "not UTF-8"))?;
    let doc: CocycleDocument =
        serde_json::from_str(&text).map_err(|e| doc_err(path, e.to_string()))?;
    check_format(path, doc.format)?;
    let ring = match &doc.lie {
        LieSource::Inline(d) => {
            check_format(path, d.format)?;
            d.to_ring(path)?
        }
        LieSource::Path(p) => {
            let base = Path::new(path).parent().unwrap_or(Path::new("."));
            let full: PathBuf = base.join(p);
            let full = full.display().to_string();
            let loaded = load_ring(&full)?;
            bytes.extend(loaded.bytes);
            loaded.value
        }
    };
    let coeff = FinAbGroup::new(&doc.coeff)?;
    let n = ring
        .size()
        .ok_or_else(|| doc_err(path, "ring too large for cocycle tables"))?;
    let f = flatten(path, "f", &doc.f, n)?;
    let g = flatten(path, "g", &doc.g, n)?;
    let value = Cocycle::from_tables(&ring, &coeff, &f, &g)?;
    Ok(Loaded { value, bytes })
}

/// Table rows for output, `|L|` rows of `|L|` coefficient vectors.
pub fn rows(flat: Vec<Vec<u64>>, n: usize) -> Vec<Vec<Vec<u64>>> {
    flat.chunks(n.max(1)).map(<[_]>::to_vec).collect()
}
