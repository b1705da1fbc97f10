//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}`: homological index `i`, internal degree `j`.
/// Only nonzero entries are stored, so derived equality is table equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u64, value: u64) {
        if value == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += value;
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Total Betti numbers `β_0, ..., β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        match self.projective_dimension() {
            None => vec![],
            Some(p) => (0..=p).map(|i| self.total(i)).collect(),
        }
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Entries of row `r`, that is `β_{i, i+r}` indexed by `i`.
    pub fn row(&self, r: u64) -> Vec<u64> {
        match self.projective_dimension() {
            None => vec![],
            Some(p) => (0..=p).map(|i| self.get(i, i as u64 + r)).collect(),
        }
    }

    /// Row labels `j - i` that carry a nonzero entry.
    pub fn row_labels(&self) -> Vec<u64> {
        let mut rows: Vec<u64> = self.entries.keys().map(|&(i, j)| j - i as u64).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// True iff every nonzero entry lies on row `d`.
    pub fn is_linear(&self, d: u64) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as u64 + d)
    }

    /// `{"rows": {"<j-i>": {"<i>": value}}, "totals": {"<i>": value}}`.
    pub fn to_json(&self) -> Value {
        let mut rows = Map::new();
        for (&(i, j), &v) in &self.entries {
            let row = rows
                .entry((j - i as u64).to_string())
                .or_insert_with(|| Value::Object(Map::new()));
            row.as_object_mut()
                .expect("row is an object")
                .insert(i.to_string(), json!(v));
        }
        let totals: Map<String, Value> = self
            .totals()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (i.to_string(), json!(v)))
            .collect();
        json!({ "rows": rows, "totals": totals })
    }

    pub fn from_json(value: &Value) -> Result<BettiTable> {
        let bad = |m: &str| Error::parse(0, format!("Betti table JSON: {m}"));
        let rows = value
            .get("rows")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing `rows` object"))?;
        let mut t = BettiTable::new();
        for (r, cols) in rows {
            let r: u64 = r.parse().map_err(|_| bad("row label is not an integer"))?;
            let cols = cols
                .as_object()
                .ok_or_else(|| bad("row is not an object"))?;
            for (i, v) in cols {
                let i: usize = i
                    .parse()
                    .map_err(|_| bad("column label is not an integer"))?;
                let v = v
                    .as_u64()
                    .ok_or_else(|| bad("entry is not a nonnegative integer"))?;
                t.add(i, i as u64 + r, v);
            }
        }
        Ok(t)
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u64), u64)>) -> Self {
        let mut t = BettiTable::new();
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }
}

/// ASCII table: column `i`, row `j - i`, dashes for zeros, totals last.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "(zero table)");
        };
        let rows = self.row_labels();
        let cell = |v: u64| {
            if v == 0 {
                "-".to_string()
            } else {
                v.to_string()
            }
        };
        let totals = self.totals();
        let mut width = totals
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        width = width.max(pd.to_string().len());
        let label_width = rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1)
            .max("total".len());

        write!(f, "{:>label_width$} |", "")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        let rule = format!(
            "{}-+{}",
            "-".repeat(label_width),
            "-".repeat((width + 1) * (pd + 1))
        );
        writeln!(f, "{rule}")?;
        for &r in &rows {
            write!(f, "{:>label_width$} |", r)?;
            for v in self.row(r) {
                write!(f, " {:>width$}", cell(v))?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{rule}")?;
        write!(f, "{:>label_width$} |", "total")?;
        for v in totals {
            write!(f, " {:>width$}", v)?;
        }
        writeln!(f)
    }
}
