//! Rank/torsion tables in text, JSON and CSV form.
//!
//! JSON and CSV output is deterministic: timing is only included in JSON
//! when requested, under a separate `timing` key.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradedquotient::{GradedComponentReport, GradedQuotient};
use crate::presentations::PresentationKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub degree: usize,
    pub witt: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    /// Wall time per degree, in microseconds.
    pub per_degree_us: Vec<u64>,
    pub total_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub presentation: String,
    pub n: usize,
    pub rows: Vec<TableRow>,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

fn micros(d: Duration) -> u64 {
    u64::try_from(d.as_micros()).unwrap_or(u64::MAX)
}

impl TableDocument {
    pub fn from_reports(
        kind: PresentationKind,
        n: usize,
        reports: &[GradedComponentReport],
    ) -> Result<Self> {
        let rows = reports
            .iter()
            .map(|r| {
                let torsion = r
                    .torsion
                    .iter()
                    .map(|t| u64::try_from(t).map_err(|_| Error::Overflow(format!("torsion factor {t}"))))
                    .collect::<Result<_>>()?;
                Ok(TableRow {
                    degree: r.degree,
                    witt: r.witt_rank,
                    rank: r.free_rank,
                    torsion,
                })
            })
            .collect::<Result<_>>()?;
        let per_degree_us: Vec<u64> = reports.iter().map(|r| micros(r.elapsed)).collect();
        Ok(TableDocument {
            presentation: kind.name().to_string(),
            n,
            rows,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timing: Some(Timing {
                total_us: per_degree_us.iter().sum(),
                per_degree_us,
            }),
        })
    }

    /// Computes the table for degrees `1..=max_degree`.
    pub fn compute(kind: PresentationKind, n: usize, max_degree: usize) -> Result<Self> {
        let reports = GradedQuotient::new(kind.build(n)?)?.table(max_degree)?;
        TableDocument::from_reports(kind, n, &reports)
    }

    pub fn without_timing(mut self) -> Self {
        self.timing = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("bad table JSON: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["degree", "witt", "rank", "torsion"])
            .expect("in-memory write");
        for r in &self.rows {
            let torsion: Vec<String> = r.torsion.iter().map(|t| t.to_string()).collect();
            w.write_record([
                r.degree.to_string(),
                r.witt.to_string(),
                r.rank.to_string(),
                torsion.join(";"),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} (n = {})", self.presentation, self.n).unwrap();
        writeln!(out, "{:>6} {:>8} {:>8}  {:<12} {:>10}", "degree", "witt", "rank", "torsion", "time").unwrap();
        for (pos, r) in self.rows.iter().enumerate() {
            let torsion = if r.torsion.is_empty() {
                "-".to_string()
            } else {
                let mut parts = Vec::new();
                for chunk in r.torsion.chunk_by(|a, b| a == b) {
                    parts.push(match chunk.len() {
                        1 => format!("Z/{}", chunk[0]),
                        run => format!("(Z/{})^{run}", chunk[0]),
                    });
                }
                parts.join(" + ")
            };
            let time = self
                .timing
                .as_ref()
                .and_then(|t| t.per_degree_us.get(pos))
                .map(|us| format!("{:.1}ms", *us as f64 / 1000.0))
                .unwrap_or_default();
            writeln!(out, "{:>6} {:>8} {:>8}  {:<12} {:>10}", r.degree, r.witt, r.rank, torsion, time).unwrap();
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => self.to_json() + "\n",
            OutputFormat::Csv => self.to_csv(),
        }
    }
}
