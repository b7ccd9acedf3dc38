//! JSON, CSV and markdown renderings of pair rows, example tables and
//! verification summaries. Every number is exact.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::PairId;
use crate::numeric::Quantity;
use crate::pipeline::PipelineReport;
use crate::surface::SurfaceInvariants;
use crate::verify::VerifySummary;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format `{other}` (expected json, csv or markdown)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
        })
    }
}

pub const TABLE_COLUMNS: [&str; 11] = [
    "k",
    "K2_X",
    "chi_X",
    "K2_Y",
    "chi_Y",
    "pg_Y",
    "K2_T",
    "pg_T",
    "sigma_a1",
    "checks_passed",
    "checks_total",
];

fn table_cells(r: &PipelineReport, cell: impl Fn(&Quantity) -> String) -> Vec<String> {
    let k = r.k.map_or_else(|| "k".to_string(), |k| k.to_string());
    let mut row = vec![k];
    row.extend(
        [&r.x.k2, &r.x.chi, &r.y.k2, &r.y.chi, &r.y.pg, &r.t.k2, &r.t.pg, &r.sigma_locus.a1]
            .into_iter()
            .map(cell),
    );
    row.push(r.checks_passed().to_string());
    row.push(r.checks.len().to_string());
    row
}

fn markdown(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

/// One row per report; a symbolic report has `k` in the first column.
pub fn render_table(reports: &[PipelineReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let rows: Vec<_> = reports.iter().map(|r| table_cells(r, Quantity::to_expr)).collect();
            csv_text(&TABLE_COLUMNS, &rows)
        }
        OutputFormat::Markdown => {
            let rows: Vec<_> = reports.iter().map(|r| table_cells(r, |q| q.to_string())).collect();
            markdown(&TABLE_COLUMNS, &rows)
        }
    }
}

/// `X: q=2 pg=9 K2=40`.
pub fn surface_line(name: &str, s: &SurfaceInvariants) -> String {
    format!("{name}: q={} pg={} K2={}", s.q, s.pg, s.k2)
}

/// `K2_X = 48n-48` and friends.
pub fn formula_lines(name: &str, s: &SurfaceInvariants) -> Vec<String> {
    vec![
        format!("q_{name} = {}", s.q),
        format!("pg_{name} = {}", s.pg),
        format!("K2_{name} = {}", s.k2),
        format!("chi_{name} = {}", s.chi),
    ]
}

#[derive(Serialize)]
struct PairOutput<'a> {
    id: String,
    n: Option<i64>,
    #[serde(rename = "X")]
    x: &'a SurfaceInvariants,
    #[serde(rename = "S")]
    s: &'a SurfaceInvariants,
    lines: Vec<String>,
}

pub fn render_pair(
    id: PairId,
    n: Option<i64>,
    x: &SurfaceInvariants,
    s: &SurfaceInvariants,
    format: OutputFormat,
) -> String {
    let lines: Vec<String> = match n {
        Some(_) => vec![surface_line("X", x), surface_line("S", s)],
        None => formula_lines("X", x).into_iter().chain(formula_lines("S", s)).collect(),
    };
    match format {
        OutputFormat::Json => {
            let out = PairOutput { id: id.to_string(), n, x, s, lines };
            let mut text = serde_json::to_string(&out).expect("pair serializes");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = [("X", x), ("S", s)]
                .into_iter()
                .map(|(name, v)| {
                    let mut row = vec![name.to_string()];
                    row.extend([&v.q, &v.pg, &v.k2, &v.chi].map(Quantity::to_expr));
                    row
                })
                .collect();
            csv_text(&["surface", "q", "pg", "K2", "chi"], &rows)
        }
        OutputFormat::Markdown => {
            let mut out = format!("pair {id}");
            if let Some(n) = n {
                out.push_str(&format!(", n = {n}"));
            }
            out.push('\n');
            for l in lines {
                out.push_str(&l);
                out.push('\n');
            }
            out
        }
    }
}

pub const ALL_PASSED: &str = "all checks passed";

pub fn summary_headline(s: &VerifySummary) -> String {
    if s.passed() {
        ALL_PASSED.to_string()
    } else {
        format!("{} of {} checks failed", s.failures.len(), s.total())
    }
}

#[derive(Serialize)]
struct SummaryOutput<'a> {
    result: String,
    #[serde(flatten)]
    summary: &'a VerifySummary,
}

pub fn render_summary(s: &VerifySummary, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let out = SummaryOutput { result: summary_headline(s), summary: s };
            let mut text = serde_json::to_string(&out).expect("summary serializes");
            text.push('\n');
            text
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = s
                .counts
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.failed.to_string()])
                .collect();
            csv_text(&["check", "passed", "failed"], &rows)
        }
        OutputFormat::Markdown => {
            let rows: Vec<Vec<String>> = s
                .counts
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), c.failed.to_string()])
                .collect();
            let mut out = markdown(&["check", "passed", "failed"], &rows);
            if !s.failures.is_empty() {
                out.push_str("\nfailures:\n");
                for f in &s.failures {
                    out.push_str(&format!(
                        "- {}: {}: expected {}, got {}\n",
                        f.scope, f.check, f.expected, f.actual
                    ));
                }
            }
            out.push('\n');
            out.push_str(&summary_headline(s));
            out.push('\n');
            out
        }
    }
}
