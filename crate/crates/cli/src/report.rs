//! Report model and renderers.
//!
//! Every subcommand produces a [`Report`]: a command name, the resolved
//! inputs, a list of tables and a list of checks. The three renderers (text,
//! JSON, CSV) are pure functions of the report, so output is byte-identical
//! across runs and parallelism degrees. All renderers emit UTF-8 with LF
//! line endings.

use hyperell::eisenstein::TorsionPoint;
use hyperell::lattice::{FixVec, TorusPoint};
use hyperell::verify::Check;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub tables: Vec<Table>,
    pub checks: Vec<CheckRow>,
}

#[derive(Serialize)]
pub struct Table {
    pub id: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(id: &str, columns: &[&str]) -> Table {
        Table {
            id: id.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Serialize)]
pub struct CheckRow {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl From<Check> for CheckRow {
    fn from(c: Check) -> CheckRow {
        CheckRow { id: c.id, expected: c.expected, actual: c.actual, pass: c.pass }
    }
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            tables: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, id: &str, expected: impl ToString, actual: impl ToString) {
        self.checks.push(Check::new(id, expected, actual).into());
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

// ---------------------------------------------------------------------------
// Value formatting
// ---------------------------------------------------------------------------

/// Canonical serialization of a torsion point: "x/27+y/27*w" with w = zeta_3
/// and both fractions reduced.
pub fn torsion_raw(p: TorsionPoint) -> String {
    fn frac(n: i64) -> String {
        let mut g = 27;
        let mut a = n;
        while a != 0 {
            let r = g % a;
            g = a;
            a = r;
        }
        format!("{}/{}", n / g, 27 / g)
    }
    match (i64::from(p.x()), i64::from(p.y())) {
        (0, 0) => "0".to_string(),
        (x, 0) => frac(x),
        (0, y) => format!("{}*w", frac(y)),
        (x, y) => format!("{}+{}*w", frac(x), frac(y)),
    }
}

/// Human-oriented aliases for the points that recur in the tables
/// (t = (1 + 2w)/3 and its variants); falls back to the raw form.
pub fn torsion_pretty(p: TorsionPoint) -> String {
    match (p.x(), p.y()) {
        (0, 0) => "0".to_string(),
        (9, 18) => "t".to_string(),
        (18, 9) => "-t".to_string(),
        (9, 0) => "1/3".to_string(),
        (18, 0) => "2/3".to_string(),
        (0, 9) => "w/3".to_string(),
        (18, 18) => "w^2/3".to_string(),
        (3, 6) => "t/3".to_string(),
        _ => torsion_raw(p),
    }
}

pub type PointFmt = fn(TorsionPoint) -> String;

pub fn torus(p: &TorusPoint, fmt: PointFmt) -> String {
    let parts: Vec<String> = p.coords.iter().map(|&c| fmt(c)).collect();
    format!("({})", parts.join(", "))
}

/// Kernel generators are vectors over Fix_E(zeta_3) = {0, t, -t}.
pub fn fixvec(v: FixVec) -> String {
    let name = |c: u8| match c {
        0 => "0",
        1 => "t",
        _ => "-t",
    };
    format!("({}, {}, {}, {})", name(v[0]), name(v[1]), name(v[2]), name(v[3]))
}

pub fn fixvec_list(gens: &[FixVec]) -> String {
    if gens.is_empty() {
        return "trivial".to_string();
    }
    gens.iter().map(|&g| fixvec(g)).collect::<Vec<_>>().join("; ")
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("# hyperell {}\n", report.command));
    for (k, v) in &report.inputs {
        out.push_str(&format!("  {k}: {v}\n"));
    }
    for table in &report.tables {
        out.push_str(&format!("\n## {}\n", table.id));
        let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
        for row in &table.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{:<width$}", c, width = w))
                .collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        out.push_str(&line(&table.columns));
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&format!("{}\n", rule.join("  ")));
        for row in &table.rows {
            out.push_str(&line(row));
        }
    }
    if !report.checks.is_empty() {
        out.push_str("\n## checks\n");
        for c in &report.checks {
            if c.pass {
                out.push_str(&format!("[PASS] {}: {}\n", c.id, c.actual));
            } else {
                out.push_str(&format!(
                    "[FAIL] {}: expected {}, got {}\n",
                    c.id, c.expected, c.actual
                ));
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(cells: &[String]) -> String {
    let escaped: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
    format!("{}\n", escaped.join(","))
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    for table in &report.tables {
        out.push_str(&csv_line(&["table".to_string(), table.id.clone()]));
        out.push_str(&csv_line(&table.columns));
        for row in &table.rows {
            out.push_str(&csv_line(row));
        }
        out.push('\n');
    }
    if !report.checks.is_empty() {
        out.push_str(&csv_line(&["checks".to_string()]));
        out.push_str(&csv_line(&[
            "id".to_string(),
            "expected".to_string(),
            "actual".to_string(),
            "pass".to_string(),
        ]));
        for c in &report.checks {
            out.push_str(&csv_line(&[
                c.id.clone(),
                c.expected.clone(),
                c.actual.clone(),
                c.pass.to_string(),
            ]));
        }
    }
    out
}
