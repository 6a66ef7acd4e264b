use std::path::Path;

use serde_json::{json, Value};

use precedent_logic::bridge::ConflictReport;
use precedent_logic::casebase::ConflictWitness;
use precedent_logic::explain::ExplanationSet;
use precedent_logic::{io, AtomSet, Error, Result, Signature};

/// What a command prints, in both formats, and its exit code.
pub struct Report {
    pub code: u8,
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(code: u8, json: Value, text: String) -> Self {
        Report { code, json, text }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("values serialize")
            );
        } else {
            println!("{}", self.text);
        }
    }
}

/// Two-column text with the first column padded to a common width.
#[derive(Default)]
pub struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    pub fn row(&mut self, label: impl Into<String>, value: impl Into<String>) {
        self.rows.push((label.into(), value.into()));
    }

    pub fn lines(&self) -> Vec<String> {
        let width = self
            .rows
            .iter()
            .map(|(l, _)| l.chars().count())
            .max()
            .unwrap_or(0);
        self.rows
            .iter()
            .map(|(l, v)| format!("{l:<width$}  {v}").trim_end().to_string())
            .collect()
    }
}

pub fn conflict(sig: &Signature, w: &ConflictWitness, state: AtomSet) -> Report {
    let json = json!({
        "witness": {
            "state": sig.names_of(state),
            "plaintiff_case": w.plaintiff_case.id,
            "plaintiff_reason": sig.names_of(w.plaintiff_reason.factors),
            "defendant_case": w.defendant_case.id,
            "defendant_reason": sig.names_of(w.defendant_reason.factors),
        }
    });
    let mut table = Table::default();
    table.row("conflict state:", sig.format_set(state));
    table.row(
        "plaintiff case:",
        format!(
            "{}, reason {}",
            w.plaintiff_case.id,
            sig.format_set(w.plaintiff_reason.factors)
        ),
    );
    table.row(
        "defendant case:",
        format!(
            "{}, reason {}",
            w.defendant_case.id,
            sig.format_set(w.defendant_reason.factors)
        ),
    );
    Report::new(1, json, table.lines().join("\n"))
}

/// The canonical model does not exist.
pub fn canonical_conflict(sig: &Signature, c: &ConflictReport) -> Report {
    let json = json!({
        "consistent": false,
        "witness": {
            "state": sig.names_of(c.state),
            "forcing_1": c.forcing_for_1.id,
            "forcing_0": c.forcing_for_0.id,
        }
    });
    let mut table = Table::default();
    table.row("conflict state:", sig.format_set(c.state));
    table.row("forcing 1:", c.forcing_for_1.id.clone());
    table.row("forcing 0:", c.forcing_for_0.id.clone());
    let text = format!("inconsistent\n{}", table.lines().join("\n"));
    Report::new(1, json, text)
}

pub fn explanation(sig: &Signature, set: &ExplanationSet) -> Report {
    let mut json = io::explanation_to_json(sig, set);
    if !set.notes.is_empty() {
        json["notes"] = json!(set.notes);
    }
    let mut table = Table::default();
    table.row("kind:", set.kind.name());
    table.row("target:", set.target.to_string());
    if let Some(s) = set.state {
        table.row("state:", sig.format_set(s));
    }
    table.row("terms:", set.terms.len().to_string());
    let mut lines = table.lines();
    lines.extend(set.terms.iter().map(|t| format!("  {}", t.display(sig))));
    lines.extend(set.notes.iter().map(|n| format!("note: {n}")));
    Report::new(0, json, lines.join("\n"))
}

/// Writes through a sibling temporary file so a failure leaves no partial
/// output.
pub fn write_atomically(path: &Path, contents: &str) -> Result<()> {
    let io_err = |e: std::io::Error| Error::Usage(format!("cannot write {}: {e}", path.display()));
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    std::fs::write(&tmp, format!("{contents}\n")).map_err(io_err)?;
    std::fs::rename(&tmp, path).map_err(io_err)
}
