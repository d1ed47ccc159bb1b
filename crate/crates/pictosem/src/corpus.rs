//! Gold corpora (JSON lines) and benchmark reports.
//!
//! One item per line: `{"seq": ["i", "eat", "meat"], "arcs": [[1, "agent", 0]], "sentence": "Je mange la viande"}`.
//! `sentence` is optional. Blank lines are skipped.

use std::fmt::Write;

use pictosem_core::{BenchReport, Category, GoldItem};
use serde::{Deserialize, Serialize};

use crate::formats::LoadError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldDoc {
    seq: Vec<String>,
    #[serde(default)]
    arcs: Vec<(usize, String, usize)>,
    #[serde(default)]
    sentence: Option<String>,
}

pub fn load_corpus(text: &str) -> Result<Vec<GoldItem>, LoadError> {
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let doc: GoldDoc = serde_json::from_str(raw).map_err(|e| match LoadError::from(e) {
            LoadError::Parse { column, message, .. } => LoadError::Parse { line, column, message },
            other => other,
        })?;
        let item = GoldItem::new(doc.seq, doc.arcs, doc.sentence)
            .map_err(|source| LoadError::Gold { line, source })?;
        items.push(item);
    }
    Ok(items)
}

#[derive(Serialize)]
struct Counts {
    #[serde(rename = "I")]
    i: usize,
    #[serde(rename = "II")]
    ii: usize,
    #[serde(rename = "III")]
    iii: usize,
    #[serde(rename = "IV")]
    iv: usize,
}

#[derive(Serialize)]
struct ItemDoc<'a> {
    seq: &'a [String],
    category: String,
    arcs: Vec<(usize, &'a str, usize)>,
    sentence: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    counts: Counts,
    total: usize,
    acceptability_rate: f64,
    items: Vec<ItemDoc<'a>>,
}

/// The report as pretty JSON; `corpus` is the item list the report was run on.
pub fn report_json(report: &BenchReport, corpus: &[GoldItem]) -> String {
    let doc = ReportDoc {
        counts: Counts {
            i: report.count(Category::I),
            ii: report.count(Category::II),
            iii: report.count(Category::III),
            iv: report.count(Category::IV),
        },
        total: report.total(),
        acceptability_rate: report.acceptability_rate(),
        items: report
            .verdicts
            .iter()
            .zip(corpus)
            .map(|(v, item)| ItemDoc {
                seq: &item.sequence,
                category: v.category.to_string(),
                arcs: v.arcs.iter().map(|(h, c, d)| (*h, c.as_str(), *d)).collect(),
                sentence: v.sentence.as_deref(),
                error: v.realize_error.as_deref(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("reports always serialize");
    text.push('\n');
    text
}

pub fn report_table(report: &BenchReport, corpus: &[GoldItem]) -> String {
    let mut out = String::new();
    for (i, (v, item)) in report.verdicts.iter().zip(corpus).enumerate() {
        let produced = v.sentence.as_deref().or(v.realize_error.as_deref()).unwrap_or("-");
        let _ = writeln!(
            out,
            "{:>3}  {:<4} {:<36} {}",
            i + 1,
            v.category.to_string(),
            item.sequence.join(" "),
            produced
        );
    }
    let _ = writeln!(out);
    for c in Category::ALL {
        let _ = writeln!(out, "{:<4} {:>4}", c.to_string(), report.count(c));
    }
    let _ = writeln!(out, "total {:>3}", report.total());
    let _ = writeln!(out, "acceptability {:.1}%", 100.0 * report.acceptability_rate());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_lines() {
        let text = "{\"seq\": [\"i\", \"eat\"], \"arcs\": [[1, \"agent\", 0]]}\n\n{\"seq\": [\"meat\"], \"sentence\": \"La viande\"}\n";
        let items = load_corpus(text).unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].gold_arcs.len(), 1);
        assert_eq!(items[1].gold_sentence.as_deref(), Some("La viande"));
    }

    #[test]
    fn errors_name_the_line() {
        let text = "{\"seq\": [\"i\"]}\n{\"seq\": [\"i\"], \"arcs\": [[0, \"agent\", 4]]}\n";
        assert!(matches!(load_corpus(text), Err(LoadError::Gold { line: 2, .. })));
        let text = "{\"seq\": [\"i\"]}\n\n{\"seq\": oops}\n";
        assert!(matches!(load_corpus(text), Err(LoadError::Parse { line: 3, .. })));
    }
}
