//! Stable machine- and human-readable renderings of enumeration results:
//! JSON lines, CSV, plain text, and the per-field summary table.

use serde::Serialize;

use crate::error::Result;
use crate::htclassify::{enumerate, IsogenyClassRecord};

/// JSON shape of one record. Field order is the serialization order;
/// coefficients are decimal strings so arbitrary precision survives any
/// JSON integer-width limit, and `q` gets the same treatment.
#[derive(Serialize)]
struct RecordJson<'a> {
    p: u64,
    n: u32,
    q: String,
    g: u32,
    case: &'a str,
    param: u64,
    variant: &'a str,
    weil_coeffs: Vec<String>,
    e: u8,
    char_coeffs: Vec<String>,
}

impl<'a> RecordJson<'a> {
    fn from_record(rec: &'a IsogenyClassRecord) -> Self {
        RecordJson {
            p: rec.field.p(),
            n: rec.field.n(),
            q: rec.field.q().to_string(),
            g: rec.g,
            case: rec.case_tag.as_str(),
            param: rec.param,
            variant: rec.sign_variant.as_str(),
            weil_coeffs: rec.weil_poly.coeffs_decimal(),
            e: rec.e,
            char_coeffs: rec.char_poly.coeffs_decimal(),
        }
    }
}

/// One record as a single JSON line.
pub fn record_json(rec: &IsogenyClassRecord) -> String {
    serde_json::to_string(&RecordJson::from_record(rec)).expect("record serializes")
}

/// JSON-lines rendering: one object per line, canonical record order.
pub fn records_json_lines(records: &[IsogenyClassRecord]) -> String {
    records
        .iter()
        .map(record_json)
        .collect::<Vec<_>>()
        .join("\n")
}

pub const CSV_HEADER: &str = "p,n,q,g,case,param,variant,e,weil_coeffs,char_coeffs";

/// One record as a CSV row (coefficient lists are semicolon-joined).
pub fn record_csv(rec: &IsogenyClassRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        rec.field.p(),
        rec.field.n(),
        rec.field.q(),
        rec.g,
        rec.case_tag.as_str(),
        rec.param,
        rec.sign_variant.as_str(),
        rec.e,
        rec.weil_poly.coeffs_decimal().join(";"),
        rec.char_poly.coeffs_decimal().join(";"),
    )
}

pub fn records_csv(records: &[IsogenyClassRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    for rec in records {
        out.push('\n');
        out.push_str(&record_csv(rec));
    }
    out
}

/// Human-readable listing, one record per line.
pub fn records_text(records: &[IsogenyClassRecord]) -> String {
    records
        .iter()
        .map(|rec| {
            format!(
                "g={} e={} {:<14} {}={:<3} variant={:<4} P(X) = {}",
                rec.g,
                rec.e,
                rec.case_tag.as_str(),
                if rec.field.n() % 2 == 1 { "t" } else { "m" },
                rec.param,
                rec.sign_variant.as_str(),
                rec.char_poly,
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Summary of every dimension from 1 to `max_g` over one field, in the
/// style of a classification table.
pub fn summary_table(p: u64, n: u32, max_g: u32) -> Result<String> {
    let mut out = format!(
        "Simple supersingular abelian varieties over F_q, q = {p}^{n}\n"
    );
    for g in 1..=max_g {
        let records = enumerate(p, n, g)?;
        out.push_str(&format!("\ndimension {g}:\n"));
        if records.is_empty() {
            out.push_str("  (none)\n");
            continue;
        }
        for rec in &records {
            let origin = match rec.field.n() % 2 {
                1 => format!("t={}", rec.param),
                _ => format!("m={}", rec.param),
            };
            let variant = match rec.sign_variant.as_str() {
                "none" => String::new(),
                v => format!(", {v}"),
            };
            out.push_str(&format!(
                "  {:<50} [{}, {}{}, e={}]\n",
                rec.char_poly.to_string(),
                rec.case_tag.as_str(),
                origin,
                variant,
                rec.e
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_line_shape() {
        let recs = enumerate(3, 1, 1).unwrap();
        let line = record_json(&recs[0]);
        assert!(line.starts_with("{\"p\":3,\"n\":1,\"q\":\"3\",\"g\":1,"));
        assert!(line.contains("\"weil_coeffs\":["));
        // Deterministic across calls.
        assert_eq!(line, record_json(&enumerate(3, 1, 1).unwrap()[0]));
    }

    #[test]
    fn csv_shape() {
        let recs = enumerate(3, 1, 1).unwrap();
        let text = records_csv(&recs);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let first = lines.next().unwrap();
        assert!(first.starts_with("3,1,3,1,"));
        assert_eq!(first.split(',').count(), 10);
    }

    #[test]
    fn summary_contains_dimensions() {
        let table = summary_table(3, 1, 3).unwrap();
        assert!(table.contains("dimension 1:"));
        assert!(table.contains("dimension 3:"));
        assert!(table.contains("X^2 + 3"));
    }
}
