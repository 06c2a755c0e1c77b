use arcseries::qseries::TruncatedSeries;

use crate::Format;

/// Right-aligned `i  coefficient` table.
pub fn series_table(s: &TruncatedSeries) -> String {
    let rows: Vec<(String, String)> = s
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, c)| (i.to_string(), c.to_string()))
        .collect();
    table(&["i", "coefficient"], &rows)
}

pub fn series(s: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Text => series_table(s),
        Format::Json => format!("{}\n", s.to_json()),
        Format::Csv => s.to_csv(),
    }
}

/// Two right-aligned columns under a header.
pub fn table(header: &[&str; 2], rows: &[(String, String)]) -> String {
    let w0 = rows
        .iter()
        .map(|r| r.0.len())
        .chain([header[0].len()])
        .max()
        .unwrap_or(0);
    let w1 = rows
        .iter()
        .map(|r| r.1.len())
        .chain([header[1].len()])
        .max()
        .unwrap_or(0);
    let mut out = format!("{:>w0$}  {:>w1$}\n", header[0], header[1]);
    for (a, b) in rows {
        out.push_str(&format!("{a:>w0$}  {b:>w1$}\n"));
    }
    out
}

/// `header` then one comma-joined line per row.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

pub fn json(value: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(value).expect("value serializes"))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
