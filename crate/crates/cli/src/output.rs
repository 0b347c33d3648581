use clap::ValueEnum;
use std::io::IsTerminal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-aligned text
    Table,
    /// Header row plus comma-separated rows, arbitrary-precision values as
    /// decimal strings
    Csv,
    /// One object per row, arbitrary-precision values as decimal strings
    Json,
}

/// Table on terminals, CSV when piped, unless the user chose explicitly.
pub fn resolve(explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::Csv
        }
    })
}

pub fn print_csv(headers: &[&str], rows: &[Vec<String>]) {
    println!("{}", headers.join(","));
    for row in rows {
        println!("{}", row.join(","));
    }
}

pub fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    println!("{}", line(headers.to_vec()));
    for row in rows {
        println!("{}", line(row.iter().map(String::as_str).collect()));
    }
}

pub fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable value")
    );
}

/// Rows in the requested format; JSON gets its own representation since
/// scalar types differ per column.
pub fn emit_rows(
    format: Format,
    headers: &[&str],
    rows: &[Vec<String>],
    json_rows: Vec<serde_json::Value>,
) {
    match format {
        Format::Table => print_table(headers, rows),
        Format::Csv => print_csv(headers, rows),
        Format::Json => print_json(&serde_json::Value::Array(json_rows)),
    }
}
