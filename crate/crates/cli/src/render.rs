//! Turning command results into json, csv or markdown text.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

/// A result that can be shown in all three formats. Json is the full object;
/// csv and markdown are flat tables of the same rows.
pub trait Render: Serialize {
    fn headers(&self) -> Vec<&'static str>;
    fn rows(&self) -> Vec<Vec<String>>;

    /// Extra lines printed under the markdown table.
    fn footer(&self) -> Vec<String> {
        Vec::new()
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => csv_table(&self.headers(), &self.rows()),
            Format::Markdown => {
                let mut out = markdown_table(&self.headers(), &self.rows());
                for line in self.footer() {
                    out.push('\n');
                    out.push_str(&line);
                    out.push('\n');
                }
                out
            }
        }
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

pub fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn markdown_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cell = |s: &str| s.replace('|', "\\|");
    let mut out = format!("| {} |\n", headers.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for r in rows {
        let cells: Vec<_> = r.iter().map(|c| cell(c)).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

/// `[[2, -3], [-2, 2]]`.
pub fn matrix_text(m: &[Vec<BigInt>]) -> String {
    let rows: Vec<_> = m
        .iter()
        .map(|r| {
            let cells: Vec<_> = r.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let rows = vec![vec!["1".to_string(), "a|b".to_string()]];
        assert_eq!(csv_table(&["x", "y"], &rows), "x,y\n1,a|b\n");
        assert_eq!(
            markdown_table(&["x", "y"], &rows),
            "| x | y |\n|---|---|\n| 1 | a\\|b |\n"
        );
        let m = vec![
            vec![BigInt::from(2), BigInt::from(-3)],
            vec![BigInt::from(-2), BigInt::from(2)],
        ];
        assert_eq!(matrix_text(&m), "[[2, -3], [-2, 2]]");
    }
}
