//! Table documents and their text, CSV, and TeX renderings.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDoc {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl TableDoc {
    pub fn to_text(&self) -> String {
        let ncols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let fmt_row = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:width$}", c, width = widths[i]))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&fmt_row(&self.headers));
        out.push('\n');
        out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (ncols - 1)));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_row(row));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let quote = |cell: &str| -> String {
            if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell.to_string()
            }
        };
        let mut out = String::new();
        out.push_str(&self.headers.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_tex(&self) -> String {
        let escape = |cell: &str| cell.replace('#', "\\#").replace('_', "\\_");
        let mut out = String::new();
        let spec = vec!["c"; self.headers.len()].join("|");
        out.push_str(&format!("\\begin{{array}}{{|{spec}|}} \\hline\n"));
        out.push_str(&self.headers.iter().map(|h| escape(h)).collect::<Vec<_>>().join(" & "));
        out.push_str(" \\\\ \\hline\\hline\n");
        for row in &self.rows {
            out.push_str(&row.iter().map(|c| escape(c)).collect::<Vec<_>>().join(" & "));
            out.push_str(" \\\\ \\hline\n");
        }
        out.push_str("\\end{array}\n");
        out
    }

    pub fn render(&self, format: &str) -> Result<String, String> {
        match format {
            "text" => Ok(self.to_text()),
            "csv" => Ok(self.to_csv()),
            "tex" => Ok(self.to_tex()),
            "json" => serde_json::to_string_pretty(self).map_err(|e| e.to_string()),
            other => Err(format!("unknown format \"{other}\"")),
        }
    }
}
