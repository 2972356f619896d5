//! Deterministic text and TSV rendering of command results.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Tsv,
}

/// A table followed by `key: value` summary lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub summary: Vec<(String, String)>,
}

impl Report {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Report { headers: headers.into_iter().map(Into::into).collect(), ..Default::default() }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.summary.push((key.into(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Tsv => self.render_tsv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.headers.is_empty() {
            let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
            for r in &self.rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(&self.headers)).unwrap();
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            writeln!(out, "{}", rule.join("  ")).unwrap();
            for r in &self.rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
        for (k, v) in &self.summary {
            writeln!(out, "{k}: {v}").unwrap();
        }
        out
    }

    fn render_tsv(&self) -> String {
        let mut out = String::new();
        if !self.headers.is_empty() {
            writeln!(out, "{}", self.headers.join("\t")).unwrap();
            for r in &self.rows {
                writeln!(out, "{}", r.join("\t")).unwrap();
            }
        }
        for (k, v) in &self.summary {
            writeln!(out, "# {k}\t{v}").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_and_tab_separated() {
        let mut r = Report::new(["d", "value"]);
        r.row(["0", "1"]);
        r.row(["10", "-1/2"]);
        r.note("total", 2);
        assert_eq!(r.render(Format::Text), "d   value\n--  -----\n0   1\n10  -1/2\ntotal: 2\n");
        assert_eq!(r.render(Format::Tsv), "d\tvalue\n0\t1\n10\t-1/2\n# total\t2\n");
    }
}
