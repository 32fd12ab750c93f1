//! Report emission: every CLI subcommand produces one `Report` carrying a
//! machine document (JSON, exact integers and `p/q` strings, no floats) and
//! a human rendering.

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub title: String,
    pub machine: Value,
    lines: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            machine: Value::Null,
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        self.lines.push(format!("  {key}: {value}"));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                serde_json::to_string_pretty(&self.machine).expect("reports serialize")
            }
            Format::Human => {
                let mut out = String::new();
                out.push_str(&self.title);
                out.push('\n');
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Formats a vertex as a compact tuple.
pub fn point_string<T: std::fmt::Display>(p: &[T]) -> String {
    let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", coords.join(", "))
}
