use std::collections::BTreeMap;
use std::fmt::Write as _;

use hkinv::Rational;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub label: String,
    /// Reduced fraction `p/q` with `q > 0`, or a bare integer.
    pub value: String,
    /// What the value is and how it was obtained.
    pub paper_anchor: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<Entry>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        value: &Rational,
        anchor: impl Into<String>,
    ) -> &mut Self {
        self.results.push(Entry {
            label: label.into(),
            value: value.to_string(),
            paper_anchor: anchor.into(),
        });
        self
    }

    pub fn push_int(
        &mut self,
        label: impl Into<String>,
        value: i64,
        anchor: impl Into<String>,
    ) -> &mut Self {
        self.push(label, &Rational::from_integer(value.into()), anchor)
    }

    pub fn push_bool(
        &mut self,
        label: impl Into<String>,
        value: bool,
        anchor: impl Into<String>,
    ) -> &mut Self {
        self.push_int(label, i64::from(value), anchor)
    }

    /// Appends another report's entries under `prefix/`.
    pub fn absorb(&mut self, other: Report) {
        for e in other.results {
            self.results.push(Entry {
                label: format!("{}/{}", other.command, e.label),
                ..e
            });
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}", self.command);
        for (k, v) in &self.params {
            let _ = write!(s, " --{k} {v}");
        }
        s.push('\n');
        let width = self
            .results
            .iter()
            .map(|e| e.label.chars().count())
            .max()
            .unwrap_or(0);
        for e in &self.results {
            let pad = width - e.label.chars().count();
            let _ = writeln!(s, "  {}{}  {}", e.label, " ".repeat(pad), e.value);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hkinv::rational::frac;

    #[test]
    fn values_are_reduced_fractions() {
        let mut r = Report::new("t");
        r.push("a", &frac(6, -4), "")
            .push_int("b", 7, "")
            .push_bool("c", false, "");
        let values: Vec<&str> = r.results.iter().map(|e| e.value.as_str()).collect();
        assert_eq!(values, ["-3/2", "7", "0"]);
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new("t");
        r.param("q", 4).push_int("x", 1, "note");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["command"], "t");
        assert_eq!(v["params"]["q"], "4");
        assert_eq!(v["results"][0]["paper_anchor"], "note");
    }
}
