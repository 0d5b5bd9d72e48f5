//! Pass/fail reports shared by the verification entry points and the CLI.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub value: String,
    /// `Some(true)` = pass, `Some(false)` = fail, `None` = informational.
    pub verdict: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            items: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, value: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            value: value.into(),
            verdict: Some(passed),
        });
    }

    pub fn info(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            value: value.into(),
            verdict: None,
        });
    }

    /// All asserted items passed (informational items do not count).
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.verdict != Some(false))
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.verdict == Some(false))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let tag = match item.verdict {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "info",
            };
            out.push_str(&format!("[{}] {}: {}\n", tag, item.name, item.value));
        }
        out.push_str(&format!(
            "{}: {}\n",
            self.name,
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}
