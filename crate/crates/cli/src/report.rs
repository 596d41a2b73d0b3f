use cwfkit_core::{Error, Finding};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Invalid,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct FindingOut {
    pub law: String,
    pub clause: String,
    pub location: String,
    pub witness: String,
}

impl From<&Finding> for FindingOut {
    fn from(f: &Finding) -> Self {
        let law = serde_json::to_value(f.law)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        FindingOut {
            law,
            clause: f.law.clause().to_string(),
            location: f.location.clone(),
            witness: f.witness.clone(),
        }
    }
}

/// What every command prints: `valid` exactly when `findings` is empty.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub subject: String,
    pub verdict: Verdict,
    pub findings: Vec<FindingOut>,
    pub notes: Vec<String>,
    pub exit_code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) => 2,
        Error::Inconsistent(_) => 3,
        Error::Precondition(_) | Error::Hypothesis(_) | Error::Oracle(_) | Error::Preservation(_) => 1,
    }
}

fn error_label(e: &Error) -> &'static str {
    match e {
        Error::Malformed(_) => "malformed",
        Error::Precondition(_) => "precondition",
        Error::Hypothesis(_) => "hypothesis",
        Error::Oracle(_) => "oracle",
        Error::Preservation(_) => "preservation",
        Error::Inconsistent(_) => "inconsistent",
    }
}

impl Report {
    pub fn new(command: &'static str, subject: impl Into<String>) -> Self {
        Report {
            command,
            subject: subject.into(),
            verdict: Verdict::Valid,
            findings: Vec::new(),
            notes: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Marks the report invalid when `findings` is non-empty.
    pub fn findings(mut self, findings: &[Finding]) -> Self {
        if !findings.is_empty() {
            self.findings.extend(findings.iter().map(FindingOut::from));
            self.verdict = Verdict::Invalid;
            self.exit_code = 1;
        }
        self
    }

    pub fn error(mut self, e: &Error) -> Self {
        self.findings.push(FindingOut {
            law: error_label(e).to_string(),
            clause: e.to_string(),
            location: String::new(),
            witness: String::new(),
        });
        self.verdict = Verdict::Error;
        self.exit_code = exit_code(e);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("report serializes");
            s.push('\n');
            return s;
        }
        let verdict = match self.verdict {
            Verdict::Valid => "valid",
            Verdict::Invalid => "invalid",
            Verdict::Error => "error",
        };
        let mut s = format!("{verdict}: {} {}\n", self.command, self.subject);
        for f in &self.findings {
            if f.location.is_empty() {
                s.push_str(&format!("  - {}\n", f.clause));
            } else if f.witness.is_empty() {
                s.push_str(&format!("  - {} fails at {}\n", f.clause, f.location));
            } else {
                s.push_str(&format!("  - {} fails at {} ({})\n", f.clause, f.location, f.witness));
            }
        }
        for n in &self.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
        s
    }
}
