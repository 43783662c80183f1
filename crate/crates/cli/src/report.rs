use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use linfold_core::{Arrangement, Polynomial};

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
}

/// Everything one subcommand produces.
pub struct Report {
    pub command: &'static str,
    pub digest: Option<String>,
    pub seed: Option<u64>,
    pub assertions: Vec<Assertion>,
    pub result: Map<String, Value>,
    /// Human-readable lines, printed without `--json`.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, digest: Option<String>) -> Self {
        Report { command, digest, seed: None, assertions: Vec::new(), result: Map::new(), lines: Vec::new() }
    }

    pub fn assert(&mut self, name: &str, pass: bool) {
        self.assertions.push(Assertion { name: name.to_string(), pass });
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.result.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn to_json(&self, budget_degree: u32, started: Option<Instant>) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "input_sha256": self.digest,
            "pass": self.pass(),
            "assertions": self.assertions,
            "result": self.result,
            "budget": { "max_degree": budget_degree, "exceeded": false },
        });
        if let Some(s) = self.seed {
            v["seed"] = json!(s);
        }
        if let Some(t) = started {
            v["timing_ms"] = json!(t.elapsed().as_millis() as u64);
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for a in &self.assertions {
            out.push_str(&format!("[{}] {}\n", if a.pass { "pass" } else { "FAIL" }, a.name));
        }
        out
    }
}

pub fn budget_error_json(command: &str, digest: Option<String>, budget_degree: u32, msg: &str) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "input_sha256": digest,
        "pass": false,
        "budget": { "max_degree": budget_degree, "exceeded": true, "message": msg },
    })
}

/// Polynomials in JSON reports, with a rendering for readers.
pub fn poly_json(p: &Polynomial) -> Value {
    json!({ "terms": p, "text": p.render() })
}

pub fn polys_json(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly_json).collect())
}

/// One-based index lists.
pub fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn forms_text(a: &Arrangement) -> Vec<String> {
    a.forms().iter().map(|f| f.render(a.ring())).collect()
}
