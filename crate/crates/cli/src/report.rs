//! Structured run reports and their text rendering.

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};
use supermod_core::{Elem, ElemSet, Rational, SolveTrace};

const DECIMAL_DIGITS: usize = 6;

/// A profile as exact `p/q` coordinates with a decimal annotation.
#[derive(Debug, Clone, Serialize)]
pub struct Profile {
    pub exact: String,
    pub decimal: String,
}

impl From<&Elem> for Profile {
    fn from(e: &Elem) -> Self {
        let render = |f: &dyn Fn(&Rational) -> String| -> String {
            let parts: Vec<String> = e.coords().iter().map(f).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("({})", parts.join(","))
            }
        };
        Profile {
            exact: render(&|r| r.to_string()),
            decimal: render(&|r| r.to_decimal(DECIMAL_DIGITS)),
        }
    }
}

pub fn profiles(xs: &ElemSet) -> Vec<Profile> {
    xs.iter().map(Profile::from).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub result: Profile,
    pub best_response_calls: usize,
    pub sweeps: usize,
}

impl From<&SolveTrace> for Solution {
    fn from(t: &SolveTrace) -> Self {
        Solution {
            result: Profile::from(&t.result),
            best_response_calls: t.best_response_calls,
            sweeps: t.sweeps,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: &str, contents: &str) -> Self {
        Input {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(contents.as_bytes())),
        }
    }
}

/// One document per run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    #[serde(flatten)]
    pub body: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<Input>) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            body: Map::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.body.insert(key.to_string(), v);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        render(
            &mut out,
            0,
            &serde_json::to_value(self).expect("report serializes"),
        );
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Profiles print as `exact  [≈ decimal]`; other objects as nested keys.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Object(m)
            if m.len() == 2 && m.contains_key("exact") && m.contains_key("decimal") =>
        {
            let (e, d) = (scalar(&m["exact"])?, scalar(&m["decimal"])?);
            Some(if e == d { e } else { format!("{e} [~{d}]") })
        }
        Value::Array(xs) if xs.is_empty() => Some("(none)".into()),
        Value::Array(xs) => {
            let parts: Option<Vec<String>> = xs.iter().map(inline).collect();
            let parts = parts?;
            // Profile lists stay on one line only when short.
            if parts.iter().map(String::len).sum::<usize>() <= 100 {
                Some(parts.join(" "))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn render(out: &mut String, depth: usize, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(out, depth + 1, x);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(out, depth + 1, x);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
