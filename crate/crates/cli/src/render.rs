use std::fmt::Write;

use hyperinc_core::kernel::InducedVector;
use hyperinc_core::{Label, LabeledVector, Scalar};
use serde::Serialize;
use serde_json::Value;

/// A command result that can be shown as text or JSON.
pub trait Report: Serialize {
    /// Names of the assertions that did not hold.
    fn failures(&self) -> Vec<String>;
    fn render(&self, out: &mut String);
}

#[derive(Serialize)]
struct Envelope<'a, R> {
    command: &'a str,
    ok: bool,
    failures: Vec<String>,
    #[serde(flatten)]
    report: &'a R,
}

pub struct Output {
    pub body: String,
    pub failures: Vec<String>,
}

pub fn finish<R: Report>(command: &str, report: &R, json: bool) -> Output {
    let failures = report.failures();
    let body = if json {
        let envelope = Envelope {
            command,
            ok: failures.is_empty(),
            failures: failures.clone(),
            report,
        };
        serde_json::to_string_pretty(&envelope).expect("reports serialize") + "\n"
    } else {
        let mut out = String::new();
        report.render(&mut out);
        if !failures.is_empty() {
            let _ = writeln!(out, "FAILED: {}", failures.join(", "));
        }
        out
    };
    Output { body, failures }
}

pub fn error_json(command: &str, message: &str) -> String {
    let v = serde_json::json!({ "command": command, "ok": false, "error": message });
    serde_json::to_string_pretty(&v).expect("error serializes") + "\n"
}

/// `{a: 1, c: -1/2}`, listing only the non-zero coordinates.
pub fn sparse<S: Scalar>(x: &LabeledVector<S>) -> String {
    let parts: Vec<String> = x
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(l, v)| format!("{l}: {v}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn sparse_induced(x: &InducedVector) -> String {
    match x {
        InducedVector::Rational(v) => sparse(v),
        InducedVector::Cyclotomic(v) => sparse(v),
    }
}

pub fn set(labels: &[Label]) -> String {
    let parts: Vec<&str> = labels.iter().map(Label::as_str).collect();
    format!("{{{}}}", parts.join(", "))
}

/// A certificate's combinatorial data as one line of `key=value` pairs.
pub fn certificate_fields(kind: &impl Serialize) -> String {
    let Ok(Value::Object(map)) = serde_json::to_value(kind) else {
        return String::new();
    };
    map.iter()
        .filter(|(k, _)| k.as_str() != "kind")
        .map(|(k, v)| {
            let value = match v {
                Value::String(s) => s.clone(),
                Value::Array(items) => {
                    let inner: Vec<String> = items.iter().map(plain).collect();
                    format!("{{{}}}", inner.join(", "))
                }
                other => other.to_string(),
            };
            format!("{k}={value}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(map) => {
            let inner: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect();
            format!("({})", inner.join(", "))
        }
        Value::Array(items) => format!("[{}]", items.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
