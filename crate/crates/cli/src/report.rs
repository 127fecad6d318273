//! JSON report envelope and value encoders.
//!
//! Exact values are always strings (`"p/q"`); quadratic-field elements are
//! `{"a": "p/q", "b": "p/q", "d": int}`. Keys come out sorted because
//! `serde_json::Map` is a `BTreeMap` here, so identical input gives
//! byte-identical output.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use superelliptic_core::dihedral::{FieldElement, FieldReport};
use superelliptic_core::Rational;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub details: Option<Value>,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.to_string(),
            message: message.into(),
            details: None,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Option<Value>,
    pub error: Option<CliError>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Result<Value, CliError>) -> Self {
        let (outputs, error) = match result {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e)),
        };
        Report {
            command: command.to_string(),
            inputs,
            outputs,
            error,
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), self.inputs.clone());
        if let Some(out) = &self.outputs {
            m.insert("outputs".into(), out.clone());
        }
        if let Some(err) = &self.error {
            let mut e = Map::new();
            e.insert("code".into(), json!(err.code));
            e.insert("message".into(), json!(err.message));
            if let Some(d) = &err.details {
                e.insert("details".into(), d.clone());
            }
            m.insert("error".into(), Value::Object(e));
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        match &self.error {
            None => 0,
            Some(e) if e.code == "usage_error" => 2,
            Some(_) => 1,
        }
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

/// JSON integer when it fits in `i64`, decimal string otherwise.
pub fn integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub fn element(e: &FieldElement) -> Value {
    match e {
        FieldElement::Rational(r) => rational(r),
        FieldElement::Quadratic(q) => json!({
            "a": rational(q.a()),
            "b": rational(q.b()),
            "d": integer(q.d()),
        }),
    }
}

pub fn field_report(r: &FieldReport) -> Value {
    json!({
        "delta_s": rational(&r.delta_s),
        "is_square": r.is_square,
        "is_degenerate": r.is_degenerate,
        "squarefree_radicand": r.squarefree_radicand.as_ref().map(integer),
        "field": r.field.to_string(),
        "moduli_is_definition": r.moduli_is_definition(),
    })
}
