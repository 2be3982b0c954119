//! Output documents.
//!
//! Every command builds one `serde_json::Value`; `--json` prints it with
//! sorted keys, otherwise it is flattened into indented `key: value` lines.
//! Scalars are always exact strings.

use std::fmt::Display;

use pdyn_core::{Field, ProjMap, ProjPoint, UniPoly};
use serde_json::{json, Map, Value};

pub fn s(v: impl Display) -> Value {
    Value::String(v.to_string())
}

pub fn opt(v: Option<impl Display>) -> Value {
    v.map_or(Value::Null, s)
}

pub fn list<I: IntoIterator<Item = D>, D: Display>(items: I) -> Value {
    Value::Array(items.into_iter().map(s).collect())
}

pub fn map<T: Field>(phi: &ProjMap<T>) -> Value {
    json!({ "p": s(phi.p()), "q": s(phi.q()), "degree": phi.degree() })
}

pub fn poly_in<T: Field>(p: &UniPoly<T>, var: &str) -> Value {
    Value::String(p.display_with(var))
}

pub fn points<T: Field>(pts: &[ProjPoint<T>]) -> Value {
    list(pts)
}

pub fn to_json(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("values serialize") + "\n"
}

pub fn to_text(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(m) = doc {
        write_object(&mut out, m, 0);
    } else {
        write_value(&mut out, doc, 0);
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(x) => Some(x.clone()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn write_object(out: &mut String, m: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (k, v) in m {
        match scalar(v) {
            Some(line) => out.push_str(&format!("{pad}{k}: {line}\n")),
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                write_value(out, v, indent + 1);
            }
        }
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => write_object(out, m, indent),
        Value::Array(items) => {
            for item in items {
                match (item, scalar(item)) {
                    (_, Some(line)) => out.push_str(&format!("{pad}- {line}\n")),
                    (Value::Object(m), None) => {
                        out.push_str(&format!("{pad}-\n"));
                        write_object(out, m, indent + 1);
                    }
                    (other, None) => {
                        out.push_str(&format!("{pad}-\n"));
                        write_value(out, other, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
