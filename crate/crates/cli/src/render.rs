//! Human-readable text derived from the JSON report.

use serde_json::Value;

pub fn human(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = report {
        for (key, value) in map {
            write_entry(&mut out, key, value, 0);
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if !s.contains('\n') => Some(s.clone()),
        _ => None,
    }
}

fn label(key: &str) -> String {
    key.replace('_', " ")
}

fn write_entry(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    if let Some(s) = scalar(value) {
        out.push_str(&format!("{pad}{}: {s}\n", label(key)));
        return;
    }
    match value {
        Value::String(block) => {
            out.push_str(&format!("{pad}{}:\n", label(key)));
            for line in block.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Array(items) if items.is_empty() => {
            out.push_str(&format!("{pad}{}: (none)\n", label(key)));
        }
        Value::Array(items) => {
            let scalars: Option<Vec<String>> = items.iter().map(scalar).collect();
            match scalars {
                Some(parts) => {
                    out.push_str(&format!("{pad}{}: {}\n", label(key), parts.join(", ")))
                }
                None => {
                    out.push_str(&format!("{pad}{}:\n", label(key)));
                    for item in items {
                        write_item(out, item, indent + 2);
                    }
                }
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{}:\n", label(key)));
            for (k, v) in map {
                write_entry(out, k, v, indent + 2);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn write_item(out: &mut String, item: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match item {
        Value::Object(map) => {
            let mut first = true;
            for (k, v) in map {
                let mut entry = String::new();
                write_entry(&mut entry, k, v, indent + 2);
                if first {
                    // replace the leading padding of the first line with a bullet
                    entry.replace_range(indent..indent + 2, "- ");
                    first = false;
                }
                out.push_str(&entry);
            }
        }
        other => {
            let text = scalar(other).unwrap_or_else(|| other.to_string());
            out.push_str(&format!("{pad}- {text}\n"));
        }
    }
}
