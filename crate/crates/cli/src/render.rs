//! Plain-text rendering of command outputs as aligned tables.

use serde_json::Value;

pub fn table(outputs: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = outputs else {
        return format!("{}\n", scalar(outputs));
    };
    let mut rows: Vec<(String, String)> = Vec::new();
    let mut blocks: Vec<(String, String)> = Vec::new();
    for (key, value) in map {
        match value {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                blocks.push((key.clone(), grid(items)));
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_string) => {
                blocks.push((key.clone(), items.iter().map(|v| scalar(v) + "\n").collect()));
            }
            Value::Object(inner) if inner.values().any(|v| v.is_object() || is_table(v)) => {
                blocks.push((key.clone(), table(value)));
            }
            _ => rows.push((key.clone(), scalar(value))),
        }
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    for (k, body) in blocks {
        out.push_str(&format!("\n{k}:\n"));
        for line in body.lines() {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

/// Rows of objects sharing their keys become columns.
fn grid(items: &[Value]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().expect("objects only").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| columns.iter().map(|c| item.get(c).map(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |row: &[String]| {
        row.iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(&columns);
    out.push('\n');
    for row in &cells {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
