use mzeta_core::{BiPoly, GridCellSet};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// An ordered key/value record rendered either as `key: value` lines or as
/// a JSON object with the same key order.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: &str, text: impl Into<String>, json: Value) -> &mut Self {
        self.fields.push((key.to_string(), text.into(), json));
        self
    }

    pub fn num(&mut self, key: &str, v: impl Into<i128>) -> &mut Self {
        let v = v.into();
        self.push(key, v.to_string(), json!(v))
    }

    pub fn text(&mut self, key: &str, v: impl std::fmt::Display) -> &mut Self {
        let s = v.to_string();
        self.push(key, s.clone(), Value::String(s))
    }

    pub fn flag(&mut self, key: &str, v: bool) -> &mut Self {
        self.push(key, if v { "yes" } else { "no" }, Value::Bool(v))
    }

    /// A set of positions, shown as `{1, 4, 7}`.
    pub fn set<T: std::fmt::Display + Clone + Into<Value>>(
        &mut self,
        key: &str,
        v: &[T],
    ) -> &mut Self {
        let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        self.push(key, format!("{{{}}}", items.join(", ")), array(v))
    }

    /// A sequence of letters or entries, shown space-separated.
    pub fn seq<T: std::fmt::Display + Clone + Into<Value>>(
        &mut self,
        key: &str,
        v: &[T],
    ) -> &mut Self {
        let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        self.push(key, items.join(" "), array(v))
    }

    pub fn cells(&mut self, key: &str, c: &GridCellSet) -> &mut Self {
        let v: Vec<Value> = c.iter().map(|(i, j)| json!([i, j])).collect();
        self.push(key, c.to_string(), Value::Array(v))
    }

    pub fn poly(&mut self, key: &str, p: &BiPoly) -> &mut Self {
        self.push(key, p.to_string(), p.to_json_value())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for (k, t, _) in &self.fields {
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(t);
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut m = Map::new();
                for (k, _, v) in &self.fields {
                    m.insert(k.clone(), v.clone());
                }
                format!("{}\n", Value::Object(m))
            }
        }
    }
}

fn array<T: Clone + Into<Value>>(v: &[T]) -> Value {
    Value::Array(v.iter().cloned().map(Into::into).collect())
}
