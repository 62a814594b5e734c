//! Ordered key/value reports printed as `key: value` lines or as one JSON object.

use serde_json::{Map, Value};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    /// Strings print raw, everything else as compact JSON.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.fields {
            s.push_str(k);
            s.push_str(": ");
            match v {
                Value::String(text) => s.push_str(text),
                other => s.push_str(&other.to_string()),
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = Value::Object(self.fields.clone()).to_string();
        s.push('\n');
        s
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_insertion_order() {
        let mut r = Report::new();
        r.put("property", "pq").put("holds", false).put("witness", vec![3, 1]);
        assert_eq!(r.to_text(), "property: pq\nholds: false\nwitness: [3,1]\n");
        assert_eq!(r.to_json(), "{\"property\":\"pq\",\"holds\":false,\"witness\":[3,1]}\n");
    }
}
