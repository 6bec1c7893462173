use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use solvlat_core::scalar::{self, ExactScalar};
use solvlat_core::KForm;

/// 17 significant digits in scientific notation.
pub fn float_str(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

/// A JSON number carrying exactly the digits of [`float_str`]; non-finite
/// values become `null`.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    serde_json::from_str(&float_str(x)).expect("formatted float is valid JSON")
}

pub fn floats(xs: impl IntoIterator<Item = f64>) -> Value {
    Value::Array(xs.into_iter().map(float).collect())
}

pub fn rational(x: &ExactScalar) -> Value {
    Value::String(scalar::format(x))
}

pub fn integer(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn integers<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(xs.into_iter().map(integer).collect())
}

pub fn form(f: &KForm) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(idx, c)| json!({ "indices": idx.as_slice(), "coeff": scalar::format(c) }))
        .collect();
    json!({ "degree": f.degree(), "terms": terms })
}

/// The common envelope of every command's output.
pub struct ResultDocument {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub status: String,
    pub diagnostics: Vec<String>,
}

impl ResultDocument {
    pub fn new(command: &'static str) -> Self {
        ResultDocument {
            command,
            inputs: Map::new(),
            outputs: Map::new(),
            status: "ok".into(),
            diagnostics: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn output(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.into(), v.into());
        self
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "status": self.status,
            "diagnostics": self.diagnostics,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(float_str(0.1), "1.0000000000000001e-1");
        assert_eq!(float(1.5).to_string(), float_str(1.5).replace("e0", "e+0"));
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn csv_quoting() {
        let s = csv_string(&["a", "b"], &[vec!["x,y".into(), "1".into()]]);
        assert_eq!(s, "a,b\n\"x,y\",1\n");
    }
}
