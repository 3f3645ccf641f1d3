//! JSON documents for states, Hamiltonians, thermal contexts and density
//! matrices, plus the numeric formatting used by every report.
//!
//! A state document is `{"probs": [..], "energies": [..]}` where `energies`
//! is optional.  Probabilities are JSON numbers (float mode) or strings
//! `"num/den"` (exact mode).  A context document is `{"beta": x, "k": 1.0}`
//! and a density matrix is `{"re": [[..]], "im": [[..]]}`.

use crate::base::{parse_rational, Hamiltonian, ProbDist, ThermalContext, Weights};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::path::Path;

/// Significant digits of every number written to a report.
pub const SIGNIFICANT_DIGITS: i32 = 12;

/// One probability: a JSON number or a rational string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProbEntry {
    Float(f64),
    Rational(String),
}

/// A classical state with optional energies.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateDoc {
    pub probs: Vec<ProbEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energies: Option<Vec<f64>>,
}

impl StateDoc {
    /// Converts to a distribution; any string entry selects exact mode, in
    /// which numeric entries must be integers.
    pub fn to_dist(&self) -> Result<ProbDist> {
        let any_rational = self.probs.iter().any(|e| matches!(e, ProbEntry::Rational(_)));
        if !any_rational {
            let w = self
                .probs
                .iter()
                .map(|e| match e {
                    ProbEntry::Float(x) => *x,
                    ProbEntry::Rational(_) => unreachable!(),
                })
                .collect();
            return ProbDist::new(w);
        }
        let exact = self
            .probs
            .iter()
            .map(|e| match e {
                ProbEntry::Rational(s) => parse_rational(s),
                ProbEntry::Float(x) if x.fract() == 0.0 && x.abs() < 1e15 => {
                    Ok(BigRational::from_integer(BigInt::from(*x as i64)))
                }
                ProbEntry::Float(x) => Err(Error::Parse(format!(
                    "exact-mode state mixes the float {x} with rational strings"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        ProbDist::from_rationals(exact)
    }

    /// The Hamiltonian carried by the document, if any.
    pub fn hamiltonian(&self) -> Result<Option<Hamiltonian>> {
        self.energies.clone().map(Hamiltonian::new).transpose()
    }

    /// Writes a distribution, keeping exact weights as strings.
    pub fn from_dist(p: &ProbDist, h: Option<&Hamiltonian>) -> Self {
        let probs = match p.exact() {
            Some(ex) => ex.iter().map(|r| ProbEntry::Rational(r.to_string())).collect(),
            None => p.weights().iter().copied().map(ProbEntry::Float).collect(),
        };
        Self { probs, energies: h.map(|h| h.levels().to_vec()) }
    }
}

/// A Hamiltonian document `{"energies": [..]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianDoc {
    pub energies: Vec<f64>,
}

impl HamiltonianDoc {
    pub fn to_hamiltonian(&self) -> Result<Hamiltonian> {
        Hamiltonian::new(self.energies.clone())
    }
}

/// A density matrix by real and imaginary parts (row-major).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityDoc {
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

/// Parses JSON text; errors name the source and carry serde's line and
/// column.
pub fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Reads and parses a JSON file.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })?;
    parse_json(&text, &path.display().to_string())
}

/// Reads a state document and returns the distribution and its energies.
pub fn read_state(path: &Path) -> Result<(ProbDist, Option<Hamiltonian>)> {
    let doc: StateDoc = read_json(path)?;
    Ok((doc.to_dist()?, doc.hamiltonian()?))
}

/// Reads a context document.
pub fn read_context(path: &Path) -> Result<ThermalContext> {
    let ctx: ThermalContext = read_json(path)?;
    ctx.validated()
}

/// Reads a Hamiltonian from either `{"energies": [..]}` or a bare array.
pub fn read_hamiltonian(path: &Path) -> Result<Hamiltonian> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Doc {
        Wrapped(HamiltonianDoc),
        Bare(Vec<f64>),
    }
    match read_json::<Doc>(path)? {
        Doc::Wrapped(d) => d.to_hamiltonian(),
        Doc::Bare(v) => Hamiltonian::new(v),
    }
}

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let s = format!("{:.*e}", (SIGNIFICANT_DIGITS - 1) as usize, x);
    s.parse().expect("formatted float parses")
}

/// Rounds every floating-point number inside a JSON value.
pub fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let r = round_sig(n.as_f64().expect("f64 number"));
            if let Some(m) = serde_json::Number::from_f64(r) {
                *n = m;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Serializes a report as pretty JSON with rounded numbers.
pub fn to_report_json<T: Serialize>(value: &T) -> Result<String> {
    let mut v = serde_json::to_value(value)
        .map_err(|e| Error::Parse(format!("cannot serialize report: {e}")))?;
    round_value(&mut v);
    Ok(serde_json::to_string_pretty(&v).expect("JSON values serialize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::Mode;

    #[test]
    fn state_documents() {
        let d: StateDoc = parse_json(r#"{"probs": ["1/2", "1/4", "1/4", 0]}"#, "t").unwrap();
        let p = d.to_dist().unwrap();
        assert_eq!(p.mode(), Mode::Exact);
        assert_eq!(StateDoc::from_dist(&p, None).to_dist().unwrap(), p);
        let d: StateDoc = parse_json(r#"{"probs": [0.3, 0.7], "energies": [0, 1]}"#, "t").unwrap();
        assert_eq!(d.to_dist().unwrap().mode(), Mode::Float);
        assert_eq!(d.hamiltonian().unwrap().unwrap().levels(), &[0.0, 1.0]);
        let bad: StateDoc = parse_json(r#"{"probs": ["1/2", 0.5]}"#, "t").unwrap();
        assert!(bad.to_dist().is_err());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_json::<StateDoc>("{\n  \"probs\": [0.5,\n}", "state").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(-1.234567890123456e-7), -1.23456789012e-7);
        let mut v = serde_json::json!({"a": [0.30000000000000004, 1], "b": "inf"});
        round_value(&mut v);
        assert_eq!(v, serde_json::json!({"a": [0.3, 1], "b": "inf"}));
    }
}
