//! JSON input documents.
//!
//! ```json
//! {"kind": "matrix", "n": 3, "upper": ["1", "-2", "1", "2", "-1", "3"]}
//! {"kind": "poly", "vars": 2, "terms": [{"exp": [1, 2], "coef": "0"}]}
//! ```
//!
//! `upper` lists the upper triangle row by row, diagonal included. Values
//! are quoted rationals `"p/q"` or `"-inf"`.

use serde::{Deserialize, Serialize};
use serde_json::Number;

use tropdual::{QuadricMatrix, TropPolynomial, TropValue};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Document {
    Matrix { n: usize, upper: Vec<String> },
    Poly { vars: usize, terms: Vec<TermDoc> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<Number>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Poly(TropPolynomial),
    Matrix(QuadricMatrix),
}

fn value(s: &str) -> Result<TropValue> {
    s.parse::<TropValue>().map_err(|e| CliError::BadValue { value: s.to_string(), reason: e.to_string() })
}

pub fn parse_input(bytes: &[u8]) -> Result<Input> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| CliError::Malformed(e.to_string()))?;
    from_document(&doc)
}

pub fn from_document(doc: &Document) -> Result<Input> {
    match doc {
        Document::Matrix { n, upper } => {
            let values = upper.iter().map(|s| value(s)).collect::<Result<Vec<_>>>()?;
            if *n == 0 || values.len() != n * (n + 1) / 2 {
                return Err(CliError::Malformed(format!(
                    "a {n}x{n} matrix needs {} upper-triangle entries, got {}",
                    n * (n + 1) / 2,
                    values.len()
                )));
            }
            Ok(Input::Matrix(QuadricMatrix::from_upper(*n, &values)?))
        }
        Document::Poly { vars, terms } => {
            let mut parsed = Vec::with_capacity(terms.len());
            for t in terms {
                let exp = t
                    .exp
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| CliError::NonIntegerExponent(x.to_string())))
                    .collect::<Result<Vec<i64>>>()?;
                if exp.len() != *vars {
                    return Err(CliError::Malformed(format!("term has {} exponents, expected {vars}", exp.len())));
                }
                parsed.push((exp, value(&t.coef)?));
            }
            Ok(Input::Poly(TropPolynomial::new(*vars, parsed)?))
        }
    }
}

/// Canonical document: values in lowest terms, terms sorted by exponent.
pub fn to_document(input: &Input) -> Document {
    match input {
        Input::Matrix(a) => {
            Document::Matrix { n: a.size(), upper: a.matrix().upper().iter().map(ToString::to_string).collect() }
        }
        Input::Poly(f) => Document::Poly {
            vars: f.nvars(),
            terms: f
                .terms()
                .map(|(e, c)| TermDoc { exp: e.iter().map(|&x| Number::from(x)).collect(), coef: c.to_string() })
                .collect(),
        },
    }
}

pub fn serialize(input: &Input) -> String {
    serde_json::to_string(&to_document(input)).expect("documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_document() {
        let doc = br#"{"kind":"matrix","n":3,"upper":["1","-2","1","2","-1","3"]}"#;
        let Input::Matrix(a) = parse_input(doc).unwrap() else { panic!() };
        assert_eq!(a, QuadricMatrix::conic_int([1, 2, 3, -2, 1, -1]));
    }

    #[test]
    fn poly_document_collapses_duplicates() {
        let doc = br#"{"kind":"poly","vars":2,"terms":[{"exp":[1,0],"coef":"1"},{"exp":[1,0],"coef":"3"}]}"#;
        let Input::Poly(f) = parse_input(doc).unwrap() else { panic!() };
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&[1, 0]), TropValue::int(3));
    }

    #[test]
    fn distinct_errors() {
        let non_int = br#"{"kind":"poly","vars":1,"terms":[{"exp":[1.5],"coef":"1"}]}"#;
        assert!(matches!(parse_input(non_int), Err(CliError::NonIntegerExponent(_))));
        let empty = br#"{"kind":"poly","vars":1,"terms":[{"exp":[1],"coef":"-inf"}]}"#;
        assert!(matches!(parse_input(empty), Err(CliError::EmptySupport)));
        assert!(matches!(parse_input(b"{\"kind\":\"poly\"}"), Err(CliError::Malformed(_))));
        let bad = br#"{"kind":"matrix","n":1,"upper":["x"]}"#;
        assert!(matches!(parse_input(bad), Err(CliError::BadValue { .. })));
    }

    #[test]
    fn canonical_round_trip() {
        let doc = br#"{"kind":"poly","vars":2,"terms":[{"exp":[0,0],"coef":"4/2"},{"exp":[1,2],"coef":"-1/3"}]}"#;
        let input = parse_input(doc).unwrap();
        let text = serialize(&input);
        assert_eq!(text, r#"{"kind":"poly","vars":2,"terms":[{"exp":[0,0],"coef":"2"},{"exp":[1,2],"coef":"-1/3"}]}"#);
        assert_eq!(parse_input(text.as_bytes()).unwrap(), input);
    }
}
