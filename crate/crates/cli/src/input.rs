//! Parsing of the JSON documents accepted on the command line.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde_json::Value;

use schubert_core::affine_weyl::{AffineWeylGroup, ElementDoc};
use schubert_core::picard::QSequence;
use schubert_core::rational::{parse_q, Q};
use schubert_core::root_data::{DatumConfig, Isogeny, RootDatum, TypeLetter};

use crate::Failure;

/// Inline JSON, or the contents of a file when prefixed with `@`.
pub fn load(text: &str) -> Result<String, Failure> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

pub fn parse<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    let text = load(text)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("bad {what}: {e}")))
}

pub fn datum(text: Option<&str>) -> Result<RootDatum, Failure> {
    match text {
        None => Ok(RootDatum::new(TypeLetter::A, 1, Isogeny::SimplyConnected)?),
        Some(t) => {
            let config: DatumConfig = parse("datum", t)?;
            Ok(RootDatum::from_config(&config)?)
        }
    }
}

pub fn element(group: &AffineWeylGroup, text: &str) -> Result<schubert_core::affine_weyl::AffineWeylElement, Failure> {
    let doc: ElementDoc = parse("element", text)?;
    Ok(group.from_doc(&doc)?)
}

/// Word entries are node indices or symbols. Distinct symbols take nodes
/// `1, …, n, 0` in order of first appearance.
pub fn word(nodes: usize, text: &str) -> Result<Vec<usize>, Failure> {
    let entries: Vec<Value> = parse("word", text)?;
    let order: Vec<usize> = (1..nodes).chain(std::iter::once(0)).collect();
    let mut symbols: BTreeMap<String, usize> = BTreeMap::new();
    entries
        .iter()
        .map(|entry| match entry {
            Value::Number(n) => n
                .as_u64()
                .map(|n| n as usize)
                .filter(|&n| n < nodes)
                .ok_or_else(|| Failure::Input(format!("letter {n} is not an affine node below {nodes}"))),
            Value::String(s) => {
                let next = symbols.len();
                if let Some(&node) = symbols.get(s) {
                    return Ok(node);
                }
                let node = *order
                    .get(next)
                    .ok_or_else(|| Failure::Input(format!("more than {nodes} distinct symbols")))?;
                symbols.insert(s.clone(), node);
                Ok(node)
            }
            other => Err(Failure::Input(format!("bad letter {other}"))),
        })
        .collect()
}

fn rational(value: &Value) -> Result<Q, Failure> {
    match value {
        Value::Number(n) => n
            .as_i64()
            .map(Q::from_integer)
            .ok_or_else(|| Failure::Input(format!("bad rational {n}"))),
        Value::String(s) => parse_q(s).map_err(Failure::Input),
        other => Err(Failure::Input(format!("bad rational {other}"))),
    }
}

pub fn q_sequence(p: i64, len: usize, text: Option<&str>) -> Result<QSequence, Failure> {
    match text {
        None => Ok(QSequence::constant(p, len)?),
        Some(t) => {
            let values: Vec<Value> = parse("q", t)?;
            let q = values.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
            Ok(QSequence::new(p, q)?)
        }
    }
}

/// `a..b`, `a..=b`, a single integer, or a JSON array of integers.
pub fn charges(text: &str) -> Result<Vec<i64>, Failure> {
    let text = text.trim();
    let bad = || Failure::Input(format!("bad charge range {text:?}"));
    let int = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
    let out: Vec<i64> = if text.starts_with('[') {
        serde_json::from_str(text).map_err(|_| bad())?
    } else if let Some((a, b)) = text.split_once("..=") {
        (int(a)?..=int(b)?).collect()
    } else if let Some((a, b)) = text.split_once("..") {
        // Both ends included.
        (int(a)?..=int(b)?).collect()
    } else {
        vec![int(text)?]
    };
    if out.is_empty() || out.iter().any(|&c| c < 0) {
        return Err(bad());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_symbols() {
        assert_eq!(word(2, r#"["s","s"]"#).unwrap(), vec![1, 1]);
        assert_eq!(word(2, r#"["s","t","s"]"#).unwrap(), vec![1, 0, 1]);
        assert_eq!(word(3, "[0,2,1]").unwrap(), vec![0, 2, 1]);
        assert!(word(2, r#"["a","b","c"]"#).is_err());
        assert!(word(2, "[2]").is_err());
        assert!(word(2, "[-1]").is_err());
    }

    #[test]
    fn charge_ranges() {
        assert_eq!(charges("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(charges("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(charges("[5,1]").unwrap(), vec![5, 1]);
        assert_eq!(charges("3").unwrap(), vec![3]);
        assert!(charges("4..1").is_err());
        assert!(charges("x").is_err());
    }
}
