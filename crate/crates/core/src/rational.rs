//! Exact rationals and their canonical text form.
//!
//! Rationals travel through JSON as strings: `"a/b"` in lowest terms with a
//! positive denominator, or `"a"` when the value is an integer. Plain JSON
//! integers are accepted on input.

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serializer};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn parse_q(text: &str) -> Result<Q, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num.parse().map_err(|_| format!("bad rational {text:?}"))?;
    let den: i64 = den.parse().map_err(|_| format!("bad rational {text:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Q::new(num, den))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawQ {
    Int(i64),
    Text(String),
}

impl RawQ {
    fn into_q<E: de::Error>(self) -> Result<Q, E> {
        match self {
            RawQ::Int(n) => Ok(q(n)),
            RawQ::Text(s) => parse_q(&s).map_err(E::custom),
        }
    }
}

/// `#[serde(with = "rational::single")]`
pub mod single {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        RawQ::deserialize(d)?.into_q()
    }
}

/// `#[serde(with = "rational::vec")]`
pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<RawQ>::deserialize(d)?
            .into_iter()
            .map(RawQ::into_q)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        assert_eq!(Q::new(2, 4).to_string(), "1/2");
        assert_eq!(Q::new(3, -6).to_string(), "-1/2");
        assert_eq!(q(0).to_string(), "0");
        assert_eq!(parse_q("-4/8").unwrap(), Q::new(-1, 2));
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
