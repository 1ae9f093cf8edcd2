use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer extended by `-inf` and `+inf`, used for dimensions and diameters.
///
/// Serialized as a JSON number, or as the strings `"inf"` / `"-inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    Inf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::NegInf => s.serialize_str("-inf"),
            ExtInt::Finite(v) => s.serialize_i64(*v),
            ExtInt::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ExtInt::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(ExtInt::Inf),
            Raw::Str(s) if s == "-inf" => Ok(ExtInt::NegInf),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "bad extended integer {s:?}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for v in [
            ExtInt::NegInf,
            ExtInt::Finite(-1),
            ExtInt::Finite(7),
            ExtInt::Inf,
        ] {
            let text = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<ExtInt>(&text).unwrap(), v);
        }
        assert_eq!(serde_json::to_string(&ExtInt::Inf).unwrap(), "\"inf\"");
    }

    #[test]
    fn ordering() {
        assert!(ExtInt::NegInf < ExtInt::Finite(-100));
        assert!(ExtInt::Finite(100) < ExtInt::Inf);
    }
}
