use std::fmt;
use std::marker::PhantomData;

use pictosem_core::realizer::{DictionaryError, TemplateError};
use pictosem_core::{Atom, BenchError, FeatureSet, LexiconError, NetworkError};
use serde::de::{self, Deserialize, Deserializer, MapAccess, Visitor};
use serde::ser::{Serialize, SerializeMap, Serializer};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Dictionary(#[from] DictionaryError),
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("line {line}: {source}")]
    Gold { line: usize, source: BenchError },
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        LoadError::Parse { line: e.line(), column: e.column(), message }
    }
}

/// A JSON object read as key/value pairs in document order. Repeated keys
/// are rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct Ordered<T>(pub Vec<(String, T)>);

impl<T> Default for Ordered<T> {
    fn default() -> Self {
        Ordered(Vec::new())
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Ordered<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);

        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Ordered<T>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out: Vec<(String, T)> = Vec::new();
                while let Some(key) = map.next_key::<String>()? {
                    if out.iter().any(|(k, _)| *k == key) {
                        return Err(de::Error::custom(format_args!("duplicate key `{key}`")));
                    }
                    let value = map.next_value()?;
                    out.push((key, value));
                }
                Ok(Ordered(out))
            }
        }

        d.deserialize_map(V(PhantomData))
    }
}

impl<T: Serialize> Serialize for Ordered<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDoc(pub Atom);

impl<'de> Deserialize<'de> for AtomDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = AtomDoc;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<AtomDoc, E> {
                Ok(AtomDoc(Atom::Int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<AtomDoc, E> {
                i64::try_from(v)
                    .map(|v| AtomDoc(Atom::Int(v)))
                    .map_err(|_| E::custom("feature value out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<AtomDoc, E> {
                Ok(AtomDoc(Atom::Text(v.into())))
            }
        }

        d.deserialize_any(V)
    }
}

impl Serialize for AtomDoc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Atom::Int(v) => s.serialize_i64(*v),
            Atom::Text(v) => s.serialize_str(v),
        }
    }
}

/// A feature object: integer or string values, document order, no repeated attributes.
pub type Features = Ordered<AtomDoc>;

pub fn feature_set(doc: Features) -> FeatureSet {
    doc.0.into_iter().map(|(k, AtomDoc(v))| (k, v)).collect()
}

pub fn features_doc(set: &FeatureSet) -> Features {
    Ordered(set.iter().map(|(k, v)| (k.to_string(), AtomDoc(v.clone()))).collect())
}
