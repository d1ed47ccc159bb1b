//! Attribute-value features.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::fmt;

use thiserror::Error;

/// An atomic feature value. The bundled vocabularies only use `+1` and `-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Int(i64),
    Text(String),
}

impl From<i64> for Atom {
    fn from(v: i64) -> Self {
        Atom::Int(v)
    }
}

impl From<&str> for Atom {
    fn from(v: &str) -> Self {
        Atom::Text(v.into())
    }
}

impl From<String> for Atom {
    fn from(v: String) -> Self {
        Atom::Text(v)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(v) if *v > 0 => write!(f, "+{v}"),
            Atom::Int(v) => write!(f, "{v}"),
            Atom::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeatureError {
    #[error("feature attribute must not be empty")]
    EmptyAttribute,
    #[error("attribute `{0}` given twice")]
    DuplicateAttribute(String),
}

/// A set of features keyed by attribute: at most one value per attribute.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FeatureSet {
    entries: BTreeMap<String, Atom>,
}

impl FeatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a feature, rejecting empty attributes and attributes already present.
    pub fn try_insert(
        &mut self,
        attribute: impl Into<String>,
        value: impl Into<Atom>,
    ) -> Result<(), FeatureError> {
        let attribute = attribute.into();
        if attribute.is_empty() {
            return Err(FeatureError::EmptyAttribute);
        }
        match self.entries.entry(attribute) {
            btree_map::Entry::Occupied(e) => Err(FeatureError::DuplicateAttribute(e.key().clone())),
            btree_map::Entry::Vacant(e) => {
                e.insert(value.into());
                Ok(())
            }
        }
    }

    /// Builder-style insertion that overrides any previous value.
    ///
    /// Panics on an empty attribute.
    pub fn with(mut self, attribute: impl Into<String>, value: impl Into<Atom>) -> Self {
        let attribute = attribute.into();
        assert!(!attribute.is_empty(), "feature attribute must not be empty");
        self.entries.insert(attribute, value.into());
        self
    }

    pub fn get(&self, attribute: &str) -> Option<&Atom> {
        self.entries.get(attribute)
    }

    pub fn contains(&self, attribute: &str) -> bool {
        self.entries.contains_key(attribute)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Features in attribute order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Atom)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// `self` with every feature of `top` laid over it; `top` wins collisions.
    pub fn overlaid_with(&self, top: &FeatureSet) -> FeatureSet {
        let mut out = self.clone();
        for (k, v) in &top.entries {
            out.entries.insert(k.clone(), v.clone());
        }
        out
    }

    /// Attributes present in both sets.
    pub fn shared_attributes<'a>(&'a self, other: &'a FeatureSet) -> impl Iterator<Item = &'a str> {
        self.entries.keys().filter(move |k| other.entries.contains_key(k.as_str())).map(String::as_str)
    }
}

impl<K: Into<String>, V: Into<Atom>> FromIterator<(K, V)> for FeatureSet {
    /// Later pairs override earlier ones.
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        iter.into_iter().fold(FeatureSet::new(), |set, (k, v)| set.with(k, v))
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{v}")?;
        }
        f.write_str("}")
    }
}
