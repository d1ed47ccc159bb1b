use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::feature::FeatureSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Pronoun,
    Proper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gender {
    Masc,
    Fem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminerPolicy {
    Definite,
    None,
}

/// A natural-language word described with the icon vocabulary's features.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub lemma: String,
    pub features: FeatureSet,
    pub part_of_speech: PartOfSpeech,
    pub gender: Option<Gender>,
    pub determiner: DeterminerPolicy,
}

impl LemmaEntry {
    /// The word as a noun phrase with its definite article, if it takes one.
    pub(crate) fn definite_phrase(&self) -> Vec<String> {
        let article = match (self.part_of_speech, self.determiner, self.gender) {
            (PartOfSpeech::Noun, DeterminerPolicy::Definite, Some(Gender::Fem)) => Some("la"),
            (PartOfSpeech::Noun, DeterminerPolicy::Definite, _) => Some("le"),
            _ => None,
        };
        article.into_iter().map(String::from).chain([self.lemma.clone()]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DictionaryError {
    #[error("lemma `{0}` has no features")]
    EmptyFeatures(String),
}

/// Lemma entries in document order; earlier entries win ties in lexical choice.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary {
    entries: Vec<LemmaEntry>,
}

impl Dictionary {
    pub fn new(entries: Vec<LemmaEntry>) -> Result<Self, DictionaryError> {
        if let Some(e) = entries.iter().find(|e| e.features.is_empty()) {
            return Err(DictionaryError::EmptyFeatures(e.lemma.clone()));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[LemmaEntry] {
        &self.entries
    }
}
