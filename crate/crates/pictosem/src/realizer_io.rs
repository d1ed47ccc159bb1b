//! Dictionary and template documents.
//!
//! A dictionary is an array of entries:
//! `{"lemma": "viande", "features": {"meat": 1}, "part_of_speech": "noun", "gender": "fem", "determiner": "definite"}`.
//! Templates map a predicate either to its finite token list or to
//! `{"finite": [...], "infinitive": [...]}`.

use pictosem_core::realizer::{DeterminerPolicy, Gender, PartOfSpeech};
use pictosem_core::{Dictionary, LemmaEntry, RealizationTemplate, TemplateSet};
use serde::Deserialize;

use crate::formats::{feature_set, Features, LoadError, Ordered};

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum PosDoc {
    Noun,
    Verb,
    Pronoun,
    Proper,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum GenderDoc {
    Masc,
    Fem,
}

#[derive(Deserialize, Clone, Copy, Default)]
#[serde(rename_all = "lowercase")]
enum DeterminerDoc {
    Definite,
    #[default]
    None,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LemmaDoc {
    lemma: String,
    features: Features,
    part_of_speech: PosDoc,
    #[serde(default)]
    gender: Option<GenderDoc>,
    #[serde(default)]
    determiner: DeterminerDoc,
}

pub fn load_dictionary(text: &str) -> Result<Dictionary, LoadError> {
    let docs: Vec<LemmaDoc> = serde_json::from_str(text)?;
    let entries = docs
        .into_iter()
        .map(|d| LemmaEntry {
            lemma: d.lemma,
            features: feature_set(d.features),
            part_of_speech: match d.part_of_speech {
                PosDoc::Noun => PartOfSpeech::Noun,
                PosDoc::Verb => PartOfSpeech::Verb,
                PosDoc::Pronoun => PartOfSpeech::Pronoun,
                PosDoc::Proper => PartOfSpeech::Proper,
            },
            gender: d.gender.map(|g| match g {
                GenderDoc::Masc => Gender::Masc,
                GenderDoc::Fem => Gender::Fem,
            }),
            determiner: match d.determiner {
                DeterminerDoc::Definite => DeterminerPolicy::Definite,
                DeterminerDoc::None => DeterminerPolicy::None,
            },
        })
        .collect();
    Ok(Dictionary::new(entries)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TemplateDoc {
    Finite(Vec<String>),
    Full {
        finite: Vec<String>,
        #[serde(default)]
        infinitive: Option<Vec<String>>,
    },
}

/// Parse templates. Checking them against a lexicon is left to
/// [`TemplateSet::validate_against`].
pub fn load_templates(text: &str) -> Result<TemplateSet, LoadError> {
    let doc: Ordered<TemplateDoc> = serde_json::from_str(text)?;
    let mut set = TemplateSet::new();
    for (predicate, t) in doc.0 {
        let (finite, infinitive) = match t {
            TemplateDoc::Finite(f) => (f, None),
            TemplateDoc::Full { finite, infinitive } => (finite, infinitive),
        };
        set.insert(RealizationTemplate::parse(&predicate, &finite, infinitive.as_deref())?);
    }
    Ok(set)
}
