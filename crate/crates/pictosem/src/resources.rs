use std::fs;
use std::path::Path;

use anyhow::Context;
use pictosem_core::{AnalysisError, AnalyzerConfig, Dictionary, Lexicon, TemplateSet};

use crate::formats::LoadError;
use crate::lexicon_io::load_lexicon;
use crate::realizer_io::{load_dictionary, load_templates};

/// Everything transfer needs, immutable once loaded.
#[derive(Debug, Clone)]
pub struct Resources {
    pub lexicon: Lexicon,
    pub dictionary: Dictionary,
    pub templates: TemplateSet,
}

impl Resources {
    /// Parse the three documents and check the templates against the lexicon.
    pub fn from_texts(lexicon: &str, dictionary: &str, templates: &str) -> Result<Self, LoadError> {
        let lexicon = load_lexicon(lexicon)?;
        let dictionary = load_dictionary(dictionary)?;
        let templates = load_templates(templates)?;
        templates.validate_against(&lexicon)?;
        Ok(Self { lexicon, dictionary, templates })
    }

    pub fn load(lexicon: &Path, dictionary: &Path, templates: &Path) -> anyhow::Result<Self> {
        let lexicon = read_lexicon(lexicon)?;
        let dictionary =
            load_dictionary(&read(dictionary)?).with_context(|| format!("{}", dictionary.display()))?;
        let templates_doc =
            load_templates(&read(templates)?).with_context(|| format!("{}", templates.display()))?;
        templates_doc.validate_against(&lexicon).with_context(|| format!("{}", templates.display()))?;
        Ok(Self { lexicon, dictionary, templates: templates_doc })
    }
}

pub fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_lexicon(path: &Path) -> anyhow::Result<Lexicon> {
    load_lexicon(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// Defaults with optional overrides.
pub fn analyzer_config(
    threshold: Option<f64>,
    locality: Option<f64>,
) -> Result<AnalyzerConfig, AnalysisError> {
    AnalyzerConfig::new(
        threshold.unwrap_or(AnalyzerConfig::DEFAULT_THRESHOLD),
        locality.unwrap_or(AnalyzerConfig::DEFAULT_LOCALITY),
    )
}
