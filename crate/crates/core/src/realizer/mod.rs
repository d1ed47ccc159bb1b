//! Surface realization of a semantic network as a French sentence.
//!
//! Lexical choice picks, for each vertex, the dictionary word whose features
//! best fit the vertex's intrinsic features. The predicate with the most arcs
//! heads the sentence and its finite template is filled from its arcs. A
//! predicate filling an `inf` slot is rendered through its infinitive
//! template.

mod dictionary;
mod template;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::analyzer::{analyze, compatibility, AnalysisError, AnalyzerConfig, Utterance};
use crate::lexicon::Lexicon;
use crate::network::{SemanticNetwork, Vertex};

pub use dictionary::{DeterminerPolicy, Dictionary, DictionaryError, Gender, LemmaEntry, PartOfSpeech};
pub use template::{
    Piece, RealizationTemplate, SlotForm, SlotMarker, TemplateError, TemplateSet, TemplateToken,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("network has no vertices")]
    EmptyNetwork,
    #[error("no predicate links the {0} symbols")]
    NoPredicate(usize),
    #[error("no word fits `{symbol}` at position {pos}")]
    NoLemma { pos: usize, symbol: String },
    #[error("no template for predicate `{0}`")]
    MissingTemplate(String),
    #[error("required case `{case}` of `{predicate}` is unfilled")]
    MissingSlot { predicate: String, case: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransferError {
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub text: String,
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn choose_lemma<'d>(vertex: &Vertex, dictionary: &'d Dictionary) -> Result<&'d LemmaEntry, RealizeError> {
    let no_lemma = || RealizeError::NoLemma { pos: vertex.pos, symbol: vertex.symbol.clone() };
    let mut best: Option<(f64, &LemmaEntry)> = None;
    for entry in dictionary.entries() {
        let score = compatibility(&vertex.intrinsic, &entry.features).map_err(|_| no_lemma())?;
        if score > 0.0 && best.is_none_or(|(b, _)| score > b) {
            best = Some((score, entry));
        }
    }
    best.map(|(_, e)| e).ok_or_else(no_lemma)
}

/// One word per vertex, in vertex order.
pub fn lexical_choice<'d>(
    network: &SemanticNetwork,
    dictionary: &'d Dictionary,
) -> Result<Vec<&'d LemmaEntry>, RealizeError> {
    network.vertices().iter().map(|v| choose_lemma(v, dictionary)).collect()
}

/// The vertex heading the most arcs; the earliest one on ties.
fn main_predicate(network: &SemanticNetwork) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in network.vertices() {
        let n = network.arcs_from(v.pos).count();
        if n > 0 && best.is_none_or(|(_, m)| n > m) {
            best = Some((v.pos, n));
        }
    }
    best.map(|(pos, _)| pos)
}

struct Renderer<'a> {
    network: &'a SemanticNetwork,
    dictionary: &'a Dictionary,
    templates: &'a TemplateSet,
}

impl Renderer<'_> {
    fn pattern(
        &self,
        head: usize,
        tokens: &[TemplateToken],
        visited: &mut Vec<usize>,
        out: &mut Vec<String>,
    ) -> Result<(), RealizeError> {
        visited.push(head);
        for token in tokens {
            let Some(slot) = token.slot() else {
                out.extend(token.pieces.iter().map(|p| match p {
                    Piece::Word(w) => w.clone(),
                    Piece::Slot(_) => unreachable!(),
                }));
                continue;
            };
            let Some(arc) = self.network.arc(head, &slot.case_label) else {
                if token.optional {
                    continue;
                }
                return Err(RealizeError::MissingSlot {
                    predicate: self.network.vertices()[head].symbol.clone(),
                    case: slot.case_label.clone(),
                });
            };
            for piece in &token.pieces {
                match piece {
                    Piece::Word(w) => out.push(w.clone()),
                    Piece::Slot(s) => self.filler(arc.dep, s.form, visited, out)?,
                }
            }
        }
        visited.pop();
        Ok(())
    }

    fn filler(
        &self,
        pos: usize,
        form: SlotForm,
        visited: &mut Vec<usize>,
        out: &mut Vec<String>,
    ) -> Result<(), RealizeError> {
        let vertex = &self.network.vertices()[pos];
        if form == SlotForm::Infinitive && !visited.contains(&pos) {
            if let Some(inf) = self.templates.get(&vertex.symbol).and_then(|t| t.infinitive.as_ref()) {
                return self.pattern(pos, inf, visited, out);
            }
        }
        let lemma = choose_lemma(vertex, self.dictionary)?;
        match form {
            SlotForm::Definite => out.extend(lemma.definite_phrase()),
            SlotForm::Bare | SlotForm::Infinitive => out.push(lemma.lemma.clone()),
        }
        Ok(())
    }
}

/// Merge preposition + article pairs (`à le` → `au`, `de les` → `des`).
fn contract(words: Vec<String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(words.len());
    for w in words {
        let merged = match (out.last().map(String::as_str), w.as_str()) {
            (Some("à"), "le") => Some("au"),
            (Some("à"), "les") => Some("aux"),
            (Some("de"), "le") => Some("du"),
            (Some("de"), "les") => Some("des"),
            _ => None,
        };
        match merged {
            Some(m) => *out.last_mut().expect("checked above") = m.into(),
            None => out.push(w),
        }
    }
    out
}

fn finish(words: Vec<String>) -> Sentence {
    let joined = contract(words).join(" ");
    let mut chars = joined.chars();
    let text = match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => joined,
    };
    Sentence { text }
}

/// Linearize a network through its main predicate's template.
pub fn realize(
    network: &SemanticNetwork,
    dictionary: &Dictionary,
    templates: &TemplateSet,
) -> Result<Sentence, RealizeError> {
    let renderer = Renderer { network, dictionary, templates };
    let Some(head) = main_predicate(network) else {
        return match network.vertices() {
            [] => Err(RealizeError::EmptyNetwork),
            [only] => Ok(finish(choose_lemma(only, dictionary)?.definite_phrase())),
            many => Err(RealizeError::NoPredicate(many.len())),
        };
    };
    let symbol = &network.vertices()[head].symbol;
    let template = templates.get(symbol).ok_or_else(|| RealizeError::MissingTemplate(symbol.clone()))?;
    let mut words = Vec::new();
    renderer.pattern(head, &template.finite, &mut Vec::new(), &mut words)?;
    Ok(finish(words))
}

/// Analyse an utterance and realize the resulting network.
pub fn transfer(
    lexicon: &Lexicon,
    dictionary: &Dictionary,
    templates: &TemplateSet,
    utterance: &Utterance,
    config: &AnalyzerConfig,
) -> Result<Sentence, TransferError> {
    let network = analyze(lexicon, utterance, config)?;
    Ok(realize(&network, dictionary, templates)?)
}
