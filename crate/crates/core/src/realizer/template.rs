//! Slot templates.
//!
//! A template is a list of tokens. A token is either plain words (`"mange"`)
//! or a group of words around one slot marker (`"avec <instrument:def>?"`).
//! A marker names a case and optionally a form: `def` (definite article where
//! the lemma takes one; the default), `bare` (lemma only) or `inf`
//! (infinitive clause of a predicate filler). A trailing `?` makes the group
//! optional: it is dropped when the case is unbound.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::lexicon::Lexicon;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error("template for `{predicate}`: token `{token}`: {reason}")]
    Syntax { predicate: String, token: String, reason: &'static str },
    #[error("template for `{0}`: symbol is unknown or not predicative")]
    NotPredicative(String),
    #[error("template for `{predicate}`: `{case}` is not a case of the predicate")]
    UnknownCase { predicate: String, case: String },
    #[error("template for `{predicate}`: case `{case}` appears twice")]
    RepeatedCase { predicate: String, case: String },
    #[error("template for `{predicate}`: case `{case}` has no slot")]
    UncoveredCase { predicate: String, case: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotForm {
    Definite,
    Bare,
    Infinitive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotMarker {
    pub case_label: String,
    pub form: SlotForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Word(String),
    Slot(SlotMarker),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateToken {
    pub pieces: Vec<Piece>,
    pub optional: bool,
}

impl TemplateToken {
    pub fn parse(predicate: &str, token: &str) -> Result<Self, TemplateError> {
        let err = |reason| TemplateError::Syntax { predicate: predicate.into(), token: token.into(), reason };
        let trimmed = token.trim();
        let (body, optional) = match trimmed.strip_suffix('?') {
            Some(rest) => (rest, true),
            None => (trimmed, false),
        };
        let mut pieces = Vec::new();
        for word in body.split_whitespace() {
            let piece = match word.strip_prefix('<') {
                Some(inner) => {
                    let inner = inner.strip_suffix('>').ok_or_else(|| err("unterminated slot"))?;
                    let (case, form) = match inner.split_once(':') {
                        Some((case, form)) => (case, form),
                        None => (inner, "def"),
                    };
                    if case.is_empty() {
                        return Err(err("empty case label"));
                    }
                    let form = match form {
                        "def" => SlotForm::Definite,
                        "bare" => SlotForm::Bare,
                        "inf" => SlotForm::Infinitive,
                        _ => return Err(err("unknown slot form")),
                    };
                    Piece::Slot(SlotMarker { case_label: case.into(), form })
                }
                None => Piece::Word(word.into()),
            };
            pieces.push(piece);
        }
        let slots = pieces.iter().filter(|p| matches!(p, Piece::Slot(_))).count();
        if pieces.is_empty() {
            return Err(err("empty token"));
        }
        if slots > 1 {
            return Err(err("more than one slot"));
        }
        if optional && slots == 0 {
            return Err(err("optional group without a slot"));
        }
        Ok(Self { pieces, optional })
    }

    pub fn slot(&self) -> Option<&SlotMarker> {
        self.pieces.iter().find_map(|p| match p {
            Piece::Slot(s) => Some(s),
            Piece::Word(_) => None,
        })
    }
}

/// Surface patterns for one predicative symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationTemplate {
    pub predicate: String,
    /// Finite clause, used when the predicate heads the sentence.
    pub finite: Vec<TemplateToken>,
    /// Infinitive clause, used when the predicate fills an `inf` slot.
    pub infinitive: Option<Vec<TemplateToken>>,
}

impl RealizationTemplate {
    pub fn parse<S: AsRef<str>>(
        predicate: &str,
        finite: &[S],
        infinitive: Option<&[S]>,
    ) -> Result<Self, TemplateError> {
        let parse_all = |tokens: &[S]| {
            tokens.iter().map(|t| TemplateToken::parse(predicate, t.as_ref())).collect::<Result<Vec<_>, _>>()
        };
        let finite = parse_all(finite)?;
        let infinitive = infinitive.map(parse_all).transpose()?;
        let tmpl = Self { predicate: predicate.into(), finite, infinitive };
        for pattern in tmpl.patterns() {
            let mut seen = BTreeMap::new();
            for slot in pattern.iter().filter_map(TemplateToken::slot) {
                if seen.insert(slot.case_label.as_str(), ()).is_some() {
                    return Err(TemplateError::RepeatedCase {
                        predicate: predicate.into(),
                        case: slot.case_label.clone(),
                    });
                }
            }
        }
        Ok(tmpl)
    }

    fn patterns(&self) -> impl Iterator<Item = &Vec<TemplateToken>> {
        core::iter::once(&self.finite).chain(self.infinitive.as_ref())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemplateSet {
    templates: BTreeMap<String, RealizationTemplate>,
}

impl TemplateSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a template, replacing any previous one for the same predicate.
    pub fn insert(&mut self, template: RealizationTemplate) {
        self.templates.insert(template.predicate.clone(), template);
    }

    pub fn get(&self, predicate: &str) -> Option<&RealizationTemplate> {
        self.templates.get(predicate)
    }

    pub fn iter(&self) -> impl Iterator<Item = &RealizationTemplate> {
        self.templates.values()
    }

    pub fn len(&self) -> usize {
        self.templates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    /// Every slot names a case of its predicate and the finite pattern covers
    /// every case of the frame.
    pub fn validate_against(&self, lexicon: &Lexicon) -> Result<(), TemplateError> {
        for t in self.iter() {
            let frame = lexicon
                .case_frame(&t.predicate)
                .ok()
                .flatten()
                .ok_or_else(|| TemplateError::NotPredicative(t.predicate.clone()))?;
            for slot in t.patterns().flatten().filter_map(TemplateToken::slot) {
                if frame.slot(&slot.case_label).is_none() {
                    return Err(TemplateError::UnknownCase {
                        predicate: t.predicate.clone(),
                        case: slot.case_label.clone(),
                    });
                }
            }
            for case in frame.labels() {
                if !t.finite.iter().filter_map(TemplateToken::slot).any(|s| s.case_label == case) {
                    return Err(TemplateError::UncoveredCase {
                        predicate: t.predicate.clone(),
                        case: case.into(),
                    });
                }
            }
        }
        Ok(())
    }
}
