//! JSON lexicon documents.
//!
//! ```json
//! {
//!   "domains": { "LIVING": { "features": { "living": 1 } } },
//!   "taxemes": { "PERSONS": { "domain": "LIVING", "features": { "human": 1 } } },
//!   "symbols": {
//!     "i": { "taxeme": "PERSONS", "features": { "speaker": 1 }, "gloss": "I" },
//!     "eat": {
//!       "taxeme": "...", "gloss": "eat", "icon": "icons/eat.svg",
//!       "cases": { "agent": { "features": { "animate": 1 } } }
//!     }
//!   }
//! }
//! ```
//!
//! Feature values are integers or strings. Object order is kept, so case
//! slots keep the order in which they are written.

use pictosem_core::{CaseFrame, CaseSlot, Lexicon, SymbolEntry};
use serde::{Deserialize, Serialize};

use crate::formats::{feature_set, features_doc, Features, LoadError, Ordered};

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LexiconDoc {
    #[serde(default)]
    domains: Ordered<DomainDoc>,
    #[serde(default)]
    taxemes: Ordered<TaxemeDoc>,
    #[serde(default)]
    symbols: Ordered<SymbolDoc>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct DomainDoc {
    #[serde(default)]
    features: Features,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct TaxemeDoc {
    domain: String,
    #[serde(default)]
    features: Features,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SymbolDoc {
    taxeme: String,
    #[serde(default)]
    features: Features,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gloss: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    icon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cases: Option<Ordered<CaseDoc>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CaseDoc {
    #[serde(default)]
    features: Features,
}

/// Parse and cross-resolve a lexicon document. A blank document is an empty lexicon.
pub fn load_lexicon(text: &str) -> Result<Lexicon, LoadError> {
    let doc: LexiconDoc =
        if text.trim().is_empty() { LexiconDoc::default() } else { serde_json::from_str(text)? };
    let mut b = Lexicon::builder();
    for (name, d) in doc.domains.0 {
        b.domain(name, feature_set(d.features));
    }
    for (name, t) in doc.taxemes.0 {
        b.taxeme(name, t.domain, feature_set(t.features));
    }
    for (id, s) in doc.symbols.0 {
        let mut entry = SymbolEntry::new(id, s.taxeme).with_features(feature_set(s.features));
        if let Some(gloss) = s.gloss {
            entry = entry.with_gloss(gloss);
        }
        if let Some(icon) = s.icon {
            entry = entry.with_icon(icon);
        }
        if let Some(cases) = s.cases {
            let slots = cases.0.into_iter().map(|(label, c)| CaseSlot::new(label, feature_set(c.features)));
            entry = entry.with_frame(CaseFrame::new(slots.collect()));
        }
        b.symbol(entry);
    }
    Ok(b.build()?)
}

/// Write a lexicon back out; [`load_lexicon`] reads the result to an equal lexicon.
pub fn serialize_lexicon(lexicon: &Lexicon) -> String {
    let doc = LexiconDoc {
        domains: Ordered(
            lexicon
                .domains()
                .iter()
                .map(|d| (d.name.clone(), DomainDoc { features: features_doc(&d.features) }))
                .collect(),
        ),
        taxemes: Ordered(
            lexicon
                .taxemes()
                .iter()
                .map(|t| {
                    let doc = TaxemeDoc { domain: t.domain.clone(), features: features_doc(&t.features) };
                    (t.name.clone(), doc)
                })
                .collect(),
        ),
        symbols: Ordered(
            lexicon
                .symbols()
                .iter()
                .map(|s| {
                    let cases = s.frame.as_ref().map(|f| {
                        Ordered(
                            f.slots
                                .iter()
                                .map(|c| {
                                    (c.case_label.clone(), CaseDoc { features: features_doc(&c.selectional) })
                                })
                                .collect(),
                        )
                    });
                    let doc = SymbolDoc {
                        taxeme: s.taxeme.clone(),
                        features: features_doc(&s.specific),
                        gloss: Some(s.gloss.clone()),
                        icon: s.icon.clone(),
                        cases,
                    };
                    (s.id.clone(), doc)
                })
                .collect(),
        ),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("lexicon documents always serialize");
    text.push('\n');
    text
}
