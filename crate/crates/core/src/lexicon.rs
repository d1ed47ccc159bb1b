//! The differential-semantics lexicon.
//!
//! Every symbol belongs to exactly one taxeme, and every taxeme to exactly one
//! domain. A symbol's intrinsic features are the union of the three layers,
//! with `specific > taxeme > domain` on attribute collisions. A symbol with a
//! [`CaseFrame`] is predicative.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::feature::{Atom, FeatureSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("empty {kind} identifier")]
    EmptyIdentifier { kind: &'static str },
    #[error("duplicate {kind} `{id}`")]
    Duplicate { kind: &'static str, id: String },
    #[error("taxeme `{taxeme}` refers to unknown domain `{domain}`")]
    UnknownDomain { taxeme: String, domain: String },
    #[error("symbol `{symbol}` refers to unknown taxeme `{taxeme}`")]
    UnknownTaxeme { symbol: String, taxeme: String },
    #[error("symbol `{symbol}` declares case `{case}` twice")]
    DuplicateCase { symbol: String, case: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    pub name: String,
    pub features: FeatureSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Taxeme {
    pub name: String,
    pub domain: String,
    pub features: FeatureSet,
}

/// A case of a predicative symbol and the features it demands of its filler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSlot {
    pub case_label: String,
    pub selectional: FeatureSet,
}

impl CaseSlot {
    pub fn new(case_label: impl Into<String>, selectional: FeatureSet) -> Self {
        Self { case_label: case_label.into(), selectional }
    }
}

/// Case slots in document order. The order drives tie-breaking during analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseFrame {
    pub slots: Vec<CaseSlot>,
}

impl CaseFrame {
    pub fn new(slots: Vec<CaseSlot>) -> Self {
        Self { slots }
    }

    pub fn slot(&self, case_label: &str) -> Option<&CaseSlot> {
        self.slots.iter().find(|s| s.case_label == case_label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.slots.iter().map(|s| s.case_label.as_str())
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolEntry {
    pub id: String,
    pub taxeme: String,
    pub specific: FeatureSet,
    pub frame: Option<CaseFrame>,
    pub gloss: String,
    pub icon: Option<String>,
}

impl SymbolEntry {
    /// A non-predicative symbol with no specific features; the gloss defaults to the id.
    pub fn new(id: impl Into<String>, taxeme: impl Into<String>) -> Self {
        let id = id.into();
        Self {
            gloss: id.clone(),
            id,
            taxeme: taxeme.into(),
            specific: FeatureSet::new(),
            frame: None,
            icon: None,
        }
    }

    pub fn with_features(mut self, specific: FeatureSet) -> Self {
        self.specific = specific;
        self
    }

    pub fn with_frame(mut self, frame: CaseFrame) -> Self {
        self.frame = Some(frame);
        self
    }

    pub fn with_gloss(mut self, gloss: impl Into<String>) -> Self {
        self.gloss = gloss.into();
        self
    }

    pub fn with_icon(mut self, icon: impl Into<String>) -> Self {
        self.icon = Some(icon.into());
        self
    }

    pub fn is_predicative(&self) -> bool {
        self.frame.is_some()
    }
}

#[derive(Debug, Default)]
pub struct LexiconBuilder {
    domains: Vec<Domain>,
    taxemes: Vec<Taxeme>,
    symbols: Vec<SymbolEntry>,
}

impl LexiconBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn domain(&mut self, name: impl Into<String>, features: FeatureSet) -> &mut Self {
        self.domains.push(Domain { name: name.into(), features });
        self
    }

    pub fn taxeme(
        &mut self,
        name: impl Into<String>,
        domain: impl Into<String>,
        features: FeatureSet,
    ) -> &mut Self {
        self.taxemes.push(Taxeme { name: name.into(), domain: domain.into(), features });
        self
    }

    pub fn symbol(&mut self, entry: SymbolEntry) -> &mut Self {
        self.symbols.push(entry);
        self
    }

    /// Check identifiers and cross-references and freeze the lexicon.
    pub fn build(self) -> Result<Lexicon, LexiconError> {
        let domain_index = index_by(&self.domains, "domain", |d| &d.name)?;
        let taxeme_index = index_by(&self.taxemes, "taxeme", |t| &t.name)?;
        let symbol_index = index_by(&self.symbols, "symbol", |s| &s.id)?;

        for t in &self.taxemes {
            if !domain_index.contains_key(&t.domain) {
                return Err(LexiconError::UnknownDomain { taxeme: t.name.clone(), domain: t.domain.clone() });
            }
        }
        for s in &self.symbols {
            if !taxeme_index.contains_key(&s.taxeme) {
                return Err(LexiconError::UnknownTaxeme { symbol: s.id.clone(), taxeme: s.taxeme.clone() });
            }
            if let Some(frame) = &s.frame {
                let mut seen = BTreeMap::new();
                for slot in &frame.slots {
                    if slot.case_label.is_empty() {
                        return Err(LexiconError::EmptyIdentifier { kind: "case" });
                    }
                    if seen.insert(slot.case_label.as_str(), ()).is_some() {
                        return Err(LexiconError::DuplicateCase {
                            symbol: s.id.clone(),
                            case: slot.case_label.clone(),
                        });
                    }
                }
            }
        }

        Ok(Lexicon {
            domains: self.domains,
            taxemes: self.taxemes,
            symbols: self.symbols,
            domain_index,
            taxeme_index,
            symbol_index,
        })
    }
}

fn index_by<T>(
    items: &[T],
    kind: &'static str,
    key: impl Fn(&T) -> &String,
) -> Result<BTreeMap<String, usize>, LexiconError> {
    let mut index = BTreeMap::new();
    for (i, item) in items.iter().enumerate() {
        let id = key(item);
        if id.is_empty() {
            return Err(LexiconError::EmptyIdentifier { kind });
        }
        if index.insert(id.clone(), i).is_some() {
            return Err(LexiconError::Duplicate { kind, id: id.clone() });
        }
    }
    Ok(index)
}

/// A fully cross-resolved lexicon. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    domains: Vec<Domain>,
    taxemes: Vec<Taxeme>,
    symbols: Vec<SymbolEntry>,
    domain_index: BTreeMap<String, usize>,
    taxeme_index: BTreeMap<String, usize>,
    symbol_index: BTreeMap<String, usize>,
}

impl Lexicon {
    pub fn builder() -> LexiconBuilder {
        LexiconBuilder::new()
    }

    /// Domains in document order.
    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    pub fn taxemes(&self) -> &[Taxeme] {
        &self.taxemes
    }

    pub fn symbols(&self) -> &[SymbolEntry] {
        &self.symbols
    }

    pub fn domain(&self, name: &str) -> Option<&Domain> {
        self.domain_index.get(name).map(|&i| &self.domains[i])
    }

    pub fn taxeme(&self, name: &str) -> Option<&Taxeme> {
        self.taxeme_index.get(name).map(|&i| &self.taxemes[i])
    }

    pub fn symbol(&self, id: &str) -> Result<&SymbolEntry, LexiconError> {
        self.symbol_index
            .get(id)
            .map(|&i| &self.symbols[i])
            .ok_or_else(|| LexiconError::UnknownSymbol(id.into()))
    }

    pub fn contains(&self, id: &str) -> bool {
        self.symbol_index.contains_key(id)
    }

    /// The taxeme and domain a symbol belongs to.
    pub fn lineage(&self, id: &str) -> Result<(&Taxeme, &Domain), LexiconError> {
        let sym = self.symbol(id)?;
        // Both lookups resolve: `build` checked every reference.
        let taxeme = &self.taxemes[self.taxeme_index[&sym.taxeme]];
        let domain = &self.domains[self.domain_index[&taxeme.domain]];
        Ok((taxeme, domain))
    }

    /// Domain, taxeme and specific features merged; `specific > taxeme > domain`.
    pub fn intrinsic_features(&self, id: &str) -> Result<FeatureSet, LexiconError> {
        let sym = self.symbol(id)?;
        let (taxeme, domain) = self.lineage(id)?;
        Ok(domain.features.overlaid_with(&taxeme.features).overlaid_with(&sym.specific))
    }

    pub fn case_frame(&self, id: &str) -> Result<Option<&CaseFrame>, LexiconError> {
        Ok(self.symbol(id)?.frame.as_ref())
    }

    /// Symbols of a taxeme in document order.
    pub fn members<'a>(&'a self, taxeme: &'a str) -> impl Iterator<Item = &'a SymbolEntry> + 'a {
        self.symbols.iter().filter(move |s| s.taxeme == taxeme)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// A case slot with no selectional features; its compatibility is undefined.
    EmptySelectional { symbol: String, case: String },
    /// A predicative symbol whose frame has no slots.
    EmptyFrame { symbol: String },
    /// A lower layer's value replaced by a higher layer's different value.
    Override { owner: String, attribute: String, inherited: Atom, own: Atom },
    /// A taxeme with a single member does not group anything.
    SingletonTaxeme { taxeme: String, member: String },
}

impl Finding {
    pub fn severity(&self) -> Severity {
        match self {
            Finding::EmptySelectional { .. } | Finding::EmptyFrame { .. } => Severity::Error,
            Finding::Override { .. } | Finding::SingletonTaxeme { .. } => Severity::Warning,
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::EmptySelectional { symbol, case } => {
                write!(f, "symbol `{symbol}`: case `{case}` has no selectional features")
            }
            Finding::EmptyFrame { symbol } => {
                write!(f, "symbol `{symbol}`: case frame has no slots")
            }
            Finding::Override { owner, attribute, inherited, own } => {
                write!(f, "`{owner}`: attribute `{attribute}` overrides inherited {inherited} with {own}")
            }
            Finding::SingletonTaxeme { taxeme, member } => {
                write!(f, "taxeme `{taxeme}` has a single member (`{member}`)")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity() == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity() == Severity::Warning)
    }

    pub fn has_errors(&self) -> bool {
        self.errors().next().is_some()
    }
}

/// Report authoring problems that loading tolerates.
pub fn validate_lexicon(lexicon: &Lexicon) -> ValidationReport {
    let mut findings = Vec::new();

    for taxeme in lexicon.taxemes() {
        let domain = lexicon.domain(&taxeme.domain).expect("resolved at build");
        push_overrides(&mut findings, &taxeme.name, &domain.features, &taxeme.features);
    }

    for sym in lexicon.symbols() {
        let (taxeme, domain) = lexicon.lineage(&sym.id).expect("resolved at build");
        let inherited = domain.features.overlaid_with(&taxeme.features);
        push_overrides(&mut findings, &sym.id, &inherited, &sym.specific);

        if let Some(frame) = &sym.frame {
            if frame.is_empty() {
                findings.push(Finding::EmptyFrame { symbol: sym.id.clone() });
            }
            for slot in frame.slots.iter().filter(|s| s.selectional.is_empty()) {
                findings.push(Finding::EmptySelectional {
                    symbol: sym.id.clone(),
                    case: slot.case_label.clone(),
                });
            }
        }
    }

    for taxeme in lexicon.taxemes() {
        let mut members = lexicon.members(&taxeme.name);
        if let (Some(only), None) = (members.next(), members.next()) {
            findings.push(Finding::SingletonTaxeme { taxeme: taxeme.name.clone(), member: only.id.clone() });
        }
    }

    ValidationReport { findings }
}

fn push_overrides(out: &mut Vec<Finding>, owner: &str, lower: &FeatureSet, upper: &FeatureSet) {
    for (attr, own) in upper.iter() {
        match lower.get(attr) {
            Some(inherited) if inherited != own => out.push(Finding::Override {
                owner: owner.into(),
                attribute: attr.into(),
                inherited: inherited.clone(),
                own: own.clone(),
            }),
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fs(pairs: &[(&str, i64)]) -> FeatureSet {
        pairs.iter().map(|&(k, v)| (k, v)).collect()
    }

    fn small() -> Lexicon {
        let mut b = Lexicon::builder();
        b.domain("LIVING", fs(&[("living", 1)]))
            .taxeme("ANIMALS", "LIVING", fs(&[("living", 1), ("animate", 1)]))
            .symbol(SymbolEntry::new("cat", "ANIMALS").with_features(fs(&[("feline", 1)])))
            .symbol(SymbolEntry::new("oyster", "ANIMALS").with_features(fs(&[("animate", -1)])))
            .symbol(
                SymbolEntry::new("pet", "ANIMALS")
                    .with_frame(CaseFrame::new(vec![CaseSlot::new("agent", fs(&[("animate", 1)]))])),
            );
        b.build().unwrap()
    }

    #[test]
    fn intrinsic_precedence_specific_over_taxeme_over_domain() {
        let lex = small();
        assert_eq!(lex.intrinsic_features("oyster").unwrap(), fs(&[("living", 1), ("animate", -1)]));
    }

    #[test]
    fn intrinsic_plain_union_when_disjoint() {
        let lex = small();
        assert_eq!(
            lex.intrinsic_features("cat").unwrap(),
            fs(&[("living", 1), ("animate", 1), ("feline", 1)])
        );
    }

    #[test]
    fn unknown_symbol() {
        let lex = small();
        assert_eq!(lex.intrinsic_features("dog"), Err(LexiconError::UnknownSymbol("dog".into())));
        assert!(lex.case_frame("dog").is_err());
    }

    #[test]
    fn case_frame_presence() {
        let lex = small();
        assert!(lex.case_frame("cat").unwrap().is_none());
        let frame = lex.case_frame("pet").unwrap().unwrap();
        assert_eq!(frame.labels().collect::<Vec<_>>(), ["agent"]);
    }

    #[test]
    fn unresolved_taxeme() {
        let mut b = Lexicon::builder();
        b.symbol(SymbolEntry::new("x", "XYZ"));
        assert_eq!(b.build(), Err(LexiconError::UnknownTaxeme { symbol: "x".into(), taxeme: "XYZ".into() }));
    }

    #[test]
    fn unresolved_domain() {
        let mut b = Lexicon::builder();
        b.taxeme("T", "NOPE", FeatureSet::new());
        assert!(matches!(b.build(), Err(LexiconError::UnknownDomain { .. })));
    }

    #[test]
    fn duplicates_rejected() {
        let mut b = Lexicon::builder();
        b.domain("D", FeatureSet::new()).domain("D", FeatureSet::new());
        assert_eq!(b.build(), Err(LexiconError::Duplicate { kind: "domain", id: "D".into() }));

        let mut b = Lexicon::builder();
        b.domain("D", FeatureSet::new()).taxeme("T", "D", FeatureSet::new()).symbol(
            SymbolEntry::new("p", "T").with_frame(CaseFrame::new(vec![
                CaseSlot::new("agent", fs(&[("a", 1)])),
                CaseSlot::new("agent", fs(&[("b", 1)])),
            ])),
        );
        assert!(matches!(b.build(), Err(LexiconError::DuplicateCase { .. })));
    }

    #[test]
    fn empty_lexicon_is_valid() {
        let lex = Lexicon::builder().build().unwrap();
        assert!(lex.symbols().is_empty());
        assert!(validate_lexicon(&lex).findings.is_empty());
    }

    #[test]
    fn validation_findings() {
        let mut b = Lexicon::builder();
        b.domain("D", fs(&[("x", 1)]))
            .taxeme("T", "D", fs(&[("x", -1)]))
            .taxeme("U", "D", FeatureSet::new())
            .symbol(SymbolEntry::new("a", "T"))
            .symbol(SymbolEntry::new("b", "T").with_frame(CaseFrame::default()))
            .symbol(
                SymbolEntry::new("c", "U")
                    .with_frame(CaseFrame::new(vec![CaseSlot::new("patient", FeatureSet::new())])),
            );
        let report = validate_lexicon(&b.build().unwrap());

        let errors: Vec<_> = report.errors().cloned().collect();
        assert_eq!(
            errors,
            vec![
                Finding::EmptyFrame { symbol: "b".into() },
                Finding::EmptySelectional { symbol: "c".into(), case: "patient".into() },
            ]
        );
        let warnings: Vec<_> = report.warnings().cloned().collect();
        assert_eq!(
            warnings,
            vec![
                Finding::Override {
                    owner: "T".into(),
                    attribute: "x".into(),
                    inherited: Atom::Int(1),
                    own: Atom::Int(-1)
                },
                Finding::SingletonTaxeme { taxeme: "U".into(), member: "c".into() },
            ]
        );
    }

    #[test]
    fn same_value_redeclaration_is_not_an_override() {
        let lex = small();
        // ANIMALS repeats living:+1 from LIVING; oyster overrides animate.
        let report = validate_lexicon(&lex);
        let owners: Vec<_> = report
            .findings
            .iter()
            .filter_map(|f| match f {
                Finding::Override { owner, .. } => Some(owner.as_str()),
                _ => None,
            })
            .collect();
        assert_eq!(owners, ["oyster"]);
    }
}
