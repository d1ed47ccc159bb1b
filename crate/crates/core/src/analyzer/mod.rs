//! Case-filling analysis.
//!
//! The value of a symbol as the filler of a predicate's case is the
//! compatibility of its intrinsic features with the case's selectional
//! features, multiplied by `locality^distance`. Values at or below the
//! acceptability threshold are rejected. Each predicate then independently
//! receives the best partial injective assignment of the surviving
//! candidates to its cases.

mod affectation;
mod matching;

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::feature::FeatureSet;
use crate::lexicon::{Lexicon, LexiconError};
use crate::network::{Arc, NetworkError, SemanticNetwork, Vertex};
use crate::num::powu;

pub use affectation::{
    best_affectation, best_affectation_matching, enumerate_affectations, Affectation, AffectationProblem,
    Binding,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("selectional feature set is empty")]
    EmptySelectional,
    #[error("case `{case}` of `{symbol}` has an empty selectional feature set")]
    EmptySelectionalCase { symbol: String, case: String },
    #[error("utterance is empty")]
    EmptyUtterance,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{symbol}` at position {pos} is not predicative")]
    NotPredicative { pos: usize, symbol: String },
    #[error("`{symbol}` has no case `{case}`")]
    UnknownCase { symbol: String, case: String },
    #[error("position {pos} cannot fill a case of itself")]
    SelfFilling { pos: usize },
    #[error("position {pos} is outside an utterance of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("candidate for position {found} given to predicate at {expected}")]
    ForeignCandidate { expected: usize, found: usize },
    #[error("case `{case}` has two candidates at position {filler_pos}")]
    DuplicateCandidate { case: String, filler_pos: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

impl From<LexiconError> for AnalysisError {
    fn from(e: LexiconError) -> Self {
        match e {
            LexiconError::UnknownSymbol(id) => AnalysisError::UnknownSymbol(id),
            // Only symbol lookups happen during analysis.
            other => unreachable!("lexicon lookup failed with {other:?}"),
        }
    }
}

/// How the locality constant is raised for a filler `d` positions away.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum LocalityExponent {
    /// `locality^d`: adjacent symbols are damped once.
    #[default]
    Distance,
    /// `locality^(d-1)`: adjacent symbols are not damped.
    DistanceMinusOne,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzerConfig {
    /// Acceptability threshold: a damped value must be strictly greater to survive.
    pub threshold: f64,
    /// Locality constant in `(0, 1]`.
    pub locality: f64,
    pub exponent: LocalityExponent,
}

impl Default for AnalyzerConfig {
    fn default() -> Self {
        Self {
            threshold: Self::DEFAULT_THRESHOLD,
            locality: Self::DEFAULT_LOCALITY,
            exponent: LocalityExponent::Distance,
        }
    }
}

impl AnalyzerConfig {
    pub const DEFAULT_THRESHOLD: f64 = 0.25;
    pub const DEFAULT_LOCALITY: f64 = 0.8;

    pub fn new(threshold: f64, locality: f64) -> Result<Self, AnalysisError> {
        let cfg = Self { threshold, locality, exponent: LocalityExponent::Distance };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_exponent(mut self, exponent: LocalityExponent) -> Self {
        self.exponent = exponent;
        self
    }

    pub fn validate(&self) -> Result<(), AnalysisError> {
        if !self.threshold.is_finite() {
            return Err(AnalysisError::InvalidConfig("threshold must be finite"));
        }
        if !(self.locality > 0.0 && self.locality <= 1.0) {
            return Err(AnalysisError::InvalidConfig("locality must lie in (0, 1]"));
        }
        Ok(())
    }

    /// `raw * locality^e` with `e` chosen by [`LocalityExponent`].
    pub fn damp(&self, raw: f64, distance: usize) -> f64 {
        let exp = match self.exponent {
            LocalityExponent::Distance => distance,
            LocalityExponent::DistanceMinusOne => distance.saturating_sub(1),
        };
        if self.locality == 1.0 {
            return raw;
        }
        raw * powu(self.locality, exp as u32)
    }

    pub fn accepts(&self, damped: f64) -> bool {
        damped > self.threshold
    }
}

/// Fitness of `intrinsic` to `selectional`, in `[-1, 1]`.
///
/// Each selectional attribute scores +1 when the intrinsic set has the same
/// value, -1 when it has another value and 0 when it lacks the attribute. The
/// sum is divided by the size of the selectional set, so the relation is not
/// symmetric.
pub fn compatibility(selectional: &FeatureSet, intrinsic: &FeatureSet) -> Result<f64, AnalysisError> {
    if selectional.is_empty() {
        return Err(AnalysisError::EmptySelectional);
    }
    let sum: i64 = selectional
        .iter()
        .map(|(attr, value)| match intrinsic.get(attr) {
            Some(v) if v == value => 1,
            Some(_) => -1,
            None => 0,
        })
        .sum();
    Ok(sum as f64 / selectional.len() as f64)
}

/// A sequence of symbol occurrences. Positions are the indices `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Utterance {
    items: Vec<String>,
}

impl Utterance {
    pub fn new(items: Vec<String>) -> Self {
        Self { items }
    }

    pub fn from_ids<S: AsRef<str>>(ids: &[S]) -> Self {
        Self { items: ids.iter().map(|s| String::from(s.as_ref())).collect() }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, pos: usize) -> Option<&str> {
        self.items.get(pos).map(String::as_str)
    }

    pub fn symbols(&self) -> &[String] {
        &self.items
    }

    fn symbol_at(&self, pos: usize) -> Result<&str, AnalysisError> {
        self.get(pos).ok_or(AnalysisError::PositionOutOfRange { pos, len: self.len() })
    }
}

/// One scored attempt to fill a case of a predicate.
#[derive(Debug, Clone, PartialEq)]
pub struct UnificationCandidate {
    pub predicate_pos: usize,
    pub case_label: String,
    pub filler_pos: usize,
    pub raw_value: f64,
    pub distance: usize,
    pub damped_value: f64,
}

/// Score `filler_pos` as filler of `case_label` of the predicate at `predicate_pos`,
/// whether or not it clears the threshold.
pub fn score_unification(
    lexicon: &Lexicon,
    utterance: &Utterance,
    config: &AnalyzerConfig,
    predicate_pos: usize,
    case_label: &str,
    filler_pos: usize,
) -> Result<UnificationCandidate, AnalysisError> {
    let pred_id = utterance.symbol_at(predicate_pos)?;
    let filler_id = utterance.symbol_at(filler_pos)?;
    if predicate_pos == filler_pos {
        return Err(AnalysisError::SelfFilling { pos: filler_pos });
    }
    let frame = lexicon
        .case_frame(pred_id)?
        .ok_or_else(|| AnalysisError::NotPredicative { pos: predicate_pos, symbol: pred_id.into() })?;
    let slot = frame
        .slot(case_label)
        .ok_or_else(|| AnalysisError::UnknownCase { symbol: pred_id.into(), case: case_label.into() })?;
    let intrinsic = lexicon.intrinsic_features(filler_id)?;
    candidate_for(config, predicate_pos, pred_id, slot, filler_pos, &intrinsic)
}

fn candidate_for(
    config: &AnalyzerConfig,
    predicate_pos: usize,
    pred_id: &str,
    slot: &crate::lexicon::CaseSlot,
    filler_pos: usize,
    intrinsic: &FeatureSet,
) -> Result<UnificationCandidate, AnalysisError> {
    let raw_value = compatibility(&slot.selectional, intrinsic).map_err(|_| {
        AnalysisError::EmptySelectionalCase { symbol: pred_id.into(), case: slot.case_label.clone() }
    })?;
    let distance = predicate_pos.abs_diff(filler_pos);
    Ok(UnificationCandidate {
        predicate_pos,
        case_label: slot.case_label.clone(),
        filler_pos,
        raw_value,
        distance,
        damped_value: config.damp(raw_value, distance),
    })
}

/// The surviving candidate, or `None` when the damped value does not exceed the threshold.
pub fn unification_value(
    lexicon: &Lexicon,
    utterance: &Utterance,
    config: &AnalyzerConfig,
    predicate_pos: usize,
    case_label: &str,
    filler_pos: usize,
) -> Result<Option<UnificationCandidate>, AnalysisError> {
    let c = score_unification(lexicon, utterance, config, predicate_pos, case_label, filler_pos)?;
    Ok(config.accepts(c.damped_value).then_some(c))
}

/// The network together with every candidate that was scored to build it.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub network: SemanticNetwork,
    pub candidates: Vec<UnificationCandidate>,
    pub config: AnalyzerConfig,
}

impl Analysis {
    /// Candidates whose damped value did not exceed the threshold.
    pub fn rejected(&self) -> impl Iterator<Item = &UnificationCandidate> {
        self.candidates.iter().filter(|c| !self.config.accepts(c.damped_value))
    }
}

pub fn analyze(
    lexicon: &Lexicon,
    utterance: &Utterance,
    config: &AnalyzerConfig,
) -> Result<SemanticNetwork, AnalysisError> {
    analyze_detailed(lexicon, utterance, config).map(|a| a.network)
}

/// Analyse every predicative symbol independently and assemble the network.
pub fn analyze_detailed(
    lexicon: &Lexicon,
    utterance: &Utterance,
    config: &AnalyzerConfig,
) -> Result<Analysis, AnalysisError> {
    config.validate()?;
    if utterance.is_empty() {
        return Err(AnalysisError::EmptyUtterance);
    }

    let vertices = utterance
        .symbols()
        .iter()
        .enumerate()
        .map(|(pos, id)| Ok(Vertex { pos, symbol: id.clone(), intrinsic: lexicon.intrinsic_features(id)? }))
        .collect::<Result<Vec<_>, AnalysisError>>()?;

    let mut candidates = Vec::new();
    let mut arcs = Vec::new();
    for head in &vertices {
        let Some(frame) = lexicon.case_frame(&head.symbol)? else {
            continue;
        };
        let start = candidates.len();
        for slot in &frame.slots {
            for filler in vertices.iter().filter(|v| v.pos != head.pos) {
                candidates.push(candidate_for(
                    config,
                    head.pos,
                    &head.symbol,
                    slot,
                    filler.pos,
                    &filler.intrinsic,
                )?);
            }
        }
        let problem = AffectationProblem::new(
            head.pos,
            frame.labels().map(String::from).collect(),
            candidates[start..].iter().cloned(),
            config,
        )?;
        let best = best_affectation_matching(&problem);
        arcs.extend(best.bindings.into_iter().map(|b| Arc {
            head: head.pos,
            case_label: b.case_label,
            dep: b.filler_pos,
            value: b.damped_value,
        }));
    }

    Ok(Analysis { network: SemanticNetwork::new(vertices, arcs)?, candidates, config: *config })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{CaseFrame, CaseSlot, SymbolEntry};
    use alloc::vec;

    fn fs(pairs: &[(&str, i64)]) -> FeatureSet {
        pairs.iter().map(|&(k, v)| (k, v)).collect()
    }

    #[test]
    fn compatibility_examples() {
        let c = |s: &[(&str, i64)], i: &[(&str, i64)]| compatibility(&fs(s), &fs(i)).unwrap();
        assert_eq!(c(&[("animate", 1)], &[("animate", 1)]), 1.0);
        assert_eq!(c(&[("animate", 1), ("edible", 1)], &[("animate", 1), ("edible", -1)]), 0.0);
        assert_eq!(c(&[("animate", 1), ("human", 1)], &[("animate", 1)]), 0.5);
    }

    #[test]
    fn compatibility_is_asymmetric() {
        let a = fs(&[("animate", 1), ("human", 1)]);
        let b = fs(&[("animate", 1)]);
        assert_eq!(compatibility(&a, &b).unwrap(), 0.5);
        assert_eq!(compatibility(&b, &a).unwrap(), 1.0);
    }

    #[test]
    fn compatibility_rejects_empty_selectional() {
        assert_eq!(compatibility(&FeatureSet::new(), &fs(&[("a", 1)])), Err(AnalysisError::EmptySelectional));
    }

    #[test]
    fn damping() {
        let cfg = AnalyzerConfig::new(0.25, 1.0).unwrap();
        assert_eq!(cfg.damp(0.5, 7), 0.5);
        let cfg = AnalyzerConfig::default();
        assert!((cfg.damp(0.5, 2) - 0.32).abs() < 1e-12);
        let cfg = cfg.with_exponent(LocalityExponent::DistanceMinusOne);
        assert_eq!(cfg.damp(0.5, 1), 0.5);
        assert!((cfg.damp(0.5, 2) - 0.4).abs() < 1e-12);
    }

    #[test]
    fn config_bounds() {
        assert!(AnalyzerConfig::new(0.25, 0.0).is_err());
        assert!(AnalyzerConfig::new(0.25, 1.01).is_err());
        assert!(AnalyzerConfig::new(f64::NAN, 0.5).is_err());
        assert!(AnalyzerConfig::new(-0.5, 1.0).is_ok());
    }

    fn toy() -> Lexicon {
        let mut b = Lexicon::builder();
        b.domain("D", FeatureSet::new())
            .taxeme("T", "D", FeatureSet::new())
            .symbol(SymbolEntry::new("half", "T").with_features(fs(&[("a", 1)])))
            .symbol(SymbolEntry::new("low", "T").with_features(fs(&[("a", 1), ("b", -1), ("c", 1)])))
            .symbol(
                SymbolEntry::new("pred", "T")
                    .with_frame(CaseFrame::new(vec![CaseSlot::new("agent", fs(&[("a", 1), ("c", 1)]))])),
            );
        b.build().unwrap()
    }

    #[test]
    fn unification_value_damps_and_filters() {
        let lex = toy();
        let utt = Utterance::from_ids(&["pred", "x", "half"]);
        // "x" is not in the lexicon but is never looked at.
        let cfg = AnalyzerConfig::new(0.25, 0.8).unwrap();
        let c = unification_value(&lex, &utt, &cfg, 0, "agent", 2).unwrap().unwrap();
        assert_eq!(c.raw_value, 0.5);
        assert_eq!(c.distance, 2);
        assert!((c.damped_value - 0.32).abs() < 1e-12);

        let cfg = AnalyzerConfig::new(0.5, 1.0).unwrap();
        assert_eq!(unification_value(&lex, &utt, &cfg, 0, "agent", 2).unwrap(), None);
    }

    #[test]
    fn unification_value_errors() {
        let lex = toy();
        let utt = Utterance::from_ids(&["half", "pred", "low"]);
        let cfg = AnalyzerConfig::default();
        assert!(matches!(
            unification_value(&lex, &utt, &cfg, 0, "agent", 1),
            Err(AnalysisError::NotPredicative { pos: 0, .. })
        ));
        assert!(matches!(
            unification_value(&lex, &utt, &cfg, 1, "patient", 0),
            Err(AnalysisError::UnknownCase { .. })
        ));
        assert_eq!(
            unification_value(&lex, &utt, &cfg, 1, "agent", 1),
            Err(AnalysisError::SelfFilling { pos: 1 })
        );
        assert!(matches!(
            unification_value(&lex, &utt, &cfg, 1, "agent", 9),
            Err(AnalysisError::PositionOutOfRange { pos: 9, len: 3 })
        ));
    }

    #[test]
    fn analyze_picks_best_filler_and_reports_rejections() {
        let lex = toy();
        let utt = Utterance::from_ids(&["half", "pred", "low"]);
        let analysis = analyze_detailed(&lex, &utt, &AnalyzerConfig::new(0.25, 1.0).unwrap()).unwrap();
        // low: (a match + c match)/2 = 1.0; half: 0.5
        let arcs = analysis.network.arcs();
        assert_eq!(arcs.len(), 1);
        assert_eq!((arcs[0].head, arcs[0].case_label.as_str(), arcs[0].dep), (1, "agent", 2));
        assert_eq!(analysis.candidates.len(), 2);
        assert_eq!(analysis.rejected().count(), 0);

        let strict = analyze_detailed(&lex, &utt, &AnalyzerConfig::new(1.0, 1.0).unwrap()).unwrap();
        assert!(strict.network.arcs().is_empty());
        assert_eq!(strict.rejected().count(), 2);
    }

    #[test]
    fn analyze_errors() {
        let lex = toy();
        let cfg = AnalyzerConfig::default();
        assert_eq!(analyze(&lex, &Utterance::new(vec![]), &cfg), Err(AnalysisError::EmptyUtterance));
        assert_eq!(
            analyze(&lex, &Utterance::from_ids(&["pred", "nope"]), &cfg),
            Err(AnalysisError::UnknownSymbol("nope".into()))
        );
    }
}
