//! Benchmark protocol over a gold-annotated corpus.
//!
//! Each item is analysed and realized, then sorted into one of four
//! categories by mechanical proxies: arc-set equality stands for a correct
//! analysis and string equality for a correct generation.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::analyzer::{analyze, AnalysisError, AnalyzerConfig, Utterance};
use crate::lexicon::Lexicon;
use crate::network::SemanticNetwork;
use crate::realizer::{realize, Dictionary, TemplateSet};

pub type ArcTriple = (usize, String, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    /// Correct analysis, correct generation.
    I,
    /// Correct analysis, different generation.
    II,
    /// Partly correct analysis.
    III,
    /// No correct arc.
    IV,
}

impl Category {
    pub const ALL: [Category; 4] = [Category::I, Category::II, Category::III, Category::IV];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::I => "I",
            Category::II => "II",
            Category::III => "III",
            Category::IV => "IV",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("gold arc ({head}, {case}, {dep}) is outside a sequence of length {len}")]
    ArcOutOfRange { head: usize, case: String, dep: usize, len: usize },
    #[error("item {item}: {source}")]
    Analysis { item: usize, source: AnalysisError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldItem {
    pub sequence: Vec<String>,
    pub gold_arcs: BTreeSet<ArcTriple>,
    pub gold_sentence: Option<String>,
}

impl GoldItem {
    pub fn new(
        sequence: Vec<String>,
        gold_arcs: impl IntoIterator<Item = ArcTriple>,
        gold_sentence: Option<String>,
    ) -> Result<Self, BenchError> {
        let gold_arcs: BTreeSet<_> = gold_arcs.into_iter().collect();
        let len = sequence.len();
        if let Some((head, case, dep)) = gold_arcs.iter().find(|(h, _, d)| *h >= len || *d >= len) {
            return Err(BenchError::ArcOutOfRange { head: *head, case: case.clone(), dep: *dep, len });
        }
        Ok(Self { sequence, gold_arcs, gold_sentence })
    }
}

/// Category of one produced analysis against its gold annotation.
pub fn categorize(item: &GoldItem, produced: &SemanticNetwork, produced_sentence: Option<&str>) -> Category {
    categorize_arcs(item, &produced.arc_set(), produced_sentence)
}

fn categorize_arcs(item: &GoldItem, arcs: &BTreeSet<ArcTriple>, sentence: Option<&str>) -> Category {
    if *arcs == item.gold_arcs {
        match &item.gold_sentence {
            Some(gold) if sentence != Some(gold.as_str()) => Category::II,
            _ => Category::I,
        }
    } else if arcs.intersection(&item.gold_arcs).next().is_some() {
        Category::III
    } else {
        Category::IV
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ItemVerdict {
    pub category: Category,
    pub arcs: BTreeSet<ArcTriple>,
    pub sentence: Option<String>,
    /// Why realization failed, when it did.
    pub realize_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub counts: [usize; 4],
    pub verdicts: Vec<ItemVerdict>,
}

impl BenchReport {
    pub fn count(&self, category: Category) -> usize {
        self.counts[category.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Share of items in categories I and II.
    pub fn acceptability_rate(&self) -> f64 {
        match self.total() {
            0 => 0.0,
            n => (self.count(Category::I) + self.count(Category::II)) as f64 / n as f64,
        }
    }
}

pub fn run_benchmark(
    lexicon: &Lexicon,
    dictionary: &Dictionary,
    templates: &TemplateSet,
    corpus: &[GoldItem],
    config: &AnalyzerConfig,
) -> Result<BenchReport, BenchError> {
    if corpus.is_empty() {
        return Err(BenchError::EmptyCorpus);
    }
    let mut counts = [0; 4];
    let mut verdicts = Vec::with_capacity(corpus.len());
    for (i, item) in corpus.iter().enumerate() {
        let utterance = Utterance::new(item.sequence.clone());
        let network = analyze(lexicon, &utterance, config)
            .map_err(|source| BenchError::Analysis { item: i, source })?;
        let (sentence, realize_error) = match realize(&network, dictionary, templates) {
            Ok(s) => (Some(s.text), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let arcs = network.arc_set();
        let category = categorize_arcs(item, &arcs, sentence.as_deref());
        counts[category.index()] += 1;
        verdicts.push(ItemVerdict { category, arcs, sentence, realize_error });
    }
    Ok(BenchReport { counts, verdicts })
}
