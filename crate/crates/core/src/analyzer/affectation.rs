//! Assignments of candidate fillers to the cases of one predicate.
//!
//! Two searches share one ranking. [`enumerate_affectations`] lists every
//! partial injective map and [`best_affectation`] takes the maximum. It is
//! exponential and serves as the reference. [`best_affectation_matching`]
//! walks assignments in decreasing value with a min-cost assignment solver
//! and stops as soon as the values leave the tie band.
//!
//! Ranking: the best affectations are those whose value is within 1e-9 of the
//! maximum. Among them prefer, in turn:
//! 1. more bound cases;
//! 2. smaller total distance between predicate and fillers;
//! 3. lexicographically smaller vector of filler positions taken in case-slot
//!    order, an unbound case counting as later than any position.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::matching::min_cost_assignment;
use super::{AnalysisError, AnalyzerConfig, UnificationCandidate};
use crate::num::round_to_i64;

/// Values this close to the maximum count as tied with it.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Resolution of the integer weights handed to the assignment solver.
const WEIGHT_UNIT: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Binding {
    pub case_label: String,
    pub filler_pos: usize,
    pub damped_value: f64,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Affectation {
    pub predicate_pos: usize,
    /// Bound cases in case-slot order.
    pub bindings: Vec<Binding>,
    /// Sum of the damped values of the bindings.
    pub value: f64,
}

impl Affectation {
    pub fn empty(predicate_pos: usize) -> Self {
        Self { predicate_pos, bindings: Vec::new(), value: 0.0 }
    }

    pub fn filler(&self, case_label: &str) -> Option<usize> {
        self.bindings.iter().find(|b| b.case_label == case_label).map(|b| b.filler_pos)
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

/// The cases of one predicate and the candidates that survived the threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct AffectationProblem {
    predicate_pos: usize,
    cases: Vec<String>,
    /// `by_case[k]` holds the surviving candidates for `cases[k]`, by filler position.
    by_case: Vec<Vec<UnificationCandidate>>,
}

impl AffectationProblem {
    /// Keep the candidates whose damped value exceeds `config.threshold`.
    ///
    /// `cases` is the frame's case order. Every candidate must belong to
    /// `predicate_pos`, name one of `cases`, and be the only candidate for its
    /// (case, filler) pair.
    pub fn new(
        predicate_pos: usize,
        cases: Vec<String>,
        candidates: impl IntoIterator<Item = UnificationCandidate>,
        config: &AnalyzerConfig,
    ) -> Result<Self, AnalysisError> {
        let mut by_case: Vec<Vec<UnificationCandidate>> = vec![Vec::new(); cases.len()];
        let mut seen = BTreeSet::new();
        for c in candidates {
            if c.predicate_pos != predicate_pos {
                return Err(AnalysisError::ForeignCandidate {
                    expected: predicate_pos,
                    found: c.predicate_pos,
                });
            }
            if c.filler_pos == predicate_pos {
                return Err(AnalysisError::SelfFilling { pos: c.filler_pos });
            }
            let Some(k) = cases.iter().position(|l| *l == c.case_label) else {
                return Err(AnalysisError::UnknownCase { symbol: String::new(), case: c.case_label });
            };
            if !seen.insert((k, c.filler_pos)) {
                return Err(AnalysisError::DuplicateCandidate {
                    case: c.case_label,
                    filler_pos: c.filler_pos,
                });
            }
            if config.accepts(c.damped_value) {
                by_case[k].push(c);
            }
        }
        for list in &mut by_case {
            list.sort_by_key(|c| c.filler_pos);
        }
        Ok(Self { predicate_pos, cases, by_case })
    }

    pub fn predicate_pos(&self) -> usize {
        self.predicate_pos
    }

    pub fn cases(&self) -> &[String] {
        &self.cases
    }

    /// Surviving candidates in case order, then filler order.
    pub fn candidates(&self) -> impl Iterator<Item = &UnificationCandidate> {
        self.by_case.iter().flatten()
    }

    fn affectation(&self, chosen: &[Option<&UnificationCandidate>]) -> Affectation {
        let bindings: Vec<Binding> = chosen
            .iter()
            .flatten()
            .map(|c| Binding {
                case_label: c.case_label.clone(),
                filler_pos: c.filler_pos,
                damped_value: c.damped_value,
                distance: c.distance,
            })
            .collect();
        let value = bindings.iter().map(|b| b.damped_value).sum();
        Affectation { predicate_pos: self.predicate_pos, bindings, value }
    }

    fn tie_rank(&self, a: &Affectation) -> TieRank {
        let mut slots = vec![None; self.cases.len()];
        for b in &a.bindings {
            let k = self.cases.iter().position(|l| *l == b.case_label).expect("case of this problem");
            slots[k] = Some(b.filler_pos);
        }
        TieRank { bound: a.bindings.len(), distance: a.bindings.iter().map(|b| b.distance).sum(), slots }
    }

    /// The best of `pool` under the ranking. `pool` must hold every
    /// affectation within the tie band of the overall maximum.
    fn pick(&self, pool: Vec<Affectation>) -> Affectation {
        let top = pool.iter().map(|a| a.value).fold(f64::NEG_INFINITY, f64::max);
        pool.into_iter()
            .filter(|a| top - a.value <= TIE_TOLERANCE)
            .map(|a| (self.tie_rank(&a), a))
            .max_by(|x, y| x.0.cmp(&y.0))
            .map(|(_, a)| a)
            .unwrap_or_else(|| Affectation::empty(self.predicate_pos))
    }
}

/// Order among affectations tied on value; greater is better.
#[derive(Debug, Clone, PartialEq, Eq)]
struct TieRank {
    bound: usize,
    distance: usize,
    slots: Vec<Option<usize>>,
}

impl Ord for TieRank {
    fn cmp(&self, other: &Self) -> Ordering {
        let later = |p: &Option<usize>| p.unwrap_or(usize::MAX);
        self.bound.cmp(&other.bound).then(other.distance.cmp(&self.distance)).then_with(|| {
            let mine = self.slots.iter().map(later);
            let theirs = other.slots.iter().map(later);
            theirs.cmp(mine)
        })
    }
}

impl PartialOrd for TieRank {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every partial injective map from cases to surviving candidates, the empty
/// one included.
pub fn enumerate_affectations(problem: &AffectationProblem) -> Vec<Affectation> {
    fn walk<'a>(
        problem: &'a AffectationProblem,
        k: usize,
        used: &mut Vec<usize>,
        chosen: &mut Vec<Option<&'a UnificationCandidate>>,
        out: &mut Vec<Affectation>,
    ) {
        if k == problem.cases.len() {
            out.push(problem.affectation(chosen));
            return;
        }
        chosen.push(None);
        walk(problem, k + 1, used, chosen, out);
        chosen.pop();
        for c in &problem.by_case[k] {
            if used.contains(&c.filler_pos) {
                continue;
            }
            used.push(c.filler_pos);
            chosen.push(Some(c));
            walk(problem, k + 1, used, chosen, out);
            chosen.pop();
            used.pop();
        }
    }

    let mut out = Vec::new();
    walk(problem, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Best affectation by exhaustive search.
pub fn best_affectation(problem: &AffectationProblem) -> Affectation {
    problem.pick(enumerate_affectations(problem))
}

/// Best affectation through ranked assignments.
///
/// Assignments of cases to fillers (or to "unbound") are produced in
/// decreasing value by partitioning the solution space around each optimum
/// and re-solving the parts with the assignment solver. Enumeration stops
/// once values fall below the tie band, so only near-optimal affectations are
/// ever built.
pub fn best_affectation_matching(problem: &AffectationProblem) -> Affectation {
    if problem.by_case.iter().all(Vec::is_empty) {
        return Affectation::empty(problem.predicate_pos);
    }
    match near_optimal(problem) {
        Some(pool) => problem.pick(pool),
        // Only reachable with values far outside [-1, 1].
        None => best_affectation(problem),
    }
}

/// Per-slot choice: a filler column, or `None` for unbound.
type Choice = Option<usize>;

#[derive(Clone)]
struct Constraints {
    fixed: Vec<Option<Choice>>,
    banned: Vec<Vec<Choice>>,
}

impl Constraints {
    fn allows(&self, slot: usize, choice: Choice) -> bool {
        self.fixed[slot].is_none_or(|f| f == choice) && !self.banned[slot].contains(&choice)
    }
}

struct Ranked {
    weight: i128,
    seq: usize,
    choices: Vec<Choice>,
    constraints: Constraints,
}

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ranked {}

impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then(other.seq.cmp(&self.seq))
    }
}

impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Assigner<'a> {
    fillers: Vec<usize>,
    /// `edge[slot][col]`: weight and candidate of binding `slot` to `fillers[col]`.
    edge: Vec<Vec<Option<(i128, &'a UnificationCandidate)>>>,
    forbidden: i128,
}

impl<'a> Assigner<'a> {
    fn new(problem: &'a AffectationProblem) -> Option<Self> {
        let fillers: Vec<usize> =
            problem.candidates().map(|c| c.filler_pos).collect::<BTreeSet<_>>().into_iter().collect();
        let mut edge = vec![vec![None; fillers.len()]; problem.cases.len()];
        let mut magnitude = 0i128;
        for (slot, list) in problem.by_case.iter().enumerate() {
            for c in list {
                let scaled = c.damped_value / WEIGHT_UNIT;
                if !scaled.is_finite() || scaled.abs() >= 1e18 {
                    return None;
                }
                let w = i128::from(round_to_i64(scaled));
                magnitude += w.abs();
                let col = fillers.binary_search(&c.filler_pos).ok()?;
                edge[slot][col] = Some((w, c));
            }
        }
        Some(Self { fillers, edge, forbidden: 2 * magnitude + 1 })
    }

    /// Best assignment under `constraints`, or `None` when none satisfies them.
    fn solve(&self, constraints: &Constraints) -> Option<(i128, Vec<Choice>)> {
        let k = self.edge.len();
        let n = self.fillers.len();
        let cost: Vec<Vec<i128>> = (0..k)
            .map(|slot| {
                (0..n + k)
                    .map(|col| {
                        let (choice, w) = match self.edge[slot].get(col) {
                            Some(e) => (Some(col), e.map(|(w, _)| w)),
                            None => (None, Some(0)),
                        };
                        match w {
                            Some(w) if constraints.allows(slot, choice) => -w,
                            _ => self.forbidden,
                        }
                    })
                    .collect()
            })
            .collect();
        let cols = min_cost_assignment(&cost);
        let mut weight = 0;
        let mut choices = Vec::with_capacity(k);
        for (slot, &col) in cols.iter().enumerate() {
            let c = cost[slot][col];
            if c == self.forbidden {
                return None;
            }
            weight -= c;
            choices.push((col < n).then_some(col));
        }
        Some((weight, choices))
    }

    fn affectation(&self, problem: &AffectationProblem, choices: &[Choice]) -> Affectation {
        let chosen: Vec<_> = choices
            .iter()
            .enumerate()
            .map(|(slot, ch)| ch.and_then(|col| self.edge[slot][col]).map(|(_, c)| c))
            .collect();
        problem.affectation(&chosen)
    }
}

fn near_optimal(problem: &AffectationProblem) -> Option<Vec<Affectation>> {
    let k = problem.cases.len();
    let assigner = Assigner::new(problem)?;
    let root = Constraints { fixed: vec![None; k], banned: vec![Vec::new(); k] };
    let (best, choices) = assigner.solve(&root)?;
    // Tie band in weight units, widened by the rounding of each binding.
    let margin = round_to_i64(TIE_TOLERANCE / WEIGHT_UNIT) as i128 + 2 * k as i128 + 2;

    let mut seq = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Ranked { weight: best, seq, choices, constraints: root });
    let mut pool = Vec::new();
    while let Some(top) = heap.pop() {
        if best - top.weight > margin {
            break;
        }
        for i in 0..k {
            if top.constraints.fixed[i].is_some() {
                continue;
            }
            let mut c = top.constraints.clone();
            for (j, choice) in top.choices.iter().enumerate().take(i) {
                c.fixed[j] = Some(*choice);
            }
            c.banned[i].push(top.choices[i]);
            if let Some((weight, choices)) = assigner.solve(&c) {
                seq += 1;
                heap.push(Ranked { weight, seq, choices, constraints: c });
            }
        }
        pool.push(assigner.affectation(problem, &top.choices));
    }
    Some(pool)
}
