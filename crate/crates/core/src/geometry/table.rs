//! Successor sets read off the automaton, compared against a rule table.

use std::collections::BTreeSet;

use super::automaton::{digit_box, Automaton};
use crate::error::Result;
use crate::gaussian::GaussianInt;
use crate::successor::SuccessorRule;

/// Candidate successors are drawn from this box.
pub const CANDIDATE_BOX: i64 = 5;

/// A leading digit whose observed successor sets differ from the rule.
#[derive(Clone, Debug)]
pub struct RowMismatch {
    pub digit: GaussianInt,
    /// Successor sets realised by some history but absent from the rule,
    /// each given by the candidates it excludes.
    pub observed_only: Vec<Vec<GaussianInt>>,
    /// Rule branches no history realises, by excluded candidates.
    pub rule_only: Vec<Vec<GaussianInt>>,
}

type Family = BTreeSet<BTreeSet<GaussianInt>>;

/// Every successor set of `d` over all reachable histories.
pub fn observed_family(a: &Automaton, d: &GaussianInt) -> Result<Family> {
    let mut out = BTreeSet::new();
    for s in 0..a.len() {
        if let Some(t) = a.step(s, d)? {
            out.insert(a.successors(t, CANDIDATE_BOX)?.into_iter().collect());
        }
    }
    Ok(out)
}

fn rule_family(rule: &SuccessorRule, candidates: &[GaussianInt]) -> Family {
    (0..rule.branches.len())
        .map(|k| {
            candidates
                .iter()
                .filter(|c| rule.branch_contains(k, c))
                .cloned()
                .collect()
        })
        .collect()
}

fn excluded(set: &BTreeSet<GaussianInt>, candidates: &[GaussianInt]) -> Vec<GaussianInt> {
    candidates
        .iter()
        .filter(|c| !set.contains(c))
        .cloned()
        .collect()
}

/// Compares the automaton with `rule_of` for every leading digit in the
/// box of radius `lead`. An empty result means the table is exact.
pub fn compare_successor_table<F>(a: &Automaton, lead: i64, rule_of: F) -> Result<Vec<RowMismatch>>
where
    F: Fn(&GaussianInt) -> Result<SuccessorRule>,
{
    let candidates = digit_box(CANDIDATE_BOX);
    let mut out = Vec::new();
    for d in digit_box(lead) {
        let seen = observed_family(a, &d)?;
        let rule = rule_family(&rule_of(&d)?, &candidates);
        if seen != rule {
            out.push(RowMismatch {
                observed_only: seen
                    .difference(&rule)
                    .map(|s| excluded(s, &candidates))
                    .collect(),
                rule_only: rule
                    .difference(&seen)
                    .map(|s| excluded(s, &candidates))
                    .collect(),
                digit: d,
            });
        }
    }
    Ok(out)
}
