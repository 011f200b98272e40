//! Mechanical check that compositions of the two folding maps keep a full
//! seed full.
//!
//! `f(x) = x d (-x reversed)` with `d = -2+i`, and `g(x) = x⁺ (x reversed)₋`,
//! which is the unit fold: the last digit goes up by one and the first digit
//! of the reversed copy goes down by one.

use std::fmt;

use rayon::prelude::*;

use super::automaton::shared_automaton;
use crate::cf::{fold, fold_unit, mirror_negate, CfSequence};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FoldMap {
    F,
    G,
}

impl fmt::Display for FoldMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FoldMap::F => "f",
            FoldMap::G => "g",
        })
    }
}

/// The middle digit used by `f`.
pub fn program_pivot() -> GaussianInt {
    GaussianInt::from_i64(-2, 1)
}

pub fn apply_map(map: FoldMap, x: &[GaussianInt]) -> Result<Vec<GaussianInt>> {
    let cf = CfSequence::from_tail(x.to_vec());
    let out = match map {
        FoldMap::F => fold(&cf, &program_pivot())?,
        FoldMap::G => fold_unit(&cf)?,
    };
    Ok(out.tail)
}

/// Applies `program[0]` first.
pub fn apply_program(program: &[FoldMap], seed: &[GaussianInt]) -> Result<Vec<GaussianInt>> {
    program
        .iter()
        .try_fold(seed.to_vec(), |acc, &m| apply_map(m, &acc))
}

/// All programs of length `1..=depth`, shorter first, `f` before `g`.
pub fn all_programs(depth: usize) -> Vec<Vec<FoldMap>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<FoldMap>> = vec![Vec::new()];
    for _ in 0..depth {
        layer = layer
            .into_iter()
            .flat_map(|p| {
                [FoldMap::F, FoldMap::G].into_iter().map(move |m| {
                    let mut q = p.clone();
                    q.push(m);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Clone, Debug)]
pub struct ProgramCheck {
    pub program: Vec<FoldMap>,
    pub digits: Vec<GaussianInt>,
    /// Final state label of the sequence, or `None` if it dies.
    pub state: Option<String>,
    /// Final state label of the negated reversal.
    pub mirror_state: Option<String>,
}

impl ProgramCheck {
    pub fn passed(&self) -> bool {
        self.state.as_deref() == Some("F") && self.mirror_state.as_deref() == Some("F")
    }

    pub fn name(&self) -> String {
        self.program.iter().map(|m| m.to_string()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ProgramReport {
    pub checks: Vec<ProgramCheck>,
}

impl ProgramReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ProgramCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ProgramCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

fn final_label(digits: &[GaussianInt]) -> Result<Option<String>> {
    let a = shared_automaton()?;
    let t = a.run(digits)?;
    Ok(t.alive.then(|| a.label(t.last()).to_string()))
}

/// Checks `h(seed)` and its negated reversal for every program of length
/// at most `depth`. Results come back in [`all_programs`] order.
pub fn verify_folding_program(seed: &[GaussianInt], depth: usize) -> Result<ProgramReport> {
    if depth == 0 {
        return Err(Error::Verification("empty program set".into()));
    }
    mirror_conjugate_state(seed)?;
    let checks = all_programs(depth)
        .into_par_iter()
        .map(|program| {
            let digits = apply_program(&program, seed)?;
            Ok(ProgramCheck {
                state: final_label(&digits)?,
                mirror_state: final_label(&mirror_negate(&digits))?,
                program,
                digits,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProgramReport { checks })
}

/// For a full sequence, confirms that its negated reversal and its
/// conjugate are full as well.
pub fn mirror_conjugate_state(digits: &[GaussianInt]) -> Result<()> {
    let a = shared_automaton()?;
    if !a.is_full(digits)? {
        return Err(Error::SeedNotFull);
    }
    let conj: Vec<GaussianInt> = digits.iter().map(GaussianInt::conj).collect();
    for (name, seq) in [
        ("negated reversal", mirror_negate(digits)),
        ("conjugate", conj),
    ] {
        if !a.is_full(&seq)? {
            return Err(Error::Verification(format!(
                "the {name} of a full sequence is not full"
            )));
        }
    }
    Ok(())
}
