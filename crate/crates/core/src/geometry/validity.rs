//! Validity of digit sequences: open cylinders through the automaton,
//! closed cylinders through rational points on the boundary.

use std::fmt;

use super::automaton::{digit_box, shared_automaton, Trace};
use crate::cf::{evaluate, CfSequence};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::hcf::{digit_in_alphabet, hcf_expand};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validity {
    /// The open cylinder is nonempty.
    Valid,
    /// The open cylinder is empty but the closed one contains a rational
    /// point whose expansion starts with the digits.
    ValidBoundaryOnly,
    Invalid,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Validity::Valid => "Valid",
            Validity::ValidBoundaryOnly => "ValidBoundaryOnly",
            Validity::Invalid => "Invalid",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ValidityReport {
    pub verdict: Validity,
    pub trace: Trace,
    /// The continued fraction whose value certifies a boundary-only verdict.
    pub boundary_witness: Option<CfSequence>,
}

/// Tail digits tried when looking for a boundary point.
const BOUNDARY_TAIL: i64 = 4;

pub fn check_validity(digits: &[GaussianInt]) -> Result<ValidityReport> {
    if let Some(d) = digits.iter().find(|d| !digit_in_alphabet(d)) {
        return Err(Error::DigitNotInAlphabet(d.to_string()));
    }
    let trace = shared_automaton()?.run(digits)?;
    if trace.alive {
        return Ok(ValidityReport {
            verdict: Validity::Valid,
            trace,
            boundary_witness: None,
        });
    }
    let boundary_witness = boundary_point(digits)?;
    let verdict = if boundary_witness.is_some() {
        Validity::ValidBoundaryOnly
    } else {
        Validity::Invalid
    };
    Ok(ValidityReport {
        verdict,
        trace,
        boundary_witness,
    })
}

pub fn is_valid(digits: &[GaussianInt]) -> Result<Validity> {
    Ok(check_validity(digits)?.verdict)
}

/// A rational `[0; digits]` or `[0; digits, t]` whose Hurwitz expansion
/// begins with `digits`.
fn boundary_point(digits: &[GaussianInt]) -> Result<Option<CfSequence>> {
    let mut tails = vec![Vec::new()];
    tails.extend(digit_box(BOUNDARY_TAIL).into_iter().map(|t| vec![t]));
    for extra in tails {
        let mut tail = digits.to_vec();
        tail.extend(extra);
        let cf = CfSequence::from_tail(tail);
        let Ok(value) = evaluate(&cf) else { continue };
        let e = hcf_expand(&value)?;
        if e.integer_part.is_zero() && e.digits.starts_with(digits) {
            return Ok(Some(cf));
        }
    }
    Ok(None)
}

/// Whether the open prototype set of the sequence is the whole open square.
pub fn is_full(digits: &[GaussianInt]) -> Result<bool> {
    if let Some(d) = digits.iter().find(|d| !digit_in_alphabet(d)) {
        return Err(Error::DigitNotInAlphabet(d.to_string()));
    }
    shared_automaton()?.is_full(digits)
}
