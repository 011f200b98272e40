//! Successor restrictions: which digits may follow a given Hurwitz digit.
//!
//! Digits with a coordinate of absolute value at least 3 impose nothing.
//! The remaining digits fall into the symmetry classes of `1+i`, `2`,
//! `2+i` and `2+2i`. The symmetry acting on a
//! pair of consecutive digits is `(a, a') -> (i^k a, i^-k a')`, optionally
//! followed by conjugating both; it comes from `1/(i^k w) = i^-k / w`.
//!
//! Two tables are kept: [`printed_rows`] is the classical five-row table as
//! usually quoted, and [`verified_rows`] holds the maximal sets confirmed by
//! the prototype automaton. They differ in three places: the `1+i` row is
//! closed rather than strict, the second `-1+2i` branch is `{Im <= 0}`, and
//! `2+2i` is missing from the classical table although it excludes `-1+i`
//! after some histories.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::hcf::digit_in_alphabet;

/// Sign condition on one coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    NonNegative,
    Negative,
    NonPositive,
}

impl Sign {
    fn holds(self, x: &num_bigint::BigInt) -> bool {
        match self {
            Sign::Positive => x.is_positive(),
            Sign::NonNegative => !x.is_negative(),
            Sign::Negative => x.is_negative(),
            Sign::NonPositive => !x.is_positive(),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "> 0",
            Sign::NonNegative => ">= 0",
            Sign::Negative => "< 0",
            Sign::NonPositive => "<= 0",
        }
    }
}

/// A set of admissible successors, written in the frame of a table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuccessorSet {
    All,
    AllExcept((i64, i64)),
    Signs { re: Option<Sign>, im: Option<Sign> },
}

impl SuccessorSet {
    fn contains(&self, d: &GaussianInt) -> bool {
        if !digit_in_alphabet(d) {
            return false;
        }
        match self {
            SuccessorSet::All => true,
            SuccessorSet::AllExcept((re, im)) => *d != GaussianInt::from_i64(*re, *im),
            SuccessorSet::Signs { re, im } => {
                re.is_none_or(|s| s.holds(d.re())) && im.is_none_or(|s| s.holds(d.im()))
            }
        }
    }
}

impl fmt::Display for SuccessorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuccessorSet::All => write!(f, "D"),
            SuccessorSet::AllExcept((re, im)) => {
                write!(f, "D \\ {{{}}}", GaussianInt::from_i64(*re, *im))
            }
            SuccessorSet::Signs { re, im } => {
                let mut parts = Vec::new();
                if let Some(s) = re {
                    parts.push(format!("Re {}", s.symbol()));
                }
                if let Some(s) = im {
                    parts.push(format!("Im {}", s.symbol()));
                }
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

/// One table row: a representative digit and its admissible successor sets.
/// Two sets mean the answer depends on the earlier digits.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub representative: (i64, i64),
    pub branches: Vec<SuccessorSet>,
}

fn row(rep: (i64, i64), branches: Vec<SuccessorSet>) -> TableRow {
    TableRow {
        representative: rep,
        branches,
    }
}

fn signs(re: Option<Sign>, im: Option<Sign>) -> SuccessorSet {
    SuccessorSet::Signs { re, im }
}

/// The classical table, row for row.
pub fn printed_rows() -> Vec<TableRow> {
    use Sign::*;
    vec![
        row((1, 1), vec![signs(Some(Positive), Some(Negative))]),
        row((2, 0), vec![signs(Some(NonNegative), None)]),
        row(
            (2, 1),
            vec![
                SuccessorSet::AllExcept((-1, 1)),
                signs(Some(NonNegative), None),
            ],
        ),
        row(
            (-1, 2),
            vec![
                SuccessorSet::AllExcept((1, 1)),
                signs(Some(NonPositive), None),
            ],
        ),
    ]
}

/// Maximal sets as decided by the prototype automaton.
pub fn verified_rows() -> Vec<TableRow> {
    use Sign::*;
    vec![
        row((1, 1), vec![signs(Some(NonNegative), Some(NonPositive))]),
        row((2, 0), vec![signs(Some(NonNegative), None)]),
        row(
            (2, 1),
            vec![
                SuccessorSet::AllExcept((-1, 1)),
                signs(Some(NonNegative), None),
            ],
        ),
        row(
            (-1, 2),
            vec![
                SuccessorSet::AllExcept((1, 1)),
                signs(None, Some(NonPositive)),
            ],
        ),
        row(
            (2, 2),
            vec![SuccessorSet::All, SuccessorSet::AllExcept((-1, 1))],
        ),
    ]
}

/// `z -> i^k z`, then conjugate when `conj` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub rotation: u32,
    pub conj: bool,
}

impl Symmetry {
    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0..4).flat_map(|k| {
            [false, true].into_iter().map(move |c| Symmetry {
                rotation: k,
                conj: c,
            })
        })
    }

    /// Action on the leading digit.
    pub fn apply(&self, z: &GaussianInt) -> GaussianInt {
        let r = z.mul_unit(crate::gaussian::Unit::from_exponent(self.rotation as i64));
        if self.conj {
            r.conj()
        } else {
            r
        }
    }

    /// Action on the following digit (the inverse rotation).
    pub fn apply_next(&self, z: &GaussianInt) -> GaussianInt {
        let r = z.mul_unit(crate::gaussian::Unit::from_exponent(
            -(self.rotation as i64),
        ));
        if self.conj {
            r.conj()
        } else {
            r
        }
    }

    /// Inverse of [`Symmetry::apply_next`].
    pub fn unapply_next(&self, z: &GaussianInt) -> GaussianInt {
        let w = if self.conj { z.conj() } else { z.clone() };
        w.mul_unit(crate::gaussian::Unit::from_exponent(self.rotation as i64))
    }
}

/// Classification of a digit together with its admissible successors.
#[derive(Clone, Debug)]
pub struct SuccessorRule {
    pub digit: GaussianInt,
    /// `None` for digits that impose no restriction.
    pub row: Option<(i64, i64)>,
    pub symmetry: Symmetry,
    pub branches: Vec<SuccessorSet>,
}

impl SuccessorRule {
    /// Whether the condition is resolved by the digit alone.
    pub fn is_ambiguous(&self) -> bool {
        self.branches.len() > 1
    }

    /// Membership in branch `k`, transported from the row frame.
    pub fn branch_contains(&self, k: usize, candidate: &GaussianInt) -> bool {
        let back = self.symmetry.unapply_next(candidate);
        self.branches[k].contains(&back)
    }

    /// Membership in the largest branch, which is always the first one.
    pub fn allows(&self, candidate: &GaussianInt) -> bool {
        self.branch_contains(0, candidate)
    }
}

/// Digits with `max(|Re|, |Im|) >= 3` impose nothing.
pub fn is_unrestricting(d: &GaussianInt) -> bool {
    d.max_abs_coord() >= 3.into()
}

fn unrestricted(d: &GaussianInt) -> SuccessorRule {
    SuccessorRule {
        digit: d.clone(),
        row: None,
        symmetry: Symmetry {
            rotation: 0,
            conj: false,
        },
        branches: vec![SuccessorSet::All],
    }
}

fn rule_from(d: &GaussianInt, rows: &[TableRow]) -> Result<SuccessorRule> {
    if !digit_in_alphabet(d) {
        return Err(Error::DigitNotInAlphabet(d.to_string()));
    }
    if is_unrestricting(d) {
        return Ok(unrestricted(d));
    }
    // a row whose representative is the digit itself wins over a transported one
    for sym in Symmetry::all() {
        for r in rows {
            let rep = GaussianInt::from_i64(r.representative.0, r.representative.1);
            if sym.apply(&rep) == *d {
                return Ok(SuccessorRule {
                    digit: d.clone(),
                    row: Some(r.representative),
                    symmetry: sym,
                    branches: r.branches.clone(),
                });
            }
        }
    }
    // the classical table is silent on the 2+2i class
    Ok(unrestricted(d))
}

/// Automaton-confirmed successor rule for `a`.
pub fn allowed_successors(a: &GaussianInt) -> Result<SuccessorRule> {
    rule_from(a, &verified_rows())
}

/// Successor rule read off the classical table, transported by the pair
/// symmetry. Kept for comparison against the automaton.
pub fn printed_successors(a: &GaussianInt) -> Result<SuccessorRule> {
    rule_from(a, &printed_rows())
}

/// Whether every consecutive pair satisfies the first-branch rule.
pub fn respects_successor_rules(digits: &[GaussianInt]) -> Result<bool> {
    for w in digits.windows(2) {
        if !allowed_successors(&w[0])?.allows(&w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    #[test]
    fn large_digits_are_free() {
        let r = allowed_successors(&g(-4, 7)).unwrap();
        assert!(r.row.is_none());
        assert!(r.allows(&g(1, 1)));
        assert!(r.allows(&g(-2, 0)));
        assert!(!r.allows(&g(0, 1)));
        assert!(printed_successors(&g(2, 2)).unwrap().row.is_none());
    }

    #[test]
    fn two_plus_two_i_depends_on_history() {
        let r = allowed_successors(&g(-2, 2)).unwrap();
        assert!(r.is_ambiguous());
        assert!(r.allows(&g(-1, -1)));
        // i^-1 (-1+i) = 1+i
        assert!(!r.branch_contains(1, &g(1, 1)));
        assert!(r.branch_contains(1, &g(-1, -1)));
    }

    #[test]
    fn one_plus_i() {
        let r = allowed_successors(&g(1, 1)).unwrap();
        assert!(r.allows(&g(2, -1)));
        assert!(r.allows(&g(2, 0)));
        assert!(r.allows(&g(0, -2)));
        assert!(!r.allows(&g(-2, 0)));
        assert!(!r.allows(&g(1, 1)));
        // the classical row is strict on both axes
        let p = printed_successors(&g(1, 1)).unwrap();
        assert!(p.allows(&g(2, -1)));
        assert!(!p.allows(&g(2, 0)));
    }

    #[test]
    fn two() {
        let r = allowed_successors(&g(2, 0)).unwrap();
        assert!(r.allows(&g(0, 2)));
        assert!(r.allows(&g(3, -5)));
        assert!(!r.allows(&g(-2, 0)));
    }

    #[test]
    fn rotated_rows_use_inverse_rotation() {
        // 2i = i * 2, so the successor set is i^-1 {Re >= 0} = {Im <= 0}
        let r = allowed_successors(&g(0, 2)).unwrap();
        assert!(r.allows(&g(3, -1)));
        assert!(!r.allows(&g(0, 2)));
        // -2 = i^2 * 2: {Re <= 0}
        let r = allowed_successors(&g(-2, 0)).unwrap();
        assert!(r.allows(&g(-3, 0)));
        assert!(!r.allows(&g(2, 0)));
    }

    #[test]
    fn ambiguous_rows() {
        let r = allowed_successors(&g(2, 1)).unwrap();
        assert!(r.is_ambiguous());
        assert!(!r.allows(&g(-1, 1)));
        assert!(r.allows(&g(-1, -1)));
        assert!(!r.branch_contains(1, &g(-2, 0)));
        let r = allowed_successors(&g(-1, 2)).unwrap();
        assert!(!r.allows(&g(1, 1)));
        assert!(r.branch_contains(1, &g(3, -1)));
        assert!(!r.branch_contains(1, &g(0, 2)));
    }

    #[test]
    fn rejects_units() {
        assert!(allowed_successors(&g(0, -1)).is_err());
    }

    #[test]
    fn symmetry_round_trip() {
        for s in Symmetry::all() {
            let z = g(3, -7);
            assert_eq!(s.unapply_next(&s.apply_next(&z)), z);
        }
    }

    #[test]
    fn verified_minus_one_plus_two_i_is_rotated_two_plus_i() {
        // -1+2i = i (2+i); transporting the 2+i row must give the same sets
        let direct = allowed_successors(&g(-1, 2)).unwrap();
        let rows = verified_rows();
        let base = rows.iter().find(|r| r.representative == (2, 1)).unwrap();
        let rule = SuccessorRule {
            digit: g(-1, 2),
            row: Some((2, 1)),
            symmetry: Symmetry {
                rotation: 1,
                conj: false,
            },
            branches: base.branches.clone(),
        };
        for x in -5..=5 {
            for y in -5..=5 {
                let c = g(x, y);
                for k in 0..2 {
                    assert_eq!(
                        direct.branch_contains(k, &c),
                        rule.branch_contains(k, &c),
                        "{c}"
                    );
                }
            }
        }
    }
}
