//! The Hurwitz algorithm: nearest-integer continued fractions of Gaussian
//! rationals, together with the approximation bounds it satisfies.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cf::{convergents, evaluate, CfSequence, ConvergentTable};
use crate::error::{Error, Result};
use crate::exact::{sqrt_enclosure, Interval};
use crate::gaussian::{nearest_gaussian, nearest_quotient, GaussianInt, GaussianRational};

/// Hurwitz expansion `[a0; a1, ..., an]` of a Gaussian rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HcfExpansion {
    pub integer_part: GaussianInt,
    pub digits: Vec<GaussianInt>,
}

impl HcfExpansion {
    pub fn to_cf(&self) -> CfSequence {
        CfSequence::new(self.integer_part.clone(), self.digits.clone())
    }

    pub fn evaluate(&self) -> Result<GaussianRational> {
        evaluate(&self.to_cf())
    }

    pub fn convergents(&self) -> ConvergentTable {
        convergents(&self.to_cf())
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Largest squared modulus among the digits, or 0 for an empty list.
    pub fn max_digit_norm(&self) -> BigInt {
        self.digits
            .iter()
            .map(GaussianInt::norm)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for HcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_cf().fmt(f)
    }
}

pub fn digit_in_alphabet(d: &GaussianInt) -> bool {
    d.norm() > BigInt::from(1)
}

/// Runs the Gauss map `z -> 1/z - [1/z]` on the fractional part until it
/// reaches zero. Each step strictly lowers the norm of the denominator; a
/// step that does not is reported as [`Error::NonTermination`].
pub fn hcf_expand(z: &GaussianRational) -> Result<HcfExpansion> {
    let integer_part = nearest_gaussian(z);
    // fractional part p / q with p = num - a0 * den
    let mut q = z.denom().clone();
    let mut p = z.numer() - &(&integer_part * &q);
    let mut digits = Vec::new();
    while !p.is_zero() {
        let a = nearest_quotient(&q, &p)?;
        let r = &q - &(&a * &p);
        if r.norm() >= p.norm() {
            return Err(Error::NonTermination {
                steps: digits.len(),
            });
        }
        digits.push(a);
        q = p;
        p = r;
    }
    Ok(HcfExpansion {
        integer_part,
        digits,
    })
}

/// Orbit `z, T(z), T^2(z), ..., 0` of the fractional part under the Gauss map.
pub fn gauss_orbit(z: &GaussianRational) -> Result<Vec<GaussianRational>> {
    let a0 = nearest_gaussian(z);
    let mut x = z - &GaussianRational::from_int(a0);
    let mut orbit = vec![x.clone()];
    while !x.is_zero() {
        let inv = x.inv()?;
        let a = nearest_gaussian(&inv);
        x = &inv - &GaussianRational::from_int(a);
        orbit.push(x.clone());
        if orbit.len() > 1 << 20 {
            return Err(Error::NonTermination { steps: orbit.len() });
        }
    }
    Ok(orbit)
}

/// Reversibility test for real digit sequences: every digit of absolute
/// value 2 past the first must share the sign of its predecessor.
pub fn is_reversible_real(digits: &[GaussianInt]) -> Result<bool> {
    for d in digits {
        if !d.is_real() {
            return Err(Error::NonRealDigit(d.to_string()));
        }
    }
    let two = BigInt::from(2);
    Ok(digits.windows(2).all(|w| {
        let (prev, cur) = (w[0].re(), w[1].re());
        cur.abs() != two || (prev * cur).is_positive()
    }))
}

/// Outcome of checking `L <= |z - p_n/q_n| <= U`.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    /// `|z - p_n/q_n|^2`, exact.
    pub distance_sq: BigRational,
    /// Enclosure of the lower bound `L`.
    pub lower: Interval,
    /// Enclosure of the upper bound `U`.
    pub upper: Interval,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl SandwichReport {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

/// Checks the two-sided bound
/// `(2/(2+sqrt2)) / (|q_n|^2 (|c| + sqrt2/2)) <= |z - p_n/q_n| <= (4/(2-sqrt2)) / (|c| |q_n|^2)`
/// with `c = a_{n+1}`. Comparisons are made on squares, and the irrational
/// constants are bracketed until the answer is decided.
pub fn error_sandwich(
    z: &GaussianRational,
    table: &ConvergentTable,
    n: usize,
    c_next: &GaussianInt,
) -> Result<SandwichReport> {
    let (p, q) = table.pair(n)?;
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if c_next.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let approx = GaussianRational::new(p.clone(), q.clone())?;
    let distance_sq = (z - &approx).norm();
    let q2 = BigRational::from_integer(q.norm());
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let half = BigRational::new(1.into(), 2.into());
    let c_norm = BigRational::from_integer(c_next.norm());

    let mut bits = 24;
    loop {
        let s2 = sqrt_enclosure(&two, bits);
        let c_abs = sqrt_enclosure(&c_norm, bits);
        let two_i = Interval::point(two.clone());
        let four_i = Interval::point(four.clone());
        // L = 2 / ((2 + sqrt2) * |q|^2 * (|c| + sqrt2 / 2))
        let l_den = (&two_i + &s2).mul(&(&c_abs + &s2.scale(&half))).scale(&q2);
        let lower = two_i.mul(&l_den.recip().expect("positive"));
        // U = 4 / ((2 - sqrt2) * |c| * |q|^2)
        let u_den = (&two_i - &s2).mul(&c_abs).scale(&q2);
        let upper = four_i.mul(&u_den.recip().expect("positive"));

        let sq = |x: &BigRational| x * x;
        let lower_yes = sq(&lower.hi) <= distance_sq;
        let lower_no = sq(&lower.lo) > distance_sq;
        let upper_yes = distance_sq <= sq(&upper.lo);
        let upper_no = distance_sq > sq(&upper.hi);
        if (lower_yes || lower_no) && (upper_yes || upper_no) || bits > 1024 {
            return Ok(SandwichReport {
                distance_sq,
                lower,
                upper,
                lower_holds: lower_yes,
                upper_holds: upper_yes,
            });
        }
        bits *= 2;
    }
}

/// `|z - p_n/q_n|^2 < 1/|q_n|^4`, checked exactly.
pub fn hurwitz_bound_holds(z: &GaussianRational, p: &GaussianInt, q: &GaussianInt) -> Result<bool> {
    let approx = GaussianRational::new(p.clone(), q.clone())?;
    let d2 = (z - &approx).norm();
    let q4 = q.norm() * q.norm();
    Ok(d2 * BigRational::from_integer(q4) < BigRational::from_integer(1.into()))
}

/// Whether `p/q` is a convergent of the Hurwitz expansion of `z`.
///
/// When `|z - p/q| < 1/(4|q|^2)` the fraction must be a convergent; if the
/// table disagrees, [`Error::Verification`] is returned.
pub fn convergent_detector(z: &GaussianRational, p: &GaussianInt, q: &GaussianInt) -> Result<bool> {
    let target = GaussianRational::new(p.clone(), q.clone())?;
    let d2 = (z - &target).norm();
    let q4 = q.norm() * q.norm();
    let close = d2 * BigRational::from_integer(q4 * 16) < BigRational::from_integer(1.into());
    let expansion = hcf_expand(z)?;
    let table = expansion.convergents();
    let found = (0..=table.last_index()).any(|n| {
        let (pn, qn) = table.pair(n).expect("index in range");
        !qn.is_zero() && (pn * target.denom()) == (target.numer() * qn)
    });
    if close && !found {
        return Err(Error::Verification(format!(
            "{target} is within 1/(4|q|^2) of {z} but is not a convergent"
        )));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::parse_digit_list;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn digits(s: &str) -> Vec<GaussianInt> {
        parse_digit_list(s).unwrap()
    }

    #[test]
    fn expand_examples() {
        let e = hcf_expand(&q("(5-6i)/(-2+i)^4")).unwrap();
        assert!(e.integer_part.is_zero());
        assert_eq!(e.digits, digits("2-3i, -1-2i, -3+i"));
        assert_eq!(hcf_expand(&q("17/64")).unwrap().digits, digits("4, -4, -4"));
        let zero = hcf_expand(&GaussianRational::zero()).unwrap();
        assert!(zero.digits.is_empty() && zero.integer_part.is_zero());
    }

    #[test]
    fn expand_with_integer_part() {
        let z = q("(7+3i)/(2-i)");
        let e = hcf_expand(&z).unwrap();
        assert_eq!(e.evaluate().unwrap(), z);
        assert_eq!(e.integer_part, nearest_gaussian(&z));
    }

    #[test]
    fn orbit_stays_in_domain() {
        let orbit = gauss_orbit(&q("(13-11i)/(-2+i)^5")).unwrap();
        assert!(orbit.iter().all(|x| x.in_fundamental_domain()));
        assert!(orbit.last().unwrap().is_zero());
        assert_eq!(orbit.len(), 5);
    }

    #[test]
    fn alphabet() {
        assert!(digit_in_alphabet(&GaussianInt::from_i64(1, 1)));
        assert!(!digit_in_alphabet(&GaussianInt::from_i64(0, 1)));
        assert!(!digit_in_alphabet(&GaussianInt::zero()));
        assert!(digit_in_alphabet(&GaussianInt::from_i64(-3, 1)));
    }

    #[test]
    fn reversibility_real() {
        assert!(is_reversible_real(&digits("3, -3, -3")).unwrap());
        assert!(!is_reversible_real(&digits("4, -2, -4")).unwrap());
        assert!(is_reversible_real(&digits("7, -4, 5")).unwrap());
        assert!(is_reversible_real(&digits("-3, -2, 5")).unwrap());
        assert!(is_reversible_real(&digits("2+i")).is_err());
    }

    #[test]
    fn sandwich_examples() {
        let z = q("10/27");
        let e = hcf_expand(&z).unwrap();
        let t = e.convergents();
        let r = error_sandwich(&z, &t, 1, &e.digits[1]).unwrap();
        assert_eq!(r.distance_sq, q("1/729").components().0);
        assert!(r.holds());

        let z = q("(5-6i)/(-2+i)^4");
        let e = hcf_expand(&z).unwrap();
        let t = e.convergents();
        assert!(error_sandwich(&z, &t, 1, &e.digits[1]).unwrap().holds());
    }

    #[test]
    fn detector_examples() {
        let one = GaussianInt::one();
        assert!(convergent_detector(&q("14/45"), &one, &GaussianInt::from_i64(3, 0)).unwrap());
        assert!(convergent_detector(
            &q("14/45"),
            &GaussianInt::from_i64(14, 0),
            &GaussianInt::from_i64(45, 0)
        )
        .unwrap());
        assert!(!convergent_detector(&q("10/27"), &one, &GaussianInt::from_i64(2, 0)).unwrap());
    }
}
