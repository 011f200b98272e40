//! Exact arithmetic over the Gaussian integers `Z[i]` and the Gaussian
//! rationals `Q(i)`.
//!
//! Rounding to the nearest Gaussian integer follows the half-open
//! convention `[z] = floor(Re z + 1/2) + i floor(Im z + 1/2)`, so the
//! fundamental domain is `[-1/2, 1/2) x [-1/2, 1/2)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Gaussian integer `re + im i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

/// One of the four units of `Z[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI];

    pub fn value(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::from_i64(1, 0),
            Unit::I => GaussianInt::from_i64(0, 1),
            Unit::MinusOne => GaussianInt::from_i64(-1, 0),
            Unit::MinusI => GaussianInt::from_i64(0, -1),
        }
    }

    /// Exponent `k` with `self = i^k`.
    pub fn exponent(self) -> u32 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::MinusOne => 2,
            Unit::MinusI => 3,
        }
    }

    pub fn from_exponent(k: i64) -> Unit {
        match k.rem_euclid(4) {
            0 => Unit::One,
            1 => Unit::I,
            2 => Unit::MinusOne,
            _ => Unit::MinusI,
        }
    }

    pub fn inverse(self) -> Unit {
        Unit::from_exponent(-(self.exponent() as i64))
    }

    pub fn compose(self, other: Unit) -> Unit {
        Unit::from_exponent((self.exponent() + other.exponent()) as i64)
    }

    pub fn of(z: &GaussianInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| u.value() == *z)
    }
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianInt::new(re, im)
    }

    pub fn zero() -> Self {
        GaussianInt::default()
    }

    pub fn one() -> Self {
        GaussianInt::from_i64(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::from_i64(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        (self.re, self.im)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt::new(self.re.clone(), -&self.im)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        GaussianInt::new(-&self.im, self.re.clone())
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        match u {
            Unit::One => self.clone(),
            Unit::I => self.mul_i(),
            Unit::MinusOne => -self,
            Unit::MinusI => -self.mul_i(),
        }
    }

    /// `max(|re|, |im|)`.
    pub fn max_abs_coord(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = GaussianInt::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The unit `u` such that `u * self` lies in `{re > 0, im >= 0}`.
    /// Zero maps to `Unit::One`.
    pub fn normalizing_unit(&self) -> Unit {
        for u in Unit::ALL {
            let w = self.mul_unit(u);
            if w.re.is_positive() && !w.im.is_negative() {
                return u;
            }
        }
        Unit::One
    }

    /// The canonical associate: the unique associate in `{re > 0, im >= 0}`.
    pub fn canonical_associate(&self) -> Self {
        self.mul_unit(self.normalizing_unit())
    }

    pub fn is_associate_of(&self, other: &GaussianInt) -> bool {
        self.canonical_associate() == other.canonical_associate()
    }

    /// Exact division, or `None` when `divisor` does not divide `self`.
    pub fn checked_div_exact(&self, divisor: &GaussianInt) -> Option<GaussianInt> {
        if divisor.is_zero() {
            return None;
        }
        let n = divisor.norm();
        let t = self * &divisor.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussianInt::new(qr, qi))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &GaussianInt) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.checked_div_exact(self).is_some()
    }

    /// Remainder `self - [self / m] * m` with `norm(result) <= norm(m) / 2`.
    pub fn nearest_rem(&self, m: &GaussianInt) -> Result<GaussianInt> {
        let q = nearest_quotient(self, m)?;
        Ok(self - &(&q * m))
    }
}

/// `floor((2x + n) / 2n)`: the nearest integer to `x / n` with halves rounded up.
fn round_half_up(x: &BigInt, n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (&two * x + n).div_floor(&(&two * n))
}

/// `[p / q]` computed without forming the quotient.
pub fn nearest_quotient(p: &GaussianInt, q: &GaussianInt) -> Result<GaussianInt> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = q.norm();
    let t = p * &q.conj();
    Ok(GaussianInt::new(
        round_half_up(&t.re, &n),
        round_half_up(&t.im, &n),
    ))
}

/// Nearest Gaussian integer with the half-open tie convention.
pub fn nearest_gaussian(z: &GaussianRational) -> GaussianInt {
    nearest_quotient(&z.num, &z.den).expect("denominator is nonzero")
}

/// Greatest common divisor by the Euclidean algorithm with nearest-integer
/// quotients, normalized to the canonical associate.
pub fn gauss_gcd(a: &GaussianInt, b: &GaussianInt) -> Result<GaussianInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdUndefined);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.nearest_rem(&y)?;
        debug_assert!(r.norm() < y.norm());
        x = y;
        y = r;
    }
    Ok(x.canonical_associate())
}

/// True iff `-1/2 <= Re z < 1/2` and `-1/2 <= Im z < 1/2`.
pub fn in_fundamental_domain(z: &GaussianRational) -> bool {
    nearest_gaussian(z).is_zero()
}

/// An element of `Q(i)`, always stored reduced with a canonical denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: GaussianInt,
}

impl GaussianRational {
    pub fn new(num: GaussianInt, den: GaussianInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(GaussianRational::zero());
        }
        let g = gauss_gcd(&num, &den)?;
        let num = num.checked_div_exact(&g).expect("gcd divides numerator");
        let den = den.checked_div_exact(&g).expect("gcd divides denominator");
        Ok(GaussianRational::normalize_unit(num, den))
    }

    /// Builds a value from a pair already known to be coprime, such as a
    /// convergent pair satisfying the determinant identity. Only the unit
    /// normalization of the denominator is applied.
    pub fn from_coprime(num: GaussianInt, den: GaussianInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(GaussianRational::zero());
        }
        Ok(GaussianRational::normalize_unit(num, den))
    }

    fn normalize_unit(num: GaussianInt, den: GaussianInt) -> Self {
        let u = den.normalizing_unit();
        GaussianRational {
            num: num.mul_unit(u),
            den: den.mul_unit(u),
        }
    }

    pub fn from_int(z: GaussianInt) -> Self {
        GaussianRational {
            num: z,
            den: GaussianInt::one(),
        }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianRational::from_int(GaussianInt::from_i64(re, im))
    }

    /// `re + im i` from two rationals.
    pub fn from_components(re: &BigRational, im: &BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let a = re.numer() * (&den / re.denom());
        let b = im.numer() * (&den / im.denom());
        GaussianRational::new(GaussianInt::new(a, b), GaussianInt::new(den, 0))
            .expect("positive denominator")
    }

    pub fn zero() -> Self {
        GaussianRational {
            num: GaussianInt::zero(),
            den: GaussianInt::one(),
        }
    }

    pub fn one() -> Self {
        GaussianRational::from_i64(1, 0)
    }

    pub fn numer(&self) -> &GaussianInt {
        &self.num
    }

    pub fn denom(&self) -> &GaussianInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one_gauss()
    }

    /// `(Re z, Im z)` as exact rationals.
    pub fn components(&self) -> (BigRational, BigRational) {
        let n = self.den.norm();
        let t = &self.num * &self.den.conj();
        (BigRational::new(t.re, n.clone()), BigRational::new(t.im, n))
    }

    /// `|z|^2` as an exact rational.
    pub fn norm(&self) -> BigRational {
        BigRational::new(self.num.norm(), self.den.norm())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::normalize_unit(self.num.conj(), self.den.conj())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussianRational::normalize_unit(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn checked_div(&self, other: &GaussianRational) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u64) -> Self {
        // numerator and denominator stay coprime under powers
        GaussianRational::normalize_unit(self.num.pow(exp), self.den.pow(exp))
    }

    /// Equality decided by cross-multiplication, independent of reduction.
    pub fn cross_eq(&self, other: &GaussianRational) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn in_fundamental_domain(&self) -> bool {
        in_fundamental_domain(self)
    }
}

impl GaussianInt {
    fn is_one_gauss(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl From<GaussianInt> for GaussianRational {
    fn from(z: GaussianInt) -> Self {
        GaussianRational::from_int(z)
    }
}

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

forward_binop!(GaussianInt, Add, add);
forward_binop!(GaussianInt, Sub, sub);
forward_binop!(GaussianInt, Mul, mul);

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, rhs: &GaussianInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianInt> for GaussianInt {
    fn sub_assign(&mut self, rhs: &GaussianInt) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianInt> for GaussianInt {
    fn mul_assign(&mut self, rhs: &GaussianInt) {
        *self = &*self * rhs;
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        GaussianRational::new(num, den).expect("nonzero denominator")
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        GaussianRational::new(num, den).expect("nonzero denominator")
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, im: &BigInt, lead: bool| -> fmt::Result {
            let sign = if im.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            let mag = im.abs();
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            return write!(f, "{}", self.num);
        }
        let wrap = |z: &GaussianInt| {
            if !z.re.is_zero() && !z.im.is_zero() {
                format!("({z})")
            } else {
                z.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

fn parse_err(s: &str) -> Error {
    Error::Parse(format!("cannot parse Gaussian number from {s:?}"))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, optionally parenthesized and
/// optionally raised to a power with `^k`.
impl FromStr for GaussianInt {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(parse_err(input));
        }
        if let Some((base, exp)) = split_power(&s) {
            let b: GaussianInt = base.parse()?;
            let e: u64 = exp.parse().map_err(|_| parse_err(input))?;
            return Ok(b.pow(e));
        }
        let s = strip_parens(&s);
        if !s.ends_with('i') {
            let re = BigInt::from_str(s).map_err(|_| parse_err(input))?;
            return Ok(GaussianInt::new(re, 0));
        }
        let body = &s[..s.len() - 1];
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .rev()
            .find(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx);
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(re_part).map_err(|_| parse_err(input))?
        };
        let im = match im_part {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => {
                let t = other.strip_prefix('+').unwrap_or(other);
                BigInt::from_str(t).map_err(|_| parse_err(input))?
            }
        };
        Ok(GaussianInt::new(re, im))
    }
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

fn split_power(s: &str) -> Option<(&str, &str)> {
    let idx = s.rfind('^')?;
    Some((&s[..idx], &s[idx + 1..]))
}

/// Parses `x` or `x / y` where both sides are Gaussian integers in the form
/// accepted by [`GaussianInt::from_str`].
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut depth = 0i32;
        let mut slash = None;
        for (idx, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if slash.is_some() {
                        return Err(parse_err(input));
                    }
                    slash = Some(idx);
                }
                _ => {}
            }
        }
        match slash {
            None => Ok(GaussianRational::from_int(s.parse()?)),
            Some(idx) => {
                let num: GaussianInt = s[..idx].parse()?;
                let den: GaussianInt = s[idx + 1..].parse()?;
                GaussianRational::new(num, den)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn nearest_examples() {
        assert_eq!(nearest_gaussian(&GaussianRational::zero()), g(0, 0));
        assert_eq!(nearest_gaussian(&q("(1+i)/2")), g(1, 1));
        assert_eq!(nearest_gaussian(&q("(-3-i)/10")), g(0, 0));
        assert_eq!(nearest_gaussian(&q("-1/2")), g(0, 0));
        assert_eq!(nearest_gaussian(&q("-3/2")), g(-1, 0));
    }

    #[test]
    fn fundamental_domain_examples() {
        assert!(in_fundamental_domain(&GaussianRational::zero()));
        assert!(!in_fundamental_domain(&q("1/2")));
        assert!(in_fundamental_domain(&q("-1/2")));
        let z = q("(2+3i)/(-3+i)^2");
        assert_eq!(z, q("(-1+18i)/50"));
        assert!(in_fundamental_domain(&z));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gauss_gcd(&g(0, 3), &g(0, 0)).unwrap(), g(3, 0));
        assert_eq!(
            gauss_gcd(&g(5, 0), &g(2, 1)).unwrap(),
            g(2, 1).canonical_associate()
        );
        assert!(gauss_gcd(&g(2, 3), &g(8, -6)).unwrap().is_unit());
        assert_eq!(gauss_gcd(&g(0, 0), &g(0, 0)), Err(Error::GcdUndefined));
    }

    /// Every divisor of norm at most `bound` of `a`, up to associates.
    fn small_divisors(a: &GaussianInt, bound: i64) -> Vec<GaussianInt> {
        let mut out = Vec::new();
        for x in 0..=bound {
            for y in 0..=bound {
                let d = g(x, y);
                if d.is_zero() || d.norm() > BigInt::from(bound) {
                    continue;
                }
                if d.canonical_associate() == d && d.divides(a) {
                    out.push(d);
                }
            }
        }
        out
    }

    #[test]
    fn gcd_against_divisor_enumeration() {
        // common divisors of 5 and 2+i by exhaustive search over norms <= 5
        let a = g(5, 0);
        let b = g(2, 1);
        let common: Vec<_> = small_divisors(&a, 5)
            .into_iter()
            .filter(|d| d.divides(&b))
            .collect();
        let best = common.iter().max_by_key(|d| d.norm()).unwrap();
        assert_eq!(best, &g(2, 1).canonical_associate());
        assert_eq!(gauss_gcd(&a, &b).unwrap(), *best);

        // 2+3i and 8-6i share no divisor of norm in 2..=13
        let a = g(2, 3);
        let b = g(8, -6);
        let common: Vec<_> = small_divisors(&a, 13)
            .into_iter()
            .filter(|d| d.divides(&b))
            .collect();
        assert_eq!(common, vec![g(1, 0)]);
    }

    #[test]
    fn canonical_associate_quadrant() {
        for (re, im) in [(3, 4), (-3, 4), (-3, -4), (3, -4), (0, 5), (0, -5), (-5, 0)] {
            let c = g(re, im).canonical_associate();
            assert!(c.re().is_positive() && !c.im().is_negative(), "{c}");
        }
    }

    #[test]
    fn parse_and_display() {
        for (s, z) in [
            ("0", g(0, 0)),
            ("3", g(3, 0)),
            ("-3", g(-3, 0)),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("2i", g(0, 2)),
            ("1+i", g(1, 1)),
            ("2-3i", g(2, -3)),
            ("-3+i", g(-3, 1)),
            ("-1-2i", g(-1, -2)),
        ] {
            let parsed: GaussianInt = s.parse().unwrap();
            assert_eq!(parsed, z);
            assert_eq!(parsed.to_string(), s);
        }
        assert_eq!("(-2+i)^2".parse::<GaussianInt>().unwrap(), g(3, -4));
        assert_eq!(q("10/27").to_string(), "10/27");
        assert_eq!(
            q("1+i / 2").components().0,
            BigRational::new(1.into(), 2.into())
        );
        assert!("1+".parse::<GaussianInt>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
        assert!("1/0".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn rational_normal_form() {
        let z = q("(5-6i)/(-2+i)^4");
        assert!(z.denom().re().is_positive() && !z.denom().im().is_negative());
        assert!(gauss_gcd(z.numer(), z.denom()).unwrap().is_unit());
        assert_eq!(z, q("(-5+6i)/(7+24i)"));
        assert_eq!(q("(2+4i)/(2)"), GaussianRational::from_i64(1, 2));
    }
}
