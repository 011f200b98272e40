//! Rational enclosures for the few irrational constants the library needs:
//! square roots of rationals and natural logarithms.
//!
//! Every enclosure is a closed rational interval that provably contains the
//! true value. Precision is given in bits; results are rounded outward to
//! dyadic rationals so denominators stay bounded.

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Interval::point(BigRational::from_integer(n.into()))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `Some(ordering)` when every point of `self` compares the same way with
    /// every point of `other`; `None` when the intervals overlap.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && other.lo == other.hi && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Multiplication by an exact rational.
    pub fn scale(&self, k: &BigRational) -> Interval {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if k.is_negative() {
            Interval::new(b, a)
        } else {
            Interval::new(a, b)
        }
    }

    /// Product of two intervals (all four endpoint products).
    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    /// Reciprocal of an interval not containing zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.lo.is_positive() || self.hi.is_negative() {
            Some(Interval::new(self.hi.recip(), self.lo.recip()))
        } else {
            None
        }
    }

    /// Rounds both endpoints outward to multiples of `2^-bits`.
    pub fn rounded(&self, bits: u32) -> Interval {
        Interval::new(round_down(&self.lo, bits), round_up(&self.hi, bits))
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_floor(x.denom());
    BigRational::new(n, scale)
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let n = (x.numer() * &scale).div_ceil(x.denom());
    BigRational::new(n, scale)
}

/// `x` in fixed-point decimal with `places` digits after the point,
/// rounded toward negative infinity (`down`) or positive infinity.
pub fn decimal(x: &BigRational, places: usize, down: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = x.numer() * &scale;
    let n = if down {
        scaled.div_floor(x.denom())
    } else {
        scaled.div_ceil(x.denom())
    };
    let sign = if n.is_negative() { "-" } else { "" };
    let digits = n.abs().to_string();
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    format!("{sign}{int}.{frac}")
}

impl std::fmt::Display for Interval {
    /// Outward-rounded to 6 decimals.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}]",
            decimal(&self.lo, 6, true),
            decimal(&self.hi, 6, false)
        )
    }
}

/// Enclosure of `sqrt(x)` for rational `x >= 0` with width at most `2^-bits`.
pub fn sqrt_enclosure(x: &BigRational, bits: u32) -> Interval {
    assert!(!x.is_negative(), "square root of a negative rational");
    // floor(sqrt(x * 4^bits)) / 2^bits <= sqrt(x) < (that + 1) / 2^bits
    let scale = pow2(2 * bits);
    let scaled = (x.numer() * &scale).div_floor(x.denom());
    let r = scaled.sqrt();
    let exact = &r * &r == scaled && (x.numer() * &scale) % x.denom() == BigInt::zero();
    let lo = BigRational::new(r.clone(), pow2(bits));
    let hi = if exact {
        lo.clone()
    } else {
        BigRational::new(r + 1, pow2(bits))
    };
    Interval::new(lo, hi)
}

/// `atanh(y)` for rational `|y| <= 1/2`, enclosed to about `2^-bits`.
fn atanh_enclosure(y: &BigRational, bits: u32) -> Interval {
    assert!(y.abs() <= BigRational::new(1.into(), 2.into()));
    if y.is_zero() {
        return Interval::from_int(0);
    }
    let y2 = y * y;
    let mut power = y.clone();
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    let guard = bits + 8;
    let target = BigRational::new(BigInt::one(), pow2(bits + 2));
    let mut k: u64 = 0;
    loop {
        let term = &power / BigRational::from_integer(BigInt::from(2 * k + 1));
        lo = round_down(&(&lo + &term), guard);
        hi = round_up(&(&hi + &term), guard);
        power = round_toward_zero(&(&power * &y2), guard + 16);
        k += 1;
        // remaining terms are bounded by |y|^(2k+1) / ((2k+1)(1 - y^2))
        let bound = power.abs() * BigRational::new(4.into(), 3.into());
        if bound < target {
            if y.is_positive() {
                hi += &bound;
            } else {
                lo -= &bound;
            }
            // each rounding of `power` loses at most 2^-(guard+16); after j steps the
            // error in a term is at most j times that, so k^2 bounds the total
            let slack = BigRational::new(BigInt::from((k + 1) * (k + 1)), pow2(guard + 16));
            return Interval::new(lo - &slack, hi + &slack);
        }
    }
}

fn round_toward_zero(x: &BigRational, bits: u32) -> BigRational {
    if x.is_negative() {
        round_up(x, bits)
    } else {
        round_down(x, bits)
    }
}

/// Enclosure of `ln 2`.
pub fn ln2_enclosure(bits: u32) -> Interval {
    // ln 2 = 2 atanh(1/3)
    atanh_enclosure(&BigRational::new(1.into(), 3.into()), bits + 2)
        .scale(&BigRational::from_integer(2.into()))
        .rounded(bits + 1)
}

/// Enclosure of `ln x` for rational `x > 0`.
pub fn ln_enclosure(x: &BigRational, bits: u32) -> Interval {
    assert!(x.is_positive(), "logarithm of a nonpositive rational");
    // x = 2^k * m with m in [2/3, 4/3), then ln m = 2 atanh((m-1)/(m+1))
    let mut k: i64 = bit_length(x.numer()) as i64 - bit_length(x.denom()) as i64;
    let two = BigRational::from_integer(2.into());
    let mut m = x / pow2_signed(k);
    let lower = BigRational::new(2.into(), 3.into());
    let upper = BigRational::new(4.into(), 3.into());
    while m < lower {
        m *= &two;
        k -= 1;
    }
    while m >= upper {
        m /= &two;
        k += 1;
    }
    let one = BigRational::one();
    let y = (&m - &one) / (&m + &one);
    let extra = bit_length(&BigInt::from(k.unsigned_abs())) as u32 + 2;
    let lnm = atanh_enclosure(&y, bits + 2).scale(&two);
    let ln2 = ln2_enclosure(bits + extra);
    let sum = &lnm + &ln2.scale(&BigRational::from_integer(k.into()));
    sum.rounded(bits + 1)
}

fn pow2_signed(k: i64) -> BigRational {
    if k >= 0 {
        BigRational::from_integer(pow2(k as u32))
    } else {
        BigRational::new(BigInt::one(), pow2((-k) as u32))
    }
}

fn bit_length(n: &BigInt) -> u64 {
    n.bits()
}

/// `floor(sqrt(n))` for a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}
