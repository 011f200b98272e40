//! Positional expansions in base `b = -A ± i`, digits `{0, ..., A^2}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, GaussianRational};

/// A base of the form `-A + s i`, `A >= 1`, `s = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KataiSzaboBase {
    value: GaussianInt,
    a: u64,
    s: i64,
}

impl KataiSzaboBase {
    pub fn new(b: &GaussianInt) -> Result<KataiSzaboBase> {
        let bad = || Error::NotKataiSzaboBase(b.to_string());
        let a = (-b.re()).to_u64().filter(|&a| a >= 1).ok_or_else(bad)?;
        let s = b.im().to_i64().filter(|s| s.abs() == 1).ok_or_else(bad)?;
        Ok(KataiSzaboBase {
            value: b.clone(),
            a,
            s,
        })
    }

    pub fn value(&self) -> &GaussianInt {
        &self.value
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// `A^2 + 1`, the number of digits.
    pub fn norm(&self) -> u64 {
        self.a * self.a + 1
    }

    /// The digit `d` with `z ≡ d (mod b)`: `i` reduces to `s A`.
    fn digit(&self, z: &GaussianInt) -> u64 {
        let n = BigInt::from(self.norm());
        let r = (z.re() + z.im() * BigInt::from(self.s) * BigInt::from(self.a)).mod_floor(&n);
        r.to_u64().expect("residue below the norm")
    }
}

/// `sum_j digits[j] b^{j - shift}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitExpansion {
    pub base: GaussianInt,
    /// Least significant first.
    pub digits: Vec<u64>,
    pub shift: u64,
}

impl DigitExpansion {
    pub fn value(&self) -> Result<GaussianRational> {
        let b = &self.base;
        let mut acc = GaussianInt::zero();
        for &d in self.digits.iter().rev() {
            acc = &(&acc * b) + &GaussianInt::from_i64(d as i64, 0);
        }
        GaussianRational::new(acc, b.pow(self.shift))
    }

    /// Whether every digit lies in `allowed`.
    pub fn digits_within(&self, allowed: &[u64]) -> bool {
        self.digits.iter().all(|d| allowed.contains(d))
    }

    /// Positions (in powers of `b^{-1}`) of nonzero fractional digits.
    pub fn fractional_support(&self) -> Vec<u64> {
        self.digits
            .iter()
            .enumerate()
            .filter(|&(j, &d)| d != 0 && (j as u64) < self.shift)
            .map(|(j, _)| self.shift - j as u64)
            .collect()
    }
}

impl fmt::Display for DigitExpansion {
    /// Most significant digit first; a `.` marks the radix point when the
    /// expansion has a fractional part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        // digits above 9 need a separator
        let sep = if self.base.norm() > BigInt::from(10) {
            ","
        } else {
            ""
        };
        let shift = self.shift as usize;
        let len = self.digits.len().max(shift + 1);
        let mut out = String::new();
        for j in (0..len).rev() {
            if j + 1 == shift {
                out.push('.');
            } else if j + 1 < len {
                out.push_str(sep);
            }
            out.push_str(&self.digits.get(j).copied().unwrap_or(0).to_string());
        }
        write!(f, "{out}")
    }
}

/// Greedy extraction: at each step the unique digit with `(z - d)/b` integral.
pub fn encode_base_b(z: &GaussianInt, base: &GaussianInt) -> Result<DigitExpansion> {
    let ks = KataiSzaboBase::new(base)?;
    let mut z = z.clone();
    let mut digits = Vec::new();
    // the number of digits is O(log |z|); the cap only guards bugs
    let cap = 64 + 8 * (z.norm().bits() as usize + 1);
    while !z.is_zero() {
        if digits.len() > cap {
            return Err(Error::Verification(format!(
                "expansion of {z} does not terminate"
            )));
        }
        let d = ks.digit(&z);
        let shifted = &z - &GaussianInt::from_i64(d as i64, 0);
        z = shifted
            .checked_div_exact(base)
            .expect("digit makes z divisible by b");
        digits.push(d);
    }
    Ok(DigitExpansion {
        base: base.clone(),
        digits,
        shift: 0,
    })
}

/// Expansion of `r / b^v`: the integer expansion of `r` shifted by `v`.
pub fn encode_fraction(r: &GaussianInt, v: u64, base: &GaussianInt) -> Result<DigitExpansion> {
    let mut e = encode_base_b(r, base)?;
    e.shift = v;
    Ok(e)
}

pub fn decode_base_b(e: &DigitExpansion) -> Result<GaussianRational> {
    e.value()
}

/// `sum_{k} b^{-e_k}` over distinct exponents, as an exact fraction with
/// denominator `b^{max e}`; its expansion has digit 1 exactly at the `e_k`.
pub fn lacunary_fraction(exponents: &[u64], base: &GaussianInt) -> Result<DigitExpansion> {
    KataiSzaboBase::new(base)?;
    let top = exponents.iter().copied().max().unwrap_or(0);
    let mut r = GaussianInt::zero();
    for &e in exponents {
        r += &base.pow(top - e);
    }
    encode_fraction(&r, top, base)
}
