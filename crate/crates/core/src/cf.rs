//! Finite continued fractions `[a0; a1, ..., an]` over `Z[i]`: evaluation,
//! convergents and the folding identity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, GaussianRational};

/// `[head; tail...]`. No digit restriction applies at this level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CfSequence {
    pub head: GaussianInt,
    pub tail: Vec<GaussianInt>,
}

impl CfSequence {
    pub fn new(head: GaussianInt, tail: Vec<GaussianInt>) -> Self {
        CfSequence { head, tail }
    }

    /// `[0; tail...]`.
    pub fn from_tail(tail: Vec<GaussianInt>) -> Self {
        CfSequence {
            head: GaussianInt::zero(),
            tail,
        }
    }

    /// Number of tail terms, the `n` of `p_n / q_n`.
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }
}

/// Convergent pairs `(p_k, q_k)` for `k = -1, 0, ..., n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentTable {
    p: Vec<GaussianInt>,
    q: Vec<GaussianInt>,
}

impl ConvergentTable {
    /// Index of the last pair.
    pub fn last_index(&self) -> usize {
        self.p.len() - 2
    }

    fn slot(&self, n: isize) -> Result<usize> {
        let last = self.last_index();
        if n < -1 || n > last as isize {
            return Err(Error::IndexOutOfRange {
                index: n.max(0) as usize,
                last,
            });
        }
        Ok((n + 1) as usize)
    }

    /// `p_n` for `-1 <= n <= last`.
    pub fn p(&self, n: isize) -> Result<&GaussianInt> {
        Ok(&self.p[self.slot(n)?])
    }

    /// `q_n` for `-1 <= n <= last`.
    pub fn q(&self, n: isize) -> Result<&GaussianInt> {
        Ok(&self.q[self.slot(n)?])
    }

    /// `(p_n, q_n)` for `n >= 0`.
    pub fn pair(&self, n: usize) -> Result<(&GaussianInt, &GaussianInt)> {
        Ok((self.p(n as isize)?, self.q(n as isize)?))
    }

    pub fn last_pair(&self) -> (&GaussianInt, &GaussianInt) {
        (&self.p[self.p.len() - 1], &self.q[self.q.len() - 1])
    }

    /// `p_n / q_n` as a reduced Gaussian rational.
    pub fn convergent(&self, n: usize) -> Result<GaussianRational> {
        let (p, q) = self.pair(n)?;
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // consecutive convergents satisfy the determinant identity, so p and q are coprime
        GaussianRational::from_coprime(p.clone(), q.clone())
    }

    /// `q_n p_{n-1} - q_{n-1} p_n`, which equals `(-1)^n`.
    pub fn determinant(&self, n: usize) -> Result<GaussianInt> {
        let n = n as isize;
        Ok(self.q(n)? * self.p(n - 1)? - self.q(n - 1)? * self.p(n)?)
    }

    pub fn denominators(&self) -> &[GaussianInt] {
        &self.q[1..]
    }

    pub fn numerators(&self) -> &[GaussianInt] {
        &self.p[1..]
    }
}

/// One step of the two-term recurrence.
pub fn recurrence_step(a: &GaussianInt, prev: &GaussianInt, prev2: &GaussianInt) -> GaussianInt {
    a * prev + prev2
}

pub fn convergents(cf: &CfSequence) -> ConvergentTable {
    let mut p = Vec::with_capacity(cf.len() + 2);
    let mut q = Vec::with_capacity(cf.len() + 2);
    p.push(GaussianInt::one());
    q.push(GaussianInt::zero());
    p.push(cf.head.clone());
    q.push(GaussianInt::one());
    for a in &cf.tail {
        let k = p.len();
        let pn = recurrence_step(a, &p[k - 1], &p[k - 2]);
        let qn = recurrence_step(a, &q[k - 1], &q[k - 2]);
        p.push(pn);
        q.push(qn);
    }
    ConvergentTable { p, q }
}

/// Exact value by back-substitution from the innermost term.
pub fn evaluate(cf: &CfSequence) -> Result<GaussianRational> {
    let (num, den) = evaluate_pair(cf)?;
    GaussianRational::from_coprime(num, den)
}

/// Unreduced numerator and denominator of the value, which are coprime
/// continuants.
pub fn evaluate_pair(cf: &CfSequence) -> Result<(GaussianInt, GaussianInt)> {
    let n = cf.tail.len();
    if n == 0 {
        return Ok((cf.head.clone(), GaussianInt::one()));
    }
    // x = num / den is the value of [a_k; a_{k+1}, ..., a_n]
    let mut num = cf.tail[n - 1].clone();
    let mut den = GaussianInt::one();
    if num.is_zero() {
        return Err(Error::UndefinedContinuedFraction { suffix: n });
    }
    for k in (1..n).rev() {
        let next = &cf.tail[k - 1] * &num + &den;
        den = num;
        num = next;
        if num.is_zero() {
            return Err(Error::UndefinedContinuedFraction { suffix: k });
        }
    }
    let value_num = &cf.head * &num + &den;
    Ok((value_num, num))
}

/// `[a0; a1..an, x, -an..-a1]`, whose value is `p_n/q_n + (-1)^n / (x q_n^2)`.
pub fn fold(cf: &CfSequence, x: &GaussianInt) -> Result<CfSequence> {
    if x.is_zero() {
        return Err(Error::ZeroFoldTerm);
    }
    if cf.tail.is_empty() {
        return Err(Error::EmptyTail);
    }
    let mut tail = Vec::with_capacity(2 * cf.tail.len() + 1);
    tail.extend(cf.tail.iter().cloned());
    tail.push(x.clone());
    tail.extend(mirror_negate(&cf.tail));
    Ok(CfSequence::new(cf.head.clone(), tail))
}

/// The `x = 1` fold with the unit term absorbed:
/// `[a0; a1..a_{n-1}, an + 1, an - 1, a_{n-1}..a1]`, of value
/// `p_n/q_n + (-1)^n / q_n^2`.
pub fn fold_unit(cf: &CfSequence) -> Result<CfSequence> {
    let n = cf.tail.len();
    if n == 0 {
        return Err(Error::EmptyTail);
    }
    let one = GaussianInt::one();
    let last = &cf.tail[n - 1];
    let mut tail = Vec::with_capacity(2 * n);
    tail.extend(cf.tail[..n - 1].iter().cloned());
    tail.push(last + &one);
    tail.push(last - &one);
    tail.extend(cf.tail[..n - 1].iter().rev().cloned());
    Ok(CfSequence::new(cf.head.clone(), tail))
}

/// The exact increment `(-1)^n / (x q_n^2)` promised by [`fold`].
pub fn fold_increment(cf: &CfSequence, x: &GaussianInt) -> Result<GaussianRational> {
    if x.is_zero() {
        return Err(Error::ZeroFoldTerm);
    }
    let table = convergents(cf);
    let (_, q) = table.last_pair();
    let sign = if cf.len().is_multiple_of(2) { 1 } else { -1 };
    GaussianRational::new(GaussianInt::from_i64(sign, 0), &(x * q) * q)
}

pub fn mirror(s: &[GaussianInt]) -> Vec<GaussianInt> {
    s.iter().rev().cloned().collect()
}

pub fn mirror_negate(s: &[GaussianInt]) -> Vec<GaussianInt> {
    s.iter().rev().map(|a| -a).collect()
}

impl fmt::Display for CfSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.head)?;
        for (k, a) in self.tail.iter().enumerate() {
            if k == 0 {
                write!(f, " {a}")?;
            } else {
                write!(f, ", {a}")?;
            }
        }
        write!(f, "]")
    }
}

/// Parses a comma-separated list of Gaussian integers.
pub fn parse_digit_list(s: &str) -> Result<Vec<GaussianInt>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse()).collect()
}

/// Accepts `[a0; a1, a2, ...]`, `[a1, a2, ...]` (head 0) and the same
/// without brackets.
impl FromStr for CfSequence {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s);
        match s.split_once(';') {
            Some((head, tail)) => Ok(CfSequence::new(
                head.trim().parse()?,
                parse_digit_list(tail)?,
            )),
            None => Ok(CfSequence::from_tail(parse_digit_list(s)?)),
        }
    }
}
