//! Folding schedules: the exponents `v_n = u_n + 2 v_{n-1}` that drive the
//! construction, either from a prescribed exponent `tau` or from an
//! approximation function `Psi`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::radix::KataiSzaboBase;
use crate::error::{Error, Result};
use crate::exact::{ln2_enclosure, ln_enclosure, Interval};
use crate::gaussian::GaussianInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingSchedule {
    v: Vec<u64>,
    u: Vec<u64>,
}

impl FoldingSchedule {
    pub fn new(v0: u64, u: Vec<u64>) -> Result<FoldingSchedule> {
        if v0 == 0 {
            return Err(Error::StageViolation {
                stage: 0,
                reason: "v0 must be positive".into(),
            });
        }
        let mut v = vec![v0];
        for (n, &un) in u.iter().enumerate() {
            let next = v[n]
                .checked_mul(2)
                .and_then(|w| w.checked_add(un))
                .ok_or_else(|| Error::StageViolation {
                    stage: n + 1,
                    reason: "exponent overflows u64".into(),
                })?;
            v.push(next);
        }
        Ok(FoldingSchedule { v, u })
    }

    pub fn v0(&self) -> u64 {
        self.v[0]
    }

    /// `v_0, v_1, ..., v_len`.
    pub fn v(&self) -> &[u64] {
        &self.v
    }

    /// `u_1, ..., u_len`.
    pub fn u(&self) -> &[u64] {
        &self.u
    }

    /// Number of folds the schedule describes.
    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }
}

/// Schedule for the series `sum_{n >= start} b^{-floor(lambda tau^n)}`.
#[derive(Clone, Debug)]
pub struct TauSchedule {
    pub tau: BigRational,
    pub lambda: BigRational,
    /// Least integer not below `n_0(lambda, tau)`.
    pub start: u32,
    pub schedule: FoldingSchedule,
}

impl TauSchedule {
    /// `floor(lambda tau^n)`.
    pub fn exponent(&self, n: u32) -> Result<u64> {
        floor_power(&self.lambda, &self.tau, n)
    }

    /// Exponents of the series terms preceding `v_0`.
    pub fn head_exponents(&self) -> Result<Vec<u64>> {
        (self.start..self.start + 3)
            .map(|n| self.exponent(n))
            .collect()
    }
}

fn floor_power(lambda: &BigRational, tau: &BigRational, n: u32) -> Result<u64> {
    let x = lambda * num_traits::pow(tau.clone(), n as usize);
    x.floor()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::StageViolation {
            stage: n as usize,
            reason: "exponent overflows u64".into(),
        })
}

/// `1 + max(0, floor(log(3/lambda)/log tau), log 3/log|b|)`, rounded up,
/// decided by integer power comparisons.
fn series_start(tau: &BigRational, lambda: &BigRational, norm: &BigInt) -> u32 {
    let three_over = BigRational::from_integer(3.into()) / lambda;
    // largest m with tau^m <= 3/lambda (only m >= 0 matters)
    let mut f = 0u32;
    let mut p = tau.clone();
    while p <= three_over {
        f += 1;
        p *= tau;
    }
    // least k with |b|^k >= 3, i.e. N^k >= 9
    let mut r = 0u32;
    let mut q = BigInt::one();
    while q < BigInt::from(9) {
        r += 1;
        q *= norm;
    }
    1 + f.max(r)
}

pub fn schedule_from_tau(
    tau: &BigRational,
    lambda: &BigRational,
    base: &GaussianInt,
    count: usize,
) -> Result<TauSchedule> {
    if *tau < BigRational::from_integer(2.into()) {
        return Err(Error::InvalidTau);
    }
    if !lambda.is_positive() {
        return Err(Error::InvalidLambda);
    }
    let norm = base.norm();
    if norm < BigInt::from(2) {
        return Err(Error::NotKataiSzaboBase(base.to_string()));
    }
    let start = series_start(tau, lambda, &norm);
    let vs: Vec<u64> = (0..=count as u32)
        .map(|n| floor_power(lambda, tau, n + 3 + start))
        .collect::<Result<_>>()?;
    let u: Vec<u64> = vs
        .windows(2)
        .enumerate()
        .map(|(n, w)| {
            w[1].checked_sub(2 * w[0])
                .ok_or_else(|| Error::StageViolation {
                    stage: n + 1,
                    reason: "v_n < 2 v_{n-1}".into(),
                })
        })
        .collect::<Result<_>>()?;
    if *tau == BigRational::from_integer(2.into()) {
        if let Some(n) = u.iter().position(|&x| x > 1) {
            return Err(Error::StageViolation {
                stage: n + 1,
                reason: format!("u_n = {} outside {{0, 1}} for tau = 2", u[n]),
            });
        }
    }
    let schedule = FoldingSchedule::new(vs[0], u)?;
    debug_assert_eq!(schedule.v(), &vs[..]);
    Ok(TauSchedule {
        tau: tau.clone(),
        lambda: lambda.clone(),
        start,
        schedule,
    })
}

/// `Psi(x) = x^{-t} (log(1 + x))^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Psi {
    pub t: BigRational,
    pub s: BigRational,
}

impl Psi {
    /// Accepts exactly the members with `x^2 Psi(x)` decreasing to 0:
    /// `t >= 2`, `s >= 0`, not both at the boundary.
    pub fn new(t: BigRational, s: BigRational) -> Result<Psi> {
        let two = BigRational::from_integer(2.into());
        if t < two || s.is_negative() || (t == two && s.is_zero()) {
            return Err(Error::UnsupportedPsi(format!("t = {t}, s = {s}")));
        }
        Ok(Psi { t, s })
    }
}

/// Per-stage evidence for a `Psi` schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiStage {
    pub n: usize,
    pub u: u64,
    /// `2 < |b|^{v_{n+1}} Psi(|b|^{v_n}) <= 2|b|`, decided.
    pub invariant: bool,
    /// `u - 1` violates the strict lower inequality.
    pub minimal: bool,
}

#[derive(Clone, Debug)]
pub struct PsiSchedule {
    pub schedule: FoldingSchedule,
    pub stages: Vec<PsiStage>,
}

const MAX_BITS: u32 = 4096;

/// `ln|b|`, `ln 2` and `ln ln(1 + |b|^v)` to the given precision.
struct LogData {
    ell: Interval,
    ln2: Interval,
}

fn log_data(norm: &BigInt, bits: u32) -> LogData {
    let half = BigRational::new(1.into(), 2.into());
    LogData {
        ell: ln_enclosure(&BigRational::from_integer(norm.clone()), bits).scale(&half),
        ln2: ln2_enclosure(bits),
    }
}

fn lnln(ell: &Interval, v: u64, bits: u32) -> Interval {
    // ln(1 + X) lies in [ln X, ln X + 1/X] and X >= 2^{floor(v/2)}
    let vq = BigRational::from_integer(v.into());
    let lo = &ell.lo * &vq;
    let slack = BigRational::new(BigInt::one(), BigInt::one() << (v / 2));
    let hi = &ell.hi * &vq + slack;
    Interval::new(ln_enclosure(&lo, bits).lo, ln_enclosure(&hi, bits).hi)
}

/// `ln(|b|^u |b|^{2v} Psi(|b|^v)) - ln 2`, enclosed.
fn excess(psi: &Psi, d: &LogData, v: u64, u: i64, bits: u32) -> Interval {
    let coeff = BigRational::from_integer(u.into())
        + (BigRational::from_integer(2.into()) - &psi.t) * BigRational::from_integer(v.into());
    let main = d.ell.scale(&coeff);
    let log_part = if psi.s.is_zero() {
        Interval::from_int(0)
    } else {
        lnln(&d.ell, v, bits).scale(&psi.s)
    };
    &(&main - &log_part) - &d.ln2
}

/// Sign of `excess`, refining until decided.
fn excess_sign(psi: &Psi, norm: &BigInt, v: u64, u: i64) -> Result<std::cmp::Ordering> {
    let mut bits = 64;
    loop {
        let d = log_data(norm, bits);
        if let Some(o) = excess(psi, &d, v, u, bits).compare(&Interval::from_int(0)) {
            return Ok(o);
        }
        bits *= 2;
        if bits > MAX_BITS {
            return Err(Error::Verification(format!(
                "cannot separate |b|^u |b|^(2v) Psi(|b|^v) from 2 at v = {v}, u = {u}"
            )));
        }
    }
}

/// `u_1 = 1`, then `u_{n+1}` is the least positive `u` with
/// `2 < |b|^u |b|^{2 v_n} Psi(|b|^{v_n})`.
pub fn schedule_from_psi(
    psi: &Psi,
    base: &GaussianInt,
    v0: u64,
    count: usize,
) -> Result<PsiSchedule> {
    let norm = base.norm();
    if norm < BigInt::from(2) {
        return Err(Error::NotKataiSzaboBase(base.to_string()));
    }
    let mut u = vec![1u64];
    let mut v = vec![v0, 2 * v0 + 1];
    let mut stages = Vec::new();
    while u.len() < count {
        let vn = *v.last().expect("nonempty");
        // first guess from a coarse enclosure, then walk to the boundary
        let d = log_data(&norm, 64);
        let zero = excess(psi, &d, vn, 0, 64);
        let guess = (-&zero.lo / &d.ell.lo)
            .floor()
            .to_integer()
            .to_i64()
            .unwrap_or(1)
            .max(1);
        let mut k = guess;
        while k > 1 && excess_sign(psi, &norm, vn, k - 1)? == std::cmp::Ordering::Greater {
            k -= 1;
        }
        while excess_sign(psi, &norm, vn, k)? != std::cmp::Ordering::Greater {
            k += 1;
        }
        let un = k as u64;
        let minimal = un == 1 || excess_sign(psi, &norm, vn, k - 1)? != std::cmp::Ordering::Greater;
        // upper half of the invariant: excess <= ln|b|
        let mut bits = 64;
        let upper = loop {
            let d = log_data(&norm, bits);
            let e = excess(psi, &d, vn, k, bits);
            if let Some(o) = e.compare(&d.ell) {
                break o != std::cmp::Ordering::Greater;
            }
            bits *= 2;
            if bits > MAX_BITS {
                break false;
            }
        };
        stages.push(PsiStage {
            n: u.len(),
            u: un,
            invariant: upper,
            minimal,
        });
        u.push(un);
        v.push(un + 2 * vn);
    }
    u.truncate(count);
    Ok(PsiSchedule {
        schedule: FoldingSchedule::new(v0, u)?,
        stages,
    })
}

/// Interleaves `u` with free even slots: `w_1 = 1`, `w_{2n} = 1 + bits[n-1]`,
/// `w_{2n+1} = u_n`.
pub fn w_variant_from_bits(
    schedule: &FoldingSchedule,
    base: &GaussianInt,
    bits: &[bool],
) -> Result<FoldingSchedule> {
    let ks = KataiSzaboBase::new(base)?;
    if ks.a() < 2 {
        return Err(Error::VariantNeedsLargerBase);
    }
    let mut w = vec![1u64];
    for (n, &un) in schedule.u().iter().enumerate() {
        w.push(if bits.get(n).copied().unwrap_or(false) {
            2
        } else {
            1
        });
        w.push(un);
    }
    FoldingSchedule::new(schedule.v0(), w)
}

/// `count` distinct interleavings, numbered by the bit pattern of their even
/// slots (first slot least significant).
pub fn w_variant_schedules(
    schedule: &FoldingSchedule,
    base: &GaussianInt,
    count: usize,
) -> Result<Vec<FoldingSchedule>> {
    let slots = schedule.len();
    if slots < usize::BITS as usize && count > 1usize << slots {
        return Err(Error::StageViolation {
            stage: slots,
            reason: format!("only 2^{slots} interleavings exist"),
        });
    }
    (0..count)
        .map(|k| {
            let bits: Vec<bool> = (0..slots)
                .map(|j| j < usize::BITS as usize && (k >> j) & 1 == 1)
                .collect();
            w_variant_from_bits(schedule, base, &bits)
        })
        .collect()
}
