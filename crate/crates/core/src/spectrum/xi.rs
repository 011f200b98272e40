//! Iterated folding: `xi_u = lim xi^n`, built both as a digit stream and as
//! a lacunary series, with the exact checks relating the two.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::schedule::{FoldingSchedule, TauSchedule};
use crate::cf::{fold, fold_unit, recurrence_step, CfSequence};
use crate::error::{Error, Result};
use crate::exact::{ln2_enclosure, ln_enclosure, sqrt_enclosure, Interval};
use crate::gaussian::{nearest_quotient, GaussianInt, GaussianRational};
use crate::geometry::validity::is_full;
use crate::hcf::{digit_in_alphabet, hcf_expand};

/// Which folding produces each stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiVariant {
    /// Fold with middle digit `b^{u_n}`.
    General,
    /// `u_n ∈ {0, 1}`: `u_n = 0` folds with `x = 1` (absorbed), `u_n = 1`
    /// with `x = b`.
    UnitFold,
}

/// How a stage's stream was certified to be a Hurwitz expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Canonicity {
    /// Every digit has norm at least 8.
    LargeDigits,
    /// A small middle digit appeared; the stage value was expanded exactly
    /// and matched the stream.
    Expanded,
}

#[derive(Clone, Debug)]
pub struct XiStage {
    pub m: usize,
    pub v: u64,
    pub u: u64,
    /// Stream digit right after the previous stage's prefix.
    pub middle: GaussianInt,
    pub len: usize,
    /// Series partial sum `xi^m = numerator / b^v`.
    pub numerator: GaussianInt,
    pub canonicity: Canonicity,
    /// Last convergent of this stage's own digits, kept when a later unit
    /// fold changes the pivot so the stage is no longer a prefix.
    own_convergent: Option<(GaussianInt, GaussianInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageCheck {
    pub m: usize,
    /// Convergent at the stage boundary equals the series partial sum.
    pub series_agrees: bool,
    /// That convergent equals `d_m / b^{v_m}`, `d_m` the nearest Gaussian
    /// integer to `b^{v_m} xi`.
    pub designated: bool,
    /// `(1/2)|b|^{-v_{m+1}} <= |xi - d_m/b^{v_m}| <= (3/2)|b|^{-v_{m+1}}`.
    pub sandwich: bool,
}

impl StageCheck {
    pub fn passed(&self) -> bool {
        self.series_agrees && self.designated && self.sandwich
    }
}

#[derive(Clone, Debug)]
pub struct XiNumber {
    pub base: GaussianInt,
    pub seed: Vec<GaussianInt>,
    pub schedule: FoldingSchedule,
    pub variant: XiVariant,
    /// Sign of the first series term, `(-1)^h eps^2` with `q_h = eps b^{v_0}`.
    pub first_sign: i8,
    pub seed_numerator: GaussianInt,
    pub stream: Vec<GaussianInt>,
    pub stages: Vec<XiStage>,
    pub checks: Vec<StageCheck>,
}

/// Last convergent `(p_h, q_h)` of a digit list.
fn last_convergent(digits: &[GaussianInt]) -> (GaussianInt, GaussianInt) {
    let (mut p1, mut p0) = (GaussianInt::zero(), GaussianInt::one());
    let (mut q1, mut q0) = (GaussianInt::one(), GaussianInt::zero());
    for a in digits {
        let p = recurrence_step(a, &p1, &p0);
        let q = recurrence_step(a, &q1, &q0);
        p0 = std::mem::replace(&mut p1, p);
        q0 = std::mem::replace(&mut q1, q);
    }
    (p1, q1)
}

fn large(d: &GaussianInt) -> bool {
    d.norm() >= BigInt::from(8)
}

/// Full and mirror-full, via the norm-8 criterion or the automaton.
fn check_seed(seed: &[GaussianInt]) -> Result<()> {
    if seed.is_empty() {
        return Err(Error::EmptyTail);
    }
    if let Some(d) = seed.iter().find(|d| !digit_in_alphabet(d)) {
        return Err(Error::DigitNotInAlphabet(d.to_string()));
    }
    if seed.iter().all(large) {
        return Ok(());
    }
    let back: Vec<GaussianInt> = seed.iter().rev().cloned().collect();
    if is_full(seed)? && is_full(&back)? {
        Ok(())
    } else {
        Err(Error::SeedNotFull)
    }
}

pub fn build_xi(
    base: &GaussianInt,
    seed: &[GaussianInt],
    schedule: &FoldingSchedule,
    variant: XiVariant,
    stages: usize,
) -> Result<XiNumber> {
    check_seed(seed)?;
    if schedule.len() < stages + 2 {
        return Err(Error::StageViolation {
            stage: stages,
            reason: format!(
                "schedule has {} folds; {stages} stages need two more for the tail bounds",
                schedule.len()
            ),
        });
    }
    let v = schedule.v();
    let bv0 = base.pow(v[0]);
    let eps = last_convergent(seed)
        .1
        .checked_div_exact(&bv0)
        .filter(GaussianInt::is_unit)
        .ok_or_else(|| Error::StageViolation {
            stage: 0,
            reason: format!("seed denominator is not a unit times b^{}", v[0]),
        })?;
    let h = seed.len();
    let eps_sq_negative = !(&eps * &eps).re().is_positive();
    let first_sign: i8 = if (h % 2 == 1) != eps_sq_negative {
        -1
    } else {
        1
    };

    let seed_cf = CfSequence::from_tail(seed.to_vec());
    let seed_value = crate::cf::evaluate(&seed_cf)?;
    let seed_numerator = seed_value.numer().clone()
        * bv0
            .checked_div_exact(seed_value.denom())
            .expect("seed value has denominator dividing b^v0");

    let mut cf = seed_cf;
    let mut numerator = seed_numerator.clone();
    let mut out = Vec::with_capacity(stages);
    for m in 1..=stages {
        let u = schedule.u()[m - 1];
        let prev_len = cf.tail.len();
        let x = base.pow(u);
        let (next, small) = match variant {
            XiVariant::General => {
                if u == 0 {
                    return Err(Error::StageViolation {
                        stage: m,
                        reason: "middle digit 1 needs the unit-fold variant".into(),
                    });
                }
                (fold(&cf, &x)?, !large(&x))
            }
            XiVariant::UnitFold => match u {
                0 => (fold_unit(&cf)?, false),
                1 => (fold(&cf, &x)?, !large(&x)),
                _ => {
                    return Err(Error::StageViolation {
                        stage: m,
                        reason: format!("unit-fold variant needs u in {{0, 1}}, got {u}"),
                    })
                }
            },
        };
        let sign: i64 = if m == 1 {
            first_sign as i64
        } else if prev_len % 2 == 1 {
            -1
        } else {
            1
        };
        numerator = &numerator * &base.pow(v[m] - v[m - 1]) + GaussianInt::from_i64(sign, 0);
        let canonicity = if small || !next.tail.iter().all(large) {
            // the norm-8 criterion does not apply; expand the stage exactly
            let value = GaussianRational::from_coprime(numerator.clone(), base.pow(v[m]))?;
            if hcf_expand(&value)?.to_cf() != next {
                return Err(Error::StageViolation {
                    stage: m,
                    reason: format!("middle digit {x} breaks the Hurwitz expansion"),
                });
            }
            Canonicity::Expanded
        } else {
            Canonicity::LargeDigits
        };
        out.push(XiStage {
            m,
            v: v[m],
            u,
            middle: next.tail[prev_len].clone(),
            len: next.tail.len(),
            numerator: numerator.clone(),
            canonicity,
            own_convergent: (variant == XiVariant::UnitFold).then(|| last_convergent(&next.tail)),
        });
        cf = next;
    }

    let mut xi = XiNumber {
        base: base.clone(),
        seed: seed.to_vec(),
        schedule: schedule.clone(),
        variant,
        first_sign,
        seed_numerator,
        stream: cf.tail,
        stages: out,
        checks: Vec::new(),
    };
    xi.checks = stage_checks(&xi)?;
    Ok(xi)
}

/// Rational upper bound for `|b| / (|b| - 1)`, so that a tail
/// `sum_{n > M} |b|^{-v_n}` with increasing `v_n` is at most this times
/// `|b|^{-v_{M+1}}`.
fn tail_factor(norm: &BigInt) -> Result<BigRational> {
    let root = sqrt_enclosure(&BigRational::from_integer(norm.clone()), 32);
    let below = &root.lo - BigRational::one();
    if !below.is_positive() {
        return Err(Error::Verification(
            "base too small for a geometric tail bound".into(),
        ));
    }
    Ok(&root.hi / below)
}

/// Tail exponents beyond this add nothing to the check; capping keeps the
/// integers small and only enlarges the error term.
const TAIL_CAP: u64 = 64;

/// `(1/2 + e)^2 <= |z|^2 / N^k <= (3/2 - e)^2` where `e = f N^{-j}` and
/// `j = min(floor(t / 2), TAIL_CAP)` bounds the tail `f |b|^{-t}` from above.
/// Pure integer cross-multiplication.
fn sandwich(z_norm: &BigInt, norm: &BigInt, k: u64, f: &BigRational, t: u64) -> bool {
    let nj = num_traits::pow(norm.clone(), (t / 2).min(TAIL_CAP) as usize);
    let (fnum, fden) = (f.numer(), f.denom());
    // 1/2 + e = lo / d and 3/2 - e = hi / d with d = 2 fden N^j
    let base = fden * &nj;
    let lo: BigInt = &base + fnum * 2u32;
    let hi: BigInt = &base * 3u32 - fnum * 2u32;
    if !hi.is_positive() {
        return false;
    }
    let d = base * 2u32;
    let nk = num_traits::pow(norm.clone(), k as usize);
    let mid = z_norm * &d * &d;
    &lo * &lo * &nk <= mid && mid <= &hi * &hi * &nk
}

fn stage_checks(xi: &XiNumber) -> Result<Vec<StageCheck>> {
    let b = &xi.base;
    let norm = b.norm();
    let v = xi.schedule.v();
    let n = xi.stages.len();
    let f = tail_factor(&norm)?;

    // convergents at the stage boundaries only
    let boundaries: Vec<usize> = xi.stages.iter().map(|s| s.len).collect();
    let mut at = Vec::with_capacity(n);
    let (mut p1, mut p0) = (GaussianInt::zero(), GaussianInt::one());
    let (mut q1, mut q0) = (GaussianInt::one(), GaussianInt::zero());
    let mut next = 0;
    for (k, a) in xi.stream.iter().enumerate() {
        let p = recurrence_step(a, &p1, &p0);
        let q = recurrence_step(a, &q1, &q0);
        p0 = std::mem::replace(&mut p1, p);
        q0 = std::mem::replace(&mut q1, q);
        if next < n && k + 1 == boundaries[next] {
            at.push((p1.clone(), q1.clone()));
            next += 1;
        }
    }

    let top = &xi.stages[n - 1];
    let mut checks = Vec::with_capacity(n);
    for (i, st) in xi.stages.iter().enumerate() {
        let m = st.m;
        let bvm = b.pow(st.v);
        let (p, q) = st.own_convergent.as_ref().unwrap_or(&at[i]);
        let series_agrees = p * &bvm == &st.numerator * q;
        let d = nearest_quotient(&top.numerator, &b.pow(top.v - st.v))?;
        let designated = p * &bvm == &d * q;

        // scaled distance to the limit: |xi - xi^m| |b|^{v_{m+1}}
        let sandwich = if m < n {
            let diff = &top.numerator - &(&st.numerator * &b.pow(top.v - st.v));
            sandwich(
                &diff.norm(),
                &norm,
                top.v - v[m + 1],
                &f,
                v[n + 1] - v[m + 1],
            )
        } else {
            // the first omitted term alone has scaled modulus 1
            sandwich(&BigInt::one(), &norm, 0, &f, v[n + 2] - v[n + 1])
        };
        checks.push(StageCheck {
            m,
            series_agrees,
            designated,
            sandwich,
        });
    }
    Ok(checks)
}

impl XiNumber {
    /// Final-stream prefix of stage `m`'s length. These are stage `m`'s own
    /// digits except after a unit fold, which shifts the pivot by one.
    pub fn stage_digits(&self, m: usize) -> &[GaussianInt] {
        let len = if m == 0 {
            self.seed.len()
        } else {
            self.stages[m - 1].len
        };
        &self.stream[..len]
    }

    pub fn stage_value(&self, m: usize) -> Result<GaussianRational> {
        let st = &self.stages[m - 1];
        GaussianRational::from_coprime(st.numerator.clone(), self.base.pow(st.v))
    }

    pub fn max_digit_norm(&self) -> BigInt {
        self.stream
            .iter()
            .map(GaussianInt::norm)
            .max()
            .unwrap_or_default()
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(StageCheck::passed)
    }

    /// Whether every stream digit has modulus at most
    /// `max seed digit modulus + |b| + 1`, compared on squares.
    pub fn digits_bounded(&self) -> bool {
        let m_sq = self
            .seed
            .iter()
            .map(GaussianInt::norm)
            .max()
            .unwrap_or_default();
        // (sqrt(M) + |b| + 1)^2 >= (floor sqrt M + lower(|b|) + 1)^2
        let m_lo = BigRational::from_integer(crate::exact::isqrt(&m_sq));
        let b_lo = sqrt_enclosure(&BigRational::from_integer(self.base.norm()), 32).lo;
        let bound = m_lo + b_lo + BigRational::one();
        let bound_sq = &bound * &bound;
        self.stream
            .iter()
            .all(|c| BigRational::from_integer(c.norm()) <= bound_sq)
    }
}

/// Number of decimal digits of `floor(|b|^v)` for a base of norm `norm`,
/// from log enclosures, with an exact fallback when they cannot decide.
pub fn modulus_digits(norm: &BigInt, v: u64) -> u64 {
    let n = BigRational::from_integer(norm.clone());
    let ten = BigRational::from_integer(10.into());
    let v_half = BigRational::new(v.into(), 2.into());
    let mut bits = 64;
    while bits <= 1024 {
        // log10 |b|^v = (v / 2) ln N / ln 10
        let ln_n = ln_enclosure(&n, bits);
        let ln10 = ln_enclosure(&ten, bits);
        let lo = (&v_half * &ln_n.lo / &ln10.hi).floor();
        let hi = (&v_half * &ln_n.hi / &ln10.lo).floor();
        if lo == hi {
            return lo.to_integer().to_u64().expect("digit count fits") + 1;
        }
        bits *= 2;
    }
    crate::exact::isqrt(&num_traits::pow(norm.clone(), v as usize))
        .to_string()
        .len() as u64
}

/// Rational enclosure of the irrationality exponent witnessed by one
/// designated convergent.
#[derive(Clone, Debug)]
pub struct ExponentBracket {
    pub m: usize,
    /// `v_{m+1} / v_m`.
    pub ratio: BigRational,
    pub bracket: Interval,
}

/// From the tail sandwich, `|xi - d_m/b^{v_m}| = |q|^{-mu_m}` with `|q| =
/// |b|^{v_m}` and `mu_m` in
/// `[v_{m+1}/v_m - ln(3/2)/(v_m ln|b|), v_{m+1}/v_m + ln 2/(v_m ln|b|)]`.
/// Stages whose sandwich failed are skipped.
pub fn estimate_exponent(xi: &XiNumber, depth: usize) -> Vec<ExponentBracket> {
    let bits = 64;
    let half = BigRational::new(1.into(), 2.into());
    let ell = ln_enclosure(&BigRational::from_integer(xi.base.norm()), bits).scale(&half);
    let ln2 = ln2_enclosure(bits);
    let ln15 = ln_enclosure(&BigRational::new(3.into(), 2.into()), bits);
    let v = xi.schedule.v();
    xi.checks
        .iter()
        .take(depth)
        .filter(|c| c.sandwich)
        .map(|c| {
            let m = c.m;
            let vm = BigRational::from_integer(v[m].into());
            let ratio = BigRational::new(v[m + 1].into(), v[m].into());
            let scale = &vm * &ell.lo;
            let lo = &ratio - &ln15.hi / &scale;
            let hi = &ratio + &ln2.hi / &scale;
            ExponentBracket {
                m,
                ratio,
                bracket: Interval::new(lo, hi),
            }
        })
        .collect()
}

/// Partial sums `sum_{n = start}^{start + 3 + k} b^{-floor(lambda tau^n)}`
/// for `k = 0..=count`, the last term of each being `b^{-v_k}`.
pub fn lacunary_partial_sums(
    s: &TauSchedule,
    base: &GaussianInt,
    count: usize,
) -> Result<Vec<GaussianRational>> {
    let mut exps = s.head_exponents()?;
    exps.extend_from_slice(&s.schedule.v()[..=count]);
    let mut acc = GaussianRational::zero();
    let mut out = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        acc = &acc + &GaussianRational::new(GaussianInt::one(), base.pow(e))?;
        if i >= 3 {
            out.push(acc.clone());
        }
    }
    Ok(out)
}

/// The sign `sigma` for which `lacunary partial sum - sigma xi^m` is the same
/// for every stage `m >= 1`, if any: the lacunary series is then an
/// integer-affine image of the constructed number.
pub fn affine_sign(xi: &XiNumber, s: &TauSchedule) -> Result<Option<i8>> {
    let sums = lacunary_partial_sums(s, &xi.base, xi.stages.len())?;
    let values = (1..=xi.stages.len())
        .map(|m| xi.stage_value(m))
        .collect::<Result<Vec<_>>>()?;
    for sigma in [1i8, -1] {
        let offsets: Vec<GaussianRational> = sums[1..]
            .iter()
            .zip(&values)
            .map(|(t, x)| if sigma == 1 { t - x } else { t + x })
            .collect();
        if offsets.windows(2).all(|w| w[0] == w[1]) {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}
