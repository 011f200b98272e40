//! Exhaustive search for the numerator minimizing the largest Hurwitz digit
//! of `a/den`. Runs in machine integers, so it is limited to small norms.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, GaussianRational};
use crate::hcf::{hcf_expand, HcfExpansion};

/// Largest denominator norm accepted unless the caller raises it.
pub const DEFAULT_ORACLE_CAP: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub numerator: GaussianInt,
    pub k_sq: BigInt,
    pub expansion: HcfExpansion,
}

/// Nearest integer to `x / n` for `n > 0`, halves rounded up.
fn round_div(x: i64, n: i64) -> i64 {
    (2 * x + n).div_euclid(2 * n)
}

/// Largest digit norm of the Hurwitz expansion of `a / d`, or `None` when
/// the fraction is not in lowest terms or the running maximum exceeds
/// `limit`. Assumes `a / d` already lies in the fundamental square.
fn max_digit_norm(a: (i64, i64), d: (i64, i64), limit: u64) -> Option<u64> {
    let (mut p, mut q) = (a, d);
    let mut worst = 0u64;
    while p != (0, 0) {
        // digit = nearest(q / p) = nearest(q * conj(p) / |p|^2)
        let n = p.0 * p.0 + p.1 * p.1;
        let re = q.0 * p.0 + q.1 * p.1;
        let im = q.1 * p.0 - q.0 * p.1;
        let digit = (round_div(re, n), round_div(im, n));
        let dn = (digit.0 * digit.0 + digit.1 * digit.1) as u64;
        worst = worst.max(dn);
        if worst > limit {
            return None;
        }
        let rem = (
            q.0 - (digit.0 * p.0 - digit.1 * p.1),
            q.1 - (digit.0 * p.1 + digit.1 * p.0),
        );
        q = p;
        p = rem;
    }
    // q is now gcd(a, d) up to a unit
    (q.0.abs() + q.1.abs() == 1).then_some(worst)
}

/// The Zaremba optimum for `den`: the numerator `a` with `a/den` in the
/// fundamental square and coprime to `den` whose Hurwitz digits have the
/// smallest maximal norm. Ties go to the smaller real part, then the
/// smaller imaginary part.
pub fn brute_force_min_k(den: &GaussianInt, cap: u64) -> Result<OracleResult> {
    let norm = den.norm();
    if norm > BigInt::from(cap) || norm.is_zero() {
        return Err(Error::OracleCapExceeded {
            norm: norm.to_string(),
            cap: cap.to_string(),
        });
    }
    let d = (
        den.re().to_i64().expect("bounded by cap"),
        den.im().to_i64().expect("bounded by cap"),
    );
    let n = d.0 * d.0 + d.1 * d.1;
    if n == 1 {
        // every fraction is an integer; only a = 0 lies in the square
        return Err(Error::Verification(format!(
            "no proper fraction has denominator {den}"
        )));
    }
    // |a| <= |den| / sqrt(2) on the square
    let r = (n as f64 / 2.0).sqrt().ceil() as i64 + 1;
    let best = AtomicU64::new(u64::MAX);
    let winner = (-r..=r)
        .into_par_iter()
        .filter_map(|re| {
            let mut row: Option<(u64, i64, i64)> = None;
            for im in -r..=r {
                // a / den in the square: -n <= 2 Re(a conj(d)) < n, same for Im
                let x = re * d.0 + im * d.1;
                let y = im * d.0 - re * d.1;
                if !(-n <= 2 * x && 2 * x < n && -n <= 2 * y && 2 * y < n) {
                    continue;
                }
                if (re, im) == (0, 0) {
                    continue;
                }
                let limit = best.load(Ordering::Relaxed);
                if let Some(k) = max_digit_norm((re, im), d, limit) {
                    if row.is_none_or(|(bk, _, _)| k < bk) {
                        row = Some((k, re, im));
                        best.fetch_min(k, Ordering::Relaxed);
                    }
                }
            }
            row
        })
        .min()
        .ok_or_else(|| Error::Verification(format!("no coprime numerator for {den}")))?;

    let numerator = GaussianInt::from_i64(winner.1, winner.2);
    let expansion = hcf_expand(&GaussianRational::new(numerator.clone(), den.clone())?)?;
    let k_sq = expansion.max_digit_norm();
    if k_sq != BigInt::from(winner.0) {
        return Err(Error::Verification(format!(
            "machine and exact expansions of {numerator}/{den} disagree"
        )));
    }
    Ok(OracleResult {
        numerator,
        k_sq,
        expansion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_i64(re, im)
    }

    /// Independent scan: every residue with the exact expansion.
    fn slow_optimum(den: &GaussianInt) -> (BigInt, GaussianInt) {
        let n = den.norm().to_i64().unwrap();
        let r = n;
        let mut best: Option<(BigInt, i64, i64)> = None;
        for re in -r..=r {
            for im in -r..=r {
                let a = g(re, im);
                if a.is_zero() {
                    continue;
                }
                let z = GaussianRational::new(a.clone(), den.clone()).unwrap();
                if !z.in_fundamental_domain() || !crate::gauss_gcd(&a, den).unwrap().is_unit() {
                    continue;
                }
                let k = hcf_expand(&z).unwrap().max_digit_norm();
                let cand = (k, re, im);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let (k, re, im) = best.unwrap();
        (k, g(re, im))
    }

    #[test]
    fn tiny_denominators() {
        let two = brute_force_min_k(&g(2, 0), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(two.k_sq, BigInt::from(4));
        assert_eq!(two.numerator, g(-1, 0));
        let five = brute_force_min_k(&g(5, 0), DEFAULT_ORACLE_CAP).unwrap();
        let (k, a) = slow_optimum(&g(5, 0));
        assert_eq!((five.k_sq, five.numerator), (k, a));
    }

    #[test]
    fn agrees_with_exact_scan() {
        for den in [
            g(-2, 1),
            g(3, 0),
            g(4, 0),
            g(3, -4),
            g(-3, 1),
            g(2, 2),
            g(7, 1),
            g(8, 0),
        ] {
            let fast = brute_force_min_k(&den, DEFAULT_ORACLE_CAP).unwrap();
            let (k, a) = slow_optimum(&den);
            assert_eq!(fast.k_sq, k, "{den}");
            assert_eq!(fast.numerator, a, "{den}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            brute_force_min_k(&g(100, 0), 1000),
            Err(Error::OracleCapExceeded { .. })
        ));
    }
}
