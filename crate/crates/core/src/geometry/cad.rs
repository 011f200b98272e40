//! Exact nonemptiness of finite intersections of open generalized discs and
//! half-planes, by a one-level cylindrical decomposition.
//!
//! Critical abscissae are the x-extremes of circles, vertical lines and the
//! pairwise boundary intersections. They are numbers `p + q sqrt(r)` with
//! rational `p, q, r`, ordered exactly. Between consecutive criticals the
//! vertical slice has constant combinatorics, so one rational sample per
//! interval suffices; each slice is then decided the same way in `y`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::constraint::GenCircle;
use crate::exact::sqrt_enclosure;

/// `p + q sqrt(r)` with `r >= 0`.
#[derive(Clone, Debug)]
pub struct Surd {
    pub p: BigRational,
    pub q: BigRational,
    pub r: BigRational,
}

impl Surd {
    pub fn rational(p: BigRational) -> Self {
        Surd {
            p,
            q: BigRational::zero(),
            r: BigRational::zero(),
        }
    }

    fn is_rational(&self) -> bool {
        self.q.is_zero() || self.r.is_zero()
    }

    fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        if self.is_rational() {
            return (self.p.clone(), self.p.clone());
        }
        let s = sqrt_enclosure(&self.r, bits);
        let a = &self.p + &self.q * &s.lo;
        let b = &self.p + &self.q * &s.hi;
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `p + q sqrt(d)`.
fn sign_one(p: &BigRational, q: &BigRational, d: &BigRational) -> i32 {
    let sp = sign(p);
    let sq = if d.is_zero() { 0 } else { sign(q) };
    if sq == 0 {
        return sp;
    }
    if sp == 0 || sp == sq {
        return sq;
    }
    // opposite signs: compare p^2 with q^2 d
    sp * sign(&(p * p - q * q * d))
}

/// Sign of `a + b sqrt(d1) + c sqrt(d2)`.
fn sign_two(
    a: &BigRational,
    b: &BigRational,
    d1: &BigRational,
    c: &BigRational,
    d2: &BigRational,
) -> i32 {
    let su = sign_one(a, b, d1);
    let sv = if d2.is_zero() { 0 } else { sign(c) };
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    // U and V of opposite signs: sign(U + V) = sign(U) * sign(U^2 - V^2)
    let two = BigRational::from_integer(2.into());
    let p = a * a + b * b * d1 - c * c * d2;
    let q = two * a * b;
    su * sign_one(&p, &q, d1)
}

pub fn compare(x: &Surd, y: &Surd) -> Ordering {
    let a = &x.p - &y.p;
    let c = -&y.q;
    match sign_two(&a, &x.q, &x.r, &c, &y.r) {
        1 => Ordering::Greater,
        -1 => Ordering::Less,
        _ => Ordering::Equal,
    }
}

/// A dyadic rational strictly between `x < y`.
fn rational_between(x: &Surd, y: &Surd) -> BigRational {
    let mut bits = 8;
    loop {
        let (_, xh) = x.enclosure(bits);
        let (yl, _) = y.enclosure(bits);
        if xh < yl {
            return (xh + yl) / BigRational::from_integer(2.into());
        }
        bits *= 2;
        assert!(
            bits < 1 << 16,
            "failed to separate distinct algebraic numbers"
        );
    }
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Roots of `alpha t^2 + beta t + gamma = 0` (or the linear case).
fn quadratic_roots(alpha: &BigRational, beta: &BigRational, gamma: &BigRational) -> Vec<Surd> {
    if alpha.is_zero() {
        if beta.is_zero() {
            return Vec::new();
        }
        return vec![Surd::rational(-gamma / beta)];
    }
    let disc = beta * beta - BigRational::from_integer(4.into()) * alpha * gamma;
    if disc.is_negative() {
        return Vec::new();
    }
    let two_alpha = alpha * BigRational::from_integer(2.into());
    let p = -beta / &two_alpha;
    if disc.is_zero() {
        return vec![Surd::rational(p)];
    }
    let q = BigRational::one() / &two_alpha;
    vec![
        Surd {
            p: p.clone(),
            q: q.clone(),
            r: disc.clone(),
        },
        Surd { p, q: -q, r: disc },
    ]
}

/// x-coordinates where the line `Bx + Cy + D = 0` meets the boundary of `f`.
fn line_meets(line: (&BigInt, &BigInt, &BigInt), f: &GenCircle) -> Vec<Surd> {
    let (lb, lc, ld) = (rat(line.0), rat(line.1), rat(line.2));
    let (a, b, c, d) = f.coefficients();
    let (a, b, c, d) = (rat(a), rat(b), rat(c), rat(d));
    if lc.is_zero() {
        if lb.is_zero() {
            return Vec::new();
        }
        return vec![Surd::rational(-&ld / &lb)];
    }
    // substitute y = -(lb x + ld) / lc and clear lc^2
    let two = BigRational::from_integer(2.into());
    let alpha = &a * (&lc * &lc + &lb * &lb);
    let beta = &two * &a * &lb * &ld + &b * &lc * &lc - &c * &lc * &lb;
    let gamma = &a * &ld * &ld - &c * &lc * &ld + &d * &lc * &lc;
    quadratic_roots(&alpha, &beta, &gamma)
}

fn critical_abscissae(cs: &[GenCircle]) -> Vec<Surd> {
    let mut out = Vec::new();
    for f in cs {
        let (a, b, c, d) = f.coefficients();
        if a.is_zero() {
            if c.is_zero() && !b.is_zero() {
                out.push(Surd::rational(-rat(d) / rat(b)));
            }
            continue;
        }
        // centre -B/2A, squared radius (B^2 + C^2 - 4AD) / 4A^2
        let two_a = rat(a) * BigRational::from_integer(2.into());
        let cx = -rat(b) / &two_a;
        let r2 = rat(&(b * b + c * c - BigInt::from(4) * a * d)) / (&two_a * &two_a);
        if r2.is_negative() {
            continue;
        }
        out.push(Surd {
            p: cx.clone(),
            q: BigRational::one(),
            r: r2.clone(),
        });
        out.push(Surd {
            p: cx,
            q: -BigRational::one(),
            r: r2,
        });
    }
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let (a1, b1, c1, d1) = cs[i].coefficients();
            let (a2, b2, c2, d2) = cs[j].coefficients();
            // radical line a2 f1 - a1 f2, or the line itself
            let (lb, lc, ld, circle) = if a1.is_zero() && a2.is_zero() {
                // two lines
                let det = b1 * c2 - b2 * c1;
                if !det.is_zero() {
                    let x = BigRational::new(c1 * d2 - c2 * d1, det);
                    out.push(Surd::rational(x));
                }
                continue;
            } else if a1.is_zero() {
                (b1.clone(), c1.clone(), d1.clone(), &cs[j])
            } else if a2.is_zero() {
                (b2.clone(), c2.clone(), d2.clone(), &cs[i])
            } else {
                (
                    a2 * b1 - a1 * b2,
                    a2 * c1 - a1 * c2,
                    a2 * d1 - a1 * d2,
                    &cs[i],
                )
            };
            if lb.is_zero() && lc.is_zero() {
                // same or concentric circles
                continue;
            }
            out.extend(line_meets((&lb, &lc, &ld), circle));
        }
    }
    out
}

/// Sorted distinct values, then one rational point inside every gap and one
/// beyond each end.
fn sample_points(mut values: Vec<Surd>) -> Vec<BigRational> {
    if values.is_empty() {
        return vec![BigRational::zero()];
    }
    values.sort_by(compare);
    values.dedup_by(|a, b| compare(a, b) == Ordering::Equal);
    let mut out = Vec::with_capacity(values.len() + 1);
    let (lo, _) = values[0].enclosure(8);
    out.push(lo - BigRational::one());
    for w in values.windows(2) {
        out.push(rational_between(&w[0], &w[1]));
    }
    let (_, hi) = values[values.len() - 1].enclosure(8);
    out.push(hi + BigRational::one());
    out
}

/// A rational point inside every constraint, or `None` when the open
/// intersection is empty.
pub fn witness(cs: &[GenCircle]) -> Option<(BigRational, BigRational)> {
    for x in sample_points(critical_abscissae(cs)) {
        if let Some(y) = slice_witness(cs, &x) {
            return Some((x, y));
        }
    }
    None
}

fn slice_witness(cs: &[GenCircle], x: &BigRational) -> Option<BigRational> {
    let mut roots = Vec::new();
    for f in cs {
        let (a, b, c, d) = f.coefficients();
        let (a, b, c, d) = (rat(a), rat(b), rat(c), rat(d));
        // A y^2 + C y + e with e = A x^2 + B x + D
        let e = &a * x * x + &b * x + &d;
        if a.is_zero() && c.is_zero() {
            if !e.is_negative() {
                return None;
            }
            continue;
        }
        roots.extend(quadratic_roots(&a, &c, &e));
    }
    sample_points(roots)
        .into_iter()
        .find(|y| cs.iter().all(|f| f.contains(x, y)))
}
