//! Strict generalized-circle constraints `A(x^2 + y^2) + Bx + Cy + D < 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::gaussian::{GaussianInt, GaussianRational};

/// `{(x, y) : A(x^2 + y^2) + Bx + Cy + D < 0}` with a primitive integer
/// coefficient vector. A line when `A = 0`.
///
/// In complex form this is `A|z|^2 + beta conj(z) + conj(beta) z + D < 0`
/// with `beta = (B + iC) / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenCircle {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl GenCircle {
    /// Builds the constraint after dividing out the content. Returns `None`
    /// for the all-zero vector.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Option<Self> {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        if g.is_zero() {
            return None;
        }
        Some(GenCircle {
            a: a / &g,
            b: b / &g,
            c: c / &g,
            d: d / &g,
        })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        GenCircle::new(a.into(), b.into(), c.into(), d.into()).expect("nonzero coefficients")
    }

    /// From the complex form `a|z|^2 + beta conj(z) + conj(beta) z + c < 0`.
    pub fn from_complex(a: &BigRational, beta: &GaussianRational, c: &BigRational) -> Option<Self> {
        let (b1, b2) = beta.components();
        let two = BigRational::from_integer(2.into());
        let coeffs = [a.clone(), &b1 * &two, &b2 * &two, c.clone()];
        let den = coeffs
            .iter()
            .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        GenCircle::new(
            ints[0].clone(),
            ints[1].clone(),
            ints[2].clone(),
            ints[3].clone(),
        )
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn is_line(&self) -> bool {
        self.a.is_zero()
    }

    /// The same constraint set pulled back through `z -> 1/z`: the image
    /// of `{f < 0} \ {0}` under inversion.
    pub fn inverted(&self) -> GenCircle {
        GenCircle {
            a: self.d.clone(),
            b: self.b.clone(),
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Image under `z -> z + t`.
    pub fn translated(&self, t: &GaussianInt) -> GenCircle {
        let (t1, t2) = (t.re(), t.im());
        let two_a = &self.a * 2;
        let b = &self.b - &two_a * t1;
        let c = &self.c - &two_a * t2;
        let d = &self.a * t.norm() - &self.b * t1 - &self.c * t2 + &self.d;
        GenCircle::new(self.a.clone(), b, c, d).expect("translation preserves nonzero vectors")
    }

    /// `{f > 0}`: the open complement of the closed set `{f <= 0}`.
    pub fn complement(&self) -> GenCircle {
        GenCircle {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Exact value of `f` at a rational point.
    pub fn value(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let a = BigRational::from_integer(self.a.clone());
        let b = BigRational::from_integer(self.b.clone());
        let c = BigRational::from_integer(self.c.clone());
        let d = BigRational::from_integer(self.d.clone());
        a * (x * x + y * y) + b * x + c * y + d
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        self.value(x, y).is_negative()
    }

    /// Membership of the point `(x/s, y/s)` for a positive integer scale,
    /// using machine integers when the coefficients are small.
    pub fn contains_scaled(&self, x: i64, y: i64, s: i64) -> bool {
        if let (Some(a), Some(b), Some(c), Some(d)) = (
            self.a.to_i64(),
            self.b.to_i64(),
            self.c.to_i64(),
            self.d.to_i64(),
        ) {
            let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
            let (x, y, s) = (x as i128, y as i128, s as i128);
            let v = a
                .checked_mul(x * x + y * y)
                .and_then(|t| t.checked_add(s.checked_mul(b * x + c * y)?))
                .and_then(|t| t.checked_add(d.checked_mul(s * s)?));
            if let Some(v) = v {
                return v < 0;
            }
        }
        let (x, y, s) = (BigInt::from(x), BigInt::from(y), BigInt::from(s));
        let v =
            &self.a * (&x * &x + &y * &y) + &s * (&self.b * &x + &self.c * &y) + &self.d * &s * &s;
        v.is_negative()
    }

    /// Exact `(min, max)` of `f` over the closed square `[-1/2, 1/2]^2`.
    pub fn range_on_unit_square(&self) -> (BigRational, BigRational) {
        let a = BigRational::from_integer(self.a.clone());
        let d = BigRational::from_integer(self.d.clone());
        let (xmin, xmax) = quadratic_range(&a, &BigRational::from_integer(self.b.clone()));
        let (ymin, ymax) = quadratic_range(&a, &BigRational::from_integer(self.c.clone()));
        (&xmin + &ymin + &d, &xmax + &ymax + &d)
    }
}

/// Range of `a t^2 + b t` over `t in [-1/2, 1/2]`.
fn quadratic_range(a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
    let half = BigRational::new(1.into(), 2.into());
    let g = |t: &BigRational| a * t * t + b * t;
    let mut vals = vec![g(&-&half), g(&half)];
    if !a.is_zero() {
        let vertex = -b / (a * BigRational::from_integer(2.into()));
        if vertex.abs() <= half {
            vals.push(g(&vertex));
        }
    }
    let lo = vals.iter().min().unwrap().clone();
    let hi = vals.iter().max().unwrap().clone();
    (lo, hi)
}

impl fmt::Display for GenCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(x^2+y^2) + {}x + {}y + {} < 0",
            self.a, self.b, self.c, self.d
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn primitive_form() {
        let c = GenCircle::from_i64(0, 4, 0, -2);
        assert_eq!(c, GenCircle::from_i64(0, 2, 0, -1));
        assert!(GenCircle::new(0.into(), 0.into(), 0.into(), 0.into()).is_none());
    }

    #[test]
    fn inversion_of_right_edge() {
        // Re z < 1/2 becomes |w - 1| > 1
        let edge = GenCircle::from_i64(0, 2, 0, -1);
        let inv = edge.inverted();
        assert_eq!(inv, GenCircle::from_i64(-1, 2, 0, 0));
        // w = 3 lies outside the disc, w = 1 inside
        assert!(inv.contains(&r(3, 1), &r(0, 1)));
        assert!(!inv.contains(&r(1, 1), &r(0, 1)));
        assert!(edge.contains(&r(1, 3), &r(0, 1)));
        assert_eq!(inv.inverted(), edge);
    }

    #[test]
    fn translation_moves_membership() {
        let disc = GenCircle::from_i64(1, 0, 0, -1);
        let t = GaussianInt::from_i64(2, -1);
        let moved = disc.translated(&t);
        assert!(moved.contains(&r(2, 1), &r(-1, 1)));
        assert!(!moved.contains(&r(0, 1), &r(0, 1)));
        assert_eq!(moved.translated(&-t), disc);
    }

    #[test]
    fn complex_form() {
        // |z|^2 - (z + conj z) < 0 is the disc |z - 1| < 1
        let beta = GaussianRational::from_i64(-1, 0);
        let c = GenCircle::from_complex(&r(1, 1), &beta, &r(0, 1)).unwrap();
        assert_eq!(c, GenCircle::from_i64(1, -2, 0, 0));
    }

    #[test]
    fn scaled_membership_agrees() {
        let c = GenCircle::from_i64(3, -7, 5, 1);
        for x in -9..=9 {
            for y in -9..=9 {
                assert_eq!(
                    c.contains_scaled(x, y, 16),
                    c.contains(&r(x, 16), &r(y, 16))
                );
            }
        }
    }

    #[test]
    fn square_range() {
        let c = GenCircle::from_i64(1, 0, 0, -1);
        let (lo, hi) = c.range_on_unit_square();
        assert_eq!(lo, r(-1, 1));
        assert_eq!(hi, r(-1, 2));
    }
}
