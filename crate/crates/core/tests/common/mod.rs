//! Strategies and property checks shared by the property suite and the
//! acceptance harness.

#![allow(dead_code)]

use hurwitz::spectrum::{decode_base_b, encode_base_b};
use hurwitz::{convergents, evaluate, fold, hcf_expand, CfSequence, GaussianInt, GaussianRational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 10_000;

pub fn gaussian(bound: i64) -> impl Strategy<Value = GaussianInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| GaussianInt::from_i64(a, b))
}

pub fn nonzero(bound: i64) -> impl Strategy<Value = GaussianInt> {
    gaussian(bound).prop_filter("nonzero", |z| !z.is_zero())
}

pub fn rational() -> impl Strategy<Value = GaussianRational> {
    (gaussian(1_000_000), nonzero(1_000_000))
        .prop_map(|(p, q)| GaussianRational::new(p, q).unwrap())
}

/// Digits of the Hurwitz alphabet with coordinates up to 6.
pub fn digit() -> impl Strategy<Value = GaussianInt> {
    gaussian(6).prop_filter("alphabet", |d| d.norm() > BigInt::one())
}

fn sign(n: usize) -> GaussianInt {
    GaussianInt::from_i64(if n.is_multiple_of(2) { 1 } else { -1 }, 0)
}

pub fn determinant_identity(z: GaussianRational) -> Result<(), TestCaseError> {
    let t = hcf_expand(&z).unwrap().convergents();
    for n in 0..=t.last_index() {
        prop_assert_eq!(t.determinant(n).unwrap(), sign(n));
    }
    Ok(())
}

pub fn denominators_grow(z: GaussianRational) -> Result<(), TestCaseError> {
    let t = hcf_expand(&z).unwrap().convergents();
    let q = t.denominators();
    for w in q.windows(2) {
        prop_assert!(w[1].norm() > w[0].norm(), "{} then {}", w[0], w[1]);
    }
    Ok(())
}

/// `|z - p_n/q_n| < 1/|q_n|^2`, squared: `|z q_n - p_n|^2 |q_n|^2 < 1`.
pub fn hurwitz_bound(z: GaussianRational) -> Result<(), TestCaseError> {
    let t = hcf_expand(&z).unwrap().convergents();
    for n in 0..=t.last_index() {
        let (p, q) = t.pair(n).unwrap();
        let zq = &z * &GaussianRational::from_int(q.clone());
        let gap = (&zq - &GaussianRational::from_int(p.clone())).norm();
        prop_assert!(
            gap * BigRational::from_integer(q.norm()) < BigRational::one(),
            "n = {}",
            n
        );
    }
    Ok(())
}

/// `evaluate(fold(cf, x)) - evaluate(cf) = (-1)^n / (x q_n^2)`.
pub fn folding_identity((tail, x): (Vec<GaussianInt>, GaussianInt)) -> Result<(), TestCaseError> {
    let cf = CfSequence::from_tail(tail);
    let (Ok(before), Ok(after)) = (evaluate(&cf), fold(&cf, &x).and_then(|f| evaluate(&f))) else {
        // some suffix evaluates to zero; the identity is about defined values
        return Err(TestCaseError::reject("undefined continued fraction"));
    };
    let n = cf.tail.len();
    let t = convergents(&cf);
    let qn = t.q(n as isize).unwrap();
    prop_assume!(!qn.is_zero());
    let expected = GaussianRational::new(sign(n), &x * &(qn * qn)).unwrap();
    prop_assert_eq!(&after - &before, expected);
    Ok(())
}

pub fn hcf_round_trip(z: GaussianRational) -> Result<(), TestCaseError> {
    let e = hcf_expand(&z).unwrap();
    prop_assert!(e.digits.iter().all(|d| d.norm() > BigInt::one()));
    prop_assert_eq!(e.evaluate().unwrap(), z);
    Ok(())
}

/// Bases `-A ± i` for `A` in 1..=3.
pub fn radix_base() -> impl Strategy<Value = GaussianInt> {
    (1i64..=3, prop::bool::ANY)
        .prop_map(|(a, up)| GaussianInt::from_i64(-a, if up { 1 } else { -1 }))
}

pub fn radix_round_trip((z, b): (GaussianInt, GaussianInt)) -> Result<(), TestCaseError> {
    let e = encode_base_b(&z, &b).unwrap();
    let a = (-b.re()).to_string().parse::<u64>().unwrap();
    prop_assert!(e.digits.iter().all(|&d| d <= a * a));
    prop_assert!(e.digits.last().is_none_or(|&d| d != 0));
    prop_assert_eq!(decode_base_b(&e).unwrap(), GaussianRational::from_int(z));
    Ok(())
}

pub fn radix_input() -> impl Strategy<Value = (GaussianInt, GaussianInt)> {
    (gaussian(1_000_000_000), radix_base())
}

pub fn fold_input() -> impl Strategy<Value = (Vec<GaussianInt>, GaussianInt)> {
    (prop::collection::vec(digit(), 1..12), nonzero(20))
}
