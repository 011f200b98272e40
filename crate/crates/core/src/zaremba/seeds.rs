//! Hand-listed starting fractions for each supported base, exactly as
//! quoted in the classical constructions.

use super::ZarembaBase;
use crate::cf::parse_digit_list;
use crate::gaussian::GaussianInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub base: ZarembaBase,
    pub power: u32,
    pub numerator: GaussianInt,
    /// Digits as quoted; not necessarily the canonical expansion.
    pub digits: Vec<GaussianInt>,
}

fn seed(base: ZarembaBase, power: u32, numerator: &str, digits: &str) -> Seed {
    Seed {
        base,
        power,
        numerator: numerator.parse().expect("seed numerator"),
        digits: parse_digit_list(digits).expect("seed digits"),
    }
}

/// Every quoted seed, both signs of the complex bases.
pub fn printed_seeds() -> Vec<Seed> {
    use ZarembaBase::*;
    let table: &[(ZarembaBase, u32, &str, &str)] = &[
        (MinusThreePlusI, 1, "1", "-3+i"),
        (MinusThreePlusI, 2, "2+3i", "-3i, -2-3i"),
        (MinusThreeMinusI, 1, "1", "-3-i"),
        (MinusThreeMinusI, 2, "2-3i", "3i, -2+3i"),
        (MinusTwoPlusI, 1, "1", "-2+i"),
        (MinusTwoPlusI, 2, "2i", "-2-i, 2i"),
        (MinusTwoPlusI, 3, "2-4i", "-2+i, -2+i, 2-i"),
        (MinusTwoPlusI, 4, "5-6i", "2-3i, -1-2i, -3+i"),
        (MinusTwoPlusI, 5, "13-11i", "3i, 1-3i, 2-i, -2-2i"),
        (MinusTwoPlusI, 6, "27-38i", "-1-3i, 1-2i, 1-2i, -3-2i, 2-3i"),
        (MinusTwoPlusI, 7, "-97i", "3i, 3+3i, -2-2i, 3i, 1-3i"),
        (MinusTwoMinusI, 1, "1", "-2-i"),
        (MinusTwoMinusI, 2, "-2i", "-2+i, -2i"),
        (MinusTwoMinusI, 3, "2+4i", "-2-i, -2-i, 2+i"),
        (MinusTwoMinusI, 4, "5+6i", "2+3i, -1+2i, -3-i"),
        (MinusTwoMinusI, 5, "13+11i", "-3i, 1+3i, 2+i, -2+2i"),
        (
            MinusTwoMinusI,
            6,
            "27+38i",
            "-1+3i, 1+2i, 1+2i, -3+2i, 2+3i",
        ),
        (MinusTwoMinusI, 7, "97i", "-3i, 3-3i, -2+2i, -3i, 1+3i"),
        (Two, 1, "-1", "-2"),
        (Two, 2, "1", "4"),
        (Two, 3, "3", "3, -3"),
        (Two, 4, "5", "3, 5"),
        (Two, 5, "9", "4, -2, -4"),
        (Two, 6, "17", "4, -4, -4"),
        (Two, 7, "19", "7, -4, 5"),
        (Two, 8, "79", "3, 4, 6, 3"),
        (Two, 9, "71", "7, 5, -4, -4"),
        (Two, 10, "165", "6, 5, -7, 5"),
        (Two, 11, "423", "5, -6, -3, -5, -4"),
        (Two, 12, "557", "7, 3, -6, 5, -7"),
        (Two, 13, "1453", "6, -3, 4, 5, -5, -5"),
        (Three, 1, "1", "3"),
        (Three, 2, "4", "2, 4"),
        (Three, 3, "10", "3, -3, -3"),
        (Three, 4, "19", "4, 4, -5"),
        (Three, 5, "50", "5, -7, -7"),
        (Three, 6, "107", "7, -5, -3, 7"),
        (Three, 7, "323", "7, -4, -3, 4, -7"),
        (Five, 1, "1", "5"),
        (Five, 2, "6", "4, 6"),
    ];
    table.iter().map(|&(b, k, n, d)| seed(b, k, n, d)).collect()
}

/// The quoted seed for `(base, power)`, if one exists.
pub fn printed_seed(base: ZarembaBase, power: u32) -> Option<Seed> {
    printed_seeds()
        .into_iter()
        .find(|s| s.base == base && s.power == power)
}
