mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn determinant(z in rational()) { determinant_identity(z)?; }

    #[test]
    fn growth(z in rational()) { denominators_grow(z)?; }

    #[test]
    fn approximation(z in rational()) { hurwitz_bound(z)?; }

    #[test]
    fn folding(input in fold_input()) { folding_identity(input)?; }

    #[test]
    fn round_trip(z in rational()) { hcf_round_trip(z)?; }

    #[test]
    fn radix(input in radix_input()) { radix_round_trip(input)?; }
}
