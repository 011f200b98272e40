use hurwitz::spectrum::*;
use hurwitz::{Error, GaussianInt, GaussianRational};
use num_rational::BigRational;

fn g(re: i64, im: i64) -> GaussianInt {
    GaussianInt::from_i64(re, im)
}

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn w_variants_give_distinct_numbers() {
    for b in [g(-3, 1), g(-2, -1)] {
        let s = schedule_from_tau(&r(5, 2), &r(1, 1), &b, 6).unwrap();
        let ws = w_variant_schedules(&s.schedule, &b, 4).unwrap();
        assert_eq!(ws.len(), 4);
        let built: Vec<XiNumber> = ws
            .iter()
            .map(|w| build_xi(&b, &[b.pow(w.v0())], w, XiVariant::General, 4).unwrap())
            .collect();
        for (i, x) in built.iter().enumerate() {
            assert!(x.all_checks_pass(), "{b} variant {i}");
            for y in &built[i + 1..] {
                assert_ne!(x.stage_value(4).unwrap(), y.stage_value(4).unwrap());
            }
        }
        // stage 3 sees only the first free slot
        assert_eq!(
            built[0].stage_value(3).unwrap(),
            built[2].stage_value(3).unwrap()
        );
        assert_ne!(
            built[0].stage_value(3).unwrap(),
            built[1].stage_value(3).unwrap()
        );
    }
    let s = schedule_from_tau(&r(5, 2), &r(1, 1), &g(-1, 1), 4).unwrap();
    assert_eq!(
        w_variant_schedules(&s.schedule, &g(-1, 1), 2).unwrap_err(),
        Error::VariantNeedsLargerBase
    );
}

#[test]
fn psi_schedules_feed_the_construction() {
    let b = g(-2, 1);
    let power = schedule_from_psi(&Psi::new(r(5, 2), r(0, 1)).unwrap(), &b, 2, 10).unwrap();
    assert!(power.stages.iter().all(|s| s.invariant && s.minimal));
    let logged = schedule_from_psi(&Psi::new(r(2, 1), r(1, 1)).unwrap(), &b, 2, 10).unwrap();
    assert!(logged.schedule.u()[1..].windows(2).all(|w| w[0] < w[1]));
    for p in [power, logged] {
        let xi = build_xi(&b, &[b.pow(2)], &p.schedule, XiVariant::General, 6).unwrap();
        assert!(xi.all_checks_pass());
        assert!(xi
            .stages
            .iter()
            .all(|s| s.canonicity == Canonicity::Expanded));
    }
    assert!(matches!(
        Psi::new(r(2, 1), r(0, 1)),
        Err(Error::UnsupportedPsi(_))
    ));
}

#[test]
fn lacunary_series_lives_in_the_zero_one_digit_set() {
    let b = g(-2, 1);
    let s = schedule_from_tau(&r(5, 2), &r(1, 1), &b, 3).unwrap();
    let mut exps = s.head_exponents().unwrap();
    exps.extend_from_slice(s.schedule.v());
    let e = lacunary_fraction(&exps, &b).unwrap();
    assert!(e.digits_within(&[0, 1]));
    let mut support = e.fractional_support();
    support.sort_unstable();
    assert_eq!(support, exps);
    let sums = lacunary_partial_sums(&s, &b, 3).unwrap();
    assert_eq!(e.value().unwrap(), sums[3]);
}

#[test]
fn general_seed_stream_matches_series() {
    let b = g(-2, 1);
    let seed = hurwitz::hcf_expand(&GaussianRational::new(g(5, -6), b.pow(4)).unwrap()).unwrap();
    let s = FoldingSchedule::new(4, vec![3, 4, 5, 6, 7, 8]).unwrap();
    let xi = build_xi(&b, &seed.digits, &s, XiVariant::General, 4).unwrap();
    assert!(xi.all_checks_pass());
    for m in 1..=4 {
        assert_eq!(xi.stages[m - 1].len, (1 << m) * (seed.len() + 1) - 1);
        let direct =
            hurwitz::evaluate(&hurwitz::CfSequence::from_tail(xi.stage_digits(m).to_vec()))
                .unwrap();
        assert_eq!(direct, xi.stage_value(m).unwrap());
    }
    // the seed (2-3i, -1-2i, -3+i) is not made of large digits, yet full
    assert!(build_xi(&b, &[g(1, 1)], &s, XiVariant::General, 1).is_err());
}
