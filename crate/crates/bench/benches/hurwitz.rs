use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hurwitz::geometry::explore_automaton;
use hurwitz::spectrum::{build_xi, encode_base_b, schedule_from_tau, XiVariant};
use hurwitz::zaremba::{
    brute_force_min_k, certify, verify_certificate, ZarembaBase, DEFAULT_ORACLE_CAP,
};
use hurwitz::{convergents, hcf_expand, GaussianInt, GaussianRational};
use num_rational::BigRational;

fn expansion(c: &mut Criterion) {
    let cert = certify(ZarembaBase::Three, 64).unwrap();
    let z = GaussianRational::new(cert.numerator.clone(), cert.denominator()).unwrap();
    c.bench_function("hcf_expand over 3^64", |bench| {
        bench.iter(|| hcf_expand(black_box(&z)).unwrap())
    });
    let e = hcf_expand(&z).unwrap();
    c.bench_function("convergent table", |bench| {
        bench.iter(|| convergents(black_box(&e.to_cf())))
    });
}

fn zaremba(c: &mut Criterion) {
    let cert = certify(ZarembaBase::Three, 64).unwrap();
    c.bench_function("verify 3^64 certificate", |bench| {
        bench.iter(|| verify_certificate(black_box(&cert)))
    });
    let den = GaussianInt::from_i64(-2, 1).pow(6);
    c.bench_function("oracle (-2+i)^6", |bench| {
        bench.iter(|| brute_force_min_k(black_box(&den), DEFAULT_ORACLE_CAP).unwrap())
    });
}

fn geometry(c: &mut Criterion) {
    let mut g = c.benchmark_group("automaton");
    g.sample_size(10);
    g.bench_function("explore", |bench| {
        bench.iter(|| explore_automaton().unwrap())
    });
    g.finish();
}

fn spectrum(c: &mut Criterion) {
    let b = GaussianInt::from_i64(-2, 1);
    let tau = BigRational::new(5.into(), 2.into());
    let one = BigRational::from_integer(1.into());
    let s = schedule_from_tau(&tau, &one, &b, 8).unwrap();
    let seed = [b.pow(s.schedule.v0())];
    let mut g = c.benchmark_group("xi");
    g.sample_size(10);
    g.bench_function("tau 5/2, 5 stages", |bench| {
        bench.iter(|| build_xi(&b, &seed, black_box(&s.schedule), XiVariant::General, 5).unwrap())
    });
    g.finish();
    let z = GaussianInt::from_i64(-31_415_926, 27_182_818).pow(8);
    c.bench_function("encode base -2+i", |bench| {
        bench.iter(|| encode_base_b(black_box(&z), &b).unwrap())
    });
}

criterion_group!(benches, expansion, zaremba, geometry, spectrum);
criterion_main!(benches);
