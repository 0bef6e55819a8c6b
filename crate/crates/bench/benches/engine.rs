use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use supercontact_core::contact::{hamiltonian_vf, reeb, OneForm};
use supercontact_core::lie::{
    maurer_cartan, standard_coset, LieAlgebraPresentation, DEFAULT_ORDER_CAP,
};
use supercontact_core::parse::{parse_expr, ParserContext};
use supercontact_core::verify::verify_paper;
use supercontact_core::{canonicalize, Chart, Coeff, RawExpr, SuperExpr};

fn expr(s: &str) -> SuperExpr {
    parse_expr(s, &ParserContext::new(Chart::r1n2())).unwrap()
}

fn algebra(c: &mut Criterion) {
    let a = expr("(1 + t + th*thb + eps*th)*(q(t) + i*th*psi(t) + i*psib(t)*thb)");
    let b = expr("t*t*t + lam*t - 2*i*th*dthb + eps*epsb*thb");
    c.bench_function("multiply", |bn| bn.iter(|| black_box(&a) * black_box(&b)));
    let ch = Chart::r1n2();
    let sum = |k: usize| {
        RawExpr::Add(
            (0..3)
                .map(|i| {
                    RawExpr::Mul(vec![
                        RawExpr::Num(Coeff::int((i + k) as i64)),
                        RawExpr::Gen(ch.coordinate(i)),
                        RawExpr::Gen(ch.differential((i + k) % 3)),
                    ])
                })
                .collect(),
        )
    };
    let raw = RawExpr::Mul((0..4).map(sum).collect());
    c.bench_function("canonicalize", |bn| {
        bn.iter(|| canonicalize(black_box(&raw)))
    });
}

fn contact(c: &mut Criterion) {
    let alpha = OneForm::standard_n2();
    c.bench_function("reeb", |bn| bn.iter(|| reeb(black_box(&alpha)).unwrap()));
    let ups = expr("a(t) + i*th*chi(t) + i*chib(t)*thb + i*th*thb*c(t)");
    c.bench_function("hamiltonian_vf", |bn| {
        bn.iter(|| hamiltonian_vf(black_box(&alpha), black_box(&ups)).unwrap())
    });
}

fn lie(c: &mut Criterion) {
    let alg = Arc::new(LieAlgebraPresentation::n2());
    let (chart, x) = standard_coset(&alg).unwrap();
    let chart = (*chart).clone();
    c.bench_function("maurer_cartan", |bn| {
        bn.iter(|| maurer_cartan(&chart, black_box(&x), DEFAULT_ORDER_CAP).unwrap())
    });
}

fn report(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("verify_paper", |bn| bn.iter(|| verify_paper(None)));
    g.finish();
}

criterion_group!(benches, algebra, contact, lie, report);
criterion_main!(benches);
