use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qroot_bench::{env_fixture, fun_fixture};
use qroot_core::duality;
use qroot_core::envalg;
use qroot_core::funalg;
use qroot_core::integral;
use qroot_core::Field;
use std::hint::black_box;

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("product");
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        let a = fun_fixture(f, 2, 8);
        let u = env_fixture(f, 2, 8);
        g.bench_with_input(BenchmarkId::new("A", p), &a, |b, a| b.iter(|| black_box(a[0].mul(&a[1]))));
        g.bench_with_input(BenchmarkId::new("U", p), &u, |b, u| b.iter(|| black_box(u[0].mul(&u[1]))));
    }
    g.finish();
}

fn scalars(c: &mut Criterion) {
    let mut g = c.benchmark_group("scalar");
    for p in [3u32, 7, 13] {
        let f = Field::Root(p);
        let x = &(&f.frac(3, 7) + &f.q_pow(2)) + &(&f.i() * &f.q_pow(p as i64 - 2));
        let y = &f.qint(3) + &f.q_half(1);
        g.bench_with_input(BenchmarkId::new("mul", p), &(x.clone(), y), |b, (x, y)| b.iter(|| black_box(x * y)));
        g.bench_with_input(BenchmarkId::new("inv", p), &x, |b, x| b.iter(|| black_box(x.inv().unwrap())));
    }
    g.finish();
}

fn coproducts(c: &mut Criterion) {
    let mut g = c.benchmark_group("coproduct");
    for p in [3u32, 5, 7] {
        let f = Field::Root(p);
        let a = fun_fixture(f, 1, 8).remove(0);
        let u = env_fixture(f, 1, 8).remove(0);
        g.bench_with_input(BenchmarkId::new("A", p), &a, |b, a| b.iter(|| black_box(funalg::coproduct(a))));
        g.bench_with_input(BenchmarkId::new("U", p), &u, |b, u| b.iter(|| black_box(envalg::coproduct(u))));
        g.bench_with_input(BenchmarkId::new("antipode-A", p), &a, |b, a| b.iter(|| black_box(funalg::antipode(a).unwrap())));
    }
    g.finish();
}

fn pairing(c: &mut Criterion) {
    let mut g = c.benchmark_group("pairing");
    g.sample_size(10);
    for p in [3u32, 5] {
        let f = Field::Root(p);
        let a = fun_fixture(f, 1, 8).remove(0);
        let u = env_fixture(f, 1, 8).remove(0);
        g.bench_with_input(BenchmarkId::new("pair", p), &(u.clone(), a.clone()), |b, (u, a)| {
            b.iter(|| black_box(duality::pair(u, a).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("regular-action", p), &a, |b, a| {
            b.iter(|| black_box(duality::regular_action(&envalg::e_plus(f), a, duality::Side::Right)))
        });
        g.bench_with_input(BenchmarkId::new("axiom-suite-100", p), &f, |b, f| {
            b.iter(|| black_box(duality::axiom_check(*f, 2, 100, 1, false).unwrap()))
        });
    }
    g.bench_function("axiom-suite-exhaustive/3", |b| {
        b.iter(|| black_box(duality::axiom_check(Field::Root(3), 1, 0, 1, true).unwrap()))
    });
    g.finish();
}

fn integrals(c: &mut Criterion) {
    let mut g = c.benchmark_group("integral");
    g.sample_size(10);
    for p in [3u32, 5] {
        let f = Field::Root(p);
        g.bench_with_input(BenchmarkId::new("coset-signature", p), &f, |b, f| {
            b.iter(|| {
                let basis = integral::coset_gram_basis(*f).unwrap();
                black_box(integral::gram_signature(&basis, integral::Form::P).unwrap())
            })
        });
    }
    g.finish();
}

criterion_group!(benches, scalars, products, coproducts, pairing, integrals);
criterion_main!(benches);
