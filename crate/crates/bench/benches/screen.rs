use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use slide_screen_bench::{dense_matrix, genus_two_sum};
use slide_screen_core::{
    brute_force_solutions, descent_reduce, fibonacci_solutions, make_figure_eight, make_trefoil,
    screening_form, smith_normal_form, EnumerationOptions, HomologyClass, ScreenConstraint,
};

fn bench_snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    for n in [4usize, 8, 12] {
        let a = dense_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| smith_normal_form(black_box(a)))
        });
    }
    group.finish();
}

fn bench_brute_force(c: &mut Criterion) {
    let constraint = ScreenConstraint::default();
    let mut group = c.benchmark_group("brute_force");
    for (name, h) in [
        ("trefoil", make_trefoil()),
        ("figure8", make_figure_eight()),
    ] {
        let q = screening_form(&h);
        for workers in [Some(1), None] {
            let opts = EnumerationOptions {
                workers,
                ..Default::default()
            };
            let id = format!(
                "{name}/{}",
                if workers.is_some() {
                    "serial"
                } else {
                    "parallel"
                }
            );
            group.bench_function(BenchmarkId::new(id, 200), |b| {
                b.iter(|| brute_force_solutions(&q, black_box(200), constraint, &opts))
            });
        }
    }
    let q = screening_form(&genus_two_sum());
    group.bench_function("genus2/6", |b| {
        b.iter(|| {
            brute_force_solutions(&q, black_box(6), constraint, &EnumerationOptions::default())
        })
    });
    group.finish();
}

fn bench_parametrized(c: &mut Criterion) {
    c.bench_function("fibonacci_solutions/1e15", |b| {
        b.iter(|| fibonacci_solutions(black_box(1_000_000_000_000_000)))
    });
    let h = make_figure_eight();
    let x = HomologyClass::genus1(1_134_903_170, 701_408_733);
    c.bench_function("descent_reduce/f45", |b| {
        b.iter(|| descent_reduce(&h, black_box(&x)))
    });
}

criterion_group!(benches, bench_snf, bench_brute_force, bench_parametrized);
criterion_main!(benches);
