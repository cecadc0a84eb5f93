use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lieindex::algebra::{lower_lie_powers, upper_lie_powers};
use lieindex::catalog::{table1_report, Catalog};
use lieindex::classify::{verify_biconditional, CaseVReading};
use lieindex::dseq::{feasible_set, scan_report, DSeqProblem};
use lieindex::jennings_data;

fn dseq(c: &mut Criterion) {
    let k14 = DSeqProblem::for_k(2, 5, 14).unwrap();
    c.bench_function("feasible_set p=2 n=5 k=14", |b| b.iter(|| feasible_set(black_box(&k14))));
    let wide = DSeqProblem::for_k(2, 10, 14).unwrap();
    c.bench_function("feasible_set p=2 n=10 k=14", |b| b.iter(|| feasible_set(black_box(&wide))));
    let primes = [2, 3, 5, 7, 11, 13, 17, 19, 23];
    let ns: Vec<u32> = (1..=10).collect();
    c.bench_function("scan k=14,15", |b| b.iter(|| scan_report(&primes, &ns, &[14, 15]).unwrap()));
}

fn groups(c: &mut Criterion) {
    let cat = Catalog::builtin_order_32();
    let g = &cat.entries()[48].group;
    c.bench_function("jennings_data order 32", |b| b.iter(|| jennings_data(black_box(g), 2).unwrap().t_upper));
    c.bench_function("upper Lie powers order 32", |b| b.iter(|| upper_lie_powers(black_box(g), 2, None).unwrap()));
    c.bench_function("lower Lie powers order 32", |b| b.iter(|| lower_lie_powers(black_box(g), 2, None).unwrap()));
    c.bench_function("table1 with fingerprints", |b| {
        b.iter(|| {
            let fresh = Catalog::builtin_order_32();
            table1_report(&fresh).unwrap()
        })
    });
    c.bench_function("verify_biconditional order 32, k=14", |b| {
        b.iter(|| verify_biconditional(black_box(g), 2, 14, &cat, CaseVReading::AsPrinted).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = dseq, groups
}
criterion_main!(benches);
