use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cbrauer::branching::restriction_row;
use cbrauer::cellular::cell_labels;
use cbrauer::repcalc::decomposition_matrix;
use cbrauer::truncation::TruncatedAlgebra;
use cbrauer::{CellModule, MComposition, Module};
use cbrauer_bench::{constant, generic};

fn products(c: &mut Criterion) {
    let alg = generic(2, 4);
    let basis = alg.basis();
    c.bench_function("mul_diagrams B_4^2, 64 pairs", |b| {
        b.iter(|| {
            for x in basis.iter().step_by(211).take(8) {
                for y in basis.iter().step_by(197).take(8) {
                    black_box(alg.mul_diagrams(x, y));
                }
            }
        })
    });
    c.bench_function("basis B_4^3", |b| b.iter(|| black_box(generic(3, 4).basis().len())));
}

fn modules(c: &mut Criterion) {
    let alg = generic(2, 4);
    let labels = cell_labels(&alg);
    c.bench_function("cell module generators B_4^2", |b| {
        b.iter(|| {
            for l in &labels {
                let cell = CellModule::new(&alg, l).unwrap();
                for (_, g) in alg.generators() {
                    black_box(cell.act(&g));
                }
            }
        })
    });
    let alg = generic(3, 3);
    let lambda = cell_labels(&alg)[0].clone();
    c.bench_function("restriction oracle B_3^3", |b| {
        b.iter(|| black_box(restriction_row(&alg, &lambda).unwrap()))
    });
}

fn structure(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure");
    g.sample_size(10);
    let alg = generic(3, 3);
    let omega = MComposition::new(vec![1, 1, 1]).unwrap();
    g.bench_function("truncation certificate B_3^3 (1,1,1)", |b| {
        b.iter(|| {
            let t = TruncatedAlgebra::new(&alg, &omega).unwrap();
            black_box(t.certificate(false).unwrap())
        })
    });
    let alg = constant(2, 3, 1);
    g.bench_function("decomposition matrix B_3^2 at delta 1", |b| {
        b.iter(|| black_box(decomposition_matrix(&alg).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, products, modules, structure);
criterion_main!(benches);
