use criterion::{criterion_group, criterion_main, Criterion};

use blattice::coxeter::{CayleyGraph, CoxeterDiagram, CoxeterGroup};
use blattice::lattice::BruhatLattice;
use blattice::sortable::GammaContext;

fn ctx(spec: &str) -> GammaContext {
    let group = CoxeterGroup::new(CoxeterDiagram::parse(spec).unwrap());
    let gamma = (0..group.rank()).collect();
    GammaContext::new(group, gamma)
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_sortables");
    for spec in ["B3", "H3", "F4"] {
        let context = ctx(spec);
        group.bench_function(spec, |b| {
            b.iter(|| context.enumerate_sortables(None).unwrap().len())
        });
    }
    group.finish();
}

fn bench_lattice_checks(c: &mut Criterion) {
    let lattice = BruhatLattice::build(ctx("H3"), None).unwrap();
    c.bench_function("h3_lattice_properties", |b| {
        b.iter(|| lattice.lattice_properties().unwrap())
    });
    c.bench_function("h3_mobius_table", |b| b.iter(|| lattice.mobius_table()));
    c.bench_function("h3_verify_sb", |b| b.iter(|| lattice.verify_sb().unwrap()));
}

fn bench_cayley(c: &mut Criterion) {
    let group = CoxeterGroup::new(CoxeterDiagram::parse("B3").unwrap());
    c.bench_function("b3_cayley_bfs", |b| {
        b.iter(|| CayleyGraph::generate(&group, None, 10_000).element_count())
    });
}

fn bench_sorting_word(c: &mut Criterion) {
    let context = ctx("H4");
    let w0_word: Vec<usize> = {
        // The longest element via repeated ascent climbing.
        let group = context.group().clone();
        let mut w = group.identity();
        loop {
            match (0..group.rank()).find(|&i| group.lengthens_on_right(&w, i)) {
                Some(i) => w = group.right_mul(&w, i),
                None => break w.word().to_vec(),
            }
        }
    };
    let group = context.group().clone();
    let w0 = group.reduce_word(&w0_word);
    assert_eq!(w0.length(), 60);
    c.bench_function("h4_sorting_word_of_w0", |b| {
        b.iter(|| context.gamma_sorting_word(&w0).len())
    });
}

criterion_group!(
    benches,
    bench_enumerate,
    bench_lattice_checks,
    bench_cayley,
    bench_sorting_word
);
criterion_main!(benches);
