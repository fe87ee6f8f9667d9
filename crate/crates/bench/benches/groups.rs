use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zassenhaus_core::brute_force::{enumerate_psl2, generate_sz};
use zassenhaus_core::closed_form::valid_q_in_range;
use zassenhaus_core::{build_divgraph, classify_shape, psl2_table, sz_table, Family};

fn closed_form(c: &mut Criterion) {
    let qs = valid_q_in_range(Family::Psl2, 4, 1000);
    c.bench_function("psl2_table sweep q<=1000", |b| {
        b.iter(|| {
            for &q in &qs {
                black_box(psl2_table(q).unwrap());
            }
        })
    });
    c.bench_function("sz_table q=8192", |b| b.iter(|| sz_table(black_box(8192)).unwrap()));
    c.bench_function("shape of D(PSL(2,997))", |b| {
        let sizes = psl2_table(997).unwrap().size_multiset();
        b.iter(|| classify_shape(&build_divgraph(black_box(sizes.iter().copied()))))
    });
}

fn brute_force(c: &mut Criterion) {
    c.bench_function("enumerate_psl2(13)", |b| b.iter(|| enumerate_psl2(black_box(13)).unwrap()));
    let mut group = c.benchmark_group("suzuki");
    group.sample_size(10);
    group.bench_function("generate_sz(8)", |b| b.iter(|| generate_sz(black_box(8), false).unwrap()));
    let sz8 = generate_sz(8, false).unwrap();
    let a1 = sz8.find_cyclic_subgroup(13).unwrap();
    group.bench_function("verify_ti_lemma(A1) in Sz(8)", |b| {
        b.iter(|| sz8.verify_ti_lemma(black_box(&a1)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, closed_form, brute_force);
criterion_main!(benches);
