use criterion::{black_box, criterion_group, criterion_main, Criterion};
use golodkit_core::homology::ChainComplexData;
use golodkit_core::{catalog, find_nontrivial_product, hochster_table, is_chordal, koszul_tor_table, moore_complex, snf, FieldSpec};

fn hochster(c: &mut Criterion) {
    let m3 = moore_complex(3).unwrap();
    c.bench_function("hochster_table M(3) over F3", |b| b.iter(|| hochster_table(black_box(&m3), FieldSpec::Prime(3)).unwrap()));
    let m2 = catalog::moore_rp2();
    c.bench_function("koszul_tor_table M(2) over F2", |b| b.iter(|| koszul_tor_table(black_box(&m2), FieldSpec::Prime(2)).unwrap()));
}

fn products(c: &mut Criterion) {
    let m3 = moore_complex(3).unwrap();
    c.bench_function("product scan M(3) over F3", |b| b.iter(|| find_nontrivial_product(black_box(&m3), FieldSpec::Prime(3)).unwrap()));
    c.bench_function("product scan M(3) over Q", |b| b.iter(|| find_nontrivial_product(black_box(&m3), FieldSpec::Rationals).unwrap()));
}

fn chordal(c: &mut Criterion) {
    let g = moore_complex(5).unwrap().one_skeleton();
    c.bench_function("is_chordal M(5) skeleton", |b| b.iter(|| is_chordal(black_box(&g))));
}

fn smith(c: &mut Criterion) {
    let d2 = ChainComplexData::new(&moore_complex(5).unwrap()).boundary_matrix(2);
    c.bench_function("invariant factors of d2 on M(5)", |b| b.iter(|| snf::invariant_factors(black_box(&d2))));
}

criterion_group!(benches, hochster, products, chordal, smith);
criterion_main!(benches);
