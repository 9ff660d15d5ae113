use golodkit_core::catalog;
use golodkit_core::moore::{moore_facets, MooreLabels};
use golodkit_core::products::scan_products;
use golodkit_core::products::ScanOptions;
use golodkit_core::{
    find_nontrivial_product, golod_verdict, integral_homology, moore_complex, FieldSpec, GolodStatus, Reason,
    SimplicialComplex, VertexSet,
};

#[test]
fn moore_counts() {
    for (p, m, facets) in [(2, 7, 12), (3, 9, 19), (4, 11, 26), (5, 13, 33)] {
        let k = moore_complex(p).unwrap();
        assert_eq!((k.m(), k.facets().len()), (m, facets));
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(k.is_surface_triangulation(), p == 2);
        assert!(!k.is_k_neighborly(1));
        let h = integral_homology(&k);
        assert_eq!(h.torsion(1), vec![(p as u32).into()]);
        assert_eq!(h.free_rank(2), 0);
    }
    assert_eq!(moore_facets(4).unwrap(), moore_facets(4).unwrap());
}

#[test]
fn moore_products_only_over_matching_prime() {
    for p in [2usize, 3, 5] {
        let k = moore_complex(p).unwrap();
        for q in [2u32, 3, 5] {
            let w = find_nontrivial_product(&k, FieldSpec::Prime(q)).unwrap();
            assert_eq!(w.is_some(), q as usize == p, "M({p}) over F{q}");
        }
        assert!(find_nontrivial_product(&k, FieldSpec::Rationals).unwrap().is_none());
    }
}

#[test]
fn m3_witness_is_a_pair_of_non_adjacent_vertices() {
    let k = moore_complex(3).unwrap();
    let l = MooreLabels::new(3);
    let w = find_nontrivial_product(&k, FieldSpec::Prime(3)).unwrap().unwrap();
    assert_eq!(w.i, VertexSet::from_vertices([l.u(2), l.u(3)]));
    assert_eq!((w.p, w.q), (0, 1));
    // w_1 and w_2 are adjacent when p = 3, so they cannot carry a degree-0 class
    assert!(k.one_skeleton().has_edge(l.w(1), l.w(2)));
    w.verify(&k).unwrap();
}

#[test]
fn all_pairs_scan_is_sorted_and_verified() {
    let k = catalog::moore_rp2();
    let opts = ScanOptions { all_pairs: true, ..ScanOptions::default() };
    let scan = scan_products(&k, FieldSpec::Prime(2), &opts).unwrap();
    assert!(scan.witnesses.len() >= 3);
    for w in &scan.witnesses {
        w.verify(&k).unwrap();
    }
    assert_eq!(scan.witnesses[0].i, VertexSet::from_vertices([6, 7]));
}

#[test]
fn verdict_paths() {
    let d2 = SimplicialComplex::simplex(3).unwrap();
    assert_eq!(golod_verdict(&d2, FieldSpec::Rationals).reason(), Some(Reason::Neighborly));
    let r = catalog::remark_complex();
    let v = golod_verdict(&r, FieldSpec::Prime(3));
    assert!(matches!(v.status, GolodStatus::Inconclusive(_)));
    assert!(v.path.iter().any(|s| s.starts_with("product-scan: all products trivial")));
    let rp2 = catalog::rp2_six();
    assert!(golod_verdict(&rp2, FieldSpec::Prime(2)).is_golod());
}

#[test]
fn caps_are_reported() {
    let k = catalog::points(17);
    let v = golod_verdict(&k, FieldSpec::Rationals);
    assert!(v.notes.iter().any(|n| n.contains("cap")));
}
