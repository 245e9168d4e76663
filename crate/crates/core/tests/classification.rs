use killing_lie::centralizer::{
    canonical_factors, centralizer_type, classify_hermitian_pair, eigen_spectrum,
    hermitian_generator, HermitianCase,
};
use killing_lie::rational::{q, Vector};
use killing_lie::weyl::weyl_orbit;
use killing_lie::{RootKind, RootSystem};

fn all_systems() -> Vec<RootSystem> {
    use RootKind::*;
    let mut out = Vec::new();
    for l in 1..=7 {
        out.push(RootSystem::build(A, l).unwrap());
    }
    for l in 2..=6 {
        out.push(RootSystem::build(B, l).unwrap());
        out.push(RootSystem::build(C, l).unwrap());
    }
    for l in 3..=7 {
        out.push(RootSystem::build(D, l).unwrap());
    }
    out.push(RootSystem::build(E6, 6).unwrap());
    out.push(RootSystem::build(E7, 7).unwrap());
    out
}

#[test]
fn every_noncompact_root_gives_its_expected_pair() {
    for rs in all_systems() {
        for j in rs.noncompact_simple_roots() {
            let z = hermitian_generator(&rs, j).unwrap();
            let c = classify_hermitian_pair(&rs, &z).unwrap();
            assert_ne!(
                c.case,
                HermitianCase::NotHermitian,
                "{} root {}",
                rs.label(),
                j + 1
            );
            assert_eq!(c.noncompact_root, Some(j));
            assert_eq!(
                c.descriptor.factors,
                c.case.expected_factors(),
                "{} root {}",
                rs.label(),
                j + 1
            );
            assert_eq!(c.spectrum.entries.len(), 1);
            assert_eq!(c.spectrum.entries[0].lambda, q(1, 1));
            // dim g = dim m + dim m_0.
            let m: usize = c.spectrum.entries.iter().map(|l| l.multiplicity).sum();
            assert_eq!(m + c.spectrum.dim_m0, rs.algebra_dim());
        }
    }
}

#[test]
fn classification_is_constant_on_orbits_and_scales() {
    let rs = RootSystem::build(RootKind::A, 3).unwrap();
    let z = hermitian_generator(&rs, 1).unwrap();
    for w in weyl_orbit(&rs, &z).unwrap() {
        for s in [q(1, 1), q(3, 2), q(1, 5)] {
            let c = classify_hermitian_pair(&rs, &w.scale(s)).unwrap();
            assert_eq!(c.case, HermitianCase::SuPq { p: 2, q: 2 });
        }
    }
    let c = classify_hermitian_pair(&rs, &z.scale(q(-1, 1))).unwrap();
    assert_eq!(c.case, HermitianCase::SuPq { p: 2, q: 2 });
}

#[test]
fn non_hermitian_centralizers() {
    // B3 with Z = e1 + e2: e1 - e2 and e3 survive, k = A1 + A1 + R.
    let b3 = RootSystem::build(RootKind::B, 3).unwrap();
    let z = Vector::from_ints(&[1, 1, 0]);
    let d = centralizer_type(&b3, &z).unwrap();
    assert_eq!(d.label(), "A1+A1+R");
    assert!(d.z_spans_center);
    let c = classify_hermitian_pair(&b3, &z).unwrap();
    assert_eq!(c.case, HermitianCase::NotHermitian);
    // B3 with Z = e1 + e2 + 2e3 keeps only e1 - e2: A1 and a 2-dim center.
    let d = centralizer_type(&b3, &Vector::from_ints(&[1, 1, 2])).unwrap();
    assert_eq!(d.label(), "A1+R^2");
    assert!(!d.z_spans_center);
    // Two levels in C3 for Z = e1.
    let c3 = RootSystem::build(RootKind::C, 3).unwrap();
    let s = eigen_spectrum(&c3, &Vector::from_ints(&[1, 0, 0])).unwrap();
    assert_eq!(s.entries.len(), 2);
}

#[test]
fn canonical_names_fold_low_rank_coincidences() {
    use RootKind::*;
    assert_eq!(
        canonical_factors(D, 3)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        ["A3"]
    );
    assert_eq!(canonical_factors(D, 2).len(), 2);
    assert_eq!(canonical_factors(C, 2)[0].to_string(), "B2");
    assert!(canonical_factors(A, 0).is_empty());
}

#[test]
fn regular_vectors_have_abelian_centralizer() {
    for rs in all_systems() {
        let rho = killing_lie::weyl::rho(&rs);
        let d = centralizer_type(&rs, &rho).unwrap();
        assert!(d.factors.is_empty(), "{}", rs.label());
        assert_eq!(d.center_dim, rs.rank());
        assert!(killing_lie::is_regular(&rs, &rho).unwrap());
    }
}

#[test]
fn spectrum_example_from_documentation() {
    let a2 = RootSystem::build(RootKind::A, 2).unwrap();
    let s = eigen_spectrum(&a2, &Vector::from_ints(&[1, 0, -1])).unwrap();
    assert_eq!(
        s.levels_json(),
        serde_json::json!([{"lambda": 1, "mult": 4}, {"lambda": 2, "mult": 2}])
    );
}
