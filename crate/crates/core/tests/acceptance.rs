//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values are written out here rather than taken from the
//! library.

use std::process::ExitCode;

use killing_lie::centralizer::{commuting_unit_decomposition, SimpleFactor};
use killing_lie::geometry::{
    self, is_constant_length, length_spread, verify_lemma_le8, verify_orthogonality, verify_pr3,
    ConstantLength, SphereField, SphereFixture, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use killing_lie::matrix_lie::{
    self, ad_squared_eigenspaces, build_algebra_basis, check_relations, graded_brackets, h_vector,
    sigma, u_ideal, AlgebraElement, AlgebraKind, RootBasis,
};
use killing_lie::rational::{q, qi, Vector, Q};
use killing_lie::weyl::contains_minus_identity;
use killing_lie::{
    centralizer_type, classify_hermitian_pair, eigen_spectrum, hermitian_generator, HermitianCase,
    RootKind, RootSystem,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rs(kind: RootKind, rank: usize) -> RootSystem {
    RootSystem::build(kind, rank).expect("supported root system")
}

fn c1_root_counts() -> Outcome {
    use RootKind::*;
    let mut cases: Vec<(RootKind, usize, usize)> = Vec::new();
    for l in 1..=8 {
        cases.push((A, l, l * (l + 1) / 2));
    }
    for l in 2..=8 {
        cases.push((B, l, l * l));
        cases.push((C, l, l * l));
    }
    for l in 3..=8 {
        cases.push((D, l, l * (l - 1)));
    }
    cases.push((E6, 6, 36));
    cases.push((E7, 7, 63));
    for (k, l, expected) in cases {
        let got = rs(k, l).positive_roots().len();
        check(got == expected, || {
            format!("{k:?}{l}: {got} positive roots, expected {expected}")
        })?;
    }
    Ok(())
}

fn c2_highest_roots() -> Outcome {
    use RootKind::*;
    let mut cases: Vec<(RootKind, usize, Vec<i64>)> = Vec::new();
    for l in 1..=8 {
        cases.push((A, l, vec![1; l]));
    }
    for l in 2..=8 {
        let mut b = vec![2; l];
        b[0] = 1;
        cases.push((B, l, b));
        let mut c = vec![2; l];
        c[l - 1] = 1;
        cases.push((C, l, c));
    }
    for l in 4..=8 {
        let mut d = vec![2; l];
        d[0] = 1;
        d[l - 2] = 1;
        d[l - 1] = 1;
        cases.push((D, l, d));
    }
    cases.push((E6, 6, vec![1, 2, 2, 3, 2, 1]));
    cases.push((E7, 7, vec![2, 2, 3, 4, 3, 2, 1]));
    for (k, l, expected) in cases {
        let r = rs(k, l);
        let got = r
            .simple_root_coefficients(r.highest_root())
            .map_err(|e| e.to_string())?;
        check(got == expected, || {
            format!("{k:?}{l}: coefficients {got:?}, expected {expected:?}")
        })?;
    }
    Ok(())
}

fn c3_generator_round_trip() -> Outcome {
    use RootKind::*;
    let f = SimpleFactor::new;
    // (system, non-compact simple root, expected case, expected factors of k)
    let cases = [
        (
            rs(A, 2),
            0,
            HermitianCase::SuPq { p: 2, q: 1 },
            vec![f(A, 1)],
        ),
        (
            rs(A, 3),
            1,
            HermitianCase::SuPq { p: 2, q: 2 },
            vec![f(A, 1), f(A, 1)],
        ),
        (rs(D, 5), 4, HermitianCase::So2n { n: 5 }, vec![f(A, 4)]),
        (rs(B, 3), 0, HermitianCase::SoP2 { p: 5 }, vec![f(B, 2)]),
        (rs(C, 2), 1, HermitianCase::SpN { n: 2 }, vec![f(A, 1)]),
        (rs(C, 3), 2, HermitianCase::SpN { n: 3 }, vec![f(A, 2)]),
    ];
    for (r, j, case, factors) in cases {
        let z = hermitian_generator(&r, j).map_err(|e| e.to_string())?;
        let c = classify_hermitian_pair(&r, &z).map_err(|e| e.to_string())?;
        let d = centralizer_type(&r, &z).map_err(|e| e.to_string())?;
        let s = eigen_spectrum(&r, &z).map_err(|e| e.to_string())?;
        let label = r.label();
        check(c.case == case, || {
            format!("{label}: case {:?}, expected {case:?}", c.case)
        })?;
        check(d.factors == factors, || {
            format!("{label}: factors {:?}, expected {factors:?}", d.factors)
        })?;
        check(d.center_dim == 1 && d.z_spans_center, || {
            format!("{label}: center {d:?}")
        })?;
        check(s.entries.len() == 1, || {
            format!("{label}: {} eigenvalue levels", s.entries.len())
        })?;
        check(c.case.expected_factors() == factors, || {
            format!("{label}: case table disagrees")
        })?;
    }
    Ok(())
}

fn c4_exceptional_exclusions() -> Outcome {
    let e6 = rs(RootKind::E6, 6);
    let z6 = Vector::from_ints(&[0, 0, 0, 0, 0, -1, -1, 1]).scale(q(2, 3));
    let c6 = classify_hermitian_pair(&e6, &z6).map_err(|e| e.to_string())?;
    check(c6.case == HermitianCase::ExcludedE6, || {
        format!("e6: {:?}", c6.case)
    })?;
    check(
        c6.descriptor.factors == vec![SimpleFactor::new(RootKind::D, 5)],
        || format!("e6 factors {:?}", c6.descriptor.factors),
    )?;
    let e7 = rs(RootKind::E7, 7);
    let z7 = Vector::from_ints(&[0, 0, 0, 0, 0, 2, -1, 1]).scale(q(1, 2));
    let c7 = classify_hermitian_pair(&e7, &z7).map_err(|e| e.to_string())?;
    check(c7.case == HermitianCase::ExcludedE7, || {
        format!("e7: {:?}", c7.case)
    })?;
    check(
        c7.descriptor.factors == vec![SimpleFactor::new(RootKind::E6, 6)],
        || format!("e7 factors {:?}", c7.descriptor.factors),
    )
}

fn c5_minus_identity() -> Outcome {
    use RootKind::*;
    let mut cases = Vec::new();
    for l in 1..=5 {
        cases.push((A, l, l == 1));
    }
    for l in 2..=4 {
        cases.push((B, l, true));
        cases.push((C, l, true));
    }
    for l in 3..=6 {
        cases.push((D, l, l % 2 == 0));
    }
    cases.push((E6, 6, false));
    cases.push((E7, 7, true));
    for (k, l, expected) in cases {
        let got = contains_minus_identity(&rs(k, l)).map_err(|e| e.to_string())?;
        check(got == expected, || {
            format!("{k:?}{l}: -Id in W = {got}, expected {expected}")
        })?;
    }
    Ok(())
}

fn fixtures() -> Vec<(AlgebraKind, usize, usize)> {
    // (kind, n, non-compact simple root used for Z)
    vec![
        (AlgebraKind::Su, 4, 1),
        (AlgebraKind::So, 7, 0),
        (AlgebraKind::So, 8, 3),
        (AlgebraKind::Sp, 3, 2),
    ]
}

fn c6_exact_calculus() -> Outcome {
    for (kind, n, j) in fixtures() {
        let basis = build_algebra_basis(kind, n).map_err(|e| e.to_string())?;
        let name = format!("{kind}({n})");
        check_relations(&basis).map_err(|e| format!("{name}: {e}"))?;
        let h = hermitian_generator(basis.root_system(), j).map_err(|e| e.to_string())?;
        let z = basis.cartan_element(&h).map_err(|e| e.to_string())?;
        let m: Vec<AlgebraElement> = basis
            .pairs()
            .filter(|(a, _, _)| !a.dot(&h).is_zero())
            .flat_map(|(_, u, v)| [u.clone(), v.clone()])
            .collect();
        let k: Vec<AlgebraElement> = basis
            .cartan()
            .iter()
            .cloned()
            .chain(
                basis
                    .pairs()
                    .filter(|(a, _, _)| a.dot(&h).is_zero())
                    .flat_map(|(_, u, v)| [u.clone(), v.clone()]),
            )
            .collect();
        for x in &m {
            let s = sigma(&z, x).map_err(|e| format!("{name}: {e}"))?;
            let ss = sigma(&z, &s).map_err(|e| format!("{name}: {e}"))?;
            check(ss == x.scale(-Q::one()), || {
                format!("{name}: sigma^2 != -Id")
            })?;
            h_vector(&z, x).map_err(|e| format!("{name}: {e}"))?;
        }
        for x in &m {
            for y in &m {
                graded_brackets(&z, x, y).map_err(|e| format!("{name}: {e}"))?;
            }
        }
        let sum = m.iter().fold(basis.zero(), |acc, x| acc.add(x));
        h_vector(&z, &sum).map_err(|e| format!("{name}: {e}"))?;
        let ideal = u_ideal(&k, &m).map_err(|e| format!("{name}: {e}"))?;
        check(
            ideal.u.is_empty() && ideal.complement.len() == basis.dim(),
            || {
                format!(
                    "{name}: u has dim {}, complement {}",
                    ideal.u.len(),
                    ideal.complement.len()
                )
            },
        )?;
        let whole = u_ideal(&basis.elements(), &[]).map_err(|e| format!("{name}: {e}"))?;
        check(whole.u.len() == basis.dim(), || {
            format!("{name}: u(g, 0) != g")
        })?;
    }
    Ok(())
}

fn random_cartan(basis: &RootBasis, rng: &mut ChaCha8Rng) -> Vector {
    let n = basis.root_system().ambient_dim();
    let mut h: Vec<Q> = (0..n)
        .map(|_| q(rng.random_range(-4..=4), rng.random_range(1..=3)))
        .collect();
    if basis.kind() == AlgebraKind::Su {
        let mean = h.iter().fold(Q::zero(), |a, b| a + b) / qi(n as i64);
        for x in &mut h {
            *x -= mean;
        }
    }
    Vector::new(h)
}

fn c7_spectrum_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for (kind, n, _) in fixtures() {
        let basis = build_algebra_basis(kind, n).map_err(|e| e.to_string())?;
        for _ in 0..5 {
            let h = random_cartan(&basis, &mut rng);
            let z = basis.cartan_element(&h).map_err(|e| e.to_string())?;
            let mat = ad_squared_eigenspaces(&basis, &z).map_err(|e| e.to_string())?;
            let root = eigen_spectrum(basis.root_system(), &h).map_err(|e| e.to_string())?;
            let want: Vec<(Q, usize)> = root
                .entries
                .iter()
                .map(|l| (l.lambda, l.multiplicity))
                .collect();
            check(
                mat.m0.len() == root.dim_m0 && mat.level_dims() == want,
                || {
                    format!(
                        "{kind}({n}) at {h}: matrix {:?}/{} vs roots {want:?}/{}",
                        mat.level_dims(),
                        mat.m0.len(),
                        root.dim_m0
                    )
                },
            )?;
        }
    }
    Ok(())
}

fn c8_constant_length() -> Outcome {
    let su4 = build_algebra_basis(AlgebraKind::Su, 4).map_err(|e| e.to_string())?;
    let so8 = build_algebra_basis(AlgebraKind::So, 8).map_err(|e| e.to_string())?;
    let sp2 = build_algebra_basis(AlgebraKind::Sp, 2).map_err(|e| e.to_string())?;
    let fields = [
        (
            "diag(i,i,-i,-i) in su(4)",
            &su4,
            Vector::from_ints(&[1, 1, -1, -1]),
        ),
        (
            "F12+F34+F56+F78 in so(8)",
            &so8,
            Vector::from_ints(&[1, 1, 1, 1]),
        ),
        ("diag(i,i) in sp(2)", &sp2, Vector::from_ints(&[1, 1])),
    ];
    for (name, basis, h) in fields {
        let f = SphereField::from_element(&basis.cartan_element(&h).map_err(|e| e.to_string())?);
        check(f.dim() == 8, || {
            format!("{name}: acts on S^{}", f.sphere_dim())
        })?;
        let c = is_constant_length(&f);
        check(c == ConstantLength::Constant { c: Q::one() }, || {
            format!("{name}: {c:?}")
        })?;
        let r = length_spread(&f, DEFAULT_SAMPLES, DEFAULT_SEED);
        check(r.pass && r.max_abs_deviation < 1e-9, || {
            format!("{name}: spread {}", r.max_abs_deviation)
        })?;
    }
    let f12 = SphereField::from_element(&AlgebraElement::f(3, 1, 2).map_err(|e| e.to_string())?);
    match is_constant_length(&f12) {
        ConstantLength::Witness {
            x,
            len2_x,
            y,
            len2_y,
        } if x == [1.0, 0.0, 0.0]
            && y == [0.0, 0.0, 1.0]
            && len2_x == Q::one()
            && len2_y.is_zero() =>
        {
            Ok(())
        }
        other => Err(format!("F12 on S^2: {other:?}")),
    }
}

fn c9_sampled_identities() -> Outcome {
    for name in ["su4", "so8"] {
        let fx = SphereFixture::named(name).map_err(|e| e.to_string())?;
        let r = verify_orthogonality(&fx.z_field, &fx.m_fields, DEFAULT_SAMPLES, DEFAULT_SEED)
            .map_err(|e| e.to_string())?;
        check(r.pass && r.tolerance == 1e-10, || format!("{name}: {r:?}"))?;
        for a in &fx.i1 {
            let t = fx.triple(a).map_err(|e| e.to_string())?;
            let r = verify_pr3(&fx.z_field, &t, DEFAULT_SAMPLES, DEFAULT_SEED)
                .map_err(|e| e.to_string())?;
            check(r.combined.pass, || format!("{name}, {a}: {:?}", r.combined))?;
        }
    }
    let fx = SphereFixture::named("so10").map_err(|e| e.to_string())?;
    let a = Vector::from_ints(&[1, 1, 0, 0, 0]);
    let b = Vector::from_ints(&[0, 0, 1, 1, 0]);
    let t = fx.triple(&a).map_err(|e| e.to_string())?;
    let out = verify_lemma_le8(&fx.basis, &t, &b, DEFAULT_SAMPLES, DEFAULT_SEED)
        .map_err(|e| e.to_string())?;
    match out {
        geometry::Le8Outcome::Checked { identity, .. } if identity.max_abs_deviation < 1e-10 => {
            Ok(())
        }
        other => Err(format!("so(10) e1+e2 vs e3+e4: {other:?}")),
    }
}

fn c10_commuting_units() -> Outcome {
    for (kind, l) in [(RootKind::D, 5), (RootKind::C, 2), (RootKind::C, 3)] {
        let r = rs(kind, l);
        let z = hermitian_generator(&r, l - 1).map_err(|e| e.to_string())?;
        let d = commuting_unit_decomposition(&r, &z).map_err(|e| e.to_string())?;
        let label = r.label();
        check(d.units.len() == l, || {
            format!("{label}: {} units", d.units.len())
        })?;
        check(d.scale == q(1, 2), || format!("{label}: scale {}", d.scale))?;
        for (i, u) in d.units.iter().enumerate() {
            for (j, w) in d.units.iter().enumerate() {
                let expected = if i == j { Q::one() } else { Q::zero() };
                check(u.dot(w) == expected, || {
                    format!("{label}: <U_{i}, U_{j}> = {}", u.dot(w))
                })?;
            }
        }
        let sum = d
            .units
            .iter()
            .fold(Vector::zeros(r.ambient_dim()), |acc, u| &acc + u);
        check(sum.scale(d.scale) == z, || {
            format!("{label}: Z != c * sum U_i")
        })?;
        // Commutation at the matrix level.
        let (ak, n) = if kind == RootKind::D {
            (AlgebraKind::So, 2 * l)
        } else {
            (AlgebraKind::Sp, l)
        };
        let basis = build_algebra_basis(ak, n).map_err(|e| e.to_string())?;
        let mats: Vec<AlgebraElement> = d
            .units
            .iter()
            .map(|u| basis.cartan_element(u))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for x in &mats {
            for y in &mats {
                check(
                    matrix_lie::bracket(x, y)
                        .map_err(|e| e.to_string())?
                        .is_zero(),
                    || format!("{label}: units do not commute"),
                )?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        (
            "positive root counts match closed forms up to rank 8",
            c1_root_counts,
        ),
        (
            "maximal root coefficients for all six families",
            c2_highest_roots,
        ),
        (
            "Hermitian generator -> classification round trip",
            c3_generator_round_trip,
        ),
        (
            "e6 and e7 pairs identified and excluded",
            c4_exceptional_exclusions,
        ),
        (
            "-Id in W matches the classification list",
            c5_minus_identity,
        ),
        (
            "exact root-pair relations, sigma, grading, h(X), ideals",
            c6_exact_calculus,
        ),
        (
            "matrix eigenspaces agree with root-level spectrum",
            c7_spectrum_oracle,
        ),
        (
            "constant-length fields on spheres and witness for F12",
            c8_constant_length,
        ),
        (
            "sampled orthogonality, root-pair and le8 identities",
            c9_sampled_identities,
        ),
        (
            "commuting unit decomposition for so(10), sp(2), sp(3)",
            c10_commuting_units,
        ),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS criterion {:>2}: {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
