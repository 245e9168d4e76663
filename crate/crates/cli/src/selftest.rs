use killing_lie::centralizer::{hermitian_generator, HermitianCase};
use killing_lie::geometry::{
    is_constant_length, ConstantLength, SphereFixture, DEFAULT_SEED, SPHERE_FIXTURES,
};
use killing_lie::matrix_lie::check_relations;
use killing_lie::{
    build_algebra_basis, classify_hermitian_pair, AlgebraKind, RootKind, RootSystem,
};
use serde_json::json;

use crate::commands::{report_passes, sphere_reports};
use crate::{Failure, Format, Output};

const SELFTEST_SAMPLES: usize = 200;

struct Check {
    name: String,
    outcome: Result<(), String>,
}

fn check(name: impl Into<String>, f: impl FnOnce() -> Result<(), String>) -> Check {
    Check {
        name: name.into(),
        outcome: f(),
    }
}

fn pair_check(kind: RootKind, rank: usize, j: usize, expected: HermitianCase) -> Check {
    check(
        format!("{} root {} gives {expected}", kind.label(rank), j + 1),
        || {
            let rs = RootSystem::build(kind, rank).map_err(|e| e.to_string())?;
            let z = hermitian_generator(&rs, j).map_err(|e| e.to_string())?;
            let c = classify_hermitian_pair(&rs, &z).map_err(|e| e.to_string())?;
            if c.case != expected {
                return Err(format!("got {}", c.case));
            }
            if c.descriptor.factors != expected.expected_factors() {
                return Err(format!("centralizer {}", c.descriptor.label()));
            }
            Ok(())
        },
    )
}

fn checks() -> Vec<Check> {
    use RootKind::*;
    let mut out = vec![
        pair_check(A, 3, 1, HermitianCase::SuPq { p: 2, q: 2 }),
        pair_check(A, 4, 0, HermitianCase::SuPq { p: 4, q: 1 }),
        pair_check(D, 5, 4, HermitianCase::So2n { n: 5 }),
        pair_check(D, 5, 0, HermitianCase::SoP2 { p: 8 }),
        pair_check(B, 3, 0, HermitianCase::SoP2 { p: 5 }),
        pair_check(C, 3, 2, HermitianCase::SpN { n: 3 }),
        pair_check(E6, 6, 0, HermitianCase::ExcludedE6),
        pair_check(E7, 7, 6, HermitianCase::ExcludedE7),
    ];
    for (kind, n) in [
        (AlgebraKind::Su, 4),
        (AlgebraKind::So, 7),
        (AlgebraKind::So, 8),
        (AlgebraKind::Sp, 3),
    ] {
        out.push(check(format!("root-pair relations in {kind}({n})"), || {
            let b = build_algebra_basis(kind, n).map_err(|e| e.to_string())?;
            check_relations(&b).map_err(|e| e.to_string())
        }));
    }
    for name in SPHERE_FIXTURES {
        out.push(check(format!("sphere fixture {name}"), || {
            let fx = SphereFixture::named(name).map_err(|e| e.to_string())?;
            if let ConstantLength::Witness { x, y, .. } = is_constant_length(&fx.z_field) {
                return Err(format!("Z has different lengths at {x:?} and {y:?}"));
            }
            let reports =
                sphere_reports(&fx, SELFTEST_SAMPLES, DEFAULT_SEED).map_err(|e| e.to_string())?;
            let failed = reports.iter().filter(|r| !report_passes(r)).count();
            if failed > 0 {
                return Err(format!(
                    "{failed} of {} sampled identities failed",
                    reports.len()
                ));
            }
            Ok(())
        }));
    }
    out
}

pub fn run(format: Format) -> Result<Output, Failure> {
    let results = checks();
    let passed = results.iter().filter(|c| c.outcome.is_ok()).count();
    let ok = passed == results.len();
    let body = match format {
        Format::Json => {
            let items: Vec<_> = results
                .iter()
                .map(|c| json!({"name": c.name, "pass": c.outcome.is_ok(), "detail": c.outcome.as_ref().err()}))
                .collect();
            serde_json::to_string_pretty(
                &json!({"checks": items, "passed": passed, "total": results.len()}),
            )
            .expect("JSON values always serialize")
        }
        Format::Text => {
            let mut lines: Vec<String> = results
                .iter()
                .map(|c| match &c.outcome {
                    Ok(()) => format!("PASS {}", c.name),
                    Err(e) => format!("FAIL {}: {e}", c.name),
                })
                .collect();
            lines.push(format!("{passed} of {} checks passed", results.len()));
            lines.join("\n")
        }
    };
    Ok(Output { body, ok })
}
