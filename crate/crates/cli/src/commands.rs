use std::fmt::Write as _;

use killing_lie::centralizer::{
    commuting_unit_decomposition, eigen_spectrum, hermitian_generator, rational_json,
};
use killing_lie::geometry::{length_spread, verify_orthogonality, verify_pr3, SphereFixture};
use killing_lie::rational::{qi, Q};
use killing_lie::weyl::weyl_orbit_capped;
use killing_lie::{
    classify_hermitian_pair, is_regular, verify_lemma_le8, Error, RootKind, RootSystem, Vector,
};
use serde_json::{json, Value};

use crate::{Failure, Format, Output};

/// A root system together with a validated Cartan vector.
pub struct Resolved {
    pub rs: RootSystem,
    pub z: Vector,
}

impl Resolved {
    pub fn new(
        algebra: (RootKind, usize),
        z: Option<Vector>,
        noncompact: Option<usize>,
    ) -> Result<Self, Failure> {
        let rs =
            RootSystem::build(algebra.0, algebra.1).map_err(|e| Failure::flag("algebra", e))?;
        let z = match (z, noncompact) {
            (Some(z), _) => {
                rs.check_cartan(&z).map_err(|e| Failure::flag("z", e))?;
                z
            }
            (None, Some(j)) => {
                if j == 0 || j > rs.rank() {
                    return Err(Failure::flag(
                        "noncompact",
                        Error::Parameter(format!(
                            "{j} is not a simple root index of {} (1..={})",
                            rs.label(),
                            rs.rank()
                        )),
                    ));
                }
                hermitian_generator(&rs, j - 1).map_err(|e| Failure::flag("noncompact", e))?
            }
            (None, None) => unreachable!("clap requires --z or --noncompact"),
        };
        Ok(Resolved { rs, z })
    }
}

/// `|<a, Z>|`, the level of the summand containing `a`.
fn level(a: &Vector, z: &Vector) -> Q {
    let l = a.dot(z);
    if l < qi(0) {
        -l
    } else {
        l
    }
}

fn json_out(v: &Value) -> Output {
    Output {
        body: serde_json::to_string_pretty(v).expect("JSON values always serialize"),
        ok: true,
    }
}

fn text_out(body: String) -> Output {
    Output {
        body: body.trim_end().to_string(),
        ok: true,
    }
}

pub fn roots(algebra: (RootKind, usize), format: Format) -> Result<Output, Failure> {
    let rs = RootSystem::build(algebra.0, algebra.1).map_err(|e| Failure::flag("algebra", e))?;
    if format == Format::Json {
        return Ok(json_out(
            &serde_json::to_value(&rs).expect("root systems serialize"),
        ));
    }
    let mut s = String::new();
    writeln!(
        s,
        "{}: rank {}, {} positive roots, dim {}",
        rs.label(),
        rs.rank(),
        rs.positive_roots().len(),
        rs.algebra_dim()
    )
    .unwrap();
    writeln!(s, "simple roots:").unwrap();
    for (i, a) in rs.simple_roots().iter().enumerate() {
        writeln!(s, "  {:>2}  {a}", i + 1).unwrap();
    }
    writeln!(s, "highest root: {}", rs.highest_root()).unwrap();
    writeln!(s, "positive roots:").unwrap();
    for a in rs.positive_roots() {
        writeln!(s, "  {a}").unwrap();
    }
    Ok(text_out(s))
}

pub fn orbit(r: &Resolved, cap: usize, format: Format) -> Result<Output, Failure> {
    let mut orbit = weyl_orbit_capped(&r.rs, &r.z, cap).map_err(Failure::from_core)?;
    orbit.sort();
    if format == Format::Json {
        return Ok(json_out(
            &serde_json::to_value(&orbit).expect("vectors serialize"),
        ));
    }
    let mut s = String::new();
    for v in &orbit {
        writeln!(s, "{v}").unwrap();
    }
    writeln!(s, "{} points", orbit.len()).unwrap();
    Ok(text_out(s))
}

pub fn spectrum(r: &Resolved, format: Format) -> Result<Output, Failure> {
    let sp = eigen_spectrum(&r.rs, &r.z).map_err(Failure::from_core)?;
    let regular = is_regular(&r.rs, &r.z).map_err(Failure::from_core)?;
    if format == Format::Json {
        return Ok(json_out(&json!({
            "levels": sp.levels_json(),
            "regular": regular,
            "dim_m0": sp.dim_m0,
        })));
    }
    let mut s = String::new();
    for l in &sp.entries {
        writeln!(
            s,
            "lambda {:>6}  mult {}",
            l.lambda.to_string(),
            l.multiplicity
        )
        .unwrap();
    }
    writeln!(s, "dim m0 {}, regular {regular}", sp.dim_m0).unwrap();
    Ok(text_out(s))
}

pub fn classify(r: &Resolved, format: Format) -> Result<Output, Failure> {
    let c = classify_hermitian_pair(&r.rs, &r.z).map_err(Failure::from_core)?;
    if format == Format::Json {
        return Ok(json_out(&c.to_json()));
    }
    let mut s = String::new();
    writeln!(s, "pair: {}", c.case).unwrap();
    match c.case.case_number() {
        Some(n) => writeln!(s, "case: {n}").unwrap(),
        None => writeln!(s, "case: none").unwrap(),
    }
    writeln!(s, "centralizer: {}", c.descriptor.label()).unwrap();
    if let Some(j) = c.noncompact_root {
        writeln!(s, "non-compact root: {}", j + 1).unwrap();
    }
    if c.below_threshold {
        writeln!(s, "note: parameter below the usual range for this family").unwrap();
    }
    Ok(text_out(s))
}

pub fn decompose(r: &Resolved, format: Format) -> Result<Output, Failure> {
    let sp = eigen_spectrum(&r.rs, &r.z).map_err(Failure::from_core)?;
    let units = match commuting_unit_decomposition(&r.rs, &r.z) {
        Ok(u) => Some(u),
        Err(Error::Domain(_)) => None,
        Err(e) => return Err(Failure::from_core(e)),
    };
    if format == Format::Json {
        let summands: Vec<Value> = sp
            .summands
            .iter()
            .map(|part| {
                json!({
                    "lambda": rational_json(&level(&part[0], &r.z)),
                    "dim": 2 * part.len(),
                    "roots": part,
                })
            })
            .collect();
        let units = units.map(|u| json!({"scale": rational_json(&u.scale), "units": u.units}));
        return Ok(json_out(
            &json!({"summands": summands, "commuting_units": units}),
        ));
    }
    let mut s = String::new();
    for (i, part) in sp.summands.iter().enumerate() {
        let roots: Vec<String> = part.iter().map(ToString::to_string).collect();
        writeln!(
            s,
            "summand {}: lambda {}, dim {}: {}",
            i + 1,
            level(&part[0], &r.z),
            2 * part.len(),
            roots.join(" ")
        )
        .unwrap();
    }
    if let Some(u) = units {
        writeln!(s, "Z = {} * (U_1 + ... + U_{})", u.scale, u.units.len()).unwrap();
    }
    Ok(text_out(s))
}

/// Every sampled check for one fixture, in a fixed order.
pub fn sphere_reports(
    fx: &SphereFixture,
    samples: usize,
    seed: u64,
) -> killing_lie::Result<Vec<Value>> {
    let mut reports = vec![
        json!(length_spread(&fx.z_field, samples, seed)),
        json!(verify_orthogonality(
            &fx.z_field,
            &fx.m_fields,
            samples,
            seed
        )?),
    ];
    for a in &fx.i1 {
        for r in verify_pr3(&fx.z_field, &fx.triple(a)?, samples, seed)?.identities {
            reports.push(json!(r));
        }
    }
    if let Some((a, b)) = &fx.le8_pair {
        let outcome = verify_lemma_le8(&fx.basis, &fx.triple(a)?, b, samples, seed)?;
        reports.push(json!(outcome));
    }
    Ok(reports)
}

/// A sampled report, or an le8 outcome whose identity was checked and passed.
pub fn report_passes(v: &Value) -> bool {
    match v.get("status").and_then(Value::as_str) {
        Some("checked") => v["identity"]["pass"] == json!(true),
        Some(_) => false,
        None => v["pass"] == json!(true),
    }
}

pub fn verify_sphere(
    name: &str,
    samples: usize,
    seed: u64,
    format: Format,
) -> Result<Output, Failure> {
    let fx = SphereFixture::named(name).map_err(|e| Failure::flag("fixture", e))?;
    let reports = sphere_reports(&fx, samples, seed).map_err(Failure::from_core)?;
    let ok = reports.iter().all(report_passes);
    let body = if format == Format::Json {
        serde_json::to_string_pretty(&json!({
            "fixture": name,
            "sphere_dim": fx.z_field.sphere_dim(),
            "reports": reports,
            "pass": ok,
        }))
        .expect("JSON values always serialize")
    } else {
        let mut s = String::new();
        writeln!(
            s,
            "{name} on S^{}, {samples} samples, seed {seed}",
            fx.z_field.sphere_dim()
        )
        .unwrap();
        for v in &reports {
            let r = v
                .get("identity")
                .or_else(|| v.get("hypothesis"))
                .unwrap_or(v);
            let mark = if report_passes(v) { "ok  " } else { "FAIL" };
            let dev = r["max_abs_deviation"].as_f64().unwrap_or(f64::NAN);
            writeln!(
                s,
                "{mark} {dev:.3e}  {}",
                r["quantity_label"].as_str().unwrap_or("")
            )
            .unwrap();
        }
        s.trim_end().to_string()
    };
    Ok(Output { body, ok })
}
