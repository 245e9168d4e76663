//! Killing fields on round spheres and on compact groups with a bi-invariant
//! metric, checked numerically at seeded random points.
//!
//! A real skew matrix `A` of size `n` acts on `S^{n-1}` by `x -> A x`; the
//! metric is the ambient dot product. Complex generators are made real by
//! `a + bi -> [[a, -b], [b, a]]` entrywise, so `su(n)` acts on `S^{2n-1}` and
//! `sp(n)` (as `2n x 2n` complex matrices) on `S^{4n-1}`.

use nalgebra::{Complex, DMatrix};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::centralizer;
use crate::error::{domain_err, internal_err, param_err, Result};
use crate::linalg::QMatrix;
use crate::matrix_lie::{self, AlgebraElement, AlgebraKind, RootBasis};
use crate::rational::{to_f64, Vector, Q};
use crate::root_systems::{Root, RootSystem};

pub const DEFAULT_SEED: u64 = 20_161_103;
pub const DEFAULT_SAMPLES: usize = 1000;
/// Metric identities on spheres.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;
/// Bi-invariant length checks on groups.
pub const BIINVARIANT_TOLERANCE: f64 = 1e-8;
/// Sampled spread of `|Ax|^2` for exactly constant-length fields.
pub const SPREAD_TOLERANCE: f64 = 1e-9;
/// Accepted deviation of `|x|` from 1 in [`pointwise_metric`].
pub const UNIT_TOLERANCE: f64 = 1e-12;

/// A Killing field `x -> A x` on `S^{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereField {
    generator: QMatrix,
    dense: Vec<f64>,
}

impl SphereField {
    /// Requires a square, exactly skew-symmetric matrix.
    pub fn new(generator: QMatrix) -> Result<Self> {
        let n = generator.len();
        if n == 0 || generator.iter().any(|r| r.len() != n) {
            return Err(param_err!(
                "sphere field generator must be a nonempty square matrix"
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if generator[i][j] != -generator[j][i] {
                    return Err(param_err!(
                        "generator is not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        let dense = generator.iter().flatten().map(to_f64).collect();
        Ok(SphereField { generator, dense })
    }

    /// Real form of a matrix-algebra element. `so` matrices are used as is.
    pub fn from_element(x: &AlgebraElement) -> Self {
        let m = x.matrix();
        let d = m.len();
        let generator: QMatrix = if x.kind() == AlgebraKind::So {
            m.iter().map(|r| r.iter().map(|z| z.re).collect()).collect()
        } else {
            let mut g = vec![vec![Q::zero(); 2 * d]; 2 * d];
            for i in 0..d {
                for j in 0..d {
                    let z = m[i][j];
                    g[2 * i][2 * j] = z.re;
                    g[2 * i][2 * j + 1] = -z.im;
                    g[2 * i + 1][2 * j] = z.im;
                    g[2 * i + 1][2 * j + 1] = z.re;
                }
            }
            g
        };
        SphereField::new(generator).expect("real form of an anti-Hermitian matrix is skew")
    }

    /// Ambient dimension `n`; the field lives on `S^{n-1}`.
    pub fn dim(&self) -> usize {
        self.generator.len()
    }

    pub fn sphere_dim(&self) -> usize {
        self.dim() - 1
    }

    pub fn generator(&self) -> &QMatrix {
        &self.generator
    }

    pub fn add(&self, other: &SphereField) -> Result<SphereField> {
        if self.dim() != other.dim() {
            return Err(param_err!("fields act on spheres of different dimension"));
        }
        SphereField::new(
            self.generator
                .iter()
                .zip(&other.generator)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }

    pub fn scale(&self, c: Q) -> SphereField {
        SphereField::new(
            self.generator
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
        .expect("scaling preserves skew symmetry")
    }

    /// `A x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                self.dense[i * n..(i + 1) * n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// Outcome of [`is_constant_length`].
#[derive(Debug, Clone, PartialEq)]
pub enum ConstantLength {
    /// `A^T A = c I`, so `|Ax|^2 = c` on the unit sphere.
    Constant { c: Q },
    /// Two unit vectors with different squared lengths of `A x`.
    Witness {
        x: Vec<f64>,
        len2_x: Q,
        y: Vec<f64>,
        len2_y: Q,
    },
}

impl ConstantLength {
    pub fn is_constant(&self) -> bool {
        matches!(self, ConstantLength::Constant { .. })
    }
}

/// Exact test: `|Ax|^2 = x^T A^T A x` is constant on the sphere iff
/// `A^T A` is scalar. Otherwise two distinct diagonal entries give a witness
/// pair `e_i, e_j`, and an off-diagonal entry `M_ij` gives
/// `(e_i +- e_j)/sqrt 2`, with squared lengths `d +- M_ij`.
pub fn is_constant_length(field: &SphereField) -> ConstantLength {
    let a = &field.generator;
    let n = a.len();
    let ata: QMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Q::zero(), |s, k| s + a[k][i] * a[k][j]))
                .collect()
        })
        .collect();
    let unit = |i: usize| {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    };
    let d0 = ata[0][0];
    if let Some(j) = (1..n).find(|&j| ata[j][j] != d0) {
        return ConstantLength::Witness {
            x: unit(0),
            len2_x: d0,
            y: unit(j),
            len2_y: ata[j][j],
        };
    }
    for i in 0..n {
        for j in i + 1..n {
            let m = ata[i][j];
            if !m.is_zero() {
                let s = std::f64::consts::FRAC_1_SQRT_2;
                let mut x = vec![0.0; n];
                let mut y = vec![0.0; n];
                x[i] = s;
                x[j] = s;
                y[i] = s;
                y[j] = -s;
                return ConstantLength::Witness {
                    x,
                    len2_x: d0 + m,
                    y,
                    len2_y: d0 - m,
                };
            }
        }
    }
    ConstantLength::Constant { c: d0 }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `g(f1, f2)` at the unit vector `x`.
pub fn pointwise_metric(f1: &SphereField, f2: &SphereField, x: &[f64]) -> Result<f64> {
    if f1.dim() != f2.dim() || x.len() != f1.dim() {
        return Err(param_err!("dimension mismatch between fields and point"));
    }
    let norm = dot(x, x).sqrt();
    if (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(param_err!("point has norm {norm}, not 1"));
    }
    Ok(dot(&f1.apply(x), &f2.apply(x)))
}

/// Result of a sampled check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub quantity_label: String,
    pub num_samples: usize,
    pub seed: u64,
    pub max_abs_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SampleReport {
    fn new(
        label: impl Into<String>,
        num_samples: usize,
        seed: u64,
        dev: f64,
        tolerance: f64,
    ) -> Self {
        SampleReport {
            quantity_label: label.into(),
            num_samples,
            seed,
            max_abs_deviation: dev,
            tolerance,
            pass: dev <= tolerance,
        }
    }
}

/// `samples` uniform points on `S^{n-1}` from a seeded generator.
pub fn sample_sphere(n: usize, samples: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| loop {
            let v: Vec<f64> = (0..n)
                .map(|_| rng.sample::<f64, _>(StandardNormal))
                .collect();
            let norm = dot(&v, &v).sqrt();
            if norm > 1e-6 {
                break v.into_iter().map(|c| c / norm).collect();
            }
        })
        .collect()
}

/// Maximum of `f` over the points; NaN counts as infinite.
fn max_over<F>(points: &[Vec<f64>], f: F) -> f64
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    points
        .par_iter()
        .map(|x| {
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        })
        .reduce(|| 0.0, f64::max)
}

fn g(f1: &SphereField, f2: &SphereField, x: &[f64]) -> f64 {
    dot(&f1.apply(x), &f2.apply(x))
}

/// Sampled `max - min` of `|Ax|^2`.
pub fn length_spread(field: &SphereField, samples: usize, seed: u64) -> SampleReport {
    let pts = sample_sphere(field.dim(), samples, seed);
    let vals: Vec<f64> = pts.par_iter().map(|x| g(field, field, x)).collect();
    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    SampleReport::new(
        "length spread |Zx|^2",
        samples,
        seed,
        max - min,
        SPREAD_TOLERANCE,
    )
}

/// `max |g(Z, Y)|` over the samples and the given fields `Y`.
pub fn verify_orthogonality(
    z: &SphereField,
    subspace: &[SphereField],
    samples: usize,
    seed: u64,
) -> Result<SampleReport> {
    if subspace.iter().any(|y| y.dim() != z.dim()) {
        return Err(param_err!("fields act on spheres of different dimension"));
    }
    let pts = sample_sphere(z.dim(), samples, seed);
    let zx_dev = max_over(&pts, |x| {
        let zx = z.apply(x);
        subspace
            .iter()
            .map(|y| dot(&zx, &y.apply(x)).abs())
            .fold(0.0, f64::max)
    });
    Ok(SampleReport::new(
        "g(Z, m)",
        samples,
        seed,
        zx_dev,
        IDENTITY_TOLERANCE,
    ))
}

/// `U_a`, `V_a` and `Phi(a)` as sphere fields, with `<Z, a>` and `<a, a>`.
#[derive(Debug, Clone)]
pub struct RootTriple {
    pub root: Root,
    pub u: SphereField,
    pub v: SphereField,
    pub alpha: SphereField,
    /// `<Z, a>`, nonzero.
    pub pairing: Q,
    pub alpha_norm2: Q,
}

impl RootTriple {
    /// Requires `a` in `I_1(Z)`.
    pub fn new(basis: &RootBasis, z: &Vector, alpha: &Root) -> Result<Self> {
        basis.root_system().check_cartan(z)?;
        let (u, v) = basis.pair(alpha).ok_or_else(|| {
            param_err!(
                "{alpha} is not a positive root of {}",
                basis.root_system().label()
            )
        })?;
        let pairing = alpha.dot(z);
        if pairing.is_zero() {
            return Err(domain_err!("{alpha} is not in I_1(Z): <Z, a> = 0"));
        }
        Ok(RootTriple {
            root: alpha.clone(),
            u: SphereField::from_element(u),
            v: SphereField::from_element(v),
            alpha: SphereField::from_element(&basis.cartan_element(alpha)?),
            pairing,
            alpha_norm2: alpha.norm2(),
        })
    }
}

/// Combined and per-identity results of [`verify_pr3`].
#[derive(Debug, Clone, Serialize)]
pub struct Pr3Report {
    pub combined: SampleReport,
    pub identities: Vec<SampleReport>,
}

/// Checks, with `l = <Z, a>`:
/// `g(Z, v_a) = 0`, `g(U,U) = g(V,V) = g(a, Z)/l`, `g(U, V) = 0`,
/// `g(a, v_a) = 0` and `g(a, a) = <a,a> g(a, Z)/l`.
pub fn verify_pr3(z: &SphereField, t: &RootTriple, samples: usize, seed: u64) -> Result<Pr3Report> {
    if [&t.u, &t.v, &t.alpha].iter().any(|f| f.dim() != z.dim()) {
        return Err(param_err!("fields act on spheres of different dimension"));
    }
    let pts = sample_sphere(z.dim(), samples, seed);
    let inv_l = 1.0 / to_f64(&t.pairing);
    let a2 = to_f64(&t.alpha_norm2);
    type Check<'a> = (&'a str, Box<dyn Fn(&[f64]) -> f64 + Sync + 'a>);
    let checks: Vec<Check> = vec![
        (
            "g(Z, v_a)",
            Box::new(|x| g(z, &t.u, x).abs().max(g(z, &t.v, x).abs())),
        ),
        (
            "g(U_a, U_a) - g(a, Z)/<Z,a>",
            Box::new(|x| (g(&t.u, &t.u, x) - g(&t.alpha, z, x) * inv_l).abs()),
        ),
        (
            "g(V_a, V_a) - g(a, Z)/<Z,a>",
            Box::new(|x| (g(&t.v, &t.v, x) - g(&t.alpha, z, x) * inv_l).abs()),
        ),
        ("g(U_a, V_a)", Box::new(|x| g(&t.u, &t.v, x).abs())),
        (
            "g(a, v_a)",
            Box::new(|x| g(&t.alpha, &t.u, x).abs().max(g(&t.alpha, &t.v, x).abs())),
        ),
        (
            "g(a, a) - <a,a> g(a, Z)/<Z,a>",
            Box::new(|x| (g(&t.alpha, &t.alpha, x) - a2 * g(&t.alpha, z, x) * inv_l).abs()),
        ),
    ];
    let identities: Vec<SampleReport> = checks
        .iter()
        .map(|(label, f)| {
            let dev = max_over(&pts, f);
            SampleReport::new(
                format!("{label} [a = {}]", t.root),
                samples,
                seed,
                dev,
                IDENTITY_TOLERANCE,
            )
        })
        .collect();
    let worst = identities
        .iter()
        .map(|r| r.max_abs_deviation)
        .fold(0.0, f64::max);
    Ok(Pr3Report {
        combined: SampleReport::new(
            format!("root-pair identities [a = {}]", t.root),
            samples,
            seed,
            worst,
            IDENTITY_TOLERANCE,
        ),
        identities,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Le8Outcome {
    /// `g(v_a, b) = 0` failed, so the identity was not tested.
    HypothesisNotMet { hypothesis: SampleReport },
    Checked {
        hypothesis: SampleReport,
        identity: SampleReport,
    },
}

impl Le8Outcome {
    pub fn pass(&self) -> bool {
        matches!(self, Le8Outcome::Checked { identity, .. } if identity.pass)
    }
}

/// If `g(v_a, b) = 0` at the samples, checks
/// `<a,b> g(U_a, U_a) = <a,b> g(V_a, V_a) = g(a, b)`.
pub fn verify_lemma_le8(
    basis: &RootBasis,
    t: &RootTriple,
    beta: &Root,
    samples: usize,
    seed: u64,
) -> Result<Le8Outcome> {
    if !basis.root_system().is_root(beta) {
        return Err(param_err!(
            "{beta} is not a root of {}",
            basis.root_system().label()
        ));
    }
    let b = SphereField::from_element(&basis.cartan_element(beta)?);
    let ab = to_f64(&t.root.dot(beta));
    let pts = sample_sphere(b.dim(), samples, seed);
    let hyp = max_over(&pts, |x| g(&t.u, &b, x).abs().max(g(&t.v, &b, x).abs()));
    let hypothesis = SampleReport::new(
        format!("g(v_a, b) [a = {}, b = {beta}]", t.root),
        samples,
        seed,
        hyp,
        IDENTITY_TOLERANCE,
    );
    if !hypothesis.pass {
        return Ok(Le8Outcome::HypothesisNotMet { hypothesis });
    }
    let dev = max_over(&pts, |x| {
        let gab = g(&t.alpha, &b, x);
        (ab * g(&t.u, &t.u, x) - gab)
            .abs()
            .max((ab * g(&t.v, &t.v, x) - gab).abs())
    });
    let identity = SampleReport::new(
        format!("<a,b> g(U_a, U_a) - g(a, b) [a = {}, b = {beta}]", t.root),
        samples,
        seed,
        dev,
        IDENTITY_TOLERANCE,
    );
    Ok(Le8Outcome::Checked {
        hypothesis,
        identity,
    })
}

type CMat = DMatrix<Complex<f64>>;

fn to_cmat(x: &AlgebraElement) -> CMat {
    let m = x.matrix();
    let d = m.len();
    CMat::from_fn(d, d, |i, j| {
        Complex::new(to_f64(&m[i][j].re), to_f64(&m[i][j].im))
    })
}

/// For every basis element `X` of `su(n)`, `so(n)` or `sp(n)` (`n <= 4`),
/// compares the bi-invariant length of the right-invariant field `Xa`,
/// `sqrt(-Re tr((a^-1 X a)^2))`, with `sqrt(<X, X>)` at random group points
/// `a = exp(X_1) exp(X_2)`.
pub fn biinvariant_all_constant(
    kind: AlgebraKind,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<SampleReport> {
    if n > 4 {
        return Err(param_err!("bi-invariant check supports n <= 4, got {n}"));
    }
    let basis = matrix_lie::build_algebra_basis(kind, n)?;
    let elems: Vec<CMat> = basis.elements().iter().map(to_cmat).collect();
    let norms: Vec<f64> = basis
        .elements()
        .iter()
        .map(|x| to_f64(&matrix_lie::invariant_form(x, x).unwrap()).sqrt())
        .collect();
    let d = elems[0].nrows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_element = || {
        let mut x = CMat::zeros(d, d);
        for e in &elems {
            x += e * Complex::new(rng.sample::<f64, _>(StandardNormal), 0.0);
        }
        let norm = x.norm();
        // Bounded norm keeps the exponential well conditioned.
        if norm > 2.0 {
            x *= Complex::new(2.0 / norm, 0.0);
        }
        x
    };
    let points: Vec<CMat> = (0..samples)
        .map(|_| random_element().exp() * random_element().exp())
        .collect();
    let identity = CMat::identity(d, d);
    let results: Vec<(f64, f64)> = points
        .par_iter()
        .map(|a| {
            let inv = a.adjoint();
            let unitarity = (&inv * a - &identity).norm();
            let dev = elems
                .iter()
                .zip(&norms)
                .map(|(x, &nx)| {
                    let y = &inv * x * a;
                    let len2 = -(&y * &y).trace().re;
                    (len2.max(0.0).sqrt() - nx).abs()
                })
                .fold(0.0, f64::max);
            (dev, unitarity)
        })
        .collect();
    let worst_unitarity = results.iter().map(|r| r.1).fold(0.0, f64::max);
    if worst_unitarity > 1e-9 {
        return Err(internal_err!(
            "sampled group element is not unitary (residual {worst_unitarity})"
        ));
    }
    let dev = results.iter().map(|r| r.0).fold(0.0, f64::max);
    Ok(SampleReport::new(
        format!("bi-invariant length of right-invariant fields on {kind}({n})"),
        samples,
        seed,
        dev,
        BIINVARIANT_TOLERANCE,
    ))
}

/// A Hermitian `Z` acting by constant-length Killing fields on a sphere,
/// with the root data used by the sampled identity checks.
#[derive(Debug, Clone)]
pub struct SphereFixture {
    pub name: String,
    pub basis: RootBasis,
    /// Hermitian generator in ambient coordinates.
    pub z: Vector,
    pub z_field: SphereField,
    /// `I_1(Z)`.
    pub i1: Vec<Root>,
    /// Root-vector fields spanning `m`.
    pub m_fields: Vec<SphereField>,
    /// Strongly orthogonal pair for the `<a,b> g(U,U) = g(a,b)` check.
    pub le8_pair: Option<(Root, Root)>,
}

/// Names accepted by [`SphereFixture::named`].
pub const SPHERE_FIXTURES: &[&str] = &["su4", "su6", "so8", "so10", "sp2", "sp3"];

impl SphereFixture {
    /// `su(2p)` with `Z = diag(i/2, ..., -i/2)` on `S^{4p-1}`, `so(2n)` with
    /// `Z = F_{1,2}/2 + ... + F_{2n-1,2n}/2` on `S^{2n-1}`, and `sp(n)` with
    /// `Z = diag(i/2, ..., i/2)` in quaternionic form on `S^{4n-1}`.
    pub fn named(name: &str) -> Result<SphereFixture> {
        let (kind, n) = match name {
            "su4" => (AlgebraKind::Su, 4),
            "su6" => (AlgebraKind::Su, 6),
            "so8" => (AlgebraKind::So, 8),
            "so10" => (AlgebraKind::So, 10),
            "sp2" => (AlgebraKind::Sp, 2),
            "sp3" => (AlgebraKind::Sp, 3),
            _ => {
                return Err(param_err!(
                    "unknown sphere fixture {name:?}; expected one of {}",
                    SPHERE_FIXTURES.join(", ")
                ))
            }
        };
        let basis = matrix_lie::build_algebra_basis(kind, n)?;
        let rs = basis.root_system();
        let j = match kind {
            AlgebraKind::Su => rs.rank() / 2,
            _ => rs.rank() - 1,
        };
        let z = centralizer::hermitian_generator(rs, j)?;
        let z_field = SphereField::from_element(&basis.cartan_element(&z)?);
        let i1: Vec<Root> = rs
            .positive_roots()
            .iter()
            .filter(|a| !a.dot(&z).is_zero())
            .cloned()
            .collect();
        let m_fields = basis
            .pairs()
            .filter(|(a, _, _)| !a.dot(&z).is_zero())
            .flat_map(|(_, u, v)| [SphereField::from_element(u), SphereField::from_element(v)])
            .collect();
        let le8_pair = (kind == AlgebraKind::So && n >= 8).then(|| {
            let l = rs.ambient_dim();
            let e = |i| Vector::unit(l, i);
            (&e(0) + &e(1), &e(2) + &e(3))
        });
        Ok(SphereFixture {
            name: name.to_string(),
            basis,
            z,
            z_field,
            i1,
            m_fields,
            le8_pair,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.basis.root_system()
    }

    pub fn triple(&self, alpha: &Root) -> Result<RootTriple> {
        RootTriple::new(&self.basis, &self.z, alpha)
    }
}
