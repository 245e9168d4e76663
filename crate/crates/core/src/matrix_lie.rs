//! Matrix realisations of `su(n)`, `so(n)` and `sp(n)` with root-adapted bases.
//!
//! Entries are Gaussian rationals. `so(n)` matrices are real. `sp(n)` is
//! realised inside `u(2n)` as `[[A, B], [-conj(B), conj(A)]]` with `A`
//! anti-Hermitian and `B` complex symmetric.
//!
//! Cartan identification `h -> Phi(h)`:
//! - `su(n)`: `diag(i h_1, ..., i h_n)`;
//! - `so(n)`: `sum h_i F_{2i-1,2i}`, where `F_{a,b}` has `-1` at `(a,b)` and
//!   `1` at `(b,a)`; for odd `n` the last row and column stay outside;
//! - `sp(n)`: `diag(i h, -i h)`.
//!
//! For every positive root the pair `(U, V)` satisfies
//! `[Phi(h), U] = <a,h> V`, `[Phi(h), V] = -<a,h> U` and `[U, V] = Phi(a)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{domain_err, internal_err, param_err, Result};
use crate::linalg::{self, EchelonSpan, QMatrix};
use crate::rational::{qi, sqrt_exact, Vector, Q};
use crate::root_systems::{Root, RootKind, RootSystem};

/// Gaussian rational.
pub type GQ = Complex<Q>;

type Mat = Vec<Vec<GQ>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Su,
    So,
    Sp,
}

impl AlgebraKind {
    /// Side length of the complex matrices realising the algebra.
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            AlgebraKind::Sp => 2 * n,
            _ => n,
        }
    }

    /// Real dimension of the algebra.
    pub fn algebra_dim(self, n: usize) -> usize {
        match self {
            AlgebraKind::Su => n * n - 1,
            AlgebraKind::So => n * (n - 1) / 2,
            AlgebraKind::Sp => n * (2 * n + 1),
        }
    }

    /// Root system of the algebra: `A_{n-1}`, `B_l`/`D_l`, `C_n`.
    pub fn root_system(self, n: usize) -> Result<RootSystem> {
        let (kind, rank) = match self {
            AlgebraKind::Su if n >= 2 => (RootKind::A, n - 1),
            AlgebraKind::So if n >= 3 && n % 2 == 1 => (RootKind::B, n / 2),
            AlgebraKind::So if n >= 4 => (RootKind::D, n / 2),
            AlgebraKind::Sp if n >= 1 => (RootKind::C, n),
            _ => return Err(param_err!("{self}({n}) is not supported")),
        };
        RootSystem::build_unchecked(kind, rank)
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Su => "su",
            AlgebraKind::So => "so",
            AlgebraKind::Sp => "sp",
        })
    }
}

impl std::str::FromStr for AlgebraKind {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su" => Ok(AlgebraKind::Su),
            "so" => Ok(AlgebraKind::So),
            "sp" => Ok(AlgebraKind::Sp),
            _ => Err(param_err!("unknown matrix algebra kind {s:?}")),
        }
    }
}

fn zero_mat(d: usize) -> Mat {
    vec![vec![GQ::zero(); d]; d]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut out = zero_mat(d);
    for i in 0..d {
        for k in 0..d {
            let x = a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..d {
                out[i][j] += x * b[k][j];
            }
        }
    }
    out
}

fn trace(a: &Mat) -> GQ {
    (0..a.len()).fold(GQ::zero(), |acc, i| acc + a[i][i])
}

/// An element of `su(n)`, `so(n)` or `sp(n)` as an exact matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    kind: AlgebraKind,
    n: usize,
    matrix: Mat,
}

impl AlgebraElement {
    pub fn zero(kind: AlgebraKind, n: usize) -> Self {
        AlgebraElement {
            kind,
            n,
            matrix: zero_mat(kind.matrix_size(n)),
        }
    }

    /// Wraps a matrix after checking shape and the defining conditions.
    pub fn from_matrix(kind: AlgebraKind, n: usize, matrix: Vec<Vec<GQ>>) -> Result<Self> {
        let d = kind.matrix_size(n);
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(param_err!("{kind}({n}) needs {d}x{d} matrices"));
        }
        let x = AlgebraElement { kind, n, matrix };
        x.check_membership()?;
        Ok(x)
    }

    fn check_membership(&self) -> Result<()> {
        let d = self.matrix.len();
        let m = &self.matrix;
        for i in 0..d {
            for j in 0..d {
                if m[i][j] != -m[j][i].conj() {
                    return Err(param_err!(
                        "matrix is not anti-Hermitian at ({}, {})",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        match self.kind {
            AlgebraKind::Su if !trace(m).is_zero() => {
                Err(param_err!("su matrix has nonzero trace"))
            }
            AlgebraKind::So if m.iter().flatten().any(|z| !z.im.is_zero()) => {
                Err(param_err!("so matrix has non-real entries"))
            }
            AlgebraKind::Sp => {
                let n = self.n;
                for i in 0..n {
                    for j in 0..n {
                        if m[i + n][j + n] != m[i][j].conj() || m[i + n][j] != -m[i][j + n].conj() {
                            return Err(param_err!(
                                "matrix is not in sp({n}) at ({}, {})",
                                i + 1,
                                j + 1
                            ));
                        }
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `F_{i,j}` in `so(n)` (1-based): `-1` at `(i,j)`, `1` at `(j,i)`.
    pub fn f(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(param_err!("F_{{{i},{j}}} is not defined in so({n})"));
        }
        let mut x = Self::zero(AlgebraKind::So, n);
        x.matrix[i - 1][j - 1] = GQ::from(-Q::one());
        x.matrix[j - 1][i - 1] = GQ::from(Q::one());
        Ok(x)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<GQ>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind || self.n != other.n {
            return Err(param_err!(
                "shape mismatch: {}({}) vs {}({})",
                self.kind,
                self.n,
                other.kind,
                other.n
            ));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(GQ, GQ) -> GQ) -> Self {
        AlgebraElement {
            kind: self.kind,
            n: self.n,
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect())
                .collect(),
        }
    }

    /// Panics on shape mismatch; use [`bracket`] for checked input.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.kind, self.n), (other.kind, other.n));
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.kind, self.n), (other.kind, other.n));
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: Q) -> Self {
        AlgebraElement {
            kind: self.kind,
            n: self.n,
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|&x| x * c).collect())
                .collect(),
        }
    }

    /// Real and imaginary parts of all entries, row-major.
    pub fn flatten(&self) -> Vec<Q> {
        self.matrix
            .iter()
            .flatten()
            .flat_map(|z| [z.re, z.im])
            .collect()
    }

    /// Entries as `(re, im)` floating-point pairs.
    pub fn to_f64(&self) -> Vec<Vec<(f64, f64)>> {
        use crate::rational::to_f64;
        self.matrix
            .iter()
            .map(|r| r.iter().map(|z| (to_f64(&z.re), to_f64(&z.im))).collect())
            .collect()
    }

    /// `so` entries as `[num, den]`; `su`/`sp` entries as `[[re], [im]]`.
    pub fn to_json(&self) -> Value {
        let pair = |x: &Q| json!([x.numer(), x.denom()]);
        let rows: Vec<Value> = self
            .matrix
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|z| match self.kind {
                            AlgebraKind::So => pair(&z.re),
                            _ => json!([pair(&z.re), pair(&z.im)]),
                        })
                        .collect(),
                )
            })
            .collect();
        json!({"kind": self.kind, "n": self.n, "matrix": rows})
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `XY - YX`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.same_shape(y)?;
    Ok(bracket_unchecked(x, y))
}

fn bracket_unchecked(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let xy = mat_mul(&x.matrix, &y.matrix);
    let yx = mat_mul(&y.matrix, &x.matrix);
    AlgebraElement {
        kind: x.kind,
        n: x.n,
        matrix: xy
            .iter()
            .zip(&yx)
            .map(|(a, b)| a.iter().zip(b).map(|(&p, &q)| p - q).collect())
            .collect(),
    }
}

/// `-Re tr(XY)`, positive definite on the compact forms.
pub fn invariant_form(x: &AlgebraElement, y: &AlgebraElement) -> Result<Q> {
    x.same_shape(y)?;
    Ok(form(x, y))
}

fn form(x: &AlgebraElement, y: &AlgebraElement) -> Q {
    // Re tr(XY) without forming the product.
    let d = x.matrix.len();
    let mut acc = Q::zero();
    for i in 0..d {
        for k in 0..d {
            let p = x.matrix[i][k] * y.matrix[k][i];
            acc += p.re;
        }
    }
    -acc
}

/// Cartan subalgebra and root vectors of a classical matrix algebra.
#[derive(Debug, Clone)]
pub struct RootBasis {
    kind: AlgebraKind,
    n: usize,
    roots: RootSystem,
    /// Orthogonal basis of `t` in ambient coordinates.
    cartan_vectors: Vec<Vector>,
    cartan: Vec<AlgebraElement>,
    /// `(U_a, V_a)` in the order of `roots.positive_roots()`.
    pairs: Vec<(AlgebraElement, AlgebraElement)>,
    /// `<Phi(h), Phi(h)> / |h|^2`.
    trace_scale: Q,
    /// `[U, V] / Phi(a)` before the pairs were rotated.
    raw_root_scales: Vec<Q>,
    /// Killing form over the trace form `Re tr(XY)`.
    killing_ratio: Q,
}

impl RootBasis {
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn cartan(&self) -> &[AlgebraElement] {
        &self.cartan
    }

    pub fn cartan_vectors(&self) -> &[Vector] {
        &self.cartan_vectors
    }

    /// Positive roots paired with `(U_a, V_a)`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Root, &AlgebraElement, &AlgebraElement)> {
        self.roots
            .positive_roots()
            .iter()
            .zip(&self.pairs)
            .map(|(a, (u, v))| (a, u, v))
    }

    pub fn pair(&self, alpha: &Root) -> Option<(&AlgebraElement, &AlgebraElement)> {
        let i = self.roots.positive_root_index(alpha)?;
        let (u, v) = &self.pairs[i];
        Some((u, v))
    }

    pub fn trace_scale(&self) -> Q {
        self.trace_scale
    }

    /// Ratio of `[U_a, V_a]` to `Phi(a)` for the unrotated root vectors, one
    /// per positive root.
    pub fn raw_root_scales(&self) -> &[Q] {
        &self.raw_root_scales
    }

    /// `B(X, Y) / Re tr(XY)` for the Killing form `B`.
    pub fn killing_ratio(&self) -> Q {
        self.killing_ratio
    }

    pub fn dim(&self) -> usize {
        self.cartan.len() + 2 * self.pairs.len()
    }

    /// Cartan basis followed by `U_a, V_a` for each positive root.
    pub fn elements(&self) -> Vec<AlgebraElement> {
        let mut out = self.cartan.clone();
        for (u, v) in &self.pairs {
            out.push(u.clone());
            out.push(v.clone());
        }
        out
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.kind, self.n)
    }

    /// `Phi(h)` for `h` in `t`.
    pub fn cartan_element(&self, h: &Vector) -> Result<AlgebraElement> {
        self.roots.check_cartan(h)?;
        Ok(phi(self.kind, self.n, h))
    }

    /// Coordinates of `x` in [`RootBasis::elements`].
    pub fn coordinates(&self, x: &AlgebraElement) -> Result<Vec<Q>> {
        x.same_shape(&self.zero())?;
        let elems = self.elements();
        let coords: Vec<Q> = elems.iter().map(|b| form(x, b) / form(b, b)).collect();
        if self.combine(&coords) != *x {
            return Err(param_err!(
                "matrix does not lie in {}({})",
                self.kind,
                self.n
            ));
        }
        Ok(coords)
    }

    pub fn combine(&self, coords: &[Q]) -> AlgebraElement {
        self.elements()
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(self.zero(), |acc, (b, &c)| acc.add(&b.scale(c)))
    }

    /// The `h` with `Phi(h) = x`, for `x` in the Cartan subalgebra.
    pub fn cartan_vector(&self, x: &AlgebraElement) -> Result<Vector> {
        let coords = self.coordinates(x)?;
        if coords[self.cartan.len()..].iter().any(|c| !c.is_zero()) {
            return Err(param_err!("element is not in the Cartan subalgebra"));
        }
        Ok(self
            .cartan_vectors
            .iter()
            .zip(&coords)
            .fold(Vector::zeros(self.roots.ambient_dim()), |acc, (h, &c)| {
                acc.add_scaled(c, h)
            }))
    }

    /// Matrix of `ad x` in the coordinates of [`RootBasis::elements`].
    pub fn ad_matrix(&self, x: &AlgebraElement) -> Result<QMatrix> {
        let elems = self.elements();
        let d = elems.len();
        let mut m = vec![vec![Q::zero(); d]; d];
        for (k, b) in elems.iter().enumerate() {
            let c = self.coordinates(&bracket(x, b)?)?;
            for i in 0..d {
                m[i][k] = c[i];
            }
        }
        Ok(m)
    }
}

fn phi(kind: AlgebraKind, n: usize, h: &Vector) -> AlgebraElement {
    let mut x = AlgebraElement::zero(kind, n);
    let m = &mut x.matrix;
    match kind {
        AlgebraKind::Su => {
            for (i, c) in h.iter().enumerate() {
                m[i][i] = GQ::new(Q::zero(), *c);
            }
        }
        AlgebraKind::So => {
            for (i, c) in h.iter().enumerate() {
                m[2 * i][2 * i + 1] = GQ::from(-c);
                m[2 * i + 1][2 * i] = GQ::from(*c);
            }
        }
        AlgebraKind::Sp => {
            for (i, c) in h.iter().enumerate() {
                m[i][i] = GQ::new(Q::zero(), *c);
                m[i + n][i + n] = GQ::new(Q::zero(), -c);
            }
        }
    }
    x
}

/// A matrix in the real two-dimensional weight space of `alpha`, before
/// normalisation.
fn raw_root_vector(kind: AlgebraKind, n: usize, alpha: &Root) -> Result<AlgebraElement> {
    let one = GQ::from(Q::one());
    let nz: Vec<(usize, Q)> = alpha
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, *c))
        .collect();
    let mut x = AlgebraElement::zero(kind, n);
    let m = &mut x.matrix;
    let set = |m: &mut Mat, i: usize, j: usize, v: GQ| {
        m[i][j] = v;
        m[j][i] = -v.conj();
    };
    match (kind, nz.as_slice()) {
        (AlgebraKind::Su, [(j, _), (k, _)]) => set(m, *j, *k, one),
        (AlgebraKind::So, [(i, _), (j, b)]) => {
            // Block (i, j) equal to I commutes with the rotation generator
            // (weight e_i - e_j); diag(1, -1) anticommutes (weight e_i + e_j).
            set(m, 2 * i, 2 * j, one);
            set(
                m,
                2 * i + 1,
                2 * j + 1,
                if b.is_negative() { one } else { -one },
            );
        }
        (AlgebraKind::So, [(i, _)]) => set(m, 2 * i, n - 1, one),
        (AlgebraKind::Sp, [(j, _), (k, b)]) if b.is_negative() => {
            set(m, *j, *k, one);
            set(m, j + n, k + n, one);
        }
        (AlgebraKind::Sp, [(j, _), (k, _)]) => {
            set(m, *j, k + n, one);
            set(m, *k, j + n, one);
        }
        (AlgebraKind::Sp, [(j, _)]) => set(m, *j, j + n, one),
        _ => {
            return Err(internal_err!(
                "no root vector recipe for {alpha} in {kind}({n})"
            ))
        }
    }
    Ok(x)
}

/// Builds `t` and the pairs `(U_a, V_a)` for `su(n)` (`n >= 2`), `so(n)`
/// (`n >= 3`) or `sp(n)` (`n >= 1`).
///
/// `V = [Phi(a), U] / |a|^2`. When `[U, V] = 2 Phi(a)` the pair is replaced
/// by `((U + V)/2, (V - U)/2)`, which keeps the weight relations and halves
/// the bracket.
pub fn build_algebra_basis(kind: AlgebraKind, n: usize) -> Result<RootBasis> {
    let roots = kind.root_system(n)?;
    let ambient = roots.ambient_dim();
    let cartan_vectors: Vec<Vector> = match kind {
        AlgebraKind::Su => gram_schmidt(roots.simple_roots()),
        _ => (0..ambient).map(|i| Vector::unit(ambient, i)).collect(),
    };
    let cartan: Vec<AlgebraElement> = cartan_vectors.iter().map(|h| phi(kind, n, h)).collect();

    let mut pairs = Vec::new();
    let mut raw_root_scales = Vec::new();
    for alpha in roots.positive_roots() {
        let phi_a = phi(kind, n, alpha);
        let u = raw_root_vector(kind, n, alpha)?;
        let v = bracket_unchecked(&phi_a, &u).scale(alpha.norm2().recip());
        let uv = bracket_unchecked(&u, &v);
        let scale = if uv == phi_a {
            Q::one()
        } else if uv == phi_a.scale(qi(2)) {
            qi(2)
        } else {
            return Err(internal_err!(
                "[U, V] is not a multiple of Phi({alpha}) in {kind}({n})"
            ));
        };
        raw_root_scales.push(scale);
        let (u, v) = if scale == Q::one() {
            (u, v)
        } else {
            let half = Q::new(1, 2);
            (u.add(&v).scale(half), v.sub(&u).scale(half))
        };
        pairs.push((u, v));
    }

    let trace_scale = form(&cartan[0], &cartan[0]) / cartan_vectors[0].norm2();
    let mut basis = RootBasis {
        kind,
        n,
        roots,
        cartan_vectors,
        cartan,
        pairs,
        trace_scale,
        raw_root_scales,
        killing_ratio: Q::zero(),
    };
    check_relations(&basis)?;
    let h = &basis.cartan[0];
    let ad = basis.ad_matrix(h)?;
    let killing = (0..ad.len()).fold(Q::zero(), |acc, i| {
        acc + (0..ad.len()).fold(Q::zero(), |a, k| a + ad[i][k] * ad[k][i])
    });
    basis.killing_ratio = killing / -form(h, h);
    Ok(basis)
}

fn gram_schmidt(vs: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let w = out.iter().fold(v.clone(), |acc, b| {
            acc.add_scaled(-(v.dot(b) / b.norm2()), b)
        });
        out.push(w);
    }
    out
}

/// Checks the weight relations, `[U, V] = Phi(a)`, the form relations and
/// membership of every basis element, exactly.
pub fn check_relations(basis: &RootBasis) -> Result<()> {
    for x in basis.elements() {
        x.check_membership()
            .map_err(|e| internal_err!("basis element outside {}({}): {e}", basis.kind, basis.n))?;
    }
    for (alpha, u, v) in basis.pairs() {
        for (h, hm) in basis.cartan_vectors.iter().zip(&basis.cartan) {
            let c = alpha.dot(h);
            if bracket_unchecked(hm, u) != v.scale(c) || bracket_unchecked(hm, v) != u.scale(-c) {
                return Err(internal_err!(
                    "weight relations fail for {alpha} against H = {h}"
                ));
            }
        }
        if bracket_unchecked(u, v) != phi(basis.kind, basis.n, alpha) {
            return Err(internal_err!("[U, V] differs from Phi({alpha})"));
        }
        if form(u, u) != form(v, v) || !form(u, v).is_zero() {
            return Err(internal_err!(
                "U and V for {alpha} are not an orthogonal pair of equal length"
            ));
        }
    }
    let rank = {
        let mut span = EchelonSpan::new();
        basis
            .elements()
            .iter()
            .filter(|x| span.insert(&x.flatten()))
            .count()
    };
    if rank != basis.kind.algebra_dim(basis.n) {
        return Err(internal_err!(
            "basis spans {rank} dimensions, expected {}",
            basis.kind.algebra_dim(basis.n)
        ));
    }
    Ok(())
}

/// One nonzero level of `L_Z^2` on the whole algebra.
#[derive(Debug, Clone)]
pub struct MatrixLevel {
    pub lambda: Q,
    pub basis: Vec<AlgebraElement>,
}

/// Kernel and eigenspaces of `L_Z^2`, computed from the adjoint matrix.
#[derive(Debug, Clone)]
pub struct MatrixSpectrum {
    pub m0: Vec<AlgebraElement>,
    /// Ascending in `lambda`.
    pub levels: Vec<MatrixLevel>,
}

impl MatrixSpectrum {
    pub fn level_dims(&self) -> Vec<(Q, usize)> {
        self.levels
            .iter()
            .map(|l| (l.lambda, l.basis.len()))
            .collect()
    }
}

/// Exact eigenspace decomposition of `(ad Z)^2`. Candidate eigenvalues
/// `-lambda^2` come from the root pairings `<Z, a>`; the eigenspaces found
/// must exhaust the algebra.
pub fn ad_squared_eigenspaces(basis: &RootBasis, z: &AlgebraElement) -> Result<MatrixSpectrum> {
    let h = basis.cartan_vector(z)?;
    let ad = basis.ad_matrix(z)?;
    let l2 = linalg::mat_mul(&ad, &ad);
    let d = l2.len();
    let candidates: BTreeSet<Q> = basis
        .roots
        .positive_roots()
        .iter()
        .map(|a| a.dot(&h).abs())
        .filter(|x| !x.is_zero())
        .collect();
    let space = |shift: Q| -> Vec<AlgebraElement> {
        let mut m = l2.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += shift;
        }
        linalg::nullspace(&m, d)
            .iter()
            .map(|c| basis.combine(c))
            .collect()
    };
    let m0 = space(Q::zero());
    let levels: Vec<MatrixLevel> = candidates
        .into_iter()
        .map(|lambda| MatrixLevel {
            lambda,
            basis: space(lambda * lambda),
        })
        .collect();
    let total = m0.len() + levels.iter().map(|l| l.basis.len()).sum::<usize>();
    if total != d {
        return Err(internal_err!(
            "eigenspaces of L_Z^2 cover {total} of {d} dimensions"
        ));
    }
    Ok(MatrixSpectrum { m0, levels })
}

fn l_squared(z: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    bracket_unchecked(z, &bracket_unchecked(z, y))
}

/// The `lambda >= 0` with `L_Z^2 Y = -lambda^2 Y`, or `None` if `Y` is not an
/// eigenvector. Zero is reported as `Some(0)`.
pub fn eigen_level(z: &AlgebraElement, y: &AlgebraElement) -> Result<Option<Q>> {
    z.same_shape(y)?;
    if y.is_zero() {
        return Ok(Some(Q::zero()));
    }
    let l2y = l_squared(z, y);
    let lambda2 = -form(&l2y, y) / form(y, y);
    if l2y != y.scale(-lambda2) {
        return Ok(None);
    }
    Ok(sqrt_exact(&lambda2))
}

fn positive_level(z: &AlgebraElement, y: &AlgebraElement, what: &str) -> Result<Q> {
    match eigen_level(z, y)? {
        None => Err(domain_err!("{what} is not in a single eigenspace of L_Z^2")),
        Some(l) if l.is_zero() => Err(domain_err!("{what} lies in m_0")),
        Some(l) => Ok(l),
    }
}

/// `sigma(Y) = [Z, Y] / lambda` for `Y` in `m_lambda`, `lambda > 0`.
/// The zero vector maps to zero.
pub fn sigma(z: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if y.is_zero() {
        z.same_shape(y)?;
        return Ok(y.clone());
    }
    let lambda = positive_level(z, y, "Y")?;
    Ok(bracket_unchecked(z, y).scale(lambda.recip()))
}

#[derive(Debug, Clone)]
pub struct GradedBrackets {
    /// `([U,V] - [sigma U, sigma V]) / 2`, in `m_{a+b}`.
    pub plus: AlgebraElement,
    /// `([U,V] + [sigma U, sigma V]) / 2`, in `m_{|a-b|}`.
    pub minus: AlgebraElement,
    pub lambda_plus: Q,
    pub lambda_minus: Q,
}

/// Splits `[U, V]` for `U` in `m_a`, `V` in `m_b` into its `m_{a+b}` and
/// `m_{|a-b|}` components and checks both memberships exactly.
pub fn graded_brackets(
    z: &AlgebraElement,
    u: &AlgebraElement,
    v: &AlgebraElement,
) -> Result<GradedBrackets> {
    let a = level_or_zero(z, u, "U")?;
    let b = level_or_zero(z, v, "V")?;
    let uv = bracket(u, v)?;
    let s = bracket_unchecked(&sigma(z, u)?, &sigma(z, v)?);
    let half = Q::new(1, 2);
    let out = GradedBrackets {
        plus: uv.sub(&s).scale(half),
        minus: uv.add(&s).scale(half),
        lambda_plus: a + b,
        lambda_minus: (a - b).abs(),
    };
    for (x, l, name) in [
        (&out.plus, out.lambda_plus, "plus"),
        (&out.minus, out.lambda_minus, "minus"),
    ] {
        if l_squared(z, x) != x.scale(-(l * l)) {
            return Err(internal_err!("{name} component is not in m_{l}"));
        }
    }
    Ok(out)
}

fn level_or_zero(z: &AlgebraElement, y: &AlgebraElement, what: &str) -> Result<Q> {
    if y.is_zero() {
        z.same_shape(y)?;
        return Ok(Q::zero());
    }
    positive_level(z, y, what)
}

/// `h(X) = [X, sigma(X)]`, checked to lie in `m_0`.
pub fn h_vector(z: &AlgebraElement, x: &AlgebraElement) -> Result<AlgebraElement> {
    let h = bracket(x, &sigma(z, x)?)?;
    if !bracket_unchecked(z, &h).is_zero() {
        return Err(internal_err!("h(X) does not commute with Z"));
    }
    Ok(h)
}

/// `u` and its complementary ideal `p + [p, p]` in `g = h + p`.
#[derive(Debug, Clone)]
pub struct UIdeal {
    pub u: Vec<AlgebraElement>,
    pub complement: Vec<AlgebraElement>,
    pub dim_g: usize,
}

fn independent(elems: &[AlgebraElement]) -> (EchelonSpan, Vec<AlgebraElement>) {
    let mut span = EchelonSpan::new();
    let picked = elems
        .iter()
        .filter(|x| span.insert(&x.flatten()))
        .cloned()
        .collect();
    (span, picked)
}

fn closed_under(span: &EchelonSpan, xs: &[AlgebraElement], ys: &[AlgebraElement]) -> bool {
    xs.iter().all(|x| {
        ys.iter()
            .all(|y| span.contains(&bracket_unchecked(x, y).flatten()))
    })
}

/// For a subalgebra `h` and a form-orthogonal subspace `p` with `g = h + p`
/// a Lie algebra, returns `u = {W in h : [W, p] = 0}` and `p + [p, p]`, and
/// checks that both are ideals of `g` and that `g` is their direct sum.
pub fn u_ideal(h_subalg: &[AlgebraElement], p_subspace: &[AlgebraElement]) -> Result<UIdeal> {
    let all: Vec<AlgebraElement> = h_subalg.iter().chain(p_subspace).cloned().collect();
    let Some(first) = all.first() else {
        return Err(param_err!("h and p are both empty"));
    };
    for x in &all {
        x.same_shape(first)?;
    }
    for x in h_subalg {
        for y in p_subspace {
            if !form(x, y).is_zero() {
                return Err(param_err!(
                    "h and p are not orthogonal under the invariant form"
                ));
            }
        }
    }
    let (h_span, h) = independent(h_subalg);
    let (_, p) = independent(p_subspace);
    if !closed_under(&h_span, &h, &h) {
        return Err(param_err!("h is not closed under the bracket"));
    }
    let (g_span, g) = independent(&all);
    if !closed_under(&g_span, &g, &g) {
        return Err(param_err!("h + p is not closed under the bracket"));
    }

    // Coefficients c with [sum c_i h_i, p_j] = 0 for every j.
    let cols: Vec<Vec<Q>> = h
        .iter()
        .map(|hi| {
            p.iter()
                .flat_map(|pj| bracket_unchecked(hi, pj).flatten())
                .collect()
        })
        .collect();
    let rows = cols.first().map_or(0, Vec::len);
    let system: QMatrix = (0..rows)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let u: Vec<AlgebraElement> = if p.is_empty() {
        h.clone()
    } else {
        linalg::nullspace(&system, h.len())
            .iter()
            .map(|c| {
                h.iter().zip(c).fold(
                    AlgebraElement::zero(first.kind, first.n),
                    |acc, (x, &ci)| acc.add(&x.scale(ci)),
                )
            })
            .collect()
    };

    let mut pp = p.clone();
    for (i, a) in p.iter().enumerate() {
        for b in &p[i + 1..] {
            pp.push(bracket_unchecked(a, b));
        }
    }
    let (c_span, complement) = independent(&pp);
    let (u_span, u) = independent(&u);
    if !closed_under(&u_span, &u, &g) {
        return Err(internal_err!("u is not an ideal"));
    }
    if !closed_under(&c_span, &complement, &g) {
        return Err(internal_err!("p + [p, p] is not an ideal"));
    }
    if u.len() + complement.len() != g.len()
        || u.iter()
            .any(|x| complement.iter().any(|y| !form(x, y).is_zero()))
    {
        return Err(internal_err!(
            "u and p + [p, p] are not orthogonal complements in g"
        ));
    }
    Ok(UIdeal {
        u,
        complement,
        dim_g: g.len(),
    })
}

/// `F_{1,2}, F_{2,3}, F_{1,3}` in `so(n)`.
#[derive(Debug, Clone)]
pub struct So3Triple {
    pub f12: AlgebraElement,
    pub f23: AlgebraElement,
    pub f13: AlgebraElement,
}

impl So3Triple {
    pub fn elements(&self) -> [&AlgebraElement; 3] {
        [&self.f12, &self.f23, &self.f13]
    }
}

/// The `so(3)` spanned by `F_{1,2}, F_{2,3}, F_{1,3}`. Checks that
/// `[Y, [Y, X]] = -X` for every ordered pair of distinct triple elements,
/// which are orthogonal of squared length 2.
pub fn so3_triple(n: usize) -> Result<So3Triple> {
    if n < 3 {
        return Err(param_err!("so3_triple needs n >= 3, got {n}"));
    }
    let t = So3Triple {
        f12: AlgebraElement::f(n, 1, 2)?,
        f23: AlgebraElement::f(n, 2, 3)?,
        f13: AlgebraElement::f(n, 1, 3)?,
    };
    check_so3_relation(&t.elements().map(Clone::clone))?;
    Ok(t)
}

/// Checks `[Y, [Y, X]] = -(<Y,Y>/2) X` for distinct elements of a pairwise
/// orthogonal family spanning an `so(3)`; with `<Y,Y> = 2` this is `-X`.
pub fn check_so3_relation(elems: &[AlgebraElement]) -> Result<()> {
    for x in elems {
        for y in elems {
            if x == y {
                continue;
            }
            let c = form(y, y) / qi(2);
            if bracket_unchecked(y, &bracket_unchecked(y, x)) != x.scale(-c) {
                return Err(internal_err!("[Y, [Y, X]] != -X in the so(3) triple"));
            }
        }
    }
    Ok(())
}

/// Partition of `I_1(Z)` into the minimal `ad(m_0)`-invariant subspaces of
/// `m`, computed from matrices. Each subspace is grown from one `U_a` and must
/// be exactly the span of the `v_b` it meets.
pub fn matrix_summands(basis: &RootBasis, h: &Vector) -> Result<Vec<Vec<Root>>> {
    let z = basis.cartan_element(h)?;
    let spectrum = ad_squared_eigenspaces(basis, &z)?;
    let i1: Vec<(&Root, &AlgebraElement, &AlgebraElement)> = basis
        .pairs()
        .filter(|(a, _, _)| !a.dot(h).is_zero())
        .collect();
    let mut assigned: HashSet<&Root> = HashSet::new();
    let mut parts = Vec::new();
    for (alpha, u, _) in &i1 {
        if assigned.contains(alpha) {
            continue;
        }
        let mut span = EchelonSpan::new();
        let mut frontier = vec![(*u).clone()];
        span.insert(&u.flatten());
        while let Some(w) = frontier.pop() {
            for m in &spectrum.m0 {
                let x = bracket_unchecked(m, &w);
                if span.insert(&x.flatten()) {
                    frontier.push(x);
                }
            }
        }
        let members: Vec<Root> = i1
            .iter()
            .filter(|(_, ub, vb)| span.contains(&ub.flatten()) && span.contains(&vb.flatten()))
            .map(|(b, _, _)| (*b).clone())
            .collect();
        if 2 * members.len() != span.dim() {
            return Err(internal_err!(
                "ad(m_0)-module generated by U_{alpha} is not a sum of root spaces"
            ));
        }
        for b in &members {
            if !assigned.insert(i1.iter().find(|(r, _, _)| *r == b).unwrap().0) {
                return Err(internal_err!("root {b} lies in two summands"));
            }
        }
        parts.push(members);
    }
    parts.sort();
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn su2_basis() {
        let b = build_algebra_basis(AlgebraKind::Su, 2).unwrap();
        assert_eq!(b.cartan().len(), 1);
        assert_eq!(b.pairs().count(), 1);
        let (alpha, u, vv) = b.pairs().next().unwrap();
        assert_eq!(*alpha, v(&[1, -1]));
        assert_eq!(bracket(u, vv).unwrap(), b.cartan_element(alpha).unwrap());
        assert_eq!(b.raw_root_scales(), &[qi(2)]);
    }

    #[test]
    fn so4_basis() {
        let b = build_algebra_basis(AlgebraKind::So, 4).unwrap();
        assert_eq!(b.cartan()[0], AlgebraElement::f(4, 1, 2).unwrap());
        assert_eq!(b.cartan()[1], AlgebraElement::f(4, 3, 4).unwrap());
        let roots: Vec<&Root> = b.pairs().map(|(a, _, _)| a).collect();
        assert_eq!(roots, vec![&v(&[1, -1]), &v(&[1, 1])]);
    }

    #[test]
    fn sp1_basis() {
        let b = build_algebra_basis(AlgebraKind::Sp, 1).unwrap();
        let roots: Vec<&Root> = b.pairs().map(|(a, _, _)| a).collect();
        assert_eq!(roots, vec![&v(&[2])]);
        assert_eq!(b.dim(), 3);
    }

    #[test]
    fn unsupported_sizes() {
        assert!(build_algebra_basis(AlgebraKind::Su, 1).is_err());
        assert!(build_algebra_basis(AlgebraKind::So, 2).is_err());
        assert!(build_algebra_basis(AlgebraKind::Sp, 0).is_err());
    }

    #[test]
    fn killing_ratios() {
        let r = |k, n| build_algebra_basis(k, n).unwrap().killing_ratio();
        assert_eq!(r(AlgebraKind::Su, 3), qi(6));
        assert_eq!(r(AlgebraKind::So, 7), qi(5));
        assert_eq!(r(AlgebraKind::So, 8), qi(6));
        assert_eq!(r(AlgebraKind::Sp, 2), qi(6));
    }

    #[test]
    fn bracket_examples() {
        let f12 = AlgebraElement::f(3, 1, 2).unwrap();
        let f23 = AlgebraElement::f(3, 2, 3).unwrap();
        let f13 = AlgebraElement::f(3, 1, 3).unwrap();
        assert!(bracket(&f12, &f12).unwrap().is_zero());
        assert_eq!(bracket(&f12, &f23).unwrap(), f13.scale(-Q::one()));
        let su = AlgebraElement::zero(AlgebraKind::Su, 3);
        assert!(matches!(
            bracket(&f12, &su),
            Err(crate::Error::Parameter(_))
        ));
    }

    #[test]
    fn invariant_form_examples() {
        let f12 = AlgebraElement::f(5, 1, 2).unwrap();
        assert_eq!(invariant_form(&f12, &f12).unwrap(), qi(2));
        let b = build_algebra_basis(AlgebraKind::Sp, 2).unwrap();
        for (_, u, vv) in b.pairs() {
            assert!(invariant_form(u, vv).unwrap().is_zero());
            assert!(invariant_form(u, u).unwrap().is_positive());
        }
    }

    #[test]
    fn spectra_match_examples() {
        let su3 = build_algebra_basis(AlgebraKind::Su, 3).unwrap();
        let z = su3
            .cartan_element(&Vector::new(vec![q(1, 3), q(1, 3), q(-2, 3)]))
            .unwrap();
        let s = ad_squared_eigenspaces(&su3, &z).unwrap();
        assert_eq!(s.m0.len(), 4);
        assert_eq!(s.level_dims(), vec![(qi(1), 4)]);

        let so7 = build_algebra_basis(AlgebraKind::So, 7).unwrap();
        let z = AlgebraElement::f(7, 1, 2).unwrap();
        let s = ad_squared_eigenspaces(&so7, &z).unwrap();
        assert_eq!(s.level_dims(), vec![(qi(1), 10)]);
        assert_eq!(s.m0.len(), 11);

        let s = ad_squared_eigenspaces(&so7, &so7.zero()).unwrap();
        assert_eq!(s.m0.len(), 21);
        assert!(s.levels.is_empty());
    }

    #[test]
    fn sigma_and_h_on_root_vectors() {
        let b = build_algebra_basis(AlgebraKind::Su, 4).unwrap();
        let h = Vector::new(vec![q(1, 2), q(1, 2), q(-1, 2), q(-1, 2)]);
        let z = b.cartan_element(&h).unwrap();
        let alpha = v(&[1, 0, -1, 0]);
        let (u, vv) = b.pair(&alpha).unwrap();
        assert_eq!(sigma(&z, u).unwrap(), *vv);
        assert_eq!(
            sigma(&z, &sigma(&z, u).unwrap()).unwrap(),
            u.scale(-Q::one())
        );
        assert_eq!(h_vector(&z, u).unwrap(), b.cartan_element(&alpha).unwrap());
        assert!(h_vector(&z, &b.zero()).unwrap().is_zero());
        // A Cartan element lies in m_0.
        assert!(matches!(sigma(&z, &z), Err(crate::Error::Domain(_))));
        // Mixing levels is rejected.
        let z2 = b.cartan_element(&v(&[1, 0, 0, -1])).unwrap();
        let mixed = b
            .pair(&v(&[1, 0, 0, -1]))
            .unwrap()
            .0
            .add(b.pair(&alpha).unwrap().0);
        assert!(matches!(sigma(&z2, &mixed), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn graded_bracket_examples() {
        let b = build_algebra_basis(AlgebraKind::So, 8).unwrap();
        let z = b.cartan_element(&Vector::new(vec![q(1, 2); 4])).unwrap();
        let (u, _) = b.pair(&v(&[1, 1, 0, 0])).unwrap();
        let g = graded_brackets(&z, u, &sigma(&z, u).unwrap()).unwrap();
        assert!(g.plus.is_zero());
        assert!(g.lambda_minus.is_zero());
    }

    #[test]
    fn u_ideal_examples() {
        let su2 = |offset: usize| -> Vec<AlgebraElement> {
            let b = build_algebra_basis(AlgebraKind::Su, 2).unwrap();
            b.elements()
                .iter()
                .map(|x| {
                    let mut m = zero_mat(4);
                    for i in 0..2 {
                        for j in 0..2 {
                            m[i + offset][j + offset] = x.matrix()[i][j];
                        }
                    }
                    // Shift to make the trace vanish blockwise: already traceless.
                    AlgebraElement::from_matrix(AlgebraKind::Su, 4, m).unwrap()
                })
                .collect()
        };
        let r = u_ideal(&su2(0), &su2(2)).unwrap();
        assert_eq!((r.u.len(), r.complement.len(), r.dim_g), (3, 3, 6));

        let so5 = build_algebra_basis(AlgebraKind::So, 5).unwrap();
        let r = u_ideal(&so5.elements(), &[]).unwrap();
        assert_eq!(r.u.len(), 10);
        assert!(r.complement.is_empty());

        let f12 = AlgebraElement::f(3, 1, 2).unwrap();
        assert!(matches!(
            u_ideal(&[f12.clone()], &[f12]),
            Err(crate::Error::Parameter(_))
        ));
    }

    #[test]
    fn so3_triple_relations() {
        let t = so3_triple(3).unwrap();
        let d = bracket(&t.f23, &bracket(&t.f23, &t.f12).unwrap()).unwrap();
        assert_eq!(d, t.f12.scale(-Q::one()));
        assert!(invariant_form(&t.f12, &t.f23).unwrap().is_zero());
        assert!(so3_triple(2).is_err());
    }

    #[test]
    fn json_export() {
        let f12 = AlgebraElement::f(2, 1, 2).unwrap();
        assert_eq!(
            f12.to_json()["matrix"],
            json!([[[0, 1], [-1, 1]], [[1, 1], [0, 1]]])
        );
        let b = build_algebra_basis(AlgebraKind::Su, 2).unwrap();
        assert_eq!(
            b.cartan()[0].to_json()["matrix"][0][0],
            json!([[0, 1], [1, 1]])
        );
    }

    #[test]
    fn coordinates_reject_foreign_matrices() {
        let b = build_algebra_basis(AlgebraKind::So, 4).unwrap();
        let x = AlgebraElement::f(4, 1, 3)
            .unwrap()
            .add(&AlgebraElement::f(4, 2, 4).unwrap());
        let c = b.coordinates(&x).unwrap();
        assert_eq!(b.combine(&c), x);
        assert!(b.cartan_vector(&x).is_err());
    }
}
