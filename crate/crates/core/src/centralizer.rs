//! Centralizers of Cartan elements and the Hermitian-pair classification.
//!
//! For `Z` in `t` the positive roots split into `I_1(Z)` (nonzero pairing) and
//! `I_2(Z)` (zero pairing). The centralizer `k` is `t` plus the root spaces of
//! `I_2`, its complement `m` is the sum of the root spaces of `I_1`, and
//! `(ad Z)^2` acts on `v_a` as `-<Z,a>^2`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{domain_err, internal_err, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{qi, Vector, Q};
use crate::root_systems::{Root, RootKind, RootSystem};
use crate::weyl::{self, CartanVector};

/// Partition of the positive roots by whether they pair to zero with `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSplit {
    /// `<Z, a> != 0`.
    pub i1: Vec<Root>,
    /// `<Z, a> == 0`.
    pub i2: Vec<Root>,
}

pub fn split_roots(rs: &RootSystem, z: &CartanVector) -> Result<RootSplit> {
    rs.check_cartan(z)?;
    let (i1, i2) = rs
        .positive_roots()
        .iter()
        .cloned()
        .partition(|a| !a.dot(z).is_zero());
    Ok(RootSplit { i1, i2 })
}

/// Regular means the centralizer is exactly `t`.
pub fn is_regular(rs: &RootSystem, z: &CartanVector) -> Result<bool> {
    Ok(split_roots(rs, z)?.i2.is_empty())
}

/// A simple factor type such as `A4` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleFactor {
    pub kind: RootKind,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(kind: RootKind, rank: usize) -> Self {
        SimpleFactor { kind, rank }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind.label(self.rank))
    }
}

impl Serialize for SimpleFactor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Names a simple type the way Cartan-matrix matching reports it, folding the
/// low-rank coincidences: B1 = C1 = A1, C2 = B2, D2 = A1 + A1, D3 = A3.
/// Rank-0 and D1 (abelian) factors vanish.
pub fn canonical_factors(kind: RootKind, rank: usize) -> Vec<SimpleFactor> {
    use RootKind::*;
    match (kind, rank) {
        (_, 0) | (D, 1) => vec![],
        (B | C, 1) => vec![SimpleFactor::new(A, 1)],
        (C, 2) => vec![SimpleFactor::new(B, 2)],
        (D, 2) => vec![SimpleFactor::new(A, 1), SimpleFactor::new(A, 1)],
        (D, 3) => vec![SimpleFactor::new(A, 3)],
        (k, r) => vec![SimpleFactor::new(k, r)],
    }
}

/// Semisimple type and center of the centralizer of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerDescriptor {
    /// Sorted simple factors of the semisimple part.
    pub factors: Vec<SimpleFactor>,
    pub center_dim: usize,
    /// The center is one-dimensional and spanned by `Z`.
    pub z_spans_center: bool,
}

impl CentralizerDescriptor {
    /// E.g. `A1+A1+R` or `D5+R`.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        match self.center_dim {
            0 => {}
            1 => parts.push("R".into()),
            d => parts.push(format!("R^{d}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// Simple roots of the closed subsystem whose positive roots are `positive`:
/// the elements that are not a sum of two others.
pub fn subsystem_simple_roots(positive: &[Root]) -> Vec<Root> {
    let set: HashSet<&Root> = positive.iter().collect();
    positive
        .iter()
        .filter(|a| !positive.iter().any(|b| set.contains(&(*a - b))))
        .cloned()
        .collect()
}

fn cartan_matrix(simple: &[Root]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| (qi(2) * a.dot(b) / b.norm2()).to_integer())
                .collect()
        })
        .collect()
}

/// Identifies the simple factors of a closed root subsystem from the Cartan
/// matrix of its simple roots. Each component's type is cross-checked
/// against its positive-root count and Cartan determinant.
pub fn subsystem_type(positive: &[Root]) -> Result<Vec<SimpleFactor>> {
    let simple = subsystem_simple_roots(positive);
    let cm = cartan_matrix(&simple);
    let n = simple.len();
    let mut seen = vec![false; n];
    let mut factors = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && cm[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let factor = identify_component(&simple, &cm, &comp)?;
        let comp_roots: Vec<&Root> = comp.iter().map(|&i| &simple[i]).collect();
        let count = positive
            .iter()
            .filter(|r| {
                // A positive root belongs to the component iff it is
                // orthogonal to every simple root outside it.
                (0..n)
                    .filter(|i| !comp.contains(i))
                    .all(|i| r.dot(&simple[i]).is_zero())
                    && comp_roots.iter().any(|s| !r.dot(s).is_zero())
            })
            .count();
        let expected = factor.kind.positive_root_count(factor.rank);
        if count != expected {
            return Err(internal_err!(
                "component identified as {factor} has {count} positive roots, expected {expected}"
            ));
        }
        let sub: QMatrix = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| qi(cm[i][j])).collect())
            .collect();
        let det = determinant(&sub);
        let expected_det = match factor.kind {
            RootKind::A => qi(factor.rank as i64 + 1),
            RootKind::B | RootKind::C => qi(2),
            RootKind::D => qi(4),
            RootKind::E6 => qi(3),
            RootKind::E7 => qi(2),
        };
        if det != expected_det {
            return Err(internal_err!(
                "Cartan determinant {det} does not match {factor}"
            ));
        }
        factors.push(factor);
    }
    factors.sort();
    Ok(factors)
}

fn determinant(m: &QMatrix) -> Q {
    let mut a = m.clone();
    let n = a.len();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                let v = a[c][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

fn identify_component(simple: &[Root], cm: &[Vec<i64>], comp: &[usize]) -> Result<SimpleFactor> {
    use RootKind::*;
    let r = comp.len();
    let bond = |i: usize, j: usize| cm[i][j] * cm[j][i];
    let mut degree = vec![0usize; r];
    let mut max_bond = 0;
    let mut edges = 0;
    for (a, &i) in comp.iter().enumerate() {
        for (b, &j) in comp.iter().enumerate() {
            if a < b && cm[i][j] != 0 {
                degree[a] += 1;
                degree[b] += 1;
                edges += 1;
                max_bond = max_bond.max(bond(i, j));
            }
        }
    }
    if edges + 1 != r {
        return Err(internal_err!("Dynkin diagram of a component is not a tree"));
    }
    if r == 1 {
        return Ok(SimpleFactor::new(A, 1));
    }
    match max_bond {
        1 => {}
        2 => {
            if r == 2 {
                return Ok(SimpleFactor::new(B, 2));
            }
            let lengths: Vec<Q> = comp.iter().map(|&i| simple[i].norm2()).collect();
            let longest = *lengths.iter().max().unwrap();
            let long = lengths.iter().filter(|&&l| l == longest).count();
            return if long == r - 1 {
                Ok(SimpleFactor::new(B, r))
            } else if long == 1 {
                Ok(SimpleFactor::new(C, r))
            } else {
                Err(internal_err!(
                    "doubly-laced component of rank {r} is neither B nor C"
                ))
            };
        }
        b => return Err(internal_err!("bond of multiplicity {b} cannot occur here")),
    }
    let branch: Vec<usize> = (0..r).filter(|&a| degree[a] >= 3).collect();
    match branch.as_slice() {
        [] => Ok(SimpleFactor::new(A, r)),
        [center] if degree[*center] == 3 => {
            // Leg lengths from the branch node.
            let c = comp[*center];
            let mut legs: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&j| j != c && cm[c][j] != 0)
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (c, first, 1);
                    loop {
                        let next = comp
                            .iter()
                            .copied()
                            .find(|&k| k != prev && k != cur && cm[cur][k] != 0);
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, _] => Ok(SimpleFactor::new(D, r)),
                [1, 2, 2] => Ok(SimpleFactor::new(E6, 6)),
                [1, 2, 3] => Ok(SimpleFactor::new(E7, 7)),
                other => Err(internal_err!(
                    "unsupported branched diagram with legs {other:?}"
                )),
            }
        }
        _ => Err(internal_err!("Dynkin diagram with several branch nodes")),
    }
}

/// Identifies `k = t + sum of v_a over I_2(Z)`.
pub fn centralizer_type(rs: &RootSystem, z: &CartanVector) -> Result<CentralizerDescriptor> {
    let split = split_roots(rs, z)?;
    let factors = subsystem_type(&split.i2)?;
    let semisimple_rank: usize = subsystem_simple_roots(&split.i2).len();
    let center_dim = rs.rank() - semisimple_rank;
    Ok(CentralizerDescriptor {
        factors,
        center_dim,
        z_spans_center: center_dim == 1 && !z.is_zero(),
    })
}

/// One eigenvalue level `-lambda^2` of `L_Z^2` on `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumLevel {
    pub lambda: Q,
    /// Real dimension of the eigenspace; always even.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Ascending in `lambda`.
    pub entries: Vec<SpectrumLevel>,
    pub dim_m0: usize,
    /// The `ad(m_0)`-irreducible summands of `m`, as sets of positive roots.
    pub summands: Vec<Vec<Root>>,
}

pub fn eigen_spectrum(rs: &RootSystem, z: &CartanVector) -> Result<SpectrumReport> {
    let split = split_roots(rs, z)?;
    let mut levels: BTreeMap<Q, usize> = BTreeMap::new();
    for a in &split.i1 {
        *levels.entry(a.dot(z).abs()).or_default() += 2;
    }
    Ok(SpectrumReport {
        entries: levels
            .into_iter()
            .map(|(lambda, multiplicity)| SpectrumLevel {
                lambda,
                multiplicity,
            })
            .collect(),
        dim_m0: rs.rank() + 2 * split.i2.len(),
        summands: summands_of(&split),
    })
}

/// Connected components of `I_1` under `a ~ b` when `a - b` or `a + b` is in
/// `+-I_2`; the two cases are the root vectors of one complex weight space
/// being moved by a root vector of `k`, with the signs of `a` and `b`
/// normalised so that both pair positively with `Z`.
pub fn irreducible_summands(rs: &RootSystem, z: &CartanVector) -> Result<Vec<Vec<Root>>> {
    Ok(summands_of(&split_roots(rs, z)?))
}

fn summands_of(split: &RootSplit) -> Vec<Vec<Root>> {
    let k: HashSet<&Root> = split.i2.iter().collect();
    let in_k = |v: &Vector| k.contains(v) || k.contains(&-v);
    let n = split.i1.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (&split.i1[a], &split.i1[b]);
            if in_k(&(x - y)) || in_k(&(x + y)) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Root>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(split.i1[i].clone());
    }
    groups.into_values().collect()
}

/// The element `Z` with `<Z, pi_j> = 1` and `<Z, pi_i> = 0` for `i != j`,
/// for a non-compact simple root `pi_j` (0-based `j`). Every root of
/// `I_1(Z)` then pairs to exactly 1.
pub fn hermitian_generator(rs: &RootSystem, j: usize) -> Result<CartanVector> {
    if !rs.noncompact_simple_roots().contains(&j) {
        return Err(domain_err!(
            "simple root {} of {} is not non-compact (non-compact: {:?})",
            j + 1,
            rs.label(),
            rs.noncompact_simple_roots()
                .iter()
                .map(|i| i + 1)
                .collect::<Vec<_>>()
        ));
    }
    Ok(fundamental_coweight(rs, j))
}

/// `Z` in `t` with `<Z, pi_i> = delta_ij`.
pub fn fundamental_coweight(rs: &RootSystem, j: usize) -> CartanVector {
    let simple = rs.simple_roots();
    let gram: QMatrix = simple
        .iter()
        .map(|a| simple.iter().map(|b| a.dot(b)).collect())
        .collect();
    let mut rhs = vec![Q::zero(); rs.rank()];
    rhs[j] = Q::one();
    let coeffs = linalg::solve(&gram, &rhs).expect("Gram matrix of simple roots is invertible");
    rs.combine(&coeffs)
}

/// The Hermitian symmetric pairs `(g, k)` with `k` the centralizer of `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianCase {
    NotHermitian,
    /// `(su(p+q), su(p)+su(q)+R)`, `p >= q >= 1`.
    SuPq {
        p: usize,
        q: usize,
    },
    /// `(so(2n), su(n)+R)`.
    So2n {
        n: usize,
    },
    /// `(so(p+2), so(p)+R)`.
    SoP2 {
        p: usize,
    },
    /// `(sp(n), su(n)+R)`.
    SpN {
        n: usize,
    },
    /// `(e6, so(10)+R)`.
    ExcludedE6,
    /// `(e7, e6+R)`.
    ExcludedE7,
}

impl HermitianCase {
    /// Case number 1-4 of the classical list, if any.
    pub fn case_number(&self) -> Option<u8> {
        match self {
            HermitianCase::SuPq { .. } => Some(1),
            HermitianCase::So2n { .. } => Some(2),
            HermitianCase::SoP2 { .. } => Some(3),
            HermitianCase::SpN { .. } => Some(4),
            _ => None,
        }
    }

    /// Semisimple factors of `k` for this pair, canonically named.
    pub fn expected_factors(&self) -> Vec<SimpleFactor> {
        use RootKind::*;
        let mut f = match *self {
            HermitianCase::NotHermitian => vec![],
            HermitianCase::SuPq { p, q } => {
                let mut v = canonical_factors(A, p - 1);
                v.extend(canonical_factors(A, q - 1));
                v
            }
            HermitianCase::So2n { n } | HermitianCase::SpN { n } => canonical_factors(A, n - 1),
            HermitianCase::SoP2 { p } if p % 2 == 1 => canonical_factors(B, p / 2),
            HermitianCase::SoP2 { p } => canonical_factors(D, p / 2),
            HermitianCase::ExcludedE6 => vec![SimpleFactor::new(D, 5)],
            HermitianCase::ExcludedE7 => vec![SimpleFactor::new(E6, 6)],
        };
        f.sort();
        f
    }

    /// Below the ranges `n >= 5` (case 2) and `p >= 5` (case 3).
    pub fn below_threshold(&self) -> bool {
        match *self {
            HermitianCase::So2n { n } => n < 5,
            HermitianCase::SoP2 { p } => p < 5,
            _ => false,
        }
    }

    fn case_value(&self) -> Value {
        match self {
            HermitianCase::NotHermitian => json!("not-hermitian"),
            HermitianCase::ExcludedE6 => json!("excluded-e6"),
            HermitianCase::ExcludedE7 => json!("excluded-e7"),
            c => json!(c.case_number()),
        }
    }

    fn parameters(&self) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        match *self {
            HermitianCase::SuPq { p, q } => {
                m.insert("p".into(), json!(p));
                m.insert("q".into(), json!(q));
            }
            HermitianCase::So2n { n } | HermitianCase::SpN { n } => {
                m.insert("n".into(), json!(n));
            }
            HermitianCase::SoP2 { p } => {
                m.insert("p".into(), json!(p));
            }
            _ => {}
        }
        m
    }
}

impl fmt::Display for HermitianCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianCase::NotHermitian => write!(f, "not Hermitian"),
            // su(1) = 0 is dropped.
            HermitianCase::SuPq { p: 1, q: 1 } => write!(f, "(su(2), R)"),
            HermitianCase::SuPq { p, q: 1 } => write!(f, "(su({}), su({p})+R)", p + 1),
            HermitianCase::SuPq { p, q } => write!(f, "(su({}), su({p})+su({q})+R)", p + q),
            HermitianCase::So2n { n } => write!(f, "(so({}), su({n})+R)", 2 * n),
            HermitianCase::SoP2 { p } => write!(f, "(so({}), so({p})+R)", p + 2),
            HermitianCase::SpN { n } => write!(f, "(sp({n}), su({n})+R)"),
            HermitianCase::ExcludedE6 => write!(f, "(e6, so(10)+R), excluded"),
            HermitianCase::ExcludedE7 => write!(f, "(e7, e6+R), excluded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub case: HermitianCase,
    /// Set for case 2 with `n < 5` and case 3 with `p < 5`.
    pub below_threshold: bool,
    /// The non-compact simple root (0-based) singled out by the dominant
    /// representative of `Z`, when Hermitian.
    pub noncompact_root: Option<usize>,
    pub descriptor: CentralizerDescriptor,
    pub spectrum: SpectrumReport,
}

/// Exact rational as a JSON number when integral, `"p/q"` otherwise.
pub fn rational_json(x: &Q) -> Value {
    if x.is_integer() {
        json!(x.to_integer())
    } else {
        json!(x.to_string())
    }
}

impl SpectrumReport {
    pub fn levels_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|l| json!({"lambda": rational_json(&l.lambda), "mult": l.multiplicity}))
                .collect(),
        )
    }
}

impl Classification {
    /// `{case, parameters, <parameters inlined>, factors, center_dim,
    /// spectrum, below_threshold_flag, ...}`.
    pub fn to_json(&self) -> Value {
        let params = self.case.parameters();
        let mut obj = serde_json::Map::new();
        obj.insert("case".into(), self.case.case_value());
        obj.insert("pair".into(), json!(self.case.to_string()));
        for (k, v) in &params {
            obj.insert(k.clone(), v.clone());
        }
        obj.insert("parameters".into(), Value::Object(params));
        obj.insert("factors".into(), json!(self.descriptor.factors));
        obj.insert("center_dim".into(), json!(self.descriptor.center_dim));
        obj.insert(
            "z_spans_center".into(),
            json!(self.descriptor.z_spans_center),
        );
        obj.insert("spectrum".into(), self.spectrum.levels_json());
        obj.insert("below_threshold_flag".into(), json!(self.below_threshold));
        obj.insert(
            "noncompact_root".into(),
            json!(self.noncompact_root.map(|j| j + 1)),
        );
        Value::Object(obj)
    }
}

/// Decides whether `(g, centralizer of Z)` is a Hermitian symmetric pair and
/// which one.
///
/// Hermitian means `L_Z^2` has a single level on `m` and `Z` spans the center
/// of `k`. This is cross-checked against the root criterion: after moving `Z`
/// into the chamber, exactly one simple root pairs nontrivially with it, and
/// that root is non-compact.
pub fn classify_hermitian_pair(rs: &RootSystem, z: &CartanVector) -> Result<Classification> {
    let spectrum = eigen_spectrum(rs, z)?;
    let descriptor = centralizer_type(rs, z)?;
    let by_spectrum = spectrum.entries.len() == 1 && descriptor.z_spans_center;

    let dominant = weyl::dominant_representative(rs, z)?;
    let touching: Vec<usize> = (0..rs.rank())
        .filter(|&i| !rs.simple_roots()[i].dot(&dominant).is_zero())
        .collect();
    let noncompact = rs.noncompact_simple_roots();
    let by_roots = touching.len() == 1 && noncompact.contains(&touching[0]);
    if by_spectrum != by_roots {
        return Err(internal_err!(
            "spectral and root criteria disagree for Z = {z} in {}",
            rs.label()
        ));
    }
    if !by_spectrum {
        return Ok(Classification {
            case: HermitianCase::NotHermitian,
            below_threshold: false,
            noncompact_root: None,
            descriptor,
            spectrum,
        });
    }
    let j = touching[0];
    let lambda = spectrum.entries[0].lambda;
    if rs.highest_root().dot(&dominant) != lambda {
        return Err(internal_err!(
            "<Z, a_max> differs from the single eigenvalue level"
        ));
    }
    let l = rs.rank();
    let case = match rs.kind() {
        RootKind::A => {
            let p = j + 1;
            let q = l + 1 - p;
            HermitianCase::SuPq {
                p: p.max(q),
                q: p.min(q),
            }
        }
        RootKind::B => HermitianCase::SoP2 { p: 2 * l - 1 },
        RootKind::C => HermitianCase::SpN { n: l },
        RootKind::D if j == 0 => HermitianCase::SoP2 { p: 2 * l - 2 },
        RootKind::D => HermitianCase::So2n { n: l },
        RootKind::E6 => HermitianCase::ExcludedE6,
        RootKind::E7 => HermitianCase::ExcludedE7,
    };
    Ok(Classification {
        case,
        below_threshold: case.below_threshold(),
        noncompact_root: Some(j),
        descriptor,
        spectrum,
    })
}

/// Orthonormal commuting Cartan vectors `U_i = e_i` and `c > 0` with
/// `Z = c * sum U_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingUnits {
    pub units: Vec<CartanVector>,
    pub scale: Q,
}

/// Decomposes the Hermitian generator of `so(2n)` (root `pi_n`) or `sp(n)`
/// into `n` pairwise orthogonal unit Cartan vectors.
pub fn commuting_unit_decomposition(rs: &RootSystem, z: &CartanVector) -> Result<CommutingUnits> {
    if !matches!(rs.kind(), RootKind::C | RootKind::D) {
        return Err(domain_err!(
            "commuting unit decomposition applies to so(2n) and sp(n), not {}",
            rs.label()
        ));
    }
    rs.check_cartan(z)?;
    let c = z[0];
    if !c.is_positive() || z.iter().any(|x| *x != c) {
        return Err(domain_err!(
            "{z} is not a positive multiple of e_1 + ... + e_n in {}",
            rs.label()
        ));
    }
    let n = rs.ambient_dim();
    Ok(CommutingUnits {
        units: (0..n).map(|i| Vector::unit(n, i)).collect(),
        scale: c,
    })
}
