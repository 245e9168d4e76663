//! Root systems of A_l, B_l, C_l, D_l, e6 and e7 in their standard ambient
//! coordinates.
//!
//! Coordinates follow the usual Bourbaki realization: `t` is a subspace of
//! `R^n` with orthonormal basis `e_1, ..., e_n`, cut out by
//! [`RootSystem::cartan_constraints`] when it is proper (A_l, e6, e7). The
//! inner product on `t` is the ambient dot product.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain_err, internal_err, param_err, Error, Result};
use crate::linalg::{self, QMatrix};
use crate::rational::{q, qi, Vector, Q};

/// A root, as a vector in the ambient coordinate space.
pub type Root = Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl RootKind {
    /// Smallest rank accepted by [`RootSystem::build`].
    pub fn min_rank(self) -> usize {
        match self {
            RootKind::A => 1,
            RootKind::B | RootKind::C => 2,
            RootKind::D => 3,
            RootKind::E6 => 6,
            RootKind::E7 => 7,
        }
    }

    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            RootKind::A => rank + 1,
            RootKind::B | RootKind::C | RootKind::D => rank,
            RootKind::E6 | RootKind::E7 => 8,
        }
    }

    /// `A3`, `D5`, `E6`, ...
    pub fn label(self, rank: usize) -> String {
        match self {
            RootKind::E6 => "E6".into(),
            RootKind::E7 => "E7".into(),
            k => format!("{k:?}{rank}"),
        }
    }

    /// Number of positive roots, by closed form.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let l = rank;
        match self {
            RootKind::A => l * (l + 1) / 2,
            RootKind::B | RootKind::C => l * l,
            RootKind::D => l * (l - 1),
            RootKind::E6 => 36,
            RootKind::E7 => 63,
        }
    }
}

/// Parses `A3`, `b2`, `E7`, or the classical names `su4`, `so(10)`, `sp3`,
/// `e6` into a kind and rank.
pub fn parse_algebra(s: &str) -> Result<(RootKind, usize)> {
    let t: String = s
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | '_' | ' '))
        .collect::<String>()
        .to_ascii_lowercase();
    let bad = || {
        param_err!(
            "unsupported algebra {s:?}; expected e.g. A3, B2, C3, D5, E6, E7, su4, so10, sp2"
        )
    };
    let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
    let (kind, rank) = if let Some(rest) = t.strip_prefix("su") {
        (RootKind::A, num(rest)?.checked_sub(1).ok_or_else(bad)?)
    } else if let Some(rest) = t.strip_prefix("so") {
        let n = num(rest)?;
        if n % 2 == 1 {
            (RootKind::B, n / 2)
        } else {
            (RootKind::D, n / 2)
        }
    } else if let Some(rest) = t.strip_prefix("sp") {
        (RootKind::C, num(rest)?)
    } else if t == "e6" {
        (RootKind::E6, 6)
    } else if t == "e7" {
        (RootKind::E7, 7)
    } else {
        let (head, rest) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let kind = match head {
            "a" => RootKind::A,
            "b" => RootKind::B,
            "c" => RootKind::C,
            "d" => RootKind::D,
            _ => return Err(bad()),
        };
        (kind, num(rest)?)
    };
    Ok((kind, rank))
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_algebra(s).map(|(k, _)| k)
    }
}

/// The root data of one simple Lie algebra.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Root>,
    /// Sorted lexicographically on coordinates.
    positive_roots: Vec<Root>,
    /// Normals `n` with `n . x = 0` on `t`.
    cartan_constraints: Vec<Vector>,
    #[serde(skip)]
    gram_inverse: QMatrix,
    #[serde(skip)]
    positive_index: HashMap<Root, usize>,
    #[serde(skip)]
    highest: usize,
}

impl RootSystem {
    /// Builds the root system of the given kind and rank.
    pub fn build(kind: RootKind, rank: usize) -> Result<RootSystem> {
        let ok = match kind {
            RootKind::E6 => rank == 6,
            RootKind::E7 => rank == 7,
            _ => rank >= kind.min_rank(),
        };
        if !ok {
            let range = match kind {
                RootKind::E6 => "rank must be 6".to_string(),
                RootKind::E7 => "rank must be 7".to_string(),
                k => format!("rank must be >= {}", k.min_rank()),
            };
            return Err(param_err!("{kind:?} with rank {rank} unsupported: {range}"));
        }
        let rs = Self::build_unchecked(kind, rank)?;
        rs.check_highest_root()?;
        Ok(rs)
    }

    /// Builds without the rank-range check. Used for the low-rank matrix
    /// algebras so(3), so(4), sp(1) (B_1, D_2, C_1), whose root data still
    /// follow the general formulas.
    pub(crate) fn build_unchecked(kind: RootKind, rank: usize) -> Result<RootSystem> {
        if rank == 0 {
            return Err(param_err!("rank must be positive"));
        }
        let n = kind.ambient_dim(rank);
        let e = |i: usize| Vector::unit(n, i);
        let half = q(1, 2);
        let mut all: Vec<Root> = Vec::new();
        let pm_pairs = |all: &mut Vec<Root>, upto: usize| {
            for i in 0..upto {
                for j in i + 1..upto {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        all.push(e(i).scale(qi(si)).add_scaled(qi(sj), &e(j)));
                    }
                }
            }
        };
        let simple: Vec<Root>;
        let mut constraints = Vec::new();
        match kind {
            RootKind::A => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            all.push(&e(i) - &e(j));
                        }
                    }
                }
                simple = (0..rank).map(|i| &e(i) - &e(i + 1)).collect();
                constraints.push(Vector::from_ints(&vec![1; n]));
            }
            RootKind::B | RootKind::C | RootKind::D => {
                pm_pairs(&mut all, n);
                let short = match kind {
                    RootKind::B => Some(qi(1)),
                    RootKind::C => Some(qi(2)),
                    _ => None,
                };
                if let Some(c) = short {
                    for i in 0..n {
                        all.push(e(i).scale(c));
                        all.push(e(i).scale(-c));
                    }
                }
                let mut s: Vec<Root> = (0..rank.saturating_sub(1))
                    .map(|i| &e(i) - &e(i + 1))
                    .collect();
                s.push(match kind {
                    RootKind::B => e(n - 1),
                    RootKind::C => e(n - 1).scale(qi(2)),
                    _ if rank >= 2 => &e(n - 2) + &e(n - 1),
                    _ => return Err(param_err!("D_1 is not a root system")),
                });
                simple = s;
            }
            RootKind::E6 | RootKind::E7 => {
                let (free, parity) = if kind == RootKind::E6 { (5, 0) } else { (6, 1) };
                pm_pairs(&mut all, free);
                // Fixed part of the half-integral roots: e8-e7-e6 (e6) or e7-e8 (e7).
                let tail = if kind == RootKind::E6 {
                    Vector::from_ints(&[0, 0, 0, 0, 0, -1, -1, 1])
                } else {
                    let d = &e(6) - &e(7);
                    all.push(d.clone());
                    all.push(-&d);
                    d
                };
                for mask in 0u32..(1 << free) {
                    if mask.count_ones() % 2 != parity {
                        continue;
                    }
                    let mut v = tail.clone();
                    for i in 0..free {
                        let sign = if mask & (1 << i) != 0 { -1 } else { 1 };
                        v = v.add_scaled(qi(sign), &e(i));
                    }
                    let v = v.scale(half);
                    all.push(-&v);
                    all.push(v);
                }
                let mut pi1 = (&e(0) + &e(7)).scale(half);
                for i in 1..7 {
                    pi1 = pi1.add_scaled(-half, &e(i));
                }
                let mut s = vec![pi1, &e(0) + &e(1)];
                for i in 3..=rank {
                    s.push(&e(i - 2) - &e(i - 3));
                }
                simple = s;
                if kind == RootKind::E6 {
                    constraints.push(&e(5) - &e(6));
                    constraints.push(&e(6) + &e(7));
                } else {
                    constraints.push(&e(6) + &e(7));
                }
            }
        }

        let gram: QMatrix = simple
            .iter()
            .map(|a| simple.iter().map(|b| a.dot(b)).collect())
            .collect();
        let gram_inverse = linalg::invert(&gram)
            .ok_or_else(|| internal_err!("simple roots of {kind:?}{rank} are dependent"))?;

        let mut rs = RootSystem {
            kind,
            rank,
            ambient_dim: n,
            simple_roots: simple,
            positive_roots: Vec::new(),
            cartan_constraints: constraints,
            gram_inverse,
            positive_index: HashMap::new(),
            highest: 0,
        };

        for s in &rs.simple_roots {
            if !rs.satisfies_constraints(s) {
                return Err(internal_err!(
                    "simple root {s} violates the constraints of t"
                ));
            }
        }
        let mut positive = Vec::with_capacity(all.len() / 2);
        for root in all {
            if !rs.satisfies_constraints(&root) {
                return Err(internal_err!("root {root} violates the constraints of t"));
            }
            let coeffs = rs.coefficients(&root);
            let reconstructed = rs.combine(&coeffs);
            if reconstructed != root {
                return Err(internal_err!(
                    "root {root} is outside the span of the simple roots"
                ));
            }
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(internal_err!(
                    "root {root} has non-integral simple-root coefficients"
                ));
            }
            let nonneg = coeffs.iter().all(|c| !c.is_negative());
            let nonpos = coeffs.iter().all(|c| !c.is_positive());
            match (nonneg, nonpos) {
                (true, false) => positive.push(root),
                (false, true) => {}
                _ => return Err(internal_err!("root {root} has mixed-sign coefficients")),
            }
        }
        positive.sort();
        positive.dedup();
        rs.positive_index = positive
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        rs.positive_roots = positive;
        rs.highest = (0..rs.positive_roots.len())
            .max_by_key(|&i| rs.height(&rs.positive_roots[i]))
            .ok_or_else(|| internal_err!("empty root system"))?;
        Ok(rs)
    }

    fn check_highest_root(&self) -> Result<()> {
        let top = self.highest_root();
        for alpha in &self.positive_roots {
            let diff = self.coefficients(&(top - alpha));
            if diff.iter().any(Signed::is_negative) {
                return Err(internal_err!("{top} is not maximal over {alpha}"));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn label(&self) -> String {
        self.kind.label(self.rank)
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// All roots, positive ones first, then their negatives in the same order.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| -r))
    }

    pub fn cartan_constraints(&self) -> &[Vector] {
        &self.cartan_constraints
    }

    /// Dimension of the compact real form: rank + 2 |positive roots|.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    pub fn is_positive_root(&self, v: &Vector) -> bool {
        self.positive_index.contains_key(v)
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&-v)
    }

    /// Index of a positive root in [`RootSystem::positive_roots`].
    pub fn positive_root_index(&self, v: &Vector) -> Option<usize> {
        self.positive_index.get(v).copied()
    }

    pub fn satisfies_constraints(&self, v: &Vector) -> bool {
        v.dim() == self.ambient_dim && self.cartan_constraints.iter().all(|c| c.dot(v).is_zero())
    }

    /// Checks that `v` lies in `t`, reporting the exact residuals on failure.
    pub fn check_cartan(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(param_err!(
                "{} expects {} ambient coordinates, got {}",
                self.label(),
                self.ambient_dim,
                v.dim()
            ));
        }
        let residuals: Vec<String> = self
            .cartan_constraints
            .iter()
            .filter_map(|c| {
                let r = c.dot(v);
                (!r.is_zero()).then(|| format!("{c} . x = {r}"))
            })
            .collect();
        if residuals.is_empty() {
            Ok(())
        } else {
            Err(param_err!(
                "vector {v} is not in the Cartan subalgebra of {}: {}",
                self.label(),
                residuals.join(", ")
            ))
        }
    }

    /// Coefficients of `v` in the simple-root basis (exact, any vector of `t`).
    pub fn coefficients(&self, v: &Vector) -> Vec<Q> {
        let pairings: Vec<Q> = self.simple_roots.iter().map(|s| s.dot(v)).collect();
        linalg::mat_vec(&self.gram_inverse, &pairings)
    }

    /// `sum_i c_i pi_i`.
    pub fn combine(&self, coeffs: &[Q]) -> Vector {
        coeffs
            .iter()
            .zip(&self.simple_roots)
            .fold(Vector::zeros(self.ambient_dim), |acc, (c, s)| {
                acc.add_scaled(*c, s)
            })
    }

    fn height(&self, v: &Vector) -> Q {
        self.coefficients(v).into_iter().sum()
    }

    /// The maximal root.
    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest]
    }

    /// Nonnegative integer coefficients of a positive root over the simple roots.
    pub fn simple_root_coefficients(&self, alpha: &Root) -> Result<Vec<i64>> {
        if !self.is_positive_root(alpha) {
            return Err(domain_err!(
                "{alpha} is not a positive root of {}",
                self.label()
            ));
        }
        Ok(self
            .coefficients(alpha)
            .iter()
            .map(|c| c.to_integer())
            .collect())
    }

    /// Indices (0-based) of the simple roots whose coefficient in the maximal
    /// root is 1.
    pub fn noncompact_simple_roots(&self) -> Vec<usize> {
        self.coefficients(self.highest_root())
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_one())
            .map(|(i, _)| i)
            .collect()
    }

    /// Same set as [`RootSystem::noncompact_simple_roots`], computed from the
    /// defining property instead: every root has coefficient -1, 0 or 1 at
    /// `pi_j`.
    pub fn noncompact_by_enumeration(&self) -> Vec<usize> {
        let coeffs: Vec<Vec<Q>> = self
            .positive_roots
            .iter()
            .map(|r| self.coefficients(r))
            .collect();
        (0..self.rank)
            .filter(|&j| coeffs.iter().all(|c| c[j] <= Q::one()))
            .collect()
    }

    /// Distinct squared root lengths, ascending.
    pub fn root_lengths(&self) -> Vec<Q> {
        let mut l: Vec<Q> = self.positive_roots.iter().map(Vector::norm2).collect();
        l.sort();
        l.dedup();
        l
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}
