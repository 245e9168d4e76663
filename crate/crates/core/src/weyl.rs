//! Weyl group action on `t`: reflections, orbits, dominant representatives.

use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{internal_err, Error, Result};
use crate::rational::{qi, Vector};
use crate::root_systems::{Root, RootKind, RootSystem};

/// An element of the Cartan subalgebra in ambient coordinates.
pub type CartanVector = Vector;

/// Default cap on enumerated orbit sizes.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// `H - 2 <H,a>/<a,a> a`.
pub fn reflect(alpha: &Root, h: &CartanVector) -> CartanVector {
    let c = qi(2) * h.dot(alpha) / alpha.norm2();
    h.add_scaled(-c, alpha)
}

/// Reflection in the simple root `pi_i` (0-based).
pub fn simple_reflection(rs: &RootSystem, i: usize, h: &CartanVector) -> CartanVector {
    reflect(&rs.simple_roots()[i], h)
}

/// Full W-orbit of `h`, closed under simple reflections, sorted
/// lexicographically.
pub fn weyl_orbit(rs: &RootSystem, h: &CartanVector) -> Result<Vec<CartanVector>> {
    weyl_orbit_capped(rs, h, DEFAULT_ORBIT_CAP)
}

pub fn weyl_orbit_capped(
    rs: &RootSystem,
    h: &CartanVector,
    cap: usize,
) -> Result<Vec<CartanVector>> {
    rs.check_cartan(h)?;
    let mut seen: HashSet<CartanVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(h.clone());
    queue.push_back(h.clone());
    while let Some(x) = queue.pop_front() {
        for s in rs.simple_roots() {
            // Reflections fix vectors orthogonal to the root; skip the hash.
            if s.dot(&x).is_zero() {
                continue;
            }
            let y = reflect(s, &x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::Resource(format!(
                        "W-orbit of {h} in {} exceeds the cap of {cap} elements",
                        rs.label()
                    )));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut orbit: Vec<_> = seen.into_iter().collect();
    orbit.sort();
    Ok(orbit)
}

/// Whether `h` lies in the closed Weyl chamber of the positive roots.
pub fn is_dominant(rs: &RootSystem, h: &CartanVector) -> bool {
    rs.simple_roots().iter().all(|s| !s.dot(h).is_negative())
}

fn negative_pairings(rs: &RootSystem, h: &CartanVector) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|a| a.dot(h).is_negative())
        .count()
}

/// The unique point of the W-orbit of `h` in the closed chamber.
///
/// Reflecting in a simple root with negative pairing lowers the number of
/// positive roots pairing negatively with `h` by exactly one, so the loop runs
/// at most `|positive roots|` times.
pub fn dominant_representative(rs: &RootSystem, h: &CartanVector) -> Result<CartanVector> {
    rs.check_cartan(h)?;
    let mut x = h.clone();
    let mut count = negative_pairings(rs, &x);
    loop {
        let Some(i) = rs
            .simple_roots()
            .iter()
            .position(|s| s.dot(&x).is_negative())
        else {
            return Ok(x);
        };
        x = simple_reflection(rs, i, &x);
        let next = negative_pairings(rs, &x);
        if next + 1 != count {
            return Err(internal_err!(
                "negative-pairing count went from {count} to {next} while reducing {h}"
            ));
        }
        count = next;
    }
}

/// Half the sum of the positive roots.
pub fn rho(rs: &RootSystem) -> CartanVector {
    rs.positive_roots()
        .iter()
        .fold(Vector::zeros(rs.ambient_dim()), |acc, a| &acc + a)
        .scale(crate::rational::q(1, 2))
}

/// Whether `-Id` belongs to the Weyl group.
///
/// For dominant regular `x`, the dominant representative of `-x` is `-w0 x`.
/// Taking `x` with distinct pairings against the simple roots makes it
/// generic for diagram automorphisms as well, so `-w0 = Id` exactly when
/// `-x` reduces to `x`. (`rho` itself would not do: it is fixed by `-w0`.)
pub fn contains_minus_identity(rs: &RootSystem) -> Result<bool> {
    let coeffs: Vec<_> = (1..=rs.rank() as i64).map(qi).collect();
    let x = coweight_combination(rs, &coeffs);
    Ok(dominant_representative(rs, &-&x)? == x)
}

/// `x` in `t` with `<x, pi_i> = coeffs[i]`.
fn coweight_combination(rs: &RootSystem, coeffs: &[crate::rational::Q]) -> CartanVector {
    let simple = rs.simple_roots();
    let gram: Vec<Vec<_>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| a.dot(b)).collect())
        .collect();
    let c = crate::linalg::solve(&gram, coeffs).expect("Gram matrix of simple roots is invertible");
    rs.combine(&c)
}

/// The classification of simple algebras whose Weyl group lacks `-Id`:
/// A_l for l >= 2, D_l for odd l, and e6.
pub fn minus_identity_by_classification(kind: RootKind, rank: usize) -> bool {
    match kind {
        RootKind::A => rank == 1,
        RootKind::D => rank.is_multiple_of(2),
        RootKind::E6 => false,
        RootKind::B | RootKind::C | RootKind::E7 => true,
    }
}
