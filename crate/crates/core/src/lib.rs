//! Exact computations on compact simple Lie algebras of types A-D, E6 and E7:
//! root systems, Weyl group orbits, centralizers of Cartan elements, the
//! classification of Hermitian symmetric pairs, matrix realisations of
//! `su(n)`, `so(n)`, `sp(n)`, and sampled checks of Killing fields on spheres.
//!
//! Indices of simple roots are 0-based throughout the library.

pub mod centralizer;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod matrix_lie;
pub mod rational;
pub mod root_systems;
pub mod weyl;

pub use centralizer::{
    centralizer_type, classify_hermitian_pair, commuting_unit_decomposition, eigen_spectrum,
    hermitian_generator, irreducible_summands, is_regular, split_roots, CentralizerDescriptor,
    Classification, CommutingUnits, HermitianCase, RootSplit, SimpleFactor, SpectrumLevel,
    SpectrumReport,
};
pub use error::{Error, Result};
pub use geometry::{
    is_constant_length, pointwise_metric, verify_lemma_le8, verify_orthogonality, verify_pr3,
    ConstantLength, SampleReport, SphereField, SphereFixture,
};
pub use matrix_lie::{
    ad_squared_eigenspaces, bracket, build_algebra_basis, invariant_form, AlgebraElement,
    AlgebraKind, RootBasis,
};
pub use rational::{Vector, Q};
pub use root_systems::{parse_algebra, Root, RootKind, RootSystem};
pub use weyl::{dominant_representative, is_dominant, reflect, weyl_orbit, CartanVector};
