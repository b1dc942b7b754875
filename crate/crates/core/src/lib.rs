//! Exact-arithmetic toolkit for the linear ordering polytope `P_n`: its
//! invariant-subspace decomposition inside `R^{S_n}`, the two equivariant
//! orthogonal projections (onto the permutahedron and onto `P_{n−1}`),
//! brute-force representation-theoretic certificates, and facet enumeration.

pub mod error;
pub mod exactlin;
pub mod facets;
pub mod funcspace;
pub mod polytope;
pub mod repdecomp;
pub mod report;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational};
pub use facets::{FacetClass, HRepresentation, Inequality};
pub use funcspace::{GroupFunction, PairIndex, Symmetry};
pub use polytope::{Basis, VertexSet};
pub use report::{CheckReport, CheckStatus};
pub use symgroup::Permutation;
