//! Serre's regularity condition R_l for affine semigroup rings `K[S]`.
//!
//! The general checker works from a list of semigroup generators: it computes
//! the facets of the positive cone exactly, enumerates faces by codimension,
//! and for each face tests the facet count, the lattice equality
//! `grp(S ∩ F) = grp(S) ∩ H_1 ∩ … ∩ H_k`, and the existence of elements
//! `γ_j ∈ S` with `σ_i(γ_j) = δ_ij`.
//!
//! The [`rees`] module specialises to Rees algebras of the integrally closed
//! monomial ideals `I(λ)`, where the same question reduces to membership in
//! numerical semigroups.
//!
//! All arithmetic is exact over arbitrary-precision integers.

pub mod cli;
pub mod cone;
pub mod error;
pub mod exactlin;
pub mod rees;
pub mod semigroup;
pub mod serre;

pub use cone::{cone_from_generators, Cone, Face};
pub use error::{Error, Result};
pub use exactlin::{
    hnf, kernel_basis, lattice_equal, lattice_member, primitive, Int, IntMat, IntVec, LatticeBasis,
    PrimitiveForm,
};
pub use rees::{
    bounded_normality_scan, check_rn, check_rn_minus_1, corollary_check_r, degree2_decompose,
    ideal_min_gens, lambda_spec, numsgp_contains, probe_point, rees_semigroup, LambdaSpec,
    NumericalSgp,
};
pub use semigroup::{new_semigroup, AffineSemigroup};
pub use serre::{
    check_face, check_r, find_gammas, FaceStatus, FaceVerdict, FailReason, SerreReport, Verdict,
};
