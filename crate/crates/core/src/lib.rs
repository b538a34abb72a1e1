//! Exact-arithmetic invariants for links, plumbed homology spheres, and
//! finite equivariant CW complexes.
//!
//! The crate is organized bottom-up:
//!
//! - [`rat`]: exact rationals and their `"p/q"` wire format.
//! - [`f2`]: dense linear algebra over the two-element field.
//! - [`forms`]: integer symmetric bilinear forms (signature, determinant,
//!   characteristic vectors).
//! - [`links`]: symbolic link descriptors with two independent computation
//!   paths for signature and determinant.
//! - [`plumbing`]: star-shaped plumbings of Seifert homology spheres, Wu
//!   classes, and the mu-bar invariant.
//! - [`cw`]: pointed G-CW complexes for G = Z2, Z4 over F2, their Borel
//!   cohomology, and the invariants d, dbar, dunder.
//! - [`froyshov`]: the delta invariant triple on supported link families.
//! - [`cobordism`]: branched double cover homology and the inequality
//!   evaluators for surface cobordisms and closed manifolds.
//! - [`surfaces`]: classification of (normal Euler number, first Betti
//!   number) pairs for non-orientable surfaces bounded by a knot.

pub mod cobordism;
pub mod cw;
pub mod f2;
pub mod forms;
pub mod froyshov;
pub mod links;
pub mod plumbing;
pub mod rat;
pub mod surfaces;

pub use cobordism::{
    branched_homology, check_closed, check_ineq1, check_ineq2_and_theorem_b, unoriented_bound,
    BranchedCoverHomology, SurfaceCobordismData,
};
pub use cw::{
    borel_cohomology, d_invariant, dbar_dunder, local_map_height_check, restrict_to_h, smash,
    spectrum_invariants, suspend, BorelCohomology, GCWComplex, Group, Representation,
    SpectrumClass, SpectrumInvariants,
};
pub use forms::{
    characteristic_solutions_mod2, determinant, positive_index, signature, IntSymForm,
};
pub use froyshov::{delta_triple, kappa_checks, spherical_delta, DeltaTriple, KappaValue};
pub use links::{classical_invariants, link_determinant, link_signature, ClassicalInvariants, LinkDesc};
pub use plumbing::{canonical_plumbing, mubar, wu_class, PlumbingGraph, SeifertData};
pub use rat::Rat;
pub use surfaces::{classify_pairs, mo_delta_known_zero, PairRegion, PairStatus, Window};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// The input violates a documented invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// The requested value is not computable from the given presentation.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
