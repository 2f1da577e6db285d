//! Second cohomology of finite Lie rings with trivial coefficients.
//!
//! The crate computes `Z²(L,A)`, `B²(L,A)` and `H²(L,A)` from explicit
//! cocycle conditions, realizes the correspondence between cohomology
//! classes and central extensions, evaluates the maps of the five-term exact
//! sequence for a central ideal, and approximates the Schur multiplier
//! `M(L) ≅ H²(L, C*)` through finite cyclic coefficients.
//!
//! All arithmetic is exact. Finite abelian groups are handled over `Z/N`
//! with Howell forms; the integer Smith normal form in [`snf`] is used for
//! invariant factors.

pub mod abgroup;
pub mod arith;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod fiveterm;
pub mod liering;
pub mod par;
pub mod schur;
pub mod snf;
pub mod zmod;

pub use abgroup::{AbHom, FinAbGroup, GroupElement, Subgroup};
pub use cohomology::{Cocycle, H2Group, Limits};
pub use error::{Error, Result};
pub use extensions::CentralExtension;
pub use liering::{LieHom, LieIdeal, LieRing};
