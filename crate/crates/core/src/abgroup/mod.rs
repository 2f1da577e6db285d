//! Finite abelian groups, their elements, subgroups, homomorphisms and
//! quotients.

mod group;
mod hom;
mod subgroup;

pub use group::{FinAbGroup, GroupElement};
pub use hom::{hom_group, AbHom, HomGroup, PreimageSolver};
pub use subgroup::{killed_by, quotient, solve_congruences, Combiner, Subgroup, SubgroupQuotient};
