//! Finite subresiduated lattices and subresiduated Nelson algebras:
//! construction from tables, exhaustive axiom checking, twist
//! representations, congruences via filters, and the variety generated by
//! chains.

pub mod algebra;
pub mod centered;
pub mod congruence;
pub mod corpus;
pub mod elemset;
pub mod lattice;
pub mod par;
pub mod partition;
pub mod residuation;
pub mod signature;
pub mod srl;
pub mod twist;
pub mod varieties;
pub mod verdict;

pub use algebra::SnaAlgebra;
pub use elemset::{Elem, ElemSet};
pub use lattice::{build_lattice, FiniteLattice};
pub use partition::Partition;
pub use signature::FiniteAlgebra;
pub use srl::{make_srl, Srl};
pub use verdict::{CheckMode, Verdict};
