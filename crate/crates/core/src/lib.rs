//! A workbench for finite models of partial computation.
//!
//! The crate builds small categories whose maps are partial — finite sets
//! with partial functions, the opposite of finite Boolean rings with
//! non-unital morphisms, and Kleisli categories of the exception monad — and
//! checks the equational theory that relates them: restriction axioms, joins
//! and relative complements, the `A + B + (A * B)` product, idempotent
//! splittings, decisions, and the classifier factorization. Every universal
//! property is also verified by brute-force hom-set enumeration, so the
//! categorical constructions and the pointwise definitions act as independent
//! oracles for each other.

pub mod calg;
pub mod classical;
pub mod error;
pub mod finpar;
pub mod kleisli;
pub mod mutation;
pub mod oracle;
pub mod rescat;
pub mod splitting;
pub mod suites;

pub use error::Error;
pub use finpar::{Construction, Elem, FinParModel, FinSet, PartialMap};
pub use rescat::{Budget, LawReport, LawStatus, Model};
