//! Workbench for disjunctive identities (UDEs) of finite groups and
//! identities of regular representations over prime fields.
//!
//! The crate builds finite groups of small order, decides whether a
//! universal disjunction of equations holds in a group by pruned search,
//! verifies the bundled basis claims, and checks the corresponding
//! group-algebra identities.

pub mod error;
pub mod perm;
pub mod word;
pub mod group;
pub mod construct;
pub mod formula;
pub mod search;
pub mod report;
pub mod catalog;
pub mod repalg;
pub mod basis;

pub use error::{Error, ParseError, Result};
pub use group::{FiniteGroup, IsoWitness, Subgroup};
pub use perm::Perm;
pub use word::Word;
