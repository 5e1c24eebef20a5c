//! Braid group algorithms: Garside normal forms, conjugacy, representations,
//! knot polynomials and closed-braid diagrams.

pub mod conjugacy;
pub mod diagram;
pub mod dual;
pub mod error;
pub mod garside;
pub mod hecke;
pub mod laurent;
pub mod ordering;
pub mod perm;
pub mod representations;
pub mod selftest;
pub mod simple;
pub mod stats;
pub mod word;

pub use error::{Error, Result};
pub use garside::NormalForm;
pub use perm::Permutation;
pub use word::BraidWord;
